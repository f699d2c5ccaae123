#pragma once

#include <string>

#include <json.hpp>

#include "commands.hpp"
#include "opcalc/types.hpp"

namespace opcalc::cli {

using Json = nlohmann::ordered_json;

Json matrix_json(const Matrix& m);

/// Writes `body` to <out_dir>/<stem>.<ext>, or to stdout when no directory was
/// given. Throws IoError when the file cannot be written.
void emit(const GlobalOptions& global, const std::string& stem, const std::string& ext, const std::string& body);

/// JSON reports honour --format csv by flattening scalar fields to key,value rows.
void emit_report(const GlobalOptions& global, const std::string& stem, const Json& report);

}  // namespace opcalc::cli
