#pragma once

#include <filesystem>
#include <string>

#include "opcalc/types.hpp"

namespace opcalc {

/// Matrices as JSON: an array of rows, each row an array of [re, im] pairs.
/// Plain numbers are accepted as real entries. Throws ParseError.
Matrix matrix_from_json(const std::string& text);
std::string matrix_to_json(const Matrix& m);

/// Throws IoError when the file cannot be read, ParseError on bad content.
Matrix read_matrix_file(const std::filesystem::path& path);
void write_matrix_file(const std::filesystem::path& path, const Matrix& m);

}  // namespace opcalc
