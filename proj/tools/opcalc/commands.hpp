#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

namespace opcalc::cli {

enum ExitCode : int { kPass = 0, kCheckFailed = 1, kUsage = 2, kIo = 3 };

struct GlobalOptions {
  std::uint64_t seed = 20240611;
  std::string out_dir;  // empty: write to stdout
  std::string format;   // empty: command default
  std::vector<std::string> tolerances;

  /// Tolerance `name` from --tol overrides, else `fallback`. Unknown names
  /// in --tol are rejected by validate_tolerances().
  double tolerance(const std::string& name, double fallback) const;
  void validate_tolerances() const;
};

/// Registers a subcommand; the returned callable runs it after parsing.
using Runner = std::function<int()>;

Runner add_derive(CLI::App& app, const GlobalOptions& global);
Runner add_verify(CLI::App& app, const GlobalOptions& global);
Runner add_besov(CLI::App& app, const GlobalOptions& global);
Runner add_peller(CLI::App& app, const GlobalOptions& global);
Runner add_report(CLI::App& app, const GlobalOptions& global);

}  // namespace opcalc::cli
