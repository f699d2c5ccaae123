#include "output.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>

#include "opcalc/errors.hpp"

namespace opcalc::cli {

namespace {

const std::map<std::string, double>& known_tolerances() {
  static const std::map<std::string, double> names{
      {"perturbation", 1e-9}, {"higher", 1e-8},    {"derivative", 1e-5},
      {"collapse", 1e-12},    {"quasicommutator", 1e-9}, {"peller", 1e-4},
  };
  return names;
}

void flatten(const Json& node, const std::string& prefix, std::string& out) {
  if (node.is_object()) {
    for (const auto& [key, value] : node.items()) flatten(value, prefix.empty() ? key : prefix + "." + key, out);
  } else if (node.is_array()) {
    for (std::size_t i = 0; i < node.size(); ++i) flatten(node[i], prefix + "." + std::to_string(i), out);
  } else {
    out += prefix + "," + (node.is_string() ? node.get<std::string>() : node.dump()) + "\n";
  }
}

}  // namespace

double GlobalOptions::tolerance(const std::string& name, double fallback) const {
  double value = fallback;
  for (const auto& item : tolerances) {
    const auto eq = item.find('=');
    if (eq != std::string::npos && item.substr(0, eq) == name) value = std::stod(item.substr(eq + 1));
  }
  return value;
}

void GlobalOptions::validate_tolerances() const {
  for (const auto& item : tolerances) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) fail(ErrorKind::ConfigError, "--tol expects name=value, got '" + item + "'");
    const std::string name = item.substr(0, eq);
    if (!known_tolerances().contains(name)) fail(ErrorKind::ConfigError, "unknown tolerance '" + name + "'");
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item.substr(eq + 1), &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() - eq - 1 || !(v > 0.0)) {
      fail(ErrorKind::ConfigError, "tolerance '" + name + "' must be a positive number");
    }
  }
}

Json matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

void emit(const GlobalOptions& global, const std::string& stem, const std::string& ext, const std::string& body) {
  if (global.out_dir.empty()) {
    std::cout << body;
    std::cout.flush();
    return;
  }
  std::error_code ec;
  std::filesystem::create_directories(global.out_dir, ec);
  const auto path = std::filesystem::path(global.out_dir) / (stem + "." + ext);
  std::ofstream out(path);
  if (ec || !out) fail(ErrorKind::IoError, "cannot write " + path.string());
  out << body;
  if (!out) fail(ErrorKind::IoError, "write failed for " + path.string());
}

void emit_report(const GlobalOptions& global, const std::string& stem, const Json& report) {
  if (global.format == "csv") {
    std::string body = "key,value\n";
    flatten(report, "", body);
    emit(global, stem, "csv", body);
  } else {
    emit(global, stem, "json", report.dump(2) + "\n");
  }
}

}  // namespace opcalc::cli
