#include "opcalc/ideal_norms.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <numeric>
#include <sstream>

#include <Eigen/SVD>

#include "opcalc/errors.hpp"
#include "opcalc/spectral.hpp"

namespace opcalc {

NormSpec NormSpec::operator_norm() { return NormSpec{}; }

NormSpec NormSpec::schatten(double p) {
  if (!(p >= 1.0)) fail(ErrorKind::InvalidP, "Schatten exponent must be >= 1");
  NormSpec s;
  s.kind_ = std::isinf(p) ? Kind::op : Kind::schatten;
  s.p_ = p;
  return s;
}

NormSpec NormSpec::gauge(std::vector<double> weights) {
  if (weights.empty() || weights.front() != 1.0) {
    fail(ErrorKind::DomainError, "gauge weights must start with 1");
  }
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (!(weights[i] > 0.0) || (i > 0 && weights[i] > weights[i - 1])) {
      fail(ErrorKind::DomainError, "gauge weights must be positive and nonincreasing");
    }
  }
  NormSpec s;
  s.kind_ = Kind::gauge;
  s.weights_ = std::move(weights);
  return s;
}

NormSpec NormSpec::parse(const std::string& text) {
  if (text == "op" || text == "inf" || text == "p=inf") return operator_norm();
  try {
    if (text.rfind("p=", 0) == 0) return schatten(std::stod(text.substr(2)));
    if (text.rfind("gauge:", 0) == 0) {
      std::vector<double> w;
      std::string list = text.substr(6);
      std::replace(list.begin(), list.end(), ';', ',');
      std::stringstream ss(list);
      std::string item;
      while (std::getline(ss, item, ',')) w.push_back(std::stod(item));
      return gauge(std::move(w));
    }
    return schatten(std::stod(text));
  } catch (const std::invalid_argument&) {
    fail(ErrorKind::ParseError, "cannot parse norm '" + text + "'");
  } catch (const std::out_of_range&) {
    fail(ErrorKind::ParseError, "cannot parse norm '" + text + "'");
  }
}

std::string NormSpec::label() const {
  std::ostringstream out;
  switch (kind_) {
    case Kind::op: out << "inf"; break;
    case Kind::schatten: out << "p=" << p_; break;
    case Kind::gauge:
      out << "gauge:";
      for (std::size_t i = 0; i < weights_.size(); ++i) out << (i ? "," : "") << weights_[i];
      break;
  }
  return out.str();
}

double SingularValueFunction::at(double t) const {
  if (t < 0.0) return values.empty() ? 0.0 : values.front();
  const auto idx = static_cast<std::size_t>(std::floor(t));
  return idx < values.size() ? values[idx] : 0.0;
}

SingularValueFunction singular_value_function(const Matrix& a) {
  SingularValueFunction out;
  if (a.size() == 0) return out;
  Eigen::JacobiSVD<Matrix> svd(a);
  const auto& sv = svd.singularValues();
  out.values.assign(sv.data(), sv.data() + sv.size());
  std::sort(out.values.begin(), out.values.end(), std::greater<>());
  return out;
}

double ideal_norm_from_singular_values(const std::vector<double>& sv, const NormSpec& spec) {
  switch (spec.kind()) {
    case NormSpec::Kind::op:
      return sv.empty() ? 0.0 : sv.front();
    case NormSpec::Kind::schatten: {
      const double top = sv.empty() ? 0.0 : sv.front();
      if (top == 0.0) return 0.0;
      double acc = 0.0;
      for (double s : sv) acc += std::pow(s / top, spec.p());
      return top * std::pow(acc, 1.0 / spec.p());
    }
    case NormSpec::Kind::gauge: {
      double acc = 0.0;
      const auto& w = spec.weights();
      for (std::size_t i = 0; i < std::min(w.size(), sv.size()); ++i) acc += w[i] * sv[i];
      return acc;
    }
  }
  return 0.0;
}

double ideal_norm(const Matrix& a, const NormSpec& spec) {
  if (!a.allFinite()) fail(ErrorKind::DomainError, "norm of a matrix with non-finite entries");
  return ideal_norm_from_singular_values(singular_value_function(a).values, spec);
}

int distribution_function(const Matrix& a, double s) {
  const auto sv = singular_value_function(a).values;
  return static_cast<int>(std::count_if(sv.begin(), sv.end(), [s](double v) { return v > s; }));
}

double singular_value_from_distribution(const Matrix& a, double t) {
  // d_s is a right-continuous step function whose jumps sit at the singular
  // values, so the infimum is attained at 0 or at one of them.
  const auto sv = singular_value_function(a).values;
  std::vector<double> candidates{0.0};
  candidates.insert(candidates.end(), sv.begin(), sv.end());
  std::sort(candidates.begin(), candidates.end());
  for (double s : candidates) {
    const auto d = std::count_if(sv.begin(), sv.end(), [s](double v) { return v > s; });
    if (static_cast<double>(d) <= t) return s;
  }
  return candidates.back();
}

bool submajorization_check(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    fail(ErrorKind::DimensionMismatch, "submajorization needs matrices of equal shape");
  }
  const auto sa = singular_value_function(a).values;
  const auto sb = singular_value_function(b).values;
  double pa = 0.0;
  double pb = 0.0;
  for (std::size_t i = 0; i < sa.size(); ++i) {
    pa += sa[i];
    pb += sb[i];
    if (pa > pb + 1e-12 * (1.0 + pb)) return false;
  }
  return true;
}

double inequality_slack(double rhs) { return 1e-10 * (1.0 + std::abs(rhs)); }

InequalityCheck make_check(double lhs, double rhs) {
  return {lhs, rhs, lhs <= rhs + inequality_slack(rhs)};
}

InequalityCheck symmetric_norm_check(const Matrix& a, const Matrix& r, const Matrix& b, const NormSpec& spec) {
  if (a.cols() != r.rows() || r.cols() != b.rows()) {
    fail(ErrorKind::DimensionMismatch, "incompatible shapes in a r b");
  }
  const NormSpec op = NormSpec::operator_norm();
  return make_check(ideal_norm(a * r * b, spec), ideal_norm(a, op) * ideal_norm(r, spec) * ideal_norm(b, op));
}

InequalityCheck integral_symmetric_norm_check(const std::vector<double>& weights,
                                              const std::vector<Matrix>& left,
                                              const std::vector<Matrix>& right, const Matrix& r,
                                              const NormSpec& spec) {
  if (weights.size() != left.size() || weights.size() != right.size() || weights.empty()) {
    fail(ErrorKind::DimensionMismatch, "weights, A_i and B_i must be non-empty and of equal length");
  }
  const NormSpec op = NormSpec::operator_norm();
  Matrix sum = Matrix::Zero(left[0].rows(), right[0].cols());
  double bound = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    sum += weights[i] * left[i] * r * right[i];
    bound += weights[i] * ideal_norm(left[i], op) * ideal_norm(right[i], op);
  }
  return make_check(ideal_norm(sum, spec), ideal_norm(r, spec) * bound);
}

InequalityCheck minkowski_property_check(const std::vector<double>& weights,
                                         const std::vector<Matrix>& terms, const NormSpec& spec) {
  if (weights.size() != terms.size() || terms.empty()) {
    fail(ErrorKind::DimensionMismatch, "weights and terms must be non-empty and of equal length");
  }
  Matrix sum = Matrix::Zero(terms[0].rows(), terms[0].cols());
  double bound = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    sum += weights[i] * terms[i];
    bound += weights[i] * ideal_norm(terms[i], spec);
  }
  return make_check(ideal_norm(sum, spec), bound);
}

InequalityCheck perturbation_norm_bound_check(const ScalarFunction& f, const Matrix& a, const Matrix& c,
                                              const NormSpec& spec) {
  if (!f.lipschitz_bound) fail(ErrorKind::MissingBound, "function '" + f.name() + "' carries no Lipschitz bound");
  const Matrix diff = apply_function(f, a + c) - apply_function(f, a);
  return make_check(ideal_norm(diff, spec), *f.lipschitz_bound * ideal_norm(c, spec));
}

std::string campaign_csv_row(const std::string& check_name, std::uint64_t seed, Eigen::Index n,
                             const NormSpec& spec, const InequalityCheck& check) {
  std::string label = spec.label();
  std::replace(label.begin(), label.end(), ',', ';');  // keep the CSV column intact
  std::ostringstream out;
  out << std::setprecision(17) << check_name << ',' << seed << ',' << n << ',' << label << ','
      << check.lhs << ',' << check.rhs << ',' << (check.passed ? "true" : "false");
  return out.str();
}

}  // namespace opcalc
