#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "opcalc/scalar_function.hpp"
#include "opcalc/types.hpp"

namespace opcalc {

/// Selector for an ideal norm: operator norm, Schatten p (1 <= p <= inf), or a
/// symmetric gauge sum_i w_i sigma_i with nonincreasing weights, w_1 = 1.
class NormSpec {
 public:
  enum class Kind { op, schatten, gauge };

  static NormSpec operator_norm();
  /// Throws InvalidP for p < 1 (or NaN). p = +inf is the operator norm.
  static NormSpec schatten(double p);
  /// Throws DomainError unless weights are positive, nonincreasing, first == 1.
  static NormSpec gauge(std::vector<double> weights);
  /// "op", "inf", "p=<p>", "gauge:<w1,w2,...>" (";" also separates weights). Throws ParseError / InvalidP.
  static NormSpec parse(const std::string& text);

  Kind kind() const { return kind_; }
  double p() const { return p_; }
  const std::vector<double>& weights() const { return weights_; }
  std::string label() const;

 private:
  Kind kind_ = Kind::op;
  double p_ = 0.0;
  std::vector<double> weights_;
};

/// Nonincreasing singular values mu(a) (the discrete singular value function).
struct SingularValueFunction {
  std::vector<double> values;

  /// mu_t(a) for t >= 0 with unit weight per singular value (right-continuous step).
  double at(double t) const;
};

double ideal_norm(const Matrix& a, const NormSpec& spec);
double ideal_norm_from_singular_values(const std::vector<double>& sv, const NormSpec& spec);
SingularValueFunction singular_value_function(const Matrix& a);

/// d_s(a): number of singular values strictly greater than s.
int distribution_function(const Matrix& a, double s);
/// inf{s >= 0 : d_s(a) <= t}, computed from the distribution function alone.
double singular_value_from_distribution(const Matrix& a, double t);

/// Every partial sum of the singular values of a is <= that of b.
bool submajorization_check(const Matrix& a, const Matrix& b);

struct InequalityCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  bool passed = false;

  explicit operator bool() const { return passed; }
};

/// Slack applied to every inequality: 1e-10 * (1 + rhs).
double inequality_slack(double rhs);
InequalityCheck make_check(double lhs, double rhs);

/// ||a r b||_spec <= ||a||_op ||r||_spec ||b||_op.
InequalityCheck symmetric_norm_check(const Matrix& a, const Matrix& r, const Matrix& b, const NormSpec& spec);

/// ||sum_i w_i A_i r B_i||_spec <= ||r||_spec sum_i w_i ||A_i||_op ||B_i||_op.
InequalityCheck integral_symmetric_norm_check(const std::vector<double>& weights,
                                              const std::vector<Matrix>& left,
                                              const std::vector<Matrix>& right, const Matrix& r,
                                              const NormSpec& spec);

/// ||sum_i w_i F_i||_spec <= sum_i w_i ||F_i||_spec.
InequalityCheck minkowski_property_check(const std::vector<double>& weights,
                                         const std::vector<Matrix>& terms, const NormSpec& spec);

/// ||f(a+c) - f(a)||_spec <= L_f ||c||_spec with L_f the Lipschitz bound carried by f
/// (from an explicit decomposition of f^[1]). Throws MissingBound.
InequalityCheck perturbation_norm_bound_check(const ScalarFunction& f, const Matrix& a, const Matrix& c,
                                              const NormSpec& spec);

/// One CSV row of a randomized campaign: check_name,seed,n,p_or_gauge,lhs,rhs,pass.
std::string campaign_csv_row(const std::string& check_name, std::uint64_t seed, Eigen::Index n,
                             const NormSpec& spec, const InequalityCheck& check);

}  // namespace opcalc
