#pragma once

#include <span>
#include <vector>

#include "opcalc/quadrature.hpp"
#include "opcalc/scalar_function.hpp"
#include "opcalc/types.hpp"

namespace opcalc {

/// Nodes (lambda_1, ..., lambda_{k+1}) of a k-th divided difference.
class NodeVector {
 public:
  /// Throws DomainError when empty or when an entry is not finite.
  explicit NodeVector(std::vector<double> nodes);
  NodeVector(std::initializer_list<double> nodes) : NodeVector(std::vector<double>(nodes)) {}

  int order() const { return static_cast<int>(nodes_.size()) - 1; }
  std::span<const double> values() const { return nodes_; }
  double operator[](std::size_t i) const { return nodes_[i]; }
  std::size_t size() const { return nodes_.size(); }

 private:
  std::vector<double> nodes_;
};

/// Minimum admissible node gap for the difference-quotient formulas:
/// max(1e-8 * spread, 1e-12).
double node_collision_threshold(std::span<const double> nodes);

/// True when every pair of nodes is farther apart than node_collision_threshold.
bool nodes_distinct(std::span<const double> nodes);

/// Two-term recursion of the definition. Throws NodeCollision.
cplx divdiff_recursive(const ScalarFunction& f, const NodeVector& nodes);

/// sum_j f(l_j) / prod_{m != j} (l_j - l_m). Throws NodeCollision.
cplx divdiff_sum(const ScalarFunction& f, const NodeVector& nodes);

/// integral over Delta_k of f^{(k)}(t . lambda) rho_k(dt), by the given rule.
/// Coincident nodes are fine. Throws MissingDerivative.
cplx divdiff_simplex(const ScalarFunction& f, const NodeVector& nodes, const SimplexQuadrature& quad);
cplx divdiff_simplex(const ScalarFunction& f, const NodeVector& nodes, int degree = 12);

/// Evaluator used by the operator engines: the sum formula when its rounding
/// estimate is negligible, otherwise simplex quadrature with increasing degree
/// until two successive rules agree.
cplx divided_difference(const ScalarFunction& f, std::span<const double> nodes);

}  // namespace opcalc
