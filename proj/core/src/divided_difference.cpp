#include "opcalc/divided_difference.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "opcalc/errors.hpp"

namespace opcalc {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void require_distinct(std::span<const double> nodes) {
  if (!nodes_distinct(nodes)) {
    fail(ErrorKind::NodeCollision, "nodes closer than " +
                                       std::to_string(node_collision_threshold(nodes)) +
                                       "; use divdiff_simplex");
  }
}

// f^[m] of nodes[idx[0..m]] by the defining recursion on the last two entries.
cplx recurse(const ScalarFunction& f, std::span<const double> nodes, std::vector<std::size_t>& idx) {
  const std::size_t m = idx.size() - 1;
  if (m == 0) return f(nodes[idx[0]]);
  const std::size_t last = idx[m];
  const std::size_t second_last = idx[m - 1];
  idx.pop_back();
  const cplx head = recurse(f, nodes, idx);  // (l_1, ..., l_m)
  idx.back() = last;
  const cplx tail = recurse(f, nodes, idx);  // (l_1, ..., l_{m-1}, l_{m+1})
  idx.back() = second_last;
  idx.push_back(last);
  return (head - tail) / (nodes[second_last] - nodes[last]);
}

struct SumTerms {
  cplx value{0.0, 0.0};
  double magnitude = 0.0;  // sum of |terms|, drives the rounding estimate
};

SumTerms sum_formula(const ScalarFunction& f, std::span<const double> nodes) {
  SumTerms out;
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    double denom = 1.0;
    for (std::size_t m = 0; m < nodes.size(); ++m) {
      if (m != j) denom *= nodes[j] - nodes[m];
    }
    const cplx term = f(nodes[j]) / denom;
    out.value += term;
    out.magnitude += std::abs(term);
  }
  return out;
}

cplx simplex_sum(const ScalarFunction& f, std::span<const double> nodes, const SimplexQuadrature& quad) {
  const int k = static_cast<int>(nodes.size()) - 1;
  // Pairwise accumulation keeps the reduction order fixed and the error small.
  std::vector<cplx> partial(quad.size());
  for (std::size_t q = 0; q < quad.size(); ++q) {
    const auto t = quad.point(q);
    double x = 0.0;
    for (std::size_t j = 0; j < nodes.size(); ++j) x += t[j] * nodes[j];
    partial[q] = quad.weights[q] * f.derivative(x, k);
  }
  for (std::size_t width = 1; width < partial.size(); width *= 2) {
    for (std::size_t i = 0; i + width < partial.size(); i += 2 * width) partial[i] += partial[i + width];
  }
  return partial.empty() ? cplx{} : partial[0];
}

}  // namespace

NodeVector::NodeVector(std::vector<double> nodes) : nodes_(std::move(nodes)) {
  if (nodes_.empty()) fail(ErrorKind::DomainError, "a divided difference needs at least one node");
  for (double x : nodes_) {
    if (!std::isfinite(x)) fail(ErrorKind::DomainError, "divided-difference nodes must be finite");
  }
}

double node_collision_threshold(std::span<const double> nodes) {
  if (nodes.empty()) return 1e-12;
  const auto [lo, hi] = std::minmax_element(nodes.begin(), nodes.end());
  return std::max(1e-8 * (*hi - *lo), 1e-12);
}

bool nodes_distinct(std::span<const double> nodes) {
  const double delta = node_collision_threshold(nodes);
  std::vector<double> sorted(nodes.begin(), nodes.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i] - sorted[i - 1] <= delta) return false;
  }
  return true;
}

cplx divdiff_recursive(const ScalarFunction& f, const NodeVector& nodes) {
  require_distinct(nodes.values());
  std::vector<std::size_t> idx(nodes.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  return recurse(f, nodes.values(), idx);
}

cplx divdiff_sum(const ScalarFunction& f, const NodeVector& nodes) {
  require_distinct(nodes.values());
  return sum_formula(f, nodes.values()).value;
}

cplx divdiff_simplex(const ScalarFunction& f, const NodeVector& nodes, const SimplexQuadrature& quad) {
  if (quad.order != nodes.order()) {
    fail(ErrorKind::DimensionMismatch, "simplex rule order does not match node count");
  }
  if (!f.has_derivative(nodes.order())) {
    fail(ErrorKind::MissingDerivative,
         f.name() + " lacks a derivative of order " + std::to_string(nodes.order()));
  }
  return simplex_sum(f, nodes.values(), quad);
}

cplx divdiff_simplex(const ScalarFunction& f, const NodeVector& nodes, int degree) {
  return divdiff_simplex(f, nodes, cached_simplex_quadrature(nodes.order(), degree));
}

cplx divided_difference(const ScalarFunction& f, std::span<const double> nodes) {
  const int k = static_cast<int>(nodes.size()) - 1;
  if (k < 0) fail(ErrorKind::DomainError, "a divided difference needs at least one node");
  if (k == 0) return f(nodes[0]);

  const bool distinct = nodes_distinct(nodes);
  if (distinct) {
    const SumTerms s = sum_formula(f, nodes);
    if (8.0 * kEps * s.magnitude <= 1e-13 * std::max(1.0, std::abs(s.value)) || !f.has_derivative(k)) {
      return s.value;
    }
  } else if (!f.has_derivative(k)) {
    fail(ErrorKind::NodeCollision,
         f.name() + " has coincident nodes but no derivative of order " + std::to_string(k));
  }

  // Keep the tensor rule below ~2^21 points.
  static constexpr std::array<int, 6> kDegrees{8, 12, 16, 24, 32, 48};
  cplx previous = simplex_sum(f, nodes, cached_simplex_quadrature(k, kDegrees[0]));
  for (std::size_t i = 1; i < kDegrees.size(); ++i) {
    const double points = std::pow(static_cast<double>(kDegrees[i]), k);
    if (points > 2.1e6) break;
    const cplx current = simplex_sum(f, nodes, cached_simplex_quadrature(k, kDegrees[i]));
    if (std::abs(current - previous) <= 1e-14 * std::max(1.0, std::abs(current))) return current;
    previous = current;
  }
  return previous;
}

}  // namespace opcalc
