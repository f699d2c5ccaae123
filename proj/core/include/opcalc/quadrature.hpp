#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace opcalc {

/// One-dimensional rule: sum_i weights[i] g(nodes[i]).
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [a, b].
QuadratureRule gauss_legendre(std::size_t n, double a, double b);

/// n-point Gauss-Jacobi rule on [0, 1] for the weight (1 - x)^alpha.
QuadratureRule gauss_jacobi_unit(std::size_t n, double alpha);

/// Default upper bound on the simplex dimension accepted by build_simplex_quadrature.
inline constexpr int kMaxSimplexOrder = 6;

/// Cubature for rho_k on the standard simplex Delta_k = {t in R^{k+1}: t >= 0, sum t = 1},
/// where rho_k is Lebesgue measure on Sigma_k pushed forward by
/// s -> (s_1, ..., s_k, 1 - sum s). Total mass 1/k!.
struct SimplexQuadrature {
  int order = 0;         // k
  int degree = 0;        // Gauss points per collapsed axis
  int exact_degree = 0;  // exact for polynomials of this total degree
  std::vector<double> points;  // barycentric, (k+1) entries per node
  std::vector<double> weights;

  std::size_t size() const { return weights.size(); }
  std::span<const double> point(std::size_t i) const {
    return {points.data() + i * static_cast<std::size_t>(order + 1), static_cast<std::size_t>(order + 1)};
  }
};

/// Builds the rule from a tensor Gauss-Jacobi grid on [0,1]^k mapped through the
/// collapsed coordinates s_1 = x_1, s_j = x_j prod_{i<j} (1 - x_i).
/// k = 0 yields the single point (1) with weight 1. Throws UnsupportedOrder for
/// k > max_order.
SimplexQuadrature build_simplex_quadrature(int k, int degree, int max_order = kMaxSimplexOrder);

/// Process-wide cache of build_simplex_quadrature results (thread-safe).
const SimplexQuadrature& cached_simplex_quadrature(int k, int degree);

}  // namespace opcalc
