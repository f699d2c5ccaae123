#include "opcalc/quadrature.hpp"

#include <gsl/gsl_integration.h>

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>

#include "opcalc/errors.hpp"

namespace opcalc {

namespace {

struct FixedWorkspace {
  explicit FixedWorkspace(gsl_integration_fixed_workspace* w) : ptr(w) {}
  ~FixedWorkspace() { gsl_integration_fixed_free(ptr); }
  FixedWorkspace(const FixedWorkspace&) = delete;
  FixedWorkspace& operator=(const FixedWorkspace&) = delete;
  gsl_integration_fixed_workspace* ptr;
};

QuadratureRule copy_rule(const FixedWorkspace& ws) {
  const std::size_t n = gsl_integration_fixed_n(ws.ptr);
  const double* x = gsl_integration_fixed_nodes(ws.ptr);
  const double* w = gsl_integration_fixed_weights(ws.ptr);
  return {std::vector<double>(x, x + n), std::vector<double>(w, w + n)};
}

}  // namespace

QuadratureRule gauss_legendre(std::size_t n, double a, double b) {
  if (n == 0) fail(ErrorKind::DomainError, "quadrature needs at least one node");
  FixedWorkspace ws(gsl_integration_fixed_alloc(gsl_integration_fixed_legendre, n, a, b, 0.0, 0.0));
  if (ws.ptr == nullptr) fail(ErrorKind::DomainError, "gauss_legendre allocation failed");
  return copy_rule(ws);
}

QuadratureRule gauss_jacobi_unit(std::size_t n, double alpha) {
  if (n == 0) fail(ErrorKind::DomainError, "quadrature needs at least one node");
  // GSL's Jacobi weight is (b - x)^alpha (x - a)^beta.
  FixedWorkspace ws(gsl_integration_fixed_alloc(gsl_integration_fixed_jacobi, n, 0.0, 1.0, alpha, 0.0));
  if (ws.ptr == nullptr) fail(ErrorKind::DomainError, "gauss_jacobi allocation failed");
  return copy_rule(ws);
}

SimplexQuadrature build_simplex_quadrature(int k, int degree, int max_order) {
  if (k < 0 || degree < 1) fail(ErrorKind::DomainError, "simplex rule needs k >= 0 and degree >= 1");
  if (k > max_order) {
    fail(ErrorKind::UnsupportedOrder,
         "simplex order " + std::to_string(k) + " exceeds maximum " + std::to_string(max_order));
  }
  SimplexQuadrature q;
  q.order = k;
  q.degree = degree;
  q.exact_degree = 2 * degree - 1;
  const std::size_t dim = static_cast<std::size_t>(k) + 1;
  if (k == 0) {
    q.points = {1.0};
    q.weights = {1.0};
    return q;
  }

  // Axis i (0-based) carries the Jacobian factor (1 - x_i)^(k - 1 - i).
  std::vector<QuadratureRule> axes;
  axes.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) axes.push_back(gauss_jacobi_unit(static_cast<std::size_t>(degree), k - 1 - i));

  std::size_t total = 1;
  for (int i = 0; i < k; ++i) total *= static_cast<std::size_t>(degree);
  q.points.reserve(total * dim);
  q.weights.reserve(total);

  std::vector<std::size_t> idx(static_cast<std::size_t>(k), 0);
  std::vector<double> t(dim);
  for (std::size_t flat = 0; flat < total; ++flat) {
    double remaining = 1.0;
    double weight = 1.0;
    for (int i = 0; i < k; ++i) {
      const double x = axes[static_cast<std::size_t>(i)].nodes[idx[static_cast<std::size_t>(i)]];
      weight *= axes[static_cast<std::size_t>(i)].weights[idx[static_cast<std::size_t>(i)]];
      t[static_cast<std::size_t>(i)] = remaining * x;
      remaining *= 1.0 - x;
    }
    t[static_cast<std::size_t>(k)] = remaining;
    q.points.insert(q.points.end(), t.begin(), t.end());
    q.weights.push_back(weight);

    for (int i = k - 1; i >= 0; --i) {
      if (++idx[static_cast<std::size_t>(i)] < static_cast<std::size_t>(degree)) break;
      idx[static_cast<std::size_t>(i)] = 0;
    }
  }
  return q;
}

const SimplexQuadrature& cached_simplex_quadrature(int k, int degree) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::unique_ptr<SimplexQuadrature>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{k, degree}];
  if (!slot) slot = std::make_unique<SimplexQuadrature>(build_simplex_quadrature(k, degree));
  return *slot;
}

}  // namespace opcalc
