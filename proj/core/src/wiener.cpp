#include "opcalc/wiener.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "opcalc/catalog.hpp"
#include "opcalc/derivative.hpp"
#include "opcalc/errors.hpp"
#include "opcalc/littlewood_paley.hpp"
#include "opcalc/random.hpp"

namespace opcalc {

double wiener_bound(const DiscreteWienerMeasure& mu, int k) {
  if (k < 1) fail(ErrorKind::DomainError, "Wiener bound needs k >= 1");
  double sum = 0.0;
  double factorial = 1.0;
  for (int j = 1; j <= k; ++j) {
    factorial *= j;
    sum += mu.moment(j) / factorial;
  }
  return sum;
}

InequalityCheck wiener_derivative_check(const DiscreteWienerMeasure& mu, int k, const Matrix& a, const Matrix& b) {
  const double nb = operator_norm(b);
  if (nb == 0.0) return make_check(0.0, wiener_bound(mu, k));
  const ScalarFunction f = wiener_function(mu);
  const Matrix d = frechet_derivative({f, a, std::vector<Matrix>(static_cast<std::size_t>(k), b)});
  const double ratio = operator_norm(d) / (std::tgamma(k + 1.0) * std::pow(nb, k));
  return make_check(ratio, wiener_bound(mu, k));
}

PellerBoundReport peller_bound_check(const ScalarFunction& f, const GridFunction& grid, int k,
                                     const std::vector<int>& dims, int trials, std::uint64_t seed,
                                     int j_min, int j_max, double stability_factor) {
  if (dims.empty() || trials < 1) fail(ErrorKind::DomainError, "need at least one dimension and one trial");
  PellerBoundReport r;
  r.k = k;
  r.dims = dims;
  r.besov_seminorm = besov_seminorm(grid, k, j_min, j_max).seminorm;
  const GridFunction dk = grid.derivative(k);
  r.inf_derivative = std::numeric_limits<double>::infinity();
  for (std::size_t n = 0; n < dk.size(); ++n) {
    const double x = dk.x(n);
    if (x >= dk.analysis_lo() && x < dk.analysis_hi()) r.inf_derivative = std::min(r.inf_derivative, std::abs(dk[n]));
  }
  const double factorial = std::tgamma(k + 1.0);
  for (int n : dims) {
    double worst = 0.0;
    for (int t = 0; t < trials; ++t) {
      RandomStream rng(seed, static_cast<std::uint64_t>(n) * 1000003u + static_cast<std::uint64_t>(t));
      const Matrix a = random_hermitian(rng, n, 3.0);
      // Random reflection: unit operator norm attained on every vector, which
      // probes the supremum far better than a normalized random Hermitian.
      const Matrix u = random_unitary(rng, n);
      Eigen::VectorXcd signs(n);
      for (Eigen::Index i = 0; i < n; ++i) signs(i) = rng.uniform() < 0.5 ? -1.0 : 1.0;
      const Matrix b = u * signs.asDiagonal() * u.adjoint();
      const Matrix d = frechet_derivative({f, a, std::vector<Matrix>(static_cast<std::size_t>(k), b)});
      const double lhs = operator_norm(d) / factorial;
      const double floor = r.inf_derivative / factorial;
      const double excess = lhs - floor;
      if (excess > inequality_slack(floor)) worst = std::max(worst, excess);
    }
    r.constants.push_back(r.besov_seminorm > 0.0 ? worst / r.besov_seminorm
                                                 : (worst > 0.0 ? HUGE_VAL : 0.0));
  }
  const auto [lo, hi] = std::minmax_element(r.constants.begin(), r.constants.end());
  const bool finite = std::all_of(r.constants.begin(), r.constants.end(), [](double c) { return std::isfinite(c); });
  r.spread = *lo > 0.0 ? *hi / *lo : (*hi == 0.0 ? 1.0 : HUGE_VAL);
  r.passed = finite && r.spread <= stability_factor;
  return r;
}

}  // namespace opcalc
