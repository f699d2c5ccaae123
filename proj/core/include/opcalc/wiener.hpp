#pragma once

#include <cstdint>
#include <vector>

#include "opcalc/grid_function.hpp"
#include "opcalc/ideal_norms.hpp"
#include "opcalc/scalar_function.hpp"

namespace opcalc {

/// sum_{j=1}^k (1/j!) sum_atoms |c| |xi|^j.
double wiener_bound(const DiscreteWienerMeasure& mu, int k);

/// ||D^k f(a)(b, ..., b)||_op / (k! ||b||_op^k) <= wiener_bound(mu, k) for
/// f = sum_j c_j exp(i xi_j x).
InequalityCheck wiener_derivative_check(const DiscreteWienerMeasure& mu, int k, const Matrix& a, const Matrix& b);

struct PellerBoundReport {
  int k = 0;
  double besov_seminorm = 0.0;
  double inf_derivative = 0.0;  // inf over the analysis window of |f^(k)|
  std::vector<int> dims;
  /// Smallest C with ||D^k f(a)(b..b)|| <= k! [inf|f^(k)|/k! + C ||f||_B] ||b||^k over the trials.
  std::vector<double> constants;
  double spread = 1.0;  // max C / min C
  bool passed = false;
};

/// Empirical constant of the Besov bound for D^k f across dimensions; passes when
/// every constant is finite and max/min <= stability_factor (dimension-free).
PellerBoundReport peller_bound_check(const ScalarFunction& f, const GridFunction& grid, int k,
                                     const std::vector<int>& dims, int trials, std::uint64_t seed,
                                     int j_min, int j_max, double stability_factor = 2.0);

}  // namespace opcalc
