#pragma once

#include "opcalc/grid_function.hpp"

namespace opcalc {

/// r-hat_u(xi) = 1 for |xi| <= u, u / |xi| otherwise. u = 0 gives 0 off the origin.
double kernel_r_hat(double u, double xi);
/// mu-hat_u = 1 - r-hat_u; mu_0 := 0.
double kernel_mu_hat(double u, double xi);

/// r_1(x) = (sin(x)/x - Ci(|x|)) / pi, the inverse transform of r-hat_1.
double kernel_r1(double x);

/// f * mu_u as a frequency multiplier; u = 0 yields the zero grid. Throws
/// GridTooCoarse when the declared band of f exceeds the grid's Nyquist frequency,
/// DomainError for u < 0.
GridFunction convolve_mu(const GridFunction& f, double u);
/// f * r_u (the complementary multiplier).
GridFunction convolve_r(const GridFunction& f, double u);

struct KernelNorms {
  double l1 = 0.0;
  double l2 = 0.0;
  double l2_plancherel = 0.0;
  /// Analytic bound on the L1 mass beyond the integration cutoff.
  double l1_tail = 0.0;
};

/// ||r_1||_L1 and ||r_1||_L2 by adaptive integration of the closed form, plus
/// ||r_1||_L2 from Plancherel, (1/2pi) int |r-hat_1|^2.
KernelNorms r1_norm_estimates();

}  // namespace opcalc
