#pragma once

#include <vector>

#include "opcalc/grid_function.hpp"
#include "opcalc/ideal_norms.hpp"

namespace opcalc {

/// Smooth bump: 1 on |xi| <= 1, 0 on |xi| >= 2, psi(2-|xi|) / (psi(2-|xi|) + psi(|xi|-1))
/// in between with psi(t) = exp(-1/t) for t > 0.
double lp_bump(double xi);
/// phi_j(xi) = phi(2^-j xi) - phi(2^(-j+1) xi), supported in 2^(j-1) <= |xi| <= 2^(j+1).
double lp_block_symbol(int j, double xi);

struct LittlewoodPaleyDecomposition {
  int j_min = 0;
  int j_max = 0;
  std::vector<GridFunction> blocks;  // blocks[j - j_min] = phi_j-check * f
  GridFunction low_pass;             // phi(2^(-j_min+1) .)-check * f
  /// Relative spectral energy that the blocks j <= j_max cannot represent.
  double leakage = 0.0;
  /// max over grid frequencies of |sum_j phi_j + phi(2^(-j_min+1) .) - 1| where the
  /// partition is expected to equal 1 (|xi| <= 2^j_max).
  double partition_error = 0.0;

  const GridFunction& block(int j) const { return blocks.at(static_cast<std::size_t>(j - j_min)); }
  /// Low-pass plus all blocks.
  GridFunction reconstruct() const;
};

/// Throws RangeTooNarrow when the leakage exceeds `max_leakage`, DomainError if j_min > j_max.
LittlewoodPaleyDecomposition littlewood_paley_blocks(const GridFunction& f, int j_min, int j_max,
                                                     double max_leakage = 1e-6);

struct BesovReport {
  int k = 0;
  int j_min = 0;
  int j_max = 0;
  std::vector<double> block_sup;  // ||phi_j-check * f||_inf for j = j_min..j_max
  double seminorm = 0.0;          // sum_j 2^(jk) block_sup
  /// Bound on the omitted low-frequency terms sum_{j < j_min} 2^(jk) ||phi_j-check * f||.
  double truncation_tail = 0.0;
  double leakage = 0.0;
};

/// Truncated homogeneous Besov seminorm with (s, p, q) = (k, inf, 1).
BesovReport besov_seminorm(const GridFunction& f, int k, int j_min, int j_max, double max_leakage = 1e-6);

/// Least-squares removal of a polynomial of the given degree over the analysis window.
GridFunction detrend(const GridFunction& f, int degree);

/// ||phi-check^(k)||_L1 for the fixed bump (cached). k = 0 gives ||phi-check||_L1.
double bernstein_constant(int k);
/// ||phi_0-check||_L1 (scale invariant: equals ||phi_j-check||_L1 for every j).
double block_kernel_l1();

/// ||u^(k)||_inf <= b_k R^k ||u||_inf for u band-limited to [-R, R] (derivative taken
/// spectrally). Throws DomainError if u has more than 1e-8 relative energy outside the band.
InequalityCheck bernstein_check(const GridFunction& u, double band_radius, int k);

/// sum_j ||(phi_j-check * f)^(k)||_inf <= 2^k b_k ||f||_B.
InequalityCheck series_bound_check(const GridFunction& f, int k, int j_min, int j_max);

}  // namespace opcalc
