#pragma once

#include <functional>
#include <span>
#include <vector>

#include "opcalc/ideal_norms.hpp"
#include "opcalc/scalar_function.hpp"
#include "opcalc/spectral.hpp"
#include "opcalc/types.hpp"

namespace opcalc {

using DecompositionList = std::vector<std::reference_wrapper<const SpectralDecomposition>>;

/// Largest number of clusters per slot and largest order accepted by moi_direct.
inline constexpr std::size_t kMaxMoiClusters = 32;
inline constexpr int kMaxMoiOrder = 4;

/// phi(lambda_1..lambda_{k+1}) P^1 b_1 P^2 ... b_k P^{k+1} summed over spectra.
struct MoiRequest {
  MultiSymbol phi;
  DecompositionList decomps;
  std::vector<Matrix> directions;
  /// phi is symmetric in its arguments: tabulate once per sorted node tuple.
  bool symmetric_symbol = false;

  int order() const { return static_cast<int>(directions.size()); }
  /// Throws DimensionMismatch.
  void validate() const;
};

/// Direct finite spectral sum. k = 0 reduces to functional calculus.
Matrix moi_direct(const MoiRequest& req);

/// f^[k] as a symbol (evaluated by the divided-difference dispatcher).
MultiSymbol divdiff_symbol(const ScalarFunction& f);

using FactorFunction = std::function<cplx(double)>;

/// One quadrature node sigma of an integral projective decomposition:
/// weight w_sigma > 0 and factors phi_1(., sigma), ..., phi_{k+1}(., sigma).
struct IpdNode {
  double weight = 0.0;
  std::vector<FactorFunction> factors;
  /// sup over R of |phi_j(., sigma)| when known analytically; NaN otherwise.
  std::vector<double> factor_sup;
};

/// phi(l_1..l_{k+1}) ~= sum_sigma w_sigma prod_j phi_j(l_j, sigma). `tolerance`
/// is the measured reconstruction error over the box |l_j| <= `checked_radius`.
struct IntegralProjectiveDecomposition {
  int order = 0;
  std::vector<IpdNode> nodes;
  double tolerance = 0.0;
  double checked_radius = 0.0;

  cplx reconstruct(std::span<const double> lambda) const;
  /// sum_sigma w_sigma prod_j sup_R |phi_j(., sigma)|; NaN if some sup is unknown.
  double sup_bound() const;
  /// Same with suprema taken over the spectra of the given decompositions.
  double sup_bound(const DecompositionList& decomps) const;
  /// max |reconstruct - target| over a tensor grid of `per_axis` points in [-radius, radius]^(k+1).
  double reconstruction_error(const MultiSymbol& target, double radius, int per_axis = 7) const;
};

/// phi = 1 as a one-node decomposition of order k.
IntegralProjectiveDecomposition ipd_unit(int k);
/// phi(l, m) = l - m from the two nodes l * 1 and 1 * (-m).
IntegralProjectiveDecomposition ipd_commutator();
/// f^[1] for f = exp(i xi x): i xi int_0^1 e^{i t l xi} e^{i (1-t) xi m} dt,
/// discretized by `points`-point Gauss-Legendre in t.
IntegralProjectiveDecomposition ipd_exp_first_order(double xi, int points = 64,
                                                    double checked_radius = 8.0);
/// f^[k] for f(x) = sum_j c_j exp(i xi_j x):
/// int_{Delta_k} prod_m e^{i t_m l_m xi} (i xi)^k d mu(xi) rho_k(dt), simplex rule of `degree`.
IntegralProjectiveDecomposition ipd_wiener(const DiscreteWienerMeasure& mu, int k, int degree = 16,
                                           double checked_radius = 4.0);

/// Sum over nodes of w P^1(phi_1) b_1 ... b_k P^{k+1}(phi_{k+1}). Throws DimensionMismatch.
Matrix moi_ipd(const IntegralProjectiveDecomposition& ipd, const DecompositionList& decomps,
               const std::vector<Matrix>& directions);

/// sup_bound(ipd over spectra) * prod_{p != slot} ||b_p||_op * ||b_slot||_spec (slot is 1-based).
double moi_norm_bound(const IntegralProjectiveDecomposition& ipd, const DecompositionList& decomps,
                      const NormSpec& spec, const std::vector<Matrix>& directions, int slot = 1);

/// Scaled residual of f(a+c) - f(a) = f^[1](a+c, a) # c.
double perturbation_first_order(const ScalarFunction& f, const Matrix& a, const Matrix& c);

/// Scaled residual of
///   f^[k-1](a_{j-}, a+c, a_{j+}) # b - f^[k-1](a_{j-}, a, a_{j+}) # b
///     = f^[k](a_{j-}, a+c, a, a_{j+}) # (b_{j-}, c, b_{j+}),
/// with aux = (a_1..a_{k-1}), b = (b_1..b_{k-1}), a_{j-} = (a_1..a_{j-1}),
/// a_{j+} = (a_j..a_{k-1}). Throws IndexError unless 1 <= slot <= k.
double perturbation_higher(const ScalarFunction& f, int k, const Matrix& a, const Matrix& c,
                           const std::vector<Matrix>& aux, const std::vector<Matrix>& b, int slot);

/// Scaled residual of f(a) q - q f(b) = f^[1](a, b) # (a q - q b).
double quasicommutator_check(const ScalarFunction& f, const Matrix& a, const Matrix& b, const Matrix& q);

/// Scaled residual of the multiplicativity rule: with psi~(l) = psi(l_m, l_{m+1}),
///   I(phi psi~)(b_1..b_k) = I(phi)(b_1..b_{m-1}, I^{P_m,P_{m+1}}(psi)(b_m), b_{m+1}..b_k).
/// phi has order k = directions.size(), psi order 1; slot m is 1-based, 1 <= m <= k.
double moi_multiplicativity_check(const MultiSymbol& phi, const MultiSymbol& psi, int m,
                                  const DecompositionList& decomps,
                                  const std::vector<Matrix>& directions);

}  // namespace opcalc
