#pragma once

#include <memory>
#include <vector>

#include "opcalc/divided_difference.hpp"
#include "opcalc/grid_function.hpp"
#include "opcalc/scalar_function.hpp"

namespace opcalc {

/// f(x) = sum_m coeff_m exp(i xi_m x) (an atom of a discrete Wiener measure, or
/// one bin of a sampled spectrum).
struct SpectralLine {
  double xi = 0.0;
  cplx coeff{};
};

/// Grid used to obtain the spectrum of a band-limited function that is not
/// given by atoms. The wide window keeps the x^-2 tails of f * mu_u from aliasing.
inline GridSpec default_peller_grid() { return GridSpec{-2048.0, 2048.0, std::size_t{1} << 16, 0.0, false}; }

/// A scalar function with supp f-hat inside [0, sigma] (positive_half) or
/// [-sigma, sigma] (symmetric), verified numerically on construction.
class BandlimitedFunction {
 public:
  /// Uses the declared band of f. Throws DomainError when no band is declared
  /// or more than 1e-8 of the spectral energy lies outside it.
  static BandlimitedFunction from_function(const ScalarFunction& f, const GridSpec& grid = default_peller_grid());

  const ScalarFunction& function() const { return f_; }
  double sigma() const { return sigma_; }
  BandType band_type() const { return type_; }
  /// Spectral lines inside the band (exact atoms for Wiener functions).
  const std::vector<SpectralLine>& lines() const { return *lines_; }
  bool exact_lines() const { return exact_; }
  double out_of_band_energy() const { return out_of_band_; }

  /// (f * mu_u)(x) = sum_m coeff_m mu-hat_u(xi_m) exp(i xi_m x).
  cplx convolved_mu(double u, double x) const;

 private:
  ScalarFunction f_;
  double sigma_ = 0.0;
  BandType type_ = BandType::positive_half;
  std::shared_ptr<const std::vector<SpectralLine>> lines_;
  bool exact_ = false;
  double out_of_band_ = 0.0;
};

struct PellerOptions {
  int radial_points = 96;  // Gauss-Legendre points in |u| per subinterval
  int simplex_degree = 16;  // per-axis degree of the rule on Delta_{k-1}
};

inline constexpr int kMaxPellerOrder = 3;

/// i^k sum_j int_{u in R_+^k, |u| <= sigma} (prod_{m<j} e^{i l_m u_m}) (f * mu_|u|)(l_j)
///   e^{-i l_j |u|} (prod_{m>j} e^{i l_m u_{m-1}}) du.
/// Throws BandTypeUnsupported for symmetric bands, UnsupportedOrder for k outside 1..3.
cplx peller_divdiff(const BandlimitedFunction& f, const NodeVector& lambda, const PellerOptions& opt = {});

/// The individual j-terms of the representation (they sum to peller_divdiff).
std::vector<cplx> peller_terms(const BandlimitedFunction& f, const NodeVector& lambda, const PellerOptions& opt = {});

/// The same integrand integrated over sigma < |u| <= 2 sigma (vanishes in theory).
cplx peller_outer_shell(const BandlimitedFunction& f, const NodeVector& lambda, const PellerOptions& opt = {});

/// Symmetric bands: split f-hat into its xi >= 0 and xi < 0 parts; the negative
/// part is reflected (x -> -x), represented, and reflected back.
cplx peller_divdiff_split(const BandlimitedFunction& f, const NodeVector& lambda, const PellerOptions& opt = {});

}  // namespace opcalc
