#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "opcalc/scalar_function.hpp"

namespace opcalc {

/// Highest derivative order exposed by catalog entries.
inline constexpr int kCatalogMaxOrder = 8;

/// Coefficients in ascending order: c0 + c1 x + c2 x^2 + ...
ScalarFunction polynomial(std::vector<double> coeffs, std::string name_override = {});
ScalarFunction monomial(int degree);
ScalarFunction exponential();
ScalarFunction sine();
ScalarFunction cosine();
/// exp(i xi x); carries the Lipschitz bound |xi| and its one-atom Wiener measure.
ScalarFunction exp_i(double xi);
/// x -> sum_j c_j exp(i xi_j x) with exact derivatives.
ScalarFunction wiener_function(const DiscreteWienerMeasure& measure);
/// exp(-w^2 x^2 / 2 + i c x); spectrum is a Gaussian centred at c with width w,
/// declared band [c - 7w, c + 7w].
ScalarFunction gauss_band(double center, double width);

/// Parses a catalog name: sq, cube, exp, sin, cos, poly:<c0,c1,...>, expi:<xi>,
/// wiener:<xi:re[:im],...>, gauss-band:<center,width>. Throws ParseError.
ScalarFunction make_function(std::string_view spec);

/// Names of the built-in entries used by default campaigns.
std::vector<std::string_view> default_catalog_names();

}  // namespace opcalc
