#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "opcalc/scalar_function.hpp"
#include "opcalc/spectral.hpp"
#include "opcalc/types.hpp"

namespace opcalc {

inline constexpr int kMaxDerivativeOrder = 4;

/// D^k f(a)(b_1, ..., b_k) with k = directions.size().
struct DerivativeRequest {
  ScalarFunction f;
  Matrix a;
  std::vector<Matrix> directions;

  int order() const { return static_cast<int>(directions.size()); }
  /// Throws UnsupportedOrder (k < 1), OrderTooHigh, DimensionMismatch, NonHermitianInput.
  void validate() const;
};

/// sum over permutations gamma of f^[k](a, ..., a) # (b_gamma(1), ..., b_gamma(k)).
Matrix frechet_derivative(const DerivativeRequest& req);
/// Same, reusing a decomposition of a.
Matrix frechet_derivative(const ScalarFunction& f, const SpectralDecomposition& da,
                          const std::vector<Matrix>& directions);

/// f^[k](a, ..., a) # (b, ..., b).
Matrix divdiff_moi_equal_directions(const ScalarFunction& f, const SpectralDecomposition& da, const Matrix& b,
                                    int k);

/// eps^(1/(k+4)) * max(1, ||a||) / ||b||.
double default_fd_step(const Matrix& a, const Matrix& b, int k);

/// Fourth-order central difference of d^k/dt^k f(a + t b) at t = 0, k in 1..4.
/// Throws OrderTooHigh, DomainError (h <= 0).
Matrix gateaux_fd_oracle(const ScalarFunction& f, const Matrix& a, const Matrix& b, int k,
                         std::optional<double> h = std::nullopt);

struct DaletskiiKreinResult {
  Matrix derivative;         // frechet_derivative at (b, ..., b)
  Matrix oracle;             // finite-difference oracle
  double fd_residual = 0.0;  // ||derivative - oracle|| / (1 + ||derivative||)
  /// ||derivative - k! f^[k](a..a) # (b..b)|| / (1 + ||derivative||)
  double collapse_residual = 0.0;
};

DaletskiiKreinResult daletskii_krein_check(const ScalarFunction& f, const Matrix& a, const Matrix& b, int k,
                                           std::optional<double> h = std::nullopt);

/// Largest ||D(b) - D(b_perm)|| / (1 + ||D(b)||) over all permutations of the directions.
double derivative_symmetry_check(const DerivativeRequest& req);

/// ||D^k f(a + c_i) - D^k f(a)|| estimated as the maximum over `samples` seeded
/// random Hermitian direction tuples of unit Schatten-2 norm (operator norm of the difference).
std::vector<double> derivative_continuity_probe(const ScalarFunction& f, const Matrix& a, int k,
                                                const std::vector<Matrix>& c_sequence,
                                                std::uint64_t seed = 7, int samples = 32);

}  // namespace opcalc
