#include "opcalc/derivative.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <numeric>

#include "opcalc/divided_difference.hpp"
#include "opcalc/errors.hpp"
#include "opcalc/moi.hpp"
#include "opcalc/random.hpp"

namespace opcalc {
namespace {

void check_order(int k) {
  if (k < 1) fail(ErrorKind::UnsupportedOrder, "derivative order must be >= 1");
  if (k > kMaxDerivativeOrder) {
    fail(ErrorKind::OrderTooHigh, "derivative order exceeds " + std::to_string(kMaxDerivativeOrder));
  }
}

// f^[k] with a cache keyed by the sorted node tuple, shared by all permutation terms.
MultiSymbol memoized_divdiff(const ScalarFunction& f) {
  auto cache = std::make_shared<std::map<std::vector<double>, cplx>>();
  return [f, cache](std::span<const double> x) {
    std::vector<double> key(x.begin(), x.end());
    std::sort(key.begin(), key.end());
    auto it = cache->find(key);
    if (it == cache->end()) it = cache->emplace(key, divided_difference(f, key)).first;
    return it->second;
  };
}

// Stencils on t = m h, m = -3..3, for the k-th derivative (O(h^4)).
struct Stencil {
  std::array<double, 7> coeffs;
  double denom;
};

const Stencil& stencil(int k) {
  static const std::array<Stencil, 4> table{{
      {{0.0, 1.0, -8.0, 0.0, 8.0, -1.0, 0.0}, 12.0},
      {{0.0, -1.0, 16.0, -30.0, 16.0, -1.0, 0.0}, 12.0},
      {{1.0, -8.0, 13.0, 0.0, -13.0, 8.0, -1.0}, 8.0},
      {{-1.0, 12.0, -39.0, 56.0, -39.0, 12.0, -1.0}, 6.0},
  }};
  return table[static_cast<std::size_t>(k) - 1];
}

}  // namespace

void DerivativeRequest::validate() const {
  check_order(order());
  HermitianOperator checked(a);
  for (const auto& b : directions) {
    if (b.rows() != a.rows() || b.cols() != a.cols()) {
      fail(ErrorKind::DimensionMismatch, "direction shape differs from a");
    }
  }
}

Matrix frechet_derivative(const ScalarFunction& f, const SpectralDecomposition& da,
                          const std::vector<Matrix>& directions) {
  const int k = static_cast<int>(directions.size());
  check_order(k);
  const MultiSymbol symbol = memoized_divdiff(f);
  const DecompositionList decomps(static_cast<std::size_t>(k) + 1, std::cref(da));

  std::vector<std::size_t> perm(directions.size());
  std::iota(perm.begin(), perm.end(), 0);
  Matrix sum = Matrix::Zero(da.dim(), da.dim());
  std::vector<Matrix> permuted(directions.size());
  do {
    for (std::size_t i = 0; i < perm.size(); ++i) permuted[i] = directions[perm[i]];
    sum += moi_direct({symbol, decomps, permuted, true});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

Matrix frechet_derivative(const DerivativeRequest& req) {
  req.validate();
  return frechet_derivative(req.f, spectral_decompose(req.a), req.directions);
}

Matrix divdiff_moi_equal_directions(const ScalarFunction& f, const SpectralDecomposition& da, const Matrix& b,
                                    int k) {
  const DecompositionList decomps(static_cast<std::size_t>(k) + 1, std::cref(da));
  return moi_direct({memoized_divdiff(f), decomps, std::vector<Matrix>(static_cast<std::size_t>(k), b), true});
}

double default_fd_step(const Matrix& a, const Matrix& b, int k) {
  const double nb = operator_norm(b);
  if (nb == 0.0) return 1.0;
  return std::pow(std::numeric_limits<double>::epsilon(), 1.0 / (k + 4)) * std::max(1.0, operator_norm(a)) / nb;
}

Matrix gateaux_fd_oracle(const ScalarFunction& f, const Matrix& a, const Matrix& b, int k, std::optional<double> h) {
  check_order(k);
  const double step = h.value_or(default_fd_step(a, b, k));
  if (!(step > 0.0)) fail(ErrorKind::DomainError, "finite-difference step must be positive");
  // t -> f(a + t*0) is constant; the stencil would only contribute roundoff.
  if (b.isZero(0.0)) return Matrix::Zero(a.rows(), a.cols());
  const Stencil& s = stencil(k);
  Matrix sum = Matrix::Zero(a.rows(), a.cols());
  for (int m = -3; m <= 3; ++m) {
    const double coeff = s.coeffs[static_cast<std::size_t>(m + 3)];
    if (coeff == 0.0) continue;
    sum += coeff * apply_function(f, a + (m * step) * b);
  }
  return sum / (s.denom * std::pow(step, k));
}

DaletskiiKreinResult daletskii_krein_check(const ScalarFunction& f, const Matrix& a, const Matrix& b, int k,
                                           std::optional<double> h) {
  check_order(k);
  const SpectralDecomposition da = spectral_decompose(a);
  DaletskiiKreinResult out;
  out.derivative = frechet_derivative(f, da, std::vector<Matrix>(static_cast<std::size_t>(k), b));
  out.oracle = gateaux_fd_oracle(f, a, b, k, h);
  const double factorial = std::tgamma(k + 1.0);
  const Matrix single = divdiff_moi_equal_directions(f, da, b, k);
  const double scale = 1.0 + operator_norm(out.derivative);
  out.fd_residual = operator_norm(out.derivative - out.oracle) / scale;
  out.collapse_residual = operator_norm(out.derivative - factorial * single) / scale;
  return out;
}

double derivative_symmetry_check(const DerivativeRequest& req) {
  req.validate();
  const SpectralDecomposition da = spectral_decompose(req.a);
  const Matrix reference = frechet_derivative(req.f, da, req.directions);
  const double scale = 1.0 + operator_norm(reference);
  std::vector<std::size_t> perm(req.directions.size());
  std::iota(perm.begin(), perm.end(), 0);
  double worst = 0.0;
  std::vector<Matrix> permuted(perm.size());
  while (std::next_permutation(perm.begin(), perm.end())) {
    for (std::size_t i = 0; i < perm.size(); ++i) permuted[i] = req.directions[perm[i]];
    worst = std::max(worst, operator_norm(reference - frechet_derivative(req.f, da, permuted)) / scale);
  }
  return worst;
}

std::vector<double> derivative_continuity_probe(const ScalarFunction& f, const Matrix& a, int k,
                                                const std::vector<Matrix>& c_sequence, std::uint64_t seed,
                                                int samples) {
  check_order(k);
  std::vector<std::vector<Matrix>> tuples;
  for (int s = 0; s < samples; ++s) {
    RandomStream rng(seed, static_cast<std::uint64_t>(s));
    std::vector<Matrix> dirs;
    for (int j = 0; j < k; ++j) {
      Matrix b = random_hermitian(rng, a.rows());
      dirs.push_back(b / b.norm());  // Frobenius = Schatten-2
    }
    tuples.push_back(std::move(dirs));
  }
  const SpectralDecomposition da = spectral_decompose(a);
  std::vector<Matrix> base;
  for (const auto& dirs : tuples) base.push_back(frechet_derivative(f, da, dirs));

  std::vector<double> out;
  for (const auto& c : c_sequence) {
    const SpectralDecomposition dc = spectral_decompose(a + c);
    double worst = 0.0;
    for (std::size_t s = 0; s < tuples.size(); ++s) {
      worst = std::max(worst, operator_norm(frechet_derivative(f, dc, tuples[s]) - base[s]));
    }
    out.push_back(worst);
  }
  return out;
}

}  // namespace opcalc
