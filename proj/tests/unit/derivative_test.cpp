#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "matrix_assertions.hpp"
#include "opcalc/catalog.hpp"
#include "opcalc/derivative.hpp"
#include "opcalc/errors.hpp"
#include "opcalc/moi.hpp"
#include "opcalc/random.hpp"
#include "test_support.hpp"

namespace {

using namespace opcalc;
using test_support::diag;
using test_support::MatrixNear;

double factorial(int n) { return std::tgamma(n + 1.0); }

TEST(Frechet, SquareFunction) {
  RandomStream rng(61);
  const Matrix a = random_hermitian(rng, 4);
  const Matrix b1 = random_hermitian(rng, 4);
  const Matrix b2 = random_hermitian(rng, 4);
  EXPECT_TRUE(MatrixNear(frechet_derivative({monomial(2), a, {b1}}), a * b1 + b1 * a, 1e-12));
  EXPECT_TRUE(MatrixNear(frechet_derivative({monomial(2), a, {b1, b2}}), b1 * b2 + b2 * b1, 1e-12));
  EXPECT_TRUE(MatrixNear(frechet_derivative({monomial(2), a, {b1, b2, b1}}), Matrix::Zero(4, 4), 1e-11));
}

TEST(Frechet, ExponentialDaletskiiKreinEntries) {
  const Matrix a = diag({0.0, std::log(2.0)});
  const Matrix b = test_support::pauli_x();
  Matrix expected = Matrix::Zero(2, 2);
  expected(0, 1) = expected(1, 0) = (2.0 - 1.0) / std::log(2.0);
  EXPECT_TRUE(MatrixNear(frechet_derivative({exponential(), a, {b}}), expected, 1e-14));
}

TEST(Frechet, OutputHermitianForRealFunction) {
  RandomStream rng(62);
  const Matrix a = random_hermitian(rng, 5);
  const std::vector<Matrix> dirs{random_hermitian(rng, 5), random_hermitian(rng, 5)};
  const Matrix d = frechet_derivative({cosine(), a, dirs});
  EXPECT_LE((d - d.adjoint()).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Frechet, Validation) {
  const Matrix a = diag({0.0, 1.0});
  const std::vector<Matrix> too_many(static_cast<std::size_t>(kMaxDerivativeOrder) + 1, a);
  try {
    frechet_derivative({exponential(), a, too_many});
    FAIL() << "expected OrderTooHigh";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OrderTooHigh);
  }
  EXPECT_THROW(frechet_derivative({exponential(), a, {Matrix::Identity(3, 3)}}), Error);
}

// The stencil must differentiate low-degree polynomials exactly: on a 1x1
// operator with unit direction, d^k/dt^k (x + t)^m = m!/(m-k)! x^{m-k}.
TEST(GateauxOracle, StencilExactOnMonomials) {
  for (int k = 1; k <= 4; ++k) {
    for (int m = 0; m <= k + 3; ++m) {
      for (double x : {-0.8, 0.3, 1.4}) {
        Matrix a(1, 1), b(1, 1);
        a(0, 0) = x;
        b(0, 0) = 1.0;
        const double expected = m < k ? 0.0 : factorial(m) / factorial(m - k) * std::pow(x, m - k);
        const cplx got = gateaux_fd_oracle(monomial(m), a, b, k, 0.1)(0, 0);
        EXPECT_NEAR(got.real(), expected, 1e-9 * std::max(1.0, std::abs(expected))) << "k=" << k << " m=" << m;
      }
    }
  }
}

TEST(GateauxOracle, PolynomialExpansions) {
  RandomStream rng(63);
  const Matrix a = random_hermitian(rng, 4);
  const Matrix b = random_hermitian(rng, 4);
  EXPECT_TRUE(MatrixNear(gateaux_fd_oracle(monomial(2), a, b, 1), a * b + b * a, 1e-12));
  EXPECT_TRUE(
      MatrixNear(gateaux_fd_oracle(monomial(3), a, b, 2, 1e-2), 2.0 * (a * b * b + b * a * b + b * b * a), 1e-10));
}

TEST(GateauxOracle, AgreesWithMoiAtThirdOrder) {
  RandomStream rng(64);
  const Matrix a = random_hermitian(rng, 4);
  const Matrix b = random_hermitian(rng, 4);
  const Matrix fd = gateaux_fd_oracle(exponential(), a, b, 3, 5e-2);
  const Matrix moi = factorial(3) * divdiff_moi_equal_directions(exponential(), spectral_decompose(a), b, 3);
  EXPECT_LE(operator_norm(fd - moi), 1e-5 * operator_norm(moi));
}

TEST(DaletskiiKrein, CatalogFirstOrder) {
  for (const auto& f : test_support::catalog_functions()) {
    RandomStream rng(65);
    const Matrix a = random_hermitian(rng, 5);
    const Matrix b = random_hermitian(rng, 5);
    const auto r = daletskii_krein_check(f, a, b, 1);
    EXPECT_LE(r.fd_residual, 1e-8) << f.name();
    EXPECT_LE(r.collapse_residual, 1e-12) << f.name();
  }
}

TEST(DaletskiiKrein, PolynomialAndZeroDirection) {
  RandomStream rng(66);
  const Matrix a = random_hermitian(rng, 4);
  const Matrix b = random_hermitian(rng, 4);
  const std::vector<double> coeffs{0.5, -1.0, 0.25, 0.1};
  for (int k = 1; k <= 3; ++k) {
    // Degree <= k: the k-th derivative of t -> f(a + tb) does not depend on t,
    // so the stencil has no truncation error and a unit-scale step keeps the
    // roundoff amplification 1/h^k small.
    const double h = 0.5 / operator_norm(b);
    for (int degree = 0; degree <= k; ++degree) {
      const auto p = polynomial(std::vector<double>(coeffs.begin(), coeffs.begin() + degree + 1));
      EXPECT_LE(daletskii_krein_check(p, a, b, k, h).fd_residual, 1e-10) << "k=" << k << " degree=" << degree;
    }
    const auto zero = daletskii_krein_check(exponential(), a, Matrix::Zero(4, 4), k);
    EXPECT_EQ(operator_norm(zero.derivative), 0.0);
    EXPECT_EQ(zero.fd_residual, 0.0);
  }
}

TEST(DaletskiiKrein, OracleAgreementOverRandomPairs) {
  const auto fs = test_support::catalog_functions();
  for (int t = 0; t < 100; ++t) {
    RandomStream rng(67, static_cast<std::uint64_t>(t));
    const auto& f = fs[static_cast<std::size_t>(t) % fs.size()];
    const int n = 2 + t % 5;
    const int k = 1 + t % 3;
    const auto r = daletskii_krein_check(f, random_hermitian(rng, n), random_hermitian(rng, n), k);
    EXPECT_LE(r.fd_residual, 1e-5) << f.name() << " k=" << k;
    EXPECT_LE(r.collapse_residual, 1e-12) << f.name() << " k=" << k;
  }
}

TEST(Frechet, RichardsonSlopeOfFirstOrderRemainder) {
  for (const char* name : {"exp", "sin", "expi:1", "cube"}) {
    const auto f = make_function(name);
    RandomStream rng(68);
    const Matrix a = random_hermitian(rng, 5);
    const Matrix b = random_hermitian(rng, 5);
    const Matrix fa = apply_function(f, a);
    const Matrix d = frechet_derivative({f, a, {b}});
    std::vector<double> remainders;
    for (double eps : {4e-2, 2e-2, 1e-2}) {
      const Matrix shifted = a + eps * b;
      remainders.push_back(operator_norm(apply_function(f, shifted) - fa - eps * d));
    }
    EXPECT_GE(std::log2(remainders[0] / remainders[1]), 1.9) << name;
    EXPECT_GE(std::log2(remainders[1] / remainders[2]), 1.9) << name;
  }
}

TEST(Frechet, SymmetryUnderDirectionPermutations) {
  RandomStream rng(69);
  const Matrix a = random_hermitian(rng, 4);
  const std::vector<Matrix> two{random_hermitian(rng, 4), random_hermitian(rng, 4)};
  const std::vector<Matrix> three{two[0], two[1], random_hermitian(rng, 4)};
  EXPECT_LE(derivative_symmetry_check({exponential(), a, two}), 1e-12);
  EXPECT_LE(derivative_symmetry_check({exponential(), a, three}), 1e-12);
  EXPECT_LE(derivative_symmetry_check({make_function("expi:-1.5"), a, three}), 1e-12);
}

TEST(Frechet, EqualDirectionsCollapseToFactorial) {
  RandomStream rng(70);
  const Matrix a = random_hermitian(rng, 5);
  const Matrix b = random_hermitian(rng, 5);
  const auto da = spectral_decompose(a);
  for (int k = 1; k <= 4; ++k) {
    const Matrix full = frechet_derivative(sine(), da, std::vector<Matrix>(static_cast<std::size_t>(k), b));
    const Matrix single = factorial(k) * divdiff_moi_equal_directions(sine(), da, b, k);
    EXPECT_TRUE(MatrixNear(full, single, 1e-12 * std::max(1.0, operator_norm(full)))) << k;
  }
}

TEST(Frechet, SchattenNormBoundFromWienerDecomposition) {
  for (int t = 0; t < 40; ++t) {
    RandomStream rng(71, static_cast<std::uint64_t>(t));
    const auto mu = test_support::random_measure(rng, 3, 2.5);
    const auto f = wiener_function(mu);
    const int k = 1 + t % 3;
    const Matrix a = random_hermitian(rng, 4);
    std::vector<Matrix> dirs;
    for (int j = 0; j < k; ++j) dirs.push_back(random_hermitian(rng, 4));
    const Matrix d = frechet_derivative({f, a, dirs});
    const double sup = ipd_wiener(mu, k).sup_bound();
    for (double p : {1.0, 2.0, 4.0}) {
      const auto spec = NormSpec::schatten(p);
      double bound = factorial(k) * sup;
      for (const auto& b : dirs) bound *= ideal_norm(b, spec);
      EXPECT_LE(ideal_norm(d, spec), bound * (1.0 + 1e-10)) << "p=" << p << " k=" << k;
    }
  }
}

TEST(ContinuityProbe, Examples) {
  RandomStream rng(72);
  const Matrix a = random_hermitian(rng, 4);
  const std::vector<Matrix> zeros(4, Matrix::Zero(4, 4));
  for (double v : derivative_continuity_probe(exponential(), a, 2, zeros)) EXPECT_EQ(v, 0.0);

  const Matrix c = random_hermitian(rng, 4);
  std::vector<Matrix> seq;
  for (int i = 1; i <= 6; ++i) seq.push_back(std::pow(10.0, -i) * c);
  for (double v : derivative_continuity_probe(monomial(2), a, 2, seq)) EXPECT_LE(v, 1e-12);

  const auto values = derivative_continuity_probe(exponential(), a, 2, seq);
  ASSERT_EQ(values.size(), 6u);
  for (std::size_t i = 1; i < values.size(); ++i) EXPECT_LT(values[i], values[i - 1]);
  EXPECT_LE(values.back(), values.front() * 1e-3);
}

}  // namespace
