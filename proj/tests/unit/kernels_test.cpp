#include <gtest/gtest.h>

#include <cmath>

#include "opcalc/catalog.hpp"
#include "opcalc/errors.hpp"
#include "opcalc/kernels.hpp"
#include "opcalc/quadrature.hpp"
#include "opcalc/random.hpp"
#include "test_support.hpp"

namespace {

using namespace opcalc;

template <class F>
double integrate_pieces(F&& f, double a, double b, int pieces, std::size_t points = 24) {
  const auto rule = gauss_legendre(points, -1.0, 1.0);
  double sum = 0.0;
  const double half = 0.5 * (b - a) / pieces;
  for (int p = 0; p < pieces; ++p) {
    const double mid = a + (2 * p + 1) * half;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) sum += half * rule.weights[i] * f(mid + half * rule.nodes[i]);
  }
  return sum;
}

TEST(Kernels, FourierSymbols) {
  EXPECT_EQ(kernel_r_hat(1.0, 0.5), 1.0);
  EXPECT_EQ(kernel_r_hat(1.0, 2.0), 0.5);
  EXPECT_EQ(kernel_r_hat(3.0, -6.0), 0.5);
  EXPECT_EQ(kernel_r_hat(2.0, 2.0), 1.0);
  EXPECT_EQ(kernel_mu_hat(1.0, 0.5), 0.0);
  EXPECT_EQ(kernel_mu_hat(1.0, -4.0), 0.75);
  EXPECT_EQ(kernel_mu_hat(0.0, 5.0), 0.0);
  EXPECT_THROW(kernel_r_hat(-1.0, 0.0), Error);
}

// int r_1(y) exp(-y^2/2) dy computed in space (graded rule at the logarithmic
// singularity) must equal (1/2pi) int r1-hat(xi) sqrt(2pi) exp(-xi^2/2) dxi.
TEST(Kernels, SpatialKernelMatchesFourierSymbol) {
  double spatial = 0.0;
  for (int m = 0; m < 60; ++m) {
    const double hi = std::ldexp(1.0, -m);
    spatial += integrate_pieces([](double y) { return kernel_r1(y) * std::exp(-0.5 * y * y); }, 0.5 * hi, hi, 1);
  }
  spatial += integrate_pieces([](double y) { return kernel_r1(y) * std::exp(-0.5 * y * y); }, 1.0, 40.0, 78);
  spatial *= 2.0;
  const double inner = integrate_pieces([](double xi) { return std::exp(-0.5 * xi * xi); }, 0.0, 1.0, 4);
  const double outer = integrate_pieces([](double xi) { return std::exp(-0.5 * xi * xi) / xi; }, 1.0, 40.0, 78);
  const double spectral = 2.0 / std::sqrt(2.0 * kPi) * (inner + outer);
  EXPECT_NEAR(spatial, spectral, 1e-10);
}

TEST(Kernels, NormEstimates) {
  const auto norms = r1_norm_estimates();
  EXPECT_NEAR(norms.l2, std::sqrt(2.0 / kPi), 1e-4);
  EXPECT_NEAR(norms.l2_plancherel, std::sqrt(2.0 / kPi), 1e-10);
  EXPECT_LT(norms.l1, 2.0);
  EXPECT_LE(norms.l1, 2.0 / std::sqrt(kPi) + 2.0 / kPi + 0.05);
  EXPECT_GT(norms.l1, norms.l1_tail);
}

TEST(ConvolveMu, ZeroParameterGivesZero) {
  RandomStream rng(101);
  const auto f = test_support::random_bandlimited_grid(rng, 8.0);
  const auto g = convolve_mu(f, 0.0);
  for (const auto& v : g.samples()) EXPECT_EQ(v, cplx(0.0, 0.0));
}

TEST(ConvolveMu, VanishesAboveTheBand) {
  for (int t = 0; t < 10; ++t) {
    RandomStream rng(102, static_cast<std::uint64_t>(t));
    const auto f = test_support::random_bandlimited_grid(rng, 12.0);
    const double sigma = f.band->hi;
    EXPECT_LE(convolve_mu(f, sigma * 1.01).sup_norm(), 1e-6 * f.sup_norm());
  }
}

TEST(ConvolveMu, ThreeTimesSupBound) {
  for (int t = 0; t < 30; ++t) {
    RandomStream rng(103, static_cast<std::uint64_t>(t));
    const auto f = test_support::random_bandlimited_grid(rng, 16.0);
    for (double u : {0.1, 1.0, 3.7, 12.0}) EXPECT_LE(convolve_mu(f, u).sup_norm(), 3.0 * f.sup_norm());
  }
}

TEST(ConvolveMu, GridTooCoarse) {
  auto f = GridFunction::sample([](double x) { return cplx(std::exp(-x * x)); });
  f.band = BandInfo{-2.0 * f.nyquist(), 2.0 * f.nyquist(), BandType::symmetric};
  try {
    convolve_mu(f, 1.0);
    FAIL() << "expected GridTooCoarse";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::GridTooCoarse);
  }
}

// Frequency-domain oracle on the real line for a Gaussian:
// (f * r_u)(x) = (1/pi) int_0^inf sqrt(2pi) exp(-xi^2/2) r-hat_u(xi) cos(xi x) dxi.
TEST(ConvolveR, MatchesContinuousOracleForGaussian) {
  const GridSpec spec{-512.0, 512.0, std::size_t{1} << 16};
  const auto f = GridFunction::sample([](double x) { return cplx(std::exp(-0.5 * x * x)); }, spec);
  for (double u : {0.5, 1.0, 2.5}) {
    const auto g = convolve_r(f, u);
    for (double x : {-3.0, 0.0, 1.25, 7.5}) {
      const auto integrand = [u, x](double xi) {
        return std::sqrt(2.0 * kPi) * std::exp(-0.5 * xi * xi) * kernel_r_hat(u, xi) * std::cos(xi * x);
      };
      const double oracle = (integrate_pieces(integrand, 0.0, u, 16) + integrate_pieces(integrand, u, 40.0, 400)) / kPi;
      EXPECT_NEAR(g.interpolate(x).real(), oracle, 1e-5) << "u=" << u << " x=" << x;
    }
  }
}

// r_u = u r_1(u .): with g(t) = f(t/u) on a grid of u-times the length,
// (f * r_u)(x) = (g * r_1)(u x).
TEST(ConvolveR, KernelScaling) {
  const auto packet = [](double x) { return std::exp(cplx(-0.3 * (x - 2.0) * (x - 2.0), 3.0 * x)); };
  const GridSpec base{-64.0, 64.0, std::size_t{1} << 14};
  for (double u : {2.0, 4.0}) {
    const GridSpec stretched{base.lo * u, base.hi * u, base.size};
    const auto f = GridFunction::sample(packet, base);
    const auto g = GridFunction::sample([&](double t) { return packet(t / u); }, stretched);
    const auto fr = convolve_r(f, u);
    const auto gr = convolve_r(g, 1.0);
    double worst = 0.0;
    for (std::size_t n = 0; n < f.size(); n += 7) worst = std::max(worst, std::abs(fr[n] - gr[n]));
    EXPECT_LE(worst, 1e-8) << "u=" << u;
  }
}

TEST(ConvolveMu, IsComplementOfConvolveR) {
  RandomStream rng(104);
  const auto f = test_support::random_bandlimited_grid(rng, 10.0);
  const auto sum = convolve_mu(f, 2.0) + convolve_r(f, 2.0);
  EXPECT_LE((sum - f).sup_norm(), 1e-12 * f.sup_norm());
}

// (g * mu_v)(x) = (f * mu_{u+v})(x) e^{-i x u} for g(x) = (f * mu_u)(x) e^{-i x u};
// f has its spectrum on the positive half-line (the identity fails for negative
// frequencies with the even kernel); u is taken on the DFT lattice so the
// modulation is an exact bin shift.
TEST(ConvolveMu, ShiftIdentity) {
  const GridSpec spec;
  const double lattice = 2.0 * kPi / (spec.hi - spec.lo);
  for (int t = 0; t < 10; ++t) {
    RandomStream rng(105, static_cast<std::uint64_t>(t));
    std::vector<std::pair<ScalarFunction, double>> packets;
    for (int i = 0; i < 3; ++i) {
      const double w = rng.uniform(0.3, 0.7);
      packets.emplace_back(gauss_band(rng.uniform(7.0 * w, 12.0), w), rng.uniform(-20.0, 20.0));
    }
    const auto f = GridFunction::sample(
        [&packets](double x) {
          cplx sum{};
          for (const auto& [g, shift] : packets) sum += g(x - shift);
          return sum;
        },
        spec);
    const double u = lattice * rng.uniform_int(10, 400);
    const double v = rng.uniform(0.1, 6.0);
    const auto fu = convolve_mu(f, u);
    std::vector<cplx> modulated(f.size());
    for (std::size_t n = 0; n < f.size(); ++n) modulated[n] = fu[n] * std::exp(cplx(0.0, -u * f.x(n)));
    const GridFunction g(modulated, f.spacing(), f.origin());
    const auto lhs = convolve_mu(g, v);
    const auto fuv = convolve_mu(f, u + v);
    double worst = 0.0;
    for (std::size_t n = 0; n < f.size(); ++n) {
      worst = std::max(worst, std::abs(lhs[n] - fuv[n] * std::exp(cplx(0.0, -u * f.x(n)))));
    }
    EXPECT_LE(worst, 1e-6 * std::max(1.0, f.sup_norm())) << "u=" << u << " v=" << v;
  }
}

}  // namespace
