#include <gtest/gtest.h>

#include <cmath>

#include "opcalc/catalog.hpp"
#include "opcalc/errors.hpp"
#include "opcalc/littlewood_paley.hpp"
#include "opcalc/random.hpp"
#include "test_support.hpp"

namespace {

using namespace opcalc;

// Grid on which integer frequencies are exact DFT bins (lattice 1/32).
const GridSpec kPeriodicSpec{-32.0 * kPi, 32.0 * kPi, std::size_t{1} << 14};

TEST(LittlewoodPaley, BumpShape) {
  EXPECT_EQ(lp_bump(0.0), 1.0);
  EXPECT_EQ(lp_bump(1.0), 1.0);
  EXPECT_EQ(lp_bump(-0.7), 1.0);
  EXPECT_EQ(lp_bump(2.0), 0.0);
  EXPECT_EQ(lp_bump(-3.0), 0.0);
  EXPECT_NEAR(lp_bump(1.5), 0.5, 1e-15);  // symmetric transition
  double previous = 1.0;
  for (double xi = 1.0; xi <= 2.0; xi += 1.0 / 64) {
    EXPECT_LE(lp_bump(xi), previous);
    EXPECT_EQ(lp_bump(xi), lp_bump(-xi));
    previous = lp_bump(xi);
  }
}

TEST(LittlewoodPaley, BlockSymbolsPartitionUnity) {
  for (int j_min : {-4, -1, 0}) {
    const int j_max = 6;
    for (double xi = 0.0; xi <= std::ldexp(1.0, j_max); xi += 0.0137) {
      double sum = lp_bump(std::ldexp(xi, -j_min + 1));
      for (int j = j_min; j <= j_max; ++j) sum += lp_block_symbol(j, xi);
      EXPECT_NEAR(sum, 1.0, 1e-12) << "xi=" << xi;
    }
  }
  for (int j = -3; j <= 4; ++j) {
    EXPECT_EQ(lp_block_symbol(j, 0.0), 0.0);
    EXPECT_EQ(lp_block_symbol(j, 0.99 * std::ldexp(1.0, j - 1)), 0.0);
    EXPECT_EQ(lp_block_symbol(j, 1.01 * std::ldexp(1.0, j + 1)), 0.0);
  }
}

TEST(LittlewoodPaley, ReconstructionAndPartition) {
  for (int t = 0; t < 5; ++t) {
    RandomStream rng(111, static_cast<std::uint64_t>(t));
    const auto f = test_support::random_bandlimited_grid(rng, 16.0);
    const auto lp = littlewood_paley_blocks(f, -6, 5);
    EXPECT_LE((lp.reconstruct() - f).sup_norm(), 1e-8);
    EXPECT_LE(lp.partition_error, 1e-10);
    EXPECT_LE(lp.leakage, 1e-6);
  }
}

TEST(LittlewoodPaley, ConstantHasNoBlocks) {
  const auto f = GridFunction::sample([](double) { return cplx(2.5, -1.0); });
  const auto lp = littlewood_paley_blocks(f, -3, 4);
  for (int j = -3; j <= 4; ++j) EXPECT_LE(lp.block(j).sup_norm(), 1e-12);
  EXPECT_LE((lp.low_pass - f).sup_norm(), 1e-12);
}

TEST(LittlewoodPaley, RangeTooNarrow) {
  RandomStream rng(112);
  const auto f = test_support::random_bandlimited_grid(rng, 16.0);
  try {
    littlewood_paley_blocks(f, -6, 1);  // blocks reach only |xi| <= 4
    FAIL() << "expected RangeTooNarrow";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::RangeTooNarrow);
  }
}

TEST(Besov, ExponentialHasSingleBlock) {
  const auto f = GridFunction::sample(exp_i(1.0), kPeriodicSpec);
  const auto report = besov_seminorm(f, 1, -4, 6);
  ASSERT_EQ(report.block_sup.size(), 11u);
  for (int j = -4; j <= 6; ++j) {
    const double sup = report.block_sup[static_cast<std::size_t>(j + 4)];
    if (j == 0) {
      EXPECT_NEAR(sup, 1.0, 1e-12);
    } else {
      EXPECT_LE(sup, 1e-12) << "j=" << j;
    }
  }
  EXPECT_NEAR(report.seminorm, 1.0, 1e-12);
  EXPECT_EQ(report.k, 1);
}

TEST(Besov, DetrendedPolynomialVanishes) {
  const auto g = GridFunction::sample(polynomial({0.3, -1.0, 0.02}));
  const auto d = detrend(g, 2);
  EXPECT_LE(d.sup_norm(), 1e-9 * g.sup_norm());
  EXPECT_LE(besov_seminorm(d, 2, -4, 9).seminorm, 1e-6 * g.sup_norm());
}

TEST(Besov, DilationScalingLaw) {
  const GridSpec spec{-64.0, 64.0, std::size_t{1} << 15};
  for (int k = 1; k <= 3; ++k) {
    const auto f = GridFunction::sample(gauss_band(3.0, 0.4), spec);
    const auto g = GridFunction::sample([](double x) { return gauss_band(3.0, 0.4)(2.0 * x); }, spec);
    const double sf = besov_seminorm(f, k, -6, 5).seminorm;
    const double sg = besov_seminorm(g, k, -5, 6).seminorm;
    EXPECT_NEAR(sg / sf, std::ldexp(1.0, k), 0.05 * std::ldexp(1.0, k)) << "k=" << k;
  }
}

TEST(Bernstein, ConstantsAndExponential) {
  for (int k = 1; k <= 3; ++k) EXPECT_GE(bernstein_constant(k), 1.0);
  EXPECT_GT(block_kernel_l1(), 1.0);
  for (double r_prime : {0.5, 2.0, 7.0}) {
    const auto u = GridFunction::sample(exp_i(r_prime), kPeriodicSpec);
    const auto check = bernstein_check(u, 7.0, 1);
    EXPECT_TRUE(check);
    EXPECT_NEAR(check.lhs, r_prime, 1e-9 * r_prime);
  }
  const auto constant = GridFunction::sample([](double) { return cplx(1.0); });
  const auto c = bernstein_check(constant, 1.0, 2);
  EXPECT_TRUE(c);
  EXPECT_LE(c.lhs, 1e-12);
}

TEST(Bernstein, RandomTrigPolynomials) {
  for (int t = 0; t < 50; ++t) {
    RandomStream rng(113, static_cast<std::uint64_t>(t));
    const double radius = rng.uniform(0.5, 16.0);
    EXPECT_TRUE(bernstein_check(test_support::random_trig_polynomial(rng, radius), radius, 1 + t % 3));
  }
}

TEST(Bernstein, RejectsOutOfBandInput) {
  const auto u = GridFunction::sample(exp_i(5.0), kPeriodicSpec);
  EXPECT_THROW(bernstein_check(u, 2.0, 1), Error);
}

TEST(SeriesBound, RandomBandlimited) {
  for (int t = 0; t < 10; ++t) {
    RandomStream rng(114, static_cast<std::uint64_t>(t));
    const auto f = test_support::random_bandlimited_grid(rng, 16.0);
    for (int k = 1; k <= 3; ++k) EXPECT_TRUE(series_bound_check(f, k, -6, 5)) << "k=" << k;
  }
}

}  // namespace
