#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "matrix_assertions.hpp"
#include "opcalc/catalog.hpp"
#include "opcalc/errors.hpp"
#include "opcalc/ideal_norms.hpp"
#include "opcalc/random.hpp"
#include "test_support.hpp"

namespace {

using namespace opcalc;
using test_support::diag;

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::UsageError;
}

TEST(IdealNorm, TextbookValues) {
  EXPECT_NEAR(ideal_norm(diag({3.0, 4.0}), NormSpec::schatten(2.0)), 5.0, 1e-14);
  EXPECT_NEAR(ideal_norm(Matrix::Identity(4, 4), NormSpec::schatten(1.0)), 4.0, 1e-14);
  RandomStream rng(81);
  Eigen::VectorXcd u = Eigen::VectorXcd::NullaryExpr(5, [&] { return rng.complex_normal(); });
  u.normalize();
  const Matrix rank_one = u * u.adjoint();
  for (double p : {1.0, 1.5, 2.0, 7.0, HUGE_VAL}) EXPECT_NEAR(ideal_norm(rank_one, NormSpec::schatten(p)), 1.0, 1e-13);
  EXPECT_NEAR(ideal_norm(diag({-3.0, 1.0}), NormSpec::operator_norm()), 3.0, 1e-14);
  EXPECT_NEAR(ideal_norm(diag({-3.0, 1.0, 2.0}), NormSpec::gauge({1.0, 0.5})), 3.0 + 1.0, 1e-14);
}

TEST(IdealNorm, InfiniteExponentIsOperatorNorm) {
  RandomStream rng(82);
  const Matrix a = random_matrix(rng, 5, 5);
  EXPECT_EQ(NormSpec::schatten(HUGE_VAL).kind(), NormSpec::Kind::op);
  EXPECT_NEAR(ideal_norm(a, NormSpec::schatten(HUGE_VAL)), operator_norm(a), 1e-14);
}

TEST(IdealNorm, InvalidSpecs) {
  EXPECT_EQ(kind_of([] { NormSpec::schatten(0.5); }), ErrorKind::InvalidP);
  EXPECT_EQ(kind_of([] { NormSpec::schatten(std::nan("")); }), ErrorKind::InvalidP);
  EXPECT_EQ(kind_of([] { NormSpec::gauge({}); }), ErrorKind::DomainError);
  EXPECT_EQ(kind_of([] { NormSpec::gauge({0.5, 1.0}); }), ErrorKind::DomainError);
  EXPECT_EQ(kind_of([] { NormSpec::parse("p=0.2"); }), ErrorKind::InvalidP);
  EXPECT_EQ(kind_of([] { NormSpec::parse("frobenius"); }), ErrorKind::ParseError);
}

TEST(IdealNorm, ParseRoundTrip) {
  EXPECT_EQ(NormSpec::parse("op").kind(), NormSpec::Kind::op);
  EXPECT_EQ(NormSpec::parse("inf").kind(), NormSpec::Kind::op);
  EXPECT_DOUBLE_EQ(NormSpec::parse("p=2.5").p(), 2.5);
  EXPECT_EQ(NormSpec::parse("gauge:1,0.5").weights(), (std::vector<double>{1.0, 0.5}));
  for (const auto& spec : {NormSpec::operator_norm(), NormSpec::schatten(3.0), NormSpec::gauge({1.0, 0.25})}) {
    const auto again = NormSpec::parse(spec.label());
    EXPECT_EQ(again.kind(), spec.kind());
    EXPECT_EQ(again.label(), spec.label());
  }
}

TEST(SingularValues, TextbookValues) {
  EXPECT_EQ(singular_value_function(diag({-3.0, 1.0})).values.size(), 2u);
  EXPECT_NEAR(singular_value_function(diag({-3.0, 1.0})).values[0], 3.0, 1e-14);
  EXPECT_NEAR(singular_value_function(diag({-3.0, 1.0})).values[1], 1.0, 1e-14);
  for (double v : singular_value_function(Matrix::Zero(3, 3)).values) EXPECT_EQ(v, 0.0);
  Matrix nil = Matrix::Zero(2, 2);
  nil(0, 1) = 2.0;
  const auto mu = singular_value_function(nil);
  EXPECT_NEAR(mu.values[0], 2.0, 1e-14);
  EXPECT_NEAR(mu.values[1], 0.0, 1e-14);
  // Right-continuous step function with unit trace weights.
  EXPECT_NEAR(mu.at(0.0), 2.0, 1e-14);
  EXPECT_NEAR(mu.at(0.999), 2.0, 1e-14);
  EXPECT_NEAR(mu.at(1.0), 0.0, 1e-14);
  EXPECT_NEAR(mu.at(5.0), 0.0, 0.0);
}

TEST(SingularValues, HermitianGivesSortedAbsoluteEigenvalues) {
  RandomStream rng(83);
  const Matrix a = random_hermitian(rng, 6);
  const auto d = spectral_decompose(a, 0.0);
  std::vector<double> expected;
  for (std::size_t c = 0; c < d.clusters(); ++c) {
    const auto rank = static_cast<std::size_t>(std::lround(d.projectors()[c].trace().real()));
    for (std::size_t r = 0; r < rank; ++r) expected.push_back(std::abs(d.eigenvalues()[c]));
  }
  std::sort(expected.rbegin(), expected.rend());
  const auto mu = singular_value_function(a).values;
  ASSERT_EQ(mu.size(), expected.size());
  for (std::size_t i = 0; i < mu.size(); ++i) EXPECT_NEAR(mu[i], expected[i], 1e-12);
}

TEST(DistributionFunction, TextbookValues) {
  const Matrix a = diag({1.0, 2.0, 3.0});
  EXPECT_EQ(distribution_function(a, 1.5), 2);
  EXPECT_EQ(distribution_function(a, 3.0), 0);
  EXPECT_EQ(distribution_function(a, 10.0), 0);
  EXPECT_EQ(distribution_function(a, 0.0), 3);
  EXPECT_EQ(distribution_function(a, 2.0), 1);  // strictly greater
}

TEST(DistributionFunction, GaloisConsistency) {
  for (int t = 0; t < 20; ++t) {
    RandomStream rng(84, static_cast<std::uint64_t>(t));
    Matrix a = random_matrix(rng, 6, 6);
    if (t % 3 == 0) a.col(2).setZero();  // include a zero singular value
    const auto mu = singular_value_function(a);
    for (int i = 0; i < 6; ++i) {
      for (double frac : {0.0, 0.5}) {
        const double time = i + frac;
        EXPECT_NEAR(singular_value_from_distribution(a, time), mu.at(time), 1e-14) << "t=" << time;
      }
    }
  }
}

TEST(Submajorization, TextbookCases) {
  RandomStream rng(85);
  const Matrix b = random_matrix(rng, 4, 4);
  EXPECT_TRUE(submajorization_check(b, b));
  EXPECT_TRUE(submajorization_check(0.5 * b, b));
  EXPECT_FALSE(submajorization_check(diag({2.0, 0.0}), diag({1.0, 1.0})));
  EXPECT_TRUE(submajorization_check(diag({1.0, 1.0}), diag({2.0, 0.0})));
}

TEST(Submajorization, ImpliesGaugeOrdering) {
  int submajorized = 0;
  for (int t = 0; t < 400; ++t) {
    RandomStream rng(86, static_cast<std::uint64_t>(t));
    const Matrix a = random_matrix(rng, 5, 5);
    const Matrix b = random_matrix(rng, 5, 5) * rng.uniform(0.8, 1.6);
    if (!submajorization_check(a, b)) continue;
    ++submajorized;
    for (int g = 0; g < 5; ++g) {
      std::vector<double> w(5);
      for (double& x : w) x = rng.uniform(1e-3, 1.0);
      std::sort(w.rbegin(), w.rend());
      w[0] = 1.0;
      const auto spec = NormSpec::gauge(w);
      EXPECT_LE(ideal_norm(a, spec), ideal_norm(b, spec) + 1e-10);
    }
  }
  EXPECT_GT(submajorized, 50);
}

TEST(IdealNorm, SchattenMonotonicityAndUnitaryInvariance) {
  for (int t = 0; t < 50; ++t) {
    RandomStream rng(87, static_cast<std::uint64_t>(t));
    const Matrix a = random_matrix(rng, 5, 5);
    const std::vector<double> ps{1.0, 1.25, 2.0, 3.0, 8.0, HUGE_VAL};
    for (std::size_t i = 1; i < ps.size(); ++i) {
      EXPECT_LE(ideal_norm(a, NormSpec::schatten(ps[i])), ideal_norm(a, NormSpec::schatten(ps[i - 1])) * (1.0 + 1e-14));
    }
    const Matrix u = random_unitary(rng, 5);
    const Matrix v = random_unitary(rng, 5);
    for (const auto& spec : {NormSpec::schatten(1.0), NormSpec::schatten(3.0), NormSpec::operator_norm(),
                             NormSpec::gauge({1.0, 0.3, 0.1})}) {
      EXPECT_NEAR(ideal_norm(u * a * v, spec), ideal_norm(a, spec), 1e-10);
    }
  }
}

TEST(Inequalities, SymmetricNormCheck) {
  RandomStream rng(88);
  const Matrix r = random_matrix(rng, 6, 6);
  const Matrix id = Matrix::Identity(6, 6);
  const auto equality = symmetric_norm_check(id, r, id, NormSpec::schatten(1.0));
  EXPECT_TRUE(equality);
  EXPECT_NEAR(equality.lhs, equality.rhs, 1e-12);
  const Matrix u = random_unitary(rng, 6);
  const Matrix v = random_unitary(rng, 6);
  for (const auto& spec : {NormSpec::schatten(1.0), NormSpec::schatten(2.0), NormSpec::operator_norm()}) {
    const auto c = symmetric_norm_check(u, r, v, spec);
    EXPECT_NEAR(c.lhs, c.rhs, 1e-12 * c.rhs);
  }
  for (int t = 0; t < 500; ++t) {
    RandomStream trial(89, static_cast<std::uint64_t>(t));
    const Matrix a = random_matrix(trial, 6, 6);
    const Matrix rr = random_matrix(trial, 6, 6);
    const Matrix b = random_matrix(trial, 6, 6);
    for (const auto& spec : {NormSpec::schatten(1.0), NormSpec::schatten(2.0), NormSpec::operator_norm()}) {
      EXPECT_TRUE(symmetric_norm_check(a, rr, b, spec)) << spec.label();
    }
  }
}

TEST(Inequalities, IntegralSymmetricNormCheck) {
  RandomStream rng(90);
  const Matrix a = random_matrix(rng, 4, 4);
  const Matrix r = random_matrix(rng, 4, 4);
  const Matrix b = random_matrix(rng, 4, 4);
  const auto spec = NormSpec::schatten(2.0);
  const auto single = integral_symmetric_norm_check({1.0}, {a}, {b}, r, spec);
  const auto plain = symmetric_norm_check(a, r, b, spec);
  EXPECT_NEAR(single.lhs, plain.lhs, 1e-14);
  EXPECT_NEAR(single.rhs, plain.rhs, 1e-14);
  const Matrix id = Matrix::Identity(4, 4);
  const auto identities = integral_symmetric_norm_check({0.25, 0.5, 1.0}, {id, id, id}, {id, id, id}, r, spec);
  EXPECT_NEAR(identities.lhs, 1.75 * ideal_norm(r, spec), 1e-13);
  EXPECT_NEAR(identities.rhs, 1.75 * ideal_norm(r, spec), 1e-13);
  for (int t = 0; t < 200; ++t) {
    RandomStream trial(91, static_cast<std::uint64_t>(t));
    const int len = trial.uniform_int(1, 16);
    std::vector<double> w;
    std::vector<Matrix> left, right;
    for (int i = 0; i < len; ++i) {
      w.push_back(trial.uniform(0.01, 2.0));
      left.push_back(random_matrix(trial, 4, 4));
      right.push_back(random_matrix(trial, 4, 4));
    }
    const Matrix rr = random_matrix(trial, 4, 4);
    for (const auto& s : {NormSpec::schatten(1.0), NormSpec::schatten(2.0), NormSpec::schatten(3.0),
                          NormSpec::operator_norm()}) {
      EXPECT_TRUE(integral_symmetric_norm_check(w, left, right, rr, s)) << s.label();
    }
  }
  EXPECT_THROW(integral_symmetric_norm_check({1.0, 2.0}, {a}, {b}, r, spec), Error);
}

TEST(Inequalities, MinkowskiProperty) {
  RandomStream rng(92);
  const Matrix f = random_matrix(rng, 4, 4);
  const auto spec = NormSpec::schatten(1.5);
  const auto one = minkowski_property_check({2.0}, {f}, spec);
  EXPECT_NEAR(one.lhs, one.rhs, 1e-13);
  EXPECT_NEAR(minkowski_property_check({1.0, 1.0}, {f, Matrix(-f)}, spec).lhs, 0.0, 1e-15);
  for (int t = 0; t < 200; ++t) {
    RandomStream trial(93, static_cast<std::uint64_t>(t));
    const int len = trial.uniform_int(1, 10);
    std::vector<double> w;
    std::vector<Matrix> terms;
    for (int i = 0; i < len; ++i) {
      w.push_back(trial.uniform(0.01, 2.0));
      terms.push_back(random_matrix(trial, 5, 5));
    }
    for (double p : {1.0, 1.5, 2.0, 4.0, HUGE_VAL}) EXPECT_TRUE(minkowski_property_check(w, terms, NormSpec::schatten(p)));
  }
}

TEST(Inequalities, PerturbationNormBound) {
  RandomStream rng(94);
  const auto f = make_function("expi:1");
  for (int t = 0; t < 20; ++t) {
    const Matrix a = random_hermitian(rng, 5);
    const Matrix c = random_hermitian(rng, 5, 0.7);
    EXPECT_TRUE(perturbation_norm_bound_check(f, a, c, NormSpec::schatten(2.0)));
  }
  const auto zero = perturbation_norm_bound_check(f, diag({1.0, 2.0}), Matrix::Zero(2, 2), NormSpec::schatten(2.0));
  EXPECT_TRUE(zero);
  EXPECT_EQ(zero.lhs, 0.0);
  EXPECT_EQ(zero.rhs, 0.0);
  for (int t = 0; t < 100; ++t) {
    RandomStream trial(95, static_cast<std::uint64_t>(t));
    const auto mu = test_support::random_measure(trial, 4, 3.0);
    const auto g = wiener_function(mu);
    ASSERT_TRUE(g.lipschitz_bound);
    EXPECT_NEAR(*g.lipschitz_bound, mu.moment(1), 1e-15);
    const Matrix a = random_hermitian(trial, 4);
    const Matrix c = random_hermitian(trial, 4);
    for (double p : {1.0, 2.0, HUGE_VAL}) EXPECT_TRUE(perturbation_norm_bound_check(g, a, c, NormSpec::schatten(p)));
  }
  EXPECT_EQ(kind_of([] { perturbation_norm_bound_check(exponential(), diag({1.0}), diag({1.0}), NormSpec::operator_norm()); }),
            ErrorKind::MissingBound);
}

TEST(Inequalities, CampaignRowFormat) {
  const auto row = campaign_csv_row("symmetric", 7, 6, NormSpec::gauge({1.0, 0.5}), make_check(1.0, 2.0));
  EXPECT_EQ(std::count(row.begin(), row.end(), ','), 6) << row;
  EXPECT_NE(row.find("symmetric"), std::string::npos);
  EXPECT_NE(row.find("gauge:1;0.5"), std::string::npos) << row;
}

}  // namespace
