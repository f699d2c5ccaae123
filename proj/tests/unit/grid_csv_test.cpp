#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <functional>

#include "opcalc/errors.hpp"
#include "opcalc/grid_function.hpp"

namespace {

using namespace opcalc;

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::UsageError;
}

TEST(GridCsv, ParsesHeaderAndOptionalImaginaryColumn) {
  const GridFunction g = GridFunction::parse_csv("x,re,im\n-1,1,0.5\n-0.5,2\n0,3,-1\n0.5,4,0\n");
  ASSERT_EQ(g.size(), 4u);
  EXPECT_DOUBLE_EQ(g.origin(), -1.0);
  EXPECT_DOUBLE_EQ(g.spacing(), 0.5);
  EXPECT_EQ(g[0], cplx(1.0, 0.5));
  EXPECT_EQ(g[1], cplx(2.0, 0.0));
  EXPECT_EQ(g[2], cplx(3.0, -1.0));
}

TEST(GridCsv, AcceptsSubnormalSamples) {
  const GridFunction g = GridFunction::parse_csv("0,5e-324\n1,1e-310,0\n2,0\n3,1\n");
  EXPECT_GT(g[0].real(), 0.0);
  EXPECT_LT(g[0].real(), 1e-320);
  EXPECT_GT(g[1].real(), 0.0);
}

TEST(GridCsv, RejectsMalformedInput) {
  for (const char* bad : {"", "0,1\n", "0,1\nfoo,2\n", "0,1\n1,2,3,4\n", "0,1\n1,2x\n", "0,1\n1,inf\n",
                          "0,1\n1,1e999\n", "0,1\n1,2\n3,3\n4,4\n", "0,1\n1,2\n2,3\n"}) {
    EXPECT_EQ(kind_of([&] { (void)GridFunction::parse_csv(bad); }), ErrorKind::ParseError) << bad;
  }
}

TEST(GridCsv, RoundTripsThroughFile) {
  const GridFunction g = GridFunction::sample([](double x) { return cplx(std::exp(-x * x), x); },
                                              GridSpec{-4.0, 4.0, 64});
  const auto path = std::filesystem::temp_directory_path() / "opcalc_grid_csv_test.csv";
  g.write_csv(path);
  const GridFunction back = GridFunction::read_csv(path);
  std::filesystem::remove(path);
  ASSERT_EQ(back.size(), g.size());
  EXPECT_NEAR(back.spacing(), g.spacing(), 1e-15);
  for (std::size_t n = 0; n < g.size(); ++n) EXPECT_NEAR(std::abs(back[n] - g[n]), 0.0, 1e-15);
}

TEST(GridCsv, MissingFileIsIoError) {
  EXPECT_EQ(kind_of([] { (void)GridFunction::read_csv("/nonexistent/opcalc/grid.csv"); }), ErrorKind::IoError);
}

}  // namespace
