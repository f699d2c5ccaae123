#pragma once

#include <sstream>

#include <gtest/gtest.h>

#include "opcalc/spectral.hpp"

namespace opcalc::test_support {

/// Operator-norm closeness with a readable failure message.
inline ::testing::AssertionResult MatrixNear(const Matrix& actual, const Matrix& expected, double tol) {
  if (actual.rows() != expected.rows() || actual.cols() != expected.cols()) {
    return ::testing::AssertionFailure() << "shape " << actual.rows() << "x" << actual.cols() << " vs "
                                         << expected.rows() << "x" << expected.cols();
  }
  const double err = operator_norm(actual - expected);
  if (err <= tol) return ::testing::AssertionSuccess();
  std::ostringstream os;
  os << "||actual - expected||_op = " << err << " > " << tol << "\nactual:\n"
     << actual << "\nexpected:\n"
     << expected;
  return ::testing::AssertionFailure() << os.str();
}

inline Matrix diag(std::initializer_list<double> values) {
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(values.size()), static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (double v : values) m(i, i) = v, ++i;
  return m;
}

inline Matrix pauli_x() {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 1) = m(1, 0) = 1.0;
  return m;
}

}  // namespace opcalc::test_support
