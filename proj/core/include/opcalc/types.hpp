#pragma once

#include <complex>
#include <functional>
#include <span>

#include <Eigen/Dense>

namespace opcalc {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

/// Function of k+1 real variables, e.g. a divided difference or an MOI symbol.
using MultiSymbol = std::function<cplx(std::span<const double>)>;

inline constexpr double kPi = 3.14159265358979323846;

}  // namespace opcalc
