#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "opcalc/types.hpp"

namespace opcalc {

struct WienerAtom {
  double xi = 0.0;
  cplx weight{0.0, 0.0};
};

/// Finite complex measure sum_j c_j delta_{xi_j}; f(x) = sum_j c_j exp(i x xi_j).
struct DiscreteWienerMeasure {
  std::vector<WienerAtom> atoms;

  /// sum_j |c_j| |xi_j|^k
  double moment(int k) const;
  double max_abs_frequency() const;
};

enum class BandType { positive_half, symmetric };

/// Declared support [lo, hi] of the Fourier transform.
struct BandInfo {
  double lo = 0.0;
  double hi = 0.0;
  BandType type = BandType::symmetric;
};

/// A scalar function f: R -> C together with its derivatives up to max_order()
/// and optional harmonic-analysis metadata (Wiener measure, band, Lipschitz
/// bound coming from an explicit projective decomposition of f^[1]).
class ScalarFunction {
 public:
  /// eval(x, n) returns f^{(n)}(x) for 0 <= n <= max_order.
  using Evaluator = std::function<cplx(double, int)>;

  ScalarFunction() = default;
  ScalarFunction(std::string name, Evaluator eval, int max_order, bool real_valued);

  /// Values only; no derivatives.
  static ScalarFunction from_values(std::string name, std::function<cplx(double)> fn,
                                    bool real_valued = false);

  cplx operator()(double x) const { return eval_(x, 0); }
  cplx derivative(double x, int order) const;
  bool has_derivative(int order) const { return order >= 0 && order <= max_order_; }

  int max_order() const { return max_order_; }
  const std::string& name() const { return name_; }
  bool real_valued() const { return real_valued_; }

  /// Complex conjugate function (derivatives conjugate termwise).
  ScalarFunction conjugate() const;

  std::optional<double> lipschitz_bound;
  std::optional<DiscreteWienerMeasure> wiener;
  std::optional<BandInfo> band;

 private:
  std::string name_;
  Evaluator eval_;
  int max_order_ = 0;
  bool real_valued_ = false;
};

}  // namespace opcalc
