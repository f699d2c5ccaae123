#include "opcalc/scalar_function.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "opcalc/errors.hpp"

namespace opcalc {

double DiscreteWienerMeasure::moment(int k) const {
  double total = 0.0;
  for (const auto& atom : atoms) total += std::abs(atom.weight) * std::pow(std::abs(atom.xi), k);
  return total;
}

double DiscreteWienerMeasure::max_abs_frequency() const {
  double m = 0.0;
  for (const auto& atom : atoms) m = std::max(m, std::abs(atom.xi));
  return m;
}

ScalarFunction::ScalarFunction(std::string name, Evaluator eval, int max_order, bool real_valued)
    : name_(std::move(name)), eval_(std::move(eval)), max_order_(max_order), real_valued_(real_valued) {}

ScalarFunction ScalarFunction::from_values(std::string name, std::function<cplx(double)> fn,
                                           bool real_valued) {
  return ScalarFunction(
      std::move(name), [fn = std::move(fn)](double x, int) { return fn(x); }, 0, real_valued);
}

cplx ScalarFunction::derivative(double x, int order) const {
  if (!has_derivative(order)) {
    fail(ErrorKind::MissingDerivative,
         name_ + " has no derivative of order " + std::to_string(order));
  }
  return eval_(x, order);
}

ScalarFunction ScalarFunction::conjugate() const {
  ScalarFunction out(
      "conj(" + name_ + ")", [eval = eval_](double x, int n) { return std::conj(eval(x, n)); },
      max_order_, real_valued_);
  out.lipschitz_bound = lipschitz_bound;
  if (wiener) {
    DiscreteWienerMeasure m;
    for (const auto& a : wiener->atoms) m.atoms.push_back({-a.xi, std::conj(a.weight)});
    out.wiener = m;
  }
  if (band) out.band = BandInfo{-band->hi, -band->lo, BandType::symmetric};
  return out;
}

}  // namespace opcalc
