#include "opcalc/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include <gsl/gsl_errno.h>
#include <gsl/gsl_integration.h>
#include <gsl/gsl_sf_expint.h>

#include "opcalc/errors.hpp"

namespace opcalc {
namespace {

void check_band(const GridFunction& f) {
  if (!f.band) return;
  const double reach = std::max(std::abs(f.band->lo), std::abs(f.band->hi));
  if (reach >= f.nyquist()) {
    fail(ErrorKind::GridTooCoarse, "declared band exceeds the grid's Nyquist frequency");
  }
}

struct WorkspaceFree {
  void operator()(gsl_integration_workspace* w) const { gsl_integration_workspace_free(w); }
};

// Restores the previous GSL error handler on scope exit.
struct GslHandlerGuard {
  gsl_error_handler_t* previous = gsl_set_error_handler_off();
  ~GslHandlerGuard() { gsl_set_error_handler(previous); }
};

template <class F>
double integrate(F&& f, double a, double b, gsl_integration_workspace* ws) {
  gsl_function fn;
  fn.function = [](double x, void* p) { return (*static_cast<F*>(p))(x); };
  fn.params = &f;
  double result = 0.0;
  double abserr = 0.0;
  gsl_integration_qags(&fn, a, b, 1e-14, 1e-12, 1000, ws, &result, &abserr);
  return result;
}

}  // namespace

double kernel_r_hat(double u, double xi) {
  if (u < 0.0) fail(ErrorKind::DomainError, "kernel parameter u must be non-negative");
  const double a = std::abs(xi);
  return a <= u ? 1.0 : u / a;
}

double kernel_mu_hat(double u, double xi) {
  if (u == 0.0) return 0.0;
  return 1.0 - kernel_r_hat(u, xi);
}

double kernel_r1(double x) {
  const double a = std::abs(x);
  if (a == 0.0) return HUGE_VAL;  // logarithmic singularity
  gsl_sf_result ci;
  gsl_sf_Ci_e(a, &ci);
  return (std::sin(a) / a - ci.val) / kPi;
}

GridFunction convolve_mu(const GridFunction& f, double u) {
  if (u < 0.0) fail(ErrorKind::DomainError, "kernel parameter u must be non-negative");
  check_band(f);
  if (u == 0.0) return f.scaled(0.0);
  return f.apply_multiplier([u](double xi) { return cplx{kernel_mu_hat(u, xi), 0.0}; });
}

GridFunction convolve_r(const GridFunction& f, double u) {
  if (u < 0.0) fail(ErrorKind::DomainError, "kernel parameter u must be non-negative");
  check_band(f);
  return f.apply_multiplier([u](double xi) { return cplx{kernel_r_hat(u, xi), 0.0}; });
}

KernelNorms r1_norm_estimates() {
  GslHandlerGuard guard;
  std::unique_ptr<gsl_integration_workspace, WorkspaceFree> ws(gsl_integration_workspace_alloc(1000));

  // r_1 is even; integrate over [0, X] piecewise on half-periods of the oscillation.
  constexpr int kPieces = 3200;
  const double cutoff = kPieces * kPi;
  double l1 = 0.0;
  double l2 = 0.0;
  for (int j = 0; j < kPieces; ++j) {
    const double a = j * kPi;
    const double b = a + kPi;
    l1 += integrate([](double x) { return std::abs(kernel_r1(x)); }, a, b, ws.get());
    l2 += integrate([](double x) { const double r = kernel_r1(x); return r * r; }, a, b, ws.get());
  }
  // For large x, r_1(x) = cos(x) / (pi x^2) + O(x^-3): the mean of |cos| is 2/pi.
  KernelNorms out;
  out.l1_tail = 2.0 * (2.0 / kPi) / (kPi * cutoff);
  out.l1 = 2.0 * l1 + out.l1_tail;
  const double l2_tail = 2.0 * 0.5 / (kPi * kPi * 3.0 * cutoff * cutoff * cutoff);
  out.l2 = std::sqrt(2.0 * l2 + l2_tail);

  // Plancherel: ||r_1||_2^2 = (1/2pi) int |r-hat_1|^2 = (1/pi) (int_0^1 1 + int_1^inf xi^-2).
  gsl_function fn;
  auto tail = [](double xi, void*) { return 1.0 / (xi * xi); };
  fn.function = tail;
  fn.params = nullptr;
  double tail_mass = 0.0;
  double abserr = 0.0;
  gsl_integration_qagiu(&fn, 1.0, 1e-14, 1e-12, 1000, ws.get(), &tail_mass, &abserr);
  out.l2_plancherel = std::sqrt((1.0 + tail_mass) / kPi);
  return out;
}

}  // namespace opcalc
