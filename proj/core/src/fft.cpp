#include "opcalc/fft.hpp"

#include <algorithm>
#include <memory>
#include <mutex>

#include <fftw3.h>

#include "opcalc/errors.hpp"

namespace opcalc {
namespace {

struct FftwFree {
  void operator()(fftw_complex* p) const { fftw_free(p); }
};
using Buffer = std::unique_ptr<fftw_complex[], FftwFree>;

struct PlanDestroy {
  void operator()(fftw_plan_s* p) const { fftw_destroy_plan(p); }
};
using Plan = std::unique_ptr<fftw_plan_s, PlanDestroy>;

// FFTW's planner is not thread-safe; execution of a private plan is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

std::vector<cplx> transform(std::span<const cplx> in, int sign) {
  const auto n = in.size();
  if (n == 0) return {};
  Buffer buf(fftw_alloc_complex(n));
  if (!buf) fail(ErrorKind::DomainError, "FFT buffer allocation failed");
  Plan plan;
  {
    std::lock_guard lock(planner_mutex());
    plan.reset(fftw_plan_dft_1d(static_cast<int>(n), buf.get(), buf.get(), sign, FFTW_ESTIMATE));
  }
  if (!plan) fail(ErrorKind::DomainError, "FFT planning failed");
  auto* data = reinterpret_cast<cplx*>(buf.get());
  std::copy(in.begin(), in.end(), data);
  fftw_execute(plan.get());
  std::vector<cplx> out(data, data + n);
  {
    std::lock_guard lock(planner_mutex());
    plan.reset();
  }
  return out;
}

}  // namespace

std::vector<cplx> fft_forward(std::span<const cplx> x) { return transform(x, FFTW_FORWARD); }

std::vector<cplx> fft_inverse(std::span<const cplx> spectrum) {
  auto out = transform(spectrum, FFTW_BACKWARD);
  const double scale = 1.0 / static_cast<double>(out.size());
  for (auto& v : out) v *= scale;
  return out;
}

}  // namespace opcalc
