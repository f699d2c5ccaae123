#include "opcalc/littlewood_paley.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include <Eigen/QR>

#include "opcalc/errors.hpp"
#include "opcalc/fft.hpp"

namespace opcalc {
namespace {

double psi(double t) { return t > 0.0 ? std::exp(-1.0 / t) : 0.0; }

// L1 norm of the inverse transform of a compactly supported multiplier (support in
// |xi| <= 2), sampled on a wide periodic grid.
double kernel_l1(const std::function<cplx(double)>& multiplier) {
  constexpr std::size_t n = std::size_t{1} << 19;
  constexpr double length = 4096.0;
  const double dxi = 2.0 * kPi / length;
  std::vector<cplx> spec(n);
  for (std::size_t m = 0; m < n; ++m) {
    const auto mm = static_cast<double>(m < n / 2 ? static_cast<std::ptrdiff_t>(m)
                                                  : static_cast<std::ptrdiff_t>(m) - static_cast<std::ptrdiff_t>(n));
    spec[m] = multiplier(mm * dxi);
  }
  const auto values = fft_inverse(spec);
  const double dx = length / static_cast<double>(n);
  double l1 = 0.0;
  for (const auto& v : values) l1 += std::abs(v);
  // g(x_n) = (N / L) * inverse-DFT[n]; the integral is sum |g| dx = sum |inverse-DFT|.
  return l1 * (static_cast<double>(n) / length) * dx;
}

double window_sup(const GridFunction& g, bool whole_grid) {
  if (!whole_grid) return g.sup_norm();
  double s = 0.0;
  for (const auto& v : g.samples()) s = std::max(s, std::abs(v));
  return s;
}

}  // namespace

double lp_bump(double xi) {
  const double a = std::abs(xi);
  if (a <= 1.0) return 1.0;
  if (a >= 2.0) return 0.0;
  const double p = psi(2.0 - a);
  return p / (p + psi(a - 1.0));
}

double lp_block_symbol(int j, double xi) {
  return lp_bump(std::ldexp(xi, -j)) - lp_bump(std::ldexp(xi, -j + 1));
}

GridFunction LittlewoodPaleyDecomposition::reconstruct() const {
  GridFunction sum = low_pass;
  for (const auto& b : blocks) sum = sum + b;
  return sum;
}

LittlewoodPaleyDecomposition littlewood_paley_blocks(const GridFunction& f, int j_min, int j_max,
                                                     double max_leakage) {
  if (j_min > j_max) fail(ErrorKind::DomainError, "empty Littlewood-Paley range");
  const auto spec = f.spectrum();
  const auto freqs = f.frequencies();

  LittlewoodPaleyDecomposition out{j_min, j_max, {}, f, 0.0, 0.0};
  double total = 0.0;
  double outside = 0.0;
  for (std::size_t m = 0; m < spec.size(); ++m) {
    const double e = std::norm(spec[m]);
    const double miss = 1.0 - lp_bump(std::ldexp(freqs[m], -j_max));
    total += e;
    outside += e * miss * miss;
    if (std::abs(freqs[m]) <= std::ldexp(1.0, j_max)) {
      double partition = lp_bump(std::ldexp(freqs[m], -j_min + 1));
      for (int j = j_min; j <= j_max; ++j) partition += lp_block_symbol(j, freqs[m]);
      out.partition_error = std::max(out.partition_error, std::abs(partition - 1.0));
    }
  }
  out.leakage = total > 0.0 ? outside / total : 0.0;
  if (out.leakage > max_leakage) {
    fail(ErrorKind::RangeTooNarrow, "spectral energy beyond 2^j_max exceeds the leakage tolerance");
  }

  const auto filtered = [&](const std::function<double(double)>& symbol) {
    std::vector<cplx> s(spec.size());
    for (std::size_t m = 0; m < s.size(); ++m) s[m] = spec[m] * symbol(freqs[m]);
    GridFunction g = GridFunction::from_spectrum(s, f.spacing(), f.origin());
    g.set_analysis_interval(f.analysis_lo(), f.analysis_hi());
    return g;
  };
  out.low_pass = filtered([j_min](double xi) { return lp_bump(std::ldexp(xi, -j_min + 1)); });
  for (int j = j_min; j <= j_max; ++j) {
    out.blocks.push_back(filtered([j](double xi) { return lp_block_symbol(j, xi); }));
  }
  return out;
}

BesovReport besov_seminorm(const GridFunction& f, int k, int j_min, int j_max, double max_leakage) {
  if (k < 0) fail(ErrorKind::DomainError, "Besov smoothness must be non-negative");
  const auto lp = littlewood_paley_blocks(f, j_min, j_max, max_leakage);
  BesovReport r{k, j_min, j_max, {}, 0.0, 0.0, lp.leakage};
  for (int j = j_min; j <= j_max; ++j) {
    const double s = lp.block(j).sup_norm();
    r.block_sup.push_back(s);
    r.seminorm += std::ldexp(1.0, j * k) * s;
  }
  // Blocks below j_min only see phi(2^-j_min .) f, so each is at most
  // ||phi_0-check||_1 ||phi(2^-j_min .)-check * f||_inf.
  if (k == 0) {
    r.truncation_tail = HUGE_VAL;
  } else {
    const double low_sup = window_sup(lp.low_pass + lp.block(j_min), false);
    r.truncation_tail = block_kernel_l1() * low_sup * std::ldexp(1.0, (j_min - 1) * k) / (1.0 - std::ldexp(1.0, -k));
  }
  return r;
}

GridFunction detrend(const GridFunction& f, int degree) {
  if (degree < 0) return f;
  const double lo = f.analysis_lo();
  const double hi = f.analysis_hi();
  const auto scaled = [lo, hi](double x) { return (2.0 * x - lo - hi) / (hi - lo); };
  const auto legendre_row = [degree](double t) {
    Eigen::RowVectorXd row(degree + 1);
    row(0) = 1.0;
    if (degree >= 1) row(1) = t;
    for (int n = 2; n <= degree; ++n) row(n) = ((2.0 * n - 1.0) * t * row(n - 1) - (n - 1.0) * row(n - 2)) / n;
    return row;
  };
  std::vector<std::size_t> inside;
  for (std::size_t n = 0; n < f.size(); ++n) {
    if (f.x(n) >= lo && f.x(n) < hi) inside.push_back(n);
  }
  Eigen::MatrixXd basis(static_cast<Eigen::Index>(inside.size()), degree + 1);
  Eigen::VectorXcd rhs(static_cast<Eigen::Index>(inside.size()));
  for (std::size_t i = 0; i < inside.size(); ++i) {
    basis.row(static_cast<Eigen::Index>(i)) = legendre_row(scaled(f.x(inside[i])));
    rhs(static_cast<Eigen::Index>(i)) = f[inside[i]];
  }
  const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(basis);
  const Eigen::VectorXd re = qr.solve(Eigen::VectorXd(rhs.real()));
  const Eigen::VectorXd im = qr.solve(Eigen::VectorXd(rhs.imag()));
  std::vector<cplx> out(f.size());
  for (std::size_t n = 0; n < f.size(); ++n) {
    const auto row = legendre_row(scaled(f.x(n)));
    out[n] = f[n] - cplx{row.dot(re), row.dot(im)};
  }
  GridFunction g(std::move(out), f.spacing(), f.origin());
  g.set_analysis_interval(lo, hi);
  return g;
}

double bernstein_constant(int k) {
  if (k < 0) fail(ErrorKind::DomainError, "Bernstein order must be non-negative");
  static std::mutex mutex;
  static std::map<int, double> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(k); it != cache.end()) return it->second;
  const double value = kernel_l1([k](double xi) { return std::pow(cplx{0.0, xi}, k) * lp_bump(xi); });
  cache.emplace(k, value);
  return value;
}

double block_kernel_l1() {
  static const double value = kernel_l1([](double xi) { return cplx{lp_block_symbol(0, xi), 0.0}; });
  return value;
}

InequalityCheck bernstein_check(const GridFunction& u, double band_radius, int k) {
  if (!(band_radius > 0.0)) fail(ErrorKind::DomainError, "band radius must be positive");
  if (u.out_of_band_energy(-band_radius, band_radius) > 1e-8) {
    fail(ErrorKind::DomainError, "function is not band-limited to the declared band");
  }
  const double lhs = window_sup(u.derivative(k), true);
  const double rhs = bernstein_constant(k) * std::pow(band_radius, k) * window_sup(u, true);
  return make_check(lhs, rhs);
}

InequalityCheck series_bound_check(const GridFunction& f, int k, int j_min, int j_max) {
  const auto lp = littlewood_paley_blocks(f, j_min, j_max);
  double lhs = 0.0;
  double seminorm = 0.0;
  for (int j = j_min; j <= j_max; ++j) {
    lhs += window_sup(lp.block(j).derivative(k), true);
    seminorm += std::ldexp(1.0, j * k) * window_sup(lp.block(j), true);
  }
  return make_check(lhs, std::ldexp(1.0, k) * bernstein_constant(k) * seminorm);
}

}  // namespace opcalc
