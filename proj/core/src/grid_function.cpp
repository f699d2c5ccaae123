#include "opcalc/grid_function.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "opcalc/errors.hpp"
#include "opcalc/fft.hpp"

namespace opcalc {

double smooth_step(double t) {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  const double a = std::exp(-1.0 / t);
  const double b = std::exp(-1.0 / (1.0 - t));
  return a / (a + b);
}

GridFunction::GridFunction(std::vector<cplx> samples, double spacing, double origin)
    : samples_(std::move(samples)), spacing_(spacing), origin_(origin) {
  if (samples_.size() < 2 || !std::has_single_bit(samples_.size())) {
    fail(ErrorKind::DomainError, "grid size must be a power of two >= 2");
  }
  if (!(spacing_ > 0.0) || !std::isfinite(spacing_) || !std::isfinite(origin_)) {
    fail(ErrorKind::DomainError, "grid spacing must be positive and finite");
  }
  analysis_lo_ = origin_;
  analysis_hi_ = origin_ + spacing_ * static_cast<double>(samples_.size());
}

GridFunction GridFunction::sample(const std::function<cplx(double)>& f, const GridSpec& spec) {
  if (!(spec.hi > spec.lo) || spec.guard_fraction < 0.0) {
    fail(ErrorKind::DomainError, "grid interval must be non-empty and the guard non-negative");
  }
  const double guard = spec.guard_fraction * (spec.hi - spec.lo);
  const double lo = spec.lo - guard;
  const double dx = (spec.hi - spec.lo + 2.0 * guard) / static_cast<double>(spec.size);
  std::vector<cplx> values(spec.size);
  for (std::size_t n = 0; n < spec.size; ++n) {
    const double x = lo + dx * static_cast<double>(n);
    double w = 1.0;
    if (spec.taper && guard > 0.0) {
      if (x < spec.lo) w = smooth_step((x - lo) / guard);
      if (x >= spec.hi) w = smooth_step((spec.hi + guard - x) / guard);
    }
    values[n] = w == 0.0 ? cplx{} : w * f(x);
  }
  GridFunction g(std::move(values), dx, lo);
  g.set_analysis_interval(spec.lo, spec.hi);
  return g;
}

GridFunction GridFunction::sample(const ScalarFunction& f, const GridSpec& spec) {
  GridFunction g = sample([&f](double x) { return f(x); }, spec);
  g.band = f.band;
  return g;
}

GridFunction GridFunction::from_spectrum(const std::vector<cplx>& spectrum, double spacing, double origin) {
  return GridFunction(fft_inverse(spectrum), spacing, origin);
}

void GridFunction::set_analysis_interval(double lo, double hi) {
  if (!(hi > lo)) fail(ErrorKind::DomainError, "analysis interval must be non-empty");
  analysis_lo_ = lo;
  analysis_hi_ = hi;
}

double GridFunction::frequency(std::size_t m) const {
  const auto n = static_cast<std::ptrdiff_t>(samples_.size());
  auto mm = static_cast<std::ptrdiff_t>(m);
  if (mm >= n / 2) mm -= n;
  return 2.0 * kPi * static_cast<double>(mm) / (static_cast<double>(n) * spacing_);
}

std::vector<double> GridFunction::frequencies() const {
  std::vector<double> out(samples_.size());
  for (std::size_t m = 0; m < out.size(); ++m) out[m] = frequency(m);
  return out;
}

double GridFunction::nyquist() const { return kPi / spacing_; }

std::vector<cplx> GridFunction::spectrum() const { return fft_forward(samples_); }

GridFunction GridFunction::apply_multiplier(const std::function<cplx(double)>& multiplier) const {
  auto spec = spectrum();
  for (std::size_t m = 0; m < spec.size(); ++m) spec[m] *= multiplier(frequency(m));
  GridFunction out = from_spectrum(spec, spacing_, origin_);
  out.analysis_lo_ = analysis_lo_;
  out.analysis_hi_ = analysis_hi_;
  out.band = band;
  return out;
}

GridFunction GridFunction::derivative(int k) const {
  if (k < 0) fail(ErrorKind::DomainError, "derivative order must be non-negative");
  const std::size_t half = samples_.size() / 2;
  auto spec = spectrum();
  for (std::size_t m = 0; m < spec.size(); ++m) {
    // The Nyquist bin has no symmetric partner; drop it so real data stay real.
    spec[m] *= (m == half && k % 2 == 1) ? cplx{} : std::pow(cplx{0.0, frequency(m)}, k);
  }
  GridFunction out = from_spectrum(spec, spacing_, origin_);
  out.analysis_lo_ = analysis_lo_;
  out.analysis_hi_ = analysis_hi_;
  return out;
}

cplx GridFunction::interpolate(double x) const {
  const auto spec = spectrum();
  const double n = static_cast<double>(samples_.size());
  cplx sum{};
  for (std::size_t m = 0; m < spec.size(); ++m) {
    sum += spec[m] * std::exp(cplx{0.0, frequency(m) * (x - origin_)});
  }
  return sum / n;
}

double GridFunction::sup_norm() const {
  double s = 0.0;
  for (std::size_t n = 0; n < samples_.size(); ++n) {
    const double xn = x(n);
    if (xn >= analysis_lo_ && xn < analysis_hi_) s = std::max(s, std::abs(samples_[n]));
  }
  return s;
}

GridFunction GridFunction::operator-(const GridFunction& other) const {
  if (other.size() != size() || other.spacing_ != spacing_ || other.origin_ != origin_) {
    fail(ErrorKind::DimensionMismatch, "grid layouts differ");
  }
  GridFunction out = *this;
  for (std::size_t n = 0; n < size(); ++n) out.samples_[n] -= other.samples_[n];
  return out;
}

GridFunction GridFunction::operator+(const GridFunction& other) const {
  return *this - other.scaled(-1.0);
}

GridFunction GridFunction::scaled(cplx factor) const {
  GridFunction out = *this;
  for (auto& v : out.samples_) v *= factor;
  return out;
}

double GridFunction::out_of_band_energy(double lo, double hi) const {
  const auto spec = spectrum();
  double total = 0.0;
  double outside = 0.0;
  for (std::size_t m = 0; m < spec.size(); ++m) {
    const double e = std::norm(spec[m]);
    const double xi = frequency(m);
    total += e;
    if (xi < lo || xi > hi) outside += e;
  }
  return total > 0.0 ? outside / total : 0.0;
}

void GridFunction::write_csv(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::IoError, "cannot write " + path.string());
  out << "x,re,im\n" << std::setprecision(17);
  for (std::size_t n = 0; n < size(); ++n) {
    out << x(n) << ',' << samples_[n].real() << ',' << samples_[n].imag() << '\n';
  }
}

GridFunction GridFunction::read_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::IoError, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_csv(buf.str());
}

GridFunction GridFunction::parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<double> xs;
  std::vector<cplx> values;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (lineno == 1 && line.find_first_of("xX") != std::string::npos) continue;  // header
    std::array<double, 3> cols{};
    std::istringstream row(line);
    std::string cell;
    std::size_t c = 0;
    while (std::getline(row, cell, ',')) {
      if (c >= 3) fail(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": too many columns");
      // strtod rather than stod: subnormal samples (Gaussian tails) are valid input, not a range error.
      char* end = nullptr;
      cols[c] = std::strtod(cell.c_str(), &end);
      const auto used = static_cast<std::size_t>(end - cell.c_str());
      if (used == 0 || !std::isfinite(cols[c])) {
        fail(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": not a number");
      }
      if (cell.find_first_not_of(" \t", used) != std::string::npos) {
        fail(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": trailing characters");
      }
      ++c;
    }
    if (c < 2) fail(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": expected x,re[,im]");
    xs.push_back(cols[0]);
    values.emplace_back(cols[1], cols[2]);
  }
  if (xs.size() < 2) fail(ErrorKind::ParseError, "grid needs at least two samples");
  const double dx = xs[1] - xs[0];
  for (std::size_t n = 1; n < xs.size(); ++n) {
    if (std::abs(xs[n] - xs[0] - dx * static_cast<double>(n)) > 1e-9 * (std::abs(dx) * xs.size() + 1.0)) {
      fail(ErrorKind::ParseError, "grid abscissae are not uniformly spaced");
    }
  }
  if (!std::has_single_bit(xs.size())) fail(ErrorKind::ParseError, "grid size must be a power of two");
  if (!(dx > 0.0)) fail(ErrorKind::ParseError, "grid abscissae must increase");
  return GridFunction(std::move(values), dx, xs[0]);
}

}  // namespace opcalc
