#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <vector>

#include "opcalc/scalar_function.hpp"
#include "opcalc/types.hpp"

namespace opcalc {

/// Sampling layout: the analysis interval [lo, hi) is padded on both sides by
/// guard_fraction * (hi - lo); with `taper`, samples are multiplied by a smooth
/// window that is 1 on [lo, hi) and vanishes at the padded ends.
struct GridSpec {
  double lo = -64.0;
  double hi = 64.0;
  std::size_t size = std::size_t{1} << 14;
  double guard_fraction = 0.0;
  bool taper = false;
};

/// Uniform samples f(x_0 + n dx), n = 0..N-1, N a power of two >= 2. Periodic
/// extension is implied by every spectral operation.
class GridFunction {
 public:
  /// Throws DomainError for a bad size or spacing.
  GridFunction(std::vector<cplx> samples, double spacing, double origin);

  static GridFunction sample(const std::function<cplx(double)>& f, const GridSpec& spec = {});
  /// Also records the band of f (if declared).
  static GridFunction sample(const ScalarFunction& f, const GridSpec& spec = {});
  /// Inverse of spectrum().
  static GridFunction from_spectrum(const std::vector<cplx>& spectrum, double spacing, double origin);

  std::size_t size() const { return samples_.size(); }
  double spacing() const { return spacing_; }
  double origin() const { return origin_; }
  double x(std::size_t n) const { return origin_ + spacing_ * static_cast<double>(n); }
  const std::vector<cplx>& samples() const { return samples_; }
  cplx operator[](std::size_t n) const { return samples_[n]; }

  /// Analysis window [lo, hi) on which norms are measured (defaults to the whole grid).
  double analysis_lo() const { return analysis_lo_; }
  double analysis_hi() const { return analysis_hi_; }
  void set_analysis_interval(double lo, double hi);

  std::optional<BandInfo> band;

  /// Angular frequency of DFT bin m: 2 pi m' / (N dx), m' wrapped into [-N/2, N/2).
  double frequency(std::size_t m) const;
  std::vector<double> frequencies() const;
  /// pi / dx.
  double nyquist() const;
  /// Unnormalized DFT of the samples.
  std::vector<cplx> spectrum() const;

  /// Inverse DFT of multiplier(xi_m) * spectrum_m, same layout.
  GridFunction apply_multiplier(const std::function<cplx(double)>& multiplier) const;
  /// k-th derivative through the multiplier (i xi)^k.
  GridFunction derivative(int k) const;
  /// Trigonometric interpolant at an arbitrary x.
  cplx interpolate(double x) const;

  /// Largest |sample| inside the analysis window.
  double sup_norm() const;
  GridFunction operator-(const GridFunction& other) const;
  GridFunction operator+(const GridFunction& other) const;
  GridFunction scaled(cplx factor) const;

  /// Relative spectral energy with |xi| outside [lo, hi] (or xi outside for a half band).
  double out_of_band_energy(double lo, double hi) const;

  /// CSV rows "x,re,im" with a header line. Throws IoError / ParseError.
  void write_csv(const std::filesystem::path& path) const;
  static GridFunction read_csv(const std::filesystem::path& path);
  static GridFunction parse_csv(const std::string& text);

 private:
  std::vector<cplx> samples_;
  double spacing_ = 1.0;
  double origin_ = 0.0;
  double analysis_lo_ = 0.0;
  double analysis_hi_ = 0.0;
};

/// Smooth step: 0 for t <= 0, 1 for t >= 1, C-infinity in between.
double smooth_step(double t);

}  // namespace opcalc
