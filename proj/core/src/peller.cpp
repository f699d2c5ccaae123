#include "opcalc/peller.hpp"

#include <algorithm>
#include <cmath>

#include "opcalc/errors.hpp"
#include "opcalc/kernels.hpp"
#include "opcalc/quadrature.hpp"

namespace opcalc {
namespace {

// Lines with xi >= 0, sorted by xi, plus per-node suffix sums that give
//   (f * mu_s)(x) = sum_{xi_m > s} c_m (1 - s / xi_m) e^{i xi_m x}
// in O(log M) for every radial node s.
class MuField {
 public:
  MuField(std::vector<SpectralLine> lines, std::span<const double> nodes) : lines_(std::move(lines)) {
    std::sort(lines_.begin(), lines_.end(), [](const auto& a, const auto& b) { return a.xi < b.xi; });
    const std::size_t m = lines_.size();
    plain_.assign(nodes.size(), std::vector<cplx>(m + 1));
    over_xi_.assign(nodes.size(), std::vector<cplx>(m + 1));
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      for (std::size_t i = m; i-- > 0;) {
        const auto& line = lines_[i];
        const cplx e = line.xi > 0.0 ? line.coeff * std::exp(cplx{0.0, line.xi * nodes[j]}) : cplx{};
        plain_[j][i] = plain_[j][i + 1] + e;
        over_xi_[j][i] = over_xi_[j][i + 1] + (line.xi > 0.0 ? e / line.xi : cplx{});
      }
    }
  }

  cplx operator()(std::size_t node, double s) const {
    const auto it = std::upper_bound(lines_.begin(), lines_.end(), s,
                                     [](double v, const SpectralLine& l) { return v < l.xi; });
    const auto i = static_cast<std::size_t>(it - lines_.begin());
    return plain_[node][i] - s * over_xi_[node][i];
  }

  std::vector<double> frequencies() const {
    std::vector<double> out;
    for (const auto& l : lines_) out.push_back(l.xi);
    return out;
  }

 private:
  std::vector<SpectralLine> lines_;
  std::vector<std::vector<cplx>> plain_;
  std::vector<std::vector<cplx>> over_xi_;
};

int angular_degree(const PellerOptions& opt, double s_max, std::span<const double> lambda) {
  const auto [lo, hi] = std::minmax_element(lambda.begin(), lambda.end());
  const double omega = s_max * (*hi - *lo);
  return std::clamp(static_cast<int>(std::ceil(0.6 * omega)) + 12, opt.simplex_degree, 64);
}

// The j-terms of the representation with |u| restricted to [s_lo, s_hi]; all
// lines must have xi >= 0.
std::vector<cplx> radial_terms(const std::vector<SpectralLine>& lines, bool split_at_lines,
                               std::span<const double> lambda, const PellerOptions& opt, double s_lo,
                               double s_hi) {
  const int k = static_cast<int>(lambda.size()) - 1;
  if (k < 1 || k > kMaxPellerOrder) {
    fail(ErrorKind::UnsupportedOrder, "Peller representation is implemented for 1 <= k <= 3");
  }
  const MuField field(lines, lambda);

  std::vector<double> breaks{s_lo};
  if (split_at_lines) {
    for (double xi : field.frequencies()) {
      if (xi > s_lo && xi < s_hi) breaks.push_back(xi);
    }
  }
  breaks.push_back(s_hi);
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  const SimplexQuadrature& angular = cached_simplex_quadrature(k - 1, angular_degree(opt, s_hi, lambda));
  std::vector<cplx> terms(lambda.size());
  std::vector<double> others(static_cast<std::size_t>(k));
  for (std::size_t b = 0; b + 1 < breaks.size(); ++b) {
    const QuadratureRule radial =
        gauss_legendre(static_cast<std::size_t>(opt.radial_points), breaks[b], breaks[b + 1]);
    for (std::size_t q = 0; q < radial.nodes.size(); ++q) {
      const double s = radial.nodes[q];
      const double jacobian = radial.weights[q] * std::pow(s, k - 1);
      for (std::size_t j = 0; j < lambda.size(); ++j) {
        // Remaining nodes in order: the u-coordinates pair with them one to one.
        std::size_t o = 0;
        for (std::size_t m = 0; m < lambda.size(); ++m) {
          if (m != j) others[o++] = lambda[m];
        }
        cplx angular_sum{};
        for (std::size_t p = 0; p < angular.size(); ++p) {
          const auto t = angular.point(p);
          double phase = -lambda[j];
          for (std::size_t m = 0; m < others.size(); ++m) phase += t[m] * others[m];
          angular_sum += angular.weights[p] * std::exp(cplx{0.0, s * phase});
        }
        terms[j] += jacobian * field(j, s) * angular_sum;
      }
    }
  }
  const cplx ik = std::pow(cplx{0.0, 1.0}, k);
  for (auto& t : terms) t *= ik;
  return terms;
}

void require_positive_band(const BandlimitedFunction& f) {
  if (f.band_type() != BandType::positive_half) {
    fail(ErrorKind::BandTypeUnsupported, "Peller representation needs supp f-hat in [0, sigma]; use the split form");
  }
}

}  // namespace

BandlimitedFunction BandlimitedFunction::from_function(const ScalarFunction& f, const GridSpec& grid) {
  if (!f.band) fail(ErrorKind::DomainError, "function '" + f.name() + "' declares no band");
  const BandInfo band = *f.band;
  BandlimitedFunction out;
  out.f_ = f;
  out.type_ = band.type;
  if (band.type == BandType::positive_half) {
    if (band.lo < 0.0) fail(ErrorKind::DomainError, "half band must lie in [0, sigma]");
    out.sigma_ = band.hi;
  } else {
    out.sigma_ = std::max(std::abs(band.lo), std::abs(band.hi));
  }

  std::vector<SpectralLine> lines;
  if (f.wiener) {
    for (const auto& atom : f.wiener->atoms) {
      if (atom.xi < band.lo || atom.xi > band.hi) {
        fail(ErrorKind::DomainError, "Wiener atom outside the declared band");
      }
      lines.push_back({atom.xi, atom.weight});
    }
    out.exact_ = true;
  } else {
    const GridFunction g = GridFunction::sample(f, grid);
    if (band.hi >= g.nyquist() || -band.lo >= g.nyquist()) {
      fail(ErrorKind::GridTooCoarse, "declared band exceeds the grid's Nyquist frequency");
    }
    out.out_of_band_ = g.out_of_band_energy(band.lo, band.hi);
    if (out.out_of_band_ > 1e-8) {
      fail(ErrorKind::DomainError, "function '" + f.name() + "' has spectral energy outside its declared band");
    }
    const auto spec = g.spectrum();
    const double n = static_cast<double>(g.size());
    for (std::size_t m = 0; m < spec.size(); ++m) {
      const double xi = g.frequency(m);
      if (xi < band.lo || xi > band.hi || spec[m] == cplx{}) continue;
      lines.push_back({xi, spec[m] / n * std::exp(cplx{0.0, -xi * g.origin()})});
    }
  }
  out.lines_ = std::make_shared<const std::vector<SpectralLine>>(std::move(lines));
  return out;
}

cplx BandlimitedFunction::convolved_mu(double u, double x) const {
  cplx sum{};
  for (const auto& line : *lines_) sum += line.coeff * kernel_mu_hat(u, line.xi) * std::exp(cplx{0.0, line.xi * x});
  return sum;
}

std::vector<cplx> peller_terms(const BandlimitedFunction& f, const NodeVector& lambda, const PellerOptions& opt) {
  require_positive_band(f);
  return radial_terms(f.lines(), f.exact_lines(), lambda.values(), opt, 0.0, f.sigma());
}

cplx peller_divdiff(const BandlimitedFunction& f, const NodeVector& lambda, const PellerOptions& opt) {
  cplx sum{};
  for (const auto& t : peller_terms(f, lambda, opt)) sum += t;
  return sum;
}

cplx peller_outer_shell(const BandlimitedFunction& f, const NodeVector& lambda, const PellerOptions& opt) {
  require_positive_band(f);
  cplx sum{};
  for (const auto& t : radial_terms(f.lines(), f.exact_lines(), lambda.values(), opt, f.sigma(), 2.0 * f.sigma())) {
    sum += t;
  }
  return sum;
}

cplx peller_divdiff_split(const BandlimitedFunction& f, const NodeVector& lambda, const PellerOptions& opt) {
  std::vector<SpectralLine> positive;
  std::vector<SpectralLine> reflected;
  for (const auto& line : f.lines()) {
    if (line.xi >= 0.0) {
      positive.push_back(line);
    } else {
      reflected.push_back({-line.xi, line.coeff});
    }
  }
  const int k = lambda.order();
  std::vector<double> mirrored(lambda.values().begin(), lambda.values().end());
  for (auto& x : mirrored) x = -x;

  cplx sum{};
  for (const auto& t : radial_terms(positive, f.exact_lines(), lambda.values(), opt, 0.0, f.sigma())) sum += t;
  const double sign = k % 2 == 0 ? 1.0 : -1.0;
  for (const auto& t : radial_terms(reflected, f.exact_lines(), mirrored, opt, 0.0, f.sigma())) sum += sign * t;
  return sum;
}

}  // namespace opcalc
