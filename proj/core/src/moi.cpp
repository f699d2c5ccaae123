#include "opcalc/moi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "opcalc/catalog.hpp"
#include "opcalc/divided_difference.hpp"
#include "opcalc/errors.hpp"
#include "opcalc/quadrature.hpp"

namespace opcalc {
namespace {

// Symbol values on the grid of cluster multi-indices (row-major).
struct SymbolTable {
  std::vector<std::size_t> extents;
  std::vector<std::size_t> strides;
  std::vector<cplx> values;
};

SymbolTable tabulate(const MoiRequest& req) {
  const std::size_t slots = req.decomps.size();
  SymbolTable table;
  table.extents.resize(slots);
  table.strides.assign(slots, 1);
  for (std::size_t j = 0; j < slots; ++j) table.extents[j] = req.decomps[j].get().clusters();
  for (std::size_t j = slots - 1; j > 0; --j) table.strides[j - 1] = table.strides[j] * table.extents[j];
  const std::size_t total = table.strides[0] * table.extents[0];
  table.values.resize(total);

  std::map<std::vector<double>, cplx> memo;
  std::vector<std::size_t> idx(slots, 0);
  std::vector<double> lambda(slots);
  for (std::size_t flat = 0; flat < total; ++flat) {
    for (std::size_t j = 0; j < slots; ++j) lambda[j] = req.decomps[j].get().eigenvalues()[idx[j]];
    cplx value;
    if (req.symmetric_symbol) {
      std::vector<double> key = lambda;
      std::sort(key.begin(), key.end());
      auto it = memo.find(key);
      if (it == memo.end()) it = memo.emplace(key, req.phi(key)).first;
      value = it->second;
    } else {
      value = req.phi(lambda);
    }
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
      fail(ErrorKind::DomainError, "MOI symbol is not finite on the spectral grid");
    }
    table.values[flat] = value;
    for (std::size_t j = slots; j-- > 0;) {
      if (++idx[j] < table.extents[j]) break;
      idx[j] = 0;
    }
  }
  return table;
}

void check_square(const Matrix& m, Eigen::Index n, const char* what) {
  if (m.rows() != n || m.cols() != n) {
    fail(ErrorKind::DimensionMismatch, std::string(what) + " has the wrong shape");
  }
}

double op_norms(const std::vector<Matrix>& ms) {
  double s = 0.0;
  for (const auto& m : ms) s += operator_norm(m);
  return s;
}

template <class T>
std::vector<T> splice(const std::vector<T>& v, std::size_t at, std::initializer_list<T> items) {
  std::vector<T> out(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(at));
  out.insert(out.end(), items);
  out.insert(out.end(), v.begin() + static_cast<std::ptrdiff_t>(at), v.end());
  return out;
}

}  // namespace

void MoiRequest::validate() const {
  const auto k = directions.size();
  if (decomps.size() != k + 1) {
    fail(ErrorKind::DimensionMismatch, "an MOI of order k needs k+1 spectral decompositions");
  }
  if (static_cast<int>(k) > kMaxMoiOrder) {
    fail(ErrorKind::OrderTooHigh, "MOI order exceeds " + std::to_string(kMaxMoiOrder));
  }
  const Eigen::Index n = decomps.front().get().dim();
  for (const auto& d : decomps) {
    if (d.get().dim() != n) fail(ErrorKind::DimensionMismatch, "decompositions act on different dimensions");
    if (d.get().clusters() > kMaxMoiClusters) {
      fail(ErrorKind::DimensionMismatch, "too many spectral clusters for direct MOI evaluation");
    }
  }
  for (const auto& b : directions) check_square(b, n, "MOI direction");
}

Matrix moi_direct(const MoiRequest& req) {
  req.validate();
  const int k = req.order();
  const auto& first = req.decomps.front().get();
  if (k == 0) {
    const auto& phi = req.phi;
    return functional_calculus([&phi](double x) { return phi(std::span<const double>(&x, 1)); }, first);
  }

  const SymbolTable table = tabulate(req);
  const Eigen::Index n = first.dim();

  // Directions in the eigenbases of the adjacent slots.
  std::vector<Matrix> bt(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) {
    const auto& left = req.decomps[static_cast<std::size_t>(j)].get().eigenvectors();
    const auto& right = req.decomps[static_cast<std::size_t>(j) + 1].get().eigenvectors();
    bt[static_cast<std::size_t>(j)] = left.adjoint() * req.directions[static_cast<std::size_t>(j)] * right;
  }

  Matrix m = Matrix::Zero(n, n);
  const auto cluster = [&req](std::size_t slot, Eigen::Index p) {
    return req.decomps[slot].get().cluster_of()[static_cast<std::size_t>(p)];
  };

  // Depth-first over eigenvector multi-indices with incremental products.
  const auto descend = [&](auto&& self, Eigen::Index p0, std::size_t depth, Eigen::Index prev, cplx prod,
                           std::size_t offset) -> void {
    const Matrix& b = bt[depth - 1];
    for (Eigen::Index p = 0; p < n; ++p) {
      const cplx pr = prod * b(prev, p);
      if (pr == cplx{}) continue;
      const std::size_t off = offset + cluster(depth, p) * table.strides[depth];
      if (depth == static_cast<std::size_t>(k)) {
        m(p0, p) += table.values[off] * pr;
      } else {
        self(self, p0, depth + 1, p, pr, off);
      }
    }
  };
  for (Eigen::Index p0 = 0; p0 < n; ++p0) {
    descend(descend, p0, 1, p0, cplx{1.0, 0.0}, cluster(0, p0) * table.strides[0]);
  }

  const auto& last = req.decomps.back().get().eigenvectors();
  return first.eigenvectors() * m * last.adjoint();
}

MultiSymbol divdiff_symbol(const ScalarFunction& f) {
  return [f](std::span<const double> x) { return divided_difference(f, x); };
}

cplx IntegralProjectiveDecomposition::reconstruct(std::span<const double> lambda) const {
  if (lambda.size() != static_cast<std::size_t>(order) + 1) {
    fail(ErrorKind::DimensionMismatch, "reconstruct needs order+1 arguments");
  }
  cplx sum{};
  for (const auto& node : nodes) {
    cplx prod = node.weight;
    for (std::size_t j = 0; j < lambda.size(); ++j) prod *= node.factors[j](lambda[j]);
    sum += prod;
  }
  return sum;
}

double IntegralProjectiveDecomposition::sup_bound() const {
  double sum = 0.0;
  for (const auto& node : nodes) {
    double prod = node.weight;
    for (std::size_t j = 0; j < node.factors.size(); ++j) {
      if (j >= node.factor_sup.size()) return std::numeric_limits<double>::quiet_NaN();
      prod *= node.factor_sup[j];
    }
    sum += prod;
  }
  return sum;
}

double IntegralProjectiveDecomposition::sup_bound(const DecompositionList& decomps) const {
  if (decomps.size() != static_cast<std::size_t>(order) + 1) {
    fail(ErrorKind::DimensionMismatch, "sup_bound needs order+1 decompositions");
  }
  double sum = 0.0;
  for (const auto& node : nodes) {
    double prod = node.weight;
    for (std::size_t j = 0; j < decomps.size(); ++j) {
      double sup = 0.0;
      for (double l : decomps[j].get().eigenvalues()) sup = std::max(sup, std::abs(node.factors[j](l)));
      prod *= sup;
    }
    sum += prod;
  }
  return sum;
}

double IntegralProjectiveDecomposition::reconstruction_error(const MultiSymbol& target, double radius,
                                                             int per_axis) const {
  const std::size_t slots = static_cast<std::size_t>(order) + 1;
  std::vector<int> idx(slots, 0);
  std::vector<double> lambda(slots);
  double worst = 0.0;
  const double step = per_axis > 1 ? 2.0 * radius / (per_axis - 1) : 0.0;
  while (true) {
    for (std::size_t j = 0; j < slots; ++j) lambda[j] = per_axis > 1 ? -radius + step * idx[j] : 0.0;
    worst = std::max(worst, std::abs(reconstruct(lambda) - target(lambda)));
    std::size_t j = slots;
    while (j-- > 0) {
      if (++idx[j] < per_axis) break;
      idx[j] = 0;
    }
    if (j == static_cast<std::size_t>(-1)) break;
  }
  return worst;
}

IntegralProjectiveDecomposition ipd_unit(int k) {
  IntegralProjectiveDecomposition ipd;
  ipd.order = k;
  IpdNode node;
  node.weight = 1.0;
  node.factors.assign(static_cast<std::size_t>(k) + 1, [](double) { return cplx{1.0, 0.0}; });
  node.factor_sup.assign(static_cast<std::size_t>(k) + 1, 1.0);
  ipd.nodes.push_back(std::move(node));
  return ipd;
}

IntegralProjectiveDecomposition ipd_commutator() {
  IntegralProjectiveDecomposition ipd;
  ipd.order = 1;
  const auto one = [](double) { return cplx{1.0, 0.0}; };
  const double inf = std::numeric_limits<double>::infinity();
  ipd.nodes.push_back({1.0, {[](double l) { return cplx{l, 0.0}; }, one}, {inf, 1.0}});
  ipd.nodes.push_back({1.0, {one, [](double m) { return cplx{-m, 0.0}; }}, {1.0, inf}});
  return ipd;
}

IntegralProjectiveDecomposition ipd_exp_first_order(double xi, int points, double checked_radius) {
  IntegralProjectiveDecomposition ipd;
  ipd.order = 1;
  ipd.checked_radius = checked_radius;
  if (xi == 0.0) return ipd;  // f^[1] = 0
  const QuadratureRule rule = gauss_legendre(static_cast<std::size_t>(points), 0.0, 1.0);
  const cplx phase{0.0, xi > 0.0 ? 1.0 : -1.0};  // i xi = |xi| * phase
  for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
    const double t = rule.nodes[q];
    IpdNode node;
    node.weight = rule.weights[q] * std::abs(xi);
    node.factors = {[=](double l) { return phase * std::exp(cplx{0.0, t * l * xi}); },
                    [=](double m) { return std::exp(cplx{0.0, (1.0 - t) * m * xi}); }};
    node.factor_sup = {1.0, 1.0};
    ipd.nodes.push_back(std::move(node));
  }
  ipd.tolerance = ipd.reconstruction_error(divdiff_symbol(exp_i(xi)), checked_radius);
  return ipd;
}

IntegralProjectiveDecomposition ipd_wiener(const DiscreteWienerMeasure& mu, int k, int degree,
                                           double checked_radius) {
  if (k < 1) fail(ErrorKind::UnsupportedOrder, "Wiener decomposition needs k >= 1");
  IntegralProjectiveDecomposition ipd;
  ipd.order = k;
  ipd.checked_radius = checked_radius;
  const SimplexQuadrature& quad = cached_simplex_quadrature(k, degree);
  for (const auto& atom : mu.atoms) {
    const double mag = std::abs(atom.weight);
    if (mag == 0.0 || atom.xi == 0.0) continue;
    const double xi = atom.xi;
    // c (i xi)^k = |c| |xi|^k * phase
    const cplx phase = atom.weight / mag * std::pow(cplx{0.0, xi > 0.0 ? 1.0 : -1.0}, k);
    const double scale = mag * std::pow(std::abs(xi), k);
    for (std::size_t q = 0; q < quad.size(); ++q) {
      const auto t = quad.point(q);
      IpdNode node;
      node.weight = quad.weights[q] * scale;
      for (int m = 0; m <= k; ++m) {
        const double tm = t[static_cast<std::size_t>(m)];
        const cplx lead = m == 0 ? phase : cplx{1.0, 0.0};
        node.factors.emplace_back([=](double l) { return lead * std::exp(cplx{0.0, tm * l * xi}); });
        node.factor_sup.push_back(1.0);
      }
      ipd.nodes.push_back(std::move(node));
    }
  }
  ipd.tolerance = ipd.reconstruction_error(divdiff_symbol(wiener_function(mu)), checked_radius,
                                           k >= 3 ? 4 : 6);
  return ipd;
}

Matrix moi_ipd(const IntegralProjectiveDecomposition& ipd, const DecompositionList& decomps,
               const std::vector<Matrix>& directions) {
  const auto k = directions.size();
  if (static_cast<int>(k) != ipd.order || decomps.size() != k + 1) {
    fail(ErrorKind::DimensionMismatch, "IPD order, decompositions and directions disagree");
  }
  const Eigen::Index n = decomps.front().get().dim();
  for (const auto& d : decomps) {
    if (d.get().dim() != n) fail(ErrorKind::DimensionMismatch, "decompositions act on different dimensions");
  }
  for (const auto& b : directions) check_square(b, n, "MOI direction");

  Matrix sum = Matrix::Zero(n, n);
  for (const auto& node : ipd.nodes) {
    Matrix prod = functional_calculus(node.factors[0], decomps[0].get());
    for (std::size_t j = 0; j < k; ++j) {
      prod = prod * directions[j] * functional_calculus(node.factors[j + 1], decomps[j + 1].get());
    }
    sum += node.weight * prod;
  }
  return sum;
}

double moi_norm_bound(const IntegralProjectiveDecomposition& ipd, const DecompositionList& decomps,
                      const NormSpec& spec, const std::vector<Matrix>& directions, int slot) {
  const double sup = ipd.sup_bound(decomps);
  if (directions.empty()) return sup;
  if (slot < 1 || slot > static_cast<int>(directions.size())) {
    fail(ErrorKind::IndexError, "norm slot out of range");
  }
  double bound = sup;
  for (std::size_t p = 0; p < directions.size(); ++p) {
    bound *= static_cast<int>(p) + 1 == slot ? ideal_norm(directions[p], spec) : operator_norm(directions[p]);
  }
  return bound;
}

double perturbation_first_order(const ScalarFunction& f, const Matrix& a, const Matrix& c) {
  return perturbation_higher(f, 1, a, c, {}, {}, 1);
}

double perturbation_higher(const ScalarFunction& f, int k, const Matrix& a, const Matrix& c,
                           const std::vector<Matrix>& aux, const std::vector<Matrix>& b, int slot) {
  if (k < 1) fail(ErrorKind::UnsupportedOrder, "perturbation order must be >= 1");
  if (slot < 1 || slot > k) fail(ErrorKind::IndexError, "perturbation slot must lie in 1..k");
  if (aux.size() != static_cast<std::size_t>(k) - 1 || b.size() != static_cast<std::size_t>(k) - 1) {
    fail(ErrorKind::DimensionMismatch, "perturbation of order k needs k-1 auxiliary operators and directions");
  }
  const auto j = static_cast<std::size_t>(slot) - 1;
  const SpectralDecomposition da = spectral_decompose(a);
  const SpectralDecomposition dac = spectral_decompose(a + c);
  std::vector<SpectralDecomposition> daux;
  daux.reserve(aux.size());
  for (const auto& x : aux) daux.push_back(spectral_decompose(x));
  DecompositionList aux_refs(daux.begin(), daux.end());

  const MultiSymbol lower = divdiff_symbol(f);
  const Matrix with_c = moi_direct({lower, splice(aux_refs, j, {std::cref(dac)}), b, true});
  const Matrix without_c = moi_direct({lower, splice(aux_refs, j, {std::cref(da)}), b, true});
  const Matrix rhs = moi_direct({lower, splice(aux_refs, j, {std::cref(dac), std::cref(da)}),
                                 splice(b, j, {c}), true});
  const double scale = 1.0 + operator_norm(with_c) + operator_norm(without_c) + operator_norm(c) +
                       op_norms(aux) + op_norms(b);
  return operator_norm(with_c - without_c - rhs) / scale;
}

double quasicommutator_check(const ScalarFunction& f, const Matrix& a, const Matrix& b, const Matrix& q) {
  const SpectralDecomposition da = spectral_decompose(a);
  const SpectralDecomposition db = spectral_decompose(b);
  check_square(q, da.dim(), "quasicommutator q");
  const Matrix fa_q = functional_calculus(f, da) * q;
  const Matrix q_fb = q * functional_calculus(f, db);
  const Matrix rhs = moi_direct({divdiff_symbol(f), {da, db}, {a * q - q * b}, true});
  const double scale = 1.0 + operator_norm(fa_q) + operator_norm(q_fb) + operator_norm(a * q - q * b);
  return operator_norm(fa_q - q_fb - rhs) / scale;
}

double moi_multiplicativity_check(const MultiSymbol& phi, const MultiSymbol& psi, int m,
                                  const DecompositionList& decomps,
                                  const std::vector<Matrix>& directions) {
  const int k = static_cast<int>(directions.size());
  if (m < 1 || m > k) fail(ErrorKind::IndexError, "multiplicativity slot must lie in 1..k");
  const auto slot = static_cast<std::size_t>(m) - 1;
  const MultiSymbol product = [phi, psi, slot](std::span<const double> l) {
    return phi(l) * psi(l.subspan(slot, 2));
  };
  const Matrix lhs = moi_direct({product, decomps, directions});
  std::vector<Matrix> replaced = directions;
  replaced[slot] = moi_direct({psi, {decomps[slot], decomps[slot + 1]}, {directions[slot]}});
  const Matrix rhs = moi_direct({phi, decomps, replaced});
  return operator_norm(lhs - rhs) / (1.0 + operator_norm(lhs) + operator_norm(rhs));
}

}  // namespace opcalc
