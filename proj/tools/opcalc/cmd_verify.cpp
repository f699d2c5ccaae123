#include <algorithm>
#include <atomic>
#include <cstdio>
#include <iostream>
#include <thread>

#include "commands.hpp"
#include "opcalc/catalog.hpp"
#include "opcalc/derivative.hpp"
#include "opcalc/errors.hpp"
#include "opcalc/ideal_norms.hpp"
#include "opcalc/moi.hpp"
#include "opcalc/random.hpp"
#include "output.hpp"

namespace opcalc::cli {

namespace {

struct CampaignConfig {
  std::vector<int> dims{2, 3, 4, 5, 6};
  std::vector<int> orders{1, 2, 3};
  std::vector<std::string> functions;
  std::vector<std::string> norms{"p=1", "p=2", "p=3", "op", "gauge:1;0.5;0.25"};
  int trials = 20;
  int threads = 0;  // 0: hardware concurrency
  bool self_test = false;
};

struct Row {
  int trial = 0;
  std::string check;
  std::string function;
  Eigen::Index n = 0;
  int k = 0;
  std::string norm;
  double lhs = 0.0;
  double rhs = 0.0;
  bool passed = false;
};

struct Tolerances {
  double perturbation, higher, derivative, collapse, quasicommutator;
};

void validate(const CampaignConfig& c) {
  if (c.trials < 1) fail(ErrorKind::ConfigError, "trials must be at least 1");
  if (c.dims.empty() || c.orders.empty() || c.norms.empty()) {
    fail(ErrorKind::ConfigError, "dims, orders and norms must be non-empty");
  }
  for (int n : c.dims) {
    if (n < 1 || n > 64) fail(ErrorKind::ConfigError, "dims must lie in 1..64");
  }
  for (int k : c.orders) {
    if (k < 1 || k > kMaxDerivativeOrder) fail(ErrorKind::ConfigError, "orders must lie in 1..4");
  }
}

// Residual-type check: passes when residual <= tolerance.
Row residual_row(int trial, std::string check, const ScalarFunction& f, Eigen::Index n, int k, double residual,
                 double tol) {
  return {trial, std::move(check), f.name(), n, k, "op", residual, tol, residual <= tol};
}

Row inequality_row(int trial, std::string check, const std::string& fname, Eigen::Index n, const NormSpec& spec,
                   const InequalityCheck& c) {
  return {trial, std::move(check), fname, n, 0, spec.label(), c.lhs, c.rhs, c.passed};
}

// Perturbation formula with the sign of the divided-difference term flipped;
// used by --self-test to prove the harness reports failures.
double sign_flipped_perturbation(const ScalarFunction& f, const Matrix& a, const Matrix& c) {
  const Matrix ac = a + c;
  const auto d0 = spectral_decompose(ac);
  const auto d1 = spectral_decompose(a);
  const Matrix lhs = functional_calculus(f, d0) - functional_calculus(f, d1);
  const Matrix rhs = -moi_direct({divdiff_symbol(f), {d0, d1}, {c}});
  return operator_norm(lhs - rhs) / (1.0 + operator_norm(a) + operator_norm(c));
}

std::vector<Row> run_trial(int t, const CampaignConfig& cfg, const std::vector<ScalarFunction>& fs,
                           const std::vector<NormSpec>& norms, const Tolerances& tol, std::uint64_t seed) {
  RandomStream rng(seed, static_cast<std::uint64_t>(t));
  // Dimensions cycle fastest; the function index is shifted once per dimension sweep so short
  // campaigns still touch every dimension and every function.
  const auto ut = static_cast<std::size_t>(t);
  const int n = cfg.dims[ut % cfg.dims.size()];
  const ScalarFunction& f = fs[(ut + ut / cfg.dims.size()) % fs.size()];
  const Matrix a = random_hermitian(rng, n);
  const Matrix c = random_hermitian(rng, n, 0.5);
  const Matrix b = random_hermitian(rng, n);
  std::vector<Row> rows;

  rows.push_back(residual_row(t, "perturbation", f, n, 1, perturbation_first_order(f, a, c), tol.perturbation));
  for (int k : cfg.orders) {
    const auto dk = daletskii_krein_check(f, a, b, k);
    rows.push_back(residual_row(t, "derivative_fd", f, n, k, dk.fd_residual, tol.derivative));
    rows.push_back(residual_row(t, "derivative_collapse", f, n, k, dk.collapse_residual, tol.collapse));
    if (k >= 2 && k <= 3) {
      std::vector<Matrix> aux, dirs;
      for (int j = 1; j < k; ++j) {
        aux.push_back(random_hermitian(rng, n));
        dirs.push_back(random_matrix(rng, n, n));
      }
      const int slot = 1 + t % k;
      rows.push_back(residual_row(t, "perturbation_higher", f, n, k, perturbation_higher(f, k, a, c, aux, dirs, slot),
                                  tol.higher));
    }
  }
  const Matrix q = random_matrix(rng, n, n);
  rows.push_back(residual_row(t, "quasicommutator", f, n, 1, quasicommutator_check(f, a, b, q), tol.quasicommutator));

  const Matrix x = random_matrix(rng, n, n);
  const Matrix r = random_matrix(rng, n, n);
  const Matrix y = random_matrix(rng, n, n);
  const int len = 1 + t % 5;
  std::vector<double> w;
  std::vector<Matrix> left, right, terms;
  for (int i = 0; i < len; ++i) {
    w.push_back(rng.uniform(0.05, 2.0));
    left.push_back(random_matrix(rng, n, n));
    right.push_back(random_matrix(rng, n, n));
    terms.push_back(random_matrix(rng, n, n));
  }
  for (const auto& spec : norms) {
    rows.push_back(inequality_row(t, "symmetric_norm", "-", n, spec, symmetric_norm_check(x, r, y, spec)));
    rows.push_back(inequality_row(t, "integral_symmetric_norm", "-", n, spec,
                                  integral_symmetric_norm_check(w, left, right, r, spec)));
    rows.push_back(inequality_row(t, "minkowski", "-", n, spec, minkowski_property_check(w, terms, spec)));
    if (f.lipschitz_bound) {
      rows.push_back(
          inequality_row(t, "lipschitz_bound", f.name(), n, spec, perturbation_norm_bound_check(f, a, c, spec)));
    }
  }
  if (cfg.self_test) {
    rows.push_back(
        residual_row(t, "injected_sign_flip", f, n, 1, sign_flipped_perturbation(f, a, c), tol.perturbation));
  }
  return rows;
}

std::string csv_escape(std::string s) {
  std::replace(s.begin(), s.end(), ',', ';');
  return s;
}

std::string format_rows_csv(const std::vector<Row>& rows) {
  std::string out = "trial,check,function,n,k,norm,lhs,rhs,passed\n";
  char buf[96];
  for (const auto& r : rows) {
    out += std::to_string(r.trial) + "," + r.check + "," + csv_escape(r.function) + "," + std::to_string(r.n) + "," +
           std::to_string(r.k) + "," + csv_escape(r.norm) + ",";
    std::snprintf(buf, sizeof buf, "%.9e,%.9e,", r.lhs, r.rhs);
    out += buf;
    out += r.passed ? "1\n" : "0\n";
  }
  return out;
}

std::string format_rows_json(const std::vector<Row>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    out.push_back({{"trial", r.trial},
                   {"check", r.check},
                   {"function", r.function},
                   {"n", r.n},
                   {"k", r.k},
                   {"norm", r.norm},
                   {"lhs", r.lhs},
                   {"rhs", r.rhs},
                   {"passed", r.passed}});
  }
  return out.dump(1) + "\n";
}

int run_verify(const CampaignConfig& cfg, const GlobalOptions& global) {
  validate(cfg);
  std::vector<ScalarFunction> fs;
  if (cfg.functions.empty()) {
    for (auto name : default_catalog_names()) fs.push_back(make_function(name));
  } else {
    for (const auto& name : cfg.functions) fs.push_back(make_function(name));
  }
  std::vector<NormSpec> norms;
  for (const auto& text : cfg.norms) norms.push_back(NormSpec::parse(text));
  const Tolerances tol{global.tolerance("perturbation", 1e-9), global.tolerance("higher", 1e-8),
                       global.tolerance("derivative", 1e-5), global.tolerance("collapse", 1e-12),
                       global.tolerance("quasicommutator", 1e-9)};

  // Work pool over trial indices; each trial owns its random stream, and the
  // per-trial results are concatenated in index order afterwards.
  std::vector<std::vector<Row>> per_trial(static_cast<std::size_t>(cfg.trials));
  std::vector<std::exception_ptr> errors(per_trial.size());
  std::atomic<int> next{0};
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned workers = std::min<unsigned>(cfg.threads > 0 ? static_cast<unsigned>(cfg.threads) : hw,
                                              static_cast<unsigned>(cfg.trials));
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int t = next++; t < cfg.trials; t = next++) {
        try {
          per_trial[static_cast<std::size_t>(t)] = run_trial(t, cfg, fs, norms, tol, global.seed);
        } catch (...) {
          errors[static_cast<std::size_t>(t)] = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  std::vector<Row> rows;
  for (auto& chunk : per_trial) rows.insert(rows.end(), chunk.begin(), chunk.end());
  const auto failures = std::count_if(rows.begin(), rows.end(), [](const Row& r) { return !r.passed; });
  if (global.format == "json") {
    emit(global, "verify", "json", format_rows_json(rows));
  } else {
    emit(global, "verify", "csv", format_rows_csv(rows));
  }
  std::cerr << "verify: " << rows.size() << " checks over " << cfg.trials << " trials, " << failures
            << " failure(s)\n";
  return failures == 0 ? kPass : kCheckFailed;
}

}  // namespace

Runner add_verify(CLI::App& app, const GlobalOptions& global) {
  auto cfg = std::make_shared<CampaignConfig>();
  auto* sub = app.add_subcommand("verify", "Run the seeded identity and inequality battery; CSV row per check");
  sub->add_option("--dims", cfg->dims, "Matrix sizes")->capture_default_str();
  sub->add_option("--orders", cfg->orders, "Derivative orders k")->capture_default_str();
  sub->add_option("--functions", cfg->functions, "Catalog functions (default: built-in catalog)");
  sub->add_option("--norms", cfg->norms, "Norms: op, p=<p>, gauge:<w1;w2;...>")->capture_default_str();
  sub->add_option("--trials", cfg->trials, "Number of seeded trials")->capture_default_str();
  sub->add_option("--threads", cfg->threads, "Worker threads (0: all cores)");
  sub->add_flag("--self-test", cfg->self_test, "Add a deliberately wrong formula; the run must then fail");
  return [cfg, &global] { return run_verify(*cfg, global); };
}

}  // namespace opcalc::cli
