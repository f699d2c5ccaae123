#include <algorithm>
#include <cmath>

#include "commands.hpp"
#include "opcalc/catalog.hpp"
#include "opcalc/divided_difference.hpp"
#include "opcalc/errors.hpp"
#include "opcalc/kernels.hpp"
#include "opcalc/littlewood_paley.hpp"
#include "opcalc/peller.hpp"
#include "opcalc/wiener.hpp"
#include "output.hpp"

namespace opcalc::cli {

namespace {

Json complex_json(cplx z) { return Json::array({z.real(), z.imag()}); }

struct BesovArgs {
  std::string grid_file;
  int k = 1;
  int j_min = -6;
  int j_max = 6;
  int detrend_degree = -1;
};

int run_besov(const BesovArgs& args, const GlobalOptions& global) {
  if (args.k < 0) fail(ErrorKind::UsageError, "k must be non-negative");
  if (args.j_max < args.j_min) fail(ErrorKind::UsageError, "j-max must not be below j-min");
  GridFunction f = GridFunction::read_csv(args.grid_file);
  if (args.detrend_degree >= 0) f = detrend(f, args.detrend_degree);
  const BesovReport r = besov_seminorm(f, args.k, args.j_min, args.j_max);

  const double largest = r.block_sup.empty() ? 0.0 : *std::max_element(r.block_sup.begin(), r.block_sup.end());
  Json blocks = Json::array();
  int significant = 0;
  for (std::size_t i = 0; i < r.block_sup.size(); ++i) {
    const bool big = r.block_sup[i] > 1e-8 * std::max(largest, f.sup_norm());
    significant += big;
    blocks.push_back({{"j", r.j_min + static_cast<int>(i)}, {"sup", r.block_sup[i]}, {"significant", big}});
  }
  Json bernstein = Json::array();
  for (int k = 1; k <= std::max(args.k, 1); ++k) bernstein.push_back(bernstein_constant(k));

  Json report;
  report["grid"] = {{"size", f.size()}, {"spacing", f.spacing()}, {"origin", f.origin()}};
  report["k"] = r.k;
  report["j_min"] = r.j_min;
  report["j_max"] = r.j_max;
  report["blocks"] = std::move(blocks);
  report["significant_blocks"] = significant;
  report["seminorm"] = r.seminorm;
  report["truncation_tail"] = r.truncation_tail;
  report["leakage"] = r.leakage;
  report["bernstein_constants"] = std::move(bernstein);
  emit_report(global, "besov", report);
  return kPass;
}

struct PellerArgs {
  std::string function;
  std::vector<double> nodes;
  int radial_points = PellerOptions{}.radial_points;
  int simplex_degree = PellerOptions{}.simplex_degree;
};

int run_peller(const PellerArgs& args, const GlobalOptions& global) {
  if (args.nodes.size() < 2) fail(ErrorKind::UsageError, "need at least two nodes (k >= 1)");
  const auto f = BandlimitedFunction::from_function(make_function(args.function));
  const NodeVector nodes(args.nodes);
  const PellerOptions opt{args.radial_points, args.simplex_degree};
  const bool half = f.band_type() == BandType::positive_half;
  const cplx value = half ? peller_divdiff(f, nodes, opt) : peller_divdiff_split(f, nodes, opt);
  const cplx reference = divided_difference(f.function(), nodes.values());
  const double deviation = std::abs(value - reference);
  const double tol = global.tolerance("peller", 1e-4);

  Json report;
  report["function"] = f.function().name();
  report["band"] = half ? "positive_half" : "symmetric";
  report["sigma"] = f.sigma();
  report["k"] = nodes.order();
  report["nodes"] = args.nodes;
  report["representation"] = half ? "direct" : "split";
  report["peller"] = complex_json(value);
  report["divided_difference"] = complex_json(reference);
  report["deviation"] = deviation;
  if (half) report["outer_shell"] = std::abs(peller_outer_shell(f, nodes, opt));
  report["tolerance"] = tol;
  report["passed"] = deviation <= tol;
  emit_report(global, "peller", report);
  return deviation <= tol ? kPass : kCheckFailed;
}

struct ReportArgs {
  std::vector<std::string> wiener_functions;
  int max_order = 3;
};

int run_report(const ReportArgs& args, const GlobalOptions& global) {
  if (args.max_order < 1 || args.max_order > 4) fail(ErrorKind::UsageError, "max-order must lie in 1..4");
  const KernelNorms norms = r1_norm_estimates();
  const double l2_target = std::sqrt(2.0 / kPi);
  const bool l2_ok = std::abs(norms.l2 - l2_target) <= 1e-4;
  const bool l1_ok = norms.l1 < 2.0 && norms.l1 <= 2.0 / std::sqrt(kPi) + 2.0 / kPi + 0.05;

  Json report;
  report["r1"] = {{"l1", norms.l1},
                  {"l1_tail", norms.l1_tail},
                  {"l2", norms.l2},
                  {"l2_plancherel", norms.l2_plancherel},
                  {"l2_target", l2_target},
                  {"l2_ok", l2_ok},
                  {"l1_ok", l1_ok}};
  Json bern = Json::array();
  for (int k = 1; k <= args.max_order; ++k) bern.push_back({{"k", k}, {"b_k", bernstein_constant(k)}});
  report["bernstein"] = std::move(bern);
  report["block_kernel_l1"] = block_kernel_l1();
  Json wiener = Json::array();
  for (const auto& name : args.wiener_functions) {
    const auto f = make_function(name);
    if (!f.wiener) fail(ErrorKind::UsageError, "'" + name + "' carries no Wiener measure");
    Json bounds = Json::array();
    for (int k = 1; k <= args.max_order; ++k) bounds.push_back(wiener_bound(*f.wiener, k));
    wiener.push_back({{"function", f.name()}, {"bounds", std::move(bounds)}});
  }
  report["wiener"] = std::move(wiener);
  emit_report(global, "report", report);
  return l2_ok && l1_ok ? kPass : kCheckFailed;
}

}  // namespace

Runner add_besov(CLI::App& app, const GlobalOptions& global) {
  auto args = std::make_shared<BesovArgs>();
  auto* sub = app.add_subcommand("besov", "Littlewood-Paley blocks and homogeneous Besov seminorm of a sampled grid");
  sub->add_option("-g,--grid", args->grid_file, "CSV file with columns x,re,im")->required();
  sub->add_option("-k,--order", args->k, "Smoothness index k")->capture_default_str();
  sub->add_option("--j-min", args->j_min, "Lowest block index")->capture_default_str();
  sub->add_option("--j-max", args->j_max, "Highest block index")->capture_default_str();
  sub->add_option("--detrend", args->detrend_degree, "Remove a least-squares polynomial of this degree first");
  return [args, &global] { return run_besov(*args, global); };
}

Runner add_peller(CLI::App& app, const GlobalOptions& global) {
  auto args = std::make_shared<PellerArgs>();
  auto* sub = app.add_subcommand("peller", "Divided difference via the band-limited integral representation");
  sub->add_option("-f,--function", args->function, "Band-limited catalog function (expi, wiener, gauss-band)")
      ->required();
  sub->add_option("--nodes", args->nodes, "k+1 real nodes")->required();
  sub->add_option("--radial-points", args->radial_points, "Gauss points per radial subinterval")
      ->capture_default_str();
  sub->add_option("--simplex-degree", args->simplex_degree, "Per-axis degree on the angular simplex")
      ->capture_default_str();
  return [args, &global] { return run_peller(*args, global); };
}

Runner add_report(CLI::App& app, const GlobalOptions& global) {
  auto args = std::make_shared<ReportArgs>();
  auto* sub = app.add_subcommand("report", "Kernel, Bernstein and Wiener constants computed by this build");
  sub->add_option("--wiener", args->wiener_functions, "Wiener/exponential functions whose bounds to report");
  sub->add_option("--max-order", args->max_order, "Largest k reported")->capture_default_str();
  return [args, &global] { return run_report(*args, global); };
}

}  // namespace opcalc::cli
