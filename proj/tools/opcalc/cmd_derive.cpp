#include <cmath>

#include "commands.hpp"
#include "opcalc/catalog.hpp"
#include "opcalc/derivative.hpp"
#include "opcalc/errors.hpp"
#include "opcalc/matrix_io.hpp"
#include "output.hpp"

namespace opcalc::cli {

namespace {

struct DeriveArgs {
  std::string function;
  std::string a_file;
  std::vector<std::string> b_files;
  int k = 1;
};

// Mixed derivative from equal-direction finite differences via polarization:
// D^k(b_1..b_k) = 1/(2^k k!) sum_{eps in {+-1}^k} eps_1..eps_k D^k(sum eps_i b_i, ..., same).
Matrix polarized_fd_oracle(const ScalarFunction& f, const Matrix& a, const std::vector<Matrix>& dirs) {
  const int k = static_cast<int>(dirs.size());
  Matrix sum = Matrix::Zero(a.rows(), a.cols());
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    Matrix b = Matrix::Zero(a.rows(), a.cols());
    double sign = 1.0;
    for (int i = 0; i < k; ++i) {
      const double eps = (mask >> i) & 1u ? -1.0 : 1.0;
      b += eps * dirs[static_cast<std::size_t>(i)];
      sign *= eps;
    }
    sum += sign * gateaux_fd_oracle(f, a, b, k);
  }
  return sum / (std::ldexp(1.0, k) * std::tgamma(k + 1.0));
}

int run_derive(const DeriveArgs& args, const GlobalOptions& global) {
  if (args.k < 1) fail(ErrorKind::UsageError, "derivative order k must be at least 1");
  if (args.k > kMaxDerivativeOrder) {
    fail(ErrorKind::UsageError, "derivative order k must be at most " + std::to_string(kMaxDerivativeOrder));
  }
  if (args.b_files.size() != 1 && static_cast<int>(args.b_files.size()) != args.k) {
    fail(ErrorKind::UsageError, "give one direction file (used k times) or exactly k of them");
  }
  const ScalarFunction f = make_function(args.function);
  const HermitianOperator a{read_matrix_file(args.a_file)};
  std::vector<Matrix> dirs;
  for (const auto& file : args.b_files) dirs.push_back(HermitianOperator{read_matrix_file(file)}.matrix());
  if (dirs.size() == 1) dirs.assign(static_cast<std::size_t>(args.k), dirs.front());

  const Matrix derivative = frechet_derivative({f, a.matrix(), dirs});
  const bool equal = std::all_of(dirs.begin(), dirs.end(), [&](const Matrix& b) { return b == dirs.front(); });
  const Matrix oracle =
      equal ? gateaux_fd_oracle(f, a.matrix(), dirs.front(), args.k) : polarized_fd_oracle(f, a.matrix(), dirs);
  const double residual = operator_norm(derivative - oracle) / (1.0 + operator_norm(derivative));
  const double tol = global.tolerance("derivative", 1e-5);

  Json report;
  report["function"] = f.name();
  report["k"] = args.k;
  report["dimension"] = a.dim();
  report["derivative"] = matrix_json(derivative);
  report["oracle"] = matrix_json(oracle);
  report["residual"] = residual;
  report["tolerance"] = tol;
  report["passed"] = residual <= tol;
  emit_report(global, "derive", report);
  return residual <= tol ? kPass : kCheckFailed;
}

}  // namespace

Runner add_derive(CLI::App& app, const GlobalOptions& global) {
  auto args = std::make_shared<DeriveArgs>();
  auto* sub = app.add_subcommand("derive", "k-th Frechet derivative of f at a with a finite-difference oracle");
  sub->add_option("-f,--function", args->function, "Catalog function, e.g. sq, exp, expi:2")->required();
  sub->add_option("-a,--a", args->a_file, "JSON file with the Hermitian base point a")->required();
  sub->add_option("-b,--b", args->b_files, "JSON file(s) with Hermitian directions")->required();
  sub->add_option("-k,--order", args->k, "Derivative order (>= 1)")->required();
  return [args, &global] { return run_derive(*args, global); };
}

}  // namespace opcalc::cli
