#include "opcalc/spectral.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "opcalc/errors.hpp"

namespace opcalc {

bool is_hermitian(const Matrix& a, double rel_tol) {
  if (a.rows() != a.cols()) return false;
  const double scale = a.cwiseAbs().maxCoeff();
  const double skew = (a - a.adjoint()).cwiseAbs().maxCoeff();
  return skew <= rel_tol * std::max(scale, 1e-300) || skew == 0.0;
}

HermitianOperator::HermitianOperator(const Matrix& entries) {
  if (entries.rows() == 0 || entries.rows() != entries.cols()) {
    fail(ErrorKind::DimensionMismatch, "Hermitian operator must be a non-empty square matrix");
  }
  if (!entries.allFinite()) fail(ErrorKind::DomainError, "matrix entries must be finite");
  if (!is_hermitian(entries)) fail(ErrorKind::NonHermitianInput, "matrix is not Hermitian");
  entries_ = 0.5 * (entries + entries.adjoint());
}

double default_cluster_tol(const Matrix& a) {
  const double radius = a.rows() == 0 ? 0.0 : operator_norm(a);
  return std::max(1e-10 * radius, 1e-14);
}

SpectralDecomposition spectral_decompose(const Matrix& a, double cluster_tol) {
  const HermitianOperator h(a);
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h.matrix());
  if (solver.info() != Eigen::Success) {
    fail(ErrorKind::EigensolverFailure, "self-adjoint eigensolver did not converge");
  }
  const RealVector& evals = solver.eigenvalues();  // ascending
  const Matrix& evecs = solver.eigenvectors();
  const Eigen::Index n = h.dim();
  if (cluster_tol < 0.0) {
    // Same value as default_cluster_tol: ||a|| = max |lambda| for Hermitian a, without a second SVD.
    const double radius = std::max(std::abs(evals(0)), std::abs(evals(n - 1)));
    cluster_tol = std::max(1e-10 * radius, 1e-14);
  }

  SpectralDecomposition d;
  d.cluster_tol_ = cluster_tol;
  d.eigenvectors_ = evecs;
  d.cluster_of_.resize(static_cast<std::size_t>(n));

  Eigen::Index start = 0;
  while (start < n) {
    Eigen::Index stop = start + 1;
    while (stop < n && evals(stop) - evals(stop - 1) <= cluster_tol) ++stop;
    const std::size_t c = d.eigenvalues_.size();
    d.eigenvalues_.push_back(evals.segment(start, stop - start).mean());
    const auto block = evecs.middleCols(start, stop - start);
    Matrix p = block * block.adjoint();
    d.projectors_.push_back(0.5 * (p + p.adjoint()));
    for (Eigen::Index i = start; i < stop; ++i) d.cluster_of_[static_cast<std::size_t>(i)] = c;
    start = stop;
  }
  return d;
}

Matrix SpectralDecomposition::reconstruct() const {
  Matrix out = Matrix::Zero(dim(), dim());
  for (std::size_t i = 0; i < eigenvalues_.size(); ++i) out += eigenvalues_[i] * projectors_[i];
  return out;
}

Matrix functional_calculus(const std::function<cplx(double)>& f, const SpectralDecomposition& d) {
  // V diag(f) V* is the projector sum written in the eigenvector basis.
  const Matrix& v = d.eigenvectors();
  Eigen::VectorXcd values(v.cols());
  std::vector<cplx> per_cluster(d.clusters());
  for (std::size_t c = 0; c < d.clusters(); ++c) {
    per_cluster[c] = f(d.eigenvalues()[c]);
    if (!std::isfinite(per_cluster[c].real()) || !std::isfinite(per_cluster[c].imag())) {
      fail(ErrorKind::DomainError, "function undefined at eigenvalue " + std::to_string(d.eigenvalues()[c]));
    }
  }
  for (Eigen::Index i = 0; i < v.cols(); ++i) values(i) = per_cluster[d.cluster_of()[static_cast<std::size_t>(i)]];
  return v * values.asDiagonal() * v.adjoint();
}

Matrix apply_function(const std::function<cplx(double)>& f, const Matrix& a) {
  return functional_calculus(f, spectral_decompose(a));
}

double operator_norm(const Matrix& a) {
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(a);
  return svd.singularValues()(0);
}

}  // namespace opcalc
