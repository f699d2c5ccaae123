#pragma once

#include <functional>
#include <vector>

#include "opcalc/types.hpp"

namespace opcalc {

/// Dense Hermitian matrix. Construction checks ||A - A*||_entrywise <= 1e-12 * ||A||
/// and throws NonHermitianInput otherwise; the stored matrix is symmetrized.
class HermitianOperator {
 public:
  explicit HermitianOperator(const Matrix& entries);

  Eigen::Index dim() const { return entries_.rows(); }
  const Matrix& matrix() const { return entries_; }
  operator const Matrix&() const { return entries_; }

 private:
  Matrix entries_;
};

bool is_hermitian(const Matrix& a, double rel_tol = 1e-12);

/// Finite projection-valued measure of a Hermitian matrix: distinct eigenvalues
/// (ascending) with orthogonal spectral projectors. Immutable after construction.
class SpectralDecomposition {
 public:
  std::size_t clusters() const { return eigenvalues_.size(); }
  Eigen::Index dim() const { return eigenvectors_.rows(); }
  const std::vector<double>& eigenvalues() const { return eigenvalues_; }
  const std::vector<Matrix>& projectors() const { return projectors_; }
  double cluster_tol() const { return cluster_tol_; }

  /// Orthonormal eigenvectors, columns grouped by cluster in ascending order.
  const Matrix& eigenvectors() const { return eigenvectors_; }
  /// Cluster index of each eigenvector column.
  const std::vector<std::size_t>& cluster_of() const { return cluster_of_; }

  Matrix reconstruct() const;

 private:
  friend SpectralDecomposition spectral_decompose(const Matrix& a, double cluster_tol);

  std::vector<double> eigenvalues_;
  std::vector<Matrix> projectors_;
  Matrix eigenvectors_;
  std::vector<std::size_t> cluster_of_;
  double cluster_tol_ = 0.0;
};

/// Default clustering tolerance: max(1e-10 * spectral radius, 1e-14).
double default_cluster_tol(const Matrix& a);

/// Eigenvalues within cluster_tol of their neighbour are merged (chained) into
/// one projector with the mean eigenvalue. A negative tolerance selects the
/// default. Throws NonHermitianInput, EigensolverFailure.
SpectralDecomposition spectral_decompose(const Matrix& a, double cluster_tol = -1.0);

/// sum_i f(lambda_i) P_i. Throws DomainError if f returns a non-finite value.
Matrix functional_calculus(const std::function<cplx(double)>& f, const SpectralDecomposition& d);

/// Convenience: decompose then apply.
Matrix apply_function(const std::function<cplx(double)>& f, const Matrix& a);

double operator_norm(const Matrix& a);

}  // namespace opcalc
