#pragma once

#include <Eigen/Dense>

#include <complex>
#include <random>
#include <vector>

#include "hornlr/weights.hpp"

namespace hornlr {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

/// d×d complex matrix with ‖M − M†‖_max <= 1e-12.
class HermitianOperator {
 public:
  /// Throws std::domain_error if `m` is not square or not Hermitian.
  explicit HermitianOperator(Matrix m);
  static HermitianOperator diagonal(const std::vector<double>& diag);
  /// U diag(values) U†, symmetrized.
  static HermitianOperator conjugated(const Matrix& unitary, const std::vector<double>& values);

  int dim() const { return static_cast<int>(m_.rows()); }
  const Matrix& matrix() const { return m_; }
  double trace() const { return m_.trace().real(); }
  /// Eigenvalues in descending order.
  std::vector<double> eigenvalues() const;

  friend HermitianOperator operator+(const HermitianOperator& a, const HermitianOperator& b);

 private:
  Matrix m_;
};

/// Positive semidefinite Hermitian operator with unit trace.
class DensityOperator {
 public:
  /// Throws std::domain_error unless Hermitian within 1e-12, eigenvalues
  /// >= -1e-10 and trace 1 within 1e-10.
  explicit DensityOperator(Matrix m);
  static DensityOperator diagonal(const std::vector<double>& diag);

  int dim() const { return static_cast<int>(op_.dim()); }
  const Matrix& matrix() const { return op_.matrix(); }
  const HermitianOperator& op() const { return op_; }
  /// Descending spectrum, clamped to [0, 1] near the boundary and
  /// renormalized.
  NormalizedSpectrum spectrum() const;

 private:
  HermitianOperator op_;
};

/// Haar-distributed unitary from the QR decomposition of a Ginibre matrix.
Matrix random_unitary(int d, std::mt19937_64& rng);

/// exp(i H) for Hermitian H, via its eigendecomposition.
Matrix unitary_exp(const Matrix& hermitian);

/// Random density operator G G† / Tr(G G†) with G Ginibre.
DensityOperator random_density(int d, std::mt19937_64& rng);

}  // namespace hornlr
