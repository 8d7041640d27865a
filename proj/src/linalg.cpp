#include "hornlr/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace hornlr {

HermitianOperator::HermitianOperator(Matrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || m_.rows() < 1) throw std::domain_error("operator must be square and nonempty");
  const double asym = (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
  if (asym > 1e-12 * std::max(1.0, m_.cwiseAbs().maxCoeff()))
    throw std::domain_error("operator is not Hermitian");
}

HermitianOperator HermitianOperator::diagonal(const std::vector<double>& diag) {
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(diag.size()), static_cast<Eigen::Index>(diag.size()));
  for (std::size_t i = 0; i < diag.size(); ++i) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = diag[i];
  return HermitianOperator(std::move(m));
}

HermitianOperator HermitianOperator::conjugated(const Matrix& unitary, const std::vector<double>& values) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) v(static_cast<Eigen::Index>(i)) = values[i];
  Matrix m = unitary * v.cast<Complex>().asDiagonal() * unitary.adjoint();
  m = 0.5 * (m + m.adjoint()).eval();
  return HermitianOperator(std::move(m));
}

std::vector<double> HermitianOperator::eigenvalues() const {
  Eigen::SelfAdjointEigenSolver<Matrix> es(m_, Eigen::EigenvaluesOnly);
  std::vector<double> ev(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  std::sort(ev.begin(), ev.end(), std::greater<>());
  return ev;
}

HermitianOperator operator+(const HermitianOperator& a, const HermitianOperator& b) {
  if (a.dim() != b.dim()) throw std::domain_error("dimension mismatch in operator sum");
  return HermitianOperator(a.m_ + b.m_);
}

DensityOperator::DensityOperator(Matrix m) : op_(std::move(m)) {
  if (std::abs(op_.trace() - 1.0) > 1e-10) throw std::domain_error("density operator must have unit trace");
  const auto ev = op_.eigenvalues();
  if (ev.back() < -1e-10) throw std::domain_error("density operator must be positive semidefinite");
}

DensityOperator DensityOperator::diagonal(const std::vector<double>& diag) {
  return DensityOperator(HermitianOperator::diagonal(diag).matrix());
}

NormalizedSpectrum DensityOperator::spectrum() const {
  auto ev = op_.eigenvalues();
  for (double& v : ev)
    if (v > 1.0 && v < 1.0 + 1e-10) v = 1.0;
  return NormalizedSpectrum::from_unsorted(std::move(ev), 1e-10);
}

Matrix random_unitary(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      g(i, j) = Complex(re, im);
    }
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // fix the phases of R's diagonal so Q is Haar distributed
  for (int j = 0; j < d; ++j) {
    const Complex rjj = r(j, j);
    const double a = std::abs(rjj);
    if (a > 0) q.col(j) *= rjj / a;
  }
  return q;
}

Matrix unitary_exp(const Matrix& hermitian) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian);
  const Eigen::VectorXcd phases = (Complex(0, 1) * es.eigenvalues().cast<Complex>()).array().exp();
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

DensityOperator random_density(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      g(i, j) = Complex(re, im);
    }
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return DensityOperator(std::move(rho));
}

}  // namespace hornlr
