#include "hornlr/horn_realize.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <random>
#include <stdexcept>

#include "hornlr/lr.hpp"

namespace hornlr {

namespace detail {

Eigen::MatrixXd eigenvalue_jacobian(const Matrix& A, const Matrix& B) {
  const auto d = A.rows();
  Eigen::SelfAdjointEigenSolver<Matrix> es(A + B);
  Eigen::MatrixXd J(d, d * d);
  for (Eigen::Index i = 0; i < d; ++i) {
    // eigenvalues come ascending; row i is the i-th largest
    const Eigen::VectorXcd w = es.eigenvectors().col(d - 1 - i);
    const Eigen::VectorXcd y = B * w;
    // dλ_i/dθ = −2 Im(w† G y) for B → exp(iθG) B exp(−iθG)
    Eigen::Index a = 0;
    for (Eigen::Index j = 0; j < d; ++j) J(i, a++) = -2.0 * (std::conj(w(j)) * y(j)).imag();
    for (Eigen::Index j = 0; j < d; ++j)
      for (Eigen::Index l = j + 1; l < d; ++l) {
        const Complex u = std::conj(w(j)) * y(l);
        const Complex v = std::conj(w(l)) * y(j);
        J(i, a++) = -2.0 * (u + v).imag();
        J(i, a++) = -2.0 * (Complex(0, 1) * (u - v)).imag();
      }
  }
  return J;
}

Matrix hermitian_from_coords(const Eigen::VectorXd& delta, int d) {
  Matrix H = Matrix::Zero(d, d);
  Eigen::Index a = 0;
  for (int j = 0; j < d; ++j) H(j, j) = delta(a++);
  for (int j = 0; j < d; ++j)
    for (int l = j + 1; l < d; ++l) {
      const double s = delta(a++);
      const double t = delta(a++);
      H(j, l) = Complex(s, t);
      H(l, j) = Complex(s, -t);
    }
  return H;
}

}  // namespace detail

namespace {

std::vector<double> as_doubles(const DominantWeight& w) { return {w.parts().begin(), w.parts().end()}; }

struct Point {
  Matrix V;
  Matrix B;
  double l1;
  double l2;
};

class RestartSearch {
 public:
  RestartSearch(const SpectralTriple& t, const RealizeConfig& config, double tol)
      : mu_(as_doubles(t.mu)), nu_(as_doubles(t.nu)), d_(t.dim()), config_(config), tol_(tol) {
    target_.resize(d_);
    for (int i = 0; i < d_; ++i) target_(i) = t.lambda[i];
    nu_diag_ = Eigen::Map<const Eigen::VectorXd>(nu_.data(), d_).cast<Complex>();
  }

  struct Outcome {
    Matrix U;
    Point best;
    int iterations;
    std::vector<double> history;
  };

  Outcome run(std::mt19937_64& rng) {
    Outcome out;
    out.U = random_unitary(d_, rng);
    A_ = HermitianOperator::conjugated(out.U, mu_).matrix();
    Point cur = evaluate(random_unitary(d_, rng));
    out.best = cur;
    out.iterations = 0;

    const double stop = tol_ * 1e-2;
    double damping = 1e-2;
    double kick = config_.initial_step;
    std::normal_distribution<double> gauss(0.0, 1.0);

    for (int step = 0; step < config_.steps && out.best.l1 > stop; ++step) {
      ++out.iterations;
      bool improved = false;

      const Eigen::MatrixXd J = detail::eigenvalue_jacobian(A_, cur.B);
      const Eigen::VectorXd r = eigen_residual(cur.B);
      const Eigen::MatrixXd M = J * J.transpose() + damping * Eigen::MatrixXd::Identity(d_, d_);
      const Eigen::VectorXd delta = -J.transpose() * M.ldlt().solve(r);
      if (delta.allFinite()) {
        Point trial = evaluate(unitary_exp(detail::hermitian_from_coords(delta, d_)) * cur.V);
        if (trial.l2 < cur.l2) {
          cur = std::move(trial);
          damping = std::max(damping / 3.0, 1e-12);
          improved = true;
        } else {
          damping = std::min(damping * 4.0, 1e8);
        }
      }
      if (!improved) {
        Eigen::VectorXd dir(d_ * d_);
        for (Eigen::Index a = 0; a < dir.size(); ++a) dir(a) = gauss(rng);
        dir *= kick / dir.norm();
        Point trial = evaluate(unitary_exp(detail::hermitian_from_coords(dir, d_)) * cur.V);
        if (trial.l2 < cur.l2) cur = std::move(trial);
      }
      kick *= config_.step_decay;
      if (cur.l1 < out.best.l1) out.best = cur;
      out.history.push_back(out.best.l1);
    }
    return out;
  }

 private:
  Eigen::VectorXd eigen_residual(const Matrix& B) const {
    Eigen::SelfAdjointEigenSolver<Matrix> es(A_ + B, Eigen::EigenvaluesOnly);
    return es.eigenvalues().reverse() - target_;
  }

  Point evaluate(Matrix V) const {
    Matrix B = V * nu_diag_.asDiagonal() * V.adjoint();
    B = 0.5 * (B + B.adjoint()).eval();
    const Eigen::VectorXd r = eigen_residual(B);
    return {std::move(V), std::move(B), r.lpNorm<1>(), r.norm()};
  }

  std::vector<double> mu_;
  std::vector<double> nu_;
  int d_;
  RealizeConfig config_;
  double tol_;
  Eigen::VectorXd target_;
  Eigen::VectorXcd nu_diag_;
  Matrix A_;
};

}  // namespace

double spectral_residual(const HermitianOperator& A, const HermitianOperator& B, const DominantWeight& lambda) {
  if (A.dim() != B.dim() || A.dim() != lambda.dim()) throw std::domain_error("dimension mismatch in residual");
  const auto ev = (A + B).eigenvalues();
  double s = 0.0;
  for (int i = 0; i < lambda.dim(); ++i) s += std::abs(ev[static_cast<std::size_t>(i)] - lambda[i]);
  return s;
}

RealizationResult realize_triple(const SpectralTriple& t, double tol, const RealizeConfig& config,
                                 std::uint64_t seed) {
  if (config.restarts < 1 || config.steps < 0) throw std::domain_error("realize budget must be positive");
  if (!(tol > 0.0)) throw std::domain_error("tolerance must be positive");
  const int restarts = config.restarts;
  std::vector<std::optional<RealizationResult>> results(static_cast<std::size_t>(restarts));
  std::exception_ptr failure;
  std::mutex failure_mutex;

#pragma omp parallel for schedule(dynamic) if (config.exec == Execution::parallel)
  for (int r = 0; r < restarts; ++r) {
    try {
      RestartSearch search(t, config, tol);
      std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                        static_cast<std::uint32_t>(r)};
      std::mt19937_64 rng(seq);
      auto out = search.run(rng);
      HermitianOperator A = HermitianOperator::conjugated(out.U, as_doubles(t.mu));
      HermitianOperator B = HermitianOperator::conjugated(out.best.V, as_doubles(t.nu));
      const double residual = spectral_residual(A, B, t.lambda);
      results[static_cast<std::size_t>(r)] =
          RealizationResult{std::move(A), std::move(B), residual, out.iterations, seed, r, residual <= tol,
                            std::move(out.history)};
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  std::size_t best = 0;
  for (std::size_t r = 1; r < results.size(); ++r)
    if (results[r]->residual < results[best]->residual) best = r;
  return std::move(*results[best]);
}

DensityForm to_density_form(const HermitianOperator& A, const HermitianOperator& B) {
  if (A.dim() != B.dim()) throw std::domain_error("dimension mismatch in density form");
  for (const auto* op : {&A, &B})
    if (op->eigenvalues().back() < -1e-10) throw std::domain_error("density form needs positive semidefinite operators");
  const double ta = A.trace();
  const double tb = B.trace();
  if (!(ta > 0.0) || !(tb > 0.0)) throw std::domain_error("density form needs Tr A > 0 and Tr B > 0");
  const double p = ta / (ta + tb);
  Matrix rhoA = A.matrix() / ta;
  Matrix rhoB = B.matrix() / tb;
  Matrix rhoC = p * rhoA + (1.0 - p) * rhoB;
  return {p, DensityOperator(std::move(rhoA)), DensityOperator(std::move(rhoB)), DensityOperator(std::move(rhoC))};
}

Theorem1Sweep verify_theorem1_sweep(int max_boxes, int d, double tol, const RealizeConfig& config,
                                    std::uint64_t seed) {
  Theorem1Sweep sweep;
  sweep.max_boxes = max_boxes;
  sweep.d = d;
  sweep.tol = tol;

  std::vector<SpectralTriple> nonzero;
  for (auto& t : balanced_frame_triples(max_boxes, d))
    if (lr_tableaux(t).coefficient != 0) nonzero.push_back(std::move(t));
  sweep.triples = static_cast<std::int64_t>(nonzero.size());

  RealizeConfig inner = config;
  inner.exec = Execution::serial;
  std::vector<double> residuals(nonzero.size(), 0.0);
  std::vector<char> scaling_ok(nonzero.size(), 0);
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto count = static_cast<std::int64_t>(nonzero.size());

#pragma omp parallel for schedule(dynamic) if (config.exec == Execution::parallel)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      const auto& t = nonzero[static_cast<std::size_t>(i)];
      residuals[static_cast<std::size_t>(i)] = realize_triple(t, tol, inner, seed).residual;
      scaling_ok[static_cast<std::size_t>(i)] = find_scaling(t, 8).has_value();
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  for (std::size_t i = 0; i < nonzero.size(); ++i) {
    sweep.worst_residual = std::max(sweep.worst_residual, residuals[i]);
    if (residuals[i] <= tol) {
      ++sweep.successes;
      if (scaling_ok[i]) ++sweep.scaling_consistent;
    } else {
      sweep.failures.push_back({nonzero[i], residuals[i]});
    }
  }
  return sweep;
}

}  // namespace hornlr
