#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hornlr/execution.hpp"
#include "hornlr/linalg.hpp"
#include "hornlr/weights.hpp"

namespace hornlr {

/// Search budget for realize_triple.
struct RealizeConfig {
  int restarts = 32;
  int steps = 2000;
  /// Initial size of the random unitary kicks used when a Levenberg-Marquardt
  /// step is rejected; multiplied by `step_decay` after every step.
  double initial_step = 0.5;
  double step_decay = 0.995;
  Execution exec = Execution::parallel;
};

struct RealizationResult {
  HermitianOperator A;
  HermitianOperator B;
  /// ‖sorted Spec(A + B) − lambda‖₁
  double residual;
  int iterations;
  std::uint64_t seed;
  int restart;
  bool converged;
  /// Best residual after each step of the reported restart.
  std::vector<double> history;
};

/// ℓ₁ distance between the descending eigenvalues of A + B and lambda.
double spectral_residual(const HermitianOperator& A, const HermitianOperator& B, const DominantWeight& lambda);

/// Searches for A = U diag(mu) U†, B = V diag(nu) V† with Spec(A + B) = lambda.
///
/// Each restart draws Haar-random U and V from a generator seeded with
/// (seed, restart) and refines V by Levenberg-Marquardt steps on the sorted
/// eigenvalue residual, falling back to decaying random unitary kicks when a
/// step does not improve. The reported restart has the smallest residual,
/// lowest index on ties. `converged` is false when no restart reached `tol`;
/// for a triple with nonzero LR coefficient that is an optimizer shortfall.
RealizationResult realize_triple(const SpectralTriple& t, double tol = 1e-6, const RealizeConfig& config = {},
                                 std::uint64_t seed = 0);

struct DensityForm {
  double p;
  DensityOperator rhoA;
  DensityOperator rhoB;
  DensityOperator rhoC;
};

/// p = Tr A / Tr(A + B), rho^A = A / Tr A, rho^B = B / Tr B and
/// rho^C = p rho^A + (1 − p) rho^B. Throws std::domain_error for non-PSD
/// input or a zero trace.
DensityForm to_density_form(const HermitianOperator& A, const HermitianOperator& B);

struct SweepFailure {
  SpectralTriple triple;
  double residual;
};

struct Theorem1Sweep {
  int max_boxes = 0;
  int d = 0;
  double tol = 0.0;
  std::int64_t triples = 0;    // balanced frame triples with c != 0
  std::int64_t successes = 0;
  double worst_residual = 0.0;
  /// Successful realizations whose triple has find_scaling(t, 8) defined.
  std::int64_t scaling_consistent = 0;
  std::vector<SweepFailure> failures;

  double success_rate() const { return triples ? static_cast<double>(successes) / static_cast<double>(triples) : 1.0; }
};

/// Runs realize_triple on every balanced frame triple of dimension d with
/// |lambda| <= max_boxes and nonzero LR coefficient. Triples run in parallel
/// (restarts inside each then run serially).
Theorem1Sweep verify_theorem1_sweep(int max_boxes, int d, double tol = 1e-6, const RealizeConfig& config = {},
                                    std::uint64_t seed = 0);

namespace detail {
/// d × d² Jacobian of the descending eigenvalues of A + exp(iH) B exp(−iH)
/// at H = 0, in the Hermitian basis E_jj, E_jl + E_lj, i(E_jl − E_lj).
Eigen::MatrixXd eigenvalue_jacobian(const Matrix& A, const Matrix& B);
/// Hermitian matrix with the coordinates `delta` in that basis.
Matrix hermitian_from_coords(const Eigen::VectorXd& delta, int d);
}  // namespace detail

}  // namespace hornlr
