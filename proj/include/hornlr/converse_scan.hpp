#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hornlr/execution.hpp"
#include "hornlr/linalg.hpp"
#include "hornlr/weights.hpp"

namespace hornlr {

/// Spectra of rho^A, rho^B and of rho^C = p rho^A + (1 − p) rho^B.
struct ScanTarget {
  NormalizedSpectrum rA;
  NormalizedSpectrum rB;
  NormalizedSpectrum rC;
  double p;

  /// Throws std::domain_error unless the three spectra share a dimension
  /// and p ∈ (0, 1].
  ScanTarget(NormalizedSpectrum rA, NormalizedSpectrum rB, NormalizedSpectrum rC, double p);

  /// Target built from two density operators; rC is the mixture spectrum.
  static ScanTarget from_operators(const DensityOperator& rhoA, const DensityOperator& rhoB, double p);

  int dim() const { return rA.dim(); }
  ScanTarget swapped() const;
};

struct ScanDistances {
  double mu;
  double nu;
  double lambda;

  double total() const { return mu + nu + lambda; }
  double median() const;
};

struct ScanWitness {
  int n;
  int k;
  SpectralTriple triple;
  ScanDistances distances;
  std::int64_t coefficient;
  double epsilon;
};

/// Result at a single scale n: a witness, or a note on why there is none.
struct ScanStep {
  int n;
  double epsilon;
  std::int64_t candidates;
  std::optional<ScanWitness> witness;
  std::string note;
};

/// c0 · d · sqrt(ln n / n).
double epsilon_schedule(int n, int d, double c0 = 2.0);

/// round(p n), halves rounded up.
int mu_boxes(double p, int n);

/// Descending spectrum of p rho^A + (1 − p) rho^B.
NormalizedSpectrum mixture_spectrum(const DensityOperator& rhoA, const DensityOperator& rhoB, double p);

/// Candidate triple together with its three ℓ₁ distances.
struct Candidate {
  SpectralTriple triple;
  ScanDistances distances;
};

/// Balanced frame triples with |mu| = k = round(p n), |nu| = n − k,
/// |lambda| = n whose normalizations lie in the three ℓ₁ balls of radius
/// eps, sorted by total distance (ties broken by lambda, then the unordered
/// pair {mu, nu}, then mu, all lexicographically descending). When p = 1
/// the nu ball is vacuous: nu is the empty frame with distance 0. Throws
/// std::domain_error when 0 < p < 1 but k = 0 or k = n.
std::vector<Candidate> candidate_triples(const ScanTarget& target, int n, double eps);

/// The first candidate (in the order above) with nonzero LR coefficient.
std::optional<ScanWitness> scan_step_witness(const ScanTarget& target, int n, double eps,
                                             Execution exec = Execution::parallel);

/// Runs scan_step_witness for every n with eps = epsilon_schedule(n, d, c0).
/// Scales where rounding leaves mu or nu without boxes are skipped with a
/// note.
std::vector<ScanStep> scan(const ScanTarget& target, const std::vector<int>& n_values, double c0 = 2.0,
                           Execution exec = Execution::parallel);

}  // namespace hornlr
