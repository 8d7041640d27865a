#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "hornlr/execution.hpp"
#include "hornlr/linalg.hpp"
#include "hornlr/weights.hpp"

namespace hornlr {

/// Thrown when the explicit tensor-space route would exceed its size cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::int64_t kDefaultTensorCap = 4096;

/// Tr P_lambda rho^{⊗k} = dim V_lambda · s_lambda(Spec rho). Zero when
/// lambda has more than d nonzero rows.
double projector_trace_schur(const DensityOperator& rho, const DominantWeight& lambda);

/// Tr P_lambda rho^{⊗k} with P_lambda = (dim V_lambda / k!) Σ_π χ_lambda(π) R(π)
/// applied on (C^d)^{⊗k}. Each R(π) acts as a permutation of tensor factors
/// on computational-basis indices; the sum runs over conjugacy classes with
/// their sizes since Tr R(π) rho^{⊗k} is a class function. Throws
/// ResourceError when d^k exceeds `cap`.
double projector_trace_direct(const DensityOperator& rho, const DominantWeight& lambda,
                              std::int64_t cap = kDefaultTensorCap);

struct Outcome {
  DominantWeight frame;  // padded to dimension d
  double prob;
};

/// Outcome probabilities of the Schur-Weyl measurement on k copies.
struct MeasurementDistribution {
  int k = 0;
  int d = 0;
  std::vector<Outcome> outcomes;  // lexicographically descending frames

  double total() const;
};

/// Every frame of k with at most d rows, evaluated with the Schur route.
MeasurementDistribution measurement_distribution(const DensityOperator& rho, int k,
                                                 Execution exec = Execution::parallel);

/// D(p‖q) in nats with 0·ln 0 = 0; +infinity when p has mass off q's support.
double kl_divergence(const NormalizedSpectrum& p, const NormalizedSpectrum& q);
double kl_divergence(std::span<const double> p, std::span<const double> q);

/// (k+1)^{d(d-1)/2} exp(−k D(lambda/k ‖ r)), k = |lambda|.
double kw_bound(const DominantWeight& lambda, const NormalizedSpectrum& r, int d);

/// D(p‖q) − ‖p − q‖₁² / 2, both in nats. Nonnegative by Pinsker's inequality.
double pinsker_gap(const NormalizedSpectrum& p, const NormalizedSpectrum& q);

}  // namespace hornlr
