#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hornlr/execution.hpp"
#include "hornlr/symfun.hpp"
#include "hornlr/weights.hpp"

namespace hornlr {

enum class LrMethod { tableaux, character_oracle };

const char* to_string(LrMethod m);

struct LRResult {
  BigInt coefficient;
  LrMethod method;
  SpectralTriple triple;
};

/// Counts Littlewood-Richardson skew tableaux of shape lambda/mu and content
/// nu whose reverse reading word is a lattice word. Returns 0 for unbalanced
/// triples, when mu or nu is not contained in lambda, or when lambda has a
/// negative part.
LRResult lr_tableaux(const SpectralTriple& t);

/// Independent route through the symmetric group: the multiplicity of
/// V_mu ⊗ V_nu in the restriction of V_lambda to S_k × S_{n-k}, summed over
/// pairs of cycle types with class-size weights. Throws std::domain_error on
/// unbalanced triples or negative parts; throws std::logic_error if the final
/// division is not exact.
LRResult lr_character_oracle(const SpectralTriple& t);

/// Coefficient for arbitrary dominant weights: shifts mu and nu to frames
/// with the minimal nonnegative m, n and evaluates the shifted triple with
/// the tableaux rule.
LRResult lr_general(const SpectralTriple& t);

/// Smallest N in [1, n_max] with c_{N mu, N nu}^{N lambda} != 0.
std::optional<int> find_scaling(const SpectralTriple& t, int n_max);

/// Every balanced frame triple of dimension d with |lambda| <= max_boxes,
/// ordered by |lambda|, then |mu|, then lexicographically descending frames.
std::vector<SpectralTriple> balanced_frame_triples(int max_boxes, int d);

/// Outcome of comparing both LR routes over a batch of triples.
struct OracleSweep {
  std::int64_t triples = 0;
  std::int64_t nonzero = 0;
  std::int64_t mismatches = 0;
  /// Per triple: tableaux coefficient, in input order.
  std::vector<std::int64_t> coefficients;
};

OracleSweep compare_lr_routes(const std::vector<SpectralTriple>& triples, Execution exec = Execution::parallel);

/// Tableaux coefficients for a batch, in input order.
std::vector<std::int64_t> lr_batch(const std::vector<SpectralTriple>& triples, Execution exec = Execution::parallel);

}  // namespace hornlr
