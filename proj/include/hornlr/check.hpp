#pragma once

#include <cstdint>

#include "hornlr/serialize.hpp"

namespace hornlr {

struct CheckConfig {
  bool quick = false;
  std::uint64_t seed = 0;
};

struct CheckReport {
  Json json;
  bool passed;
};

/// Runs the invariant suite (LR route agreement, symmetry, semigroup,
/// saturation, shift invariance, Schur-Weyl completeness, projector route
/// agreement, the exponential bound, Pinsker, a realization sweep and a
/// converse scan) at the caps selected by `quick`. The report holds counts
/// only, so equal seeds give byte-identical output.
CheckReport run_checks(const CheckConfig& config);

}  // namespace hornlr
