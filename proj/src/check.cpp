#include "hornlr/check.hpp"

#include <cmath>
#include <random>

#include "hornlr/symfun.hpp"

namespace hornlr {

namespace {

struct Tally {
  std::int64_t cases = 0;
  std::int64_t violations = 0;
};

std::vector<SpectralTriple> nonzero_triples(int max_boxes, int d) {
  std::vector<SpectralTriple> out;
  for (auto& t : balanced_frame_triples(max_boxes, d))
    if (lr_tableaux(t).coefficient != 0) out.push_back(std::move(t));
  return out;
}

Tally check_lr_routes(int max_boxes, int max_d) {
  Tally t;
  for (int d = 1; d <= max_d; ++d) {
    const auto sweep = compare_lr_routes(balanced_frame_triples(max_boxes, d));
    t.cases += sweep.triples;
    t.violations += sweep.mismatches;
  }
  return t;
}

Tally check_symmetry(int max_boxes, int d) {
  Tally t;
  const auto triples = balanced_frame_triples(max_boxes, d);
  std::vector<SpectralTriple> swapped;
  swapped.reserve(triples.size());
  for (const auto& tr : triples) swapped.push_back(tr.swapped());
  const auto a = lr_batch(triples);
  const auto b = lr_batch(swapped);
  for (std::size_t i = 0; i < a.size(); ++i) {
    ++t.cases;
    if (a[i] != b[i]) ++t.violations;
  }
  return t;
}

Tally check_semigroup(int samples, int max_boxes, int d, std::mt19937_64& rng) {
  Tally t;
  const auto pool = nonzero_triples(max_boxes, d);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::vector<SpectralTriple> sums;
  for (int s = 0; s < samples; ++s) sums.push_back(pool[pick(rng)] + pool[pick(rng)]);
  for (auto c : lr_batch(sums)) {
    ++t.cases;
    if (c == 0) ++t.violations;
  }
  return t;
}

Tally check_saturation(int max_boxes, int d) {
  Tally t;
  const auto triples = balanced_frame_triples(max_boxes, d);
  std::vector<SpectralTriple> doubled;
  for (const auto& tr : triples) doubled.push_back(tr.scaled(2));
  const auto base = lr_batch(triples);
  const auto twice = lr_batch(doubled);
  for (std::size_t i = 0; i < base.size(); ++i) {
    ++t.cases;
    // saturation: c(2·) != 0 ⇒ c != 0; semigroup: c != 0 ⇒ c(2·) != 0
    if ((twice[i] != 0) != (base[i] != 0)) ++t.violations;
  }
  return t;
}

Tally check_shift_invariance(int samples, std::mt19937_64& rng) {
  Tally t;
  std::uniform_int_distribution<int> dim(2, 3);
  std::uniform_int_distribution<int> shift(-4, 0);
  std::uniform_int_distribution<int> part(-3, 3);
  const auto pool2 = balanced_frame_triples(5, 2);
  const auto pool3 = balanced_frame_triples(5, 3);
  for (int s = 0; s < samples; ++s) {
    const int d = dim(rng);
    SpectralTriple base = [&] {
      if (s % 4 == 3) {
        // arbitrary dominant weights, usually unbalanced
        auto draw = [&] {
          std::vector<int> p(static_cast<std::size_t>(d));
          for (int& x : p) x = part(rng);
          std::sort(p.begin(), p.end(), std::greater<>());
          return DominantWeight(std::move(p));
        };
        auto mu = draw();
        auto nu = draw();
        return SpectralTriple(std::move(mu), std::move(nu), draw());
      }
      const auto& pool = d == 2 ? pool2 : pool3;
      std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
      const auto& frame = pool[pick(rng)];
      const int m = shift(rng);
      const int n = shift(rng);
      return shift_triple(frame, m, n);
    }();
    const auto ref = lr_general(base).coefficient;
    for (int m = -2; m <= 2; ++m)
      for (int n = -2; n <= 2; ++n) {
        ++t.cases;
        if (lr_general(shift_triple(base, m, n)).coefficient != ref) ++t.violations;
      }
  }
  return t;
}

Tally check_completeness(int max_d, int max_k) {
  Tally t;
  for (int d = 1; d <= max_d; ++d)
    for (int k = 0; k <= max_k; ++k) {
      BigInt sum = 0;
      for (const auto& f : enumerate_frames(k, d)) sum += gl_dim(f) * sym_dim(f);
      BigInt power = 1;
      for (int i = 0; i < k; ++i) power *= d;
      ++t.cases;
      if (sum != power) ++t.violations;
    }
  return t;
}

Tally check_dimension_squares(int max_k) {
  Tally t;
  for (int k = 0; k <= max_k; ++k) {
    BigInt sum = 0;
    for (const auto& p : partitions_of(k)) {
      const BigInt dim = sym_dim(p);
      sum += dim * dim;
      ++t.cases;
      if (sym_character(p, CycleType::identity(k)) != dim) ++t.violations;
    }
    ++t.cases;
    if (sum != factorial(k)) ++t.violations;
  }
  return t;
}

Tally check_route_agreement(int max_d, int max_k, std::mt19937_64& rng) {
  Tally t;
  for (int d = 1; d <= max_d; ++d) {
    const DensityOperator rho = random_density(d, rng);
    for (int k = 1; k <= max_k; ++k)
      for (const auto& f : enumerate_frames(k, d)) {
        ++t.cases;
        if (std::abs(projector_trace_direct(rho, f) - projector_trace_schur(rho, f)) > 1e-10) ++t.violations;
      }
  }
  return t;
}

Tally check_distribution_and_bound(int samples, int max_k, std::mt19937_64& rng) {
  Tally t;
  for (int s = 0; s < samples; ++s) {
    const int d = 2 + s % 2;
    const DensityOperator rho = random_density(d, rng);
    const auto spec = rho.spectrum();
    for (int k = 1; k <= max_k; ++k) {
      const auto dist = measurement_distribution(rho, k);
      ++t.cases;
      if (std::abs(dist.total() - 1.0) > 1e-9) ++t.violations;
      for (const auto& o : dist.outcomes) {
        ++t.cases;
        if (o.prob > kw_bound(o.frame, spec, d) + 1e-12) ++t.violations;
      }
    }
  }
  return t;
}

Tally check_pinsker(int samples, std::mt19937_64& rng) {
  Tally t;
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int s = 0; s < samples; ++s) {
    const int d = 2 + s % 3;
    std::vector<double> a(static_cast<std::size_t>(d)), b(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
      a[static_cast<std::size_t>(i)] = u(rng);
      b[static_cast<std::size_t>(i)] = u(rng) + 1e-3;
    }
    ++t.cases;
    if (pinsker_gap(NormalizedSpectrum::from_unsorted(a), NormalizedSpectrum::from_unsorted(b)) < -1e-12)
      ++t.violations;
  }
  return t;
}

Tally check_frame_count(int max_n, int max_d) {
  Tally t;
  for (int n = 0; n <= max_n; ++n)
    for (int d = 1; d <= max_d; ++d) {
      ++t.cases;
      const auto frames = enumerate_frames(n, d);
      const double cap = std::pow(n + 1.0, d);
      bool ok = static_cast<double>(frames.size()) < cap || (n == 0);
      for (const auto& f : frames) ok = ok && f.size() == n && is_dominant(f.parts());
      if (!ok) ++t.violations;
    }
  return t;
}

Tally check_realization(int max_boxes, int d, std::uint64_t seed) {
  const auto sweep = verify_theorem1_sweep(max_boxes, d, 1e-6, RealizeConfig{}, seed);
  return {sweep.triples, sweep.triples - sweep.successes};
}

Tally check_scan(bool quick) {
  Tally t;
  const NormalizedSpectrum half({0.5, 0.5});
  const ScanTarget target(half, half, half, 0.5);
  const std::vector<int> ns = quick ? std::vector<int>{4, 8} : std::vector<int>{4, 8, 16};
  for (const auto& step : scan(target, ns)) {
    ++t.cases;
    if (!step.witness || lr_character_oracle(step.witness->triple).coefficient != step.witness->coefficient)
      ++t.violations;
  }
  const NormalizedSpectrum pure({1.0, 0.0});
  const ScanTarget pure_target(pure, pure, pure, 0.5);
  for (const auto& step : scan(pure_target, {2, 4, 6})) {
    ++t.cases;
    if (!step.witness || step.witness->distances.total() != 0.0) ++t.violations;
  }
  return t;
}

}  // namespace

CheckReport run_checks(const CheckConfig& config) {
  const bool q = config.quick;
  std::mt19937_64 rng(config.seed);
  Json checks = Json::array();
  bool all = true;
  auto record = [&](const char* name, Tally t) {
    const bool ok = t.violations == 0;
    all = all && ok;
    checks.push_back({{"name", name}, {"passed", ok}, {"cases", t.cases}, {"violations", t.violations}});
  };

  record("lr_routes_agree", check_lr_routes(q ? 6 : 8, q ? 3 : 4));
  record("lr_symmetry", check_symmetry(q ? 6 : 8, 3));
  record("semigroup", check_semigroup(q ? 100 : 500, 6, 3, rng));
  record("saturation_and_scaling", check_saturation(q ? 5 : 6, 3));
  record("shift_invariance", check_shift_invariance(q ? 40 : 200, rng));
  record("schur_weyl_completeness", check_completeness(3, q ? 8 : 10));
  record("dimension_squares", check_dimension_squares(8));
  record("frame_count_bound", check_frame_count(12, 4));
  record("projector_routes_agree", check_route_agreement(3, q ? 4 : 6, rng));
  record("distribution_and_bound", check_distribution_and_bound(q ? 10 : 100, q ? 6 : 10, rng));
  record("pinsker", check_pinsker(q ? 100 : 1000, rng));
  record("theorem1_realization", check_realization(q ? 3 : 4, 2, config.seed));
  record("converse_scan", check_scan(q));

  Json report{{"seed", config.seed}, {"quick", q}, {"checks", std::move(checks)}, {"passed", all}};
  return {std::move(report), all};
}

}  // namespace hornlr
