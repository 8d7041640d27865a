// Acceptance gate: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hornlr/converse_scan.hpp"
#include "hornlr/horn_realize.hpp"
#include "hornlr/lr.hpp"
#include "hornlr/schur_weyl.hpp"
#include "hornlr/serialize.hpp"
#include "hornlr/symfun.hpp"

#ifndef HORNLR_CLI_PATH
#error "HORNLR_CLI_PATH must name the command-line binary"
#endif

using namespace hornlr;

namespace {

struct Verdict {
  bool pass;
  std::string detail;
};

Verdict lr_oracle_equivalence() {
  std::int64_t triples = 0, mismatches = 0, nonzero = 0;
  for (int d = 1; d <= 4; ++d) {
    const auto sweep = compare_lr_routes(balanced_frame_triples(8, d));
    triples += sweep.triples;
    mismatches += sweep.mismatches;
    nonzero += sweep.nonzero;
  }
  std::ostringstream s;
  s << triples << " triples, " << nonzero << " nonzero, " << mismatches << " mismatches";
  return {mismatches == 0 && triples > 0, s.str()};
}

Verdict theorem1_sweep() {
  std::int64_t triples = 0, successes = 0;
  double worst = 0.0;
  std::ostringstream s;
  for (int d = 1; d <= 3; ++d) {
    const auto sweep = verify_theorem1_sweep(6, d, 1e-6);
    triples += sweep.triples;
    successes += sweep.successes;
    worst = std::max(worst, sweep.worst_residual);
    for (const auto& f : sweep.failures) s << "failed " << to_json(f.triple).dump() << " residual " << f.residual << "; ";
  }
  s << successes << "/" << triples << " realized, worst residual " << worst;
  return {successes == triples && worst <= 1e-6, s.str()};
}

Verdict exponential_bound() {
  std::int64_t outcomes = 0, violations = 0;
  double worst = -1.0;
  for (int sample = 0; sample < 100; ++sample) {
    const int d = sample % 2 ? 3 : 2;
    std::mt19937_64 rng(static_cast<std::uint64_t>(sample));
    const auto rho = random_density(d, rng);
    const auto spec = rho.spectrum();
    for (int k = 1; k <= 10; ++k)
      for (const auto& o : measurement_distribution(rho, k).outcomes) {
        ++outcomes;
        const double excess = o.prob - kw_bound(o.frame, spec, d);
        worst = std::max(worst, excess);
        if (excess > 1e-12) ++violations;
      }
  }
  std::ostringstream s;
  s << outcomes << " outcomes, " << violations << " violations, max(prob - bound) " << worst;
  return {violations == 0, s.str()};
}

Verdict route_agreement() {
  std::int64_t traces = 0;
  double worst = 0.0;
  std::mt19937_64 rng(4242);
  for (int d = 1; d <= 3; ++d)
    for (int k = 1; k <= 6; ++k)
      for (int sample = 0; sample < 3; ++sample) {
        const auto rho = random_density(d, rng);
        for (const auto& l : enumerate_frames(k, d)) {
          worst = std::max(worst, std::abs(projector_trace_direct(rho, l) - projector_trace_schur(rho, l)));
          ++traces;
        }
      }
  std::ostringstream s;
  s << traces << " traces, max difference " << worst;
  return {worst <= 1e-10, s.str()};
}

Verdict completeness() {
  int exact_fail = 0;
  for (int d = 1; d <= 3; ++d)
    for (int k = 0; k <= 10; ++k) {
      BigInt total = 0;
      for (const auto& l : enumerate_frames(k, d)) total += gl_dim(l) * sym_dim(l.partition());
      if (total != boost::multiprecision::pow(BigInt(d), static_cast<unsigned>(k))) ++exact_fail;
    }
  double worst = 0.0;
  std::mt19937_64 rng(77);
  for (int d = 1; d <= 3; ++d)
    for (int k = 1; k <= 10; ++k)
      for (int sample = 0; sample < 3; ++sample)
        worst = std::max(worst, std::abs(measurement_distribution(random_density(d, rng), k).total() - 1.0));
  std::ostringstream s;
  s << exact_fail << " dimension identities failed, max |sum - 1| " << worst;
  return {exact_fail == 0 && worst <= 1e-9, s.str()};
}

Verdict theorem3_scan() {
  int complete = 0, shrinking = 0;
  for (int target = 0; target < 20; ++target) {
    std::mt19937_64 rng(1000 + static_cast<std::uint64_t>(target));
    std::uniform_real_distribution<double> u(0.0, 1.0);
    auto diag = [&] {
      const double a = u(rng);
      return DensityOperator::diagonal({std::max(a, 1 - a), std::min(a, 1 - a)});
    };
    const auto rhoA = diag();
    const auto rhoB = diag();
    const double p = target % 2 ? 0.25 : 0.5;
    const auto steps = scan(ScanTarget::from_operators(rhoA, rhoB, p), {8, 16, 32}, 2.0);
    const bool all = std::all_of(steps.begin(), steps.end(), [](const ScanStep& st) { return st.witness.has_value(); });
    complete += all;
    if (all && steps[2].witness->distances.median() < steps[0].witness->distances.median()) ++shrinking;
  }
  std::ostringstream s;
  s << complete << "/20 targets with witnesses at every n, " << shrinking << "/20 with smaller median at n=32";
  return {complete == 20 && shrinking >= 18, s.str()};
}

Verdict semigroup_and_saturation() {
  const auto all = balanced_frame_triples(6, 6);
  std::vector<SpectralTriple> nonzero;
  std::int64_t saturation = 0;
  for (const auto& t : all) {
    const bool c = lr_tableaux(t).coefficient != 0;
    if (c) nonzero.push_back(t);
    if (!c && lr_tableaux(t.scaled(2)).coefficient != 0) ++saturation;
  }
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::size_t> pick(0, nonzero.size() - 1);
  int semigroup = 0;
  for (int i = 0; i < 500; ++i)
    if (lr_tableaux(nonzero[pick(rng)] + nonzero[pick(rng)]).coefficient == 0) ++semigroup;
  std::ostringstream s;
  s << "500 pairs, " << semigroup << " semigroup counterexamples; " << all.size() << " triples, " << saturation
    << " saturation counterexamples";
  return {semigroup == 0 && saturation == 0, s.str()};
}

Verdict shift_invariance() {
  std::mt19937_64 rng(31337);
  int mismatches = 0, nonzero = 0, with_negative = 0;
  for (int sample = 0; sample < 200; ++sample) {
    const int d = 2 + sample % 2;
    std::uniform_int_distribution<int> part(-3, 3);
    auto draw = [&] {
      std::vector<int> p(static_cast<std::size_t>(d));
      for (int& x : p) x = part(rng);
      std::sort(p.begin(), p.end(), std::greater<>());
      return DominantWeight(p);
    };
    const auto mu = draw();
    const auto nu = draw();
    // half the samples sit at or just below mu + nu in dominance order, the rest are unrestricted
    DominantWeight lambda = draw();
    if (sample % 4 < 2) {
      auto lp = (mu + nu).parts();
      if (sample % 4 == 1 && lp.front() - 1 >= lp[1] && lp.back() + 1 <= lp[lp.size() - 2]) {
        lp.front() -= 1;
        lp.back() += 1;
      }
      lambda = DominantWeight(lp);
    }
    const SpectralTriple t(mu, nu, lambda);
    with_negative += mu.parts().back() < 0 || nu.parts().back() < 0 || lambda.parts().back() < 0;
    const auto base = lr_general(t).coefficient;
    nonzero += base != 0;
    for (int m = -2; m <= 2; ++m)
      for (int n = -2; n <= 2; ++n) mismatches += lr_general(shift_triple(t, m, n)).coefficient != base;
  }
  std::ostringstream s;
  s << "200 triples (" << with_negative << " with negative parts, " << nonzero << " nonzero), " << mismatches
    << " mismatches over 25 shifts each";
  return {mismatches == 0 && with_negative > 0 && nonzero > 0, s.str()};
}

std::string capture(const std::string& cmd, int& status) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  status = pclose(pipe);
  return out;
}

Verdict determinism() {
  const std::string cmd = std::string("\"") + HORNLR_CLI_PATH + "\" check --quick --seed 7";
  int s1 = 0, s2 = 0;
  const auto a = capture(cmd, s1);
  const auto b = capture(cmd, s2);
  std::ostringstream s;
  s << "exit statuses " << s1 << "," << s2 << "; " << a.size() << " bytes, " << (a == b ? "identical" : "different");
  return {s1 == 0 && s2 == 0 && !a.empty() && a == b, s.str()};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double limit_seconds;  // 0: no limit
    std::function<Verdict()> run;
  };
  const std::vector<Criterion> criteria{
      {"LR oracle equivalence", 120, lr_oracle_equivalence},
      {"realization sweep", 600, theorem1_sweep},
      {"exponential bound", 0, exponential_bound},
      {"projector route agreement", 0, route_agreement},
      {"Schur-Weyl completeness", 0, completeness},
      {"converse scan", 0, theorem3_scan},
      {"semigroup and saturation", 0, semigroup_and_saturation},
      {"shift invariance", 0, shift_invariance},
      {"determinism", 0, determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs > c.limit_seconds) {
      v.pass = false;
      v.detail += "; over the time limit";
    }
    failed += !v.pass;
    std::printf("[%s] %zu %s: %s (%.1f s)\n", v.pass ? "PASS" : "FAIL", i + 1, c.name, v.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
  return failed ? 1 : 0;
}
