#include "hornlr/converse_scan.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <tuple>

#include "hornlr/lr.hpp"

namespace hornlr {

ScanTarget::ScanTarget(NormalizedSpectrum rA_, NormalizedSpectrum rB_, NormalizedSpectrum rC_, double p_)
    : rA(std::move(rA_)), rB(std::move(rB_)), rC(std::move(rC_)), p(p_) {
  if (rA.dim() != rB.dim() || rA.dim() != rC.dim()) throw std::domain_error("scan spectra must share a dimension");
  if (!(p > 0.0 && p <= 1.0)) throw std::domain_error("scan weight p must lie in (0, 1]");
}

ScanTarget ScanTarget::from_operators(const DensityOperator& rhoA, const DensityOperator& rhoB, double p) {
  return {rhoA.spectrum(), rhoB.spectrum(), mixture_spectrum(rhoA, rhoB, p), p};
}

ScanTarget ScanTarget::swapped() const { return {rB, rA, rC, 1.0 - p}; }

double ScanDistances::median() const {
  double v[3] = {mu, nu, lambda};
  std::sort(v, v + 3);
  return v[1];
}

double epsilon_schedule(int n, int d, double c0) {
  if (n < 2) throw std::domain_error("epsilon schedule needs n >= 2");
  return c0 * d * std::sqrt(std::log(static_cast<double>(n)) / n);
}

int mu_boxes(double p, int n) { return static_cast<int>(std::floor(p * n + 0.5)); }

NormalizedSpectrum mixture_spectrum(const DensityOperator& rhoA, const DensityOperator& rhoB, double p) {
  if (rhoA.dim() != rhoB.dim()) throw std::domain_error("mixture needs equal dimensions");
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("mixture weight must lie in [0, 1]");
  const DensityOperator mix(p * rhoA.matrix() + (1.0 - p) * rhoB.matrix());
  return mix.spectrum();
}

namespace {

struct Ball {
  DominantWeight frame;
  double dist;
};

std::vector<Ball> frames_in_ball(int boxes, const NormalizedSpectrum& center, double eps) {
  std::vector<Ball> out;
  for (auto& f : enumerate_frames(boxes, center.dim())) {
    const double dist = boxes == 0 ? 0.0 : l1_distance(normalize(f), center);
    if (dist <= eps) out.push_back({std::move(f), dist});
  }
  return out;
}

auto order_key(const Candidate& c) {
  const auto& mu = c.triple.mu.parts();
  const auto& nu = c.triple.nu.parts();
  const auto& hi = std::max(mu, nu);
  const auto& lo = std::min(mu, nu);
  return std::tie(c.triple.lambda.parts(), hi, lo, mu);
}

}  // namespace

std::vector<Candidate> candidate_triples(const ScanTarget& target, int n, double eps) {
  if (n < 1) throw std::domain_error("scan scale must be positive");
  const int k = target.p >= 1.0 ? n : mu_boxes(target.p, n);
  if (target.p < 1.0 && (k <= 0 || k >= n))
    throw std::domain_error("round(p n) leaves mu or nu without boxes at n = " + std::to_string(n));

  const auto mus = frames_in_ball(k, target.rA, eps);
  const auto nus = frames_in_ball(n - k, target.rB, eps);
  const auto lambdas = frames_in_ball(n, target.rC, eps);
  std::vector<Candidate> out;
  out.reserve(mus.size() * nus.size() * lambdas.size());
  for (const auto& m : mus)
    for (const auto& v : nus)
      for (const auto& l : lambdas) out.push_back({SpectralTriple(m.frame, v.frame, l.frame), {m.dist, v.dist, l.dist}});

  std::sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) {
    const double ta = a.distances.total();
    const double tb = b.distances.total();
    if (ta != tb) return ta < tb;
    return order_key(a) > order_key(b);
  });
  return out;
}

namespace {

std::optional<ScanWitness> first_witness(const std::vector<Candidate>& candidates, int n, double eps,
                                         Execution exec) {
  const auto count = static_cast<std::int64_t>(candidates.size());
  constexpr std::int64_t block = 256;
  for (std::int64_t start = 0; start < count; start += block) {
    const std::int64_t stop = std::min(count, start + block);
    std::vector<std::int64_t> coeffs(static_cast<std::size_t>(stop - start), 0);
#pragma omp parallel for schedule(dynamic) if (exec == Execution::parallel)
    for (std::int64_t i = start; i < stop; ++i)
      coeffs[static_cast<std::size_t>(i - start)] =
          lr_tableaux(candidates[static_cast<std::size_t>(i)].triple).coefficient.convert_to<std::int64_t>();
    for (std::int64_t i = start; i < stop; ++i) {
      const auto c = coeffs[static_cast<std::size_t>(i - start)];
      if (c == 0) continue;
      const auto& cand = candidates[static_cast<std::size_t>(i)];
      return ScanWitness{n, static_cast<int>(cand.triple.mu.size()), cand.triple, cand.distances, c, eps};
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<ScanWitness> scan_step_witness(const ScanTarget& target, int n, double eps, Execution exec) {
  return first_witness(candidate_triples(target, n, eps), n, eps, exec);
}

std::vector<ScanStep> scan(const ScanTarget& target, const std::vector<int>& n_values, double c0, Execution exec) {
  std::vector<ScanStep> steps;
  for (int n : n_values) {
    ScanStep step{n, 0.0, 0, std::nullopt, {}};
    if (n < 2) {
      step.note = "skipped: n must be at least 2";
      steps.push_back(std::move(step));
      continue;
    }
    step.epsilon = epsilon_schedule(n, target.dim(), c0);
    const int k = target.p >= 1.0 ? n : mu_boxes(target.p, n);
    if (target.p < 1.0 && (k <= 0 || k >= n)) {
      step.note = "skipped: round(p n) = " + std::to_string(k) + " leaves mu or nu without boxes";
      steps.push_back(std::move(step));
      continue;
    }
    const auto candidates = candidate_triples(target, n, step.epsilon);
    step.candidates = static_cast<std::int64_t>(candidates.size());
    step.witness = first_witness(candidates, n, step.epsilon, exec);
    if (!step.witness) step.note = "no candidate with nonzero coefficient";
    steps.push_back(std::move(step));
  }
  return steps;
}

}  // namespace hornlr
