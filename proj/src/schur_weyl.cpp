#include "hornlr/schur_weyl.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "hornlr/symfun.hpp"

namespace hornlr {

namespace {

void require_frame(const DominantWeight& lambda) {
  if (!lambda.is_frame()) throw std::domain_error("outcome label must be a frame");
}

// Representative permutation with consecutive cycles: perm[j] is the image of j.
std::vector<int> class_representative(const std::vector<int>& cycle_lengths) {
  std::vector<int> perm;
  int start = 0;
  for (int len : cycle_lengths) {
    for (int j = 0; j < len; ++j) perm.push_back(start + (j + 1) % len);
    start += len;
  }
  return perm;
}

// Tr R(π) rho^{⊗k} = Σ_i Π_j rho[i_{π(j)}, i_j] over all d^k basis indices.
Complex permuted_tensor_trace(const Matrix& rho, const std::vector<int>& perm, int d) {
  const int k = static_cast<int>(perm.size());
  std::vector<int> idx(static_cast<std::size_t>(k), 0);
  Complex total = 0.0;
  while (true) {
    Complex term = 1.0;
    for (int j = 0; j < k && term != Complex(0.0); ++j)
      term *= rho(idx[static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])], idx[static_cast<std::size_t>(j)]);
    total += term;
    int pos = 0;
    while (pos < k && ++idx[static_cast<std::size_t>(pos)] == d) idx[static_cast<std::size_t>(pos++)] = 0;
    if (pos == k) break;
  }
  return total;
}

}  // namespace

double projector_trace_schur(const DensityOperator& rho, const DominantWeight& lambda) {
  require_frame(lambda);
  if (lambda.rows() > rho.dim()) return 0.0;
  const auto spec = rho.spectrum();
  const auto rows = lambda.partition();
  return to_double(sym_dim(rows)) * schur_poly(rows, spec.values());
}

double projector_trace_direct(const DensityOperator& rho, const DominantWeight& lambda, std::int64_t cap) {
  require_frame(lambda);
  const int d = rho.dim();
  const int k = static_cast<int>(lambda.size());
  double space = 1.0;
  for (int i = 0; i < k; ++i) space *= d;
  if (space > static_cast<double>(cap))
    throw ResourceError("tensor space d^k = " + std::to_string(static_cast<long long>(space)) +
                        " exceeds the cap; use the Schur-polynomial route");
  if (lambda.rows() > d) return 0.0;
  if (k == 0) return 1.0;

  const auto rows = lambda.partition();
  const double dim = to_double(sym_character(rows, CycleType::identity(k)));
  Complex sum = 0.0;
  for (const auto& cycles : partitions_of(k)) {
    const CycleType rho_class(cycles);
    const BigInt chi = sym_character(rows, rho_class);
    if (chi == 0) continue;
    const double weight = to_double(class_size(rho_class) * chi);
    sum += weight * permuted_tensor_trace(rho.matrix(), class_representative(cycles), d);
  }
  return dim / to_double(factorial(k)) * sum.real();
}

double MeasurementDistribution::total() const {
  double s = 0.0;
  for (const auto& o : outcomes) s += o.prob;
  return s;
}

MeasurementDistribution measurement_distribution(const DensityOperator& rho, int k, Execution exec) {
  if (k < 1) throw std::domain_error("number of copies must be >= 1");
  MeasurementDistribution dist;
  dist.k = k;
  dist.d = rho.dim();
  const auto frames = enumerate_frames(k, rho.dim());
  std::vector<double> probs(frames.size(), 0.0);
  const auto count = static_cast<std::int64_t>(frames.size());
#pragma omp parallel for schedule(dynamic) if (exec == Execution::parallel)
  for (std::int64_t i = 0; i < count; ++i)
    probs[static_cast<std::size_t>(i)] = projector_trace_schur(rho, frames[static_cast<std::size_t>(i)]);
  dist.outcomes.reserve(frames.size());
  for (std::size_t i = 0; i < frames.size(); ++i) dist.outcomes.push_back({frames[i], probs[i]});
  return dist;
}

double kl_divergence(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size()) throw std::domain_error("KL divergence needs equal lengths");
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0.0) continue;
    if (q[i] <= 0.0) return std::numeric_limits<double>::infinity();
    s += p[i] * std::log(p[i] / q[i]);
  }
  return std::max(s, 0.0);
}

double kl_divergence(const NormalizedSpectrum& p, const NormalizedSpectrum& q) {
  return kl_divergence(std::span<const double>(p.values()), std::span<const double>(q.values()));
}

double kw_bound(const DominantWeight& lambda, const NormalizedSpectrum& r, int d) {
  require_frame(lambda);
  if (r.dim() != d) throw std::domain_error("spectrum dimension must equal d");
  const auto rows = lambda.partition();
  if (static_cast<int>(rows.size()) > d) throw std::domain_error("frame has more rows than d");
  const double k = static_cast<double>(lambda.size());
  if (k < 1) throw std::domain_error("bound needs |lambda| >= 1");
  std::vector<double> bar(static_cast<std::size_t>(d), 0.0);
  for (std::size_t i = 0; i < rows.size(); ++i) bar[i] = rows[i] / k;
  const double div = kl_divergence(std::span<const double>(bar), std::span<const double>(r.values()));
  const double poly = std::pow(k + 1.0, d * (d - 1) / 2.0);
  if (std::isinf(div)) return 0.0;
  return poly * std::exp(-k * div);
}

double pinsker_gap(const NormalizedSpectrum& p, const NormalizedSpectrum& q) {
  const double div = kl_divergence(p, q);
  const double l1 = l1_distance(p, q);
  return div - l1 * l1 / 2.0;
}

}  // namespace hornlr
