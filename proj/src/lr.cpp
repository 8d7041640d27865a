#include "hornlr/lr.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <stdexcept>

namespace hornlr {

const char* to_string(LrMethod m) {
  switch (m) {
    case LrMethod::tableaux: return "tableaux";
    case LrMethod::character_oracle: return "character_oracle";
  }
  return "unknown";
}

namespace {

// Fills the skew diagram lambda/mu cell by cell in reverse reading order
// (rows top to bottom, each row right to left).
class LrTableauxCounter {
 public:
  LrTableauxCounter(const std::vector<int>& mu, const std::vector<int>& nu, const std::vector<int>& lambda)
      : mu_(mu), nu_(nu), lambda_(lambda), d_(static_cast<int>(lambda.size())) {
    grid_.resize(lambda_.size());
    for (std::size_t r = 0; r < lambda_.size(); ++r) grid_[r].assign(static_cast<std::size_t>(lambda_[r]), 0);
    for (std::size_t r = 0; r < lambda_.size(); ++r)
      for (int c = lambda_[r] - 1; c >= mu_[r]; --c) cells_.emplace_back(static_cast<int>(r), c);
    content_.assign(static_cast<std::size_t>(d_ + 1), 0);
  }

  std::uint64_t count() {
    total_ = 0;
    place(0);
    return total_;
  }

 private:
  void place(std::size_t idx) {
    if (idx == cells_.size()) {
      ++total_;
      return;
    }
    const auto [r, c] = cells_[idx];
    const auto ru = static_cast<std::size_t>(r);
    const auto cu = static_cast<std::size_t>(c);
    int hi = d_;
    if (c + 1 < lambda_[ru]) hi = std::min(hi, grid_[ru][cu + 1]);
    int lo = 1;
    if (r > 0 && c >= mu_[ru - 1]) lo = grid_[ru - 1][cu] + 1;
    // an entry in row r is at most r + 1 in any LR tableau
    hi = std::min(hi, r + 1);
    for (int v = lo; v <= hi; ++v) {
      const auto vu = static_cast<std::size_t>(v);
      if (content_[vu] + 1 > nu_[vu - 1]) continue;
      if (v > 1 && content_[vu] + 1 > content_[vu - 1]) continue;
      grid_[ru][cu] = v;
      ++content_[vu];
      place(idx + 1);
      --content_[vu];
    }
    grid_[ru][cu] = 0;
  }

  const std::vector<int>& mu_;
  const std::vector<int>& nu_;
  const std::vector<int>& lambda_;
  int d_;
  std::vector<std::vector<int>> grid_;
  std::vector<std::pair<int, int>> cells_;
  std::vector<int> content_;
  std::uint64_t total_ = 0;
};

bool contained(const DominantWeight& inner, const DominantWeight& outer) {
  for (int i = 0; i < inner.dim(); ++i)
    if (inner[i] > outer[i]) return false;
  return true;
}

std::int64_t to_int64(const BigInt& v) { return v.convert_to<std::int64_t>(); }

}  // namespace

LRResult lr_tableaux(const SpectralTriple& t) {
  LRResult res{BigInt(0), LrMethod::tableaux, t};
  if (!t.balanced() || !t.all_frames()) return res;
  if (!contained(t.mu, t.lambda) || !contained(t.nu, t.lambda)) return res;
  LrTableauxCounter counter(t.mu.parts(), t.nu.parts(), t.lambda.parts());
  res.coefficient = counter.count();
  return res;
}

LRResult lr_character_oracle(const SpectralTriple& t) {
  if (!t.all_frames()) throw std::domain_error("character oracle needs frames (nonnegative parts)");
  if (!t.balanced()) throw std::domain_error("character oracle needs |mu| + |nu| = |lambda|");
  const int k = static_cast<int>(t.mu.size());
  const int rest = static_cast<int>(t.nu.size());

  BigInt sum = 0;
  for (const auto& p1 : partitions_of(k)) {
    const CycleType rho1(p1);
    const BigInt chi_mu = sym_character(t.mu, rho1);
    if (chi_mu == 0) continue;
    const BigInt size1 = class_size(rho1);
    for (const auto& p2 : partitions_of(rest)) {
      const CycleType rho2(p2);
      const BigInt chi_nu = sym_character(t.nu, rho2);
      if (chi_nu == 0) continue;
      const BigInt chi_lambda = sym_character(t.lambda, rho1.joined(rho2));
      sum += size1 * class_size(rho2) * chi_lambda * chi_mu * chi_nu;
    }
  }
  const BigInt order = factorial(k) * factorial(rest);
  if (sum % order != 0) throw std::logic_error("character oracle: inexact division, character table is wrong");
  BigInt c = sum / order;
  if (c < 0) throw std::logic_error("character oracle: negative multiplicity");
  return {c, LrMethod::character_oracle, t};
}

LRResult lr_general(const SpectralTriple& t) {
  LRResult res{BigInt(0), LrMethod::tableaux, t};
  if (!t.balanced()) return res;
  const int d = t.dim();
  const int m = std::max(0, -t.mu[d - 1]);
  const int n = std::max(0, -t.nu[d - 1]);
  const SpectralTriple shifted = shift_triple(t, m, n);
  // mu', nu' are frames, so U_mu' ⊗ U_nu' is polynomial and holds no
  // lambda' with a negative part
  if (!shifted.lambda.is_frame()) return res;
  res.coefficient = lr_tableaux(shifted).coefficient;
  return res;
}

std::optional<int> find_scaling(const SpectralTriple& t, int n_max) {
  if (!t.balanced()) return std::nullopt;
  for (int N = 1; N <= n_max; ++N)
    if (lr_general(t.scaled(N)).coefficient != 0) return N;
  return std::nullopt;
}

std::vector<SpectralTriple> balanced_frame_triples(int max_boxes, int d) {
  std::vector<SpectralTriple> out;
  for (int n = 0; n <= max_boxes; ++n) {
    const auto lambdas = enumerate_frames(n, d);
    for (int k = n; k >= 0; --k) {
      const auto mus = enumerate_frames(k, d);
      const auto nus = enumerate_frames(n - k, d);
      for (const auto& mu : mus)
        for (const auto& nu : nus)
          for (const auto& lambda : lambdas) out.emplace_back(mu, nu, lambda);
    }
  }
  return out;
}

OracleSweep compare_lr_routes(const std::vector<SpectralTriple>& triples, Execution exec) {
  OracleSweep sweep;
  const auto count = static_cast<std::int64_t>(triples.size());
  sweep.triples = count;
  sweep.coefficients.assign(triples.size(), 0);
  std::int64_t nonzero = 0;
  std::int64_t mismatches = 0;
  std::exception_ptr failure;
  std::mutex failure_mutex;

#pragma omp parallel for schedule(dynamic, 8) reduction(+ : nonzero, mismatches) if (exec == Execution::parallel)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      const auto& t = triples[static_cast<std::size_t>(i)];
      const BigInt fast = lr_tableaux(t).coefficient;
      const BigInt slow = lr_character_oracle(t).coefficient;
      sweep.coefficients[static_cast<std::size_t>(i)] = to_int64(fast);
      if (fast != 0) ++nonzero;
      if (fast != slow) ++mismatches;
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  sweep.nonzero = nonzero;
  sweep.mismatches = mismatches;
  return sweep;
}

std::vector<std::int64_t> lr_batch(const std::vector<SpectralTriple>& triples, Execution exec) {
  std::vector<std::int64_t> out(triples.size(), 0);
  const auto count = static_cast<std::int64_t>(triples.size());
#pragma omp parallel for schedule(dynamic, 8) if (exec == Execution::parallel)
  for (std::int64_t i = 0; i < count; ++i)
    out[static_cast<std::size_t>(i)] = to_int64(lr_general(triples[static_cast<std::size_t>(i)]).coefficient);
  return out;
}

}  // namespace hornlr
