#pragma once

// Brute-force reference computations used only by the tests. They share no
// code with the library routines they check.

#include <algorithm>
#include <complex>
#include <cstdint>
#include <numeric>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

/// Calls f(entries) for every semistandard tableau of shape `shape` with
/// entries in 1..n; entries are listed row by row.
template <class F>
void for_each_ssyt(const std::vector<int>& shape, int n, F&& f) {
  std::vector<std::vector<int>> t;
  for (int r : shape) t.emplace_back(static_cast<std::size_t>(r), 0);
  std::vector<std::pair<int, int>> cells;
  for (std::size_t r = 0; r < shape.size(); ++r)
    for (int c = 0; c < shape[r]; ++c) cells.emplace_back(static_cast<int>(r), c);
  auto rec = [&](auto&& self, std::size_t idx) -> void {
    if (idx == cells.size()) {
      f(t);
      return;
    }
    auto [r, c] = cells[idx];
    int lo = 1;
    if (c > 0) lo = std::max(lo, t[r][c - 1]);
    if (r > 0) lo = std::max(lo, t[r - 1][c] + 1);
    for (int v = lo; v <= n; ++v) {
      t[r][c] = v;
      self(self, idx + 1);
    }
  };
  rec(rec, 0);
}

/// s_shape(x) summed monomial by monomial over all SSYT.
inline double schur_by_tableaux(const std::vector<int>& shape, const std::vector<double>& x) {
  double total = 0.0;
  for_each_ssyt(shape, static_cast<int>(x.size()), [&](const auto& t) {
    double m = 1.0;
    for (const auto& row : t)
      for (int v : row) m *= x[static_cast<std::size_t>(v - 1)];
    total += m;
  });
  return total;
}

inline std::int64_t count_ssyt(const std::vector<int>& shape, int n) {
  std::int64_t count = 0;
  for_each_ssyt(shape, n, [&](const auto&) { ++count; });
  return count;
}

/// Tr P_lambda rho^{⊗k} summing χ(π) Tr R(π) rho^{⊗k} over every one of the
/// k! permutations. `chi` maps a permutation (images of 0..k-1) to the
/// character value.
template <class Chi>
double projector_trace_all_permutations(const Eigen::MatrixXcd& rho, int k, double dim, Chi&& chi) {
  const int d = static_cast<int>(rho.rows());
  std::vector<int> perm(static_cast<std::size_t>(k));
  std::iota(perm.begin(), perm.end(), 0);
  std::complex<double> sum = 0.0;
  double fact = 1.0;
  for (int i = 2; i <= k; ++i) fact *= i;
  std::int64_t states = 1;
  for (int i = 0; i < k; ++i) states *= d;
  do {
    const double c = chi(perm);
    if (c == 0.0) continue;
    std::complex<double> tr = 0.0;
    for (std::int64_t s = 0; s < states; ++s) {
      std::vector<int> idx(static_cast<std::size_t>(k));
      std::int64_t rem = s;
      for (int j = 0; j < k; ++j) {
        idx[static_cast<std::size_t>(j)] = static_cast<int>(rem % d);
        rem /= d;
      }
      std::complex<double> term = 1.0;
      for (int j = 0; j < k; ++j) term *= rho(idx[static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])], idx[static_cast<std::size_t>(j)]);
      tr += term;
    }
    sum += c * tr;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return dim / fact * sum.real();
}

/// Cycle lengths of a permutation, descending.
inline std::vector<int> cycle_type(const std::vector<int>& perm) {
  std::vector<char> seen(perm.size(), 0);
  std::vector<int> out;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
      seen[j] = 1;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

}  // namespace oracle
