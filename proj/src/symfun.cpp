#include "hornlr/symfun.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace hornlr {

namespace {

Partition strip(std::span<const int> lambda) {
  Partition p;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] < 0) throw std::domain_error("partition parts must be nonnegative");
    if (i && lambda[i] > lambda[i - 1]) throw std::domain_error("partition must be weakly decreasing");
    if (lambda[i] > 0) p.push_back(lambda[i]);
  }
  return p;
}

int weight_of(const Partition& p) {
  int s = 0;
  for (int x : p) s += x;
  return s;
}

}  // namespace

CycleType::CycleType(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p <= 0) throw std::domain_error("cycle lengths must be positive");
    k_ += p;
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

CycleType CycleType::identity(int k) { return CycleType(std::vector<int>(static_cast<std::size_t>(k), 1)); }

CycleType CycleType::joined(const CycleType& other) const {
  auto p = parts_;
  p.insert(p.end(), other.parts_.begin(), other.parts_.end());
  return CycleType(std::move(p));
}

std::vector<Partition> partitions_of(int k) {
  std::vector<Partition> out;
  for (const auto& w : enumerate_frames(k, std::max(k, 1))) out.push_back(w.partition());
  return out;
}

BigInt factorial(int k) {
  BigInt f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

BigInt class_size(const CycleType& rho) {
  static std::shared_mutex mutex;
  static std::map<std::vector<int>, BigInt> cache;
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(rho.parts()); it != cache.end()) return it->second;
  }
  // centralizer order z_rho = prod_i i^{m_i} m_i!
  BigInt z = 1;
  const auto& parts = rho.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    const int mult = static_cast<int>(j - i);
    for (int r = 0; r < mult; ++r) z *= parts[i];
    z *= factorial(mult);
    i = j;
  }
  BigInt size = factorial(rho.size()) / z;
  std::unique_lock lock(mutex);
  cache.try_emplace(rho.parts(), size);
  return size;
}

namespace {

// Beta-set (abacus) form: bead positions lambda_i + (len - 1 - i).
std::vector<int> to_beta(const Partition& lambda) {
  const int len = static_cast<int>(lambda.size());
  std::vector<int> beta(lambda.size());
  for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + (len - 1 - i);
  return beta;
}

Partition from_beta(std::vector<int> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<>());
  const int len = static_cast<int>(beta.size());
  Partition p;
  for (int i = 0; i < len; ++i) {
    const int part = beta[static_cast<std::size_t>(i)] - (len - 1 - i);
    if (part > 0) p.push_back(part);
  }
  return p;
}

using CharKey = std::pair<Partition, std::vector<int>>;

std::shared_mutex g_char_mutex;
std::map<CharKey, BigInt> g_char_memo;

// rho_rest holds the cycle lengths still to be removed, largest first.
BigInt mn_character(const Partition& lambda, std::span<const int> rho_rest) {
  if (rho_rest.empty()) return lambda.empty() ? BigInt(1) : BigInt(0);
  CharKey key{lambda, std::vector<int>(rho_rest.begin(), rho_rest.end())};
  {
    std::shared_lock lock(g_char_mutex);
    if (auto it = g_char_memo.find(key); it != g_char_memo.end()) return it->second;
  }
  const int r = rho_rest.front();
  const auto tail = rho_rest.subspan(1);
  auto beta = to_beta(lambda);
  BigInt total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const int from = beta[i];
    const int to = from - r;
    if (to < 0 || std::find(beta.begin(), beta.end(), to) != beta.end()) continue;
    // leg length = beads strictly between the new and old position
    int between = 0;
    for (int b : beta)
      if (b > to && b < from) ++between;
    auto moved = beta;
    moved[i] = to;
    BigInt sub = mn_character(from_beta(std::move(moved)), tail);
    if (between % 2) total -= sub;
    else total += sub;
  }
  std::unique_lock lock(g_char_mutex);
  g_char_memo.try_emplace(std::move(key), total);
  return total;
}

}  // namespace

BigInt sym_character(std::span<const int> lambda, const CycleType& rho) {
  const Partition p = strip(lambda);
  if (weight_of(p) != rho.size()) throw std::domain_error("character: |lambda| != |rho|");
  return mn_character(p, rho.parts());
}

BigInt sym_character(const DominantWeight& lambda, const CycleType& rho) {
  return sym_character(std::span<const int>(lambda.parts()), rho);
}

BigInt sym_dim(std::span<const int> lambda) {
  const Partition p = strip(lambda);
  if (p.empty()) return 1;
  std::vector<int> conj(static_cast<std::size_t>(p.front()), 0);
  for (int row : p)
    for (int j = 0; j < row; ++j) ++conj[static_cast<std::size_t>(j)];
  BigInt hooks = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (int j = 0; j < p[i]; ++j)
      hooks *= (p[i] - j) + (conj[static_cast<std::size_t>(j)] - static_cast<int>(i)) - 1;
  return factorial(weight_of(p)) / hooks;
}

BigInt sym_dim(const DominantWeight& lambda) { return sym_dim(std::span<const int>(lambda.parts())); }

BigInt gl_dim(const DominantWeight& lambda) {
  BigInt num = 1;
  BigInt den = 1;
  const int d = lambda.dim();
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      num *= lambda[i] - lambda[j] + j - i;
      den *= j - i;
    }
  return num / den;
}

namespace {

template <class T>
T power(const T& x, int e) {
  T r = T(1);
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

// s_lambda(x_1..x_n) = sum over mu interlacing lambda of
// s_mu(x_1..x_{n-1}) * x_n^{|lambda| - |mu|}.
template <class T>
class SchurBranching {
 public:
  explicit SchurBranching(std::span<const T> x) : x_(x) {}

  T eval(const Partition& lambda, int n) {
    if (static_cast<int>(lambda.size()) > n) return T(0);
    if (n == 0) return T(1);
    if (lambda.empty()) return T(1);
    auto key = std::make_pair(n, lambda);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    Partition padded = lambda;
    padded.resize(static_cast<std::size_t>(n), 0);
    const int total = weight_of(lambda);
    T sum = T(0);
    Partition mu(static_cast<std::size_t>(n - 1), 0);
    interlace(padded, mu, 0, n, total, sum);
    memo_.emplace(std::move(key), sum);
    return sum;
  }

 private:
  void interlace(const Partition& lam, Partition& mu, int i, int n, int total, T& sum) {
    if (i == n - 1) {
      Partition stripped;
      int mu_total = 0;
      for (int m : mu) {
        if (m > 0) stripped.push_back(m);
        mu_total += m;
      }
      const T& xn = x_[static_cast<std::size_t>(n - 1)];
      sum += eval(stripped, n - 1) * power(xn, total - mu_total);
      return;
    }
    for (int v = lam[static_cast<std::size_t>(i)]; v >= lam[static_cast<std::size_t>(i + 1)]; --v) {
      mu[static_cast<std::size_t>(i)] = v;
      interlace(lam, mu, i + 1, n, total, sum);
    }
  }

  std::span<const T> x_;
  std::map<std::pair<int, Partition>, T> memo_;
};

}  // namespace

double schur_poly(std::span<const int> lambda, std::span<const double> x) {
  SchurBranching<double> s(x);
  return s.eval(strip(lambda), static_cast<int>(x.size()));
}

Rational schur_poly_exact(std::span<const int> lambda, std::span<const Rational> x) {
  SchurBranching<Rational> s(x);
  return s.eval(strip(lambda), static_cast<int>(x.size()));
}

double to_double(const BigInt& v) { return v.convert_to<double>(); }

}  // namespace hornlr
