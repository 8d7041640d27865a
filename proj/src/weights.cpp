#include "hornlr/weights.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace hornlr {

bool is_dominant(const std::vector<int>& parts) {
  return std::is_sorted(parts.begin(), parts.end(), std::greater<>());
}

DominantWeight::DominantWeight(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::domain_error("weight must have dimension >= 1");
  if (!is_dominant(parts_)) throw std::domain_error("weight is not weakly decreasing: " + format_weight(*this));
}

DominantWeight DominantWeight::zero(int d) {
  if (d < 1) throw std::domain_error("dimension must be >= 1");
  return DominantWeight(std::vector<int>(static_cast<std::size_t>(d), 0));
}

DominantWeight DominantWeight::frame(std::vector<int> rows, int d) {
  if (d < 1) throw std::domain_error("dimension must be >= 1");
  std::erase(rows, 0);
  if (static_cast<int>(rows.size()) > d) throw std::domain_error("frame has more rows than the dimension");
  if (std::any_of(rows.begin(), rows.end(), [](int r) { return r < 0; }))
    throw std::domain_error("frame parts must be nonnegative");
  rows.resize(static_cast<std::size_t>(d), 0);
  return DominantWeight(std::move(rows));
}

std::int64_t DominantWeight::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), std::int64_t{0});
}

int DominantWeight::rows() const {
  return static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [](int p) { return p != 0; }));
}

std::vector<int> DominantWeight::partition() const {
  std::vector<int> out;
  for (int p : parts_)
    if (p > 0) out.push_back(p);
  return out;
}

DominantWeight DominantWeight::padded(int d) const {
  if (d < dim()) throw std::domain_error("cannot pad a weight to a smaller dimension");
  if (d > dim() && !is_frame()) throw std::domain_error("only frames can be padded with zeros");
  auto p = parts_;
  p.resize(static_cast<std::size_t>(d), 0);
  return DominantWeight(std::move(p));
}

DominantWeight DominantWeight::shifted(int m) const {
  auto p = parts_;
  for (int& x : p) x += m;
  return DominantWeight(std::move(p));
}

DominantWeight DominantWeight::scaled(int factor) const {
  if (factor < 0) throw std::domain_error("negative scale reverses dominance");
  auto p = parts_;
  for (int& x : p) x *= factor;
  return DominantWeight(std::move(p));
}

DominantWeight operator+(const DominantWeight& a, const DominantWeight& b) {
  if (a.dim() != b.dim()) throw std::domain_error("dimension mismatch in weight sum");
  auto p = a.parts();
  for (int i = 0; i < a.dim(); ++i) p[static_cast<std::size_t>(i)] += b[i];
  return DominantWeight(std::move(p));
}

NormalizedSpectrum::NormalizedSpectrum(std::vector<double> values, double sum_tol) : values_(std::move(values)) {
  if (values_.empty()) throw std::domain_error("spectrum must be nonempty");
  double sum = 0.0;
  for (double v : values_) {
    if (!(v >= 0.0)) throw std::domain_error("spectrum entries must be nonnegative");
    sum += v;
  }
  if (!std::is_sorted(values_.begin(), values_.end(), std::greater<>()))
    throw std::domain_error("spectrum must be descending");
  if (std::abs(sum - 1.0) > sum_tol) throw std::domain_error("spectrum must sum to 1");
}

NormalizedSpectrum NormalizedSpectrum::from_unsorted(std::vector<double> values, double clamp_tol) {
  for (double& v : values) {
    if (v < -clamp_tol || !std::isfinite(v)) throw std::domain_error("spectrum entry out of range");
    if (v < 0.0) v = 0.0;
  }
  double sum = std::accumulate(values.begin(), values.end(), 0.0);
  if (!(sum > 0.0)) throw std::domain_error("spectrum has zero total");
  std::sort(values.begin(), values.end(), std::greater<>());
  for (double& v : values) v /= sum;
  return NormalizedSpectrum(std::move(values), 1e-9);
}

double l1_distance(const NormalizedSpectrum& a, const NormalizedSpectrum& b) {
  if (a.dim() != b.dim()) throw std::domain_error("dimension mismatch in l1 distance");
  double s = 0.0;
  for (int i = 0; i < a.dim(); ++i) s += std::abs(a[i] - b[i]);
  return s;
}

SpectralTriple::SpectralTriple(DominantWeight mu_, DominantWeight nu_, DominantWeight lambda_)
    : mu(std::move(mu_)), nu(std::move(nu_)), lambda(std::move(lambda_)) {
  if (mu.dim() != nu.dim() || mu.dim() != lambda.dim())
    throw std::domain_error("triple weights must share the same dimension");
}

SpectralTriple SpectralTriple::scaled(int factor) const {
  return {mu.scaled(factor), nu.scaled(factor), lambda.scaled(factor)};
}

SpectralTriple operator+(const SpectralTriple& a, const SpectralTriple& b) {
  return {a.mu + b.mu, a.nu + b.nu, a.lambda + b.lambda};
}

NormalizedSpectrum normalize(const DominantWeight& w) {
  if (!w.is_frame()) throw std::domain_error("cannot normalize a weight with negative parts");
  const auto total = w.size();
  if (total <= 0) throw std::domain_error("cannot normalize the zero weight");
  std::vector<double> v;
  v.reserve(w.parts().size());
  for (int p : w.parts()) v.push_back(static_cast<double>(p) / static_cast<double>(total));
  return NormalizedSpectrum(std::move(v));
}

SpectralTriple shift_triple(const SpectralTriple& t, int m, int n) {
  return {t.mu.shifted(m), t.nu.shifted(n), t.lambda.shifted(m + n)};
}

namespace {

void frames_rec(int remaining, int max_part, int slots, std::vector<int>& cur, std::vector<DominantWeight>& out,
                int d) {
  if (remaining == 0) {
    auto p = cur;
    p.resize(static_cast<std::size_t>(d), 0);
    out.emplace_back(std::move(p));
    return;
  }
  if (slots == 0) return;
  // a part of size `part` leaves `remaining - part`, which must fit into the
  // remaining slots with parts <= part
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    if (static_cast<long long>(part) * slots < remaining) break;
    cur.push_back(part);
    frames_rec(remaining - part, part, slots - 1, cur, out, d);
    cur.pop_back();
  }
}

}  // namespace

std::vector<DominantWeight> enumerate_frames(int n, int d) {
  if (n < 0) throw std::domain_error("cannot enumerate frames of a negative size");
  if (d < 1) throw std::domain_error("dimension must be >= 1");
  std::vector<DominantWeight> out;
  std::vector<int> cur;
  frames_rec(n, n, d, cur, out, d);
  return out;
}

SpectralTriple padded_triple(const DominantWeight& mu, const DominantWeight& nu, const DominantWeight& lambda) {
  const int d = std::max({mu.dim(), nu.dim(), lambda.dim()});
  return {mu.padded(d), nu.padded(d), lambda.padded(d)};
}

namespace {

std::vector<std::string_view> split_commas(std::string_view text) {
  std::vector<std::string_view> out;
  while (true) {
    auto pos = text.find(',');
    auto tok = text.substr(0, pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    out.push_back(tok);
    if (pos == std::string_view::npos) break;
    text.remove_prefix(pos + 1);
  }
  return out;
}

}  // namespace

std::vector<int> parse_ints(std::string_view text) {
  std::vector<int> out;
  for (auto tok : split_commas(text)) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw std::invalid_argument("malformed integer list: '" + std::string(text) + "'");
    out.push_back(v);
  }
  return out;
}

std::vector<double> parse_reals(std::string_view text) {
  std::vector<double> out;
  for (auto tok : split_commas(text)) {
    std::string s(tok);
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (s.empty() || used != s.size())
      throw std::invalid_argument("malformed real list: '" + std::string(text) + "'");
    out.push_back(v);
  }
  return out;
}

DominantWeight parse_weight(std::string_view text) { return DominantWeight(parse_ints(text)); }

std::string format_weight(const DominantWeight& w) {
  std::string s;
  for (std::size_t i = 0; i < w.parts().size(); ++i) {
    if (i) s += ',';
    s += std::to_string(w.parts()[i]);
  }
  return s;
}

}  // namespace hornlr
