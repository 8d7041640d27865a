#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hornlr {

/// Weakly decreasing integer vector of fixed dimension d >= 1.
///
/// Labels an irreducible representation of GL(d). When every part is
/// nonnegative it is also a Young frame and labels an irreducible of the
/// symmetric group on |w| letters. The dimension is always explicit; it is
/// never inferred from the number of nonzero parts.
class DominantWeight {
 public:
  /// Throws std::domain_error if `parts` is empty or not weakly decreasing.
  explicit DominantWeight(std::vector<int> parts);

  /// The zero weight of dimension d.
  static DominantWeight zero(int d);

  /// Frame given by its nonzero rows, padded with trailing zeros to dimension
  /// d. Throws std::domain_error if there are more than d rows or a part is
  /// negative.
  static DominantWeight frame(std::vector<int> rows, int d);

  int dim() const { return static_cast<int>(parts_.size()); }
  const std::vector<int>& parts() const { return parts_; }
  int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }

  /// Sum of the parts, |w|.
  std::int64_t size() const;
  bool is_frame() const { return parts_.back() >= 0; }
  /// Number of nonzero rows; only meaningful for frames.
  int rows() const;
  /// Nonzero rows of a frame, i.e. the partition with trailing zeros dropped.
  std::vector<int> partition() const;

  /// Pads a frame with trailing zeros up to dimension d >= dim().
  DominantWeight padded(int d) const;
  /// Adds m to every part.
  DominantWeight shifted(int m) const;
  DominantWeight scaled(int factor) const;

  friend bool operator==(const DominantWeight&, const DominantWeight&) = default;
  friend auto operator<=>(const DominantWeight& a, const DominantWeight& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
};

DominantWeight operator+(const DominantWeight& a, const DominantWeight& b);

/// Descending probability vector.
class NormalizedSpectrum {
 public:
  /// Validates nonnegativity, descending order and unit sum (within 1e-12,
  /// or `sum_tol` when given).
  explicit NormalizedSpectrum(std::vector<double> values, double sum_tol = 1e-12);

  /// Sorts descending, clamps entries within `clamp_tol` of zero and
  /// renormalizes. Larger negative entries or a non-positive total throw.
  static NormalizedSpectrum from_unsorted(std::vector<double> values, double clamp_tol = 1e-10);

  int dim() const { return static_cast<int>(values_.size()); }
  const std::vector<double>& values() const { return values_; }
  double operator[](int i) const { return values_[static_cast<std::size_t>(i)]; }

 private:
  std::vector<double> values_;
};

double l1_distance(const NormalizedSpectrum& a, const NormalizedSpectrum& b);

/// Triple (mu, nu, lambda) of weights sharing the same dimension.
struct SpectralTriple {
  DominantWeight mu;
  DominantWeight nu;
  DominantWeight lambda;

  /// Throws std::domain_error on mismatched dimensions.
  SpectralTriple(DominantWeight mu, DominantWeight nu, DominantWeight lambda);

  int dim() const { return mu.dim(); }
  /// |mu| + |nu| = |lambda|.
  bool balanced() const { return mu.size() + nu.size() == lambda.size(); }
  bool all_frames() const { return mu.is_frame() && nu.is_frame() && lambda.is_frame(); }
  SpectralTriple scaled(int factor) const;
  SpectralTriple swapped() const { return {nu, mu, lambda}; }

  friend bool operator==(const SpectralTriple&, const SpectralTriple&) = default;
};

SpectralTriple operator+(const SpectralTriple& a, const SpectralTriple& b);

bool is_dominant(const std::vector<int>& parts);

/// w / |w|. Throws std::domain_error for negative parts or |w| = 0.
NormalizedSpectrum normalize(const DominantWeight& w);

/// (mu + m, nu + n, lambda + m + n), each shift applied to all d parts.
SpectralTriple shift_triple(const SpectralTriple& t, int m, int n);

/// Partitions of n into at most d parts, padded to dimension d, in
/// lexicographically descending order.
std::vector<DominantWeight> enumerate_frames(int n, int d);

/// Pads three weights with trailing zeros to their common maximal dimension.
SpectralTriple padded_triple(const DominantWeight& mu, const DominantWeight& nu,
                             const DominantWeight& lambda);

/// "3,2,1" <-> weight. Parsing throws std::invalid_argument on malformed
/// input and std::domain_error on non-dominant input.
DominantWeight parse_weight(std::string_view text);
std::string format_weight(const DominantWeight& w);
std::vector<double> parse_reals(std::string_view text);
std::vector<int> parse_ints(std::string_view text);

}  // namespace hornlr
