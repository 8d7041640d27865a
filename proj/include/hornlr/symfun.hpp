#pragma once

// Symmetric-group characters, representation dimensions and Schur
// polynomials. Partitions here are plain descending vectors of positive
// parts; zero parts are ignored on input.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <span>
#include <vector>

#include "hornlr/weights.hpp"

namespace hornlr {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using Partition = std::vector<int>;

/// Conjugacy class of S_k given by its cycle lengths.
class CycleType {
 public:
  /// Throws std::domain_error unless `parts` are positive; they are sorted
  /// descending.
  explicit CycleType(std::vector<int> parts);
  static CycleType identity(int k);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return k_; }
  /// Concatenation rho1 ∪ rho2, a cycle type of S_{k1+k2}.
  CycleType joined(const CycleType& other) const;

  friend bool operator==(const CycleType&, const CycleType&) = default;

 private:
  std::vector<int> parts_;
  int k_ = 0;
};

/// All partitions of k in lexicographically descending order.
std::vector<Partition> partitions_of(int k);

BigInt factorial(int k);

/// Size of the conjugacy class k! / z_rho. Cached per k.
BigInt class_size(const CycleType& rho);

/// chi_lambda(rho) by the Murnaghan-Nakayama rule. The memo table is shared
/// between threads. Throws std::domain_error when |lambda| != |rho| or lambda
/// is not a partition.
BigInt sym_character(std::span<const int> lambda, const CycleType& rho);
BigInt sym_character(const DominantWeight& lambda, const CycleType& rho);

/// dim V_lambda by the hook length formula.
BigInt sym_dim(std::span<const int> lambda);
BigInt sym_dim(const DominantWeight& lambda);

/// dim U_lambda of GL(d) by the Weyl dimension formula. Valid for any
/// dominant weight, including negative parts.
BigInt gl_dim(const DominantWeight& lambda);

/// s_lambda(x) in floating point. Zero when lambda has more rows than x has
/// entries. Evaluated through the branching rule over interlacing chains,
/// which enumerates the semistandard tableaux weights level by level.
double schur_poly(std::span<const int> lambda, std::span<const double> x);

/// Exact rational evaluation of s_lambda(x).
Rational schur_poly_exact(std::span<const int> lambda, std::span<const Rational> x);

double to_double(const BigInt& v);

}  // namespace hornlr
