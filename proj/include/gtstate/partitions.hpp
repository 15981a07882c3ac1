#pragma once

// Integer partitions, U(N) signatures and the label arithmetic on them:
// dimensions of S(n) and U(N) irreducibles, symmetric group characters,
// modified Frobenius coordinates and Gelfand-Tsetlin interlacing.

#include "gtstate/rational.hpp"

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gtstate {

/// Weakly decreasing sequence of positive integers. The empty partition is
/// the empty diagram.
class Partition {
 public:
  Partition() = default;
  /// Trailing zeros are dropped; throws std::invalid_argument on negative or
  /// increasing parts.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;  // |lambda|
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int operator[](int i) const { return i < length() ? parts_[static_cast<size_t>(i)] : 0; }

  Partition transpose() const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

/// Weakly decreasing integer sequence of fixed length N (parts may be negative).
class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<int> coords);
  static Signature from_partition(const Partition& p, int n);

  const std::vector<int>& coords() const { return coords_; }
  int length() const { return static_cast<int>(coords_.size()); }
  int operator[](int i) const { return coords_[static_cast<size_t>(i)]; }
  bool is_nonnegative() const;
  /// Requires nonnegative coordinates.
  Partition to_partition() const;

  auto operator<=>(const Signature&) const = default;

 private:
  std::vector<int> coords_;
};

/// Modified Frobenius coordinates; `a` and `b` hold the half-integers doubled
/// (2 a_i = 2 mu_i - 2 i + 1) so they stay exact.
struct FrobeniusCoords {
  std::vector<int> a_twice;
  std::vector<int> b_twice;
  int d = 0;

  std::vector<double> a() const;
  std::vector<double> b() const;
};

FrobeniusCoords frobenius(const Partition& mu);

/// Hook-length formula.
BigInt dim_sym(const Partition& lambda);

/// Weyl dimension formula for U(N).
BigInt dim_un(const Signature& lambda);
inline BigInt dim_un(const Partition& lambda, int n) {
  return dim_un(Signature::from_partition(lambda, n));
}

/// Murnaghan-Nakayama. Requires |lambda| == |rho|.
BigInt char_sym(const Partition& lambda, const Partition& rho);

/// mu < lambda in the Gelfand-Tsetlin graph. Requires length(mu) = length(lambda) - 1.
bool interlaces(const Signature& mu, const Signature& lambda);

/// Number of interlacing chains from the empty signature to lambda.
BigInt count_paths(const Signature& lambda);

/// All partitions of n, in reverse lexicographic order.
std::vector<Partition> partitions_of(int n);
/// Partitions of n with at most max_rows rows.
std::vector<Partition> partitions_of(int n, int max_rows);

/// Size of the conjugacy class of cycle type rho in S(|rho|).
BigInt class_size(const Partition& rho);

/// "4,2,1,1"; the empty partition is "".
std::string format_partition(const Partition& p);
/// Throws std::invalid_argument on malformed input.
Partition parse_partition(std::string_view text);

}  // namespace gtstate
