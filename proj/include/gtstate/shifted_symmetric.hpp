#pragma once

// Shifted power sums p_k, the functions p#_rho, the weight filtration and the
// top-weight part of the p_k -> p# change of basis.

#include "gtstate/partitions.hpp"
#include "gtstate/rational.hpp"

#include <map>
#include <vector>

namespace gtstate {

/// sum_i (lambda_i - i + 1/2)^k - (-i + 1/2)^k
Rational p_shifted_sum(int k, const Signature& lambda);

/// n(n-1)...(n-r+1) chi^lambda_{rho u 1^{n-r}} / dim lambda, or 0 when n < r.
Rational p_sharp_value(const Partition& rho, const Partition& lambda);

/// |rho| + l(rho)
int weight(const Partition& rho);

/// Multiset of p#-indices, stored sorted in decreasing order.
using IndexMultiset = std::vector<int>;

struct WeightedBasisExpansion {
  int source_k = 0;
  std::map<IndexMultiset, Rational> terms;
};

/// Top-weight part of p_k as a polynomial in p#_1, p#_2, ...:
/// (1/(k+1)) [u^{k+1}] (1 + p#_1 u^2 + p#_2 u^3 + ...)^{k+1}.
WeightedBasisExpansion top_weight_expansion(int k);

/// Evaluates the expansion with p#_j replaced by p_sharp_value((j), lambda).
Rational evaluate_expansion(const WeightedBasisExpansion& e, const Partition& lambda);

}  // namespace gtstate
