#include "gtstate/shifted_symmetric.hpp"

#include <algorithm>
#include <stdexcept>

namespace gtstate {

Rational p_shifted_sum(int k, const Signature& lambda) {
  if (k < 1) throw std::invalid_argument("p_shifted_sum: k must be positive");
  // work with doubled positions 2(lambda_i - i) + 1 and divide by 2^k once
  BigInt acc = 0;
  for (int i = 1; i <= lambda.length(); ++i) {
    const BigInt shifted = 2 * (lambda[i - 1] - i) + 1;
    const BigInt base = -2 * i + 1;
    acc += boost::multiprecision::pow(shifted, static_cast<unsigned>(k)) -
           boost::multiprecision::pow(base, static_cast<unsigned>(k));
  }
  return Rational(acc, BigInt(1) << k);
}

Rational p_sharp_value(const Partition& rho, const Partition& lambda) {
  const int n = lambda.size();
  const int r = rho.size();
  if (n < r) return 0;
  std::vector<int> padded = rho.parts();
  padded.insert(padded.end(), static_cast<size_t>(n - r), 1);
  BigInt falling = 1;
  for (int i = 0; i < r; ++i) falling *= (n - i);
  const BigInt chi = char_sym(lambda, Partition(padded));
  return Rational(falling * chi, dim_sym(lambda));
}

int weight(const Partition& rho) { return rho.size() + rho.length(); }

namespace {

void multisets_rec(int remaining, int max_index, IndexMultiset& cur, std::vector<IndexMultiset>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (int j = std::min(max_index, remaining - 1); j >= 1; --j) {
    cur.push_back(j);
    multisets_rec(remaining - (j + 1), j, cur, out);
    cur.pop_back();
  }
}

}  // namespace

WeightedBasisExpansion top_weight_expansion(int k) {
  if (k < 1) throw std::invalid_argument("top_weight_expansion: k must be positive");
  WeightedBasisExpansion e;
  e.source_k = k;
  std::vector<IndexMultiset> multisets;
  IndexMultiset cur;
  multisets_rec(k + 1, k, cur, multisets);
  for (const auto& m : multisets) {
    // multinomial (k+1)! / (m_1! m_2! ... (k+1-|M|)!)
    BigInt denom = factorial(static_cast<unsigned>(k + 1 - static_cast<int>(m.size())));
    for (size_t i = 0; i < m.size();) {
      size_t j = i;
      while (j < m.size() && m[j] == m[i]) ++j;
      denom *= factorial(static_cast<unsigned>(j - i));
      i = j;
    }
    e.terms[m] = Rational(factorial(static_cast<unsigned>(k + 1)), denom * (k + 1));
  }
  return e;
}

Rational evaluate_expansion(const WeightedBasisExpansion& e, const Partition& lambda) {
  Rational total = 0;
  for (const auto& [m, coeff] : e.terms) {
    Rational term = coeff;
    for (int j : m) term *= p_sharp_value(Partition({j}), lambda);
    total += term;
  }
  return total;
}

}  // namespace gtstate
