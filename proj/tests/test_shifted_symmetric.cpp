#include "doctest.h"

#include "gtstate/shifted_symmetric.hpp"

#include <cmath>

using namespace gtstate;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

}  // namespace

TEST_CASE("shifted power sums") {
  CHECK(p_shifted_sum(1, Signature({0, 0, 0})) == 0);
  CHECK(p_shifted_sum(2, Signature({1})) == 0);
  CHECK(p_shifted_sum(1, Signature({4, 2, 1})) == 7);
  CHECK_THROWS(p_shifted_sum(0, Signature({1})));
  // (1.5)^3 - (-0.5)^3 + (-0.5)^3 - (-1.5)^3
  CHECK(p_shifted_sum(3, Signature({2, 1})) == Rational(27, 4));
  for (int n = 0; n <= 10; ++n) {
    for (const auto& lam : partitions_of(n)) {
      const auto sig = Signature::from_partition(lam, lam.length());
      CHECK(p_shifted_sum(1, sig) == n);
      CHECK(p_shifted_sum(1, sig) == p_sharp_value(P({1}), lam));
      for (int k = 1; k <= 4; ++k) {
        CHECK(p_shifted_sum(k, Signature::from_partition(lam, lam.length() + 3)) == p_shifted_sum(k, sig));
      }
    }
  }
}

TEST_CASE("p sharp values") {
  CHECK(p_sharp_value(P({1}), P({3, 1})) == 4);
  CHECK(p_sharp_value(P({3}), P({2})) == 0);
  CHECK(p_sharp_value(P({2}), P({2})) == 2);
  CHECK(p_sharp_value(P({2}), P({1, 1})) == -2);
  // p#_(1,1) = n(n-1)
  CHECK(p_sharp_value(P({1, 1}), P({3, 1})) == 12);
}

TEST_CASE("weights") {
  CHECK(weight(P({1})) == 2);
  CHECK(weight(P({5})) == 6);
  CHECK(weight(P({2, 1})) == 5);
}

TEST_CASE("top weight expansion") {
  auto e1 = top_weight_expansion(1);
  CHECK(e1.terms.size() == 1);
  CHECK(e1.terms.at({1}) == 1);
  auto e2 = top_weight_expansion(2);
  CHECK(e2.terms.size() == 1);
  CHECK(e2.terms.at({2}) == 1);
  auto e3 = top_weight_expansion(3);
  CHECK(e3.terms.size() == 2);
  CHECK(e3.terms.at({3}) == 1);
  CHECK(e3.terms.at({1, 1}) == Rational(3, 2));
  CHECK_THROWS(top_weight_expansion(0));
}

TEST_CASE("top weight dominance on dilations") {
  const std::vector<int> base{3, 2, 1};
  for (int k = 1; k <= 4; ++k) {
    const auto e = top_weight_expansion(k);
    double prev = 1e300;
    for (int m : {4, 8, 16, 32, 64}) {
      std::vector<int> parts;
      for (int v : base) parts.push_back(v * m);
      const Partition lam(parts);
      const double pk = to_double(p_shifted_sum(k, Signature::from_partition(lam, lam.length())));
      const double top = to_double(evaluate_expansion(e, lam));
      const double err = std::abs(pk / top - 1.0);
      // relative error O(1/m): it must shrink roughly by half per doubling
      if (prev < 1e299 && prev > 1e-12) CHECK(err <= 0.75 * prev);
      CHECK(err * m <= 10.0);
      prev = err;
    }
  }
}
