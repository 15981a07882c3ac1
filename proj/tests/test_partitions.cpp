#include "doctest.h"

#include "gtstate/partitions.hpp"

#include <stdexcept>

using namespace gtstate;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }
Signature S(std::vector<int> v) { return Signature(std::move(v)); }

// All signatures of length n with parts in [0, top].
void signatures_rec(int n, int top, std::vector<int>& cur, std::vector<Signature>& out) {
  if (static_cast<int>(cur.size()) == n) {
    out.emplace_back(cur);
    return;
  }
  const int hi = cur.empty() ? top : cur.back();
  for (int v = hi; v >= 0; --v) {
    cur.push_back(v);
    signatures_rec(n, top, cur, out);
    cur.pop_back();
  }
}

}  // namespace

TEST_CASE("partition construction and parsing") {
  CHECK(P({3, 1, 0, 0}).parts() == std::vector<int>{3, 1});
  CHECK(P({2, 2}).size() == 4);
  CHECK_THROWS_AS(P({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(P({2, -1}), std::invalid_argument);
  CHECK(parse_partition("4,2,1,1") == P({4, 2, 1, 1}));
  CHECK(parse_partition("") == Partition());
  CHECK_THROWS_AS(parse_partition("1,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition("2,,1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition("a"), std::invalid_argument);
  CHECK(format_partition(P({4, 2, 1, 1})) == "4,2,1,1");
  CHECK(P({3, 1}).transpose() == P({2, 1, 1}));
}

TEST_CASE("frobenius coordinates") {
  auto e = frobenius(Partition());
  CHECK(e.d == 0);
  CHECK(e.a().empty());
  auto f = frobenius(P({3, 1}));
  CHECK(f.d == 1);
  CHECK(f.a() == std::vector<double>{2.5});
  CHECK(f.b() == std::vector<double>{1.5});
  auto g = frobenius(P({2, 2}));
  CHECK(g.d == 2);
  CHECK(g.a() == std::vector<double>{1.5, 0.5});
  CHECK(g.b() == std::vector<double>{1.5, 0.5});
  for (int n = 0; n <= 12; ++n) {
    for (const auto& mu : partitions_of(n)) {
      auto fc = frobenius(mu);
      int twice = 0;
      for (int v : fc.a_twice) twice += v;
      for (int v : fc.b_twice) twice += v;
      CHECK(twice == 2 * n);
    }
  }
}

TEST_CASE("dimensions") {
  CHECK(dim_sym(P({5})) == 1);
  CHECK(dim_sym(P({2, 1})) == 2);
  CHECK(dim_sym(P({2, 2})) == 2);
  CHECK(dim_sym(P({3, 2, 1})) == 16);
  CHECK(dim_un(S({0, 0, 0})) == 1);
  CHECK(dim_un(S({1, 0})) == 2);
  CHECK(dim_un(S({2, 0})) == 3);
  CHECK(dim_un(S({1, 1, 0})) == 3);
  CHECK(dim_un(S({0, -1})) == 2);
  // sum over lambda of dim * Dim_N = N^n
  for (int N = 1; N <= 4; ++N) {
    for (int n = 0; n <= 6; ++n) {
      BigInt total = 0;
      for (const auto& lam : partitions_of(n, N)) total += dim_sym(lam) * dim_un(lam, N);
      CHECK(total == boost::multiprecision::pow(BigInt(N), static_cast<unsigned>(n)));
    }
  }
}

TEST_CASE("characters") {
  CHECK(char_sym(P({1, 1}), P({2})) == -1);
  CHECK(char_sym(P({2, 1}), P({3})) == -1);
  CHECK(char_sym(P({2, 1}), P({1, 1, 1})) == 2);
  CHECK(char_sym(P({3, 2, 1}), P({1, 1, 1, 1, 1, 1})) == 16);
  CHECK_THROWS(char_sym(P({2}), P({1})));
  // row orthogonality
  for (int n = 1; n <= 5; ++n) {
    const auto parts = partitions_of(n);
    BigInt nfact = factorial(static_cast<unsigned>(n));
    for (const auto& lam : parts) {
      for (const auto& mu : parts) {
        BigInt s = 0;
        for (const auto& rho : parts) s += class_size(rho) * char_sym(lam, rho) * char_sym(mu, rho);
        CHECK(s == (lam == mu ? nfact : BigInt(0)));
      }
    }
  }
}

TEST_CASE("interlacing and path counts") {
  CHECK(interlaces(Signature(), S({4})));
  CHECK(interlaces(S({2}), S({3, 1})));
  CHECK_FALSE(interlaces(S({4}), S({3, 1})));
  CHECK_FALSE(interlaces(S({0}), S({3, 1})));
  CHECK(count_paths(S({5})) == 1);
  CHECK(count_paths(S({1, 0})) == 2);
  CHECK(count_paths(S({2, 0})) == 3);
  for (int N = 1; N <= 4; ++N) {
    std::vector<Signature> sigs;
    std::vector<int> cur;
    signatures_rec(N, 6, cur, sigs);
    for (const auto& s : sigs) {
      int total = 0;
      for (int v : s.coords()) total += v;
      if (total > 6) continue;
      CHECK(count_paths(s) == dim_un(s));
    }
  }
}

TEST_CASE("partition enumeration") {
  CHECK(partitions_of(0).size() == 1);
  CHECK(partitions_of(5).size() == 7);
  CHECK(partitions_of(10).size() == 42);
  CHECK(partitions_of(5, 2).size() == 3);
  CHECK(class_size(P({2, 1})) == 3);
  CHECK(class_size(P({1, 1, 1})) == 1);
}
