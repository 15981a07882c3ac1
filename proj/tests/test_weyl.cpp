#include "doctest.h"

#include "gtstate/weyl.hpp"

#include <random>

using namespace gtstate;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

NormalMonomial mono(std::map<std::pair<int, int>, int> x, std::map<std::pair<int, int>, int> d) {
  NormalMonomial m;
  m.xexp = std::move(x);
  m.dexp = std::move(d);
  return m;
}

// |I|^{l(rho)} (gamma L)^{|rho|}
StatePolynomial mean_formula(const Partition& rho, int isize, const Rational& gamma) {
  std::vector<BigInt> counts(static_cast<size_t>(rho.size() + 1), 0);
  counts.back() = boost::multiprecision::pow(BigInt(isize), static_cast<unsigned>(rho.length()));
  return StatePolynomial::from_gamma_l_powers(gamma, counts);
}

WeylWord random_word(std::mt19937_64& rng, int len, int nidx) {
  std::uniform_int_distribution<int> idx(1, nidx), kind(0, 1);
  WeylWord w;
  for (int i = 0; i < len; ++i) w.push_back({kind(rng) ? LetterKind::X : LetterKind::D, idx(rng), idx(rng)});
  return w;
}

}  // namespace

TEST_CASE("word parsing") {
  const auto w = parse_word("x(1,2) d(2,3) x(2,3)");
  REQUIRE(w.size() == 3);
  CHECK(w[0] == xgen(1, 2));
  CHECK(w[1] == dgen(2, 3));
  CHECK(parse_word("").empty());
  CHECK(parse_word(format_word(w)) == w);
  CHECK_THROWS(parse_word("y(1,2)"));
  CHECK_THROWS(parse_word("x(0,1)"));
}

TEST_CASE("state polynomial arithmetic") {
  const Rational half(1, 2);
  auto p = StatePolynomial::from_gamma_l_powers(half, {0, 2, 1});  // 2 (L/2) + (L/2)^2
  CHECK(p.coefficient(1) == 1);
  CHECK(p.coefficient(2) == Rational(1, 4));
  CHECK(p.to_string() == "1/4*L^2 + L");
  CHECK(p.evaluate(Rational(2)) == 3);
  CHECK(StatePolynomial(half).to_string() == "0");
  CHECK((p - p).is_zero());
  CHECK((p * StatePolynomial::constant(half, 2)).coefficient(1) == 2);
  CHECK_THROWS(p + StatePolynomial(Rational(1)));
}

TEST_CASE("normal ordering") {
  auto n1 = normal_order(parse_word("d(1,1) x(1,1)"));
  CHECK(n1.size() == 2);
  CHECK(n1.at(mono({{{1, 1}, 1}}, {{{1, 1}, 1}})) == 1);
  CHECK(n1.at(mono({}, {})) == 1);
  auto n2 = normal_order(parse_word("d(1,2) x(1,1)"));
  CHECK(n2.size() == 1);
  CHECK(n2.at(mono({{{1, 1}, 1}}, {{{1, 2}, 1}})) == 1);
  auto n3 = normal_order(parse_word("d(1,1) x(1,1) x(1,1)"));
  CHECK(n3.size() == 2);
  CHECK(n3.at(mono({{{1, 1}, 2}}, {{{1, 1}, 1}})) == 1);
  CHECK(n3.at(mono({{{1, 1}, 1}}, {})) == 2);
}

TEST_CASE("state of normal monomials") {
  const Rational g(1, 3);
  CHECK(state_of_normal(mono({{{1, 1}, 1}}, {{{1, 1}, 1}}), g) == StatePolynomial::from_gamma_l_powers(g, {0, 1}));
  CHECK(state_of_normal(mono({{{1, 2}, 1}}, {{{1, 2}, 1}}), g).is_zero());
  CHECK(state_of_normal(mono({{{1, 1}, 2}}, {{{1, 1}, 2}}), g) == StatePolynomial::from_gamma_l_powers(g, {0, 0, 1}));
}

TEST_CASE("contraction counting matches normal ordering") {
  std::mt19937_64 rng(7);
  const Rational g(2, 3);
  for (int trial = 0; trial < 400; ++trial) {
    const auto w = random_word(rng, 1 + trial % 10, 2);
    CHECK(StatePolynomial::from_gamma_l_powers(g, word_state_counts(w)) == state_of_word(w, g));
  }
}

TEST_CASE("p sharp elements") {
  CHECK(canonical_permutation(P({3})) == std::vector<int>{1, 2, 0});
  CHECK(canonical_permutation(P({2, 1})) == std::vector<int>{1, 0, 2});
  auto e = build_psharp_element(P({1}), {1}, {1});
  CHECK(e.terms.size() == 1);
  CHECK(e.terms.count(parse_word("x(1,1) d(1,1)")) == 1);
  auto f = build_psharp_element(P({1}), {1}, {1, 2});
  CHECK(f.terms.size() == 2);
  CHECK(f.terms.count(parse_word("x(2,1) d(2,1)")) == 1);
  auto g = build_psharp_element(P({2}), {1}, {1});
  CHECK(g.terms.size() == 1);
  CHECK(g.terms.count(parse_word("x(1,1) x(1,1) d(1,1) d(1,1)")) == 1);
  CHECK_THROWS_AS(build_psharp_element(P({1}), {3}, {1, 2}), std::invalid_argument);
}

TEST_CASE("exact means and embedding independence") {
  for (const Rational& gamma : {Rational(1, 2), Rational(1)}) {
    CHECK(state(build_psharp_element(P({1}), {1, 2, 3}, {1, 2, 3}), gamma) == mean_formula(P({1}), 3, gamma));
    CHECK(state(build_psharp_element(P({2}), {1, 2}, {1, 2, 3}), gamma) == mean_formula(P({2}), 2, gamma));
    for (const auto& rho : {P({1}), P({2}), P({1, 1}), P({2, 1})}) {
      for (const std::vector<int>& J : {std::vector<int>{1, 2}, std::vector<int>{1, 2, 3}, std::vector<int>{1, 2, 3, 4}}) {
        CHECK(state(build_psharp_element(rho, {1, 2}, J), gamma) == mean_formula(rho, 2, gamma));
      }
    }
  }
  CHECK(state(CentralElement{}, Rational(1)).is_zero());
}

TEST_CASE("centering") {
  const Rational gamma(1, 2);
  auto nu = center(build_psharp_element(P({1}), {1}, {1}), gamma);
  CHECK(nu.terms.size() == 2);
  CHECK(nu.terms.at(WeylWord{}) == StatePolynomial::from_gamma_l_powers(gamma, {0, -1}));
  CHECK(state(nu, gamma).is_zero());
  CHECK(center(identity_element(gamma), gamma).terms.empty());
  CHECK(state(center(build_psharp_element(P({2}), {1, 2}, {1, 2, 3}), gamma), gamma).is_zero());
}

TEST_CASE("products of centered elements") {
  const Rational gamma(1, 3);
  const auto gl = StatePolynomial::from_gamma_l_powers(gamma, {0, 1});
  for (const std::vector<int>& J : {std::vector<int>{1}, std::vector<int>{1, 2}}) {
    auto nu = center(build_psharp_element(P({1}), {1}, J), gamma);
    CHECK(state_of_product({nu, nu}, gamma) == gl);
    CHECK(state_of_product({nu, nu, nu}, gamma) == gl);
  }
  auto a = center(build_psharp_element(P({1}), {1, 2}, {1, 2, 3}), gamma);
  auto b = center(build_psharp_element(P({1}), {2, 3}, {1, 2, 3}), gamma);
  CHECK(state_of_product({a, b}, gamma) == gl);
  auto nu = center(build_psharp_element(P({1}), {1}, {1}), gamma);
  CHECK(state_of_product({nu, nu, nu, nu}, gamma) == StatePolynomial::from_gamma_l_powers(gamma, {0, 1, 3}));
  EngineOptions tight;
  tight.term_budget = 3;
  CHECK_THROWS_AS(state_of_product({nu, nu, nu}, gamma, tight), BudgetExceeded);
}

TEST_CASE("compressed products agree with expansion") {
  const Rational gamma(1, 2);
  const std::vector<std::vector<PsharpFactor>> cases{
      {{P({1}), {1, 2}, true}, {P({1}), {2, 3}, true}},
      {{P({2}), {1, 2}, true}, {P({1}), {1}, true}},
      {{P({2}), {1}, false}, {P({2}), {1, 2}, false}},
      {{P({2, 1}), {1, 2}, false}},
      {{P({1}), {1}, true}, {P({1}), {1}, true}, {P({1}), {1, 2}, true}},
  };
  for (const auto& fs : cases) {
    CHECK(state_of_psharp_product(fs, {1, 2, 3}, gamma) == state_of_psharp_product_naive(fs, {1, 2, 3}, gamma));
  }
  EngineOptions threaded;
  threaded.threads = 4;
  CHECK(state_of_psharp_product(cases[1], {1, 2, 3}, gamma, threaded) ==
        state_of_psharp_product(cases[1], {1, 2, 3}, gamma));
}

TEST_CASE("monomial statistics") {
  const auto s = graph_stats(parse_word("x(1,2) d(2,3) x(2,3) x(2,2) d(4,1) d(3,3)"));
  CHECK(s.supp == std::set<int>{1, 2, 3, 4});
  CHECK(s.cov == 4);
  REQUIRE(s.deg.has_value());
  CHECK(*s.deg == 3);
  CHECK(s.cap == 1);
  const auto t = graph_stats(parse_word("x(1,1) d(1,1)"));
  CHECK(t.cov == 1);
  CHECK(*t.deg == 1);
  CHECK(t.cap == 1);
  CHECK(t.regular);
  const auto u = graph_stats(parse_word("x(1,2) d(1,2)"));
  CHECK_FALSE(u.d_regular);
  CHECK_FALSE(u.x_regular);
  CHECK_FALSE(u.regular);
  CHECK_FALSE(graph_stats(parse_word("x(1,1) x(1,1) d(1,1)")).deg.has_value());
}

TEST_CASE("irregular words have zero state") {
  std::mt19937_64 rng(11);
  const Rational g(1);
  int irregular = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const auto w = random_word(rng, 1 + trial % 10, 3);
    if (!graph_stats(w).regular) {
      ++irregular;
      CHECK(state_of_word(w, g).is_zero());
    }
  }
  CHECK(irregular > 100);
}
