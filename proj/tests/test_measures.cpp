#include "doctest.h"

#include "gtstate/measures.hpp"

#include <cmath>
#include <map>
#include <numbers>

using namespace gtstate;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

}  // namespace

TEST_CASE("rsk shapes") {
  CHECK(rsk_shape({}) == Partition());
  CHECK(rsk_shape({2, 1}) == P({1, 1}));
  CHECK(rsk_shape({1, 2, 1}) == P({2, 1}));
  CHECK(rsk_shape({3, 1, 2, 1, 3}) == P({3, 1, 1}));
  const auto t = rsk_insertion_tableau({1, 2, 1});
  CHECK(t == Tableau{{1, 1}, {2}});
  CHECK(tableau_level(t, 1) == Signature({2}));
  CHECK(tableau_level(t, 2) == Signature({2, 1}));
  CHECK(tableau_level(t, 3) == Signature({2, 1, 0}));
}

TEST_CASE("schur weyl measure") {
  CHECK(pmf_schur_weyl(P({2}), 2, 2) == Rational(3, 4));
  CHECK(pmf_schur_weyl(P({1, 1}), 2, 1) == 0);
  CHECK(pmf_schur_weyl(P({2}), 3, 2) == 0);
  Rational total = 0;
  for (const auto& lam : partitions_of(3)) total += pmf_schur_weyl(lam, 3, 2);
  CHECK(total == 1);
  // histogram of shapes over all words equals the measure
  for (int N = 1; N <= 3; ++N) {
    for (int n = 0; n <= 4; ++n) {
      std::map<Partition, long> hist;
      long words = 1;
      for (int i = 0; i < n; ++i) words *= N;
      for (long code = 0; code < words; ++code) {
        std::vector<int> w;
        long c = code;
        for (int i = 0; i < n; ++i, c /= N) w.push_back(static_cast<int>(c % N) + 1);
        const auto shape = rsk_shape(w);
        CHECK(shape.length() <= N);
        ++hist[shape];
      }
      for (const auto& lam : partitions_of(n)) {
        CHECK(Rational(hist[lam], words) == pmf_schur_weyl(lam, n, N));
      }
    }
  }
}

TEST_CASE("plancherel measure") {
  PlancherelParams p{1, 3};
  CHECK(pmf_plancherel(Partition(), p) == doctest::Approx(std::exp(-9.0)).epsilon(1e-12));
  CHECK(pmf_plancherel(P({1}), p) == doctest::Approx(std::exp(-9.0) * 9).epsilon(1e-12));
  CHECK(pmf_plancherel(P({1, 1, 1, 1}), p) == 0.0);
  double total = 0;
  for (int n = 0; n <= 40; ++n) {
    for (const auto& lam : partitions_of(n, 3)) total += pmf_plancherel(lam, p);
  }
  CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("sampling is deterministic and thread independent") {
  PlancherelParams p{1, 5};
  const auto a = sample_plancherel_many(p, 99, 200, 1);
  const auto b = sample_plancherel_many(p, 99, 200, 4);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].shape == b[i].shape);
    CHECK(a[i].n_letters == b[i].n_letters);
    CHECK(a[i].index == i);
  }
  const auto c = sample_plancherel(p, 99, 17);
  CHECK(c.shape == a[17].shape);
  CHECK(c.shape.size() == c.n_letters);
  CHECK(c.shape.length() <= p.L);
  for (int m = 2; m <= p.L; ++m) CHECK(interlaces(c.level(m - 1), c.level(m)));
  const auto zero = sample_plancherel(PlancherelParams{0, 4}, 1, 0);
  CHECK(zero.shape.empty());
}

TEST_CASE("sampled shapes follow the plancherel pmf") {
  PlancherelParams p{1, 2};
  const size_t count = 100000;
  const auto s = sample_plancherel_many(p, 2024, count, 4);
  std::map<Partition, long> hist;
  for (const auto& r : s) ++hist[r.shape];
  for (int n = 0; n <= 8; ++n) {
    for (const auto& lam : partitions_of(n, 2)) {
      const double q = pmf_plancherel(lam, p);
      const double sd = std::sqrt(count * q * (1 - q));
      CHECK(std::abs(hist[lam] - count * q) <= 4 * sd + 1e-9);
    }
  }
}

TEST_CASE("height function") {
  const Signature lam({2, 1});
  CHECK(height_value(lam, -100.0) == doctest::Approx(2 * std::sqrt(std::numbers::pi)));
  CHECK(height_value(lam, 1.6) == 0.0);
  CHECK(height_value(lam, 1.0) == doctest::Approx(std::sqrt(std::numbers::pi)));
}

TEST_CASE("empirical moments") {
  SampleRecord r;
  r.shape = P({2, 1});
  CHECK(empirical_moment({r, r, r}, 0, 4).variance == 0.0);
  CHECK_THROWS(empirical_moment({r}, 0, 4));
  PlancherelParams p{1, 10};
  const auto s = sample_plancherel_many(p, 5, 2000, 4);
  const auto st = empirical_moment(s, 0, p.L);
  CHECK(std::abs(st.raw_mean / 100.0 - 1.0) <= 3 * st.raw_mean_se / 100.0);
  // M = sqrt(pi) (p_1 - mean) / L and Var(p_1) = gamma L^2, so Var(M) = pi gamma
  CHECK(std::abs(st.variance - std::numbers::pi) <= 4 * st.variance_se);
  const auto cs = column_stats({1.0, 2.0, 3.0});
  CHECK(cs.raw_mean == 2.0);
  CHECK(cs.variance == 1.0);
}

TEST_CASE("coherency") {
  CHECK(poisson_cutoff(0.0, 1e-12) == 0);
  CHECK(poisson_cutoff(2.0, 1e-12) > 10);
  for (int N : {1, 2}) {
    for (double gl : {0.5, 2.0}) {
      const double L = 4;
      CHECK(coherency_residual(gl / L, L, N, poisson_cutoff(gl * N, 1e-12)) <= 1e-8);
    }
  }
  CHECK_THROWS(coherency_residual(1.0, 2.0, 2, 10));
}

TEST_CASE("extreme characters") {
  const std::vector<std::complex<double>> us{{0, 1}, {-1, 0}, {std::cos(0.3), std::sin(0.3)}};
  CHECK(std::abs(extreme_character_eval({}, us) - 1.0) < 1e-15);
  ExtremeCharacterParams w;
  w.alpha_plus = {0.3};
  w.beta_minus = {0.2};
  w.gamma_plus = 1.5;
  CHECK(std::abs(extreme_character_eval(w, {1.0, 1.0}) - 1.0) < 1e-15);
  ExtremeCharacterParams det;
  det.beta_plus = {1.0};
  CHECK(std::abs(extreme_character_eval(det, {us[2]}) - us[2]) < 1e-15);
  CHECK_THROWS_AS(extreme_character_eval(w, {{3.0, 0.0}}), std::invalid_argument);
  ExtremeCharacterParams bad;
  bad.alpha_plus = {-0.5};
  CHECK_THROWS_AS(extreme_character_eval(bad, us), std::invalid_argument);
}
