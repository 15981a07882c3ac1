#include "doctest.h"

#include "gtstate/limits.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

using namespace gtstate;

TEST_CASE("sharp covariance limit") {
  const Rational c(1, 2), g(1, 3);
  CHECK(cov_sharp_limit(1, 1, c, g) == c * g);
  CHECK(cov_sharp_limit(2, 1, c, g) == 2 * c * g * g);
  CHECK(cov_sharp_limit(3, 2, Rational(0), g) == 0);
  CHECK(cov_sharp_limit(1, 1, 1.0, 1.0) == 1.0);
}

TEST_CASE("generating function coefficients") {
  for (const Rational& c : {Rational(1, 2), Rational(1)}) {
    for (const Rational& g : {Rational(1, 2), Rational(1)}) {
      for (int k = 1; k <= 8; ++k) {
        for (int l = 1; l <= 8; ++l) CHECK(cov_sharp_genfun_coeff(k, l, c, g) == cov_sharp_limit(k, l, c, g));
      }
    }
  }
  CHECK(cov_sharp_genfun_coeff(1, 1, Rational(1, 3), Rational(2)) == Rational(2, 3));
  CHECK(cov_sharp_genfun_coeff(4, 3, Rational(0), Rational(2)) == 0);
}

TEST_CASE("moment constants") {
  const Rational eta(1, 3), g(1, 2);
  CHECK(m_const(1, eta, g) == g * eta);
  CHECK(m_const(2, eta, g) == g * g * eta);
  CHECK(m_const(3, Rational(0), g) == 0);
  CHECK(m_const(2, Rational(1), Rational(1)) == 1);
}

TEST_CASE("p covariance series") {
  const Rational e1(1), e2(1, 2), c(1, 4), g(1, 2);
  CHECK(cov_p_series(1, 1, e1, e2, c, g) == c * g);
  CHECK(cov_p_series(2, 1, Rational(1), Rational(1), Rational(1), Rational(1)) == 2);
  CHECK(cov_p_series(3, 2, e1, e2, Rational(0), g) == 0);
  for (int k = 1; k <= 4; ++k) {
    for (int l = 1; l <= 4; ++l) CHECK(cov_p_series(k, l, e1, e2, c, g) == cov_p_series(l, k, e2, e1, c, g));
  }
}

TEST_CASE("log kernel contour integral") {
  struct Case {
    double e1, e2, c;
  };
  for (const Case& t : {Case{1, 1, 1}, Case{1, 1, 0.5}, Case{0.5, 1, 0.25}}) {
    for (double g : {0.5, 1.0}) {
      const auto table = cov_p_contour_log_table(3, 3, t.e1, t.e2, t.c, g);
      CHECK(std::abs(table[0][0].value - t.c * g) <= 1e-8);
      for (int k = 1; k <= 3; ++k) {
        for (int l = 1; l <= 3; ++l) {
          const auto& r = table[static_cast<size_t>(k - 1)][static_cast<size_t>(l - 1)];
          CHECK(r.converged);
          CHECK(std::abs(r.value - cov_p_series(k, l, t.e1, t.e2, t.c, g)) <= 1e-6);
        }
      }
    }
  }
  CHECK(std::abs(cov_p_contour_log(2, 1, 1, 1, 0.0, 1).value) <= 1e-12);
  const double a = cov_p_contour_log(2, 1, 0.5, 1, 0.25, 1).value;
  const double b = cov_p_contour_log(1, 2, 1, 0.5, 0.25, 1).value;
  CHECK(std::abs(a - b) <= 1e-9);
}

TEST_CASE("rational kernel contour integral") {
  // the printed formula picks up an extra residue, so it misses c gamma
  const auto r = cov_p_contour_rational(1, 1, 1, 1, 1, 1);
  CHECK(r.oracle == doctest::Approx(1.0));
  CHECK(std::isfinite(r.value));
  CHECK(r.flag() == (r.agrees ? "AGREES" : "DISAGREES"));
}

TEST_CASE("gff kernel and green function") {
  using C = std::complex<double>;
  CHECK(gff_kernel(1, C(0, 1), C(0, 2)) == doctest::Approx(std::log(3.0) / (2 * std::numbers::pi)));
  CHECK(gff_green(C(0, 1), C(0, 3)) == doctest::Approx(std::log(2.0) / (2 * std::numbers::pi)));
  CHECK(gff_kernel(1, C(0, 1), C(0, 1)) == std::numeric_limits<double>::infinity());
  CHECK_THROWS(gff_green(C(0, 1), C(0, 1)));
  CHECK_THROWS(gff_kernel(1, C(0, -1), C(0, 1)));
  CHECK(gff_green(C(0.3, 1), C(0.1, 1e-9)) < 1e-8);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> re(-2, 2), im(0.05, 2);
  for (int i = 0; i < 200; ++i) {
    const C z(re(rng), im(rng)), w(re(rng), im(rng));
    const double alpha = std::min(std::norm(z), std::norm(w));
    CHECK(std::abs(gff_kernel(alpha, z, w) - gff_green(z, w)) <= 1e-12);
    CHECK(gff_green(z, w) == gff_green(w, z));
    CHECK(gff_green(z, w) >= 0.0);
  }
}

TEST_CASE("wick sums") {
  Eigen::MatrixXd cov(4, 4);
  cov << 2, 0.5, 0.3, 0.1, 0.5, 1, 0.2, 0.4, 0.3, 0.2, 3, 0.7, 0.1, 0.4, 0.7, 1.5;
  CHECK(wick_sum(cov, {0, 1, 2}) == 0.0);
  CHECK(wick_sum(cov, {0, 2}) == 0.3);
  CHECK(wick_sum(cov, {0, 1, 2, 3}) ==
        doctest::Approx(cov(0, 1) * cov(2, 3) + cov(0, 2) * cov(1, 3) + cov(0, 3) * cov(1, 2)));
  CHECK(wick_sum(cov, {0, 0, 0, 0}) == doctest::Approx(3 * 4.0));
  CHECK(wick_sum(cov, {}) == 1.0);
}

TEST_CASE("moment covariances") {
  CHECK(moment_cov(0, 0, 0.5, 0.5, 0.5, 1.0) == doctest::Approx(std::numbers::pi * 0.5));
  CHECK(moment_cov(2, 1, 0.5, 1.0, 0.0, 1.0) == 0.0);
  CHECK(moment_cov(2, 1, 0.5, 1.0, 0.3, 0.7) == doctest::Approx(moment_cov(1, 2, 1.0, 0.5, 0.3, 0.7)));
}

TEST_CASE("regular families") {
  RegularFamilySpec s;
  s.gamma = 1;
  s.etas = {1, 0.5, 0.5};
  s.overlaps.resize(3, 3);
  s.overlaps << 1, 0.5, 0.5, 0.5, 0.5, 0, 0.5, 0, 0.5;
  CHECK_NOTHROW(s.validate());
  const auto m = moment_cov_matrix(s, 3);
  CHECK(m.rows() == 12);
  CHECK((m - m.transpose()).cwiseAbs().maxCoeff() <= 1e-12);
  CHECK(min_eigenvalue(m) >= -1e-9);
  RegularFamilySpec bad = s;
  bad.overlaps(0, 1) = 2;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = s;
  bad.overlaps(0, 1) = 0.4;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

  const auto alpha = example_overlap_density();
  CHECK(alpha(1, 0.5, 1, 0.8) == doctest::Approx(0.5));
  CHECK(alpha(1, 1.0, 2, 1.0) == doctest::Approx(0.5));
  CHECK(alpha(2, 1.0, 1, 1.0) == doctest::Approx(0.5));
  CHECK(alpha(2, 1.0, 3, 1.0) == 0.0);
  std::vector<GridPoint> grid;
  for (int seq = 1; seq <= 3; ++seq) {
    for (double y : {0.5, 1.0}) {
      for (int k = 0; k <= 1; ++k) grid.push_back({seq, y, k});
    }
  }
  CHECK(min_eigenvalue(moment_cov_matrix(alpha, grid, 1.0)) >= -1e-9);
}
