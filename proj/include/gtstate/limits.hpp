#pragma once

// Large-L limits: covariances of the centered p# and p_k elements, their
// generating function and contour-integral forms, the correlated GFF kernel
// and the moment covariances built from them.
//
// The purely algebraic formulas are templates on the scalar so they run
// exactly on Rational and approximately on double.

#include "gtstate/rational.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace gtstate {

namespace detail {

template <class T>
T from_big(const BigInt& v) {
  if constexpr (std::is_same_v<T, Rational>) {
    return Rational(v);
  } else {
    return v.template convert_to<T>();
  }
}

template <class T>
T ipow(const T& base, int e) {
  T out = T(1);
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

template <class T>
using Series = std::vector<T>;  // truncated power series in one variable

template <class T>
Series<T> mul_trunc(const Series<T>& a, const Series<T>& b, size_t order) {
  Series<T> r(order + 1, T(0));
  for (size_t i = 0; i < a.size() && i <= order; ++i) {
    if (a[i] == T(0)) continue;
    for (size_t j = 0; j < b.size() && i + j <= order; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

/// Phi_eta(t)^power up to t^order, with Phi_eta(t) = 1 + eta gamma t^2 / (1 - gamma t).
template <class T>
Series<T> phi_power(const T& eta, const T& gamma, int power, size_t order) {
  Series<T> phi(order + 1, T(0));
  phi[0] = T(1);
  for (size_t n = 2; n <= order; ++n) phi[n] = eta * ipow(gamma, static_cast<int>(n) - 1);
  Series<T> out(order + 1, T(0));
  out[0] = T(1);
  for (int i = 0; i < power; ++i) out = mul_trunc(out, phi, order);
  return out;
}

}  // namespace detail

/// sum_{n=1}^{min(k,l)} n C(k,n) C(l,n) c^n gamma^{k+l-n}
template <class T>
T cov_sharp_limit(int k, int l, const T& c, const T& gamma) {
  T total = T(0);
  for (int n = 1; n <= std::min(k, l); ++n) {
    total += T(n) * detail::from_big<T>(binomial(k, n) * binomial(l, n)) * detail::ipow(c, n) *
             detail::ipow(gamma, k + l - n);
  }
  return total;
}

/// Coefficient of u^k v^l in c gamma u v / ((1 - gamma u)(1 - gamma v) - c gamma u v)^2.
template <class T>
T cov_sharp_genfun_coeff(int k, int l, const T& c, const T& gamma) {
  if (k < 1 || l < 1) return T(0);
  // bivariate series indexed [i][j], truncated at u^k v^l
  using Grid = std::vector<std::vector<T>>;
  const size_t K = static_cast<size_t>(k), L = static_cast<size_t>(l);
  Grid d(K + 1, std::vector<T>(L + 1, T(0)));
  d[0][0] = T(1);
  if (K >= 1) d[1][0] = -gamma;
  if (L >= 1) d[0][1] = -gamma;
  d[1][1] = gamma * gamma - c * gamma;
  // inverse of d, term by term (d[0][0] = 1)
  Grid inv(K + 1, std::vector<T>(L + 1, T(0)));
  for (size_t i = 0; i <= K; ++i) {
    for (size_t j = 0; j <= L; ++j) {
      T v = (i == 0 && j == 0) ? T(1) : T(0);
      for (size_t a = 0; a <= std::min<size_t>(i, 1); ++a) {
        for (size_t b = 0; b <= std::min<size_t>(j, 1); ++b) {
          if (a == 0 && b == 0) continue;
          v -= d[a][b] * inv[i - a][j - b];
        }
      }
      inv[i][j] = v;
    }
  }
  // [u^{k-1} v^{l-1}] inv^2, times c gamma
  T sq = T(0);
  for (size_t i = 0; i + 1 <= K; ++i) {
    for (size_t j = 0; j + 1 <= L; ++j) sq += inv[i][j] * inv[K - 1 - i][L - 1 - j];
  }
  return c * gamma * sq;
}

/// 1/(k+1) sum_r gamma^{k-r+1} eta^r C(k+1, r) C(k-r, r-1), with C(a, b) = 0
/// whenever a < 0, b < 0 or b > a.
template <class T>
T m_const(int k, const T& eta, const T& gamma) {
  T total = T(0);
  for (int r = 0; r <= k + 1; ++r) {
    const BigInt b = binomial(k + 1, r) * binomial(k - r, r - 1);
    if (b == 0) continue;
    total += detail::ipow(gamma, k - r + 1) * detail::ipow(eta, r) * detail::from_big<T>(b);
  }
  return total / T(k + 1);
}

/// [u^{k+1} v^{l+1}] K(u,v) Phi_{eta1}(u)^k Phi_{eta2}(v)^l with
/// K(u,v) = sum_{i,j>=1} cov_sharp_limit(i,j,c,gamma) u^{i+1} v^{j+1}.
template <class T>
T cov_p_series(int k, int l, const T& eta1, const T& eta2, const T& c, const T& gamma) {
  if (k < 1 || l < 1) return T(0);
  const auto pu = detail::phi_power(eta1, gamma, k, static_cast<size_t>(k + 1));
  const auto pv = detail::phi_power(eta2, gamma, l, static_cast<size_t>(l + 1));
  T total = T(0);
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j <= l; ++j) {
      total += cov_sharp_limit(i, j, c, gamma) * pu[static_cast<size_t>(k - i)] *
               pv[static_cast<size_t>(l - j)];
    }
  }
  return total;
}

/// pi/((k+1)(k'+1)) cov_p_series(k+1, k'+1, y, y', c, gamma)
double moment_cov(int k, int kp, double y, double yp, double c, double gamma);

// ---- contour quadrature -------------------------------------------------

struct ContourSpec {
  int nodes = 2048;  // M, angle nodes per contour
  /// Relative radius offsets (delta gamma / eta) used when the log kernel
  /// touches its singularity; extrapolated back to zero offset.
  std::vector<double> offsets{0.1, 0.075, 0.05, 0.025, 0.0125};
  /// Extrapolate when a/(r1 r2) exceeds this (the kernel is singular at 1).
  double singular_ratio = 0.98;
  /// Relative outward offset of the w circle for the rational kernel.
  double rational_offset = 0.25;
  /// Non-convergence threshold between M and M/2 nodes.
  double tolerance = 1e-6;
  unsigned threads = 1;
};

struct ContourResult {
  double value = 0.0;
  double estimate = 0.0;  // |value(M) - value(M/2)|
  bool converged = true;
  bool extrapolated = false;
};

/// kl/pi oint oint x(z)^{k-1} x(w)^{l-1} (1/2pi) ln|(c/gamma - zw)/(c/gamma - z conj(w))| dx(z) dx(w)
/// over upper half circles |z|^2 = eta1/gamma, |w|^2 = eta2/gamma.
ContourResult cov_p_contour_log(int k, int l, double eta1, double eta2, double c, double gamma,
                                const ContourSpec& spec = {});

/// All (k, l) in [1..kmax] x [1..lmax] from one kernel evaluation; entry (k-1, l-1).
std::vector<std::vector<ContourResult>> cov_p_contour_log_table(int kmax, int lmax, double eta1, double eta2,
                                                                double c, double gamma,
                                                                const ContourSpec& spec = {});

struct RationalContourResult {
  double value = 0.0;
  double oracle = 0.0;  // cov_p_series
  bool agrees = false;
  std::string flag() const { return agrees ? "AGREES" : "DISAGREES"; }
};

/// 1/(2 pi i)^2 oint oint x(z)^k x(w)^l (c/eta1) / (c z/eta1 - w)^2 dz dw with
/// x(z) = -eta/z - gamma (z - 1) on full circles, eta1 <= eta2 after swapping.
/// Non-normative; compared against cov_p_series with tolerance 1e-6.
RationalContourResult cov_p_contour_rational(int k, int l, double eta1, double eta2, double c, double gamma,
                                             const ContourSpec& spec = {});

// ---- Gaussian free field -------------------------------------------------

/// (1/2pi) ln|(alpha - z w)/(alpha - z conj(w))|; +inf at the singularity.
double gff_kernel(double alpha, std::complex<double> z, std::complex<double> w);

/// -(1/2pi) ln|(z - w)/(z - conj(w))|. Throws when z == w.
double gff_green(std::complex<double> z, std::complex<double> w);

/// Sum over perfect matchings of `indices` of products of cov entries (0-based).
double wick_sum(const Eigen::MatrixXd& cov, const std::vector<int>& indices);

// ---- regular families ---------------------------------------------------

/// Limit data of index sets I_r with |I_r| ~ eta_r L and |I_r cap I_s| ~ c_rs L.
struct RegularFamilySpec {
  double gamma = 1.0;
  std::vector<double> etas;
  Eigen::MatrixXd overlaps;
  std::optional<double> union_bound;

  /// Throws std::invalid_argument when an invariant fails.
  void validate() const;
};

/// Covariance of the moment observables over (sequence, k) with y = eta_r:
/// rows ordered sequence-major, k = 0..kmax.
Eigen::MatrixXd moment_cov_matrix(const RegularFamilySpec& spec, int kmax);

/// Nested sequences A_i; alpha(i, x; j, y) = lim |A_{i,[xL]} cap A_{j,[yL]}| / L.
using OverlapDensity = std::function<double(int i, double x, int j, double y)>;

struct GridPoint {
  int sequence = 0;
  double y = 1.0;
  int k = 0;
};

Eigen::MatrixXd moment_cov_matrix(const OverlapDensity& alpha, const std::vector<GridPoint>& grid, double gamma);

/// The family A_1 = (1, 2, 3, ...), A_2 = (2, 4, 6, ...), A_3 = (3, 5, 7, ...).
OverlapDensity example_overlap_density();

double min_eigenvalue(const Eigen::MatrixXd& symmetric);

}  // namespace gtstate
