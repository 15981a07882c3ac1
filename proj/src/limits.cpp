#include "gtstate/limits.hpp"

#include <cmath>
#include <future>
#include <numbers>
#include <stdexcept>

namespace gtstate {

using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;

double moment_cov(int k, int kp, double y, double yp, double c, double gamma) {
  if (k < 0 || kp < 0) throw std::invalid_argument("moment_cov: k must be nonnegative");
  if (c > std::min(y, yp) + 1e-15) throw std::invalid_argument("moment_cov: need c <= min(y, y')");
  return kPi / ((k + 1) * (kp + 1)) * cov_p_series<double>(k + 1, kp + 1, y, yp, c, gamma);
}

// ---- log kernel ---------------------------------------------------------

namespace {

using Table = std::vector<std::vector<double>>;

// One trapezoid evaluation of every (k, l) <= (kmax, lmax). The kernel sees
// c/gamma scaled by `a_scale`, which is the same as evaluating it with w on a
// circle of radius r2 / a_scale.
Table log_quadrature(int kmax, int lmax, double eta1, double eta2, double c, double gamma, int m,
                     double a_scale, unsigned threads) {
  const double r1 = std::sqrt(eta1 / gamma);
  const double r2 = std::sqrt(eta2 / gamma);
  const double a = c / gamma * a_scale;
  const double h = kPi / m;

  // z: midpoints; w: interior grid points (the end weights vanish)
  std::vector<cplx> z(static_cast<size_t>(m)), w(static_cast<size_t>(m - 1));
  std::vector<double> xz(z.size()), wz(z.size()), xw(w.size()), ww(w.size());
  for (int i = 0; i < m; ++i) {
    const double th = (i + 0.5) * h;
    z[static_cast<size_t>(i)] = std::polar(r1, th);
    xz[static_cast<size_t>(i)] = gamma * (1.0 - 2.0 * r1 * std::cos(th));
    wz[static_cast<size_t>(i)] = 2.0 * gamma * r1 * std::sin(th) * h;
  }
  for (int j = 1; j < m; ++j) {
    const double ph = j * h;
    w[static_cast<size_t>(j - 1)] = std::polar(r2, ph);
    xw[static_cast<size_t>(j - 1)] = gamma * (1.0 - 2.0 * r2 * std::cos(ph));
    ww[static_cast<size_t>(j - 1)] = 2.0 * gamma * r2 * std::sin(ph) * h;
  }
  // per-w weights x(w)^{l-1} dx(w)
  std::vector<std::vector<double>> wpow(static_cast<size_t>(lmax), std::vector<double>(w.size()));
  for (size_t j = 0; j < w.size(); ++j) {
    double p = ww[j];
    for (int l = 0; l < lmax; ++l) {
      wpow[static_cast<size_t>(l)][j] = p;
      p *= xw[j];
    }
  }

  auto rows = [&](size_t lo, size_t hi) {
    Table acc(static_cast<size_t>(kmax), std::vector<double>(static_cast<size_t>(lmax), 0.0));
    std::vector<double> kern(w.size());
    std::vector<double> r(static_cast<size_t>(lmax));
    for (size_t i = lo; i < hi; ++i) {
      for (size_t j = 0; j < w.size(); ++j) {
        const cplx num = a - z[i] * w[j];
        const cplx den = a - z[i] * std::conj(w[j]);
        kern[j] = 0.5 * std::log(std::norm(num) / std::norm(den));
      }
      for (int l = 0; l < lmax; ++l) {
        double s = 0.0;
        const auto& wp = wpow[static_cast<size_t>(l)];
        for (size_t j = 0; j < w.size(); ++j) s += wp[j] * kern[j];
        r[static_cast<size_t>(l)] = s;
      }
      double zp = wz[i];
      for (int k = 0; k < kmax; ++k) {
        for (int l = 0; l < lmax; ++l) acc[static_cast<size_t>(k)][static_cast<size_t>(l)] += zp * r[static_cast<size_t>(l)];
        zp *= xz[i];
      }
    }
    return acc;
  };

  Table total(static_cast<size_t>(kmax), std::vector<double>(static_cast<size_t>(lmax), 0.0));
  const unsigned nt = std::max(1u, threads);
  std::vector<Table> parts;
  if (nt == 1) {
    parts.push_back(rows(0, z.size()));
  } else {
    std::vector<std::future<Table>> jobs;
    for (unsigned t = 0; t < nt; ++t) {
      jobs.push_back(std::async(std::launch::async, rows, z.size() * t / nt, z.size() * (t + 1) / nt));
    }
    for (auto& j : jobs) parts.push_back(j.get());
  }
  // fixed combination order keeps the result independent of scheduling
  for (const auto& p : parts) {
    for (int k = 0; k < kmax; ++k) {
      for (int l = 0; l < lmax; ++l) total[static_cast<size_t>(k)][static_cast<size_t>(l)] += p[static_cast<size_t>(k)][static_cast<size_t>(l)];
    }
  }
  for (int k = 1; k <= kmax; ++k) {
    for (int l = 1; l <= lmax; ++l) {
      total[static_cast<size_t>(k - 1)][static_cast<size_t>(l - 1)] *= k * l / kPi / (2.0 * kPi);
    }
  }
  return total;
}

// Value at the base contours; near the singular configuration the kernel is
// evaluated at several outward offsets and extrapolated. The value is a
// polynomial of degree <= min(k, l) in t = (1 + offset)^{-1/2}, so Lagrange
// interpolation through the offset values is exact up to quadrature error.
Table log_value(int kmax, int lmax, double eta1, double eta2, double c, double gamma, int m,
                const ContourSpec& spec, bool& extrapolated) {
  const double ratio = (c / gamma) / std::sqrt(eta1 * eta2 / (gamma * gamma));
  extrapolated = ratio > spec.singular_ratio;
  if (!extrapolated) return log_quadrature(kmax, lmax, eta1, eta2, c, gamma, m, 1.0, spec.threads);
  if (spec.offsets.size() < 2) throw std::invalid_argument("contour: need at least two offsets");

  std::vector<double> ts;
  std::vector<Table> vals;
  for (double s : spec.offsets) {
    if (!(s > 0)) throw std::invalid_argument("contour: offsets must be positive");
    const double t = 1.0 / std::sqrt(1.0 + s);
    ts.push_back(t);
    vals.push_back(log_quadrature(kmax, lmax, eta1, eta2, c, gamma, m, t, spec.threads));
  }
  Table out(static_cast<size_t>(kmax), std::vector<double>(static_cast<size_t>(lmax), 0.0));
  for (size_t i = 0; i < ts.size(); ++i) {
    double basis = 1.0;
    for (size_t j = 0; j < ts.size(); ++j) {
      if (j != i) basis *= (1.0 - ts[j]) / (ts[i] - ts[j]);
    }
    for (int k = 0; k < kmax; ++k) {
      for (int l = 0; l < lmax; ++l) out[static_cast<size_t>(k)][static_cast<size_t>(l)] += basis * vals[i][static_cast<size_t>(k)][static_cast<size_t>(l)];
    }
  }
  return out;
}

void check_contour_args(int k, int l, double eta1, double eta2, double c, double gamma, const ContourSpec& spec) {
  if (k < 1 || l < 1) throw std::invalid_argument("contour: k and l must be positive");
  if (!(eta1 > 0 && eta2 > 0 && gamma > 0)) throw std::invalid_argument("contour: eta and gamma must be positive");
  if (c < 0 || c > std::min(eta1, eta2) + 1e-15) throw std::invalid_argument("contour: need 0 <= c <= min(eta1, eta2)");
  if (spec.nodes < 16) throw std::invalid_argument("contour: need at least 16 nodes");
}

}  // namespace

std::vector<std::vector<ContourResult>> cov_p_contour_log_table(int kmax, int lmax, double eta1, double eta2,
                                                                double c, double gamma, const ContourSpec& spec) {
  check_contour_args(kmax, lmax, eta1, eta2, c, gamma, spec);
  std::vector<std::vector<ContourResult>> out(static_cast<size_t>(kmax),
                                              std::vector<ContourResult>(static_cast<size_t>(lmax)));
  if (c == 0) return out;
  bool extrapolated = false;
  const Table full = log_value(kmax, lmax, eta1, eta2, c, gamma, spec.nodes, spec, extrapolated);
  const Table half = log_value(kmax, lmax, eta1, eta2, c, gamma, spec.nodes / 2, spec, extrapolated);
  for (size_t k = 0; k < out.size(); ++k) {
    for (size_t l = 0; l < out[k].size(); ++l) {
      auto& r = out[k][l];
      r.value = full[k][l];
      r.estimate = std::abs(full[k][l] - half[k][l]);
      r.converged = r.estimate <= spec.tolerance * std::max(1.0, std::abs(r.value));
      r.extrapolated = extrapolated;
    }
  }
  return out;
}

ContourResult cov_p_contour_log(int k, int l, double eta1, double eta2, double c, double gamma,
                                const ContourSpec& spec) {
  return cov_p_contour_log_table(k, l, eta1, eta2, c, gamma, spec)[static_cast<size_t>(k - 1)][static_cast<size_t>(l - 1)];
}

// ---- rational kernel ----------------------------------------------------

RationalContourResult cov_p_contour_rational(int k, int l, double eta1, double eta2, double c, double gamma,
                                             const ContourSpec& spec) {
  check_contour_args(k, l, eta1, eta2, c, gamma, spec);
  if (eta1 > eta2) {
    std::swap(eta1, eta2);
    std::swap(k, l);
  }
  RationalContourResult res;
  res.oracle = cov_p_series<double>(k, l, eta1, eta2, c, gamma);
  if (c == 0) {
    // the c/eta1 prefactor vanishes identically
    res.agrees = std::abs(res.oracle) <= 1e-6;
    return res;
  }
  const double r1 = std::sqrt(eta1 / gamma);
  double r2 = std::sqrt(eta2 / gamma);
  // the double pole sits at w = c z / eta1; keep it strictly inside the w circle
  const double pole = c * r1 / eta1;
  if (eta1 == eta2 || pole * std::sqrt(1.0 + spec.rational_offset) > r2) {
    r2 = std::max(r2, pole * std::sqrt(1.0 + spec.rational_offset));
  }
  const int m = spec.nodes;
  auto x_of = [gamma](cplx u, double eta) { return -eta / u - gamma * (u - 1.0); };
  std::vector<cplx> z(static_cast<size_t>(m)), w(static_cast<size_t>(m)), fz(z.size()), fw(w.size());
  for (int i = 0; i < m; ++i) {
    const double th = 2.0 * kPi * i / m;
    z[static_cast<size_t>(i)] = std::polar(r1, th);
    w[static_cast<size_t>(i)] = std::polar(r2, th);
    fz[static_cast<size_t>(i)] = std::pow(x_of(z[static_cast<size_t>(i)], eta1), k) * z[static_cast<size_t>(i)];
    fw[static_cast<size_t>(i)] = std::pow(x_of(w[static_cast<size_t>(i)], eta2), l) * w[static_cast<size_t>(i)];
  }
  const double pref = c / eta1;
  cplx total = 0.0;
  for (size_t i = 0; i < z.size(); ++i) {
    cplx row = 0.0;
    const cplx p = pref * z[i];
    for (size_t j = 0; j < w.size(); ++j) {
      const cplx d = p - w[j];
      row += fw[j] / (d * d);
    }
    total += fz[i] * row;
  }
  // dz = i z dtheta on each circle; the 1/(2 pi i) factors leave 1/M^2
  res.value = (pref * total / (static_cast<double>(m) * m)).real();
  res.agrees = std::abs(res.value - res.oracle) <= 1e-6;
  return res;
}

// ---- GFF ----------------------------------------------------------------

double gff_kernel(double alpha, cplx z, cplx w) {
  if (!(z.imag() > 0 && w.imag() > 0)) throw std::invalid_argument("gff_kernel: points must lie in the upper half plane");
  const double num = std::abs(alpha - z * w);
  const double den = std::abs(alpha - z * std::conj(w));
  if (den == 0.0) return std::numeric_limits<double>::infinity();
  return std::log(num / den) / (2.0 * kPi);
}

double gff_green(cplx z, cplx w) {
  if (!(z.imag() > 0 && w.imag() > 0)) throw std::invalid_argument("gff_green: points must lie in the upper half plane");
  if (z == w) throw std::invalid_argument("gff_green: z and w must differ");
  return -std::log(std::abs(z - w) / std::abs(z - std::conj(w))) / (2.0 * kPi);
}

namespace {

double wick_rec(const Eigen::MatrixXd& cov, std::vector<int>& rest) {
  if (rest.empty()) return 1.0;
  const int first = rest.front();
  double total = 0.0;
  for (size_t j = 1; j < rest.size(); ++j) {
    const int partner = rest[j];
    std::vector<int> sub;
    sub.reserve(rest.size() - 2);
    for (size_t t = 1; t < rest.size(); ++t) {
      if (t != j) sub.push_back(rest[t]);
    }
    total += cov(first, partner) * wick_rec(cov, sub);
  }
  return total;
}

}  // namespace

double wick_sum(const Eigen::MatrixXd& cov, const std::vector<int>& indices) {
  for (int i : indices) {
    if (i < 0 || i >= cov.rows() || i >= cov.cols()) throw std::out_of_range("wick_sum: index outside the matrix");
  }
  if (indices.size() % 2 == 1) return 0.0;
  std::vector<int> rest = indices;
  return wick_rec(cov, rest);
}

// ---- regular families ---------------------------------------------------

void RegularFamilySpec::validate() const {
  const auto n = static_cast<Eigen::Index>(etas.size());
  if (!(gamma > 0)) throw std::invalid_argument("regular family: gamma must be positive");
  if (overlaps.rows() != n || overlaps.cols() != n) throw std::invalid_argument("regular family: overlaps must be n x n");
  for (Eigen::Index r = 0; r < n; ++r) {
    if (!(etas[static_cast<size_t>(r)] > 0)) throw std::invalid_argument("regular family: etas must be positive");
    if (std::abs(overlaps(r, r) - etas[static_cast<size_t>(r)]) > 1e-12) {
      throw std::invalid_argument("regular family: c_rr must equal eta_r");
    }
    for (Eigen::Index s = 0; s < n; ++s) {
      const double c = overlaps(r, s);
      if (std::abs(c - overlaps(s, r)) > 1e-12) throw std::invalid_argument("regular family: overlaps must be symmetric");
      if (c < 0 || c > std::min(etas[static_cast<size_t>(r)], etas[static_cast<size_t>(s)]) + 1e-12) {
        throw std::invalid_argument("regular family: need 0 <= c_rs <= min(eta_r, eta_s)");
      }
      if (union_bound && c < etas[static_cast<size_t>(r)] + etas[static_cast<size_t>(s)] - *union_bound - 1e-12) {
        throw std::invalid_argument("regular family: c_rs below eta_r + eta_s - union bound");
      }
    }
  }
}

Eigen::MatrixXd moment_cov_matrix(const RegularFamilySpec& spec, int kmax) {
  spec.validate();
  const auto n = static_cast<Eigen::Index>(spec.etas.size());
  const Eigen::Index dim = n * (kmax + 1);
  Eigen::MatrixXd m(dim, dim);
  for (Eigen::Index a = 0; a < dim; ++a) {
    for (Eigen::Index b = 0; b < dim; ++b) {
      const auto r = a / (kmax + 1), s = b / (kmax + 1);
      const int k = static_cast<int>(a % (kmax + 1)), kp = static_cast<int>(b % (kmax + 1));
      m(a, b) = moment_cov(k, kp, spec.etas[static_cast<size_t>(r)], spec.etas[static_cast<size_t>(s)],
                           spec.overlaps(r, s), spec.gamma);
    }
  }
  return m;
}

Eigen::MatrixXd moment_cov_matrix(const OverlapDensity& alpha, const std::vector<GridPoint>& grid, double gamma) {
  const auto n = static_cast<Eigen::Index>(grid.size());
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index a = 0; a < n; ++a) {
    for (Eigen::Index b = 0; b < n; ++b) {
      const auto& p = grid[static_cast<size_t>(a)];
      const auto& q = grid[static_cast<size_t>(b)];
      m(a, b) = moment_cov(p.k, q.k, p.y, q.y, alpha(p.sequence, p.y, q.sequence, q.y), gamma);
    }
  }
  return m;
}

OverlapDensity example_overlap_density() {
  return [](int i, double x, int j, double y) -> double {
    if (i == j) return std::min(x, y);
    if (i > j) {
      std::swap(i, j);
      std::swap(x, y);
    }
    // all positive integers against the evens or the odds >= 3
    if (i == 1) return std::min(x, 2.0 * y) / 2.0;
    return 0.0;  // evens against odds
  };
}

double min_eigenvalue(const Eigen::MatrixXd& symmetric) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(symmetric, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("min_eigenvalue: eigensolver failed");
  return solver.eigenvalues().minCoeff();
}

}  // namespace gtstate
