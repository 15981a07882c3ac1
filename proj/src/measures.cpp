#include "gtstate/measures.hpp"

#include "gtstate/shifted_symmetric.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>
#include <stdexcept>

namespace gtstate {

Tableau rsk_insertion_tableau(const std::vector<int>& word) {
  Tableau p;
  for (int letter : word) {
    int carry = letter;
    size_t r = 0;
    for (; r < p.size(); ++r) {
      auto& row = p[r];
      auto it = std::upper_bound(row.begin(), row.end(), carry);
      if (it == row.end()) {
        row.push_back(carry);
        break;
      }
      std::swap(*it, carry);
    }
    if (r == p.size()) p.push_back({carry});
  }
  return p;
}

Partition rsk_shape(const std::vector<int>& word) {
  std::vector<int> parts;
  for (const auto& row : rsk_insertion_tableau(word)) parts.push_back(static_cast<int>(row.size()));
  return Partition(std::move(parts));
}

Signature tableau_level(const Tableau& p, int m) {
  std::vector<int> coords(static_cast<size_t>(std::max(m, 0)), 0);
  for (size_t r = 0; r < p.size() && r < coords.size(); ++r) {
    coords[r] = static_cast<int>(std::upper_bound(p[r].begin(), p[r].end(), m) - p[r].begin());
  }
  return Signature(std::move(coords));
}

Rational pmf_schur_weyl(const Partition& lambda, int n, int N) {
  if (lambda.size() != n || lambda.length() > N || N < 1) return 0;
  BigInt denom = 1;
  for (int i = 0; i < n; ++i) denom *= N;
  return Rational(dim_sym(lambda) * dim_un(lambda, N), denom);
}

namespace {

double log_big(const BigInt& v) {
  // cpp_int -> double overflows only far beyond any size sampled here
  return std::log(v.convert_to<double>());
}

double log_m_n(double gl, int N, const Partition& lambda) {
  const int n = lambda.size();
  return -gl * N + n * std::log(gl) - std::lgamma(n + 1.0) + log_big(dim_sym(lambda)) +
         log_big(dim_un(lambda, N));
}

}  // namespace

double pmf_plancherel(const Partition& lambda, const PlancherelParams& p) {
  if (p.L < 1 || p.gamma <= 0) throw std::invalid_argument("pmf_plancherel: need gamma > 0, L >= 1");
  if (lambda.length() > p.L) return 0.0;
  const double gl = to_double(p.gamma) * p.L;
  if (lambda.empty()) return std::exp(-gl * p.L);
  return std::exp(log_m_n(gl, p.L, lambda));
}

std::mt19937_64 sample_stream(std::uint64_t master_seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(master_seed), static_cast<std::uint32_t>(master_seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

SampleRecord sample_plancherel(const PlancherelParams& p, std::uint64_t master_seed, std::uint64_t index) {
  if (p.L < 1 || p.gamma < 0) throw std::invalid_argument("sample_plancherel: need gamma >= 0, L >= 1");
  SampleRecord s;
  s.master_seed = master_seed;
  s.index = index;
  const double mean = to_double(p.gamma) * p.L * p.L;
  if (mean == 0.0) return s;
  auto rng = sample_stream(master_seed, index);
  s.n_letters = std::poisson_distribution<long>(mean)(rng);
  std::uniform_int_distribution<int> letter(1, p.L);
  std::vector<int> word(static_cast<size_t>(s.n_letters));
  for (auto& w : word) w = letter(rng);
  s.tableau = rsk_insertion_tableau(word);
  std::vector<int> parts;
  for (const auto& row : s.tableau) parts.push_back(static_cast<int>(row.size()));
  s.shape = Partition(std::move(parts));
  return s;
}

std::vector<SampleRecord> sample_plancherel_many(const PlancherelParams& p, std::uint64_t master_seed,
                                                 std::size_t count, unsigned threads) {
  std::vector<SampleRecord> out(count);
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  auto work = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) out[i] = sample_plancherel(p, master_seed, i);
  };
  if (threads == 1) {
    work(0, count);
    return out;
  }
  std::vector<std::future<void>> jobs;
  for (unsigned t = 0; t < threads; ++t) {
    jobs.push_back(std::async(std::launch::async, work, count * t / threads, count * (t + 1) / threads));
  }
  for (auto& j : jobs) j.get();
  return out;
}

double height_value(const Signature& lambda, double x) {
  int count = 0;
  for (int i = 1; i <= lambda.length(); ++i) {
    if (lambda[i - 1] - i + 0.5 >= x) ++count;
  }
  return std::sqrt(std::numbers::pi) * count;
}

double height_at(const SampleRecord& s, double x, double y, int L) {
  const int level = static_cast<int>(std::floor(y * L));
  if (level < 1) return 0.0;
  return height_value(s.level(level), L * x);
}

MomentStats column_stats(const std::vector<double>& values) {
  const std::size_t n = values.size();
  if (n < 2) throw std::invalid_argument("need at least two samples");
  MomentStats st;
  st.count = n;
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(n);
  double m2 = 0.0;
  double m4 = 0.0;
  for (double v : values) {
    const double d = (v - mean) * (v - mean);
    m2 += d;
    m4 += d * d;
  }
  const double var = m2 / static_cast<double>(n - 1);
  m4 /= static_cast<double>(n);
  st.raw_mean = mean;
  st.raw_mean_se = std::sqrt(var / static_cast<double>(n));
  st.variance = var;
  st.variance_se = std::sqrt(std::max(0.0, m4 - var * var) / static_cast<double>(n));
  return st;
}

MomentStats empirical_moment(const std::vector<SampleRecord>& samples, int k, int L) {
  if (samples.size() < 2) throw std::invalid_argument("empirical_moment: need at least two samples");
  if (k < 0 || L < 1) throw std::invalid_argument("empirical_moment: need k >= 0, L >= 1");
  std::vector<double> raw;
  raw.reserve(samples.size());
  for (const auto& s : samples) {
    raw.push_back(to_double(p_shifted_sum(k + 1, Signature::from_partition(s.shape, std::max(L, s.shape.length())))));
  }
  const MomentStats rs = column_stats(raw);
  const double scale = std::sqrt(std::numbers::pi) / ((k + 1) * std::pow(static_cast<double>(L), k + 1));
  std::vector<double> m;
  m.reserve(raw.size());
  for (double v : raw) m.push_back(scale * (v - rs.raw_mean));
  MomentStats st = column_stats(m);
  st.raw_mean = rs.raw_mean;
  st.raw_mean_se = rs.raw_mean_se;
  return st;
}

int poisson_cutoff(double mu, double tail) {
  if (mu <= 0) return 0;
  // walk the pmf upward until the remaining mass is below `tail`
  double log_p = -mu;
  double cdf = std::exp(log_p);
  int n = 0;
  while (1.0 - cdf > tail || n < mu) {
    ++n;
    log_p += std::log(mu) - std::log(static_cast<double>(n));
    cdf += std::exp(log_p);
    if (n > 100000) break;
    // guard against cdf rounding: bound the rest by a geometric tail once past the mode
    if (n > mu) {
      const double ratio = mu / (n + 1.0);
      if (std::exp(log_p) * ratio / (1.0 - ratio) <= tail) break;
    }
  }
  return n;
}

double coherency_residual(double gamma, double L, int N, int cutoff) {
  if (N < 1 || N + 1 > L) throw std::invalid_argument("coherency_residual: need 1 <= N and N + 1 <= L");
  const double gl = gamma * L;
  // |nu| ranges over enough extra boxes that the dropped mass is negligible
  const int nu_max = std::max(cutoff, poisson_cutoff(gl * (N + 1), 1e-17)) + 1;
  double worst = 0.0;
  for (int n = 0; n <= cutoff; ++n) {
    for (const Partition& lambda : partitions_of(n, N)) {
      const double lhs = std::exp(log_m_n(gl, N, lambda));
      const double log_dim_l = log_big(dim_un(lambda, N));
      double rhs = 0.0;
      // nu_1 >= lambda_1 >= nu_2 >= ... >= lambda_N >= nu_{N+1} >= 0
      std::vector<int> nu(static_cast<size_t>(N + 1));
      std::vector<int> lo(static_cast<size_t>(N + 1)), hi(static_cast<size_t>(N + 1));
      for (int i = 1; i <= N; ++i) {
        lo[static_cast<size_t>(i)] = lambda[i];
        hi[static_cast<size_t>(i)] = lambda[i - 1];
      }
      int tail_sum = 0;
      for (int i = 1; i <= N; ++i) {
        nu[static_cast<size_t>(i)] = lo[static_cast<size_t>(i)];
        tail_sum += nu[static_cast<size_t>(i)];
      }
      while (true) {
        for (int first = lambda[0]; first + tail_sum <= nu_max; ++first) {
          nu[0] = first;
          const Partition p(nu);
          rhs += std::exp(log_m_n(gl, N + 1, p) + log_dim_l - log_big(dim_un(p, N + 1)));
        }
        int i = 1;
        while (i <= N && nu[static_cast<size_t>(i)] == hi[static_cast<size_t>(i)]) {
          tail_sum -= nu[static_cast<size_t>(i)] - lo[static_cast<size_t>(i)];
          nu[static_cast<size_t>(i)] = lo[static_cast<size_t>(i)];
          ++i;
        }
        if (i > N) break;
        ++nu[static_cast<size_t>(i)];
        ++tail_sum;
      }
      worst = std::max(worst, std::abs(lhs - rhs));
    }
  }
  return worst;
}

namespace {

void check_sequence(const std::vector<double>& v, const char* name) {
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 0 || (i > 0 && v[i] > v[i - 1])) {
      throw std::invalid_argument(std::string("extreme character: ") + name +
                                  " must be nonnegative and weakly decreasing");
    }
  }
}

}  // namespace

std::complex<double> extreme_character_eval(const ExtremeCharacterParams& w,
                                            const std::vector<std::complex<double>>& eigenvalues) {
  check_sequence(w.alpha_plus, "alpha+");
  check_sequence(w.alpha_minus, "alpha-");
  check_sequence(w.beta_plus, "beta+");
  check_sequence(w.beta_minus, "beta-");
  if (w.gamma_plus < 0 || w.gamma_minus < 0) throw std::invalid_argument("extreme character: gamma must be nonnegative");
  const double b1 = (w.beta_plus.empty() ? 0.0 : w.beta_plus[0]) + (w.beta_minus.empty() ? 0.0 : w.beta_minus[0]);
  if (b1 > 1.0) throw std::invalid_argument("extreme character: beta1+ + beta1- must be at most 1");

  std::complex<double> total = 1.0;
  for (const auto& u : eigenvalues) {
    if (std::abs(std::abs(u) - 1.0) > 1e-12) throw std::invalid_argument("extreme character: eigenvalues must have modulus 1");
    const std::complex<double> ui = 1.0 / u;
    std::complex<double> f = std::exp(w.gamma_plus * (u - 1.0) + w.gamma_minus * (ui - 1.0));
    for (double b : w.beta_plus) f *= 1.0 + b * (u - 1.0);
    for (double b : w.beta_minus) f *= 1.0 + b * (ui - 1.0);
    for (double a : w.alpha_plus) {
      const std::complex<double> d = 1.0 - a * (u - 1.0);
      if (std::abs(d) < 1e-14) throw std::domain_error("extreme character: pole at alpha+ (u - 1) = 1");
      f /= d;
    }
    for (double a : w.alpha_minus) {
      const std::complex<double> d = 1.0 - a * (ui - 1.0);
      if (std::abs(d) < 1e-14) throw std::domain_error("extreme character: pole at alpha- (1/u - 1) = 1");
      f /= d;
    }
    total *= f;
  }
  return total;
}

}  // namespace gtstate
