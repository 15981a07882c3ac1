#pragma once

// Schur-Weyl and poissonized Plancherel measures, RSK sampling, height
// functions and the moment statistics built on them.

#include "gtstate/partitions.hpp"
#include "gtstate/rational.hpp"

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace gtstate {

struct PlancherelParams {
  Rational gamma = 1;
  int L = 1;
};

/// Row-insertion tableau; rows weakly increasing, columns strictly.
using Tableau = std::vector<std::vector<int>>;

Tableau rsk_insertion_tableau(const std::vector<int>& word);
Partition rsk_shape(const std::vector<int>& word);

/// Shape of the entries <= m, as a signature of length m. For a uniform word
/// these shapes form the Gelfand-Tsetlin levels 1..N.
Signature tableau_level(const Tableau& p, int m);

/// dim(lambda) Dim_N(lambda) / N^n, or 0 unless lambda has n boxes and <= N rows.
Rational pmf_schur_weyl(const Partition& lambda, int n, int N);

/// e^{-gamma L^2} (gamma L)^{|lambda|} / |lambda|! dim(lambda) Dim_L(lambda).
double pmf_plancherel(const Partition& lambda, const PlancherelParams& p);

struct SampleRecord {
  std::uint64_t master_seed = 0;
  std::uint64_t index = 0;  // (master_seed, index) replays the word
  long n_letters = 0;
  Partition shape;
  Tableau tableau;

  Signature level(int m) const { return tableau_level(tableau, m); }
};

/// Generator for sample `index` of a run seeded with `master_seed`.
std::mt19937_64 sample_stream(std::uint64_t master_seed, std::uint64_t index);

/// n ~ Poisson(gamma L^2), uniform word in {1..L}^n, RSK.
SampleRecord sample_plancherel(const PlancherelParams& p, std::uint64_t master_seed,
                               std::uint64_t index);

/// Samples 0..count-1 of a run; identical for any thread count.
std::vector<SampleRecord> sample_plancherel_many(const PlancherelParams& p, std::uint64_t master_seed,
                                                 std::size_t count, unsigned threads = 1);

/// sqrt(pi) * #{i : lambda_i - i + 1/2 >= x}
double height_value(const Signature& lambda, double x);

/// H(Lx, Ly) of a sample: the level [yL] signature read at Lx.
double height_at(const SampleRecord& s, double x, double y, int L);

/// Statistics of M = L^{-(k+1)} sqrt(pi)/(k+1) (p_{k+1} - mean p_{k+1}) over
/// samples, centered by the sample mean.
struct MomentStats {
  double raw_mean = 0.0;       // sample mean of p_{k+1}
  double raw_mean_se = 0.0;    // its standard error
  double variance = 0.0;       // unbiased sample variance of M
  double variance_se = 0.0;    // standard error of that variance (fourth moment)
  std::size_t count = 0;
};

MomentStats empirical_moment(const std::vector<SampleRecord>& samples, int k, int L);

/// Mean, unbiased variance and standard errors of a plain data column.
MomentStats column_stats(const std::vector<double>& values);

/// Largest violation of M_N(lambda) = sum_{nu > lambda} M_{N+1}(nu) Dim_N(lambda)/Dim_{N+1}(nu)
/// over |lambda| <= cutoff, with M_N the restriction of exp(gamma L sum(u_i - 1)).
double coherency_residual(double gamma, double L, int N, int cutoff);

/// Smallest n with P(Poisson(mu) > n) <= tail.
int poisson_cutoff(double mu, double tail);

struct ExtremeCharacterParams {
  std::vector<double> alpha_plus, alpha_minus, beta_plus, beta_minus;
  double gamma_plus = 0.0;
  double gamma_minus = 0.0;
};

/// prod over eigenvalues of f_0(u). Throws std::domain_error at a pole.
std::complex<double> extreme_character_eval(const ExtremeCharacterParams& w,
                                            const std::vector<std::complex<double>>& eigenvalues);

}  // namespace gtstate
