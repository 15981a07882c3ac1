#pragma once

// Exact state calculus on the Weyl algebra C[x_ij, d_ij] for the one-sided
// Plancherel character exp(gamma L sum (x_ii - 1)).
//
// A state is a polynomial in the formal parameter L with exact rational
// coefficients; gamma is a fixed rational carried along with the polynomial.
// Every diagonal derivative that survives normal ordering contributes one
// factor gamma*L, every off-diagonal letter that survives kills the term.

#include "gtstate/partitions.hpp"
#include "gtstate/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gtstate {

enum class LetterKind : std::uint8_t { X, D };

struct Generator {
  LetterKind kind = LetterKind::X;
  int row = 1;
  int col = 1;

  bool diagonal() const { return row == col; }
  auto operator<=>(const Generator&) const = default;
};

inline Generator xgen(int row, int col) { return {LetterKind::X, row, col}; }
inline Generator dgen(int row, int col) { return {LetterKind::D, row, col}; }

using WeylWord = std::vector<Generator>;

/// Parses "x(1,2) d(2,3) x(2,3)"; the empty string is the identity word.
WeylWord parse_word(std::string_view text);
std::string format_word(const WeylWord& w);

/// x^xexp d^dexp with every X letter left of every D letter.
struct NormalMonomial {
  using IndexPair = std::pair<int, int>;
  std::map<IndexPair, int> xexp;
  std::map<IndexPair, int> dexp;

  auto operator<=>(const NormalMonomial&) const = default;
};

using NormalForm = std::map<NormalMonomial, BigInt>;

class StatePolynomial {
 public:
  StatePolynomial() = default;
  explicit StatePolynomial(Rational gamma) : gamma_(std::move(gamma)) {}
  StatePolynomial(Rational gamma, std::map<int, Rational> coefficients);

  static StatePolynomial constant(const Rational& gamma, const Rational& c);
  /// sum_d counts[d] (gamma L)^d
  static StatePolynomial from_gamma_l_powers(const Rational& gamma, const std::vector<BigInt>& counts);

  const Rational& gamma() const { return gamma_; }
  const std::map<int, Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(int degree) const;

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }

  Rational evaluate(const Rational& l) const;
  double evaluate(double l) const;

  StatePolynomial& operator+=(const StatePolynomial& o);
  StatePolynomial& operator-=(const StatePolynomial& o);
  StatePolynomial& operator*=(const Rational& s);
  friend StatePolynomial operator+(StatePolynomial a, const StatePolynomial& b) { return a += b; }
  friend StatePolynomial operator-(StatePolynomial a, const StatePolynomial& b) { return a -= b; }
  friend StatePolynomial operator*(const StatePolynomial& a, const StatePolynomial& b);
  friend StatePolynomial operator*(StatePolynomial a, const Rational& s) { return a *= s; }
  friend bool operator==(const StatePolynomial& a, const StatePolynomial& b) {
    return a.gamma_ == b.gamma_ && a.coeffs_ == b.coeffs_;
  }

  /// "3/2*L^2 + L", or "0".
  std::string to_string() const;

 private:
  void check_gamma(const StatePolynomial& o) const;
  void prune();

  Rational gamma_ = 1;
  std::map<int, Rational> coeffs_;
};

/// Formal linear combination of words with StatePolynomial coefficients.
struct CentralElement {
  struct Descriptor {
    Partition rho;
    std::vector<int> index_set;
    std::vector<int> ambient;
  };

  std::map<WeylWord, StatePolynomial> terms;
  std::optional<Descriptor> descriptor;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EngineOptions {
  /// Hard cap on expanded term combinations (naive) or equality patterns
  /// (compressed). Exceeding it throws BudgetExceeded.
  std::uint64_t term_budget = 200'000'000;
  unsigned threads = 1;
};

// ---- normal ordering and evaluation -------------------------------------

NormalForm normal_order(const WeylWord& w);

/// (gamma L)^(sum of diagonal d exponents) when nothing off-diagonal remains,
/// zero otherwise.
StatePolynomial state_of_normal(const NormalMonomial& m, const Rational& gamma);

/// State of a single word via normal_order + state_of_normal.
StatePolynomial state_of_word(const WeylWord& w, const Rational& gamma);

/// Integer coefficients c_d of (gamma L)^d in the state of w, evaluated letter
/// class by letter class through contraction counting. Independent of
/// normal_order; used on the hot paths.
std::vector<BigInt> word_state_counts(const WeylWord& w);

// ---- central elements ---------------------------------------------------

/// Cycle structure rho laid out as consecutive cycles (a, a+1, ..., a+len-1),
/// returned as the 0-based image s(t) of each position t.
std::vector<int> canonical_permutation(const Partition& rho);

/// D_J(p#_{rho,I}). Throws std::invalid_argument unless I is a subset of J.
CentralElement build_psharp_element(const Partition& rho, const std::vector<int>& index_set,
                                    const std::vector<int>& ambient);

CentralElement identity_element(const Rational& gamma);

StatePolynomial state(const CentralElement& e, const Rational& gamma);

/// e - <e> * 1
CentralElement center(const CentralElement& e, const Rational& gamma);

/// Exact state of the ordered product e_1 e_2 ... e_m by full term expansion.
StatePolynomial state_of_product(const std::vector<CentralElement>& es, const Rational& gamma,
                                 const EngineOptions& opts = {});

// ---- compressed products of p# elements ---------------------------------

struct PsharpFactor {
  Partition rho;
  std::vector<int> index_set;
  bool centered = false;
};

/// Same value as state_of_product over build_psharp_element(...) factors
/// (centered where requested), computed by summing over equality patterns of
/// the index variables and counting the assignments realizing each pattern.
StatePolynomial state_of_psharp_product(const std::vector<PsharpFactor>& factors,
                                        const std::vector<int>& ambient, const Rational& gamma,
                                        const EngineOptions& opts = {});

/// Naive counterpart of state_of_psharp_product: builds the elements and
/// expands every term.
StatePolynomial state_of_psharp_product_naive(const std::vector<PsharpFactor>& factors,
                                              const std::vector<int>& ambient,
                                              const Rational& gamma, const EngineOptions& opts = {});

// ---- monomial statistics ------------------------------------------------

struct MonomialStats {
  std::set<int> supp;
  int cov = 0;
  std::optional<int> deg;  // unset when x-degree != d-degree
  int x_degree = 0;
  int d_degree = 0;
  int cap = 0;
  bool x_regular = false;
  bool d_regular = false;
  bool regular = false;
};

MonomialStats graph_stats(const WeylWord& w);

/// The cycle monomial x_{a1 i1}..x_{ak ik} d_{a1 i_s(1)}..d_{ak i_s(k)} for a
/// permutation s given as 0-based images.
WeylWord cycle_monomial(const std::vector<int>& alphas, const std::vector<int>& is,
                        const std::vector<int>& perm);

}  // namespace gtstate
