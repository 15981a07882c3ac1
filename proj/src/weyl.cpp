#include "gtstate/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <future>
#include <sstream>

namespace gtstate {

// ---- words --------------------------------------------------------------

WeylWord parse_word(std::string_view text) {
  WeylWord w;
  size_t pos = 0;
  auto fail = [&] { throw std::invalid_argument("malformed word: '" + std::string(text) + "'"); };
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_int = [&]() {
    skip_ws();
    int v = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), v);
    if (ec != std::errc() || v < 1) fail();
    pos = static_cast<size_t>(ptr - text.data());
    skip_ws();
    return v;
  };
  skip_ws();
  while (pos < text.size()) {
    const char c = text[pos];
    LetterKind kind;
    if (c == 'x' || c == 'X') {
      kind = LetterKind::X;
    } else if (c == 'd' || c == 'D') {
      kind = LetterKind::D;
    } else {
      fail();
    }
    ++pos;
    skip_ws();
    if (pos >= text.size() || text[pos] != '(') fail();
    ++pos;
    const int row = read_int();
    if (pos >= text.size() || text[pos] != ',') fail();
    ++pos;
    const int col = read_int();
    if (pos >= text.size() || text[pos] != ')') fail();
    ++pos;
    w.push_back({kind, row, col});
    skip_ws();
  }
  return w;
}

std::string format_word(const WeylWord& w) {
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += (w[i].kind == LetterKind::X ? "x(" : "d(");
    out += std::to_string(w[i].row) + "," + std::to_string(w[i].col) + ")";
  }
  return out;
}

// ---- StatePolynomial ----------------------------------------------------

StatePolynomial::StatePolynomial(Rational gamma, std::map<int, Rational> coefficients)
    : gamma_(std::move(gamma)), coeffs_(std::move(coefficients)) {
  prune();
}

StatePolynomial StatePolynomial::constant(const Rational& gamma, const Rational& c) {
  return StatePolynomial(gamma, {{0, c}});
}

StatePolynomial StatePolynomial::from_gamma_l_powers(const Rational& gamma,
                                                     const std::vector<BigInt>& counts) {
  std::map<int, Rational> coeffs;
  Rational gpow = 1;
  for (size_t d = 0; d < counts.size(); ++d) {
    if (counts[d] != 0) coeffs[static_cast<int>(d)] = Rational(counts[d]) * gpow;
    gpow *= gamma;
  }
  return StatePolynomial(gamma, std::move(coeffs));
}

Rational StatePolynomial::coefficient(int degree) const {
  auto it = coeffs_.find(degree);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

Rational StatePolynomial::evaluate(const Rational& l) const {
  Rational total = 0;
  for (const auto& [d, c] : coeffs_) total += c * rational_pow(l, static_cast<unsigned>(d));
  return total;
}

double StatePolynomial::evaluate(double l) const {
  double total = 0.0;
  for (const auto& [d, c] : coeffs_) total += to_double(c) * std::pow(l, d);
  return total;
}

void StatePolynomial::check_gamma(const StatePolynomial& o) const {
  if (gamma_ != o.gamma_) throw std::invalid_argument("StatePolynomial: gamma mismatch");
}

void StatePolynomial::prune() {
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    it = (it->second == 0) ? coeffs_.erase(it) : std::next(it);
  }
}

StatePolynomial& StatePolynomial::operator+=(const StatePolynomial& o) {
  check_gamma(o);
  for (const auto& [d, c] : o.coeffs_) coeffs_[d] += c;
  prune();
  return *this;
}

StatePolynomial& StatePolynomial::operator-=(const StatePolynomial& o) {
  check_gamma(o);
  for (const auto& [d, c] : o.coeffs_) coeffs_[d] -= c;
  prune();
  return *this;
}

StatePolynomial& StatePolynomial::operator*=(const Rational& s) {
  for (auto& [d, c] : coeffs_) c *= s;
  prune();
  return *this;
}

StatePolynomial operator*(const StatePolynomial& a, const StatePolynomial& b) {
  a.check_gamma(b);
  std::map<int, Rational> out;
  for (const auto& [da, ca] : a.coeffs_) {
    for (const auto& [db, cb] : b.coeffs_) out[da + db] += ca * cb;
  }
  return StatePolynomial(a.gamma_, std::move(out));
}

std::string StatePolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const auto& [d, c] = *it;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (d == 0) {
      os << gtstate::to_string(mag);
      continue;
    }
    if (mag != 1) os << gtstate::to_string(mag) << "*";
    os << "L";
    if (d > 1) os << "^" << d;
  }
  return os.str();
}

// ---- normal ordering ----------------------------------------------------

NormalForm normal_order(const WeylWord& w) {
  NormalForm cur;
  cur.emplace(NormalMonomial{}, BigInt(1));
  for (const Generator& g : w) {
    NormalForm next;
    const NormalMonomial::IndexPair key{g.row, g.col};
    for (const auto& [m, c] : cur) {
      if (g.kind == LetterKind::D) {
        NormalMonomial m2 = m;
        ++m2.dexp[key];
        next[m2] += c;
        continue;
      }
      // (x^a d^b) x_kl = x^(a+e_kl) d^b + b_kl x^a d^(b-e_kl)
      NormalMonomial moved = m;
      ++moved.xexp[key];
      next[moved] += c;
      auto it = m.dexp.find(key);
      if (it != m.dexp.end()) {
        NormalMonomial contracted = m;
        const int b = it->second;
        if (b == 1) {
          contracted.dexp.erase(key);
        } else {
          --contracted.dexp[key];
        }
        next[contracted] += c * b;
      }
    }
    cur = std::move(next);
  }
  return cur;
}

StatePolynomial state_of_normal(const NormalMonomial& m, const Rational& gamma) {
  int diag = 0;
  for (const auto& [ij, e] : m.xexp) {
    if (ij.first != ij.second && e > 0) return StatePolynomial(gamma);
  }
  for (const auto& [ij, e] : m.dexp) {
    if (ij.first != ij.second && e > 0) return StatePolynomial(gamma);
    diag += e;
  }
  return StatePolynomial(gamma, {{diag, rational_pow(gamma, static_cast<unsigned>(diag))}});
}

StatePolynomial state_of_word(const WeylWord& w, const Rational& gamma) {
  StatePolynomial total(gamma);
  for (const auto& [m, c] : normal_order(w)) total += state_of_normal(m, gamma) * Rational(c);
  return total;
}

std::vector<BigInt> word_state_counts(const WeylWord& w) {
  // Contractions only pair a derivative with a later x of the same index
  // pair, so the state factorizes over index pairs.
  std::map<std::pair<int, int>, std::vector<LetterKind>> groups;
  for (const Generator& g : w) groups[{g.row, g.col}].push_back(g.kind);

  std::vector<BigInt> result{1};
  for (const auto& [ij, letters] : groups) {
    if (ij.first != ij.second) {
      // every letter must be contracted
      BigInt ways = 1;
      long avail = 0;
      for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
        if (*it == LetterKind::X) {
          ++avail;
        } else {
          if (avail == 0) return {};
          ways *= avail;
          --avail;
        }
      }
      if (avail != 0) return {};
      for (auto& c : result) c *= ways;
      continue;
    }
    // diagonal: dp[avail] is a polynomial in t = gamma L
    std::vector<std::vector<BigInt>> dp{{BigInt(1)}};
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
      if (*it == LetterKind::X) {
        dp.insert(dp.begin(), std::vector<BigInt>{});
        continue;
      }
      std::vector<std::vector<BigInt>> nd(dp.size());
      for (size_t a = 0; a < dp.size(); ++a) {
        const auto& p = dp[a];
        if (p.empty()) continue;
        auto& keep = nd[a];
        if (keep.size() < p.size() + 1) keep.resize(p.size() + 1);
        for (size_t d = 0; d < p.size(); ++d) keep[d + 1] += p[d];
        if (a > 0) {
          auto& used = nd[a - 1];
          if (used.size() < p.size()) used.resize(p.size());
          for (size_t d = 0; d < p.size(); ++d) used[d] += p[d] * static_cast<long>(a);
        }
      }
      dp = std::move(nd);
    }
    std::vector<BigInt> group_poly;
    for (const auto& p : dp) {
      if (group_poly.size() < p.size()) group_poly.resize(p.size());
      for (size_t d = 0; d < p.size(); ++d) group_poly[d] += p[d];
    }
    std::vector<BigInt> prod(result.size() + group_poly.size() - 1);
    for (size_t i = 0; i < result.size(); ++i) {
      if (result[i] == 0) continue;
      for (size_t j = 0; j < group_poly.size(); ++j) prod[i + j] += result[i] * group_poly[j];
    }
    result = std::move(prod);
  }
  while (!result.empty() && result.back() == 0) result.pop_back();
  return result;
}

// ---- central elements ---------------------------------------------------

std::vector<int> canonical_permutation(const Partition& rho) {
  std::vector<int> s;
  int start = 0;
  for (int len : rho.parts()) {
    for (int t = 0; t < len; ++t) s.push_back(start + (t + 1) % len);
    start += len;
  }
  return s;
}

namespace {

std::vector<int> as_sorted_set(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  for (int i : v) {
    if (i < 1) throw std::invalid_argument("index sets hold positive integers");
  }
  return v;
}

}  // namespace

WeylWord cycle_monomial(const std::vector<int>& alphas, const std::vector<int>& is,
                        const std::vector<int>& perm) {
  const size_t k = alphas.size();
  WeylWord w;
  w.reserve(2 * k);
  for (size_t t = 0; t < k; ++t) w.push_back(xgen(alphas[t], is[t]));
  for (size_t t = 0; t < k; ++t) w.push_back(dgen(alphas[t], is[static_cast<size_t>(perm[t])]));
  return w;
}

CentralElement build_psharp_element(const Partition& rho, const std::vector<int>& index_set,
                                    const std::vector<int>& ambient) {
  const auto iset = as_sorted_set(index_set);
  const auto jset = as_sorted_set(ambient);
  if (!std::includes(jset.begin(), jset.end(), iset.begin(), iset.end())) {
    throw std::invalid_argument("build_psharp_element: I must be a subset of J");
  }
  if (rho.size() < 1) throw std::invalid_argument("build_psharp_element: |rho| must be positive");

  CentralElement e;
  e.descriptor = CentralElement::Descriptor{rho, iset, jset};
  if (iset.empty()) return e;

  const auto perm = canonical_permutation(rho);
  const size_t k = perm.size();
  std::vector<size_t> ipos(k, 0), apos(k, 0);
  std::vector<int> is(k), alphas(k);
  const StatePolynomial one = StatePolynomial::constant(1, 1);
  while (true) {
    for (size_t t = 0; t < k; ++t) {
      is[t] = iset[ipos[t]];
      alphas[t] = jset[apos[t]];
    }
    e.terms.emplace(cycle_monomial(alphas, is, perm), one);
    // odometer over (i_1..i_k, alpha_1..alpha_k)
    size_t t = 0;
    for (; t < 2 * k; ++t) {
      auto& digit = t < k ? ipos[t] : apos[t - k];
      const size_t radix = t < k ? iset.size() : jset.size();
      if (++digit < radix) break;
      digit = 0;
    }
    if (t == 2 * k) break;
  }
  return e;
}

CentralElement identity_element(const Rational& gamma) {
  CentralElement e;
  e.terms.emplace(WeylWord{}, StatePolynomial::constant(gamma, 1));
  return e;
}

namespace {

// Coefficients are stored with whatever gamma they were built with; constants
// are gamma-independent, so rebase them before mixing.
StatePolynomial rebase(const StatePolynomial& p, const Rational& gamma) {
  if (p.gamma() == gamma) return p;
  if (p.degree() > 0) throw std::invalid_argument("coefficient polynomial built for another gamma");
  return StatePolynomial(gamma, p.coefficients());
}

}  // namespace

StatePolynomial state(const CentralElement& e, const Rational& gamma) {
  StatePolynomial total(gamma);
  for (const auto& [w, c] : e.terms) total += rebase(c, gamma) * state_of_word(w, gamma);
  return total;
}

CentralElement center(const CentralElement& e, const Rational& gamma) {
  CentralElement out;
  out.descriptor = e.descriptor;
  for (const auto& [w, c] : e.terms) out.terms.emplace(w, rebase(c, gamma));
  const StatePolynomial mean = state(e, gamma);
  auto [it, inserted] = out.terms.try_emplace(WeylWord{}, StatePolynomial(gamma));
  it->second -= mean;
  if (it->second.is_zero()) out.terms.erase(it);
  return out;
}

StatePolynomial state_of_product(const std::vector<CentralElement>& es, const Rational& gamma,
                                 const EngineOptions& opts) {
  if (es.empty()) return StatePolynomial::constant(gamma, 1);
  using Term = std::pair<const WeylWord*, StatePolynomial>;
  std::vector<std::vector<Term>> lists;
  std::uint64_t combos = 1;
  for (const auto& e : es) {
    if (e.terms.empty()) return StatePolynomial(gamma);
    std::vector<Term> list;
    for (const auto& [w, c] : e.terms) list.emplace_back(&w, rebase(c, gamma));
    if (combos > opts.term_budget / list.size() + 1) {
      throw BudgetExceeded("state_of_product: term expansion exceeds the budget of " +
                           std::to_string(opts.term_budget));
    }
    combos *= list.size();
    lists.push_back(std::move(list));
  }
  if (combos > opts.term_budget) {
    throw BudgetExceeded("state_of_product: " + std::to_string(combos) +
                         " term combinations exceed the budget of " + std::to_string(opts.term_budget));
  }

  const size_t m = lists.size();
  // Expand all combinations whose first factor index lies in [lo, hi).
  auto worker = [&](size_t lo, size_t hi) {
    StatePolynomial acc(gamma);
    std::vector<BigInt> unit_counts;  // combos whose coefficients are all 1
    std::vector<size_t> idx(m, 0);
    idx[0] = lo;
    if (lo >= hi) return acc;
    WeylWord word;
    while (true) {
      word.clear();
      bool unit = true;
      for (size_t j = 0; j < m; ++j) {
        const auto& t = lists[j][idx[j]];
        word.insert(word.end(), t.first->begin(), t.first->end());
        const auto& cs = t.second.coefficients();
        if (!(cs.size() == 1 && cs.begin()->first == 0 && cs.begin()->second == 1)) unit = false;
      }
      const StatePolynomial ws = state_of_word(word, gamma);
      if (!ws.is_zero()) {
        if (unit) {
          acc += ws;
        } else {
          StatePolynomial coeff = lists[0][idx[0]].second;
          for (size_t j = 1; j < m; ++j) coeff = coeff * lists[j][idx[j]].second;
          acc += coeff * ws;
        }
      }
      size_t j = m;
      while (j-- > 0) {
        const size_t limit = (j == 0) ? hi : lists[j].size();
        if (++idx[j] < limit) break;
        if (j == 0) return acc;
        idx[j] = 0;
      }
    }
  };

  const size_t n0 = lists[0].size();
  const unsigned threads = std::max(1u, std::min<unsigned>(opts.threads, static_cast<unsigned>(n0)));
  if (threads == 1) return worker(0, n0);
  std::vector<std::future<StatePolynomial>> parts;
  for (unsigned t = 0; t < threads; ++t) {
    const size_t lo = n0 * t / threads;
    const size_t hi = n0 * (t + 1) / threads;
    parts.push_back(std::async(std::launch::async, worker, lo, hi));
  }
  StatePolynomial total(gamma);
  for (auto& f : parts) total += f.get();
  return total;
}

// ---- monomial statistics ------------------------------------------------

MonomialStats graph_stats(const WeylWord& w) {
  MonomialStats s;
  for (const Generator& g : w) {
    s.supp.insert(g.row);
    s.supp.insert(g.col);
    if (g.kind == LetterKind::X) {
      ++s.x_degree;
    } else {
      ++s.d_degree;
      if (g.diagonal()) ++s.cap;
    }
  }
  s.cov = static_cast<int>(s.supp.size());
  if (s.x_degree == s.d_degree) s.deg = s.x_degree;

  s.d_regular = true;
  s.x_regular = true;
  for (size_t p = 0; p < w.size(); ++p) {
    const Generator& g = w[p];
    if (g.diagonal()) continue;
    int xs = 0;
    int ds = 0;
    if (g.kind == LetterKind::D) {
      for (size_t q = p + 1; q < w.size(); ++q) {
        if (w[q].row != g.row || w[q].col != g.col) continue;
        (w[q].kind == LetterKind::X ? xs : ds)++;
      }
      if (!(xs > ds)) s.d_regular = false;
    } else {
      for (size_t q = 0; q < p; ++q) {
        if (w[q].row != g.row || w[q].col != g.col) continue;
        (w[q].kind == LetterKind::X ? xs : ds)++;
      }
      if (!(ds > xs)) s.x_regular = false;
    }
  }
  s.regular = s.x_regular && s.d_regular;
  return s;
}

}  // namespace gtstate
