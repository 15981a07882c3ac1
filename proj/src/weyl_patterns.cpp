// Products of p# elements by equality patterns.
//
// A term of D_J(p#_{rho_1,I_1}) ... D_J(p#_{rho_m,I_m}) is fixed by the values
// of its index variables: k_j row variables ranging over J and k_j column
// variables ranging over I_j for each factor. The state of a word only sees
// which variables are equal, so we enumerate set partitions of the variables
// once, evaluate one representative word per partition and multiply by the
// number of injective value assignments to its blocks. Value domains are
// unions of Venn atoms of (I_1, ..., I_m) inside J, which is all the counting
// needs.

#include "gtstate/weyl.hpp"

#include <algorithm>
#include <future>

namespace gtstate {

namespace {

using AtomMask = std::uint32_t;

struct Variable {
  AtomMask domain = 0;
};

struct PatternProblem {
  std::vector<long> atom_sizes;
  std::vector<Variable> vars;
  // letters refer to variables: x(row_var, col_var) ..., d(row_var, col_var) ...
  struct Letter {
    LetterKind kind;
    int row_var;
    int col_var;
  };
  std::vector<Letter> letters;
};

class AssignmentCounter {
 public:
  explicit AssignmentCounter(const std::vector<long>& atom_sizes) : sizes_(atom_sizes) {}

  // Injective maps from blocks to values, block b landing inside masks[b].
  BigInt count(std::vector<AtomMask> masks) {
    std::sort(masks.begin(), masks.end());
    if (auto it = memo_.find(masks); it != memo_.end()) return it->second;
    std::vector<long> used(sizes_.size(), 0);
    BigInt total = rec(masks, 0, used);
    memo_.emplace(std::move(masks), total);
    return total;
  }

 private:
  BigInt rec(const std::vector<AtomMask>& masks, size_t b, std::vector<long>& used) {
    if (b == masks.size()) return 1;
    BigInt total = 0;
    for (size_t a = 0; a < sizes_.size(); ++a) {
      if (!(masks[b] & (AtomMask{1} << a))) continue;
      const long free = sizes_[a] - used[a];
      if (free <= 0) continue;
      ++used[a];
      BigInt sub = rec(masks, b + 1, used);
      --used[a];
      if (sub != 0) total += sub * free;
    }
    return total;
  }

  std::vector<long> sizes_;
  std::map<std::vector<AtomMask>, BigInt> memo_;
};

// Sum over set partitions of the variables of (word state) x (assignments),
// as integer coefficients of (gamma L)^d.
std::vector<BigInt> pattern_sum(const PatternProblem& p, std::uint64_t budget) {
  const size_t n = p.vars.size();
  std::vector<BigInt> total;
  if (n == 0) return {BigInt(1)};

  AssignmentCounter counter(p.atom_sizes);
  std::vector<int> block_of(n, -1);
  std::vector<AtomMask> block_mask;
  std::uint64_t visited = 0;
  WeylWord word(p.letters.size());

  auto leaf = [&] {
    if (++visited > budget) {
      throw BudgetExceeded("state_of_psharp_product: pattern count exceeds the budget of " +
                           std::to_string(budget));
    }
    for (size_t t = 0; t < p.letters.size(); ++t) {
      const auto& l = p.letters[t];
      word[t] = {l.kind, block_of[static_cast<size_t>(l.row_var)] + 1,
                 block_of[static_cast<size_t>(l.col_var)] + 1};
    }
    const auto counts = word_state_counts(word);
    if (counts.empty()) return;
    const BigInt ways = counter.count(block_mask);
    if (ways == 0) return;
    if (total.size() < counts.size()) total.resize(counts.size());
    for (size_t d = 0; d < counts.size(); ++d) total[d] += counts[d] * ways;
  };

  auto rec = [&](auto&& self, size_t v) -> void {
    if (v == n) {
      leaf();
      return;
    }
    const AtomMask dom = p.vars[v].domain;
    for (size_t b = 0; b < block_mask.size(); ++b) {
      const AtomMask merged = block_mask[b] & dom;
      if (!merged) continue;
      const AtomMask saved = block_mask[b];
      block_mask[b] = merged;
      block_of[v] = static_cast<int>(b);
      self(self, v + 1);
      block_mask[b] = saved;
    }
    block_mask.push_back(dom);
    block_of[v] = static_cast<int>(block_mask.size() - 1);
    self(self, v + 1);
    block_mask.pop_back();
  };
  rec(rec, 0);
  while (!total.empty() && total.back() == 0) total.pop_back();
  return total;
}

struct VennAtoms {
  std::vector<long> sizes;
  std::vector<AtomMask> member_of;  // per factor: atoms inside I_j
  AtomMask all = 0;
};

VennAtoms venn_atoms(const std::vector<PsharpFactor>& factors, const std::vector<int>& ambient) {
  std::vector<int> jset = ambient;
  std::sort(jset.begin(), jset.end());
  jset.erase(std::unique(jset.begin(), jset.end()), jset.end());

  std::vector<std::vector<int>> isets;
  for (const auto& f : factors) {
    std::vector<int> s = f.index_set;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (!std::includes(jset.begin(), jset.end(), s.begin(), s.end())) {
      throw std::invalid_argument("state_of_psharp_product: every I must be a subset of J");
    }
    isets.push_back(std::move(s));
  }
  if (factors.size() > 20) throw std::invalid_argument("state_of_psharp_product: too many factors");

  std::map<std::uint32_t, long> by_signature;
  for (int v : jset) {
    std::uint32_t sig = 0;
    for (size_t j = 0; j < isets.size(); ++j) {
      if (std::binary_search(isets[j].begin(), isets[j].end(), v)) sig |= 1u << j;
    }
    ++by_signature[sig];
  }
  if (by_signature.size() > 32) throw std::invalid_argument("state_of_psharp_product: too many Venn atoms");

  VennAtoms atoms;
  atoms.member_of.assign(factors.size(), 0);
  for (const auto& [sig, size] : by_signature) {
    const size_t a = atoms.sizes.size();
    atoms.sizes.push_back(size);
    atoms.all |= AtomMask{1} << a;
    for (size_t j = 0; j < factors.size(); ++j) {
      if (sig & (1u << j)) atoms.member_of[j] |= AtomMask{1} << a;
    }
  }
  return atoms;
}

// <a_{j_1} a_{j_2} ...> for the listed factors, uncentered, in order.
std::vector<BigInt> uncentered_counts(const std::vector<PsharpFactor>& factors,
                                      const std::vector<size_t>& chosen, const VennAtoms& atoms,
                                      std::uint64_t budget) {
  PatternProblem p;
  p.atom_sizes = atoms.sizes;
  for (size_t j : chosen) {
    const auto perm = canonical_permutation(factors[j].rho);
    const int k = static_cast<int>(perm.size());
    const int base = static_cast<int>(p.vars.size());
    // row variables base..base+k-1 over J, column variables base+k.. over I_j
    for (int t = 0; t < k; ++t) p.vars.push_back({atoms.all});
    for (int t = 0; t < k; ++t) p.vars.push_back({atoms.member_of[j]});
    if (atoms.member_of[j] == 0) return {};
    for (int t = 0; t < k; ++t) p.letters.push_back({LetterKind::X, base + t, base + k + t});
    for (int t = 0; t < k; ++t) {
      p.letters.push_back({LetterKind::D, base + t, base + k + perm[static_cast<size_t>(t)]});
    }
  }
  return pattern_sum(p, budget);
}

}  // namespace

StatePolynomial state_of_psharp_product(const std::vector<PsharpFactor>& factors,
                                        const std::vector<int>& ambient, const Rational& gamma,
                                        const EngineOptions& opts) {
  for (const auto& f : factors) {
    if (f.rho.size() < 1) throw std::invalid_argument("state_of_psharp_product: |rho| must be positive");
  }
  const VennAtoms atoms = venn_atoms(factors, ambient);
  const size_t m = factors.size();

  std::vector<size_t> centered;
  for (size_t j = 0; j < m; ++j) {
    if (factors[j].centered) centered.push_back(j);
  }
  if (centered.size() > 16) throw std::invalid_argument("state_of_psharp_product: too many centered factors");

  // means: |I_j|^{l(rho)} (gamma L)^{|rho|}
  auto mean_of = [&](size_t j) {
    std::set<int> s(factors[j].index_set.begin(), factors[j].index_set.end());
    const Rational coeff = rational_pow(Rational(static_cast<long>(s.size())),
                                        static_cast<unsigned>(factors[j].rho.length())) *
                           rational_pow(gamma, static_cast<unsigned>(factors[j].rho.size()));
    return StatePolynomial(gamma, {{factors[j].rho.size(), coeff}});
  };

  auto subset_term = [&](std::uint32_t mask) {
    // mask selects centered factors replaced by -mean
    StatePolynomial coeff = StatePolynomial::constant(gamma, 1);
    std::vector<size_t> rest;
    size_t c = 0;
    for (size_t j = 0; j < m; ++j) {
      if (c < centered.size() && centered[c] == j) {
        const bool replaced = mask & (1u << c);
        ++c;
        if (replaced) {
          coeff = coeff * mean_of(j) * Rational(-1);
          continue;
        }
      }
      rest.push_back(j);
    }
    const auto counts = uncentered_counts(factors, rest, atoms, opts.term_budget);
    return coeff * StatePolynomial::from_gamma_l_powers(gamma, counts);
  };

  const std::uint32_t subsets = 1u << centered.size();
  StatePolynomial total(gamma);
  if (opts.threads <= 1 || subsets == 1) {
    for (std::uint32_t mask = 0; mask < subsets; ++mask) total += subset_term(mask);
    return total;
  }
  std::vector<std::future<StatePolynomial>> parts;
  const unsigned threads = std::min<unsigned>(opts.threads, subsets);
  for (unsigned t = 0; t < threads; ++t) {
    parts.push_back(std::async(std::launch::async, [&, t] {
      StatePolynomial acc(gamma);
      for (std::uint32_t mask = t; mask < subsets; mask += threads) acc += subset_term(mask);
      return acc;
    }));
  }
  for (auto& f : parts) total += f.get();
  return total;
}

StatePolynomial state_of_psharp_product_naive(const std::vector<PsharpFactor>& factors,
                                              const std::vector<int>& ambient,
                                              const Rational& gamma, const EngineOptions& opts) {
  std::vector<CentralElement> es;
  for (const auto& f : factors) {
    CentralElement e = build_psharp_element(f.rho, f.index_set, ambient);
    es.push_back(f.centered ? center(e, gamma) : std::move(e));
  }
  return state_of_product(es, gamma, opts);
}

}  // namespace gtstate
