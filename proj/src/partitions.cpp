#include "gtstate/partitions.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>

namespace gtstate {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::transpose() const {
  std::vector<int> t;
  if (parts_.empty()) return Partition{};
  t.resize(static_cast<size_t>(parts_.front()), 0);
  for (int p : parts_) {
    for (int j = 0; j < p; ++j) ++t[static_cast<size_t>(j)];
  }
  return Partition(std::move(t));
}

Signature::Signature(std::vector<int> coords) : coords_(std::move(coords)) {
  for (size_t i = 1; i < coords_.size(); ++i) {
    if (coords_[i] > coords_[i - 1]) {
      throw std::invalid_argument("signature coordinates must be weakly decreasing");
    }
  }
}

Signature Signature::from_partition(const Partition& p, int n) {
  if (p.length() > n) throw std::invalid_argument("partition has more rows than the signature length");
  std::vector<int> c(static_cast<size_t>(n), 0);
  std::copy(p.parts().begin(), p.parts().end(), c.begin());
  return Signature(std::move(c));
}

bool Signature::is_nonnegative() const {
  return coords_.empty() || coords_.back() >= 0;
}

Partition Signature::to_partition() const {
  if (!is_nonnegative()) {
    throw std::invalid_argument("signature with negative coordinates is not a Young diagram");
  }
  return Partition(coords_);
}

std::vector<double> FrobeniusCoords::a() const {
  std::vector<double> out;
  for (int v : a_twice) out.push_back(v / 2.0);
  return out;
}

std::vector<double> FrobeniusCoords::b() const {
  std::vector<double> out;
  for (int v : b_twice) out.push_back(v / 2.0);
  return out;
}

FrobeniusCoords frobenius(const Partition& mu) {
  FrobeniusCoords f;
  const Partition t = mu.transpose();
  for (int i = 1; i <= mu.length() && mu[i - 1] >= i; ++i) {
    f.a_twice.push_back(2 * (mu[i - 1] - i) + 1);
    f.b_twice.push_back(2 * (t[i - 1] - i) + 1);
    ++f.d;
  }
  return f;
}

BigInt dim_sym(const Partition& lambda) {
  const Partition t = lambda.transpose();
  BigInt hooks = 1;
  for (int i = 0; i < lambda.length(); ++i) {
    for (int j = 0; j < lambda[i]; ++j) {
      hooks *= (lambda[i] - j - 1) + (t[j] - i - 1) + 1;
    }
  }
  return factorial(static_cast<unsigned>(lambda.size())) / hooks;
}

BigInt dim_un(const Signature& lambda) {
  BigInt num = 1;
  BigInt den = 1;
  const int n = lambda.length();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      num *= (lambda[i] - i) - (lambda[j] - j);
      den *= j - i;
    }
  }
  return num / den;
}

namespace {

// Murnaghan-Nakayama on beta-sets. `beta` is strictly decreasing, nonnegative.
using MnKey = std::pair<std::vector<int>, std::vector<int>>;

BigInt mn_recurse(const std::vector<int>& beta, const std::vector<int>& rho, size_t pos,
                  std::map<MnKey, BigInt>& memo) {
  if (pos == rho.size()) return 1;
  MnKey key{beta, std::vector<int>(rho.begin() + static_cast<long>(pos), rho.end())};
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  const int r = rho[pos];
  BigInt total = 0;
  for (size_t i = 0; i < beta.size(); ++i) {
    const int target = beta[i] - r;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    // beads strictly between target and beta[i] give the leg length
    int between = 0;
    for (int b : beta) {
      if (b > target && b < beta[i]) ++between;
    }
    std::vector<int> next = beta;
    next[i] = target;
    std::sort(next.begin(), next.end(), std::greater<>());
    BigInt sub = mn_recurse(next, rho, pos + 1, memo);
    total += (between % 2 == 0) ? sub : BigInt(-sub);
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

BigInt char_sym(const Partition& lambda, const Partition& rho) {
  if (lambda.size() != rho.size()) {
    throw std::invalid_argument("char_sym: |lambda| must equal |rho|");
  }
  thread_local std::map<MnKey, BigInt> memo;
  const int l = lambda.length();
  std::vector<int> beta(static_cast<size_t>(l));
  for (int i = 0; i < l; ++i) beta[static_cast<size_t>(i)] = lambda[i] + (l - 1 - i);
  return mn_recurse(beta, rho.parts(), 0, memo);
}

bool interlaces(const Signature& mu, const Signature& lambda) {
  if (mu.length() != lambda.length() - 1) {
    throw std::invalid_argument("interlaces: length(mu) must be length(lambda) - 1");
  }
  for (int i = 0; i < mu.length(); ++i) {
    if (!(lambda[i] >= mu[i] && mu[i] >= lambda[i + 1])) return false;
  }
  return true;
}

namespace {

BigInt count_paths_rec(const std::vector<int>& lam, std::map<std::vector<int>, BigInt>& memo) {
  if (lam.size() <= 1) return 1;
  if (auto it = memo.find(lam); it != memo.end()) return it->second;
  const size_t m = lam.size() - 1;
  std::vector<int> mu(m);
  BigInt total = 0;
  // odometer over lam[i+1] <= mu[i] <= lam[i]
  for (size_t i = 0; i < m; ++i) mu[i] = lam[i + 1];
  while (true) {
    total += count_paths_rec(mu, memo);
    size_t i = 0;
    while (i < m && mu[i] == lam[i]) {
      mu[i] = lam[i + 1];
      ++i;
    }
    if (i == m) break;
    ++mu[i];
  }
  memo.emplace(lam, total);
  return total;
}

void partitions_rec(int remaining, int max_part, int max_rows, std::vector<int>& cur,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (static_cast<int>(cur.size()) == max_rows) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, max_rows, cur, out);
    cur.pop_back();
  }
}

}  // namespace

BigInt count_paths(const Signature& lambda) {
  std::map<std::vector<int>, BigInt> memo;
  return count_paths_rec(lambda.coords(), memo);
}

std::vector<Partition> partitions_of(int n, int max_rows) {
  std::vector<Partition> out;
  std::vector<int> cur;
  if (n < 0) return out;
  partitions_rec(n, n, max_rows, cur, out);
  return out;
}

std::vector<Partition> partitions_of(int n) { return partitions_of(n, std::max(n, 0)); }

BigInt class_size(const Partition& rho) {
  BigInt z = 1;
  std::map<int, int> mult;
  for (int p : rho.parts()) {
    z *= p;
    ++mult[p];
  }
  for (auto [part, m] : mult) z *= factorial(static_cast<unsigned>(m));
  return factorial(static_cast<unsigned>(rho.size())) / z;
}

std::string format_partition(const Partition& p) {
  std::string out;
  for (int i = 0; i < p.length(); ++i) {
    if (i) out += ',';
    out += std::to_string(p[i]);
  }
  return out;
}

Partition parse_partition(std::string_view text) {
  std::vector<int> parts;
  if (text.empty()) return Partition{};
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    auto tok = text.substr(pos, comma - pos);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size() || v <= 0) {
      throw std::invalid_argument("malformed partition: '" + std::string(text) + "'");
    }
    parts.push_back(v);
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

}  // namespace gtstate
