#pragma once

// Finite groups as multiplication tables and the Cayley digraphs built on them.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "dsrg/construct.hpp"
#include "dsrg/error.hpp"
#include "dsrg/matrix.hpp"
#include "dsrg/params.hpp"

namespace dsrg {

inline constexpr std::size_t kFullAssociativityCheck = 64;

class GroupTable {
 public:
  /// table[i * order + j] is the index of g_i * g_j. Validates identity, inverses
  /// and, for order <= 64, associativity.
  GroupTable(std::size_t order, std::vector<std::size_t> table, std::vector<std::string> names)
      : n_(order), table_(std::move(table)), names_(std::move(names)) {
    if (n_ == 0) throw input_error("group must be non-empty");
    if (table_.size() != n_ * n_ || names_.size() != n_) throw dimension_error("group table has wrong size");
    for (auto x : table_)
      if (x >= n_) throw input_error("group table entry out of range");
    std::optional<std::size_t> e;
    for (std::size_t i = 0; i < n_ && !e; ++i) {
      bool ok = true;
      for (std::size_t j = 0; j < n_ && ok; ++j) ok = mul(i, j) == j && mul(j, i) == j;
      if (ok) e = i;
    }
    if (!e) throw input_error("group table has no identity");
    identity_ = *e;
    inverse_.assign(n_, n_);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        if (mul(i, j) == identity_) {
          if (inverse_[i] != n_ || mul(j, i) != identity_) throw input_error("group inverses are not unique");
          inverse_[i] = j;
        }
      }
      if (inverse_[i] == n_) throw input_error("element " + names_[i] + " has no inverse");
    }
    if (n_ <= kFullAssociativityCheck) {
      for (std::size_t a = 0; a < n_; ++a)
        for (std::size_t b = 0; b < n_; ++b)
          for (std::size_t c = 0; c < n_; ++c)
            if (mul(mul(a, b), c) != mul(a, mul(b, c))) throw input_error("group table is not associative");
    }
    abelian_ = true;
    for (std::size_t i = 0; i < n_ && abelian_; ++i)
      for (std::size_t j = i + 1; j < n_ && abelian_; ++j) abelian_ = mul(i, j) == mul(j, i);
  }

  std::size_t order() const { return n_; }
  std::size_t mul(std::size_t i, std::size_t j) const { return table_[i * n_ + j]; }
  std::size_t identity() const { return identity_; }
  std::size_t inverse(std::size_t i) const { return inverse_[i]; }
  bool abelian() const { return abelian_; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }

 private:
  std::size_t n_;
  std::vector<std::size_t> table_;
  std::vector<std::string> names_;
  std::size_t identity_ = 0;
  std::vector<std::size_t> inverse_;
  bool abelian_ = false;
};

inline GroupTable cyclic_group(std::size_t n) {
  if (n < 1) throw input_error("cyclic_group: n must be at least 1");
  std::vector<std::size_t> t(n * n);
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) {
    names[i] = std::to_string(i);
    for (std::size_t j = 0; j < n; ++j) t[i * n + j] = (i + j) % n;
  }
  return GroupTable(n, std::move(t), std::move(names));
}

/// Dihedral group of order 2n with b a = a^-1 b. Elements are ordered
/// e, a, ..., a^(n-1), b, ba, ..., ba^(n-1); index i < n is a^i, index n + i is ba^i.
inline GroupTable dihedral_group(std::size_t n) {
  if (n < 3) throw input_error("dihedral_group: n must be at least 3");
  const std::size_t order = 2 * n;
  std::vector<std::size_t> t(order * order);
  std::vector<std::string> names(order);
  for (std::size_t i = 0; i < n; ++i) {
    names[i] = i == 0 ? "e" : (i == 1 ? "a" : "a^" + std::to_string(i));
    names[n + i] = i == 0 ? "b" : (i == 1 ? "ba" : "ba^" + std::to_string(i));
  }
  for (std::size_t x = 0; x < order; ++x) {
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t i = x % n, j = y % n;
      const bool rx = x >= n, ry = y >= n;
      std::size_t r;
      if (!rx && !ry) r = (i + j) % n;              // a^i a^j
      else if (!rx && ry) r = n + (j + n - i) % n;  // a^i b a^j = b a^(j-i)
      else if (rx && !ry) r = n + (i + j) % n;      // b a^i a^j
      else r = (j + n - i) % n;                     // b a^i b a^j = a^(j-i)
      t[x * order + y] = r;
    }
  }
  return GroupTable(order, std::move(t), std::move(names));
}

/// Permutations of {1..n} in lexicographic order of one-line notation, with
/// (p q)(x) = p(q(x)): q acts first.
inline GroupTable symmetric_group(std::size_t n) {
  if (n < 1 || n > 5) throw input_error("symmetric_group: n must be between 1 and 5");
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const std::size_t order = perms.size();
  auto index_of = [&](const std::vector<std::size_t>& q) {
    return static_cast<std::size_t>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<std::size_t> t(order * order);
  std::vector<std::string> names(order);
  for (std::size_t a = 0; a < order; ++a) {
    std::string s;
    for (auto v : perms[a]) s += std::to_string(v + 1);
    names[a] = "[" + s + "]";
    for (std::size_t b = 0; b < order; ++b) {
      std::vector<std::size_t> c(n);
      for (std::size_t x = 0; x < n; ++x) c[x] = perms[a][perms[b][x]];
      t[a * order + b] = index_of(c);
    }
  }
  return GroupTable(order, std::move(t), std::move(names));
}

/// Pairs (g, h) ordered with h varying fastest.
inline GroupTable direct_product(const GroupTable& g, const GroupTable& h) {
  const std::size_t a = g.order(), b = h.order(), order = a * b;
  std::vector<std::size_t> t(order * order);
  std::vector<std::string> names(order);
  for (std::size_t x = 0; x < order; ++x) {
    names[x] = "(" + g.name(x / b) + "," + h.name(x % b) + ")";
    for (std::size_t y = 0; y < order; ++y)
      t[x * order + y] = g.mul(x / b, y / b) * b + h.mul(x % b, y % b);
  }
  return GroupTable(order, std::move(t), std::move(names));
}

/// Index of the element with the given name, if any.
inline std::optional<std::size_t> find_element(const GroupTable& g, const std::string& name) {
  for (std::size_t i = 0; i < g.order(); ++i)
    if (g.name(i) == name) return i;
  return std::nullopt;
}

struct CayleySpec {
  CayleySpec(GroupTable g, std::vector<std::size_t> connection) : group(std::move(g)), conn(std::move(connection)) {
    std::sort(conn.begin(), conn.end());
    if (std::adjacent_find(conn.begin(), conn.end()) != conn.end()) throw input_error("connection set repeats an element");
    for (auto s : conn) {
      if (s >= group.order()) throw input_error("connection set element out of range");
      if (s == group.identity()) throw input_error("connection set contains the identity");
    }
  }

  GroupTable group;
  std::vector<std::size_t> conn;
};

/// Edge x -> y iff x s = y for some s in the connection set.
inline BinMatrix cayley_graph(const CayleySpec& spec) {
  const GroupTable& g = spec.group;
  BinMatrix a(g.order());
  for (std::size_t x = 0; x < g.order(); ++x)
    for (auto s : spec.conn) a.set(x, g.mul(x, s));
  return a;
}

/// Parameters read off the products s1 s2 (s1, s2 in S): the identity count is
/// t, the common count over S is lambda, the common count over G - S - {e} is mu.
/// Nothing if either count varies.
inline std::optional<DsrgParams> cayley_criteria(const CayleySpec& spec) {
  const GroupTable& g = spec.group;
  std::vector<std::int64_t> count(g.order(), 0);
  for (auto a : spec.conn)
    for (auto b : spec.conn) ++count[g.mul(a, b)];
  std::vector<bool> in_s(g.order(), false);
  for (auto s : spec.conn) in_s[s] = true;
  std::optional<std::int64_t> lambda, mu;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (x == g.identity()) continue;
    auto& slot = in_s[x] ? lambda : mu;
    if (!slot) slot = count[x];
    else if (*slot != count[x]) return std::nullopt;
  }
  return DsrgParams{static_cast<std::int64_t>(g.order()), static_cast<std::int64_t>(spec.conn.size()),
                    count[g.identity()], lambda.value_or(0), mu.value_or(0)};
}

enum class Parity { even, odd };

/// The commonly quoted odd-case tuple (4lam+2, 2lam+1, lam, lam-1, lam) fails
/// k(k + mu - lambda) = t + (n-1) mu; see hobart_shaw.
inline DsrgParams hobart_shaw_quoted_odd(std::int64_t lam) { return {4 * lam + 2, 2 * lam + 1, lam, lam - 1, lam}; }

/// Cayley digraphs on the dihedral group:
///   even, n = 2 lam:     S = {a, ..., a^(lam-1), b, ..., ba^(lam-1)}, DSRG(4lam, 2lam-1, lam, lam-1, lam-1)
///   odd,  n = 2 lam + 1: S = {a, ..., a^lam, b, ..., ba^lam},         DSRG(4lam+2, 2lam+1, lam+1, lam, lam+1)
/// In the odd case the lam + 1 reflections in S are involutions, so t >= lam + 1.
inline ConstructionResult hobart_shaw(std::size_t lam, Parity parity) {
  if (lam < 1) throw input_error("hobart_shaw: lambda must be at least 1");
  const auto l = static_cast<std::int64_t>(lam);
  const DsrgParams expected = parity == Parity::even ? DsrgParams{4 * l, 2 * l - 1, l, l - 1, l - 1}
                                                     : DsrgParams{4 * l + 2, 2 * l + 1, l + 1, l, l + 1};
  if (!expected.genuine()) {
    throw construction_error("hobart_shaw: parameters (" + expected.str() + ") are not genuine (need 0 < t < k)");
  }
  const std::size_t n = parity == Parity::even ? 2 * lam : 2 * lam + 1;
  const std::size_t top = parity == Parity::even ? lam - 1 : lam;
  std::vector<std::size_t> s;
  for (std::size_t i = 1; i <= top; ++i) s.push_back(i);
  for (std::size_t i = 0; i <= top; ++i) s.push_back(n + i);
  CayleySpec spec(dihedral_group(n), s);
  return detail::finish(Method::hobart_shaw,
                        "lambda=" + std::to_string(lam) + (parity == Parity::even ? ",even" : ",odd"),
                        cayley_graph(spec), expected);
}

inline constexpr std::size_t kDefaultCayleyScanBound = 16;

struct CayleyHit {
  std::vector<std::size_t> conn;
  DsrgParams params;
};

/// Subsets of G - {e} whose Cayley digraph is a genuine DSRG, in order of the
/// bitmask over non-identity elements, stopping after max_results hits.
inline std::vector<CayleyHit> cayley_subset_scan(const GroupTable& g, std::size_t max_results,
                                                 std::size_t bound = kDefaultCayleyScanBound) {
  if (g.order() > bound)
    throw bound_error("cayley_subset_scan: group order " + std::to_string(g.order()) + " exceeds bound " +
                      std::to_string(bound));
  std::vector<std::size_t> others;
  for (std::size_t x = 0; x < g.order(); ++x)
    if (x != g.identity()) others.push_back(x);
  std::vector<CayleyHit> out;
  const std::uint64_t limit = std::uint64_t{1} << others.size();
  for (std::uint64_t mask = 1; mask < limit && out.size() < max_results; ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t b = 0; b < others.size(); ++b)
      if ((mask >> b) & 1u) s.push_back(others[b]);
    CayleySpec spec(g, s);
    auto p = cayley_criteria(spec);
    if (p && p->genuine()) out.push_back(CayleyHit{spec.conn, *p});
  }
  return out;
}

}  // namespace dsrg
