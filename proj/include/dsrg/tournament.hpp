#pragma once

// Tournaments and team tournaments: the inputs consumed by the block
// constructions.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dsrg/error.hpp"
#include "dsrg/iso.hpp"
#include "dsrg/matrix.hpp"

namespace dsrg {

/// An adjacency matrix certified to satisfy A + A^T = J - I.
class Tournament {
 public:
  const BinMatrix& adj() const { return adj_; }
  std::size_t order() const { return adj_.order(); }
  /// Common out-degree, present iff the tournament is regular.
  std::optional<std::size_t> valency() const { return valency_; }
  bool regular() const { return valency_.has_value(); }
  /// Valency of every out-neighbourhood, present iff doubly regular.
  std::optional<std::size_t> doubly_regular_lambda() const { return drt_lambda_; }

 private:
  friend Tournament check_tournament(const BinMatrix& a);
  Tournament(BinMatrix a, std::optional<std::size_t> k, std::optional<std::size_t> l)
      : adj_(std::move(a)), valency_(k), drt_lambda_(l) {}

  BinMatrix adj_;
  std::optional<std::size_t> valency_;
  std::optional<std::size_t> drt_lambda_;
};

namespace detail {
// Out-degree common to every vertex of the subgraph induced on out-neighbours,
// for every vertex; nothing if it varies or the tournament is not regular.
inline std::optional<std::size_t> out_neighbourhood_valency(const BinMatrix& a) {
  const std::size_t n = a.order();
  if (n % 4 != 3) return std::nullopt;
  std::optional<std::size_t> common;
  for (std::size_t x = 0; x < n; ++x) {
    const auto nb = a.support(x);
    for (std::size_t y : nb) {
      std::size_t d = 0;
      for (std::size_t z : nb) d += a(y, z);
      if (!common) common = d;
      else if (*common != d) return std::nullopt;
    }
  }
  return common;
}
}  // namespace detail

/// Certifies A + A^T = J - I; records the valency when row sums are constant.
///
/// Throws construction_error naming the first offending pair otherwise.
inline Tournament check_tournament(const BinMatrix& a) {
  const std::size_t n = a.order();
  for (std::size_t i = 0; i < n; ++i) {
    if (a(i, i)) throw construction_error("not a tournament: loop at vertex " + std::to_string(i));
    for (std::size_t j = i + 1; j < n; ++j) {
      if (a(i, j) == a(j, i)) {
        throw construction_error("not a tournament: pair (" + std::to_string(i) + "," +
                                 std::to_string(j) + ") has " + (a(i, j) ? "both" : "neither") +
                                 " directions");
      }
    }
  }
  std::optional<std::size_t> k = n ? std::optional<std::size_t>(a.row_sum(0)) : std::nullopt;
  for (std::size_t i = 0; i < n && k; ++i)
    if (a.row_sum(i) != *k) k.reset();
  std::optional<std::size_t> lambda;
  if (k) lambda = detail::out_neighbourhood_valency(a);
  return Tournament(a, k, lambda);
}

inline bool is_tournament(const BinMatrix& a) {
  for (std::size_t i = 0; i < a.order(); ++i) {
    if (a(i, i)) return false;
    for (std::size_t j = i + 1; j < a.order(); ++j)
      if (a(i, j) == a(j, i)) return false;
  }
  return true;
}

/// lambda_T if t is regular and every out-neighbourhood spans a regular
/// tournament of valency lambda_T (then n = 4 lambda_T + 3).
inline std::optional<std::size_t> is_doubly_regular_tournament(const Tournament& t) {
  if (!t.regular()) return std::nullopt;
  return detail::out_neighbourhood_valency(t.adj());
}

/// Sum of powers e of the n-cycle matrix over e in conn.
///
/// conn must hold exactly one of r, -r for every nonzero residue r mod n.
inline Tournament circulant_tournament(std::size_t n, const std::vector<long long>& conn) {
  if (n == 0 || n % 2 == 0) throw input_error("circulant tournament order must be odd");
  const auto nn = static_cast<long long>(n);
  std::vector<int> side(n, 0);
  for (long long e : conn) {
    const long long r = ((e % nn) + nn) % nn;
    if (r == 0) throw input_error("connection set contains 0");
    if (side[static_cast<std::size_t>(r)] != 0)
      throw input_error("connection set repeats residue " + std::to_string(r));
    const auto neg = static_cast<std::size_t>((nn - r) % nn);
    if (side[neg] == 1)
      throw input_error("connection set contains both " + std::to_string(r) + " and its negative " +
                        std::to_string(neg));
    side[static_cast<std::size_t>(r)] = 1;
    side[neg] = -1;
  }
  for (std::size_t r = 1; r < n; ++r) {
    if (side[r] == 0)
      throw input_error("connection set misses residue " + std::to_string(r) + " and its negative");
  }
  BinMatrix a(n);
  for (long long e : conn) a = sum(a, cycle_power(n, e));
  return check_tournament(a);
}

namespace detail {
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

inline std::vector<long long> quadratic_residues(long long q) {
  std::set<long long> r;
  for (long long x = 1; x < q; ++x) r.insert(x * x % q);
  return {r.begin(), r.end()};
}
}  // namespace detail

/// Circulant tournament whose connection set is the nonzero squares mod a prime
/// q = 3 (mod 4); doubly regular with lambda_T = (q - 3) / 4.
inline Tournament paley_tournament(std::size_t q) {
  if (!detail::is_prime(q) || q % 4 != 3)
    throw input_error("Paley tournament needs a prime q = 3 mod 4, got " + std::to_string(q));
  return circulant_tournament(q, detail::quadratic_residues(static_cast<long long>(q)));
}

enum class Prop1Family { P, P0, Pj };

struct Prop1Matrix {
  std::vector<long long> exponents;
  BinMatrix adj;
  bool valid = false;  // adj is a tournament
};

/// The three circulant exponent sums on Z_n, n = 2k + 1:
///   P  = Pi + Pi^3 + ... + Pi^(2k-1)
///   P0 = Pi^2 + Pi^4 + ... + Pi^(2k)
///   Pj = Pi^j (Pi + ... + Pi^k),  0 <= j <= k
inline Prop1Matrix prop1_matrix(std::size_t n, Prop1Family family, std::size_t j = 0) {
  if (n % 2 == 0 || n < 3) throw input_error("prop1_matrix: n must be odd and at least 3");
  const std::size_t k = (n - 1) / 2;
  Prop1Matrix out;
  switch (family) {
    case Prop1Family::P:
      for (std::size_t e = 1; e <= 2 * k - 1; e += 2) out.exponents.push_back(static_cast<long long>(e));
      break;
    case Prop1Family::P0:
      for (std::size_t e = 2; e <= 2 * k; e += 2) out.exponents.push_back(static_cast<long long>(e));
      break;
    case Prop1Family::Pj:
      if (j > k) throw input_error("prop1_matrix: j must be at most k");
      for (std::size_t e = 1; e <= k; ++e) out.exponents.push_back(static_cast<long long>(j + e));
      break;
  }
  out.adj = BinMatrix(n);
  for (auto e : out.exponents) {
    const BinMatrix p = cycle_power(n, e);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (p(r, c)) out.adj.set(r, c);
  }
  out.valid = is_tournament(out.adj);
  return out;
}

struct EnumerationOptions {
  std::size_t max_order = 9;
};

/// One regular tournament of order n per isomorphism class, each given by its
/// canonical adjacency matrix, sorted by canonical form.
///
/// Vertex 0 is fixed to beat exactly 1..k (every class has such a labeling);
/// the remaining upper-triangle entries are filled row by row under out- and
/// in-degree bounds, and completions are deduplicated by canonical form.
inline std::vector<Tournament> enumerate_regular_tournaments(std::size_t n,
                                                             EnumerationOptions opts = {}) {
  if (n % 2 == 0) throw input_error("regular tournaments have odd order");
  if (n > opts.max_order)
    throw bound_error("enumeration of regular tournaments is limited to order " +
                      std::to_string(opts.max_order));
  const std::size_t k = (n - 1) / 2;
  BinMatrix a(n);
  std::vector<std::size_t> out_deg(n, 0), in_deg(n, 0);
  for (std::size_t j = 1; j < n; ++j) {
    if (j <= k) {
      a.set(0, j);
      ++in_deg[j];
    } else {
      a.set(j, 0);
      ++out_deg[j];
    }
  }
  out_deg[0] = k;
  in_deg[0] = k;

  std::set<BinMatrix> seen;
  // Pairs (i, j), i < j, i >= 1, in row-major order.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

  auto rec = [&](auto&& self, std::size_t idx) -> void {
    if (idx == pairs.size()) {
      seen.insert(canonical_form(a).canonical);
      return;
    }
    const auto [i, j] = pairs[idx];
    // Remaining undecided pairs touching i after this one: those (i, j') with j' > j.
    const std::size_t rest_i = n - 1 - j;
    // i -> j
    if (out_deg[i] < k && in_deg[j] < k) {
      ++out_deg[i];
      ++in_deg[j];
      a.set(i, j);
      if (out_deg[i] + rest_i >= k && in_deg[i] + rest_i >= k) self(self, idx + 1);
      a.set(i, j, false);
      --out_deg[i];
      --in_deg[j];
    }
    // j -> i
    if (out_deg[j] < k && in_deg[i] < k) {
      ++out_deg[j];
      ++in_deg[i];
      a.set(j, i);
      if (out_deg[i] + rest_i >= k && in_deg[i] + rest_i >= k) self(self, idx + 1);
      a.set(j, i, false);
      --out_deg[j];
      --in_deg[i];
    }
  };
  if (n <= 1) {
    seen.insert(canonical_form(a).canonical);
  } else {
    rec(rec, 0);
  }
  std::vector<Tournament> out;
  out.reserve(seen.size());
  for (const auto& m : seen) out.push_back(check_tournament(m));
  return out;
}

/// alpha, beta, gamma are the path-2 counts from x to y when x -> y, y -> x,
/// and x, y are distinct members of one team, respectively. gamma is 0 when
/// teams are singletons.
struct TeamProfile {
  std::int64_t alpha = 0;
  std::int64_t beta = 0;
  std::int64_t gamma = 0;
  std::size_t k = 0;
  std::size_t m = 0;  // number of teams
  std::size_t r = 0;  // team size

  bool operator==(const TeamProfile&) const = default;
};

namespace detail {
// The bordered layout shared by the doubly regular (m,2)-team tournament and
// its generalization to any regular tournament:
//   [ 0  1^T  0  0^T ]
//   [ 0  A    1  A^T ]
//   [ 0  0^T  0  1^T ]
//   [ 1  A^T  0  A   ]
inline BinMatrix bordered_team(const BinMatrix& a) {
  const std::size_t h = a.order();
  const BinMatrix at = transpose(a);
  return block_compose({
      {Fill{1, 1, false}, Fill{1, h, true}, Fill{1, 1, false}, Fill{1, h, false}},
      {Fill{h, 1, false}, a, Fill{h, 1, true}, at},
      {Fill{1, 1, false}, Fill{1, h, false}, Fill{1, 1, false}, Fill{1, h, true}},
      {Fill{h, 1, true}, at, Fill{h, 1, false}, a},
  });
}
}  // namespace detail

/// D(T) for a doubly regular tournament T of order m - 1 = 4 lambda_T + 3:
/// a doubly regular (m, 2)-team tournament on 2m vertices.
inline BinMatrix team_from_drt(const Tournament& t) {
  if (!t.doubly_regular_lambda())
    throw construction_error("team_from_drt: tournament is not doubly regular");
  return detail::bordered_team(t.adj());
}

/// The same bordered layout for any regular tournament of odd order h; the
/// result D satisfies D + D^T = [[J-I, J-I], [J-I, J-I]] in (h+1)-blocks.
inline BinMatrix team_lem6(const Tournament& t) {
  if (!t.regular()) throw construction_error("team_lem6: tournament is not regular");
  return detail::bordered_team(t.adj());
}

/// Profile of a doubly regular (m, r)-team tournament, or nothing.
///
/// Teams are the classes of "x == y or neither x -> y nor y -> x"; the
/// function returns nothing when that is not an equivalence with equal class
/// sizes, when some pair points both ways, when degrees differ from
/// (m-1) r / 2, or when the path-2 counts are not constant per case.
inline std::optional<TeamProfile> is_doubly_regular_team(const BinMatrix& a) {
  const std::size_t n = a.order();
  if (n == 0 || !a.has_zero_diagonal()) return std::nullopt;
  std::vector<std::size_t> team(n, n);
  std::vector<std::size_t> sizes;
  for (std::size_t x = 0; x < n; ++x) {
    if (team[x] != n) continue;
    const std::size_t id = sizes.size();
    sizes.push_back(0);
    for (std::size_t y = x; y < n; ++y) {
      if (y == x || (!a(x, y) && !a(y, x))) {
        if (team[y] != n) return std::nullopt;
        team[y] = id;
        ++sizes[id];
      }
    }
  }
  const std::size_t r = sizes[0];
  const std::size_t m = sizes.size();
  for (std::size_t s : sizes)
    if (s != r) return std::nullopt;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) continue;
      const bool same = team[x] == team[y];
      if (a(x, y) && a(y, x)) return std::nullopt;
      if (same && (a(x, y) || a(y, x))) return std::nullopt;
      if (!same && !a(x, y) && !a(y, x)) return std::nullopt;
    }
  }
  if (((m - 1) * r) % 2 != 0) return std::nullopt;
  const std::size_t k = (m - 1) * r / 2;
  for (std::size_t x = 0; x < n; ++x)
    if (a.row_sum(x) != k || a.col_sum(x) != k) return std::nullopt;

  const IntMatrix sq = mat_mul_count(a, a);
  std::optional<std::int64_t> alpha, beta, gamma;
  auto settle = [](std::optional<std::int64_t>& slot, std::int64_t v) {
    if (!slot) slot = v;
    return *slot == v;
  };
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) continue;
      const std::int64_t v = sq(x, y);
      bool ok = a(x, y) ? settle(alpha, v) : a(y, x) ? settle(beta, v) : settle(gamma, v);
      if (!ok) return std::nullopt;
    }
  }
  return TeamProfile{alpha.value_or(0), beta.value_or(0), gamma.value_or(0), k, m, r};
}

}  // namespace dsrg
