#pragma once

// DSRG constructions. Each returns the adjacency matrix together with the
// parameters obtained by re-verifying it; a mismatch against the parameter
// formula for the method is reported as construction_error.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dsrg/error.hpp"
#include "dsrg/matrix.hpp"
#include "dsrg/params.hpp"
#include "dsrg/tournament.hpp"

namespace dsrg {

enum class Method { duval_B, duval_C, m_of, wide, tall, lem5, lem6, lem7, qr, pq, kron, cayley, hobart_shaw };

inline const char* to_string(Method m) {
  switch (m) {
    case Method::duval_B: return "duval_B";
    case Method::duval_C: return "duval_C";
    case Method::m_of: return "m_of";
    case Method::wide: return "wide";
    case Method::tall: return "tall";
    case Method::lem5: return "lem5";
    case Method::lem6: return "lem6";
    case Method::lem7: return "lem7";
    case Method::qr: return "qr";
    case Method::pq: return "pq";
    case Method::kron: return "kron";
    case Method::cayley: return "cayley";
    case Method::hobart_shaw: return "hobart_shaw";
  }
  return "?";
}

struct ConstructionResult {
  Method method;
  std::string input_descriptor;
  BinMatrix adj;
  DsrgParams params;
};

namespace detail {

inline ConstructionResult finish(Method method, std::string descriptor, BinMatrix adj,
                                 const std::optional<DsrgParams>& expected) {
  const Verification v = verify_dsrg(adj);
  if (!v) {
    throw construction_error(std::string(to_string(method)) + " on " + descriptor +
                             " did not produce a DSRG: " + v.failure().message());
  }
  if (expected && v.params() != *expected) {
    throw construction_error(std::string(to_string(method)) + " on " + descriptor + " gave (" +
                             v.params().str() + "), expected (" + expected->str() + ")");
  }
  return ConstructionResult{method, std::move(descriptor), std::move(adj), v.params()};
}

inline std::int64_t require_regular(const Tournament& t, const char* what) {
  if (!t.regular()) throw construction_error(std::string(what) + ": tournament is not regular");
  const auto k = static_cast<std::int64_t>(*t.valency());
  if (k < 1) throw construction_error(std::string(what) + ": tournament order must be at least 3");
  return k;
}

inline std::string describe(const Tournament& t) {
  return "tournament:" + std::to_string(t.order());
}

}  // namespace detail

/// [[A, A^T], [A, A^T]]: DSRG(4k+2, 2k, k, k-1, k).
inline ConstructionResult duval_B(const Tournament& t) {
  const auto k = detail::require_regular(t, "duval_B");
  const BinMatrix& a = t.adj();
  const BinMatrix at = transpose(a);
  return detail::finish(Method::duval_B, detail::describe(t), block_compose({{a, at}, {a, at}}),
                        DsrgParams{4 * k + 2, 2 * k, k, k - 1, k});
}

/// [[A, A], [A^T, A^T]]: DSRG(4k+2, 2k, k, k-1, k).
inline ConstructionResult duval_C(const Tournament& t) {
  const auto k = detail::require_regular(t, "duval_C");
  const BinMatrix& a = t.adj();
  const BinMatrix at = transpose(a);
  return detail::finish(Method::duval_C, detail::describe(t), block_compose({{a, a}, {at, at}}),
                        DsrgParams{4 * k + 2, 2 * k, k, k - 1, k});
}

/// M(A) = [[A, A^T + I], [A + I, A^T]] for any loopless square A.
inline BinMatrix m_of(const BinMatrix& a) {
  if (!a.has_zero_diagonal()) throw input_error("m_of: matrix has a nonzero diagonal");
  const BinMatrix id = BinMatrix::identity(a.order());
  const BinMatrix at = transpose(a);
  return block_compose({{a, sum(at, id)}, {sum(a, id), at}});
}

/// M(A) for a regular tournament: DSRG(4k+2, 2k+1, k+1, k, k+1), isomorphic to
/// the complement of duval_B(t).
inline ConstructionResult m_construction(const Tournament& t) {
  const auto k = detail::require_regular(t, "m_construction");
  return detail::finish(Method::m_of, detail::describe(t), m_of(t.adj()),
                        DsrgParams{4 * k + 2, 2 * k + 1, k + 1, k, k + 1});
}

/// 2w x 2w grid whose block (i, j) is A for even j and A^T for odd j
/// (equal to J_w (x) duval_B(t)). DSRG((4k+2)w, 2kw, kw, (k-1)w, kw).
inline ConstructionResult wide_blocks(const Tournament& t, std::size_t w) {
  const auto k = detail::require_regular(t, "wide_blocks");
  if (w < 1) throw input_error("wide_blocks: w must be at least 1");
  const BinMatrix at = transpose(t.adj());
  BlockGrid grid(2 * w, std::vector<Block>(2 * w, BinMatrix()));
  for (std::size_t i = 0; i < 2 * w; ++i)
    for (std::size_t j = 0; j < 2 * w; ++j) grid[i][j] = (j % 2 == 0) ? t.adj() : at;
  const auto ww = static_cast<std::int64_t>(w);
  return detail::finish(Method::wide, detail::describe(t) + ",w=" + std::to_string(w),
                        block_compose(grid),
                        DsrgParams{(4 * k + 2) * ww, 2 * k * ww, k * ww, (k - 1) * ww, k * ww});
}

/// The transposed pattern: block (i, j) is A for even i and A^T for odd i.
inline ConstructionResult tall_blocks(const Tournament& t, std::size_t w) {
  const auto k = detail::require_regular(t, "tall_blocks");
  if (w < 1) throw input_error("tall_blocks: w must be at least 1");
  const BinMatrix at = transpose(t.adj());
  BlockGrid grid(2 * w, std::vector<Block>(2 * w, BinMatrix()));
  for (std::size_t i = 0; i < 2 * w; ++i)
    for (std::size_t j = 0; j < 2 * w; ++j) grid[i][j] = (i % 2 == 0) ? t.adj() : at;
  const auto ww = static_cast<std::int64_t>(w);
  return detail::finish(Method::tall, detail::describe(t) + ",w=" + std::to_string(w),
                        block_compose(grid),
                        DsrgParams{(4 * k + 2) * ww, 2 * k * ww, k * ww, (k - 1) * ww, k * ww});
}

/// M(D(T)) for a doubly regular tournament of order 4 lambda_T + 3:
/// DSRG(4m, 2m-1, m, m-1, m-1) with m = 4 lambda_T + 4.
inline ConstructionResult lem5_dsrg(const Tournament& t) {
  const BinMatrix d = team_from_drt(t);
  const auto m = static_cast<std::int64_t>(t.order() + 1);
  return detail::finish(Method::lem5, detail::describe(t), m_of(d),
                        DsrgParams{4 * m, 2 * m - 1, m, m - 1, m - 1});
}

/// M(D(T)) for any regular tournament of odd order h: DSRG(4(h+1), 2h+1, h+1, h, h).
inline ConstructionResult lem6_dsrg(const Tournament& t) {
  const BinMatrix d = team_lem6(t);
  const auto h = static_cast<std::int64_t>(t.order());
  return detail::finish(Method::lem6, detail::describe(t), m_of(d),
                        DsrgParams{4 * (h + 1), 2 * h + 1, h + 1, h, h});
}

/// L = Pi + Pi^2 + ... + Pi^s on 2s + 2 points.
inline BinMatrix lem7_base(std::size_t s) {
  if (s < 1) throw input_error("lem7: s must be at least 1");
  const std::size_t n = 2 * s + 2;
  BinMatrix l(n);
  for (std::size_t e = 1; e <= s; ++e) l = sum(l, cycle_power(n, static_cast<long long>(e)));
  return l;
}

/// M(L): DSRG(4(s+1), 2s+1, s+1, s, s).
inline ConstructionResult lem7_dsrg(std::size_t s) {
  const auto ss = static_cast<std::int64_t>(s);
  return detail::finish(Method::lem7, "s=" + std::to_string(s), m_of(lem7_base(s)),
                        DsrgParams{4 * (ss + 1), 2 * ss + 1, ss + 1, ss, ss});
}

// ---------------------------------------------------------------------------
// Quadratic residue construction over a prime field.

/// Q with Q[i][j] = 1 iff i - j is a nonzero square mod q.
inline BinMatrix residue_matrix(std::size_t q) {
  std::vector<bool> is_square(q, false);
  for (std::size_t x = 1; x < q; ++x) is_square[x * x % q] = true;
  BinMatrix m(q);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j)
      if (i != j && is_square[(i + q - j) % q]) m.set(i, j);
  return m;
}

struct QrTriple {
  long long sigma1;
  long long sigma2;
  std::vector<long long> s_set;

  bool operator==(const QrTriple&) const = default;
};

namespace detail {

inline void require_qr_modulus(long long q) {
  if (q < 5 || !is_prime(static_cast<std::uint64_t>(q)) || q % 4 != 1)
    throw input_error("quadratic residue construction needs a prime q = 1 mod 4, got " +
                      std::to_string(q));
}

inline bool is_nonresidue(long long x, long long q) {
  x = ((x % q) + q) % q;
  if (x == 0) return false;
  for (long long y = 1; y < q; ++y)
    if (y * y % q == x) return false;
  return true;
}

// First element of GF(q)* whose count among the differences s - t differs
// from m, with that count; nothing if the partition property holds.
inline std::optional<std::pair<long long, long long>> difference_defect(
    long long q, const std::vector<bool>& in_s) {
  const long long m = (q - 1) / 4;
  std::vector<long long> count(static_cast<std::size_t>(q), 0);
  for (long long s = 1; s < q; ++s) {
    if (!in_s[static_cast<std::size_t>(s)]) continue;
    for (long long t = 1; t < q; ++t) {
      if (in_s[static_cast<std::size_t>(t)]) continue;
      ++count[static_cast<std::size_t>(((s - t) % q + q) % q)];
    }
  }
  for (long long x = 1; x < q; ++x)
    if (count[static_cast<std::size_t>(x)] != m) return std::make_pair(x, count[static_cast<std::size_t>(x)]);
  return std::nullopt;
}

// Residues 0..q-1 as bits of a word; q < 64.
inline Word rotate_residues(Word mask, long long x, long long q) {
  const Word full = (Word{1} << q) - 1;
  return ((mask << x) | (mask >> (q - x))) & full;
}

// Supports of size 2m inside {1, ..., q-1} with the difference partition
// property, in lexicographic order. The count of x among differences s - t is
// |S & (T + x)|, so each candidate costs one rotate and popcount per x.
inline std::vector<std::vector<long long>> difference_partition_sets(long long q) {
  if (q >= 64) throw bound_error("difference partition search is limited to q < 64");
  const long long m = (q - 1) / 4;
  const long long units = q - 1, half = (q - 1) / 2;
  const Word all_units = ((Word{1} << q) - 1) & ~Word{1};
  std::vector<std::vector<long long>> out;
  // Gosper's hack over (q-1)-bit masks; bit i stands for residue i + 1.
  // Increasing masks visit subsets in colex order; sorted afterwards.
  for (Word c = (Word{1} << half) - 1; c < (Word{1} << units);) {
    const Word s = c << 1;
    const Word t = all_units & ~s;
    bool ok = true;
    for (long long x = 1; x < q && ok; ++x)
      ok = std::popcount(s & rotate_residues(t, x, q)) == m;
    if (ok) {
      std::vector<long long> v;
      for (long long r = 1; r < q; ++r)
        if ((s >> r) & 1u) v.push_back(r);
      out.push_back(std::move(v));
    }
    const Word low = c & (~c + 1);
    const Word ripple = c + low;
    c = (((ripple ^ c) >> 2) / low) | ripple;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

inline constexpr long long kDefaultQrBound = 29;

/// [[Q, C1], [C2, Q]] with C2 the sigma2-circulant whose row 0 has support S
/// and C1 a sigma1-circulant: DSRG(2q, q-1, (q-1)/2, (q-1)/2 - 1, (q-1)/2).
///
/// C1 takes row-0 support S first; if that does not verify and q <= 13, all
/// supports of size (q-1)/2 are tried in lexicographic order.
inline ConstructionResult qr_dsrg(long long q, long long sigma1, long long sigma2,
                                  const std::vector<long long>& s_set) {
  detail::require_qr_modulus(q);
  const long long m = (q - 1) / 4;
  const long long s1 = ((sigma1 % q) + q) % q, s2 = ((sigma2 % q) + q) % q;
  if (s1 * s2 % q != 1)
    throw construction_error("inverse failure: sigma1 * sigma2 = " + std::to_string(s1 * s2 % q) +
                             " (mod " + std::to_string(q) + "), expected 1");
  if (!detail::is_nonresidue(s1, q))
    throw construction_error("non-residue failure: sigma1 = " + std::to_string(s1) + " is a square mod " +
                             std::to_string(q));
  if (!detail::is_nonresidue(s2, q))
    throw construction_error("non-residue failure: sigma2 = " + std::to_string(s2) + " is a square mod " +
                             std::to_string(q));
  std::vector<bool> in_s(static_cast<std::size_t>(q), false);
  for (long long x : s_set) {
    const long long r = ((x % q) + q) % q;
    if (r == 0) throw construction_error("difference-partition failure: S contains 0");
    if (in_s[static_cast<std::size_t>(r)]) throw construction_error("difference-partition failure: S repeats " + std::to_string(r));
    in_s[static_cast<std::size_t>(r)] = true;
  }
  if (static_cast<long long>(s_set.size()) != 2 * m)
    throw construction_error("difference-partition failure: |S| = " + std::to_string(s_set.size()) +
                             ", expected " + std::to_string(2 * m));
  if (auto bad = detail::difference_defect(q, in_s)) {
    throw construction_error("difference-partition failure: element " + std::to_string(bad->first) +
                             " occurs " + std::to_string(bad->second) + " times, expected " +
                             std::to_string(m));
  }
  const auto qq = static_cast<std::size_t>(q);
  const BinMatrix res = residue_matrix(qq);
  const BinMatrix c2 = sigma_circulant(qq, s_set, s2);
  const DsrgParams expected{2 * q, q - 1, (q - 1) / 2, (q - 1) / 2 - 1, (q - 1) / 2};
  std::string descriptor = "q=" + std::to_string(q) + ",s1=" + std::to_string(s1) +
                           ",s2=" + std::to_string(s2) + ",S=";
  for (std::size_t i = 0; i < s_set.size(); ++i) descriptor += (i ? "," : "") + std::to_string(s_set[i]);

  auto attempt = [&](const std::vector<long long>& c1_support) -> std::optional<BinMatrix> {
    BinMatrix a = block_compose({{res, sigma_circulant(qq, c1_support, s1)}, {c2, res}});
    const auto v = verify_dsrg(a);
    if (v && v.params() == expected) return a;
    return std::nullopt;
  };
  if (auto a = attempt(s_set)) return detail::finish(Method::qr, descriptor, std::move(*a), expected);
  if (q <= 13) {
    std::vector<bool> pick(qq, false);
    std::fill(pick.begin(), pick.begin() + 2 * m, true);
    do {
      std::vector<long long> support;
      for (std::size_t i = 0; i < qq; ++i)
        if (pick[i]) support.push_back(static_cast<long long>(i));
      if (auto a = attempt(support)) return detail::finish(Method::qr, descriptor, std::move(*a), expected);
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  throw construction_error("qr: no sigma1-circulant completes the matrix to a DSRG");
}

/// All valid (sigma1, sigma2, S), ordered by sigma1 and then S lexicographically.
inline std::vector<QrTriple> qr_search(long long q, long long bound = kDefaultQrBound) {
  detail::require_qr_modulus(q);
  if (q > bound) throw bound_error("qr_search: q = " + std::to_string(q) + " exceeds bound " + std::to_string(bound));
  const auto sets = detail::difference_partition_sets(q);
  std::vector<QrTriple> out;
  for (long long s1 = 2; s1 < q; ++s1) {
    if (!detail::is_nonresidue(s1, q)) continue;
    long long s2 = 1;
    while (s1 * s2 % q != 1) ++s2;
    for (const auto& s : sets) out.push_back(QrTriple{s1, s2, s});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Permutation block construction.

/// [[Q, PQ], [(PQ)^T, Q]] for a regular tournament Q of valency mu and an
/// involution P with PQ symmetric: DSRG(2(2mu+1), 2mu, mu, mu-1, mu).
inline ConstructionResult pq_dsrg(const Tournament& qmat, const Perm& p) {
  const auto mu = detail::require_regular(qmat, "pq");
  if (p.size() != qmat.order()) throw input_error("pq: permutation size differs from tournament order");
  if (!p.is_involution()) throw input_error("pq: permutation is not an involution");
  const BinMatrix pq = product(perm_matrix(p), qmat.adj());
  for (std::size_t i = 0; i < pq.order(); ++i)
    for (std::size_t j = i + 1; j < pq.order(); ++j)
      if (pq(i, j) != pq(j, i))
        throw construction_error("pq: PQ is not symmetric at (" + std::to_string(i) + "," +
                                 std::to_string(j) + ")");
  return detail::finish(Method::pq, detail::describe(qmat),
                        block_compose({{qmat.adj(), pq}, {transpose(pq), qmat.adj()}}),
                        DsrgParams{2 * (2 * mu + 1), 2 * mu, mu, mu - 1, mu});
}

inline constexpr std::size_t kDefaultPqBound = 11;

/// Every involution P with PQ symmetric, in lexicographic order of image lists.
inline std::vector<Perm> pq_search(const Tournament& qmat, std::size_t bound = kDefaultPqBound) {
  const std::size_t n = qmat.order();
  if (n > bound) throw bound_error("pq_search: order " + std::to_string(n) + " exceeds bound " + std::to_string(bound));
  const BinMatrix& q = qmat.adj();
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> img(n, unset);
  std::vector<Perm> out;
  // (PQ)[i][j] = Q[p(i)][j]; symmetry needs Q[p(i)][j] == Q[p(j)][i] for assigned i, j.
  auto consistent = [&](std::size_t i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (img[j] == unset) continue;
      if (q(img[i], j) != q(img[j], i)) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self) -> void {
    std::size_t i = 0;
    while (i < n && img[i] != unset) ++i;
    if (i == n) {
      out.emplace_back(img);
      return;
    }
    for (std::size_t j = i; j < n; ++j) {
      if (img[j] != unset) continue;
      img[i] = j;
      img[j] = i;
      if (consistent(i) && consistent(j)) self(self);
      img[i] = unset;
      img[j] = unset;
    }
  };
  rec(rec);
  std::sort(out.begin(), out.end(), [](const Perm& a, const Perm& b) {
    return std::lexicographical_compare(a.images().begin(), a.images().end(), b.images().begin(), b.images().end());
  });
  return out;
}

// ---------------------------------------------------------------------------

enum class KronSide { left, right };

/// A (x) J_m (right) or J_m (x) A (left): DSRG(nm, km, tm, lambda m, mu m),
/// which holds iff t = mu.
inline ConstructionResult kronecker_expand(const BinMatrix& a, std::size_t m, KronSide side) {
  if (m < 2) throw input_error("kron: m must be greater than 1");
  const Verification v = verify_dsrg(a);
  if (!v) throw construction_error("kron: input is not a DSRG: " + v.failure().message());
  const DsrgParams p = v.params();
  if (p.t != p.mu)
    throw construction_error("kron: input has t = " + std::to_string(p.t) + " and mu = " +
                             std::to_string(p.mu) + "; the product is a DSRG iff t=mu");
  const BinMatrix j = BinMatrix::ones(m);
  const auto mm = static_cast<std::int64_t>(m);
  return detail::finish(Method::kron,
                        std::string(side == KronSide::left ? "left" : "right") + ",m=" + std::to_string(m),
                        side == KronSide::left ? kronecker(j, a) : kronecker(a, j),
                        DsrgParams{p.n * mm, p.k * mm, p.t * mm, p.lambda * mm, p.mu * mm});
}

}  // namespace dsrg
