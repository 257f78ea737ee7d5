#pragma once

// Shared fixtures and brute-force oracles for the test suite.

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "dsrg/io.hpp"
#include "dsrg/matrix.hpp"
#include "dsrg/params.hpp"
#include "dsrg/tournament.hpp"

namespace dsrg::test {

inline std::string data_path(const std::string& name) { return std::string(DSRG_TEST_DATA) + "/" + name; }

inline BinMatrix fixture_8() { return read_adj(data_path("dsrg_8_3_2_1_1.adj")); }
inline BinMatrix fixture_10() { return read_adj(data_path("dsrg_10_4_2_1_2.adj")); }
inline BinMatrix fixture_14() { return read_adj(data_path("dsrg_14_6_3_2_3.adj")); }

inline Tournament pi3() { return circulant_tournament(3, {1}); }
inline Tournament circ5() { return circulant_tournament(5, {1, 2}); }
inline Tournament paley7() { return paley_tournament(7); }

inline Perm random_perm(std::size_t n, std::mt19937& rng) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), std::size_t{0});
  std::shuffle(v.begin(), v.end(), rng);
  return Perm(v);
}

inline BinMatrix random_matrix(std::size_t n, std::mt19937& rng, bool loopless = false) {
  BinMatrix m(n);
  std::bernoulli_distribution coin(0.5);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (coin(rng) && !(loopless && i == j)) m.set(i, j);
  return m;
}

/// Naive product with plain loops, independent of the popcount kernel.
inline IntMatrix naive_product(const BinMatrix& a, const BinMatrix& b) {
  IntMatrix out(a.order());
  for (std::size_t i = 0; i < a.order(); ++i)
    for (std::size_t j = 0; j < a.order(); ++j) {
      std::int64_t s = 0;
      for (std::size_t l = 0; l < a.order(); ++l) s += a(i, l) && b(l, j);
      out(i, j) = s;
    }
  return out;
}

/// Isomorphism by trying every permutation; only for small orders.
inline bool naive_isomorphic(const BinMatrix& a, const BinMatrix& b) {
  if (a.order() != b.order()) return false;
  std::vector<std::size_t> p(a.order());
  std::iota(p.begin(), p.end(), std::size_t{0});
  do {
    if (conjugate_by_perm(a, Perm(p)) == b) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

/// Every labeled regular tournament of order n, by brute force over all
/// orientations of the upper triangle.
inline std::vector<BinMatrix> all_labeled_regular_tournaments(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::vector<BinMatrix> out;
  const std::size_t k = (n - 1) / 2;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::vector<std::size_t> out_deg(n, 0);
    for (std::size_t e = 0; e < pairs.size(); ++e) ++out_deg[(mask >> e) & 1u ? pairs[e].first : pairs[e].second];
    if (std::any_of(out_deg.begin(), out_deg.end(), [&](std::size_t d) { return d != k; })) continue;
    BinMatrix m(n);
    for (std::size_t e = 0; e < pairs.size(); ++e) {
      if ((mask >> e) & 1u) m.set(pairs[e].first, pairs[e].second);
      else m.set(pairs[e].second, pairs[e].first);
    }
    out.push_back(m);
  }
  return out;
}

/// Greedy class count using an arbitrary isomorphism predicate.
template <typename Iso>
std::size_t count_classes(const std::vector<BinMatrix>& graphs, Iso iso) {
  std::vector<BinMatrix> reps;
  for (const auto& g : graphs)
    if (std::none_of(reps.begin(), reps.end(), [&](const BinMatrix& r) { return iso(r, g); })) reps.push_back(g);
  return reps.size();
}

}  // namespace dsrg::test
