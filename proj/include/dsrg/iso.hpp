#pragma once

// Canonical labeling and isomorphism testing for small directed graphs.
//
// The search is individualization-refinement: an ordered partition of the
// vertices is refined until equitable with respect to out- and in-neighbour
// counts, then a vertex of the first smallest non-singleton cell is
// individualized and the process recurses. Every discrete partition (leaf)
// yields a relabeled graph; the canonical form is the smallest of these in
// row-major bit order. Leaves that reproduce an earlier leaf graph give
// automorphisms, which are used to skip equivalent children.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "dsrg/error.hpp"
#include "dsrg/matrix.hpp"

namespace dsrg {

inline constexpr std::size_t kDefaultIsoBound = 48;

struct IsoCertificate {
  BinMatrix canonical;
  std::uint64_t cert_hash = 0;
  std::size_t order = 0;
  /// canonical == conjugate_by_perm(input, labeling).
  Perm labeling;
};

/// 64-bit FNV-1a over the order followed by the row-major entries, 8 per byte.
inline std::uint64_t matrix_hash(const BinMatrix& m) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::uint8_t b) {
    h ^= b;
    h *= 0x100000001b3ULL;
  };
  std::uint64_t n = m.order();
  for (int i = 0; i < 8; ++i) mix(static_cast<std::uint8_t>(n >> (8 * i)));
  std::uint8_t acc = 0;
  int filled = 0;
  for (std::size_t i = 0; i < m.order(); ++i) {
    for (std::size_t j = 0; j < m.order(); ++j) {
      acc = static_cast<std::uint8_t>((acc << 1) | (m(i, j) ? 1 : 0));
      if (++filled == 8) {
        mix(acc);
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) mix(static_cast<std::uint8_t>(acc << (8 - filled)));
  return h;
}

inline std::string hash_hex(std::uint64_t h) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) s[static_cast<std::size_t>(i)] = digits[h & 0xf];
  return s;
}

namespace detail {

// Ordered partition: lab lists vertices by position; cells are contiguous runs
// whose lengths are stored at their start position.
struct Partition {
  std::vector<std::size_t> lab;
  std::vector<std::size_t> cell_len;  // meaningful only at cell starts
  std::vector<std::size_t> cell_of;   // vertex -> start of its cell
  std::size_t cells = 0;

  explicit Partition(std::size_t n) : lab(n), cell_len(n, 0), cell_of(n, 0), cells(n ? 1 : 0) {
    for (std::size_t i = 0; i < n; ++i) lab[i] = i;
    if (n) cell_len[0] = n;
  }

  bool discrete() const { return cells == lab.size(); }
};

class Refiner {
 public:
  explicit Refiner(const BinMatrix& g) : g_(g), gt_(transpose(g)), n_(g.order()) {}

  // Splits cells until equitable, starting from the given splitter cells.
  void refine(Partition& p, std::vector<std::size_t> queue) const {
    std::vector<bool> queued(n_, false);
    for (auto s : queue) queued[s] = true;
    std::vector<Word> mask(g_.words_per_row());
    std::vector<std::pair<std::size_t, std::size_t>> counts(n_);
    std::size_t head = 0;
    while (head < queue.size() && !p.discrete()) {
      const std::size_t w = queue[head++];
      queued[w] = false;
      std::fill(mask.begin(), mask.end(), Word{0});
      for (std::size_t pos = w; pos < w + p.cell_len[w]; ++pos) {
        const std::size_t v = p.lab[pos];
        mask[v / kWordBits] |= Word{1} << (v % kWordBits);
      }
      for (std::size_t v = 0; v < n_; ++v) {
        counts[v] = {intersect(g_.row(v), mask), intersect(gt_.row(v), mask)};
      }
      for (std::size_t start = 0; start < n_;) {
        const std::size_t len = p.cell_len[start];
        if (len > 1) split(p, start, len, counts, queue, queued);
        start += len;
      }
    }
  }

  void individualize(Partition& p, std::size_t v) const {
    const std::size_t start = p.cell_of[v];
    const std::size_t len = p.cell_len[start];
    auto it = std::find(p.lab.begin() + static_cast<std::ptrdiff_t>(start),
                        p.lab.begin() + static_cast<std::ptrdiff_t>(start + len), v);
    std::iter_swap(p.lab.begin() + static_cast<std::ptrdiff_t>(start), it);
    p.cell_len[start] = 1;
    p.cell_len[start + 1] = len - 1;
    for (std::size_t pos = start + 1; pos < start + len; ++pos) p.cell_of[p.lab[pos]] = start + 1;
    ++p.cells;
    refine(p, {start, start + 1});
  }

 private:
  static std::size_t intersect(std::span<const Word> a, const std::vector<Word>& b) {
    std::size_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
    return s;
  }

  static void split(Partition& p, std::size_t start, std::size_t len,
                    const std::vector<std::pair<std::size_t, std::size_t>>& counts,
                    std::vector<std::size_t>& queue, std::vector<bool>& queued) {
    auto first = p.lab.begin() + static_cast<std::ptrdiff_t>(start);
    auto last = first + static_cast<std::ptrdiff_t>(len);
    std::stable_sort(first, last, [&](std::size_t a, std::size_t b) { return counts[a] < counts[b]; });
    if (counts[*first] == counts[*(last - 1)]) return;
    std::size_t s = start;
    for (std::size_t pos = start + 1; pos <= start + len; ++pos) {
      if (pos == start + len || counts[p.lab[pos]] != counts[p.lab[s]]) {
        p.cell_len[s] = pos - s;
        for (std::size_t q = s; q < pos; ++q) p.cell_of[p.lab[q]] = s;
        if (s != start) ++p.cells;
        if (!queued[s]) {
          queued[s] = true;
          queue.push_back(s);
        }
        s = pos;
      }
    }
  }

  const BinMatrix& g_;
  BinMatrix gt_;
  std::size_t n_;
};

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const BinMatrix& g) : g_(g), n_(g.order()), refiner_(g) {}

  IsoCertificate run() {
    Partition root(n_);
    if (n_ > 0) refiner_.refine(root, {0});
    explored_.assign(n_ + 1, {});
    search(root, 0);
    IsoCertificate c;
    c.canonical = best_graph_;
    c.order = n_;
    c.cert_hash = matrix_hash(best_graph_);
    c.labeling = best_labeling_;
    return c;
  }

  const std::vector<Perm>& automorphisms() const { return generators_; }

 private:
  void search(const Partition& p, std::size_t level) {
    if (p.discrete()) {
      leaf(p);
      return;
    }
    std::size_t target = n_, best_len = n_ + 1;
    for (std::size_t s = 0; s < n_; s += p.cell_len[s]) {
      if (p.cell_len[s] > 1 && p.cell_len[s] < best_len) {
        best_len = p.cell_len[s];
        target = s;
      }
    }
    std::vector<std::size_t> children(p.lab.begin() + static_cast<std::ptrdiff_t>(target),
                                      p.lab.begin() + static_cast<std::ptrdiff_t>(target + best_len));
    std::sort(children.begin(), children.end());
    explored_[level].clear();
    for (std::size_t v : children) {
      if (abort_level_ && *abort_level_ < level) return;
      abort_level_.reset();
      if (equivalent_to_explored(level, v)) continue;
      explored_[level].push_back(v);
      prefix_.push_back(v);
      Partition child = p;
      refiner_.individualize(child, v);
      search(child, level + 1);
      prefix_.pop_back();
    }
  }

  void leaf(const Partition& p) {
    // Vertex lab[i] receives label i.
    std::vector<std::size_t> images(n_);
    for (std::size_t i = 0; i < n_; ++i) images[p.lab[i]] = i;
    Perm labeling(std::move(images));
    BinMatrix graph = conjugate_by_perm(g_, labeling);
    std::vector<Word> key(graph.raw().begin(), graph.raw().end());
    auto [it, inserted] = leaves_.try_emplace(std::move(key), labeling);
    if (!inserted) {
      // Both labelings give the same graph: old^-1 o new is an automorphism.
      record_automorphism(it->second.inverse().after(labeling));
      return;
    }
    if (!have_best_ || graph < best_graph_) {
      best_graph_ = std::move(graph);
      best_labeling_ = labeling;
      have_best_ = true;
    }
  }

  void record_automorphism(Perm gamma) {
    if (gamma == Perm::identity(n_)) return;
    generators_.push_back(std::move(gamma));
    // Jump back to the shallowest level whose current child has become
    // equivalent to a child explored before it.
    for (std::size_t level = 0; level < prefix_.size(); ++level) {
      const std::size_t v = prefix_[level];
      std::vector<std::size_t> earlier(explored_[level].begin(), explored_[level].end() - 1);
      if (in_orbit_of(level, v, earlier)) {
        abort_level_ = level;
        return;
      }
    }
  }

  bool equivalent_to_explored(std::size_t level, std::size_t v) const {
    return in_orbit_of(level, v, explored_[level]);
  }

  // Orbits of the subgroup generated by the found automorphisms that fix
  // prefix_[0..level) pointwise.
  bool in_orbit_of(std::size_t level, std::size_t v, const std::vector<std::size_t>& targets) const {
    if (targets.empty() || generators_.empty()) return false;
    std::vector<std::size_t> parent(n_);
    for (std::size_t i = 0; i < n_; ++i) parent[i] = i;
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    bool any = false;
    for (const Perm& g : generators_) {
      bool fixes = true;
      for (std::size_t l = 0; l < level && fixes; ++l) fixes = g(prefix_[l]) == prefix_[l];
      if (!fixes) continue;
      any = true;
      for (std::size_t i = 0; i < n_; ++i) {
        const auto a = find(i), b = find(g(i));
        if (a != b) parent[a] = b;
      }
    }
    if (!any) return false;
    const auto root = find(v);
    return std::any_of(targets.begin(), targets.end(), [&](std::size_t u) { return find(u) == root; });
  }

  struct KeyHash {
    std::size_t operator()(const std::vector<Word>& k) const {
      std::size_t h = 1469598103934665603ULL;
      for (Word w : k) h = (h ^ static_cast<std::size_t>(w)) * 1099511628211ULL;
      return h;
    }
  };

  const BinMatrix& g_;
  std::size_t n_;
  Refiner refiner_;
  std::vector<std::size_t> prefix_;
  std::vector<std::vector<std::size_t>> explored_;
  std::vector<Perm> generators_;
  std::optional<std::size_t> abort_level_;
  std::unordered_map<std::vector<Word>, Perm, KeyHash> leaves_;
  BinMatrix best_graph_;
  Perm best_labeling_;
  bool have_best_ = false;
};

inline void check_bound(std::size_t order, std::size_t bound) {
  if (order > bound) {
    throw bound_error("graph order " + std::to_string(order) + " exceeds the isomorphism bound " +
                      std::to_string(bound));
  }
}

}  // namespace detail

inline IsoCertificate canonical_form(const BinMatrix& a, std::size_t bound = kDefaultIsoBound) {
  detail::check_bound(a.order(), bound);
  if (a.order() == 0) return IsoCertificate{BinMatrix(), matrix_hash(BinMatrix()), 0, Perm()};
  return detail::CanonicalSearch(a).run();
}

/// A permutation p with conjugate_by_perm(a, p) == b, if one exists.
inline std::optional<Perm> are_isomorphic(const BinMatrix& a, const BinMatrix& b,
                                          std::size_t bound = kDefaultIsoBound) {
  detail::check_bound(a.order(), bound);
  detail::check_bound(b.order(), bound);
  if (a.order() != b.order()) return std::nullopt;
  auto degrees = [](const BinMatrix& m) {
    std::vector<std::pair<std::size_t, std::size_t>> d(m.order());
    for (std::size_t i = 0; i < m.order(); ++i) d[i] = {m.row_sum(i), m.col_sum(i)};
    std::sort(d.begin(), d.end());
    return d;
  };
  if (degrees(a) != degrees(b)) return std::nullopt;
  const auto ca = canonical_form(a, bound);
  const auto cb = canonical_form(b, bound);
  if (ca.canonical != cb.canonical) return std::nullopt;
  return cb.labeling.inverse().after(ca.labeling);
}

/// Groups indices of isomorphic graphs. Classes are ordered by canonical form
/// (order first), members by input index.
inline std::vector<std::vector<std::size_t>> classify(std::span<const BinMatrix> graphs,
                                                      std::size_t bound = kDefaultIsoBound) {
  std::map<BinMatrix, std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    classes[canonical_form(graphs[i], bound).canonical].push_back(i);
  }
  std::vector<std::vector<std::size_t>> out;
  out.reserve(classes.size());
  for (auto& [canon, members] : classes) out.push_back(std::move(members));
  return out;
}

/// Automorphism generators found as a by-product of canonical labeling.
inline std::vector<Perm> automorphism_generators(const BinMatrix& a, std::size_t bound = kDefaultIsoBound) {
  detail::check_bound(a.order(), bound);
  detail::CanonicalSearch s(a);
  s.run();
  return s.automorphisms();
}

/// A permutation P (matrix form: one at (i, P(i))) with P A = A^T = A P.
///
/// P A = A^T means row P(i) of A equals column i of A, which fixes the
/// candidates for each image; A P = A^T is checked on complete assignments.
inline std::optional<Perm> find_commuting_transposer(const BinMatrix& a,
                                                     std::size_t bound = kDefaultIsoBound) {
  detail::check_bound(a.order(), bound);
  const std::size_t n = a.order();
  const BinMatrix at = transpose(a);
  std::vector<std::vector<std::size_t>> candidates(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t r = 0; r < n; ++r) {
      if (std::equal(a.row(r).begin(), a.row(r).end(), at.row(i).begin())) candidates[i].push_back(r);
    }
    if (candidates[i].empty()) return std::nullopt;
  }
  std::vector<std::size_t> images(n);
  std::vector<bool> used(n, false);
  std::optional<Perm> found;
  auto commutes = [&](const Perm& p) { return product(a, perm_matrix(p)) == at; };
  auto rec = [&](auto&& self, std::size_t i) -> bool {
    if (i == n) {
      Perm p(images);
      if (commutes(p)) {
        found = std::move(p);
        return true;
      }
      return false;
    }
    for (std::size_t r : candidates[i]) {
      if (used[r]) continue;
      used[r] = true;
      images[i] = r;
      if (self(self, i + 1)) return true;
      used[r] = false;
    }
    return false;
  };
  rec(rec, 0);
  return found;
}

}  // namespace dsrg
