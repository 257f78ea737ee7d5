#pragma once

// Dense square 0/1 matrices stored as packed rows, plus the handful of
// algebraic operations every construction is built from.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dsrg/error.hpp"

namespace dsrg {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

/// Permutation of {0, ..., n-1}, stored as its image list.
///
/// The matrix form has a one at (i, images[i]).
class Perm {
 public:
  Perm() = default;

  explicit Perm(std::vector<std::size_t> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (auto x : images_) {
      if (x >= images_.size() || seen[x]) {
        throw input_error("permutation images are not a bijection of 0.." +
                          std::to_string(images_.size()));
      }
      seen[x] = true;
    }
  }

  static Perm identity(std::size_t n) {
    std::vector<std::size_t> v(n);
    std::iota(v.begin(), v.end(), std::size_t{0});
    return Perm(std::move(v));
  }

  std::size_t size() const { return images_.size(); }
  std::size_t operator()(std::size_t i) const { return images_[i]; }
  std::span<const std::size_t> images() const { return images_; }

  Perm inverse() const {
    std::vector<std::size_t> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
    return Perm(std::move(inv));
  }

  /// (this * other)(i) = this(other(i)).
  Perm after(const Perm& other) const {
    if (other.size() != size()) throw dimension_error("permutation sizes differ");
    std::vector<std::size_t> v(size());
    for (std::size_t i = 0; i < size(); ++i) v[i] = images_[other.images_[i]];
    return Perm(std::move(v));
  }

  bool is_involution() const {
    for (std::size_t i = 0; i < size(); ++i) {
      if (images_[images_[i]] != i) return false;
    }
    return true;
  }

  bool operator==(const Perm&) const = default;

 private:
  std::vector<std::size_t> images_;
};

/// Square matrix of non-negative integers; holds path counts such as A*A.
class IntMatrix {
 public:
  using value_type = std::int64_t;

  IntMatrix() = default;
  explicit IntMatrix(std::size_t order) : n_(order), data_(order * order, 0) {}

  std::size_t order() const { return n_; }
  value_type operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  value_type& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }

  IntMatrix& operator+=(const IntMatrix& o) {
    check(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  IntMatrix& operator-=(const IntMatrix& o) {
    check(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  friend IntMatrix operator+(IntMatrix a, const IntMatrix& b) { return a += b; }
  friend IntMatrix operator-(IntMatrix a, const IntMatrix& b) { return a -= b; }
  friend IntMatrix operator*(value_type s, IntMatrix a) {
    for (auto& x : a.data_) x *= s;
    return a;
  }

  bool operator==(const IntMatrix&) const = default;

 private:
  void check(const IntMatrix& o) const {
    if (o.n_ != n_) throw dimension_error("integer matrix orders differ");
  }

  std::size_t n_ = 0;
  std::vector<value_type> data_;
};

class BinMatrix {
 public:
  BinMatrix() = default;
  explicit BinMatrix(std::size_t order)
      : n_(order), words_((order + kWordBits - 1) / kWordBits), bits_(n_ * words_, 0) {}

  static BinMatrix zero(std::size_t n) { return BinMatrix(n); }

  static BinMatrix identity(std::size_t n) {
    BinMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
  }

  static BinMatrix ones(std::size_t n) {
    BinMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m.set(i, j);
    return m;
  }

  /// Rows given as strings over {0,1}; whitespace is ignored.
  static BinMatrix from_rows(const std::vector<std::string_view>& rows) {
    BinMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      std::size_t j = 0;
      for (char c : rows[i]) {
        if (c == ' ' || c == '\t') continue;
        if (c != '0' && c != '1') throw input_error("matrix rows must contain only 0 and 1");
        if (j >= m.n_) throw dimension_error("row " + std::to_string(i) + " is too long");
        m.set(i, j++, c == '1');
      }
      if (j != m.n_) throw dimension_error("row " + std::to_string(i) + " is too short");
    }
    return m;
  }

  std::size_t order() const { return n_; }
  std::size_t words_per_row() const { return words_; }

  bool get(std::size_t i, std::size_t j) const {
    return (bits_[i * words_ + j / kWordBits] >> (j % kWordBits)) & 1u;
  }
  bool operator()(std::size_t i, std::size_t j) const { return get(i, j); }

  void set(std::size_t i, std::size_t j, bool v = true) {
    Word& w = bits_[i * words_ + j / kWordBits];
    const Word mask = Word{1} << (j % kWordBits);
    w = v ? (w | mask) : (w & ~mask);
  }

  std::span<const Word> row(std::size_t i) const {
    return {bits_.data() + i * words_, words_};
  }

  std::size_t row_sum(std::size_t i) const {
    std::size_t s = 0;
    for (Word w : row(i)) s += static_cast<std::size_t>(std::popcount(w));
    return s;
  }

  std::size_t col_sum(std::size_t j) const {
    std::size_t s = 0;
    for (std::size_t i = 0; i < n_; ++i) s += get(i, j);
    return s;
  }

  bool has_zero_diagonal() const {
    for (std::size_t i = 0; i < n_; ++i)
      if (get(i, i)) return false;
    return true;
  }

  std::string row_string(std::size_t i) const {
    std::string s(n_, '0');
    for (std::size_t j = 0; j < n_; ++j)
      if (get(i, j)) s[j] = '1';
    return s;
  }

  /// Column indices set in row i, ascending.
  std::vector<std::size_t> support(std::size_t i) const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < n_; ++j)
      if (get(i, j)) out.push_back(j);
    return out;
  }

  bool operator==(const BinMatrix& o) const { return n_ == o.n_ && bits_ == o.bits_; }

  /// Order first, then the row-major entry sequence read as a bit string.
  std::strong_ordering operator<=>(const BinMatrix& o) const {
    if (auto c = n_ <=> o.n_; c != 0) return c;
    for (std::size_t k = 0; k < bits_.size(); ++k) {
      const Word diff = bits_[k] ^ o.bits_[k];
      if (diff == 0) continue;
      const Word low = diff & (~diff + 1);
      return (bits_[k] & low) ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
  }

  std::span<const Word> raw() const { return bits_; }

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<Word> bits_;
};

inline IntMatrix to_int(const BinMatrix& a) {
  IntMatrix m(a.order());
  for (std::size_t i = 0; i < a.order(); ++i)
    for (std::size_t j = 0; j < a.order(); ++j) m(i, j) = a(i, j);
  return m;
}

/// Converts back to a 0/1 matrix; every entry must already be 0 or 1.
inline BinMatrix to_binary(const IntMatrix& m) {
  BinMatrix a(m.order());
  for (std::size_t i = 0; i < m.order(); ++i) {
    for (std::size_t j = 0; j < m.order(); ++j) {
      const auto v = m(i, j);
      if (v != 0 && v != 1) {
        throw dimension_error("entry (" + std::to_string(i) + "," + std::to_string(j) +
                              ") is not binary");
      }
      a.set(i, j, v == 1);
    }
  }
  return a;
}

inline BinMatrix transpose(const BinMatrix& a) {
  BinMatrix t(a.order());
  for (std::size_t i = 0; i < a.order(); ++i)
    for (std::size_t j = 0; j < a.order(); ++j)
      if (a(i, j)) t.set(j, i);
  return t;
}

/// Exact product over the integers: entry (i,j) counts h with a[i][h] = b[h][j] = 1.
inline IntMatrix mat_mul_count(const BinMatrix& a, const BinMatrix& b) {
  if (a.order() != b.order()) throw dimension_error("mat_mul_count: orders differ");
  const std::size_t n = a.order();
  const BinMatrix bt = transpose(b);
  IntMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto ri = a.row(i);
    for (std::size_t j = 0; j < n; ++j) {
      const auto cj = bt.row(j);
      std::int64_t s = 0;
      for (std::size_t w = 0; w < ri.size(); ++w) s += std::popcount(ri[w] & cj[w]);
      out(i, j) = s;
    }
  }
  return out;
}

/// Entrywise sum of two 0/1 matrices whose supports are disjoint.
inline BinMatrix sum(const BinMatrix& a, const BinMatrix& b) {
  if (a.order() != b.order()) throw dimension_error("sum: orders differ");
  BinMatrix out(a.order());
  for (std::size_t i = 0; i < a.order(); ++i) {
    for (std::size_t j = 0; j < a.order(); ++j) {
      if (a(i, j) && b(i, j)) {
        throw dimension_error("sum: entry (" + std::to_string(i) + "," + std::to_string(j) +
                              ") would be 2");
      }
      if (a(i, j) || b(i, j)) out.set(i, j);
    }
  }
  return out;
}

inline BinMatrix kronecker(const BinMatrix& a, const BinMatrix& b) {
  const std::size_t n = a.order(), m = b.order();
  BinMatrix out(n * m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (a(i, j))
        for (std::size_t r = 0; r < m; ++r)
          for (std::size_t c = 0; c < m; ++c)
            if (b(r, c)) out.set(i * m + r, j * m + c);
  return out;
}

/// Power e of the n-cycle matrix: entry (i,j) = 1 iff j = i + e (mod n). e may be negative.
inline BinMatrix cycle_power(std::size_t n, long long e) {
  if (n == 0) throw input_error("cycle_power: n must be positive");
  const auto nn = static_cast<long long>(n);
  const auto shift = static_cast<std::size_t>(((e % nn) + nn) % nn);
  BinMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, (i + shift) % n);
  return m;
}

/// Row i is row 0 shifted right by sigma*i: entry (i,j) = first_row[(j - sigma*i) mod n].
///
/// sigma is reduced mod n, so any integer is accepted; sigma = 1 is an ordinary circulant.
inline BinMatrix sigma_circulant(std::size_t n, const std::vector<bool>& first_row, long long sigma) {
  if (first_row.size() != n) throw dimension_error("sigma_circulant: first row has wrong length");
  if (n == 0) return BinMatrix();
  const auto nn = static_cast<long long>(n);
  const long long s = ((sigma % nn) + nn) % nn;
  BinMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const long long idx = (((static_cast<long long>(j) - s * static_cast<long long>(i)) % nn) + nn) % nn;
      if (first_row[static_cast<std::size_t>(idx)]) m.set(i, j);
    }
  }
  return m;
}

/// Convenience overload: row 0 given by its support (residues are reduced mod n).
inline BinMatrix sigma_circulant(std::size_t n, const std::vector<long long>& support, long long sigma) {
  std::vector<bool> row(n, false);
  const auto nn = static_cast<long long>(n);
  for (auto x : support) row[static_cast<std::size_t>(((x % nn) + nn) % nn)] = true;
  return sigma_circulant(n, row, sigma);
}

/// A rectangular block of constant value.
struct Fill {
  std::size_t rows;
  std::size_t cols;
  bool value;
};

using Block = std::variant<BinMatrix, Fill>;
using BlockGrid = std::vector<std::vector<Block>>;

namespace detail {
inline std::size_t block_rows(const Block& b) {
  return std::visit([](const auto& x) -> std::size_t {
    if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Fill>) return x.rows;
    else return x.order();
  }, b);
}
inline std::size_t block_cols(const Block& b) {
  return std::visit([](const auto& x) -> std::size_t {
    if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Fill>) return x.cols;
    else return x.order();
  }, b);
}
}  // namespace detail

/// Concatenates a grid of blocks into one square matrix.
///
/// Every block in a grid row must have the same height and every block in a
/// grid column the same width.
inline BinMatrix block_compose(const BlockGrid& grid) {
  if (grid.empty()) return BinMatrix();
  const std::size_t gr = grid.size(), gc = grid.front().size();
  std::vector<std::size_t> heights(gr), widths(gc);
  for (std::size_t bi = 0; bi < gr; ++bi) {
    if (grid[bi].size() != gc) throw dimension_error("block_compose: ragged grid");
    heights[bi] = detail::block_rows(grid[bi][0]);
    for (std::size_t bj = 0; bj < gc; ++bj) {
      if (detail::block_rows(grid[bi][bj]) != heights[bi])
        throw dimension_error("block_compose: block heights differ in grid row " + std::to_string(bi));
      if (bi == 0) widths[bj] = detail::block_cols(grid[0][bj]);
      else if (detail::block_cols(grid[bi][bj]) != widths[bj])
        throw dimension_error("block_compose: block widths differ in grid column " + std::to_string(bj));
    }
  }
  const std::size_t n = std::accumulate(heights.begin(), heights.end(), std::size_t{0});
  if (std::accumulate(widths.begin(), widths.end(), std::size_t{0}) != n)
    throw dimension_error("block_compose: result is not square");

  BinMatrix out(n);
  std::size_t r0 = 0;
  for (std::size_t bi = 0; bi < gr; ++bi) {
    std::size_t c0 = 0;
    for (std::size_t bj = 0; bj < gc; ++bj) {
      const Block& b = grid[bi][bj];
      for (std::size_t r = 0; r < heights[bi]; ++r) {
        for (std::size_t c = 0; c < widths[bj]; ++c) {
          const bool v = std::holds_alternative<Fill>(b) ? std::get<Fill>(b).value
                                                         : std::get<BinMatrix>(b)(r, c);
          if (v) out.set(r0 + r, c0 + c);
        }
      }
      c0 += widths[bj];
    }
    r0 += heights[bi];
  }
  return out;
}

/// Relabels vertex i as p(i): result[p(i)][p(j)] = a[i][j].
inline BinMatrix conjugate_by_perm(const BinMatrix& a, const Perm& p) {
  if (p.size() != a.order()) throw dimension_error("conjugate_by_perm: permutation size differs");
  BinMatrix out(a.order());
  for (std::size_t i = 0; i < a.order(); ++i)
    for (std::size_t j = 0; j < a.order(); ++j)
      if (a(i, j)) out.set(p(i), p(j));
  return out;
}

inline BinMatrix perm_matrix(const Perm& p) {
  BinMatrix m(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) m.set(i, p(i));
  return m;
}

/// Reads a permutation matrix back as a Perm; throws if it is not one.
inline Perm perm_from_matrix(const BinMatrix& m) {
  std::vector<std::size_t> images(m.order());
  for (std::size_t i = 0; i < m.order(); ++i) {
    auto s = m.support(i);
    if (s.size() != 1) throw input_error("not a permutation matrix");
    images[i] = s[0];
  }
  return Perm(std::move(images));
}

inline BinMatrix product(const BinMatrix& a, const BinMatrix& b) {
  return to_binary(mat_mul_count(a, b));
}

}  // namespace dsrg
