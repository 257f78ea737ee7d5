#pragma once

// Parameter arithmetic for directed strongly regular graphs: checking the
// defining equations on an adjacency matrix, complementation, and the
// integer feasibility system for genuine parameter sets.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dsrg/error.hpp"
#include "dsrg/matrix.hpp"

namespace dsrg {

enum class Classification { genuine, undirected, doubly_regular_tournament };

inline const char* to_string(Classification c) {
  switch (c) {
    case Classification::genuine: return "genuine";
    case Classification::undirected: return "undirected";
    case Classification::doubly_regular_tournament: return "doubly-regular-tournament";
  }
  return "?";
}

/// The tuple (n, k, t, lambda, mu). Ordered lexicographically in that order.
struct DsrgParams {
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::int64_t t = 0;
  std::int64_t lambda = 0;
  std::int64_t mu = 0;

  /// t == k is undirected (checked first, so the empty graph lands here); t == 0 is a
  /// doubly regular tournament; everything else is genuine.
  Classification classification() const {
    if (t == k) return Classification::undirected;
    if (t == 0) return Classification::doubly_regular_tournament;
    return Classification::genuine;
  }

  bool genuine() const { return 0 < t && t < k; }

  std::string str() const {
    return std::to_string(n) + " " + std::to_string(k) + " " + std::to_string(t) + " " +
           std::to_string(lambda) + " " + std::to_string(mu);
  }

  auto operator<=>(const DsrgParams&) const = default;
};

enum class Constraint { row_sum, column_sum, diagonal, adjacent, nonadjacent };

inline const char* to_string(Constraint c) {
  switch (c) {
    case Constraint::row_sum: return "row sum";
    case Constraint::column_sum: return "column sum";
    case Constraint::diagonal: return "t (diagonal of A^2)";
    case Constraint::adjacent: return "lambda (A^2 on edges)";
    case Constraint::nonadjacent: return "mu (A^2 on non-edges)";
  }
  return "?";
}

/// First violated constraint, with the witness entry (row, col) where the value
/// differs from the one established earlier in the scan.
struct VerifyFailure {
  Constraint constraint;
  std::size_t row;
  std::size_t col;
  std::int64_t expected;
  std::int64_t actual;

  std::string message() const {
    return std::string("not a DSRG: ") + to_string(constraint) + " at (" + std::to_string(row) +
           "," + std::to_string(col) + ") is " + std::to_string(actual) + ", expected " +
           std::to_string(expected);
  }
};

class Verification {
 public:
  Verification(DsrgParams p) : v_(p) {}
  Verification(VerifyFailure f) : v_(f) {}

  bool ok() const { return std::holds_alternative<DsrgParams>(v_); }
  explicit operator bool() const { return ok(); }

  const DsrgParams& params() const {
    if (!ok()) throw construction_error(failure().message());
    return std::get<DsrgParams>(v_);
  }
  const VerifyFailure& failure() const { return std::get<VerifyFailure>(v_); }

 private:
  std::variant<DsrgParams, VerifyFailure> v_;
};

/// Checks AJ = JA = kJ and A^2 = tI + lambda A + mu (J - I - A).
///
/// A loopless matrix is required (input_error otherwise). For J - I there are no
/// non-adjacent pairs and mu is reported as 0.
inline Verification verify_dsrg(const BinMatrix& a) {
  const std::size_t n = a.order();
  if (n == 0) throw input_error("verify_dsrg: empty matrix");
  for (std::size_t i = 0; i < n; ++i) {
    if (a(i, i)) throw input_error("verify_dsrg: nonzero diagonal at row " + std::to_string(i));
  }
  const auto k = static_cast<std::int64_t>(a.row_sum(0));
  for (std::size_t i = 0; i < n; ++i) {
    const auto r = static_cast<std::int64_t>(a.row_sum(i));
    if (r != k) return VerifyFailure{Constraint::row_sum, i, 0, k, r};
  }
  for (std::size_t j = 0; j < n; ++j) {
    const auto c = static_cast<std::int64_t>(a.col_sum(j));
    if (c != k) return VerifyFailure{Constraint::column_sum, 0, j, k, c};
  }
  const IntMatrix sq = mat_mul_count(a, a);
  const std::int64_t t = sq(0, 0);
  std::optional<std::int64_t> lambda, mu;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::int64_t v = sq(i, j);
      if (i == j) {
        if (v != t) return VerifyFailure{Constraint::diagonal, i, j, t, v};
      } else if (a(i, j)) {
        if (!lambda) lambda = v;
        else if (v != *lambda) return VerifyFailure{Constraint::adjacent, i, j, *lambda, v};
      } else {
        if (!mu) mu = v;
        else if (v != *mu) return VerifyFailure{Constraint::nonadjacent, i, j, *mu, v};
      }
    }
  }
  return DsrgParams{static_cast<std::int64_t>(n), k, t, lambda.value_or(0), mu.value_or(0)};
}

/// Parameters of J - I - A. Returns nothing if any resulting entry is negative.
inline std::optional<DsrgParams> complement_params(const DsrgParams& p) {
  const std::int64_t s = p.n - 2 * p.k;
  DsrgParams c{p.n, s + p.k - 1, s + p.t - 1, s + p.mu - 2, s + p.lambda};
  if (c.k < 0 || c.t < 0 || c.lambda < 0 || c.mu < 0 || c.t > c.k || c.k > c.n - 1) {
    return std::nullopt;
  }
  return c;
}

inline BinMatrix complement_graph(const BinMatrix& a) {
  if (!a.has_zero_diagonal()) throw input_error("complement_graph: nonzero diagonal");
  BinMatrix c(a.order());
  for (std::size_t i = 0; i < a.order(); ++i)
    for (std::size_t j = 0; j < a.order(); ++j)
      if (i != j && !a(i, j)) c.set(i, j);
  return c;
}

struct FeasibilityReport {
  DsrgParams params;
  bool applicable = false;  // false unless 0 < t < k
  std::int64_t d = 0;
  std::optional<std::int64_t> quotient;  // (2k - (mu-lambda)(n-1)) / d when it divides
  bool balance_ok = false;               // k(k + mu - lambda) = t + (n-1) mu
  bool square_ok = false;                // (mu-lambda)^2 + 4(t-mu) = d^2
  bool divisibility_ok = false;          // d | 2k - (mu-lambda)(n-1)
  bool parity_ok = false;                // quotient = n-1 (mod 2)
  bool magnitude_ok = false;             // |quotient| <= n-1
  bool order_ok = false;                 // 0 <= lambda < t < k  and  0 < mu <= t < k
  bool mu_band_ok = false;               // -2(k-t-1) <= mu-lambda <= 2(k-t)
  bool feasible = false;
};

namespace detail {
inline std::optional<std::int64_t> exact_isqrt(std::int64_t v) {
  if (v < 0) return std::nullopt;
  if (v < 2) return v;
  // Integer Newton iteration; converges from above to floor(sqrt(v)).
  std::int64_t r = v;
  std::int64_t next = (r + 1) / 2;
  while (next < r) {
    r = next;
    next = (r + v / r) / 2;
  }
  if (r * r != v) return std::nullopt;
  return r;
}
}  // namespace detail

/// Evaluates the necessary conditions for a genuine DSRG in exact integers.
///
/// With d = 0 nothing divides the numerator except when it is itself 0, and the
/// quotient-based checks fail; d = 0 forces lambda = mu = t, which the order
/// condition already excludes.
inline FeasibilityReport duval_feasible(const DsrgParams& p) {
  FeasibilityReport r;
  r.params = p;
  r.applicable = p.genuine();
  if (!r.applicable) return r;

  const std::int64_t n = p.n, k = p.k, t = p.t, l = p.lambda, m = p.mu;
  const std::int64_t diff = m - l;
  r.balance_ok = k * (k + diff) == t + (n - 1) * m;
  if (auto d = detail::exact_isqrt(diff * diff + 4 * (t - m))) {
    r.square_ok = true;
    r.d = *d;
  }
  const std::int64_t num = 2 * k - diff * (n - 1);
  if (r.square_ok && r.d > 0 && num % r.d == 0) {
    r.divisibility_ok = true;
    r.quotient = num / r.d;
    r.parity_ok = ((*r.quotient - (n - 1)) % 2) == 0;
    r.magnitude_ok = (*r.quotient < 0 ? -*r.quotient : *r.quotient) <= n - 1;
  } else if (r.square_ok && r.d == 0 && num == 0) {
    r.divisibility_ok = true;
  }
  r.order_ok = 0 <= l && l < t && t < k && 0 < m && m <= t;
  r.mu_band_ok = -2 * (k - t - 1) <= diff && diff <= 2 * (k - t);
  r.feasible = r.balance_ok && r.square_ok && r.divisibility_ok && r.parity_ok &&
               r.magnitude_ok && r.order_ok && r.mu_band_ok;
  return r;
}

/// Every genuine tuple with n <= max_n passing duval_feasible, sorted.
///
/// Walks (n, k, mu-lambda, d); the balance equation then fixes mu via
///   n mu = k^2 + k (mu-lambda) - (d^2 - (mu-lambda)^2)/4,
/// which keeps the scan roughly cubic in max_n instead of quintic.
inline std::vector<DsrgParams> enumerate_feasible(std::int64_t max_n) {
  if (max_n < 1) throw input_error("enumerate_feasible: max_n must be at least 1");
  std::vector<DsrgParams> out;
  for (std::int64_t n = 1; n <= max_n; ++n) {
    for (std::int64_t k = 2; k <= n - 1; ++k) {
      // |mu - lambda| <= 2(k - t) < 2k; t - mu = (d^2 - x^2)/4 lies in [0, k).
      for (std::int64_t x = -2 * k; x <= 2 * k; ++x) {
        const std::int64_t ax = x < 0 ? -x : x;
        for (std::int64_t d = ax; d * d - x * x < 4 * k; ++d) {
          const std::int64_t gap4 = d * d - x * x;
          if (gap4 % 4 != 0) continue;
          const std::int64_t gap = gap4 / 4;  // t - mu
          const std::int64_t num = k * k + k * x - gap;
          if (num <= 0 || num % n != 0) continue;
          const std::int64_t mu = num / n;
          const DsrgParams p{n, k, mu + gap, mu - x, mu};
          if (p.lambda < 0 || !p.genuine()) continue;
          if (duval_feasible(p).feasible) out.push_back(p);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace dsrg
