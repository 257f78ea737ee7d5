#pragma once

// Machine regeneration of the construction tables: every construction run over
// all inputs it can take up to a vertex bound, deduplicated by isomorphism class.
//
// Catalog text is a sequence of records:
//   method input n k t lambda mu cert_hash
//   <n adjacency rows>
//   <blank line>

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dsrg/construct.hpp"
#include "dsrg/error.hpp"
#include "dsrg/group.hpp"
#include "dsrg/io.hpp"
#include "dsrg/iso.hpp"
#include "dsrg/params.hpp"
#include "dsrg/tournament.hpp"

namespace dsrg {

struct CatalogEntry {
  std::string method;
  std::string input;
  DsrgParams params;
  std::uint64_t cert_hash = 0;
  BinMatrix adj;
};

struct CatalogOptions {
  std::size_t max_n = 48;
  std::size_t iso_bound = kDefaultIsoBound;
  std::size_t max_enumerated_order = 7;  // regular tournaments enumerated exhaustively
  std::size_t max_scanned_group = 12;    // dihedral groups scanned exhaustively for Cayley DSRGs
};

struct Catalog {
  std::vector<CatalogEntry> entries;  // one per isomorphism class
  std::vector<std::string> errors;    // construction failures, if any
  std::map<DsrgParams, std::set<std::string>> methods;  // every method reaching each parameter set
};

struct SummaryRow {
  DsrgParams params;
  std::size_t classes = 0;
  std::vector<std::string> methods;
};

namespace detail {

struct NamedTournament {
  std::string name;
  Tournament t;
};

inline std::string join(const std::vector<long long>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s;
}

/// Circulant tournaments on Z_n: one of {d, n - d} for each d = 1..k.
inline std::vector<NamedTournament> circulant_tournaments(std::size_t n) {
  std::vector<NamedTournament> out;
  const std::size_t k = (n - 1) / 2;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    std::vector<long long> conn;
    for (std::size_t d = 1; d <= k; ++d)
      conn.push_back(static_cast<long long>((mask >> (d - 1)) & 1u ? n - d : d));
    std::sort(conn.begin(), conn.end());
    out.push_back({"circulant:" + std::to_string(n) + ":" + join(conn), circulant_tournament(n, conn)});
  }
  return out;
}

/// Regular tournaments of order n up to isomorphism, as far as the options allow:
/// exhaustive enumeration at small orders, otherwise circulants and Paley tournaments.
inline std::vector<NamedTournament> tournament_inputs(std::size_t n, const CatalogOptions& opts) {
  std::vector<NamedTournament> raw;
  if (n <= opts.max_enumerated_order) {
    auto reps = enumerate_regular_tournaments(n, EnumerationOptions{opts.max_enumerated_order});
    for (std::size_t i = 0; i < reps.size(); ++i)
      raw.push_back({"enum:" + std::to_string(n) + "#" + std::to_string(i), reps[i]});
  } else {
    raw = circulant_tournaments(n);
    if (n % 4 == 3 && is_prime(n)) raw.push_back({"paley:" + std::to_string(n), paley_tournament(n)});
  }
  // One representative per class keeps the downstream work small.
  std::vector<NamedTournament> out;
  std::set<BinMatrix> seen;
  for (auto& nt : raw)
    if (seen.insert(canonical_form(nt.t.adj(), opts.iso_bound).canonical).second) out.push_back(std::move(nt));
  return out;
}

}  // namespace detail

inline std::string format_entry_header(const CatalogEntry& e) {
  return e.method + " " + e.input + " " + e.params.str() + " " + hash_hex(e.cert_hash);
}

/// Runs every construction with output order <= max_n. Entries are one per
/// isomorphism class, sorted by parameters and then certificate hash; the
/// representative of a class is the lexicographically first (method, input).
inline Catalog generate_catalog(const CatalogOptions& opts) {
  if (opts.max_n > opts.iso_bound)
    throw bound_error("catalog: max_n " + std::to_string(opts.max_n) + " exceeds the isomorphism bound " +
                      std::to_string(opts.iso_bound));
  const std::size_t max_n = opts.max_n;
  std::vector<ConstructionResult> results;
  Catalog cat;
  auto attempt = [&](const std::string& input, const std::function<ConstructionResult()>& f) {
    try {
      ConstructionResult r = f();
      r.input_descriptor = input;
      results.push_back(std::move(r));
    } catch (const error& e) {
      cat.errors.push_back(input + ": " + e.what());
    }
  };

  // Tournament-based block constructions. lem6 also accepts the one-vertex tournament.
  if (max_n >= 8) attempt("tournament:1", [&] { return lem6_dsrg(check_tournament(BinMatrix(1))); });
  for (std::size_t n = 3; 2 * n <= max_n; n += 2) {
    for (const auto& [name, t] : detail::tournament_inputs(n, opts)) {
      attempt(name, [&] { return duval_B(t); });
      attempt(name, [&] { return duval_C(t); });
      attempt(name, [&] { return m_construction(t); });
      for (std::size_t w = 2; 2 * n * w <= max_n; ++w) {
        attempt(name + ",w=" + std::to_string(w), [&] { return wide_blocks(t, w); });
        attempt(name + ",w=" + std::to_string(w), [&] { return tall_blocks(t, w); });
      }
      if (4 * (n + 1) <= max_n) {
        attempt(name, [&] { return lem6_dsrg(t); });
        if (is_doubly_regular_tournament(t)) attempt(name, [&] { return lem5_dsrg(t); });
      }
      if (n <= kDefaultPqBound) {
        for (const Perm& p : pq_search(t)) {
          std::vector<long long> img(p.images().begin(), p.images().end());
          attempt(name + ",P=" + detail::join(img), [&] { return pq_dsrg(t, p); });
        }
      }
    }
  }
  for (std::size_t s = 1; 4 * (s + 1) <= max_n; ++s)
    attempt("s=" + std::to_string(s), [&] { return lem7_dsrg(s); });

  for (long long q = 5; 2 * q <= static_cast<long long>(max_n) && q <= kDefaultQrBound; q += 4) {
    if (!detail::is_prime(static_cast<std::uint64_t>(q))) continue;
    for (const auto& tr : qr_search(q)) {
      const std::string name = "q=" + std::to_string(q) + ",s1=" + std::to_string(tr.sigma1) + ",s2=" +
                               std::to_string(tr.sigma2) + ",S=" + detail::join(tr.s_set);
      attempt(name, [&] { return qr_dsrg(q, tr.sigma1, tr.sigma2, tr.s_set); });
    }
  }

  for (std::size_t lam = 1; 4 * lam <= max_n; ++lam) {
    if (lam >= 2) attempt("lambda=" + std::to_string(lam) + ",even", [&] { return hobart_shaw(lam, Parity::even); });
    if (4 * lam + 2 <= max_n)
      attempt("lambda=" + std::to_string(lam) + ",odd", [&] { return hobart_shaw(lam, Parity::odd); });
  }
  for (std::size_t n = 3; 2 * n <= std::min(max_n, opts.max_scanned_group); ++n) {
    const GroupTable g = dihedral_group(n);
    for (const auto& hit : cayley_subset_scan(g, static_cast<std::size_t>(-1), opts.max_scanned_group)) {
      std::string name = "D" + std::to_string(2 * n) + ":";
      for (std::size_t i = 0; i < hit.conn.size(); ++i) name += (i ? "," : "") + g.name(hit.conn[i]);
      attempt(name, [&] {
        return detail::finish(Method::cayley, name, cayley_graph(CayleySpec(g, hit.conn)), hit.params);
      });
    }
  }

  // Kronecker expansions of everything so far with t = mu.
  const std::size_t base_count = results.size();
  for (std::size_t i = 0; i < base_count; ++i) {
    if (results[i].params.t != results[i].params.mu) continue;
    // Copied: attempt() appends to results.
    const ConstructionResult r = results[i];
    for (std::size_t m = 2; static_cast<std::size_t>(r.params.n) * m <= max_n; ++m) {
      const std::string name = std::string(to_string(r.method)) + "[" + r.input_descriptor + "],m=" + std::to_string(m);
      attempt(name, [&] { return kronecker_expand(r.adj, m, KronSide::right); });
    }
  }

  struct Candidate {
    IsoCertificate cert;
    CatalogEntry entry;
  };
  std::vector<Candidate> cands;
  cands.reserve(results.size());
  for (auto& r : results) {
    cat.methods[r.params].insert(to_string(r.method));
    IsoCertificate cert = canonical_form(r.adj, opts.iso_bound);
    CatalogEntry e{to_string(r.method), r.input_descriptor, r.params, cert.cert_hash, std::move(r.adj)};
    cands.push_back({std::move(cert), std::move(e)});
  }
  std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
    if (a.entry.params != b.entry.params) return a.entry.params < b.entry.params;
    if (a.cert.cert_hash != b.cert.cert_hash) return a.cert.cert_hash < b.cert.cert_hash;
    if (a.cert.canonical != b.cert.canonical) return a.cert.canonical < b.cert.canonical;
    if (a.entry.method != b.entry.method) return a.entry.method < b.entry.method;
    return a.entry.input < b.entry.input;
  });
  for (std::size_t i = 0; i < cands.size(); ++i) {
    if (i > 0 && cands[i].cert.canonical == cands[i - 1].cert.canonical) continue;
    cat.entries.push_back(std::move(cands[i].entry));
  }
  return cat;
}

inline std::string format_catalog(const Catalog& cat) {
  std::string out;
  for (const auto& e : cat.entries) {
    out += format_entry_header(e) + "\n";
    for (std::size_t i = 0; i < e.adj.order(); ++i) out += e.adj.row_string(i) + "\n";
    out += "\n";
  }
  return out;
}

/// Parses catalog text, re-verifying every record's parameters and hash.
inline std::vector<CatalogEntry> parse_catalog(const std::string& text, std::size_t iso_bound = kDefaultIsoBound) {
  std::vector<CatalogEntry> out;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& what) { return input_error("catalog line " + std::to_string(lineno) + ": " + what); };
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream hs(line);
    CatalogEntry e;
    std::string hash;
    if (!(hs >> e.method >> e.input >> e.params.n >> e.params.k >> e.params.t >> e.params.lambda >> e.params.mu >> hash))
      throw fail("malformed header");
    if (e.params.n < 1) throw fail("order must be positive");
    std::string body = std::to_string(e.params.n) + "\n";
    const std::size_t header_line = lineno;
    for (std::int64_t i = 0; i < e.params.n; ++i) {
      if (!std::getline(in, line)) throw fail("truncated matrix");
      ++lineno;
      body += line + "\n";
    }
    try {
      e.adj = parse_adj(body);
    } catch (const input_error& err) {
      throw input_error("catalog record at line " + std::to_string(header_line) + ": " + err.what());
    }
    const Verification v = verify_dsrg(e.adj);
    if (!v || v.params() != e.params)
      throw input_error("catalog record at line " + std::to_string(header_line) + ": adjacency does not verify as (" +
                        e.params.str() + ")");
    e.cert_hash = canonical_form(e.adj, iso_bound).cert_hash;
    if (hash_hex(e.cert_hash) != hash)
      throw input_error("catalog record at line " + std::to_string(header_line) + ": hash mismatch, stored " + hash +
                        ", recomputed " + hash_hex(e.cert_hash));
    out.push_back(std::move(e));
  }
  return out;
}

/// One row per parameter set. Methods are those of the class representatives.
inline std::vector<SummaryRow> summarize(const std::vector<CatalogEntry>& entries) {
  std::map<DsrgParams, SummaryRow> rows;
  for (const auto& e : entries) {
    SummaryRow& r = rows[e.params];
    r.params = e.params;
    ++r.classes;
    if (std::find(r.methods.begin(), r.methods.end(), e.method) == r.methods.end()) r.methods.push_back(e.method);
  }
  std::vector<SummaryRow> out;
  for (auto& [p, r] : rows) {
    std::sort(r.methods.begin(), r.methods.end());
    out.push_back(std::move(r));
  }
  return out;
}

/// As above, with methods taken from every construction that reached the parameter set.
inline std::vector<SummaryRow> summarize(const Catalog& cat) {
  auto rows = summarize(cat.entries);
  for (auto& r : rows) {
    auto it = cat.methods.find(r.params);
    if (it != cat.methods.end()) r.methods.assign(it->second.begin(), it->second.end());
  }
  return rows;
}

inline std::string format_summary(const std::vector<SummaryRow>& rows) {
  std::string out = "n k t lambda mu classes methods\n";
  for (const auto& r : rows) {
    out += r.params.str() + " " + std::to_string(r.classes) + " ";
    for (std::size_t i = 0; i < r.methods.size(); ++i) out += (i ? "," : "") + r.methods[i];
    out += "\n";
  }
  return out;
}

}  // namespace dsrg
