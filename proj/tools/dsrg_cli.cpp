// Command-line front end: construct, verify, enumerate and classify DSRGs.
//
// Exit codes: 0 success, 1 semantic failure (construction rejected, not a DSRG),
// 2 input error (bad file, bad arguments, bound exceeded).

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "dsrg/catalog.hpp"
#include "dsrg/construct.hpp"
#include "dsrg/group.hpp"
#include "dsrg/io.hpp"
#include "dsrg/iso.hpp"
#include "dsrg/params.hpp"
#include "dsrg/tournament.hpp"

namespace {

using namespace dsrg;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t at = s.find(sep, pos);
    out.push_back(s.substr(pos, at - pos));
    if (at == std::string::npos) break;
    pos = at + 1;
  }
  return out;
}

long long parse_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::logic_error&) {
    throw input_error("invalid integer '" + s + "' in " + what);
  }
}

std::vector<long long> parse_int_list(const std::string& s, const std::string& what) {
  std::vector<long long> out;
  if (s.empty()) return out;
  for (const auto& part : split(s, ',')) out.push_back(parse_int(part, what));
  return out;
}

/// circulant:n:a,b,...  paley:q  enum:n:i  file:path
Tournament parse_tournament(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw input_error("tournament spec '" + spec + "' has no kind prefix");
  const std::string kind = spec.substr(0, colon), rest = spec.substr(colon + 1);
  if (kind == "file") return check_tournament(read_adj(rest));
  const auto parts = split(rest, ':');
  if (kind == "circulant" && parts.size() == 2) {
    const long long n = parse_int(parts[0], spec);
    if (n < 1) throw input_error("circulant order must be positive");
    return circulant_tournament(static_cast<std::size_t>(n), parse_int_list(parts[1], spec));
  }
  if (kind == "paley" && parts.size() == 1) {
    const long long q = parse_int(parts[0], spec);
    if (q < 3) throw input_error("paley order must be at least 3");
    return paley_tournament(static_cast<std::size_t>(q));
  }
  if (kind == "enum" && parts.size() == 2) {
    const long long n = parse_int(parts[0], spec), i = parse_int(parts[1], spec);
    if (n < 1) throw input_error("enumeration order must be positive");
    auto reps = enumerate_regular_tournaments(static_cast<std::size_t>(n));
    if (i < 0 || static_cast<std::size_t>(i) >= reps.size())
      throw input_error("enum index " + std::to_string(i) + " out of range (" + std::to_string(reps.size()) + " classes)");
    return reps[static_cast<std::size_t>(i)];
  }
  throw input_error("unrecognised tournament spec '" + spec + "'");
}

/// Zn, Dm (dihedral of order m), Sn, and products joined by 'x', e.g. Z2xZ4.
GroupTable parse_group(const std::string& spec) {
  const auto factors = split(spec, 'x');
  std::optional<GroupTable> g;
  for (const auto& f : factors) {
    if (f.size() < 2) throw input_error("unrecognised group '" + f + "'");
    const long long n = parse_int(f.substr(1), "group " + spec);
    if (n < 1) throw input_error("group size must be positive in '" + f + "'");
    GroupTable h = [&] {
      switch (f[0]) {
        case 'Z': return cyclic_group(static_cast<std::size_t>(n));
        case 'D':
          if (n % 2 != 0) throw input_error("dihedral group order must be even in '" + f + "'");
          return dihedral_group(static_cast<std::size_t>(n / 2));
        case 'S': return symmetric_group(static_cast<std::size_t>(n));
        default: throw input_error("unrecognised group '" + f + "'");
      }
    }();
    g = g ? direct_product(*g, h) : std::move(h);
  }
  return *g;
}

std::string conn_names(const GroupTable& g, const std::vector<std::size_t>& conn) {
  std::string s;
  for (std::size_t i = 0; i < conn.size(); ++i) s += (i ? "," : "") + g.name(conn[i]);
  return s;
}

struct Options {
  std::optional<std::size_t> bound;
  long long seed = 0;
  std::string out;

  // construct
  std::string method;
  std::string tournament;
  std::string input;
  std::string group;
  std::string conn;
  std::string perm;
  std::string s_set;
  std::string parity = "odd";
  std::string side = "right";
  long long s = 0, w = 2, m = 2, q = 0, sigma1 = 0, sigma2 = 0, lambda = 0;

  // verify / classify
  std::vector<std::string> paths;

  // feasible / catalog / tournaments / scans
  long long max_n = 0;
  long long order = 0;
  long long max_results = 1000;
  long long max_order = 9;

  std::size_t iso_bound() const { return bound.value_or(kDefaultIsoBound); }
};

void emit(const Options& o, const ConstructionResult& r) {
  if (!o.out.empty()) write_adj(o.out, r.adj);
  std::cout << r.params.str() << "\n";
}

int cmd_construct(const Options& o) {
  auto tour = [&] {
    if (o.tournament.empty()) throw input_error("--tournament is required for " + o.method);
    return parse_tournament(o.tournament);
  };
  auto positive = [](long long v, const char* name) {
    if (v < 1) throw input_error(std::string("--") + name + " must be at least 1");
    return static_cast<std::size_t>(v);
  };
  const std::string& m = o.method;
  if (m == "duval-b") return emit(o, duval_B(tour())), 0;
  if (m == "duval-c") return emit(o, duval_C(tour())), 0;
  if (m == "m") return emit(o, m_construction(tour())), 0;
  if (m == "wide") return emit(o, wide_blocks(tour(), positive(o.w, "w"))), 0;
  if (m == "tall") return emit(o, tall_blocks(tour(), positive(o.w, "w"))), 0;
  if (m == "lem5") return emit(o, lem5_dsrg(tour())), 0;
  if (m == "lem6") return emit(o, lem6_dsrg(tour())), 0;
  if (m == "lem7") return emit(o, lem7_dsrg(positive(o.s, "s"))), 0;
  if (m == "qr") return emit(o, qr_dsrg(o.q, o.sigma1, o.sigma2, parse_int_list(o.s_set, "--S"))), 0;
  if (m == "pq") {
    const Tournament t = tour();
    std::vector<std::size_t> img;
    for (long long v : parse_int_list(o.perm, "--perm")) {
      if (v < 0) throw input_error("--perm entries must be non-negative");
      img.push_back(static_cast<std::size_t>(v));
    }
    return emit(o, pq_dsrg(t, Perm(img))), 0;
  }
  if (m == "kron") {
    if (o.input.empty()) throw input_error("--input is required for kron");
    if (o.side != "left" && o.side != "right") throw input_error("--side must be left or right");
    return emit(o, kronecker_expand(read_adj(o.input), positive(o.m, "m"),
                                    o.side == "left" ? KronSide::left : KronSide::right)),
           0;
  }
  if (m == "hobart-shaw") {
    if (o.parity != "even" && o.parity != "odd") throw input_error("--parity must be even or odd");
    return emit(o, hobart_shaw(positive(o.lambda, "lambda"), o.parity == "even" ? Parity::even : Parity::odd)), 0;
  }
  if (m == "cayley") {
    if (o.group.empty()) throw input_error("--group is required for cayley");
    const GroupTable g = parse_group(o.group);
    std::vector<std::size_t> conn;
    for (const auto& name : split(o.conn, ',')) {
      auto idx = find_element(g, name);
      if (!idx) throw input_error("no element named '" + name + "' in " + o.group);
      conn.push_back(*idx);
    }
    const BinMatrix a = cayley_graph(CayleySpec(g, conn));
    const Verification v = verify_dsrg(a);
    if (!v) throw construction_error("cayley graph is not a DSRG: " + v.failure().message());
    return emit(o, ConstructionResult{Method::cayley, o.group, a, v.params()}), 0;
  }
  throw input_error("unknown construction method '" + m + "'");
}

int cmd_verify(const Options& o) {
  const BinMatrix a = read_adj(o.paths.at(0));
  const Verification v = verify_dsrg(a);
  if (!v) {
    std::cout << v.failure().message() << "\n";
    return 1;
  }
  std::cout << v.params().str() << " " << to_string(v.params().classification()) << "\n";
  return 0;
}

int cmd_feasible(const Options& o) {
  if (o.max_n > 10000) throw input_error("feasible: max_n must be at most 10000");
  if (o.max_n < 1) return 0;
  for (const auto& p : enumerate_feasible(o.max_n)) std::cout << p.str() << "\n";
  return 0;
}

int cmd_classify(const Options& o) {
  std::vector<BinMatrix> graphs;
  for (const auto& p : o.paths) graphs.push_back(read_adj(p));
  const auto classes = classify(graphs, o.iso_bound());
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const auto cert = canonical_form(graphs[classes[c].front()], o.iso_bound());
    std::cout << "class " << c << " " << hash_hex(cert.cert_hash) << " n=" << cert.order << ":";
    for (auto i : classes[c]) std::cout << " " << o.paths[i];
    std::cout << "\n";
  }
  return 0;
}

int cmd_catalog(const Options& o) {
  if (o.max_n < 1) throw input_error("catalog: --max-n must be positive");
  CatalogOptions opts;
  opts.max_n = static_cast<std::size_t>(o.max_n);
  opts.iso_bound = o.iso_bound();
  const Catalog cat = generate_catalog(opts);
  if (!o.out.empty()) write_text(o.out, format_catalog(cat));
  std::cout << format_summary(summarize(cat));
  for (const auto& e : cat.errors) std::cerr << "error: " << e << "\n";
  return cat.errors.empty() ? 0 : 1;
}

int cmd_tournaments(const Options& o) {
  if (o.order < 1) throw input_error("tournaments: --order must be positive");
  if (o.max_order < 1) throw input_error("tournaments: --max-order must be positive");
  const auto reps = enumerate_regular_tournaments(static_cast<std::size_t>(o.order),
                                                  EnumerationOptions{static_cast<std::size_t>(o.max_order)});
  std::string text;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    const auto drt = is_doubly_regular_tournament(reps[i]);
    std::cout << "enum:" << o.order << ":" << i << " " << hash_hex(matrix_hash(reps[i].adj()))
              << (drt ? " doubly-regular" : "") << "\n";
    text += format_adj(reps[i].adj()) + "\n";
  }
  if (!o.out.empty()) write_text(o.out, text);
  std::cout << "classes: " << reps.size() << "\n";
  return 0;
}

int cmd_cayley_scan(const Options& o) {
  if (o.max_results < 0) throw input_error("cayley-scan: --max must be non-negative");
  const GroupTable g = parse_group(o.group);
  const auto hits = cayley_subset_scan(g, static_cast<std::size_t>(o.max_results),
                                       o.bound.value_or(kDefaultCayleyScanBound));
  for (const auto& h : hits) std::cout << conn_names(g, h.conn) << " " << h.params.str() << "\n";
  std::cout << "hits: " << hits.size() << (g.abelian() ? " (abelian group)" : "") << "\n";
  return 0;
}

int cmd_qr_search(const Options& o) {
  const auto bound = o.bound ? static_cast<long long>(*o.bound) : kDefaultQrBound;
  for (const auto& tr : qr_search(o.q, bound)) {
    std::cout << "sigma1=" << tr.sigma1 << " sigma2=" << tr.sigma2 << " S=";
    for (std::size_t i = 0; i < tr.s_set.size(); ++i) std::cout << (i ? "," : "") << tr.s_set[i];
    std::cout << "\n";
  }
  return 0;
}

int cmd_pq_search(const Options& o) {
  const Tournament t = parse_tournament(o.tournament);
  const std::size_t bound = o.bound.value_or(kDefaultPqBound);
  const auto perms = pq_search(t, bound);
  for (const auto& p : perms) {
    std::cout << "P=";
    for (std::size_t i = 0; i < p.size(); ++i) std::cout << (i ? "," : "") << p(i);
    std::cout << "\n";
  }
  std::cout << "involutions: " << perms.size() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Directed strongly regular graph toolkit"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--bound", o.bound, "order limit for isomorphism and search routines");
  app.add_option("--seed", o.seed, "reserved; exhaustive routines ignore it");

  auto* construct = app.add_subcommand("construct", "build a DSRG and print its parameters");
  construct->add_option("method", o.method,
                        "duval-b, duval-c, m, wide, tall, lem5, lem6, lem7, qr, pq, kron, hobart-shaw, cayley")
      ->required();
  construct->add_option("--tournament", o.tournament, "circulant:n:a,b,..  paley:q  enum:n:i  file:path");
  construct->add_option("--input", o.input, ".adj input for kron");
  construct->add_option("--s", o.s, "lem7 size parameter");
  construct->add_option("--w", o.w, "block width for wide/tall");
  construct->add_option("--m", o.m, "kron multiplicity");
  construct->add_option("--side", o.side, "kron side: left (J (x) A) or right (A (x) J)");
  construct->add_option("--q", o.q, "prime modulus for qr");
  construct->add_option("--sigma1", o.sigma1, "qr sigma1");
  construct->add_option("--sigma2", o.sigma2, "qr sigma2");
  construct->add_option("--S", o.s_set, "qr support set, comma separated");
  construct->add_option("--perm", o.perm, "pq involution as an image list");
  construct->add_option("--lambda", o.lambda, "hobart-shaw lambda");
  construct->add_option("--parity", o.parity, "hobart-shaw parity: even or odd");
  construct->add_option("--group", o.group, "cayley group: Zn, Dm, Sn, products with x");
  construct->add_option("--conn", o.conn, "cayley connection set by element names");
  construct->add_option("-o", o.out, "output .adj path");

  auto* verify = app.add_subcommand("verify", "check an .adj file against the DSRG equations");
  verify->add_option("path", o.paths, "adjacency file")->required()->expected(1);

  auto* feasible = app.add_subcommand("feasible", "list feasible genuine parameter sets");
  feasible->add_option("max_n", o.max_n, "largest order")->required();

  auto* classify_cmd = app.add_subcommand("classify", "group .adj files into isomorphism classes");
  classify_cmd->add_option("paths", o.paths, "adjacency files")->required();

  auto* catalog = app.add_subcommand("catalog", "run every construction and tabulate the classes");
  catalog->add_option("--max-n", o.max_n, "largest order")->default_val(48);
  catalog->add_option("-o", o.out, "catalog output path");

  auto* tournaments = app.add_subcommand("tournaments", "enumerate regular tournaments up to isomorphism");
  tournaments->add_option("--order", o.order, "tournament order")->required();
  tournaments->add_option("--max-order", o.max_order, "refuse orders above this")->default_val(9);
  tournaments->add_option("-o", o.out, "write the representatives as concatenated .adj blocks");

  auto* cayley_scan = app.add_subcommand("cayley-scan", "exhaustive connection-set scan on a group");
  cayley_scan->add_option("--group", o.group, "Zn, Dm, Sn, products with x")->required();
  cayley_scan->add_option("--max", o.max_results, "stop after this many hits");

  auto* qr = app.add_subcommand("qr-search", "list valid quadratic residue triples");
  qr->add_option("q", o.q, "prime q = 1 mod 4")->required();

  auto* pq = app.add_subcommand("pq-search", "list involutions P with PQ symmetric");
  pq->add_option("--tournament", o.tournament, "tournament spec")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*construct) return cmd_construct(o);
    if (*verify) return cmd_verify(o);
    if (*feasible) return cmd_feasible(o);
    if (*classify_cmd) return cmd_classify(o);
    if (*catalog) return cmd_catalog(o);
    if (*tournaments) return cmd_tournaments(o);
    if (*cayley_scan) return cmd_cayley_scan(o);
    if (*qr) return cmd_qr_search(o);
    if (*pq) return cmd_pq_search(o);
  } catch (const construction_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
