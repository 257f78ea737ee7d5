#include <gtest/gtest.h>

#include <random>

#include "dsrg/construct.hpp"
#include "dsrg/iso.hpp"
#include "support.hpp"

namespace dsrg {
namespace {

using test::circ5;
using test::paley7;
using test::pi3;

TEST(DuvalBC, TableTwoExamples) {
  EXPECT_EQ(duval_B(pi3()).params, (DsrgParams{6, 2, 1, 0, 1}));
  EXPECT_EQ(duval_B(circ5()).params, (DsrgParams{10, 4, 2, 1, 2}));
  EXPECT_EQ(duval_B(paley7()).params, (DsrgParams{14, 6, 3, 2, 3}));
  EXPECT_EQ(duval_C(pi3()).params, (DsrgParams{6, 2, 1, 0, 1}));
  EXPECT_EQ(duval_C(paley7()).params, (DsrgParams{14, 6, 3, 2, 3}));
}

TEST(DuvalBC, RejectIrregularInput) {
  const Tournament transitive = check_tournament(BinMatrix::from_rows({"011", "001", "000"}));
  EXPECT_THROW(duval_B(transitive), construction_error);
  EXPECT_THROW(duval_C(check_tournament(BinMatrix(1))), construction_error);
}

TEST(MOf, Examples) {
  EXPECT_EQ(verify_dsrg(m_of(cycle_power(3, 1))).params(), (DsrgParams{6, 3, 2, 1, 2}));
  EXPECT_EQ(verify_dsrg(m_of(team_lem6(check_tournament(BinMatrix(1))))).params(), (DsrgParams{8, 3, 2, 1, 1}));
  EXPECT_EQ(m_of(BinMatrix(1)), BinMatrix::from_rows({"01", "10"}));
  EXPECT_THROW(m_of(BinMatrix::identity(2)), input_error);
}

TEST(MConstruction, TableTwoRightColumns) {
  EXPECT_EQ(m_construction(pi3()).params, (DsrgParams{6, 3, 2, 1, 2}));
  EXPECT_EQ(m_construction(circ5()).params, (DsrgParams{10, 5, 3, 2, 3}));
  EXPECT_EQ(m_construction(paley7()).params, (DsrgParams{14, 7, 4, 3, 4}));
}

TEST(WideTall, Examples) {
  EXPECT_EQ(wide_blocks(pi3(), 2).params, (DsrgParams{12, 4, 2, 0, 2}));
  EXPECT_EQ(tall_blocks(pi3(), 2).params, (DsrgParams{12, 4, 2, 0, 2}));
  EXPECT_EQ(wide_blocks(pi3(), 1).adj, duval_B(pi3()).adj);
  EXPECT_EQ(tall_blocks(pi3(), 1).adj, duval_C(pi3()).adj);
  EXPECT_EQ(wide_blocks(circ5(), 2).params, (DsrgParams{20, 8, 4, 2, 4}));
  EXPECT_THROW(wide_blocks(pi3(), 0), input_error);
}

TEST(WideTall, EqualsOnesKroneckerDuvalB) {
  for (std::size_t w = 1; w <= 3; ++w) {
    EXPECT_EQ(wide_blocks(circ5(), w).adj, kronecker(BinMatrix::ones(w), duval_B(circ5()).adj));
    EXPECT_EQ(tall_blocks(circ5(), w).adj, kronecker(BinMatrix::ones(w), duval_C(circ5()).adj));
  }
}

TEST(Lem5, Examples) {
  EXPECT_EQ(lem5_dsrg(pi3()).params, (DsrgParams{16, 7, 4, 3, 3}));
  EXPECT_EQ(lem5_dsrg(paley7()).params, (DsrgParams{32, 15, 8, 7, 7}));
  EXPECT_EQ(lem5_dsrg(paley_tournament(11)).params, (DsrgParams{48, 23, 12, 11, 11}));
  EXPECT_THROW(lem5_dsrg(circ5()), construction_error);
}

TEST(Lem6, Examples) {
  EXPECT_EQ(lem6_dsrg(check_tournament(BinMatrix(1))).params, (DsrgParams{8, 3, 2, 1, 1}));
  EXPECT_EQ(lem6_dsrg(pi3()).params, (DsrgParams{16, 7, 4, 3, 3}));
  EXPECT_EQ(lem6_dsrg(circ5()).params, (DsrgParams{24, 11, 6, 5, 5}));
  for (const auto& t : enumerate_regular_tournaments(7)) EXPECT_EQ(lem6_dsrg(t).params, (DsrgParams{32, 15, 8, 7, 7}));
}

TEST(Lem7, Examples) {
  EXPECT_EQ(lem7_dsrg(1).params, (DsrgParams{8, 3, 2, 1, 1}));
  EXPECT_EQ(lem7_dsrg(2).params, (DsrgParams{12, 5, 3, 2, 2}));
  EXPECT_EQ(lem7_dsrg(4).params, (DsrgParams{20, 9, 5, 4, 4}));
  EXPECT_EQ(lem7_base(2), sum(cycle_power(6, 1), cycle_power(6, 2)));
  EXPECT_THROW(lem7_dsrg(0), input_error);
}

TEST(Qr, ReproducesTenVertexFixture) {
  const auto r = qr_dsrg(5, 2, 3, {1, 4});
  EXPECT_EQ(r.params, (DsrgParams{10, 4, 2, 1, 2}));
  EXPECT_EQ(r.adj, test::fixture_10());
}

TEST(Qr, NamedFailures) {
  auto message = [](auto f) {
    try {
      f();
    } catch (const construction_error& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  EXPECT_NE(message([] { qr_dsrg(5, 2, 3, {1, 2}); }).find("difference-partition failure"), std::string::npos);
  EXPECT_NE(message([] { qr_dsrg(5, 2, 2, {1, 4}); }).find("inverse failure"), std::string::npos);
  EXPECT_NE(message([] { qr_dsrg(5, 4, 4, {1, 4}); }).find("non-residue failure"), std::string::npos);
  EXPECT_THROW(qr_dsrg(7, 3, 5, {1, 2, 4}), input_error);
}

TEST(Qr, SearchResults) {
  const auto five = qr_search(5);
  ASSERT_FALSE(five.empty());
  EXPECT_EQ(five.front(), (QrTriple{2, 3, {1, 4}}));
  EXPECT_EQ(five.size(), 4u);
  EXPECT_THROW(qr_search(7), input_error);
  EXPECT_THROW(qr_search(37), bound_error);
  const auto thirteen = qr_search(13);
  ASSERT_FALSE(thirteen.empty());
  for (const auto& tr : thirteen) EXPECT_EQ(qr_dsrg(13, tr.sigma1, tr.sigma2, tr.s_set).params, (DsrgParams{26, 12, 6, 5, 6}));
}

TEST(Qr, DifferencePartitionSetsAreResiduesOrNonResidues) {
  // Residues and non-residues always qualify; at q = 5 and 13 they are the only sets.
  for (long long q : {5LL, 13LL}) {
    const auto sets = detail::difference_partition_sets(q);
    ASSERT_EQ(sets.size(), 2u) << q;
    EXPECT_EQ(sets[0], detail::quadratic_residues(q));
  }
  EXPECT_GE(detail::difference_partition_sets(17).size(), 2u);
}

TEST(Qr, DiagonalBlocksAreSymmetricResidueMatrix) {
  for (long long q : {5LL, 13LL, 17LL}) {
    const auto tr = qr_search(q).front();
    const BinMatrix a = qr_dsrg(q, tr.sigma1, tr.sigma2, tr.s_set).adj;
    const BinMatrix res = residue_matrix(static_cast<std::size_t>(q));
    EXPECT_EQ(transpose(res), res);
    const auto qq = static_cast<std::size_t>(q);
    for (std::size_t i = 0; i < qq; ++i)
      for (std::size_t j = 0; j < qq; ++j) {
        ASSERT_EQ(a(i, j), res(i, j));
        ASSERT_EQ(a(qq + i, qq + j), res(i, j));
      }
  }
}

TEST(Pq, ReproducesFourteenVertexFixture) {
  const Tournament q = circulant_tournament(7, {1, 2, 3});
  const Perm reversal({0, 6, 5, 4, 3, 2, 1});
  const auto r = pq_dsrg(q, reversal);
  EXPECT_EQ(r.params, (DsrgParams{14, 6, 3, 2, 3}));
  EXPECT_TRUE(are_isomorphic(r.adj, test::fixture_14()));
}

TEST(Pq, Examples) {
  EXPECT_THROW(pq_dsrg(pi3(), Perm::identity(3)), construction_error);
  EXPECT_EQ(pq_dsrg(circ5(), Perm({0, 4, 3, 2, 1})).params, (DsrgParams{10, 4, 2, 1, 2}));
  EXPECT_THROW(pq_dsrg(circ5(), Perm({1, 2, 3, 4, 0})), input_error);
}

TEST(Pq, SearchExamples) {
  auto contains = [](const std::vector<Perm>& ps, const Perm& p) { return std::find(ps.begin(), ps.end(), p) != ps.end(); };
  EXPECT_TRUE(contains(pq_search(circ5()), Perm({0, 4, 3, 2, 1})));
  EXPECT_TRUE(contains(pq_search(pi3()), Perm({0, 2, 1})));
  EXPECT_TRUE(contains(pq_search(check_tournament(BinMatrix(1))), Perm::identity(1)));
  for (const Perm& p : pq_search(paley7())) EXPECT_EQ(pq_dsrg(paley7(), p).params, (DsrgParams{14, 6, 3, 2, 3}));
  EXPECT_THROW(pq_search(paley_tournament(19)), bound_error);
}

TEST(Kron, Examples) {
  const auto b = duval_B(pi3());
  const auto left = kronecker_expand(b.adj, 2, KronSide::left);
  EXPECT_EQ(left.params, (DsrgParams{12, 4, 2, 0, 2}));
  EXPECT_EQ(left.adj, wide_blocks(pi3(), 2).adj);
  EXPECT_TRUE(are_isomorphic(kronecker_expand(b.adj, 2, KronSide::right).adj, left.adj));
  EXPECT_EQ(kronecker_expand(b.adj, 3, KronSide::right).params, (DsrgParams{18, 6, 3, 0, 3}));
  try {
    kronecker_expand(test::fixture_8(), 2, KronSide::left);
    FAIL();
  } catch (const construction_error& e) {
    EXPECT_NE(std::string(e.what()).find("iff t=mu"), std::string::npos);
  }
  EXPECT_THROW(kronecker_expand(b.adj, 1, KronSide::left), input_error);
}

TEST(Construct, EveryOutputIsFeasible) {
  std::vector<ConstructionResult> all;
  for (std::size_t n : {3u, 5u, 7u}) {
    for (const auto& t : enumerate_regular_tournaments(n)) {
      all.push_back(duval_B(t));
      all.push_back(duval_C(t));
      all.push_back(m_construction(t));
      all.push_back(wide_blocks(t, 2));
      all.push_back(lem6_dsrg(t));
      if (is_doubly_regular_tournament(t)) all.push_back(lem5_dsrg(t));
    }
  }
  for (std::size_t s = 1; s <= 5; ++s) all.push_back(lem7_dsrg(s));
  for (const auto& r : all) {
    EXPECT_TRUE(duval_feasible(r.params).feasible) << to_string(r.method) << " " << r.params.str();
    EXPECT_EQ(verify_dsrg(r.adj).params(), r.params);
  }
}

TEST(Construct, ComplementDuality) {
  for (std::size_t n : {3u, 5u, 7u, 9u}) {
    for (const auto& t : enumerate_regular_tournaments(n)) {
      EXPECT_TRUE(are_isomorphic(m_construction(t).adj, complement_graph(duval_B(t).adj))) << n;
    }
  }
}

TEST(Construct, WellDefinedUnderRelabeling) {
  std::mt19937 rng(1234);
  for (std::size_t n : {3u, 5u, 7u, 9u}) {
    for (const auto& t : enumerate_regular_tournaments(n)) {
      const Tournament u = check_tournament(conjugate_by_perm(t.adj(), test::random_perm(n, rng)));
      EXPECT_TRUE(are_isomorphic(duval_B(t).adj, duval_B(u).adj));
      EXPECT_TRUE(are_isomorphic(duval_C(t).adj, duval_C(u).adj));
      EXPECT_TRUE(are_isomorphic(m_construction(t).adj, m_construction(u).adj));
      EXPECT_TRUE(are_isomorphic(lem6_dsrg(t).adj, lem6_dsrg(u).adj));
      if (n <= 5) {
        EXPECT_TRUE(are_isomorphic(wide_blocks(t, 2).adj, wide_blocks(u, 2).adj));
      }
    }
  }
}

}  // namespace
}  // namespace dsrg
