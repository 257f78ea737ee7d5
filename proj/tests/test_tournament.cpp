#include <gtest/gtest.h>

#include <set>

#include "dsrg/iso.hpp"
#include "dsrg/tournament.hpp"
#include "support.hpp"

namespace dsrg {
namespace {

IntMatrix ones_minus_identity(std::size_t n) { return to_int(complement_graph(BinMatrix(n))); }

TEST(CheckTournament, Basics) {
  const Tournament t = check_tournament(cycle_power(3, 1));
  EXPECT_TRUE(t.regular());
  EXPECT_EQ(t.valency(), 1u);
  const Tournament c = test::circ5();
  EXPECT_EQ(c.valency(), 2u);
  EXPECT_THROW(check_tournament(complement_graph(BinMatrix(3))), construction_error);
  EXPECT_THROW(check_tournament(BinMatrix(2)), construction_error);
  EXPECT_FALSE(is_tournament(BinMatrix::identity(1)));
}

TEST(CheckTournament, ErrorNamesPair) {
  try {
    check_tournament(complement_graph(BinMatrix(3)));
    FAIL();
  } catch (const construction_error& e) {
    EXPECT_NE(std::string(e.what()).find("(0,1)"), std::string::npos);
  }
}

TEST(CheckTournament, IrregularTournament) {
  // Transitive tournament on 3 vertices.
  const Tournament t = check_tournament(BinMatrix::from_rows({"011", "001", "000"}));
  EXPECT_FALSE(t.regular());
  EXPECT_FALSE(is_doubly_regular_tournament(t));
}

TEST(DoublyRegular, Examples) {
  EXPECT_EQ(is_doubly_regular_tournament(test::pi3()), 0u);
  EXPECT_EQ(is_doubly_regular_tournament(test::paley7()), 1u);
  EXPECT_FALSE(is_doubly_regular_tournament(test::circ5()));
  EXPECT_FALSE(is_doubly_regular_tournament(circulant_tournament(7, {1, 2, 3})));
  EXPECT_EQ(is_doubly_regular_tournament(paley_tournament(11)), 2u);
}

TEST(Circulant, Examples) {
  EXPECT_EQ(circulant_tournament(3, {1}).adj(), cycle_power(3, 1));
  EXPECT_EQ(circulant_tournament(7, {1, 2, 3}).adj(), prop1_matrix(7, Prop1Family::Pj, 0).adj);
  try {
    circulant_tournament(7, {2, 3, 4});
    FAIL();
  } catch (const input_error& e) {
    EXPECT_NE(std::string(e.what()).find("4"), std::string::npos);
  }
  EXPECT_THROW(circulant_tournament(5, {1}), input_error);
  EXPECT_THROW(circulant_tournament(5, {0, 1}), input_error);
  EXPECT_THROW(circulant_tournament(4, {1}), input_error);
}

TEST(Circulant, CommutesWithShift) {
  for (std::size_t n : {3u, 5u, 7u, 9u, 11u}) {
    for (const auto& nt : std::vector<std::vector<long long>>{{1, 2, 3, 4, 5}}) {
      std::vector<long long> conn(nt.begin(), nt.begin() + static_cast<long>((n - 1) / 2));
      const BinMatrix a = circulant_tournament(n, conn).adj();
      const BinMatrix pi = cycle_power(n, 1);
      EXPECT_EQ(product(a, pi), product(pi, a)) << n;
    }
  }
}

TEST(Paley, RequiresPrimeThreeModFour) {
  EXPECT_THROW(paley_tournament(5), input_error);
  EXPECT_THROW(paley_tournament(15), input_error);
  EXPECT_EQ(paley_tournament(7).adj(), circulant_tournament(7, {1, 2, 4}).adj());
}

TEST(Prop1, Families) {
  const auto p = prop1_matrix(5, Prop1Family::P);
  EXPECT_EQ(p.exponents, (std::vector<long long>{1, 3}));
  EXPECT_TRUE(p.valid);
  const auto p0 = prop1_matrix(5, Prop1Family::P0);
  EXPECT_EQ(p0.exponents, (std::vector<long long>{2, 4}));
  EXPECT_TRUE(p0.valid);
  const auto pj = prop1_matrix(7, Prop1Family::Pj, 1);
  EXPECT_EQ(pj.exponents, (std::vector<long long>{2, 3, 4}));
  EXPECT_FALSE(pj.valid);
  EXPECT_THROW(prop1_matrix(6, Prop1Family::P), input_error);
  EXPECT_THROW(prop1_matrix(7, Prop1Family::Pj, 4), input_error);
}

TEST(Enumerate, ClassCounts) {
  EXPECT_EQ(enumerate_regular_tournaments(1).size(), 1u);
  EXPECT_EQ(enumerate_regular_tournaments(3).size(), 1u);
  EXPECT_EQ(enumerate_regular_tournaments(5).size(), 1u);
  EXPECT_EQ(enumerate_regular_tournaments(7).size(), 3u);
  EXPECT_THROW(enumerate_regular_tournaments(4), input_error);
  EXPECT_THROW(enumerate_regular_tournaments(11), bound_error);
}

TEST(Enumerate, BruteForceOracleWithNaiveIsomorphism) {
  // All 2^10 and 2^21 orientations, classified by trying every relabeling.
  EXPECT_EQ(test::count_classes(test::all_labeled_regular_tournaments(5), test::naive_isomorphic), 1u);
  const auto seven = test::all_labeled_regular_tournaments(7);
  EXPECT_EQ(seven.size(), 2640u);  // labeled regular tournaments on 7 vertices
  EXPECT_EQ(test::count_classes(seven, test::naive_isomorphic), 3u);
}

TEST(Enumerate, RepresentativesAreDistinctAndCoverCirculants) {
  const auto reps = enumerate_regular_tournaments(7);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    EXPECT_TRUE(reps[i].regular());
    for (std::size_t j = i + 1; j < reps.size(); ++j) EXPECT_FALSE(are_isomorphic(reps[i].adj(), reps[j].adj()));
  }
  std::set<BinMatrix> canon;
  for (const auto& r : reps) canon.insert(canonical_form(r.adj()).canonical);
  for (const auto& conn : std::vector<std::vector<long long>>{{1, 2, 3}, {1, 2, 4}, {1, 5, 3}, {6, 5, 4}}) {
    EXPECT_TRUE(canon.count(canonical_form(circulant_tournament(7, conn).adj()).canonical));
  }
}

TEST(Enumerate, OrderNineCount) {
  // Fifteen regular tournaments of order 9 (standard count).
  EXPECT_EQ(enumerate_regular_tournaments(9).size(), 15u);
}

TEST(Team, FromDrtThreeCycle) {
  const BinMatrix d = team_from_drt(test::pi3());
  ASSERT_EQ(d.order(), 8u);
  const auto prof = is_doubly_regular_team(d);
  ASSERT_TRUE(prof);
  EXPECT_EQ(prof->k, 3u);
  EXPECT_EQ(prof->m, 4u);
  EXPECT_EQ(prof->r, 2u);
  EXPECT_EQ(prof->alpha, 1);
  EXPECT_EQ(prof->beta, 1);
  EXPECT_EQ(prof->gamma, 3);
}

TEST(Team, FromPaleySeven) {
  const auto prof = is_doubly_regular_team(team_from_drt(test::paley7()));
  ASSERT_TRUE(prof);
  EXPECT_EQ(prof->k, 7u);
  EXPECT_EQ(prof->m, 8u);
  EXPECT_THROW(team_from_drt(test::circ5()), construction_error);
}

TEST(Team, DrtTeamSquareIdentities) {
  for (const Tournament& t : {test::pi3(), test::paley7(), paley_tournament(11)}) {
    const std::int64_t l = static_cast<std::int64_t>(*t.doubly_regular_lambda());
    const BinMatrix d = team_from_drt(t);
    const std::size_t n = d.order();
    const IntMatrix di = to_int(d), dti = to_int(transpose(d));
    const IntMatrix sym = di + dti;
    const IntMatrix rest = ones_minus_identity(n) - sym;
    EXPECT_EQ(mat_mul_count(d, d), (2 * l + 1) * sym + (4 * l + 3) * rest);
    EXPECT_EQ(mat_mul_count(d, transpose(d)), (4 * l + 3) * to_int(BinMatrix::identity(n)) + (2 * l + 1) * sym);
  }
}

TEST(Team, Lem6TeamIdentity) {
  std::vector<Tournament> inputs{check_tournament(BinMatrix(1)), test::pi3(), test::circ5()};
  for (const auto& t : enumerate_regular_tournaments(7)) inputs.push_back(t);
  for (const auto& t : inputs) {
    const BinMatrix d = team_lem6(t);
    const auto h = static_cast<std::int64_t>(t.order());
    const IntMatrix lhs = mat_mul_count(d, d) + mat_mul_count(d, transpose(d)) + to_int(d) + to_int(transpose(d));
    EXPECT_EQ(lhs, h * to_int(BinMatrix::ones(d.order()))) << "h=" << h;
  }
  EXPECT_THROW(team_lem6(check_tournament(BinMatrix::from_rows({"011", "001", "000"}))), construction_error);
}

TEST(Team, DegenerateAndFailingProfiles) {
  // Singleton teams: a profile exists iff the tournament is doubly regular.
  const auto p = is_doubly_regular_team(test::paley7().adj());
  ASSERT_TRUE(p);
  EXPECT_EQ(p->r, 1u);
  EXPECT_EQ(p->gamma, 0);
  EXPECT_FALSE(is_doubly_regular_team(test::circ5().adj()));
  // Complement of 2K2 oriented with unequal out-degrees.
  EXPECT_FALSE(is_doubly_regular_team(BinMatrix::from_rows({"0011", "0011", "0000", "0000"})));
  EXPECT_FALSE(is_doubly_regular_team(BinMatrix::identity(2)));
}

TEST(Tournament, InvariantHoldsForEveryEnumeratedClass) {
  for (std::size_t n : {1u, 3u, 5u, 7u}) {
    for (const auto& t : enumerate_regular_tournaments(n)) {
      const IntMatrix s = to_int(t.adj()) + to_int(transpose(t.adj())) + to_int(BinMatrix::identity(n));
      EXPECT_EQ(s, to_int(BinMatrix::ones(n)));
      EXPECT_EQ(t.order(), 2 * *t.valency() + 1);
      if (auto l = t.doubly_regular_lambda()) {
        EXPECT_EQ(t.order(), 4 * *l + 3);
      }
    }
  }
}

}  // namespace
}  // namespace dsrg
