#include <gtest/gtest.h>

#include "oracles.hpp"
#include "twistrim/alexander.hpp"
#include "twistrim/group_engine.hpp"
#include "twistrim/wirtinger.hpp"

using namespace twistrim;

namespace {

bool abelianizes_to_z(const GroupPresentation& p) {
  const AbelianInvariants a = abelianization(p);
  return a.free_rank == 1 && a.torsion.empty();
}

LaurentPoly delta_of(const std::string& text) {
  return alexander_polynomial(knot_presentation(parse_knot(text)));
}

}  // namespace

TEST(WirtingerBraid, Trefoil) {
  const GroupPresentation p = wirtinger_from_braid(Braid{2, {1, 1, 1}});
  EXPECT_EQ(p.generator_count(), 3);
  EXPECT_EQ(p.relators.size(), 3u);
  EXPECT_EQ(p.meridian, 1);
  for (const auto& r : p.relators) EXPECT_TRUE(is_wirtinger_relator(r));
  EXPECT_TRUE(abelianizes_to_z(p));
  const GroupPresentation s = tietze_simplify(p);
  EXPECT_EQ(s.generator_count(), 2);
  ASSERT_EQ(s.relators.size(), 1u);
  EXPECT_EQ(s.relators[0].size(), 6u);
}

TEST(WirtingerBraid, Unknots) {
  const GroupPresentation one = wirtinger_from_braid(Braid{1, {}});
  EXPECT_EQ(one.generator_count(), 1);
  EXPECT_TRUE(one.relators.empty());
  const GroupPresentation kink = wirtinger_from_braid(Braid{2, {1}});
  EXPECT_TRUE(abelianizes_to_z(kink));
  EXPECT_TRUE(alexander_polynomial(kink).is_one());
}

TEST(WirtingerBraid, MultiComponentRejected) {
  EXPECT_THROW(wirtinger_from_braid(Braid{2, {1, 1}}), std::invalid_argument);
}

TEST(WirtingerPD, TrefoilMatchesBraid) {
  const GroupPresentation p =
      wirtinger_from_pd(parse_knot("pd((1,5,2,4),(3,1,4,6),(5,3,6,2))").as<PDCode>());
  EXPECT_EQ(p.generator_count(), 3);
  EXPECT_EQ(p.relators.size(), 3u);
  EXPECT_TRUE(abelianizes_to_z(p));
  EXPECT_TRUE(equal_up_to_units(alexander_polynomial(p),
                                alexander_polynomial(wirtinger_from_braid(torus_braid(2, 3)))));
}

TEST(WirtingerPD, FigureEight) {
  const GroupPresentation p = wirtinger_from_pd(
      parse_knot("pd((4,2,5,1),(8,6,1,5),(6,3,7,4),(2,7,3,8))").as<PDCode>());
  EXPECT_EQ(p.generator_count(), 4);
  EXPECT_EQ(p.relators.size(), 4u);
  EXPECT_EQ(alexander_polynomial(p), oracle::poly({1, -3, 1}));
}

TEST(WirtingerPD, Empty) {
  const GroupPresentation p = wirtinger_from_pd(PDCode{});
  EXPECT_EQ(p.generator_count(), 1);
  EXPECT_TRUE(p.relators.empty());
}

TEST(WirtingerPD, BadCodesRejected) {
  EXPECT_THROW(parse_knot("pd((1,2,3,4),(1,2,3,4))"), KnotSemanticError);
  // two disjoint Hopf-like pieces: a two-component diagram
  EXPECT_THROW(parse_knot("pd((1,3,2,4),(3,1,4,2))"), KnotSemanticError);
}

TEST(ConnectedSum, UnknotIsIdentity) {
  const GroupPresentation t = knot_presentation(KnotExpr::torus(2, 5));
  const GroupPresentation s = presentation_connected_sum(knot_presentation(KnotExpr::unknot()), t);
  EXPECT_EQ(alexander_polynomial(s), alexander_polynomial(t));
  EXPECT_TRUE(abelianizes_to_z(s));
}

TEST(ConnectedSum, TrefoilSquares) {
  const LaurentPoly f = oracle::poly({1, -1, 1});
  EXPECT_EQ(delta_of("T(2,3)#T(2,3)"), f * f);
  EXPECT_EQ(delta_of("T(2,3)#mirror(T(2,3))"), f * f);
  EXPECT_EQ(knot_presentation(parse_knot("T(2,3)#T(2,5)")).meridian, 1);
}

TEST(Mirror, PresentationLevel) {
  const GroupPresentation p = knot_presentation(parse_knot("braid(3; 1 1 1 2 -1 2)"));
  const GroupPresentation m = presentation_mirror(p);
  for (const auto& r : m.relators) EXPECT_TRUE(is_wirtinger_relator(r));
  EXPECT_TRUE(abelianizes_to_z(m));
  EXPECT_TRUE(equal_up_to_units(alexander_polynomial(m), alexander_polynomial(p).reflected()));
  // the mirror of a sum goes through presentation_mirror
  EXPECT_EQ(delta_of("mirror(T(2,3)#T(2,5))"), delta_of("T(2,3)#T(2,5)"));
}

TEST(Wirtinger, CorpusAbelianizesToZ) {
  for (const auto& k : oracle::corpus()) {
    const GroupPresentation p = knot_presentation(parse_knot(k.text));
    EXPECT_TRUE(abelianizes_to_z(p)) << k.name;
    for (const auto& r : p.relators) EXPECT_TRUE(is_wirtinger_relator(r)) << k.name;
  }
}

// Killing mu^2 gives pi1 of the double branched cover extended by Z/2, of
// order 2|Delta(-1)| for these two-bridge knots. Dropping any one relator
// must not change that group.
TEST(Wirtinger, OneRelatorIsRedundant) {
  for (const char* name : {"3_1", "3_1pd", "4_1", "4_1pd", "5_1", "5_2", "6_1", "6_2", "6_3"}) {
    const auto& k = *std::find_if(oracle::corpus().begin(), oracle::corpus().end(),
                                  [&](const oracle::CorpusKnot& c) { return c.name == name; });
    const GroupPresentation p = knot_presentation(parse_knot(k.text));
    const Integer det = abs(oracle::poly(k.alexander).evaluate(-1));
    for (std::size_t drop = 0; drop < p.relators.size(); ++drop) {
      GroupPresentation q = p;
      q.relators.erase(q.relators.begin() + static_cast<std::ptrdiff_t>(drop));
      q.relators.push_back(power({q.meridian}, 2));
      const CosetTable t = todd_coxeter(q, 200000);
      ASSERT_TRUE(t.complete()) << name;
      EXPECT_EQ(Integer(static_cast<unsigned long>(t.order)), 2 * det) << name << " drop " << drop;
    }
  }
}

TEST(Wirtinger, MeridianChoiceIndependence) {
  for (const auto& k : oracle::corpus()) {
    GroupPresentation p = knot_presentation(parse_knot(k.text));
    const LaurentPoly base = alexander_polynomial(p);
    for (int g = 1; g <= p.generator_count(); ++g) {
      p.meridian = g;
      EXPECT_EQ(alexander_polynomial(p), base) << k.name << " meridian " << g;
    }
  }
}
