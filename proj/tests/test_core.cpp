#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace reslat;
using namespace fixtures;

TEST(SmallSet, BasicOperations) {
  ElementSet s{0, 3, 5};
  EXPECT_EQ(s.size(), 3u);
  EXPECT_TRUE(s.contains(3));
  EXPECT_FALSE(s.contains(4));
  EXPECT_EQ(s.first(), 0u);
  EXPECT_EQ(s.members(), (std::vector<std::size_t>{0, 3, 5}));
  EXPECT_TRUE(ElementSet({3}).subset_of(s));
  EXPECT_EQ((s - ElementSet{0}).members(), (std::vector<std::size_t>{3, 5}));
  EXPECT_EQ(ElementSet::range(64).size(), 64u);
  EXPECT_EQ(ElementSet::range(0).size(), 0u);
}

TEST(Validate, BundledExamplesAreResiduated) {
  EXPECT_TRUE(validate_axioms(a6().tables()).valid());
  EXPECT_TRUE(validate_axioms(a8().tables()).valid());
  EXPECT_EQ(a6().size(), 6u);
  EXPECT_EQ(a8().size(), 8u);
}

TEST(Validate, TwoElementChain) {
  auto l = godel_chain(2);
  EXPECT_TRUE(validate_axioms(l.tables()).valid());
  EXPECT_EQ(l.imp(1, 0), 0u);
  EXPECT_EQ(l.imp(0, 0), 1u);
}

TEST(Validate, BrokenProductReportsLeastAdjointnessWitness) {
  LatticeTables t = a6().tables();
  const Element a = el(a6(), "a"), c = el(a6(), "c"), zero = el(a6(), "0");
  t.odot[a][c] = a;
  t.odot[c][a] = a;
  auto r = validate_axioms(t);
  ASSERT_FALSE(r.valid());
  const Violation* v = r.find("adjointness");
  ASSERT_NE(v, nullptr);
  EXPECT_EQ(v->witness, (std::vector<Element>{a, c, zero}));
  EXPECT_THROW(ResiduatedLattice::from_tables(t), AxiomError);
}

TEST(Validate, AsymmetricEditBreaksCommutativity) {
  LatticeTables t = a6().tables();
  t.odot[el(a6(), "a")][el(a6(), "c")] = el(a6(), "a");
  auto r = validate_axioms(t);
  ASSERT_NE(r.find("odot.commutative"), nullptr);
  EXPECT_EQ(r.find("odot.commutative")->witness, (std::vector<Element>{el(a6(), "a"), el(a6(), "c")}));
}

TEST(Validate, ShapeErrorsAreStructural) {
  LatticeTables t = a6().tables();
  t.odot.pop_back();
  EXPECT_THROW(validate_axioms(t), StructuralError);
  t = a6().tables();
  t.imp[0][0] = 17;
  EXPECT_THROW(validate_axioms(t), StructuralError);
}

TEST(Residuum, KnownValues) {
  const auto& l = a6();
  EXPECT_EQ(l.imp(el(l, "b"), el(l, "c")), el(l, "c"));
  EXPECT_EQ(l.neg(el(l, "a")), el(l, "c"));
  for (Element x = 0; x < l.size(); ++x) {
    EXPECT_EQ(l.imp(l.top(), x), x);
    EXPECT_EQ(l.imp(l.bottom(), x), l.top());
    EXPECT_EQ(l.imp(x, x), l.top());
  }
}

TEST(Residuum, DerivedTableMatchesStored) {
  for (const auto& l : corpus(5)) {
    const auto& t = l.tables();
    EXPECT_EQ(derive_residuum(t.leq, t.join, t.odot), t.imp);
  }
}

// Over every commutative product on the 2x2 Boolean lattice with 1 as unit
// and 0 absorbing, derive_residuum fails exactly when some {a | x.a <= y}
// has no greatest element.
TEST(Residuum, MissingMaximumIsReported) {
  auto b = boolean4();
  const auto& t = b.tables();
  std::size_t throws = 0;
  for (Element aa = 0; aa < 4; ++aa)
    for (Element ab = 0; ab < 4; ++ab)
      for (Element bb = 0; bb < 4; ++bb) {
        Table<Element> odot = t.odot;
        odot[1][1] = aa;
        odot[1][2] = odot[2][1] = ab;
        odot[2][2] = bb;
        bool expect_fail = false;
        for (Element x = 0; x < 4; ++x)
          for (Element y = 0; y < 4; ++y) {
            std::optional<Element> best;
            for (Element a = 0; a < 4; ++a)
              if (t.leq[odot[x][a]][y] && (!best || t.leq[*best][a])) best = a;
            bool all_below = true;
            for (Element a = 0; a < 4; ++a)
              if (t.leq[odot[x][a]][y] && !t.leq[a][*best]) all_below = false;
            if (!all_below) expect_fail = true;
          }
        if (expect_fail) {
          ++throws;
          EXPECT_THROW(derive_residuum(t.leq, t.join, odot), ResiduumError);
        } else {
          EXPECT_NO_THROW(derive_residuum(t.leq, t.join, odot));
        }
      }
  EXPECT_GT(throws, 0u);
}

TEST(LatticeOps, RejectsNonLattice) {
  // two incomparable tops
  Table<bool> leq = {{true, true, true}, {false, true, false}, {false, false, true}};
  EXPECT_THROW(lattice_ops_from_order(leq), StructuralError);
}

TEST(LatticeOps, CoversGiveOrder) {
  auto leq = order_from_covers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  EXPECT_TRUE(leq[0][3]);
  EXPECT_FALSE(leq[1][2]);
  auto ops = lattice_ops_from_order(leq);
  EXPECT_EQ(ops.join[1][2], 3u);
  EXPECT_EQ(ops.meet[1][2], 0u);
  EXPECT_EQ(ops.bottom, 0u);
  EXPECT_EQ(ops.top, 3u);
}

TEST(Lattice, UpDownAndCovers) {
  const auto& l = a6();
  EXPECT_EQ(l.format(l.up(el(l, "b"))), "{b,d,1}");
  EXPECT_EQ(l.format(l.down(el(l, "d"))), "{0,a,b,c,d}");
  EXPECT_EQ(l.format(l.upper_covers(l.bottom())), "{a,c}");
  EXPECT_EQ(l.format(l.lower_covers(el(l, "d"))), "{b,c}");
  EXPECT_EQ(l.format(l.up_closure(set_of(l, {"a", "c"}))), "{a,b,c,d,1}");
}

TEST(Lattice, DerivedLawsOnCorpus) {
  for (const auto& l : corpus(5)) {
    auto r = validate_axioms(l.tables());
    EXPECT_TRUE(r.valid());
    for (Element x = 0; x < l.size(); ++x)
      for (Element y = 0; y < l.size(); ++y) {
        EXPECT_TRUE(l.leq(l.odot(x, y), l.meet(x, y)));
        EXPECT_TRUE(l.leq(l.odot(x, l.imp(x, y)), y));
      }
  }
}

TEST(BooleanCenter, Examples) {
  EXPECT_EQ(boolean_center(boolean4()).size(), 4u);
  EXPECT_EQ(a6().format(boolean_center(a6())), "{0,1}");
  EXPECT_EQ(boolean_center(lukasiewicz_chain(4)).size(), 2u);
  EXPECT_EQ(boolean_center(godel_chain(1)).size(), 1u);
}
