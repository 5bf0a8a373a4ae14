#include <gtest/gtest.h>

#include "oracle.hpp"
#include "ocnet/lattice.hpp"
#include "ocnet/netgen.hpp"
#include "ocnet/next_closure.hpp"
#include "ocnet/ortho_closure.hpp"
#include "support.hpp"

using namespace ocnet;
using testing_support::net_fixture;
using testing_support::poset_fixture;

namespace {

std::vector<std::vector<std::string>> family_labels(const Poset& p, std::vector<ElementSet> family) {
  sort_canonical(family);
  std::vector<std::vector<std::string>> out;
  for (const auto& s : family) {
    std::vector<std::string> labels;
    for (auto x : s.members()) labels.push_back(p.label(x));
    out.push_back(labels);
  }
  return out;
}

AbstractLattice hexagon() {
  // 0 < a < b < 1, 0 < b' < a' < 1: orthocomplemented, not orthomodular.
  return AbstractLattice::from_pairs({"zero", "a", "b", "bc", "ac", "one"},
                                     {{0, 1}, {1, 2}, {2, 5}, {0, 3}, {3, 4}, {4, 5}}, {5, 4, 3, 2, 1, 0});
}

}  // namespace

TEST(OrthoClosure, NPosetOrthocomplements) {
  auto p = poset_fixture("n_poset");
  ClosureContext ctx(p);
  EXPECT_EQ(ctx.orthocomplement(p.set_of({"w"})), p.set_of({"x", "y"}));
  EXPECT_EQ(ctx.orthocomplement(p.set_of({"x", "y"})), p.set_of({"w"}));
  EXPECT_EQ(ctx.orthocomplement(p.empty_set()), p.universe());
  EXPECT_TRUE(ctx.orthocomplement(p.universe()).empty());
  EXPECT_EQ(ctx.closure(p.set_of({"y", "w"})), p.universe());
  EXPECT_FALSE(ctx.is_closed(p.set_of({"y"})));
}

TEST(OrthoClosure, NPosetClosedSets) {
  auto p = poset_fixture("n_poset");
  auto family = enumerate_closed_sets(ClosureContext(p));
  using L = std::vector<std::vector<std::string>>;
  // Canonical order: lexicographic on index lists (y=0, w=1, x=2, v=3).
  EXPECT_EQ(family_labels(p, family), (L{{}, {"y", "w", "x", "v"}, {"y", "x"}, {"w"}, {"w", "v"}, {"x"}}));
}

TEST(OrthoClosure, FamilyCapOverflow) {
  // An antichain of 17 elements has 2^17 closed sets.
  std::vector<std::string> labels;
  for (int i = 0; i < 17; ++i) labels.push_back("a" + std::to_string(i));
  ClosureContext ctx(Poset::from_pairs(labels, {}));
  EXPECT_THROW(enumerate_closed_sets(ctx), FamilyOverflow);
  EXPECT_EQ(enumerate_closed_sets(ctx, 1u << 17).size(), 1u << 17);
}

TEST(NextClosure, LecticOrderAndCount) {
  // Closure that adds element 0 whenever 1 is present.
  auto close = [](const ElementSet& s) {
    ElementSet t = s;
    if (t.contains(1)) t.insert(0);
    return t;
  };
  std::vector<ElementSet> seen;
  auto count = next_closure(3, close, [&](const ElementSet& s) { seen.push_back(s); });
  EXPECT_EQ(count, 6u);
  EXPECT_TRUE(seen.front().empty());
  EXPECT_TRUE(seen.back().is_full());
}

TEST(Lattice, NPosetOrthomodularWitness) {
  auto p = poset_fixture("n_poset");
  OrthoLattice l{ClosureContext(p)};
  ASSERT_EQ(l.size(), 6u);
  auto r = check_orthomodular(l);
  ASSERT_FALSE(r.holds);
  ASSERT_EQ(r.witness.size(), 2u);
  EXPECT_EQ(l.set(r.witness[0]), p.set_of({"w"}));
  EXPECT_EQ(l.set(r.witness[1]), p.set_of({"v", "w"}));
  auto a = r.witness[0], b = r.witness[1];
  EXPECT_EQ(l.meet(b, l.ortho(a)), l.zero());
  EXPECT_NE(l.join(a, l.meet(b, l.ortho(a))), b);
  EXPECT_TRUE(check_orthocomplementation(l).holds);
  EXPECT_TRUE(check_de_morgan(l).holds);
  EXPECT_FALSE(check_distributive(l).holds);
}

TEST(Lattice, NPosetHasse) {
  OrthoLattice l{ClosureContext(poset_fixture("n_poset"))};
  auto h = hasse(l);
  EXPECT_EQ(h.size(), 6u);
  EXPECT_EQ(atoms(l).size(), 2u);
}

TEST(Lattice, TwoChainsIsBoolean) {
  OrthoLattice l{ClosureContext(poset_of(net_fixture("two_chains")))};
  EXPECT_EQ(l.size(), 4u);
  EXPECT_TRUE(check_orthomodular(l).holds);
  auto d = check_distributive(l);
  EXPECT_TRUE(d.holds);
  EXPECT_TRUE(d.boolean);
}

TEST(Lattice, MeetAndJoin) {
  auto p = poset_fixture("n_poset");
  OrthoLattice l{ClosureContext(p)};
  auto x = l.index_of(p.set_of({"x"}));
  auto w = l.index_of(p.set_of({"w"}));
  EXPECT_EQ(l.join(x, w), l.one());
  EXPECT_EQ(l.meet(x, w), l.zero());
  std::vector<LatticeIndex> items{x, w};
  EXPECT_EQ(l.join_all(items), l.one());
  EXPECT_THROW(l.index_of(p.set_of({"y"})), std::invalid_argument);
  EXPECT_EQ(l.label(w), "{w}");
}

TEST(AbstractLattice, Mo2IsOrthomodularNotDistributive) {
  auto l = std::get<AbstractLattice>(fixture("fig1_oml"));
  EXPECT_EQ(l.size(), 6u);
  EXPECT_EQ(l.label(l.zero()), "zero");
  EXPECT_EQ(l.label(l.one()), "one");
  EXPECT_TRUE(check_orthocomplementation(l).holds);
  EXPECT_TRUE(check_de_morgan(l).holds);
  EXPECT_TRUE(check_orthomodular(l).holds);
  auto d = check_distributive(l);
  EXPECT_FALSE(d.holds);
  EXPECT_FALSE(d.boolean);
}

TEST(AbstractLattice, HexagonIsNotOrthomodular) {
  auto l = hexagon();
  EXPECT_TRUE(check_orthocomplementation(l).holds);
  auto r = check_orthomodular(l);
  ASSERT_FALSE(r.holds);
  EXPECT_EQ(l.label(r.witness[0]), "a");
  EXPECT_EQ(l.label(r.witness[1]), "b");
}

TEST(AbstractLattice, BadComplementDetected) {
  auto l = AbstractLattice::from_pairs({"zero", "a", "b", "one"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}, {3, 1, 2, 0});
  auto r = check_orthocomplementation(l);
  EXPECT_FALSE(r.holds);
  EXPECT_EQ(l.label(r.witness[0]), "a");
}

TEST(AbstractLattice, MissingJoinRejected) {
  // Two maximal elements: no top, so no join of a and b.
  EXPECT_THROW(AbstractLattice::from_pairs({"zero", "a", "b"}, {{0, 1}, {0, 2}}, {0, 2, 1}), InvalidLattice);
  EXPECT_THROW(AbstractLattice::from_pairs({"a"}, {}, {}), InvalidLattice);
}

TEST(LatticeProperty, ClosedFamilyMatchesOracle) {
  auto check = [](const Poset& p, const oracle::Order& o) {
    ASSERT_EQ(oracle::to_masks(enumerate_closed_sets(ClosureContext(p))), oracle::closed_sets(o));
  };
  for (const auto& net : testing_support::random_nets(60, 14, 31)) check(poset_of(net), oracle::from_net(net).order);
  for (const auto& p : testing_support::random_posets(200, 10, 32)) check(p, oracle::from_poset(p));
}

TEST(LatticeProperty, OrthocomplementMatchesOracle) {
  SplitMix64 rng(33);
  for (const auto& p : testing_support::random_posets(200, 14, 34)) {
    ClosureContext ctx(p);
    auto o = oracle::from_poset(p);
    for (int i = 0; i < 10; ++i) {
      auto s = testing_support::random_subset(rng, p.size());
      ASSERT_EQ(oracle::to_mask(ctx.orthocomplement(s)), oracle::perp(o, oracle::to_mask(s)));
    }
  }
}

TEST(LatticeProperty, NetLatticesAreOrthomodular) {
  for (const auto& net : testing_support::random_nets(100, 16, 35)) {
    OrthoLattice l{ClosureContext(poset_of(net))};
    ASSERT_TRUE(check_orthocomplementation(l).holds);
    ASSERT_TRUE(check_de_morgan(l).holds);
    ASSERT_TRUE(check_orthomodular(l).holds) << serialize_net(net);
  }
}

// Orthomodularity agrees with the oracle on arbitrary posets.
TEST(LatticeProperty, OrthomodularMatchesOracle) {
  for (const auto& p : testing_support::random_posets(300, 8, 36)) {
    OrthoLattice l{ClosureContext(p)};
    ASSERT_EQ(check_orthomodular(l).holds, oracle::orthomodular(oracle::from_poset(p)));
  }
}

// S ⊆ T ⇒ T^⊥ ⊆ S^⊥, S ⊆ S^⊥⊥, S^⊥ = S^⊥⊥⊥.
TEST(LatticeProperty, GaloisLaws) {
  SplitMix64 rng(37);
  for (const auto& net : testing_support::random_nets(100, 24, 38)) {
    ClosureContext ctx(poset_of(net));
    for (int i = 0; i < 20; ++i) {
      auto s = testing_support::random_subset(rng, net.size());
      auto t = s | testing_support::random_subset(rng, net.size());
      ASSERT_TRUE(ctx.orthocomplement(t).is_subset_of(ctx.orthocomplement(s)));
      ASSERT_TRUE(s.is_subset_of(ctx.closure(s)));
      ASSERT_EQ(ctx.orthocomplement(ctx.closure(s)), ctx.orthocomplement(s));
    }
  }
}
