#include <gtest/gtest.h>

#include <random>

#include "support/oracle.hpp"
#include "zforce/forcing.hpp"
#include "zforce/generators.hpp"
#include "zforce/sweeps.hpp"

using namespace zforce;

TEST(Closure, DirectedTriangleFromOneVertex) {
  auto t = closure(directed_cycle(3), VertexSet(3, {0}));
  EXPECT_EQ(t.final, VertexSet::full(3));
  EXPECT_EQ(t.rounds, 2);
  ASSERT_EQ(t.changes.size(), 2u);
  EXPECT_EQ(t.changes[0].forcer, 0);
  EXPECT_EQ(t.changes[0].forced, 1);
  EXPECT_EQ(t.changes[1].round, 2);
}

TEST(Closure, FullSetIsFixed) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 20; ++i) {
    Digraph d = random_digraph(1 + i % 7, 0.5, rng, i % 2 == 0);
    auto t = closure(d, d.all());
    EXPECT_EQ(t.final, d.all());
    EXPECT_TRUE(t.changes.empty());
    EXPECT_EQ(t.rounds, 0);
  }
}

TEST(Closure, LoopRuleForcesFromNothing) {
  Digraph loop = DigraphBuilder(1, true).add_arc(0, 0).build();
  EXPECT_EQ(rule_for(loop), ColorChangeRule::Loop);
  EXPECT_EQ(closure(loop, VertexSet(1)).final, VertexSet::full(1));
  EXPECT_TRUE(is_zfs(loop, VertexSet(1)));
}

TEST(Closure, LoopModeLetsEmptyVerticesForce) {
  // 0 has a loop; 1 -> 2 with 1 empty still forces 2 under the loop rule.
  Digraph d = DigraphBuilder(3, true).add_arc(0, 0).add_arc(1, 2).build();
  EXPECT_TRUE(closure_set(d, VertexSet(3, {1})).contains(2));
  EXPECT_EQ(closure_set(d, VertexSet(3)), VertexSet(3, {0, 2}));
}

TEST(Closure, TraceReplayReconstructsFinalSet) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 1 + i % 9;
    Digraph d = random_digraph(n, 0.35, rng, i % 5 == 0);
    VertexSet s = VertexSet::from_mask(n, rng() & full_mask(n));
    auto t = closure(d, s);
    const bool loop_rule = d.has_loops();
    VertexSet filled = s;
    int round = 0;
    VertexSet start_of_round = filled;
    for (const auto& c : t.changes) {
      if (c.round != round) {
        ASSERT_EQ(c.round, round + 1);
        round = c.round;
        start_of_round = filled;
      }
      // the force must be legal against the set at the start of its round
      ASSERT_TRUE(loop_rule || start_of_round.contains(c.forcer));
      ASSERT_EQ((d.out(c.forcer) - start_of_round).single(), c.forced);
      ASSERT_FALSE(filled.contains(c.forced));
      filled.insert(c.forced);
    }
    EXPECT_EQ(round, t.rounds);
    EXPECT_EQ(filled, t.final);
  }
}

TEST(Closure, SynchronousAndSequentialAgreeWithOracle) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = 1 + i % 8;
    Digraph d = random_digraph(n, 0.3 + 0.05 * (i % 7), rng, i % 4 == 0);
    const Mask s = rng() & full_mask(n);
    const Mask seq = closure_mask(d, s);
    EXPECT_EQ(closure(d, VertexSet::from_mask(n, s)).final.mask(), seq);
    EXPECT_EQ(closure_set(d, VertexSet::from_mask(n, s)).mask(), seq);
    auto ref = oracle::closure(oracle::from(d), oracle::to_bools(n, s));
    EXPECT_EQ(VertexSet::from_mask(n, seq).members().size(),
              static_cast<std::size_t>(std::count(ref.begin(), ref.end(), true)));
    for (std::size_t v = 0; v < n; ++v) EXPECT_EQ(((seq >> v) & 1u) != 0, ref[v]);
  }
}

TEST(Closure, WideDigraphsUseDynamicSets) {
  Digraph c = directed_cycle(100);
  EXPECT_TRUE(is_zfs(c, VertexSet(100, {42})));
  EXPECT_FALSE(is_zfs(empty_digraph(70), VertexSet(70, {1})));
  EXPECT_THROW(closure_mask(c, 1), std::exception);
}

TEST(Predicates, ZeroForcingSets) {
  EXPECT_TRUE(is_zfs(directed_cycle(5), VertexSet(5, {2})));
  EXPECT_FALSE(is_zfs(empty_digraph(3), VertexSet(3, {0, 1})));
  EXPECT_TRUE(is_fzfs(empty_digraph(3), VertexSet(3, {0, 1})));
  EXPECT_TRUE(is_zfs(complete_digraph(4), VertexSet::full(4)));
  EXPECT_THROW(is_zfs(directed_cycle(3), VertexSet(4)), std::out_of_range);
}

TEST(Predicates, StalledSets) {
  EXPECT_TRUE(is_stalled(bidirected_path(3), VertexSet(3, {1})));
  EXPECT_FALSE(is_stalled(directed_path(3), VertexSet(3, {0})));
  EXPECT_TRUE(is_stalled(complete_digraph(4), VertexSet::full(4)));
}

TEST(Predicates, CycleHasNoProperCriticalSet) {
  for (std::size_t n = 2; n <= 8; ++n) {
    Digraph c = directed_cycle(n);
    for (Mask w = 1; w < full_mask(n); ++w) ASSERT_FALSE(is_critical(c, w));
    EXPECT_TRUE(is_critical(c, full_mask(n)));
  }
}

TEST(Predicates, TwoLeavesOfBidirectedStarAreCritical) {
  Digraph s = star(2, parse_orientation("bb"));
  EXPECT_TRUE(is_critical(s, VertexSet(3, {1, 2})));
  EXPECT_FALSE(is_critical(s, VertexSet(3, {1})));
  EXPECT_FALSE(is_critical(s, VertexSet(3)));
}

TEST(Predicates, StrongCriticalityConstrainsMembersToo) {
  // W = {0, 1} in 0 -> 1: vertex 0 is inside W and sees one out-neighbour in W.
  Digraph d = DigraphBuilder(2).add_arc(0, 1).build();
  EXPECT_TRUE(is_critical(d, VertexSet(2, {0, 1})));
  EXPECT_FALSE(is_strongly_critical(d, VertexSet(2, {0, 1})));
}

TEST(Predicates, CriticalIffComplementStalled) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + i % 7;
    Digraph d = random_digraph(n, 0.4, rng, i % 3 == 0);
    oracle::Graph g = oracle::from(d);
    for (Mask w = 1; w <= full_mask(n); ++w) {
      const Mask s = full_mask(n) & ~w;
      bool crit = d.has_loops() ? is_strongly_critical(d, w) : is_critical(d, w);
      ASSERT_EQ(crit, is_stalled(d, s));
      ASSERT_EQ(is_stalled(d, s), oracle::stalled(g, oracle::to_bools(n, s)));
    }
  }
}
