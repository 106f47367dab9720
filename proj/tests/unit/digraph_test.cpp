#include <gtest/gtest.h>

#include <random>

#include "zforce/digraph.hpp"
#include "zforce/errors.hpp"
#include "zforce/generators.hpp"
#include "zforce/sweeps.hpp"

using namespace zforce;

TEST(Digraph, BuilderRejectsBadArcs) {
  DigraphBuilder b(3);
  EXPECT_THROW(b.add_arc(0, 3), std::out_of_range);
  EXPECT_THROW(b.add_arc(-1, 0), std::out_of_range);
  EXPECT_THROW(b.add_arc(1, 1), LoopModeError);
  DigraphBuilder looped(3, true);
  EXPECT_NO_THROW(looped.add_arc(1, 1));
  EXPECT_TRUE(looped.build().has_loops());
}

TEST(Digraph, DegreesAndNeighbourhoods) {
  Digraph d = DigraphBuilder(4).add_arc(0, 1).add_arc(0, 2).add_arc(2, 1).add_edge(2, 3).build();
  EXPECT_EQ(d.arc_count(), 5u);
  EXPECT_EQ(d.out_degree(0), 2u);
  EXPECT_EQ(d.in_degree(1), 2u);
  EXPECT_EQ(d.in(1).members(), (std::vector<int>{0, 2}));
  EXPECT_EQ(sources(d), std::vector<int>{0});
  EXPECT_TRUE(is_sink(d, 1));
  EXPECT_EQ(underlying_edge_count(d), 4u);
  EXPECT_EQ(d.arcs(), (std::vector<Arc>{{0, 1}, {0, 2}, {2, 1}, {2, 3}, {3, 2}}));
}

TEST(Digraph, ComplementOfEmptyIsComplete) {
  EXPECT_EQ(complement(empty_digraph(3)), complete_digraph(3));
  EXPECT_EQ(complete_digraph(3).arc_count(), 6u);
}

TEST(Digraph, ComplementOfDirectedTriangle) {
  Digraph c = complement(directed_cycle(3));
  EXPECT_EQ(c.arcs(), (std::vector<Arc>{{0, 2}, {1, 0}, {2, 1}}));
}

TEST(Digraph, ComplementIsAnInvolution) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    Digraph d = random_digraph(1 + i % 8, 0.4, rng);
    EXPECT_EQ(complement(complement(d)), d);
  }
}

TEST(Digraph, ComplementRejectsLoops) {
  EXPECT_THROW(complement(de_bruijn(2, 2)), LoopModeError);
}

TEST(Digraph, OutjoinAddsAllArcsFromFirstToSecond) {
  Digraph single = outjoin(empty_digraph(1), empty_digraph(1));
  EXPECT_EQ(single.arcs(), (std::vector<Arc>{{0, 1}}));
  Digraph j = outjoin(complete_digraph(5), empty_digraph(2));
  EXPECT_EQ(j.order(), 7u);
  EXPECT_EQ(j.arc_count(), 20u + 10u);
  for (int v = 5; v < 7; ++v) {
    EXPECT_TRUE(is_sink(j, v));
    EXPECT_EQ(j.in_degree(v), 5u);
  }
}

TEST(Digraph, DisjointUnionShiftsLabels) {
  std::vector<Digraph> parts{directed_cycle(3), empty_digraph(1), directed_path(2)};
  Digraph u = disjoint_union(parts);
  EXPECT_EQ(u.order(), 6u);
  EXPECT_TRUE(u.has_arc(2, 0));
  EXPECT_TRUE(u.has_arc(4, 5));
  EXPECT_EQ(weak_components(u).size(), 3u);
}

TEST(Digraph, StructuralPredicates) {
  EXPECT_TRUE(is_directed_cycle(directed_cycle(2)));
  EXPECT_TRUE(is_directed_cycle(directed_cycle(7)));
  EXPECT_FALSE(is_directed_cycle(empty_digraph(1)));
  std::vector<Digraph> two{directed_cycle(3), directed_cycle(3)};
  EXPECT_FALSE(is_directed_cycle(disjoint_union(two)));
  EXPECT_TRUE(is_acyclic(directed_path(5)));
  EXPECT_FALSE(is_acyclic(directed_cycle(4)));
  EXPECT_TRUE(is_oriented(directed_cycle(4)));
  EXPECT_FALSE(is_oriented(bidirected_path(3)));
  EXPECT_TRUE(is_tournament(tournament_from_bits(5, 0x155)));
  EXPECT_FALSE(is_tournament(directed_cycle(4)));
}

TEST(Digraph, LineDigraphOfCycleIsCycle) {
  for (std::size_t n = 2; n <= 8; ++n) {
    auto l = line_digraph(directed_cycle(n));
    EXPECT_EQ(l.graph.order(), n);
    EXPECT_TRUE(is_directed_cycle(l.graph));
    EXPECT_FALSE(l.graph.has_loops());
  }
}

TEST(Digraph, LineDigraphAdjacency) {
  Digraph d = DigraphBuilder(3).add_arc(0, 1).add_arc(1, 2).add_arc(1, 0).build();
  auto l = line_digraph(d);
  ASSERT_EQ(l.graph.order(), 3u);
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      EXPECT_EQ(l.graph.has_arc(x, y), l.arc_of[x].second == l.arc_of[y].first);
}

// L(B(2,2)) is B(2,3): the arc a1a2 -> a2a3 of B(2,2) becomes the word a1a2a3.
TEST(Digraph, LineDigraphOfDeBruijnIsNextDeBruijn) {
  auto words2 = de_bruijn_words(2, 2);
  auto words3 = de_bruijn_words(2, 3);
  auto l = line_digraph(de_bruijn(2, 2));
  Digraph b3 = de_bruijn(2, 3);
  ASSERT_EQ(l.graph.order(), b3.order());
  std::vector<int> relabel(l.graph.order());
  for (std::size_t x = 0; x < l.arc_of.size(); ++x) {
    const Word& tail = words2[static_cast<std::size_t>(l.arc_of[x].first)];
    const Word& head = words2[static_cast<std::size_t>(l.arc_of[x].second)];
    Word w{tail[0], tail[1], head[1]};
    relabel[x] = static_cast<int>(std::find(words3.begin(), words3.end(), w) - words3.begin());
  }
  for (int x = 0; x < static_cast<int>(l.graph.order()); ++x)
    for (int y = 0; y < static_cast<int>(l.graph.order()); ++y)
      EXPECT_EQ(l.graph.has_arc(x, y), b3.has_arc(relabel[x], relabel[y]));
}

TEST(Digraph, InducedSubdigraphKeepsOriginalLabels) {
  Digraph d = directed_cycle(5);
  auto sub = induced_subdigraph(d, VertexSet(5, {1, 2, 4}));
  EXPECT_EQ(sub.original, (std::vector<int>{1, 2, 4}));
  EXPECT_EQ(sub.graph.arcs(), (std::vector<Arc>{{0, 1}}));
}
