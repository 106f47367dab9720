#include <gtest/gtest.h>

#include <random>

#include "zforce/forcing.hpp"
#include "zforce/generators.hpp"
#include "zforce/minrank.hpp"
#include "zforce/solvers.hpp"
#include "zforce/sweeps.hpp"

using namespace zforce;

TEST(PatternMatrix, SamplesMatchThePattern) {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 40; ++i) {
    Digraph d = random_digraph(1 + i % 8, 0.4, rng);
    EXPECT_TRUE(sample_pattern_matrix(d, static_cast<std::uint64_t>(i)).matches_pattern());
  }
}

TEST(PatternMatrix, EmptyDigraphGivesDiagonal) {
  auto m = sample_pattern_matrix(empty_digraph(5), 3);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j)
      if (i != j) {
        EXPECT_EQ(m.at(i, j), 0);
      }
}

TEST(PatternMatrix, SeedsAreDeterministicAndVary) {
  Digraph d = complete_digraph(4);
  auto a = sample_pattern_matrix(d, 1), b = sample_pattern_matrix(d, 1), c = sample_pattern_matrix(d, 2);
  bool same = true, differ = false;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      same = same && a.at(i, j) == b.at(i, j);
      differ = differ || a.at(i, j) != c.at(i, j);
    }
  EXPECT_TRUE(same);
  EXPECT_TRUE(differ);
  EXPECT_TRUE(c.matches_pattern());
}

TEST(PatternMatrix, RejectsLoops) { EXPECT_THROW(sample_pattern_matrix(de_bruijn(2, 2), 1), LoopModeError); }

TEST(KernelSupport, Examples) {
  Digraph c3 = directed_cycle(3);
  for (std::uint64_t seed = 0; seed < 10; ++seed)
    EXPECT_TRUE(verify_kernel_support(c3, VertexSet(3, {0}), sample_pattern_matrix(c3, seed)));
  Digraph e2 = empty_digraph(2);
  PatternMatrix zero(e2);
  EXPECT_FALSE(verify_kernel_support(e2, VertexSet(2, {0}), zero));
  EXPECT_TRUE(verify_kernel_support(e2, VertexSet::full(2), zero));
}

TEST(KernelSupport, PatternMismatchThrows) {
  Digraph c3 = directed_cycle(3);
  auto m = sample_pattern_matrix(c3, 4);
  m.at(0, 2) = Rational(5);
  EXPECT_THROW(verify_kernel_support(c3, VertexSet(3, {0}), m), std::invalid_argument);
  EXPECT_THROW(verify_kernel_support(directed_cycle(4), VertexSet(4, {0}), sample_pattern_matrix(c3, 1)),
               std::invalid_argument);
}

TEST(KernelSupport, ExactRankHandlesFractions) {
  Digraph k2 = complete_digraph(2);
  PatternMatrix m(k2);
  m.at(0, 0) = Rational(1, 2);
  m.at(0, 1) = Rational(1, 3);
  m.at(1, 0) = Rational(3, 2);
  m.at(1, 1) = Rational(1);  // row 1 = 3 * row 0: singular
  EXPECT_EQ(column_rank(m, {0, 1}), 1u);
  EXPECT_FALSE(verify_kernel_support(k2, VertexSet(2), m));
  EXPECT_TRUE(verify_kernel_support(k2, VertexSet(2, {1}), m));
}

TEST(KernelSupport, SetsLargerThanFForce) {
  std::mt19937_64 rng(44);
  for (int i = 0; i < 20; ++i) {
    const std::size_t n = 2 + i % 5;
    Digraph d = random_digraph(n, 0.4, rng);
    const std::size_t f = failed_zero_forcing_number(d)->value;
    for (Mask s = 0; s <= full_mask(n); ++s) {
      if (static_cast<std::size_t>(std::popcount(s)) <= f) continue;
      for (std::uint64_t seed = 0; seed < 5; ++seed)
        ASSERT_TRUE(verify_kernel_support(d, VertexSet::from_mask(n, s), sample_pattern_matrix(d, seed)));
    }
  }
}

TEST(KernelSupport, SweepPasses) {
  auto r = sweep_kernel(10, 5);
  EXPECT_TRUE(r.ok());
  EXPECT_GT(r.checked, 0u);
}
