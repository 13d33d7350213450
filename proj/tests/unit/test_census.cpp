#include <gtest/gtest.h>

#include "lapcoef/census.hpp"
#include "lapcoef/corpus.hpp"
#include "oracles.hpp"

using namespace lapcoef;

TEST(Census, KnownCounts) {
  auto K = [](std::size_t n) { return generate_family(CompleteFamily{n}); };
  EXPECT_EQ(count_pattern(K(3), PatternId::kP3), 3);
  EXPECT_EQ(count_pattern(K(4), PatternId::kC4), 3);
  EXPECT_EQ(count_pattern(K(5), PatternId::kC5), 12);
  EXPECT_EQ(count_pattern(K(6), PatternId::kC6), 60);
  EXPECT_EQ(count_pattern(K(6), PatternId::kK5), 6);
  EXPECT_EQ(triangle_count(K(5)), 10);
}

TEST(Census, PatternNames) {
  for (PatternId p : kAllPatterns) {
    EXPECT_EQ(parse_pattern(pattern_name(p)), p);
    EXPECT_GE(automorphism_count(p), 2u);
  }
  EXPECT_FALSE(parse_pattern("C7"));
}

TEST(Census, MatchesEdgeSubsetOracle) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& g : connected_graphs(n)) {
      for (PatternId p : kAllPatterns) {
        if (pattern_graph(p).order() > n) continue;
        ASSERT_EQ(count_pattern(g, p), oracle::pattern_count(g, p)) << pattern_name(p) << " n=" << n;
      }
    }
  }
}

TEST(Census, PatternCopiesSumToCount) {
  Graph g = generate_family(CompleteFamily{5});
  for (PatternId p : {PatternId::kC4, PatternId::kC3Pendant, PatternId::kBowtie}) {
    Int sum = 0;
    for (const auto& c : pattern_copies(g, p)) {
      EXPECT_EQ(c.vertices.size(), pattern_graph(p).order());
      sum += static_cast<unsigned long>(c.copies);
    }
    EXPECT_EQ(sum, count_pattern(g, p));
  }
}

TEST(Walks, KnownValues) {
  Graph k2 = generate_family(PathFamily{2});
  Graph p3 = generate_family(PathFamily{3});
  Graph k3 = generate_family(CompleteFamily{3});
  EXPECT_EQ(closed_walks_trace(k3, 3), 6);
  EXPECT_EQ(closed_walks_trace(p3, 4), 8);
  EXPECT_EQ(closed_walks_enum(k2, 2), 2);
  EXPECT_EQ(closed_walks_enum(p3, 4), 8);
  EXPECT_EQ(closed_walks_trace(k3, 1), 0);
  EXPECT_EQ(walk_count_formula(p3, 4), 8);
  EXPECT_EQ(walk_count_formula(generate_family(CycleFamily{5}), 5), 10);
  EXPECT_EQ(walk_count_formula(k2, 6), 2);
}

TEST(Walks, ThreeRoutesAgree) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& g : all_graphs(n)) {
      for (std::size_t k = 1; k <= 6; ++k) {
        const Int t = closed_walks_trace(g, k);
        ASSERT_EQ(t, closed_walks_enum(g, k));
        ASSERT_EQ(t, walk_count_formula(g, k)) << "k=" << k;
      }
    }
  }
}
