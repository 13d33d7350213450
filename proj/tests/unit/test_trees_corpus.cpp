#include <gtest/gtest.h>

#include <set>

#include "lapcoef/corpus.hpp"
#include "lapcoef/errors.hpp"
#include "lapcoef/graph_io.hpp"
#include "lapcoef/trees.hpp"

using namespace lapcoef;

TEST(Trees, LabeledCountsAreCayley) {
  const std::size_t expected_classes[] = {0, 1, 1, 1, 2, 3};
  for (std::size_t n = 3; n <= 5; ++n) {
    std::size_t labeled = 0;
    std::set<std::string> classes;
    for_each_tree(n, Dedupe::kLabeled, [&](const Graph& t) {
      ++labeled;
      EXPECT_TRUE(is_tree(t));
      classes.insert(tree_canonical_form(t));
    });
    std::size_t cayley = 1;
    for (std::size_t i = 0; i + 2 < n; ++i) cayley *= n;
    EXPECT_EQ(labeled, cayley);
    EXPECT_EQ(classes.size(), expected_classes[n]);
  }
}

TEST(Trees, UnlabeledCounts) {
  const std::size_t expected[] = {0, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
  for (std::size_t n = 1; n <= kMaxExhaustiveTreeOrder; ++n) {
    auto trees = unlabeled_trees(n);
    EXPECT_EQ(trees.size(), expected[n]) << n;
    std::set<std::string> forms;
    for (const auto& t : trees) forms.insert(tree_canonical_form(t));
    EXPECT_EQ(forms.size(), trees.size());
  }
}

TEST(Trees, PrueferRoundTrip) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    Graph t = random_tree(2 + i % 12, rng);
    EXPECT_TRUE(is_tree(t));
    auto seq = pruefer_encode(t);
    EXPECT_EQ(pruefer_decode(seq), t);
  }
}

TEST(Trees, CanonicalFormIgnoresLabels) {
  const Vertex a[] = {0, 0, 1};
  const Vertex b[] = {4, 3, 3};
  const Vertex c[] = {0, 1, 2};
  EXPECT_EQ(tree_canonical_form(pruefer_decode(a)), tree_canonical_form(pruefer_decode(std::span(b))));
  EXPECT_NE(tree_canonical_form(pruefer_decode(a)), tree_canonical_form(pruefer_decode(c)));
  EXPECT_EQ(tree_centers(generate_family(PathFamily{5})), std::vector<Vertex>{2});
  EXPECT_EQ(tree_centers(generate_family(PathFamily{4})).size(), 2u);
}

TEST(Corpus, ExhaustiveGraphCounts) {
  const std::size_t all[] = {1, 1, 2, 4, 11, 34, 156, 1044};
  const std::size_t connected[] = {1, 1, 1, 2, 6, 21, 112, 853};
  for (std::size_t n = 1; n <= 7; ++n) {
    EXPECT_EQ(all_graphs(n).size(), all[n]) << n;
    auto c = connected_graphs(n);
    EXPECT_EQ(c.size(), connected[n]) << n;
    std::set<std::uint64_t> masks;
    for (const auto& g : c) masks.insert(canonical_mask(g));
    EXPECT_EQ(masks.size(), c.size());
  }
}

TEST(Corpus, CanonicalMaskIsLabelInvariant) {
  Graph a(4, {{0, 1}, {1, 2}, {2, 3}});
  Graph b(4, {{2, 0}, {0, 3}, {3, 1}});
  EXPECT_EQ(canonical_mask(a), canonical_mask(b));
  EXPECT_NE(canonical_mask(a), canonical_mask(generate_family(StarFamily{4})));
}

TEST(Corpus, SpecsAreSeededAndJoinable) {
  auto a = build_corpus("random-graphs:8:40+all-trees:5", 3);
  auto b = build_corpus("random-graphs:8:40+all-trees:5", 3);
  auto c = build_corpus("random-graphs:8:40", 4);
  ASSERT_EQ(a.graphs.size(), 40u + 1 + 1 + 1 + 2 + 3);
  EXPECT_EQ(a.graphs, b.graphs);
  EXPECT_NE(std::vector<Graph>(a.graphs.begin(), a.graphs.begin() + 40), c.graphs);
  auto g5 = build_corpus("girth5-cycles:10", 1);
  EXPECT_EQ(g5.graphs.size(), 15u);
  for (const auto& g : g5.graphs) EXPECT_TRUE(girth(g).at_least(5));
  EXPECT_EQ(build_corpus("connected:4", 1).graphs.size(), 10u);
  EXPECT_THROW(build_corpus("bogus:3", 1), Error);
}
