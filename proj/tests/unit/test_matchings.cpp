#include <gtest/gtest.h>

#include "lapcoef/corpus.hpp"
#include "lapcoef/matchings.hpp"
#include "lapcoef/trees.hpp"
#include "oracles.hpp"

using namespace lapcoef;

namespace {
std::vector<Int> ints(std::initializer_list<long> v) {
  std::vector<Int> out;
  for (long x : v) out.emplace_back(x);
  return out;
}
}  // namespace

TEST(Matchings, KnownValues) {
  Graph p5 = generate_family(PathFamily{5});
  EXPECT_EQ(matching_count(p5, 2), 3);
  EXPECT_EQ(matching_count(generate_family(PathFamily{9}), 3), 20);
  Graph k4 = generate_family(CompleteFamily{4});
  EXPECT_EQ(matching_count(k4, 1), 6);
  EXPECT_EQ(matching_count(k4, 2), 3);
  EXPECT_EQ(matching_vector(p5, 4), ints({1, 4, 3, 0, 0}));
}

TEST(Matchings, AllRoutesMatchOracle) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 120; ++i) {
    Graph g = i % 2 ? random_graph(9, rng) : random_tree(1 + i % 14, rng);
    if (g.size() > 20) continue;
    auto brute = oracle::matchings(g);
    ASSERT_EQ(matching_vector(g), brute) << describe(g);
    ASSERT_EQ(matching_vector_reference(g), brute) << describe(g);
  }
}

TEST(Matchings, Polynomial) {
  EXPECT_EQ(matching_polynomial(generate_family(PathFamily{2})), ints({-1, 0, 1}));
  EXPECT_EQ(matching_polynomial(generate_family(PathFamily{3})), ints({0, -2, 0, 1}));
  EXPECT_EQ(matching_polynomial(Graph(1, {})), ints({0, 1}));
}

TEST(HOperator, KnownValues) {
  const Expr m = Expr::leaf(InvariantId::edges());
  EXPECT_EQ(h_operator(PatternId::kP2, m, generate_family(PathFamily{4})), 2);
  EXPECT_EQ(h_operator(PatternId::kP2, m, generate_family(PathFamily{2})), 0);
  Graph k4 = generate_family(CompleteFamily{4});
  EXPECT_EQ(h_operator(PatternId::kP2, Expr(1), k4), 6);
  EXPECT_EQ(h_operator(PatternId::kC3, [](const Graph& r) { return Rational(static_cast<long>(r.order())); }, k4),
            4);
}

TEST(HOperator, MatchingRecursion) {
  auto r = matching_recursion_check(generate_family(PathFamily{5}), 2);
  EXPECT_TRUE(r.equal);
  EXPECT_EQ(r.lhs, 6);
  EXPECT_EQ(r.rhs, 6);
  EXPECT_TRUE(matching_recursion_check(generate_family(CycleFamily{6}), 3).equal);
  auto one = matching_recursion_check(generate_family(CompleteFamily{4}), 1);
  EXPECT_TRUE(one.equal);
  EXPECT_EQ(one.lhs, 6);
}
