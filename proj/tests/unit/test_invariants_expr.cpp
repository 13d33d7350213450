#include <gtest/gtest.h>

#include "lapcoef/corpus.hpp"
#include "lapcoef/errors.hpp"
#include "lapcoef/expr.hpp"
#include "lapcoef/invariants.hpp"

using namespace lapcoef;

namespace {
Graph P(std::size_t n) { return generate_family(PathFamily{n}); }
}  // namespace

TEST(Invariants, KnownValues) {
  EXPECT_EQ(eval_invariant(InvariantId::m1(2), P(4)), 10);
  EXPECT_EQ(eval_invariant(InvariantId::alpha(1, 2), P(3)), 12);
  EXPECT_EQ(eval_invariant(InvariantId::simple(InvariantKind::kTheta2), P(4)), 4);
  EXPECT_EQ(eval_invariant(InvariantId::simple(InvariantKind::kWiener), P(4)), 10);
  EXPECT_EQ(eval_invariant(InvariantId::simple(InvariantKind::kHyperWiener), P(4)), 15);
  EXPECT_EQ(eval_invariant(InvariantId::mij(1, 2), P(3)), 2);
  EXPECT_EQ(eval_invariant(InvariantId::mij(2, 1), P(3)), 2);
  EXPECT_EQ(eval_invariant(InvariantId::triangles(), generate_family(CompleteFamily{4})), 4);
}

TEST(Invariants, SpanningTrees) {
  EXPECT_EQ(spanning_tree_count(generate_family(CycleFamily{4})), 4);
  EXPECT_EQ(spanning_tree_count(P(7)), 1);
  EXPECT_EQ(spanning_tree_count(generate_family(CompleteFamily{4})), 16);
  EXPECT_EQ(spanning_tree_count(disjoint_union(P(2), P(2))), 0);
  EXPECT_EQ(bareiss_determinant({{2, -1}, {-1, 2}}), 3);
}

TEST(Invariants, Preconditions) {
  Graph two = disjoint_union(P(2), P(3));
  EXPECT_THROW(eval_invariant(InvariantId::simple(InvariantKind::kWiener), two), PreconditionError);
  EXPECT_THROW(eval_invariant(InvariantId::coefficient(4), P(3)), PreconditionError);
  EXPECT_EQ(eval_invariant(InvariantId::coefficient_top(1), P(3)), 4);
}

TEST(Invariants, NamesRoundTrip) {
  for (const auto& id : standard_registry()) EXPECT_EQ(parse_invariant(id.name()), id) << id.name();
  for (auto id : {InvariantId::walks(4), InvariantId::count(PatternId::kBowtie), InvariantId::matchings(3),
                  InvariantId::coefficient(2), InvariantId::coefficient_top(5), InvariantId::p3ij(3, 1)}) {
    EXPECT_EQ(parse_invariant(id.name()), id) << id.name();
  }
  EXPECT_THROW(parse_invariant("M9_x"), ParseError);
}

TEST(Invariants, AllRegistryEntriesEvaluateOnSmallGraphs) {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& g : connected_graphs(n)) {
      for (const auto& id : standard_registry()) EXPECT_NO_THROW(eval_invariant(id, g)) << id.name();
    }
  }
}

TEST(Expr, Evaluation) {
  EXPECT_EQ(eval_expr(parse_expr("m*M1_2"), P(3)), 12);
  EXPECT_EQ(eval_expr(parse_expr("S(M1_2)"), P(3)), 14);
  EXPECT_EQ(eval_expr(parse_expr("m/24"), P(5)), Rational(1, 6));
  EXPECT_EQ(eval_expr(parse_expr("2**3 + m^2"), P(3)), 12);
  EXPECT_EQ(eval_expr(parse_expr("P2(m)"), P(4)), 2);
  EXPECT_EQ(eval_expr(parse_expr("L(2, m)"), generate_family(StarFamily{4})), 3);
  EXPECT_EQ(eval_expr(parse_expr("(m+1)^2 - 2*n"), P(4)), 8);
  EXPECT_EQ(eval_expr(parse_expr("count(C4) + walks(4)"), generate_family(CycleFamily{4})), 33);
  EXPECT_EQ(eval_expr(parse_expr("cn(1) - c(1)"), P(5)), 3);
}

TEST(Expr, ToStringRoundTrips) {
  for (const char* text : {"(m+3)*M1_2 - M1_3 - 4*M2_1 - 2*m", "P2(m*M1_2)", "S(M1_2)", "L(2, m)",
                           "H(P3, m)", "count(C4)", "cn(4)", "-alpha_1_2/3 + mij(1,2)^2"}) {
    Expr e = parse_expr(text);
    Expr again = parse_expr(e.to_string());
    // Printing normalises once, then is a fixed point.
    EXPECT_EQ(parse_expr(again.to_string()).to_string(), again.to_string()) << text;
    Graph g = generate_family(RootedTreeFamily{3, 2});
    EXPECT_EQ(eval_expr(e, g), eval_expr(again, g)) << text;
  }
}

TEST(Expr, ParseErrors) {
  for (const char* bad : {"", "m +", "m/n", "foo", "S(m", "count(Q9)", "m^-1", "m^", "2 3"}) {
    EXPECT_THROW(parse_expr(bad), ParseError) << bad;
  }
}

TEST(Evaluator, CachesTransforms) {
  Evaluator ev(P(4));
  EXPECT_EQ(&ev.subdivision(), &ev.subdivision());
  EXPECT_EQ(ev.subdivision().graph().order(), 7u);
  EXPECT_EQ(ev.line(2).graph(), P(2));
  EXPECT_EQ(ev.trace(4), 2 * 3 + 4 * 2);
  EXPECT_EQ(ev.charpoly().back(), 1);
}
