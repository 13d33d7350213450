#include <gtest/gtest.h>

#include "lapcoef/errors.hpp"
#include "lapcoef/formulas.hpp"
#include "lapcoef/trees.hpp"

#include <set>

using namespace lapcoef;

namespace {
Graph T(std::size_t k, std::size_t t) { return generate_family(RootedTreeFamily{k, t}); }
Graph P(std::size_t n) { return generate_family(PathFamily{n}); }
}  // namespace

TEST(Coefficients, KnownValues) {
  Graph t32 = T(3, 2);
  EXPECT_EQ(laplacian_coefficient(t32, t32.order() - 6, Method::kDegreeFormula), 1196);
  Graph t42 = T(4, 2);
  for (Method m : kAllMethods) EXPECT_EQ(laplacian_coefficient(t42, t42.order() - 2, m), 450) << method_name(m);
  EXPECT_EQ(laplacian_coefficient(P(5), 1, Method::kTraceFormula), 5);
}

TEST(Coefficients, MethodsAgreeOnTrees) {
  for (std::size_t n = 1; n <= 9; ++n) {
    for (const auto& g : unlabeled_trees(n)) {
      Evaluator ev(g);
      for (std::size_t j = 0; j <= std::min<std::size_t>(n, 6); ++j) {
        const Int want = ev.charpoly()[n - j];
        for (Method m : kAllMethods) ASSERT_EQ(laplacian_coefficient(ev, n - j, m), want) << method_name(m);
      }
    }
  }
}

TEST(Coefficients, Preconditions) {
  Graph c5 = generate_family(CycleFamily{5});
  EXPECT_THROW(laplacian_coefficient(c5, 2, Method::kSubdivisionMatching), PreconditionError);
  EXPECT_THROW(laplacian_coefficient(c5, 1, Method::kTraceFormula), PreconditionError);
  EXPECT_THROW(laplacian_coefficient(P(3), 4, Method::kCharpoly), PreconditionError);
  // Degree and trace routes are exact on any graph for c_{n-1}..c_{n-3}.
  for (std::size_t j = 1; j <= 3; ++j) {
    EXPECT_EQ(laplacian_coefficient(c5, 5 - j, Method::kDegreeFormula), laplacian_coefficient(c5, 5 - j, Method::kCharpoly));
    EXPECT_EQ(laplacian_coefficient(c5, 5 - j, Method::kTraceFormula), laplacian_coefficient(c5, 5 - j, Method::kCharpoly));
  }
  EXPECT_EQ(parse_method("degree_formula"), Method::kDegreeFormula);
  EXPECT_FALSE(parse_method("eigen"));
}

TEST(ClosedForm, KnownValues) {
  EXPECT_EQ(tkt_closed_form(3, 2, 2), 132);
  EXPECT_EQ(tkt_closed_form(3, 3, 1), 42);
  EXPECT_EQ(tkt_closed_form(4, 6, 6), Int("829575812820551386"));
  EXPECT_THROW(tkt_closed_form(3, 1, 6), PreconditionError);
  EXPECT_THROW(tkt_closed_form(5, 2, 2), PreconditionError);
}

TEST(ClosedForm, MatchesCharpoly) {
  for (std::size_t k : {3, 4}) {
    for (std::size_t t = 1; t <= 3; ++t) {
      Graph g = T(k, t);
      auto c = Evaluator(g).charpoly();
      for (std::size_t x = 1; x <= 6; ++x) {
        if (x == 6 && t < 2) continue;
        EXPECT_EQ(tkt_closed_form(k, t, x), c[g.order() - x]) << k << "," << t << "," << x;
      }
    }
  }
}

TEST(Catalog, Shape) {
  const auto& cat = identity_catalog();
  EXPECT_GE(cat.size(), 80u);
  // 66TH2 is split into one record per k.
  const auto th2 = select_identities({"66TH2"});
  EXPECT_EQ(th2.size(), 7u);
  for (const auto* r : th2) EXPECT_EQ(r->precondition.kind, Precondition::Kind::kForest) << r->id;
  EXPECT_EQ(find_identity("5LM2.1").precondition.kind, Precondition::Kind::kGirthAtLeast5);
  EXPECT_THROW(find_identity("NOPE"), Error);
  std::set<std::string> ids;
  for (const auto& r : cat) {
    EXPECT_TRUE(ids.insert(r.id).second) << r.id;
    EXPECT_FALSE(r.lhs_text.empty()) << r.id;
    EXPECT_FALSE(r.rhs_text.empty()) << r.id;
  }
}

TEST(Catalog, Selectors) {
  auto one = select_identities({"6LMM1"});
  ASSERT_GE(one.size(), 1u);
  for (auto* r : one) EXPECT_TRUE(r->id.rfind("6LMM1.", 0) == 0) << r->id;
  auto lettered = select_identities({"5TH2.2"});
  EXPECT_EQ(lettered.size(), 11u);
  EXPECT_EQ(select_identities({"L1.4"}).size(), 2u);  // L1.4 and L1.4.3
  EXPECT_EQ(select_identities({"all"}).size(), identity_catalog().size());
  EXPECT_EQ(select_identities({}).size(), identity_catalog().size());
  EXPECT_THROW(select_identities({"ZZZ"}), Error);
}

TEST(Identities, KnownVerdicts) {
  auto a = evaluate_identity("L1.4", P(5));
  EXPECT_TRUE(a.precondition_met);
  EXPECT_EQ(a.lhs, 21);
  EXPECT_TRUE(a.equal);
  auto b = evaluate_identity("TTLM0.2", generate_family(CompleteFamily{3}));
  EXPECT_EQ(b.lhs, 12);
  EXPECT_EQ(b.rhs, 12);
  EXPECT_TRUE(b.equal);
  auto c = evaluate_identity("L1.3", P(5));
  EXPECT_EQ(c.lhs, 21);
  EXPECT_EQ(c.rhs, 35);
  EXPECT_FALSE(c.equal);
  auto d = evaluate_identity("66TH2.3", generate_family(CycleFamily{5}));
  EXPECT_FALSE(d.precondition_met);
}

TEST(Identities, RootedTreeRecordsHoldOnTheirFamily) {
  const auto recs = select_identities({"TKT"});
  ASSERT_FALSE(recs.empty());
  for (std::size_t k : {3, 4}) {
    for (std::size_t t = 2; t <= 4; ++t) {
      Evaluator ev(T(k, t));
      std::size_t met = 0;
      for (const auto* r : recs) {
        auto v = evaluate_identity(*r, ev);
        if (!v.precondition_met) continue;
        ++met;
        EXPECT_TRUE(v.equal) << r->id << " on T(" << k << "," << t << "): " << v.lhs << " vs " << v.rhs;
      }
      EXPECT_EQ(met, recs.size() / 2) << k << "," << t;
    }
  }
}

TEST(Identities, CorrectedRecordsHoldWherePrintedOnesFail) {
  for (const auto& g : unlabeled_trees(8)) {
    EXPECT_TRUE(evaluate_identity("COR1.fix", g).equal);
    EXPECT_TRUE(evaluate_identity("TRACE.5.fix", g).equal);
  }
  EXPECT_FALSE(evaluate_identity("TRACE.5", P(8)).equal);
}

TEST(Conjecture, TreesMeetEveryBoundWithEquality) {
  for (const auto& g : unlabeled_trees(8)) {
    auto r = conjecture_bounds(g);
    ASSERT_EQ(r.items.size(), 3u);
    for (const auto& it : r.items) {
      ASSERT_TRUE(it.evaluated);
      EXPECT_EQ(it.relation, Relation::kEqual);
      EXPECT_TRUE(it.equality_predicted);
    }
  }
}

TEST(Conjecture, SmallCycles) {
  auto c4 = conjecture_bounds(generate_family(CycleFamily{4}));
  ASSERT_TRUE(c4.items[0].evaluated);
  EXPECT_EQ(c4.items[0].relation, Relation::kEqual);
  EXPECT_FALSE(c4.items[1].evaluated);
  auto tri = conjecture_bounds(generate_family(DecoratedCycleFamily{{1, 1, 1}}));
  ASSERT_TRUE(tri.items[0].evaluated);
  EXPECT_EQ(tri.items[0].relation, Relation::kLess);
  EXPECT_FALSE(tri.items[0].equality_predicted);
  auto k3 = conjecture_bounds(generate_family(CompleteFamily{3}));
  for (const auto& it : k3.items) EXPECT_FALSE(it.evaluated);
  EXPECT_EQ(relation_symbol(Relation::kGreater), ">");
}
