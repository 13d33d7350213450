#include <gtest/gtest.h>

#include "lapcoef/errors.hpp"
#include "lapcoef/graph_io.hpp"
#include "lapcoef/harness.hpp"
#include "lapcoef/trees.hpp"

using namespace lapcoef;

TEST(Verify, SixVertexTrees) {
  const Corpus corpus = build_corpus("all-trees:6", 1);
  auto ok = run_verify(corpus, select_identities({"66TH2"}));
  EXPECT_EQ(ok.graphs, corpus.graphs.size());
  EXPECT_TRUE(ok.falsified_ids().empty());
  for (const auto& t : ok.identities) EXPECT_GT(t.tested, 0u) << t.id;

  auto bad = run_verify(corpus, select_identities({"L1.3"}));
  ASSERT_EQ(bad.identities.size(), 1u);
  const auto& tally = bad.identities[0];
  EXPECT_GE(tally.falsified, 1u);
  ASSERT_FALSE(tally.counterexamples.empty());
  // Smallest counterexample is P_3 (c_3 = 1, hyper-Wiener 5); P_5 is also listed.
  EXPECT_EQ(tally.counterexamples.front().order, 3u);
  EXPECT_EQ(canonical_mask(parse_graph6(tally.counterexamples.front().graph6)),
            canonical_mask(generate_family(PathFamily{3})));
}

TEST(Verify, EmptyStream) {
  Corpus empty{"graph6:empty", {}, 0};
  auto r = run_verify(empty, select_identities({"all"}));
  EXPECT_EQ(r.graphs, 0u);
  EXPECT_EQ(r.identities.size(), identity_catalog().size());
  for (const auto& t : r.identities) EXPECT_EQ(t.tested + t.skipped, 0u);
}

TEST(Verify, ReportIsDeterministic) {
  const Corpus corpus = build_corpus("random-graphs:7:60+all-trees:6", 2);
  const auto ids = select_identities({"all"});
  VerifyOptions serial;
  serial.parallel = false;
  const auto a = to_json(run_verify(corpus, ids)).dump();
  const auto b = to_json(run_verify(corpus, ids, serial)).dump();
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.find("seconds"), std::string::npos);
  auto r = run_verify(corpus, ids);
  for (std::size_t i = 1; i < r.identities.size(); ++i) EXPECT_LT(r.identities[i - 1].id, r.identities[i].id);
}

TEST(Errata, ShippedFileLoads) {
  auto e = load_errata(default_errata_path());
  EXPECT_TRUE(e.contains("L1.3"));
  EXPECT_FALSE(e.contains("66TH2"));
  EXPECT_THROW(load_errata("/nonexistent/errata.json"), Error);
}

TEST(Tables, PublishedCells) {
  EXPECT_EQ(table_expected(3, 2, 2), 132);
  EXPECT_EQ(table_expected(3, 6, 6), Int("3521109479132"));
  EXPECT_EQ(table_expected(4, 5, 2), 71496);
  const auto cells = reproduce_tables();
  EXPECT_EQ(cells.size(), 50u);
  for (const auto& c : cells) EXPECT_TRUE(c.match) << c.k << " x=" << c.x << " t=" << c.t;
  const auto csv = tables_csv(cells);
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "x,t,expected,closed_form,degree_formula,subdivision_matching,charpoly,match");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 51);
}

TEST(ConjectureScan, Tallies) {
  auto tri = conjecture_scan({generate_family(CompleteFamily{3})});
  EXPECT_EQ(tri.fully_skipped, 1u);
  EXPECT_EQ(tri.graphs, 1u);

  std::vector<Graph> trees;
  for (std::size_t n = 6; n <= 8; ++n) {
    for (auto& t : unlabeled_trees(n)) trees.push_back(t);
  }
  auto s = conjecture_scan(trees);
  for (const auto& it : s.items) {
    EXPECT_EQ(it.less + it.greater, 0u);
    EXPECT_EQ(it.equal, trees.size());
  }

  auto mixed = conjecture_scan({disjoint_union(generate_family(PathFamily{3}), generate_family(PathFamily{3}))}, 2);
  EXPECT_EQ(mixed.disconnected, 1u);
  EXPECT_EQ(mixed.malformed, 2u);
  EXPECT_TRUE(to_json(mixed).contains("violations"));
}
