#include <gtest/gtest.h>

#include "lapcoef/corpus.hpp"
#include "lapcoef/errors.hpp"
#include "lapcoef/graph.hpp"
#include "lapcoef/graph_io.hpp"

using namespace lapcoef;

namespace {

Graph path(std::size_t n) { return generate_family(PathFamily{n}); }
Graph cycle(std::size_t n) { return generate_family(CycleFamily{n}); }
Graph star(std::size_t n) { return generate_family(StarFamily{n}); }
Graph complete(std::size_t n) { return generate_family(CompleteFamily{n}); }

GraphError::Code error_code(std::size_t n, std::initializer_list<Edge> edges) {
  try {
    Graph g(n, edges);
  } catch (const GraphError& e) {
    return e.code();
  }
  ADD_FAILURE() << "no GraphError";
  return GraphError::Code::kInvalidFamily;
}

}  // namespace

TEST(Graph, ConstructionNormalisesAndSorts) {
  Graph g(3, {{2, 1}, {0, 1}});
  EXPECT_EQ(g.order(), 3u);
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g.edges()[0], Edge(0, 1));
  EXPECT_EQ(g.edges()[1], Edge(1, 2));
  EXPECT_EQ(g.edge_index(2, 1), 1u);
  EXPECT_FALSE(g.edge_index(0, 2));
  EXPECT_EQ(Graph(2, {{0, 1}}).size(), 1u);
}

TEST(Graph, RejectsMalformedInput) {
  EXPECT_EQ(error_code(3, {{0, 1}, {1, 1}}), GraphError::Code::kSelfLoop);
  EXPECT_EQ(error_code(3, {{0, 1}, {1, 0}}), GraphError::Code::kDuplicateEdge);
  EXPECT_EQ(error_code(3, {{0, 3}}), GraphError::Code::kVertexOutOfRange);
}

TEST(Families, RootedTreeAndDecoratedCycle) {
  Graph t = generate_family(RootedTreeFamily{3, 2});
  EXPECT_EQ(t.order(), 10u);
  EXPECT_EQ(t.size(), 9u);
  EXPECT_EQ(rooted_tree_order(4, 3), 53u);
  Graph d = generate_family(DecoratedCycleFamily{{1, 0, 0}});
  EXPECT_EQ(d.order(), 4u);
  EXPECT_EQ(d.size(), 4u);
  EXPECT_EQ(generate_family(PrueferFamily{{}}), Graph(2, {{0, 1}}));
  EXPECT_EQ(generate_family(parse_family("T,3,2")), t);
  EXPECT_THROW(parse_family("Q,3"), Error);
}

TEST(Families, RecognizeRootedTree) {
  for (std::size_t k : {3, 4, 5}) {
    for (std::size_t t = 1; t <= 3; ++t) {
      auto r = recognize_rooted_tree(generate_family(RootedTreeFamily{k, t}));
      ASSERT_TRUE(r) << k << "," << t;
      EXPECT_EQ(*r, std::make_pair(k, t));
    }
  }
  EXPECT_FALSE(recognize_rooted_tree(path(6)));
  EXPECT_FALSE(recognize_rooted_tree(cycle(4)));
}

TEST(Transforms, LineGraph) {
  EXPECT_EQ(line_graph(path(4)), path(3));
  EXPECT_EQ(line_graph(star(4)), cycle(3));
  EXPECT_EQ(canonical_mask(line_graph(cycle(5))), canonical_mask(cycle(5)));
  Graph l2 = iterated_line_graph(star(4), 2);
  EXPECT_EQ(l2, cycle(3));
  EXPECT_EQ(iterated_line_graph(path(5), 0), path(5));
}

TEST(Transforms, Subdivision) {
  Graph s = subdivision(path(3));
  EXPECT_EQ(s.order(), 5u);
  EXPECT_TRUE(is_tree(s));
  EXPECT_TRUE(girth(subdivision(cycle(3))).equals(6));
  Graph spider = subdivision(star(4));
  EXPECT_EQ(spider.order(), 7u);
  EXPECT_EQ(spider.degree(0), 3u);
}

TEST(Transforms, DeleteVertices) {
  const Vertex one[] = {1};
  Graph g = delete_vertices(path(4), one);
  EXPECT_EQ(g, Graph(3, {{1, 2}}));
  const Vertex all[] = {0, 1, 2};
  EXPECT_EQ(delete_vertices(path(3), all).order(), 0u);
  const Vertex first[] = {0};
  EXPECT_EQ(delete_vertices(cycle(4), first), Graph(3, {{0, 1}, {1, 2}}));
}

TEST(Structure, Girth) {
  EXPECT_TRUE(girth(cycle(5)).equals(5));
  EXPECT_TRUE(girth(path(7)).is_unbounded());
  EXPECT_TRUE(girth(complete(4)).equals(3));
  EXPECT_TRUE(Girth::unbounded().at_least(5));
  EXPECT_FALSE(girth(cycle(4)).at_least(5));
}

TEST(Structure, Connectivity) {
  Graph two = disjoint_union(path(2), path(3));
  EXPECT_FALSE(is_connected(two));
  EXPECT_EQ(component_count(two), 2u);
  EXPECT_TRUE(is_forest(two));
  EXPECT_FALSE(is_tree(two));
  EXPECT_TRUE(is_connected(Graph(1, {})));
  auto d = distances_from(two, 0);
  EXPECT_EQ(d[1], 1);
  EXPECT_EQ(d[2], -1);
}

TEST(GraphIo, EdgeList) {
  EXPECT_EQ(parse_edge_list("3\n0 1\n1 2\n"), path(3));
  EXPECT_EQ(emit_edge_list(path(3)), "3\n0 1\n1 2\n");
  EXPECT_THROW(parse_edge_list("3\n0 1\n1 1\n"), Error);
  EXPECT_THROW(parse_edge_list("x\n"), ParseError);
}

TEST(GraphIo, Graph6KnownVectors) {
  EXPECT_EQ(parse_graph6("A_"), path(2));
  EXPECT_EQ(parse_graph6("Bw"), complete(3));
  EXPECT_EQ(parse_graph6("?").order(), 0u);
  EXPECT_EQ(emit_graph6(complete(4)), "C~");
  EXPECT_EQ(emit_graph6(cycle(5)), "Dhc");
  EXPECT_EQ(parse_graph6(">>graph6<<A_"), path(2));
  EXPECT_THROW(parse_graph6("A"), ParseError);
  EXPECT_THROW(parse_graph6("A\x7f"), ParseError);
}

TEST(GraphIo, Graph6RoundTrip) {
  for (std::size_t n = 1; n <= 70; n += 7) {
    Graph g = generate_family(CycleFamily{std::max<std::size_t>(n, 3)});
    EXPECT_EQ(parse_graph6(emit_graph6(g)), g);
  }
  Graph big = generate_family(RootedTreeFamily{4, 3});
  EXPECT_EQ(parse_graph6(emit_graph6(big)), big);
}

TEST(GraphIo, Graph6Stream) {
  std::istringstream in("A_\n\nnot graph6\nBw\n");
  std::vector<Graph> got;
  auto stats = for_each_graph6(in, [&](Graph g) { got.push_back(std::move(g)); });
  EXPECT_EQ(stats.parsed, 2u);
  EXPECT_EQ(stats.malformed, 1u);
  ASSERT_EQ(got.size(), 2u);
  EXPECT_EQ(got[1], complete(3));
}
