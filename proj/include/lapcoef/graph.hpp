#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace lapcoef {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Edges are stored with u < v, sorted lexicographically; the position of an
/// edge in edges() is its canonical index, which fixes the vertex labels of
/// line_graph() and subdivision().
class Graph {
 public:
  Graph() = default;

  // Validating constructor. Pairs may be given in either orientation.
  // Throws GraphError on out-of-range endpoints, self-loops or duplicates.
  Graph(std::size_t n, std::span<const Edge> edges);
  Graph(std::size_t n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool adjacent(Vertex u, Vertex v) const;

  // Index of edge {u,v} in edges(), or nullopt.
  std::optional<std::size_t> edge_index(Vertex u, Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> adj_;  // sorted per vertex
};

Graph build_graph(std::size_t n, std::span<const Edge> edges);

// Disjoint union; vertices of b are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

// ---- families ------------------------------------------------------------

struct PathFamily { std::size_t n; };
struct StarFamily { std::size_t n; };  // n vertices: one center, n-1 leaves
struct CycleFamily { std::size_t n; };
struct CompleteFamily { std::size_t n; };
// Every internal vertex has degree k, every leaf is at distance t from the center.
struct RootedTreeFamily { std::size_t k; std::size_t t; };
// C_k with pendants[i] pendant edges attached to cycle vertex i.
struct DecoratedCycleFamily { std::vector<std::size_t> pendants; };
struct PrueferFamily { std::vector<Vertex> sequence; };

using FamilySpec = std::variant<PathFamily, StarFamily, CycleFamily, CompleteFamily,
                                RootedTreeFamily, DecoratedCycleFamily, PrueferFamily>;

Graph generate_family(const FamilySpec& spec);

// Parses "P,5", "S,5", "C,5", "K,4", "T,3,2", "D,1,0,0" (pendant counts), "U,0,0" (Pruefer).
FamilySpec parse_family(const std::string& text);

std::size_t rooted_tree_order(std::size_t k, std::size_t t);

// ---- transforms ----------------------------------------------------------

Graph line_graph(const Graph& g);
Graph iterated_line_graph(const Graph& g, std::size_t k);
Graph subdivision(const Graph& g);
// Removes the given vertices; survivors are relabeled preserving order.
Graph delete_vertices(const Graph& g, std::span<const Vertex> removed);

// ---- structure -----------------------------------------------------------

/// Shortest-cycle length; nullopt encodes an unbounded girth (a forest).
class Girth {
 public:
  static Girth unbounded() { return Girth(std::nullopt); }
  static Girth finite(std::size_t v) { return Girth(v); }

  bool is_unbounded() const noexcept { return !value_; }
  std::size_t value() const { return value_.value(); }
  // Unbounded satisfies every lower bound.
  bool at_least(std::size_t bound) const noexcept { return !value_ || *value_ >= bound; }
  bool equals(std::size_t v) const noexcept { return value_ && *value_ == v; }
  std::string to_string() const;

  friend bool operator==(const Girth&, const Girth&) = default;

 private:
  explicit Girth(std::optional<std::size_t> v) : value_(v) {}
  std::optional<std::size_t> value_;
};

Girth girth(const Graph& g);
bool is_connected(const Graph& g);
bool is_forest(const Graph& g);
bool is_tree(const Graph& g);
std::size_t component_count(const Graph& g);

// BFS distances from source; unreachable vertices get -1.
std::vector<int> distances_from(const Graph& g, Vertex source);

// If g is isomorphic to T(k,t) for some k >= 3, t >= 1, returns (k, t).
std::optional<std::pair<std::size_t, std::size_t>> recognize_rooted_tree(const Graph& g);

std::string describe(const Graph& g);  // short "n=.. m=.." tag for diagnostics

}  // namespace lapcoef
