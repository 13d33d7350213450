#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lapcoef/graph.hpp"

namespace lapcoef {

inline constexpr std::size_t kMaxExhaustiveGraphOrder = 8;

// One representative per isomorphism class of graphs on n vertices
// (connected and disconnected), deterministic order.
std::vector<Graph> all_graphs(std::size_t n);
std::vector<Graph> connected_graphs(std::size_t n);

// Canonical adjacency bitmask of a graph with n <= kMaxExhaustiveGraphOrder;
// equal iff isomorphic.
std::uint64_t canonical_mask(const Graph& g);

// G(n, p) with n drawn uniformly from 1..nmax and p from a fixed menu.
Graph random_graph(std::size_t nmax, std::mt19937_64& rng);

// C_k, k in 5..9, with 0..2 pendant edges per cycle vertex.
Graph random_decorated_cycle(std::mt19937_64& rng);

struct Corpus {
  std::string descriptor;
  std::vector<Graph> graphs;
  std::size_t malformed = 0;
};

// Corpus specs:
//   all-trees:N            deduped trees with 1 <= n <= N
//   connected:N            connected graphs up to isomorphism, n <= N
//   random-trees:N:COUNT   random labeled trees with n uniform in 1..N
//   random-graphs:N:COUNT  seeded G(n,p) graphs, n <= N
//   girth5-cycles:COUNT    C_5..C_9 followed by COUNT pendant-decorated cycles
//   graph6:PATH            one graph6 string per line; "-" reads stdin
// Several specs may be joined with '+'.
Corpus build_corpus(const std::string& spec, std::uint64_t seed);

}  // namespace lapcoef
