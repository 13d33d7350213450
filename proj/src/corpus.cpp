#include "lapcoef/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "lapcoef/errors.hpp"
#include "lapcoef/graph_io.hpp"
#include "lapcoef/trees.hpp"

namespace lapcoef {

namespace {

constexpr std::size_t pair_bit(std::size_t i, std::size_t j) { return j * (j - 1) / 2 + i; }

// Colour refinement to a stable, canonically numbered partition.
std::vector<int> refine(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<int> color(n, 0);
  for (std::size_t round = 0; round <= n; ++round) {
    std::vector<std::pair<std::vector<int>, Vertex>> sig(n);
    for (Vertex v = 0; v < n; ++v) {
      std::vector<int> s{color[v]};
      std::vector<int> nb;
      for (Vertex u : g.neighbors(v)) nb.push_back(color[u]);
      std::sort(nb.begin(), nb.end());
      s.insert(s.end(), nb.begin(), nb.end());
      sig[v] = {std::move(s), v};
    }
    std::vector<std::vector<int>> keys;
    for (auto& [s, v] : sig) keys.push_back(s);
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    std::vector<int> next(n);
    for (auto& [s, v] : sig) {
      next[v] = static_cast<int>(std::lower_bound(keys.begin(), keys.end(), s) - keys.begin());
    }
    const bool stable = std::set<int>(next.begin(), next.end()).size() ==
                        std::set<int>(color.begin(), color.end()).size();
    color = std::move(next);
    if (stable) break;
  }
  return color;
}

struct CanonSearch {
  const Graph& g;
  std::vector<std::vector<Vertex>> cell_of_position;  // candidates for each position
  std::vector<Vertex> placed;
  std::vector<bool> used;
  std::uint64_t best = ~std::uint64_t{0};

  void run(std::size_t pos) {
    if (pos == placed.size()) {
      std::uint64_t mask = 0;
      for (std::size_t j = 1; j < placed.size(); ++j) {
        for (std::size_t i = 0; i < j; ++i) {
          if (g.adjacent(placed[i], placed[j])) mask |= std::uint64_t{1} << pair_bit(i, j);
        }
      }
      best = std::min(best, mask);
      return;
    }
    for (Vertex v : cell_of_position[pos]) {
      if (used[v]) continue;
      used[v] = true;
      placed[pos] = v;
      run(pos + 1);
      used[v] = false;
    }
  }
};

Graph from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<Edge> edges;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (mask >> pair_bit(i, j) & 1) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  return Graph(n, edges);
}

}  // namespace

std::uint64_t canonical_mask(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kMaxExhaustiveGraphOrder) throw ScaleError("canonical_mask supports n <= 8");
  auto color = refine(g);
  std::vector<Vertex> order(n);
  for (Vertex v = 0; v < n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return color[a] < color[b]; });
  CanonSearch search{g, {}, std::vector<Vertex>(n), std::vector<bool>(n, false)};
  for (std::size_t pos = 0; pos < n; ++pos) {
    std::vector<Vertex> cell;
    for (Vertex v = 0; v < n; ++v) {
      if (color[v] == color[order[pos]]) cell.push_back(v);
    }
    search.cell_of_position.push_back(std::move(cell));
  }
  search.run(0);
  return n == 0 ? 0 : search.best;
}

std::vector<Graph> all_graphs(std::size_t n) {
  if (n > kMaxExhaustiveGraphOrder) throw ScaleError("exhaustive graph enumeration supports n <= 8");
  // Every graph on k+1 vertices is a graph on k vertices plus one vertex joined
  // to some subset, so extend class representatives and dedupe canonically.
  std::vector<std::uint64_t> level{0};
  for (std::size_t k = 0; k < n; ++k) {
    std::set<std::uint64_t> next;
    for (std::uint64_t mask : level) {
      Graph base = from_mask(k, mask);
      for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << k); ++sub) {
        std::vector<Edge> edges = base.edges();
        for (std::size_t i = 0; i < k; ++i) {
          if (sub >> i & 1) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(k));
        }
        next.insert(canonical_mask(Graph(k + 1, edges)));
      }
    }
    level.assign(next.begin(), next.end());
  }
  std::vector<Graph> out;
  out.reserve(level.size());
  for (std::uint64_t mask : level) out.push_back(from_mask(n, mask));
  return out;
}

std::vector<Graph> connected_graphs(std::size_t n) {
  std::vector<Graph> out;
  for (auto& g : all_graphs(n)) {
    if (is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

Graph random_graph(std::size_t nmax, std::mt19937_64& rng) {
  static constexpr double kDensities[] = {0.2, 0.35, 0.5, 0.7};
  const std::size_t n = 1 + rng() % nmax;
  const double p = kDensities[rng() % 4];
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < p) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

Graph random_decorated_cycle(std::mt19937_64& rng) {
  const std::size_t k = 5 + rng() % 5;
  std::vector<std::size_t> pendants(k);
  for (auto& l : pendants) l = rng() % 3;
  return generate_family(DecoratedCycleFamily{pendants});
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, sep);) parts.push_back(item);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

std::size_t to_count(const std::string& s, const std::string& spec) {
  try {
    std::size_t used = 0;
    auto v = std::stoull(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::logic_error&) {
    throw ParseError("bad number '" + s + "' in corpus spec '" + spec + "'");
  }
}

void append_one(const std::string& spec, std::mt19937_64& rng, Corpus& out) {
  auto parts = split(spec, ':');
  if (parts.empty()) throw ParseError("empty corpus spec");
  const std::string& kind = parts[0];
  auto arity = [&](std::size_t k) {
    if (parts.size() != k + 1) throw ParseError("corpus spec '" + spec + "' expects " + std::to_string(k) + " argument(s)");
  };
  if (kind == "all-trees") {
    arity(1);
    for (std::size_t n = 1; n <= to_count(parts[1], spec); ++n) {
      for (auto& g : unlabeled_trees(n)) out.graphs.push_back(std::move(g));
    }
  } else if (kind == "connected") {
    arity(1);
    for (std::size_t n = 1; n <= to_count(parts[1], spec); ++n) {
      for (auto& g : connected_graphs(n)) out.graphs.push_back(std::move(g));
    }
  } else if (kind == "random-trees") {
    arity(2);
    const auto nmax = to_count(parts[1], spec);
    const auto count = to_count(parts[2], spec);
    if (nmax == 0) throw ParseError("random-trees needs N >= 1");
    for (std::size_t i = 0; i < count; ++i) out.graphs.push_back(random_tree(1 + rng() % nmax, rng));
  } else if (kind == "random-graphs") {
    arity(2);
    const auto nmax = to_count(parts[1], spec);
    const auto count = to_count(parts[2], spec);
    if (nmax == 0) throw ParseError("random-graphs needs N >= 1");
    for (std::size_t i = 0; i < count; ++i) out.graphs.push_back(random_graph(nmax, rng));
  } else if (kind == "girth5-cycles") {
    arity(1);
    for (std::size_t k = 5; k <= 9; ++k) out.graphs.push_back(generate_family(CycleFamily{k}));
    const auto count = to_count(parts[1], spec);
    for (std::size_t i = 0; i < count; ++i) out.graphs.push_back(random_decorated_cycle(rng));
  } else if (kind == "graph6") {
    if (parts.size() < 2) throw ParseError("graph6 corpus needs a path or '-'");
    // Paths may themselves contain ':'.
    std::string path = spec.substr(kind.size() + 1);
    auto sink = [&](Graph g) { out.graphs.push_back(std::move(g)); };
    StreamStats stats;
    if (path == "-") {
      stats = for_each_graph6(std::cin, sink);
    } else {
      std::ifstream in(path);
      if (!in) throw ParseError("cannot read corpus file '" + path + "'");
      stats = for_each_graph6(in, sink);
    }
    out.malformed += stats.malformed;
  } else {
    throw ParseError("unknown corpus kind '" + kind + "'");
  }
}

}  // namespace

Corpus build_corpus(const std::string& spec, std::uint64_t seed) {
  Corpus out;
  out.descriptor = spec + "@seed=" + std::to_string(seed);
  std::mt19937_64 rng(seed);
  for (const auto& part : split(spec, '+')) append_one(part, rng, out);
  return out;
}

}  // namespace lapcoef
