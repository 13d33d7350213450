#include "lapcoef/graph.hpp"

#include <algorithm>
#include <charconv>
#include <queue>
#include <sstream>

#include "lapcoef/errors.hpp"
#include "lapcoef/exact.hpp"
#include "lapcoef/trees.hpp"

namespace lapcoef {

Int require_integer(const Rational& v, const char* what) {
  Rational c(v);
  c.canonicalize();
  if (c.get_den() != 1) {
    throw ArithmeticError(std::string(what) + ": non-integral value " + c.get_str());
  }
  return c.get_num();
}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : n_(n) {
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw GraphError(GraphError::Code::kVertexOutOfRange,
                       "edge (" + std::to_string(u) + "," + std::to_string(v) +
                           ") has an endpoint outside 0.." + std::to_string(n) + "-1");
    }
    if (u == v) {
      throw GraphError(GraphError::Code::kSelfLoop, "self-loop at vertex " + std::to_string(u));
    }
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw GraphError(GraphError::Code::kDuplicateEdge,
                     "duplicate edge (" + std::to_string(dup->first) + "," +
                         std::to_string(dup->second) + ")");
  }

  offsets_.assign(n + 1, 0);
  for (auto [u, v] : edges_) {
    ++offsets_[u + 1];
    ++offsets_[v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) offsets_[i + 1] += offsets_[i];
  adj_.resize(2 * edges_.size());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (auto [u, v] : edges_) {
    adj_[fill[u]++] = v;
    adj_[fill[v]++] = u;
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::sort(adj_.begin() + offsets_[i], adj_.begin() + offsets_[i + 1]);
  }
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_) return false;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::optional<std::size_t> Graph::edge_index(Vertex u, Vertex v) const {
  Edge e{std::min(u, v), std::max(u, v)};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

Graph build_graph(std::size_t n, std::span<const Edge> edges) { return Graph(n, edges); }

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> e(a.edges());
  const auto shift = static_cast<Vertex>(a.order());
  for (auto [u, v] : b.edges()) e.emplace_back(u + shift, v + shift);
  return Graph(a.order() + b.order(), e);
}

// ---- families ------------------------------------------------------------

std::size_t rooted_tree_order(std::size_t k, std::size_t t) {
  // (k(k-1)^t - 2) / (k-2)
  std::size_t p = 1;
  for (std::size_t i = 0; i < t; ++i) p *= (k - 1);
  return (k * p - 2) / (k - 2);
}

namespace {

[[noreturn]] void bad_family(const std::string& what) {
  throw GraphError(GraphError::Code::kInvalidFamily, what);
}

Graph make_rooted_tree(std::size_t k, std::size_t t) {
  if (k < 3 || t < 1) bad_family("RootedTree requires k >= 3 and t >= 1");
  std::vector<Edge> edges;
  std::vector<Vertex> frontier{0};
  Vertex next = 1;
  for (std::size_t level = 0; level < t; ++level) {
    std::vector<Vertex> grown;
    for (Vertex v : frontier) {
      const std::size_t children = (v == 0) ? k : k - 1;
      for (std::size_t c = 0; c < children; ++c) {
        edges.emplace_back(v, next);
        grown.push_back(next++);
      }
    }
    frontier = std::move(grown);
  }
  return Graph(next, edges);
}

Graph make_decorated_cycle(const std::vector<std::size_t>& pendants) {
  const std::size_t k = pendants.size();
  if (k < 3) bad_family("DecoratedCycle requires k >= 3");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < k; ++i) {
    edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % k));
  }
  auto next = static_cast<Vertex>(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < pendants[i]; ++j) edges.emplace_back(static_cast<Vertex>(i), next++);
  }
  return Graph(next, edges);
}

}  // namespace

Graph generate_family(const FamilySpec& spec) {
  return std::visit(
      [](const auto& f) -> Graph {
        using F = std::decay_t<decltype(f)>;
        std::vector<Edge> edges;
        if constexpr (std::is_same_v<F, PathFamily>) {
          if (f.n < 1) bad_family("Path requires n >= 1");
          for (std::size_t i = 0; i + 1 < f.n; ++i) edges.emplace_back(i, i + 1);
          return Graph(f.n, edges);
        } else if constexpr (std::is_same_v<F, StarFamily>) {
          if (f.n < 1) bad_family("Star requires n >= 1");
          for (std::size_t i = 1; i < f.n; ++i) edges.emplace_back(0, i);
          return Graph(f.n, edges);
        } else if constexpr (std::is_same_v<F, CycleFamily>) {
          if (f.n < 3) bad_family("Cycle requires n >= 3");
          for (std::size_t i = 0; i < f.n; ++i) edges.emplace_back(i, (i + 1) % f.n);
          return Graph(f.n, edges);
        } else if constexpr (std::is_same_v<F, CompleteFamily>) {
          for (std::size_t i = 0; i < f.n; ++i)
            for (std::size_t j = i + 1; j < f.n; ++j) edges.emplace_back(i, j);
          return Graph(f.n, edges);
        } else if constexpr (std::is_same_v<F, RootedTreeFamily>) {
          return make_rooted_tree(f.k, f.t);
        } else if constexpr (std::is_same_v<F, DecoratedCycleFamily>) {
          return make_decorated_cycle(f.pendants);
        } else {
          return pruefer_decode(f.sequence);
        }
      },
      spec);
}

FamilySpec parse_family(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) parts.push_back(item);
  if (parts.empty()) bad_family("empty family spec");
  std::vector<std::size_t> nums;
  for (std::size_t i = 1; i < parts.size(); ++i) {
    std::size_t v = 0;
    const auto& s = parts[i];
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) bad_family("bad number '" + s + "' in family spec");
    nums.push_back(v);
  }
  const std::string& tag = parts[0];
  auto want = [&](std::size_t count) {
    if (nums.size() != count) bad_family("family '" + tag + "' expects " + std::to_string(count) + " parameter(s)");
  };
  if (tag == "P") { want(1); return PathFamily{nums[0]}; }
  if (tag == "S") { want(1); return StarFamily{nums[0]}; }
  if (tag == "C") { want(1); return CycleFamily{nums[0]}; }
  if (tag == "K") { want(1); return CompleteFamily{nums[0]}; }
  if (tag == "T") { want(2); return RootedTreeFamily{nums[0], nums[1]}; }
  if (tag == "D") return DecoratedCycleFamily{nums};
  if (tag == "U") return PrueferFamily{std::vector<Vertex>(nums.begin(), nums.end())};
  bad_family("unknown family '" + tag + "'");
}

// ---- transforms ----------------------------------------------------------

Graph line_graph(const Graph& g) {
  std::vector<Edge> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    std::vector<Vertex> incident;
    for (Vertex u : g.neighbors(v)) incident.push_back(static_cast<Vertex>(*g.edge_index(u, v)));
    for (std::size_t i = 0; i < incident.size(); ++i)
      for (std::size_t j = i + 1; j < incident.size(); ++j) out.emplace_back(incident[i], incident[j]);
  }
  // In a simple graph two distinct edges share at most one endpoint.
  return Graph(g.size(), out);
}

Graph iterated_line_graph(const Graph& g, std::size_t k) {
  Graph h = g;
  for (std::size_t i = 0; i < k; ++i) h = line_graph(h);
  return h;
}

Graph subdivision(const Graph& g) {
  std::vector<Edge> out;
  out.reserve(2 * g.size());
  const auto n = static_cast<Vertex>(g.order());
  for (std::size_t i = 0; i < g.size(); ++i) {
    auto [u, v] = g.edges()[i];
    const auto mid = static_cast<Vertex>(n + i);
    out.emplace_back(u, mid);
    out.emplace_back(v, mid);
  }
  return Graph(g.order() + g.size(), out);
}

Graph delete_vertices(const Graph& g, std::span<const Vertex> removed) {
  std::vector<char> gone(g.order(), 0);
  for (Vertex v : removed) {
    if (v >= g.order()) {
      throw GraphError(GraphError::Code::kVertexOutOfRange, "vertex " + std::to_string(v) + " out of range");
    }
    gone[v] = 1;
  }
  std::vector<Vertex> label(g.order());
  Vertex next = 0;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!gone[v]) label[v] = next++;
  std::vector<Edge> out;
  for (auto [u, v] : g.edges())
    if (!gone[u] && !gone[v]) out.emplace_back(label[u], label[v]);
  return Graph(next, out);
}

// ---- structure -----------------------------------------------------------

std::string Girth::to_string() const { return value_ ? std::to_string(*value_) : "unbounded"; }

std::vector<int> distances_from(const Graph& g, Vertex source) {
  std::vector<int> dist(g.order(), -1);
  std::queue<Vertex> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop();
    for (Vertex u : g.neighbors(v)) {
      if (dist[u] < 0) {
        dist[u] = dist[v] + 1;
        q.push(u);
      }
    }
  }
  return dist;
}

Girth girth(const Graph& g) {
  // BFS from every vertex; a non-tree edge (v,u) closes a cycle of length
  // at most dist[v] + dist[u] + 1, and the minimum over all roots is exact.
  std::size_t best = 0;
  std::vector<int> dist(g.order());
  std::vector<Vertex> parent(g.order());
  for (Vertex s = 0; s < g.order(); ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::queue<Vertex> q;
    dist[s] = 0;
    parent[s] = s;
    q.push(s);
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      for (Vertex u : g.neighbors(v)) {
        if (dist[u] < 0) {
          dist[u] = dist[v] + 1;
          parent[u] = v;
          q.push(u);
        } else if (parent[v] != u) {
          const auto len = static_cast<std::size_t>(dist[u] + dist[v] + 1);
          if (best == 0 || len < best) best = len;
        }
      }
    }
  }
  return best == 0 ? Girth::unbounded() : Girth::finite(best);
}

std::size_t component_count(const Graph& g) {
  std::vector<char> seen(g.order(), 0);
  std::size_t count = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    ++count;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex u : g.neighbors(v)) {
        if (!seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
      }
    }
  }
  return count;
}

bool is_connected(const Graph& g) { return component_count(g) <= 1; }

bool is_forest(const Graph& g) { return g.size() + component_count(g) == g.order(); }

bool is_tree(const Graph& g) { return g.order() >= 1 && g.size() + 1 == g.order() && is_connected(g); }

std::optional<std::pair<std::size_t, std::size_t>> recognize_rooted_tree(const Graph& g) {
  if (!is_tree(g) || g.order() < 4) return std::nullopt;
  std::size_t k = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto d = g.degree(v);
    if (d == 1) continue;
    if (k == 0) k = d;
    if (d != k) return std::nullopt;
  }
  if (k < 3) return std::nullopt;
  const auto centers = tree_centers(g);
  if (centers.size() != 1) return std::nullopt;
  const auto dist = distances_from(g, centers.front());
  int t = -1;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 1) continue;
    if (t < 0) t = dist[v];
    if (dist[v] != t) return std::nullopt;
  }
  if (rooted_tree_order(k, static_cast<std::size_t>(t)) != g.order()) return std::nullopt;
  return std::make_pair(k, static_cast<std::size_t>(t));
}

std::string describe(const Graph& g) {
  return "n=" + std::to_string(g.order()) + " m=" + std::to_string(g.size());
}

}  // namespace lapcoef
