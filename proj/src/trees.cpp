#include "lapcoef/trees.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>

#include "lapcoef/errors.hpp"

namespace lapcoef {

Graph pruefer_decode(std::span<const Vertex> sequence) {
  const std::size_t n = sequence.size() + 2;
  std::vector<std::size_t> degree(n, 1);
  for (Vertex v : sequence) {
    if (v >= n) throw GraphError(GraphError::Code::kVertexOutOfRange, "Pruefer entry out of range");
    ++degree[v];
  }
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.push(v);
  }
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (Vertex v : sequence) {
    Vertex leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, v);
    if (--degree[v] == 1) leaves.push(v);
  }
  Vertex a = leaves.top();
  leaves.pop();
  edges.emplace_back(a, leaves.top());
  return Graph(n, edges);
}

std::vector<Vertex> pruefer_encode(const Graph& tree) {
  if (!is_tree(tree) || tree.order() < 2) throw PreconditionError("pruefer_encode needs a tree with n >= 2");
  const std::size_t n = tree.order();
  std::vector<std::size_t> degree(n);
  std::vector<bool> removed(n, false);
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = tree.degree(v);
    if (degree[v] == 1) leaves.push(v);
  }
  std::vector<Vertex> seq;
  while (seq.size() + 2 < n) {
    Vertex leaf = leaves.top();
    leaves.pop();
    removed[leaf] = true;
    for (Vertex u : tree.neighbors(leaf)) {
      if (removed[u]) continue;
      seq.push_back(u);
      if (--degree[u] == 1) leaves.push(u);
    }
  }
  return seq;
}

std::vector<Vertex> tree_centers(const Graph& tree) {
  const std::size_t n = tree.order();
  if (n == 0) return {};
  if (n == 1) return {0};
  std::vector<std::size_t> degree(n);
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = tree.degree(v);
    if (degree[v] <= 1) layer.push_back(v);
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<Vertex> next;
    for (Vertex v : layer) {
      for (Vertex u : tree.neighbors(v)) {
        if (--degree[u] == 1) next.push_back(u);
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

namespace {

std::string ahu(const Graph& tree, Vertex v, Vertex parent, bool has_parent) {
  std::vector<std::string> children;
  for (Vertex u : tree.neighbors(v)) {
    if (has_parent && u == parent) continue;
    children.push_back(ahu(tree, u, v, true));
  }
  std::sort(children.begin(), children.end());
  std::string out = "(";
  for (auto& c : children) out += c;
  out += ")";
  return out;
}

}  // namespace

std::string tree_canonical_form(const Graph& tree) {
  if (!is_tree(tree)) throw PreconditionError("tree_canonical_form needs a tree");
  auto centers = tree_centers(tree);
  std::string best;
  for (Vertex c : centers) {
    auto s = ahu(tree, c, 0, false);
    if (best.empty() || s < best) best = std::move(s);
  }
  return best;
}

namespace {

void check_tree_order(std::size_t n) {
  if (n < 1 || n > kMaxExhaustiveTreeOrder) {
    throw PreconditionError("exhaustive tree enumeration supports 1 <= n <= " +
                            std::to_string(kMaxExhaustiveTreeOrder));
  }
}

}  // namespace

std::vector<Graph> unlabeled_trees(std::size_t n) {
  check_tree_order(n);
  // Canonical augmentation: every tree on n vertices is a tree on n-1 vertices
  // plus one leaf, so extend each class representative and dedupe by canonical form.
  std::vector<Graph> level{Graph(1, {})};
  for (std::size_t order = 2; order <= n; ++order) {
    std::set<std::string> seen;
    std::vector<std::pair<std::string, Graph>> next;
    for (const Graph& t : level) {
      for (Vertex v = 0; v < t.order(); ++v) {
        std::vector<Edge> edges = t.edges();
        edges.emplace_back(v, static_cast<Vertex>(t.order()));
        Graph g(order, edges);
        auto key = tree_canonical_form(g);
        if (seen.insert(key).second) next.emplace_back(std::move(key), std::move(g));
      }
    }
    std::sort(next.begin(), next.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    level.clear();
    for (auto& [key, g] : next) level.push_back(std::move(g));
  }
  return level;
}

void for_each_tree(std::size_t n, Dedupe mode, const std::function<void(const Graph&)>& visit) {
  check_tree_order(n);
  if (mode == Dedupe::kIsomorphismClasses) {
    for (const Graph& g : unlabeled_trees(n)) visit(g);
    return;
  }
  if (n == 1) {
    visit(Graph(1, {}));
    return;
  }
  std::vector<Vertex> seq(n - 2, 0);
  while (true) {
    visit(pruefer_decode(seq));
    std::size_t i = 0;
    while (i < seq.size() && ++seq[i] == n) seq[i++] = 0;
    if (i == seq.size()) break;
  }
}

Graph random_tree(std::size_t n, std::mt19937_64& rng) {
  if (n == 0) return Graph();
  if (n == 1) return Graph(1, {});
  std::vector<Vertex> seq(n - 2);
  for (auto& v : seq) v = static_cast<Vertex>(rng() % n);
  return pruefer_decode(seq);
}

}  // namespace lapcoef
