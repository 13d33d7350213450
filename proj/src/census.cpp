#include "lapcoef/census.hpp"

#include <algorithm>
#include <map>

#include "lapcoef/errors.hpp"
#include "lapcoef/spectra.hpp"

namespace lapcoef {

namespace {

struct PatternInfo {
  PatternId id;
  std::string_view name;
  Graph graph;
};

Graph complete(std::size_t n) { return generate_family(CompleteFamily{n}); }
Graph cycle(std::size_t n) { return generate_family(CycleFamily{n}); }

const std::vector<PatternInfo>& patterns() {
  static const std::vector<PatternInfo> table = {
      {PatternId::kP2, "P2", Graph(2, {{0, 1}})},
      {PatternId::kP3, "P3", Graph(3, {{0, 1}, {1, 2}})},
      {PatternId::kP4, "P4", Graph(4, {{0, 1}, {1, 2}, {2, 3}})},
      {PatternId::kS4, "S4", Graph(4, {{0, 1}, {0, 2}, {0, 3}})},
      {PatternId::kC3, "C3", cycle(3)},
      {PatternId::kC4, "C4", cycle(4)},
      {PatternId::kC5, "C5", cycle(5)},
      {PatternId::kC6, "C6", cycle(6)},
      {PatternId::kK4, "K4", complete(4)},
      {PatternId::kK4MinusEdge, "K4e", Graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}})},
      {PatternId::kC3Pendant, "paw", Graph(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}})},
      {PatternId::kC4Pendant, "C4p", Graph(5, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}})},
      {PatternId::kBowtie, "bowtie", Graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {3, 4}})},
      {PatternId::kK5, "K5", complete(5)},
      {PatternId::kK6, "K6", complete(6)},
  };
  return table;
}

const PatternInfo& info(PatternId p) {
  for (const auto& e : patterns()) {
    if (e.id == p) return e;
  }
  throw Error("unknown pattern");
}

// Enumerates injective maps pattern -> g preserving pattern edges.
class Embedder {
 public:
  Embedder(const Graph& pattern, const Graph& g) : p_(pattern), g_(g) {
    // Visit pattern vertices so each one after the first has an earlier neighbour.
    const std::size_t k = p_.order();
    std::vector<bool> seen(k, false);
    Vertex start = 0;
    for (Vertex v = 0; v < k; ++v) {
      if (p_.degree(v) > p_.degree(start)) start = v;
    }
    order_.push_back(start);
    seen[start] = true;
    for (std::size_t i = 0; i < order_.size(); ++i) {
      for (Vertex u : p_.neighbors(order_[i])) {
        if (!seen[u]) {
          seen[u] = true;
          order_.push_back(u);
        }
      }
    }
    anchor_.assign(k, 0);
    for (std::size_t i = 1; i < k; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (p_.adjacent(order_[i], order_[j])) {
          anchor_[i] = order_[j];
          break;
        }
      }
    }
    image_.assign(k, 0);
    used_.assign(g_.order(), false);
  }

  template <class Visit>
  void run(Visit&& visit) {
    if (p_.order() > g_.order()) return;
    for (Vertex v = 0; v < g_.order(); ++v) {
      if (g_.degree(v) < p_.degree(order_[0])) continue;
      place(0, v, visit);
    }
  }

  const std::vector<Vertex>& image() const { return image_; }

 private:
  template <class Visit>
  void place(std::size_t depth, Vertex v, Visit& visit) {
    const Vertex pv = order_[depth];
    for (std::size_t j = 0; j < depth; ++j) {
      if (p_.adjacent(pv, order_[j]) && !g_.adjacent(v, image_[order_[j]])) return;
    }
    image_[pv] = v;
    used_[v] = true;
    if (depth + 1 == order_.size()) {
      visit();
    } else {
      const Vertex next = order_[depth + 1];
      for (Vertex w : g_.neighbors(image_[anchor_[depth + 1]])) {
        if (!used_[w] && g_.degree(w) >= p_.degree(next)) place(depth + 1, w, visit);
      }
    }
    used_[v] = false;
  }

  const Graph& p_;
  const Graph& g_;
  std::vector<Vertex> order_;
  std::vector<Vertex> anchor_;
  std::vector<Vertex> image_;
  std::vector<bool> used_;
};

}  // namespace

const Graph& pattern_graph(PatternId p) { return info(p).graph; }

std::string_view pattern_name(PatternId p) { return info(p).name; }

std::optional<PatternId> parse_pattern(std::string_view name) {
  for (const auto& e : patterns()) {
    if (e.name == name) return e.id;
  }
  return std::nullopt;
}

std::size_t automorphism_count(PatternId p) {
  static const std::map<PatternId, std::size_t> cache = [] {
    std::map<PatternId, std::size_t> out;
    for (const auto& e : patterns()) {
      std::size_t count = 0;
      Embedder(e.graph, e.graph).run([&] { ++count; });
      out[e.id] = count;
    }
    return out;
  }();
  return cache.at(p);
}

Int count_pattern(const Graph& g, PatternId p) {
  std::size_t count = 0;
  Embedder(pattern_graph(p), g).run([&] { ++count; });
  return Int(static_cast<unsigned long>(count / automorphism_count(p)));
}

std::vector<PatternCopies> pattern_copies(const Graph& g, PatternId p) {
  std::map<std::vector<Vertex>, std::size_t> by_set;
  Embedder e(pattern_graph(p), g);
  e.run([&] {
    auto vs = e.image();
    std::sort(vs.begin(), vs.end());
    ++by_set[vs];
  });
  const std::size_t aut = automorphism_count(p);
  std::vector<PatternCopies> out;
  out.reserve(by_set.size());
  for (auto& [vs, count] : by_set) out.push_back({vs, count / aut});
  return out;
}

Int triangle_count(const Graph& g) { return count_pattern(g, PatternId::kC3); }

Int closed_walks_trace(const Graph& g, std::size_t k) {
  if (k == 0) return Int(static_cast<unsigned long>(g.order()));
  return adjacency_traces(g, k)[k - 1];
}

namespace {

std::size_t walks_from(const Graph& g, Vertex start, Vertex at, std::size_t left) {
  if (left == 0) return at == start ? 1 : 0;
  std::size_t total = 0;
  for (Vertex w : g.neighbors(at)) total += walks_from(g, start, w, left - 1);
  return total;
}

}  // namespace

Int closed_walks_enum(const Graph& g, std::size_t k) {
  if (k > 8 || g.order() > 12) throw ScaleError("closed_walks_enum is limited to k <= 8, n <= 12");
  Int total = 0;
  for (Vertex v = 0; v < g.order(); ++v) total += static_cast<unsigned long>(walks_from(g, v, v, k));
  return total;
}

Int walk_count_formula(const Graph& g, std::size_t k) {
  auto c = [&](PatternId p) { return count_pattern(g, p); };
  const Int m = static_cast<unsigned long>(g.size());
  switch (k) {
    case 1:
      return 0;
    case 2:
      return 2 * m;
    case 3:
      return 6 * triangle_count(g);
    case 4:
      return 2 * m + 4 * c(PatternId::kP3) + 8 * c(PatternId::kC4);
    case 5:
      return 30 * c(PatternId::kC3) + 10 * c(PatternId::kC5) + 10 * c(PatternId::kC3Pendant);
    case 6:
      return 2 * m + 12 * c(PatternId::kP3) + 6 * c(PatternId::kP4) + 12 * c(PatternId::kS4) +
             24 * c(PatternId::kC3) + 48 * c(PatternId::kC4) + 36 * c(PatternId::kK4MinusEdge) +
             12 * c(PatternId::kC4Pendant) + 12 * c(PatternId::kC6) + 24 * c(PatternId::kBowtie);
    default:
      throw PreconditionError("walk_count_formula supports 1 <= k <= 6");
  }
}

}  // namespace lapcoef
