#include "lapcoef/matchings.hpp"

#include <functional>
#include <map>
#include <unordered_map>

#include "lapcoef/errors.hpp"

namespace lapcoef {

namespace {

using Poly = std::vector<Int>;  // truncated, index = matching size

void add_shifted(Poly& acc, const Poly& p, std::size_t shift) {
  for (std::size_t i = 0; i + shift < acc.size() && i < p.size(); ++i) acc[i + shift] += p[i];
}

Poly multiply(const Poly& a, const Poly& b, std::size_t kmax) {
  Poly r(kmax + 1, 0);
  for (std::size_t i = 0; i < a.size() && i <= kmax; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j <= kmax; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

// Rooted DP per component: free[v] counts matchings of v's subtree with v
// unmatched, all[v] with v matched or not.
Poly forest_matchings(const Graph& g, std::size_t kmax) {
  const std::size_t n = g.order();
  Poly result(kmax + 1, 0);
  result[0] = 1;
  std::vector<bool> seen(n, false);
  std::vector<Poly> free(n), all(n);
  std::vector<Vertex> parent(n);
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    std::vector<Vertex> order{root};
    seen[root] = true;
    parent[root] = root;
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (Vertex w : g.neighbors(order[i])) {
        if (!seen[w]) {
          seen[w] = true;
          parent[w] = order[i];
          order.push_back(w);
        }
      }
    }
    for (std::size_t i = order.size(); i-- > 0;) {
      const Vertex v = order[i];
      Poly f(kmax + 1, 0);
      f[0] = 1;
      std::vector<Vertex> kids;
      for (Vertex w : g.neighbors(v)) {
        if (w != parent[v]) kids.push_back(w);
      }
      for (Vertex w : kids) f = multiply(f, all[w], kmax);
      Poly a = f;
      // v matched to child w: replace all[w] by x * free[w].
      const std::size_t kids_n = kids.size();
      if (kids_n > 0 && kmax > 0) {
        // prefix/suffix products of all[] to avoid quadratic re-multiplication
        std::vector<Poly> prefix(kids_n + 1), suffix(kids_n + 1);
        prefix[0] = Poly(kmax + 1, 0);
        prefix[0][0] = 1;
        for (std::size_t j = 0; j < kids_n; ++j) prefix[j + 1] = multiply(prefix[j], all[kids[j]], kmax);
        suffix[kids_n] = prefix[0];
        for (std::size_t j = kids_n; j-- > 0;) suffix[j] = multiply(suffix[j + 1], all[kids[j]], kmax);
        for (std::size_t j = 0; j < kids_n; ++j) {
          Poly rest = multiply(prefix[j], suffix[j + 1], kmax);
          Poly term = multiply(rest, free[kids[j]], kmax);
          add_shifted(a, term, 1);
        }
      }
      free[v] = std::move(f);
      all[v] = std::move(a);
    }
    result = multiply(result, all[root], kmax);
  }
  return result;
}

// Vertex elimination along a fixed order. State: which not-yet-processed
// vertices were consumed by earlier matches; only frontier vertices can be.
class EliminationDp {
 public:
  EliminationDp(const Graph& g, std::size_t kmax) : g_(g), kmax_(kmax) {
    choose_order();
    words_ = (g.order() + 63) / 64;
    memo_.resize(g.order() + 1);
  }

  Poly run() {
    std::vector<std::uint64_t> removed(words_, 0);
    return solve(0, removed);
  }

 private:
  struct Hash {
    std::size_t operator()(const std::vector<std::uint64_t>& v) const {
      std::size_t h = 1469598103934665603ull;
      for (auto w : v) h = (h ^ w) * 1099511628211ull;
      return h;
    }
  };

  // Greedy order keeping the set of touched-but-unprocessed vertices small.
  void choose_order() {
    const std::size_t n = g_.order();
    std::vector<bool> done(n, false), frontier(n, false);
    position_.assign(n, 0);
    for (std::size_t step = 0; step < n; ++step) {
      std::size_t best_cost = SIZE_MAX;
      Vertex best = 0;
      for (Vertex v = 0; v < n; ++v) {
        if (done[v]) continue;
        std::size_t added = 0;
        for (Vertex w : g_.neighbors(v)) {
          if (!done[w] && !frontier[w]) ++added;
        }
        // prefer frontier vertices (they leave the frontier), then few new ones
        std::size_t cost = 2 * added + (frontier[v] ? 0 : 1);
        if (cost < best_cost) {
          best_cost = cost;
          best = v;
        }
      }
      done[best] = true;
      frontier[best] = false;
      for (Vertex w : g_.neighbors(best)) {
        if (!done[w]) frontier[w] = true;
      }
      position_[best] = step;
      order_.push_back(best);
    }
  }

  static bool test(const std::vector<std::uint64_t>& s, Vertex v) { return s[v / 64] >> (v % 64) & 1; }
  static void flip(std::vector<std::uint64_t>& s, Vertex v) { s[v / 64] ^= std::uint64_t{1} << (v % 64); }

  Poly solve(std::size_t i, std::vector<std::uint64_t>& removed) {
    if (i == order_.size()) {
      Poly p(kmax_ + 1, 0);
      p[0] = 1;
      return p;
    }
    const Vertex v = order_[i];
    if (test(removed, v)) {
      flip(removed, v);
      Poly r = solve(i + 1, removed);
      flip(removed, v);
      return r;
    }
    auto& memo = memo_[i];
    if (auto it = memo.find(removed); it != memo.end()) return it->second;
    Poly r = solve(i + 1, removed);
    if (kmax_ > 0) {
      for (Vertex w : g_.neighbors(v)) {
        if (position_[w] <= i || test(removed, w)) continue;
        flip(removed, w);
        add_shifted(r, solve(i + 1, removed), 1);
        flip(removed, w);
      }
    }
    memo.emplace(removed, r);
    return r;
  }

  const Graph& g_;
  std::size_t kmax_;
  std::size_t words_ = 0;
  std::vector<Vertex> order_;
  std::vector<std::size_t> position_;
  std::vector<std::unordered_map<std::vector<std::uint64_t>, Poly, Hash>> memo_;
};

}  // namespace

std::vector<Int> matching_vector(const Graph& g, std::size_t kmax) {
  const std::size_t reach = std::min(kmax, g.order() / 2);
  Poly p = is_forest(g) ? forest_matchings(g, reach) : EliminationDp(g, reach).run();
  p.resize(kmax + 1, 0);
  return p;
}

std::vector<Int> matching_vector(const Graph& g) { return matching_vector(g, g.order() / 2); }

std::vector<Int> matching_vector_reference(const Graph& g) {
  if (g.size() > 40) throw ScaleError("matching_vector_reference is limited to 40 edges");
  const std::size_t kmax = g.order() / 2;
  const auto& edges = g.edges();
  // m(G) = m(G - e) + x m(G - u - v), memoised on (edge index, used-vertex mask).
  std::map<std::pair<std::size_t, std::vector<bool>>, Poly> memo;
  std::function<Poly(std::size_t, std::vector<bool>&)> rec = [&](std::size_t i, std::vector<bool>& used) -> Poly {
    if (i == edges.size()) {
      Poly p(kmax + 1, 0);
      p[0] = 1;
      return p;
    }
    auto key = std::make_pair(i, used);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Poly r = rec(i + 1, used);
    auto [u, v] = edges[i];
    if (!used[u] && !used[v]) {
      used[u] = used[v] = true;
      add_shifted(r, rec(i + 1, used), 1);
      used[u] = used[v] = false;
    }
    memo.emplace(std::move(key), r);
    return r;
  };
  std::vector<bool> used(g.order(), false);
  return rec(0, used);
}

Int matching_count(const Graph& g, std::size_t k) {
  if (k > g.order() / 2) return 0;
  return matching_vector(g, k)[k];
}

std::vector<Int> matching_polynomial(const Graph& g) {
  const std::size_t n = g.order();
  auto m = matching_vector(g);
  std::vector<Int> coeffs(n + 1, 0);
  for (std::size_t k = 0; k < m.size(); ++k) coeffs[n - 2 * k] = k % 2 == 0 ? m[k] : Int(-m[k]);
  return coeffs;
}

Rational h_operator(PatternId h, const std::function<Rational(const Graph&)>& f, const Graph& g) {
  Rational total = 0;
  for (const auto& copy : pattern_copies(g, h)) {
    total += Rational(static_cast<unsigned long>(copy.copies)) * f(delete_vertices(g, copy.vertices));
  }
  return total;
}

Rational h_operator(PatternId h, const Expr& f, const Graph& g) {
  return h_operator(h, [&](const Graph& rest) { return eval_expr(f, rest); }, g);
}

RecursionCheck matching_recursion_check(const Graph& g, std::size_t k) {
  if (k == 0) throw PreconditionError("matching recursion needs k >= 1");
  RecursionCheck r;
  r.lhs = Rational(Int(static_cast<unsigned long>(k)) * matching_count(g, k));
  r.rhs = h_operator(PatternId::kP2, [&](const Graph& rest) { return Rational(matching_count(rest, k - 1)); }, g);
  r.equal = r.lhs == r.rhs;
  return r;
}

}  // namespace lapcoef
