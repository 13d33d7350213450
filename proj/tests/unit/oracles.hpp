#pragma once

// Brute-force reference computations used only by the tests.

#include <algorithm>
#include <numeric>
#include <vector>

#include "lapcoef/census.hpp"
#include "lapcoef/exact.hpp"
#include "lapcoef/graph.hpp"

namespace oracle {

using lapcoef::Edge;
using lapcoef::Graph;
using lapcoef::Int;
using lapcoef::Rational;
using lapcoef::Vertex;

// m_k by enumerating every edge subset.
inline std::vector<Int> matchings(const Graph& g) {
  const auto& e = g.edges();
  std::vector<Int> out(g.order() / 2 + 1, 0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << e.size()); ++mask) {
    std::vector<bool> used(g.order(), false);
    bool ok = true;
    std::size_t k = 0;
    for (std::size_t i = 0; i < e.size() && ok; ++i) {
      if (!(mask >> i & 1)) continue;
      auto [u, v] = e[i];
      ok = !used[u] && !used[v];
      used[u] = used[v] = true;
      ++k;
    }
    if (ok) out[k] += 1;
  }
  return out;
}

// Copies of pattern p: edge subsets of the right size whose spanned subgraph
// maps onto p by some vertex bijection.
inline Int pattern_count(const Graph& g, lapcoef::PatternId p) {
  const Graph& h = lapcoef::pattern_graph(p);
  const std::size_t me = h.size(), hv = h.order();
  const auto& e = g.edges();
  Int total = 0;
  std::vector<bool> sel(e.size(), false);
  std::fill(sel.begin(), sel.begin() + std::min(me, e.size()), true);
  if (me > e.size()) return 0;
  do {
    std::vector<Vertex> verts;
    std::vector<Edge> sub;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!sel[i]) continue;
      sub.push_back(e[i]);
      verts.push_back(e[i].first);
      verts.push_back(e[i].second);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    if (verts.size() != hv) continue;
    std::vector<Vertex> perm(hv);
    std::iota(perm.begin(), perm.end(), 0);
    bool iso = false;
    do {
      bool all = true;
      for (auto [a, b] : sub) {
        auto ia = std::lower_bound(verts.begin(), verts.end(), a) - verts.begin();
        auto ib = std::lower_bound(verts.begin(), verts.end(), b) - verts.begin();
        if (!h.adjacent(perm[ia], perm[ib])) {
          all = false;
          break;
        }
      }
      iso = all;
    } while (!iso && std::next_permutation(perm.begin(), perm.end()));
    if (iso) total += 1;
  } while (std::prev_permutation(sel.begin(), sel.end()));
  return total;
}

inline Rational determinant(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      Rational f = a[r][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  return det;
}

// c_k as the sum of principal minors of L of size n-k.
inline std::vector<Int> laplacian_coefficients(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<Int> c(n + 1, 0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<Vertex> s;
    for (Vertex v = 0; v < n; ++v) {
      if (mask >> v & 1) s.push_back(v);
    }
    std::vector<std::vector<Rational>> m(s.size(), std::vector<Rational>(s.size(), 0));
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t j = 0; j < s.size(); ++j) {
        if (i == j) m[i][j] = static_cast<long>(g.degree(s[i]));
        else if (g.adjacent(s[i], s[j])) m[i][j] = -1;
      }
    }
    Rational d = s.empty() ? Rational(1) : determinant(m);
    c[n - s.size()] += d.get_num();
  }
  return c;
}

}  // namespace oracle
