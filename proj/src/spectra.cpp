#include "lapcoef/spectra.hpp"

#include <string>

#include "lapcoef/errors.hpp"

namespace lapcoef {

Int coefficient_bound(const Graph& g) {
  // Each c_k is a sum of principal minors; Hadamard bounds a minor on S by
  // prod_{v in S} (deg v + 1), and summing over S gives prod (deg v + 2).
  Int b = 1;
  for (Vertex v = 0; v < g.order(); ++v) b *= static_cast<unsigned long>(g.degree(v) + 2);
  return b;
}

CoefficientVector laplacian_charpoly_reference(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<Int>> a(n, std::vector<Int>(n, 0));
  for (Vertex v = 0; v < n; ++v) {
    a[v][v] = static_cast<unsigned long>(g.degree(v));
    for (Vertex u : g.neighbors(v)) a[v][u] = -1;
  }
  // Berkowitz: poly holds det(xI - A_r) from the leading coefficient down.
  std::vector<Int> poly{1};
  for (std::size_t r = 0; r < n; ++r) {
    // Toeplitz column: 1, -a_rr, -R C, -R M C, ..., -R M^{r-1} C.
    std::vector<Int> col(r + 2);
    col[0] = 1;
    col[1] = -a[r][r];
    std::vector<Int> v(r);
    for (std::size_t i = 0; i < r; ++i) v[i] = a[i][r];
    for (std::size_t j = 2; j < r + 2; ++j) {
      Int dot = 0;
      for (std::size_t i = 0; i < r; ++i) dot += a[r][i] * v[i];
      col[j] = -dot;
      std::vector<Int> w(r, 0);
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t l = 0; l < r; ++l) w[i] += a[i][l] * v[l];
      }
      v = std::move(w);
    }
    std::vector<Int> next(r + 2, 0);
    for (std::size_t i = 0; i < r + 2; ++i) {
      for (std::size_t j = 0; j <= i && j < poly.size(); ++j) next[i] += col[i - j] * poly[j];
    }
    poly = std::move(next);
  }
  CoefficientVector c(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    Int value = poly[n - k];
    if ((n - k) % 2 == 1) value = -value;
    if (value < 0) {
      throw ArithmeticError("charpoly sign tripwire: c_" + std::to_string(k) + " < 0 on " + describe(g));
    }
    c[k] = std::move(value);
  }
  return c;
}

std::vector<Int> adjacency_traces(const Graph& g, std::size_t kmax) {
  const std::size_t n = g.order();
  std::vector<std::vector<Int>> per_source(n, std::vector<Int>(kmax, 0));
#pragma omp parallel for schedule(dynamic)
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<Int> cur(n, 0), next(n);
    cur[s] = 1;
    for (std::size_t k = 0; k < kmax; ++k) {
      for (Vertex u = 0; u < n; ++u) {
        next[u] = 0;
        for (Vertex w : g.neighbors(u)) next[u] += cur[w];
      }
      std::swap(cur, next);
      per_source[s][k] = cur[s];
    }
  }
  std::vector<Int> out(kmax, 0);
  for (const auto& row : per_source) {
    for (std::size_t k = 0; k < kmax; ++k) out[k] += row[k];
  }
  return out;
}

std::vector<Int> adjacency_traces_reference(const Graph& g, std::size_t kmax) {
  const std::size_t n = g.order();
  std::vector<std::vector<Int>> a(n, std::vector<Int>(n, 0));
  for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = 1;
  auto power = a;
  std::vector<Int> out;
  for (std::size_t k = 1; k <= kmax; ++k) {
    if (k > 1) {
      std::vector<std::vector<Int>> next(n, std::vector<Int>(n, 0));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t l = 0; l < n; ++l) {
          if (power[i][l] == 0) continue;
          for (std::size_t j = 0; j < n; ++j) {
            if (a[l][j] != 0) next[i][j] += power[i][l];
          }
        }
      }
      power = std::move(next);
    }
    Int tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += power[i][i];
    out.push_back(tr);
  }
  return out;
}

}  // namespace lapcoef
