#include <mutex>
#include <string>

#include "lapcoef/errors.hpp"
#include "lapcoef/spectra.hpp"

namespace lapcoef {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  for (; e; e >>= 1, a = mulmod(a, a, p)) {
    if (e & 1) r = mulmod(r, a, p);
  }
  return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace

namespace detail {

std::vector<u64> crt_primes(std::size_t count) {
  static std::mutex mu;
  static std::vector<u64> cache;
  std::lock_guard lock(mu);
  u64 candidate = cache.empty() ? (u64{1} << 62) - 1 : cache.back() - 2;
  while (cache.size() < count) {
    if (is_prime(candidate)) cache.push_back(candidate);
    candidate -= 2;
  }
  return {cache.begin(), cache.begin() + static_cast<std::ptrdiff_t>(count)};
}

std::vector<u64> laplacian_charpoly_mod(const Graph& g, u64 p) {
  const std::size_t n = g.order();
  std::vector<std::vector<u64>> h(n, std::vector<u64>(n, 0));
  for (Vertex v = 0; v < n; ++v) {
    h[v][v] = g.degree(v) % p;
    for (Vertex u : g.neighbors(v)) h[v][u] = p - 1;
  }

  // Similarity reduction to upper Hessenberg form.
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t piv = j + 1;
    while (piv < n && h[piv][j] == 0) ++piv;
    if (piv == n) continue;
    if (piv != j + 1) {
      std::swap(h[piv], h[j + 1]);
      for (std::size_t r = 0; r < n; ++r) std::swap(h[r][piv], h[r][j + 1]);
    }
    const u64 inv = invmod(h[j + 1][j], p);
    for (std::size_t i = j + 2; i < n; ++i) {
      if (h[i][j] == 0) continue;
      const u64 u = mulmod(h[i][j], inv, p);
      for (std::size_t c = 0; c < n; ++c) {
        const u64 t = mulmod(u, h[j + 1][c], p);
        h[i][c] = h[i][c] >= t ? h[i][c] - t : h[i][c] + p - t;
      }
      for (std::size_t r = 0; r < n; ++r) {
        const u64 t = mulmod(u, h[r][i], p);
        h[r][j + 1] = h[r][j + 1] + t >= p ? h[r][j + 1] + t - p : h[r][j + 1] + t;
      }
    }
  }

  // p_k = (x - h_kk) p_{k-1} - sum_i h_ik (prod_{j>i} h_{j,j-1}) p_{i-1}
  std::vector<std::vector<u64>> poly(n + 1);
  poly[0] = {1};
  for (std::size_t k = 1; k <= n; ++k) {
    auto& cur = poly[k];
    cur.assign(k + 1, 0);
    const auto& prev = poly[k - 1];
    const u64 diag = h[k - 1][k - 1];
    for (std::size_t d = 0; d < k; ++d) {
      cur[d + 1] = (cur[d + 1] + prev[d]) % p;
      const u64 t = mulmod(diag, prev[d], p);
      cur[d] = cur[d] >= t ? cur[d] - t : cur[d] + p - t;
    }
    u64 run = 1;
    for (std::size_t i = k - 1; i >= 1; --i) {
      run = mulmod(run, h[i][i - 1], p);
      if (run == 0) break;
      const u64 coef = mulmod(run, h[i - 1][k - 1], p);
      if (coef == 0) continue;
      for (std::size_t d = 0; d < poly[i - 1].size(); ++d) {
        const u64 t = mulmod(coef, poly[i - 1][d], p);
        cur[d] = cur[d] >= t ? cur[d] - t : cur[d] + p - t;
      }
    }
  }
  return poly[n];
}

}  // namespace detail

CoefficientVector laplacian_charpoly(const Graph& g) {
  const std::size_t n = g.order();
  const Int bound = coefficient_bound(g);
  // Need the prime product to exceed 2 * bound for a symmetric lift.
  const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2) + 2;
  const std::size_t count = bits / 61 + 1;
  const auto primes = detail::crt_primes(count);

  std::vector<std::vector<u64>> residues(count);
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < count; ++i) residues[i] = detail::laplacian_charpoly_mod(g, primes[i]);

  // Garner mixed-radix reconstruction, coefficient by coefficient.
  std::vector<std::vector<u64>> inv(count, std::vector<u64>(count, 0));
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < i; ++j) inv[j][i] = invmod(primes[j] % primes[i], primes[i]);
  }
  Int modulus = 1;
  for (u64 q : primes) modulus *= Int(static_cast<unsigned long>(q));
  const Int half = modulus / 2;

  CoefficientVector c(n + 1);
  std::vector<u64> digits(count);
  for (std::size_t k = 0; k <= n; ++k) {
    for (std::size_t i = 0; i < count; ++i) {
      u64 x = residues[i][k];
      for (std::size_t j = 0; j < i; ++j) {
        const u64 dj = digits[j] % primes[i];
        x = x >= dj ? x - dj : x + primes[i] - dj;
        x = mulmod(x, inv[j][i], primes[i]);
      }
      digits[i] = x;
    }
    Int value = 0;
    for (std::size_t i = count; i-- > 0;) {
      value *= Int(static_cast<unsigned long>(primes[i]));
      value += Int(static_cast<unsigned long>(digits[i]));
    }
    if (value > half) value -= modulus;
    // Coefficient of x^k is (-1)^(n-k) c_k.
    if ((n - k) % 2 == 1) value = -value;
    if (value < 0) {
      throw ArithmeticError("charpoly sign tripwire: c_" + std::to_string(k) + " < 0 on " + describe(g));
    }
    c[k] = std::move(value);
  }
  return c;
}

}  // namespace lapcoef
