#pragma once

#include <cstdint>
#include <vector>

#include "lapcoef/exact.hpp"
#include "lapcoef/graph.hpp"

namespace lapcoef {

// c_0..c_n with det(xI - L) = sum_k (-1)^(n-k) c_k x^k.
using CoefficientVector = std::vector<Int>;

// Multimodular Hessenberg reduction, primes processed in parallel, CRT lift.
CoefficientVector laplacian_charpoly(const Graph& g);

// Serial division-free Berkowitz over big integers. O(n^4); for testing.
CoefficientVector laplacian_charpoly_reference(const Graph& g);

// Upper bound on |c_k|: prod (deg v + 2).
Int coefficient_bound(const Graph& g);

// (Tr A^1, ..., Tr A^kmax) by per-source walk counting, sources in parallel.
std::vector<Int> adjacency_traces(const Graph& g, std::size_t kmax);

// Same values from dense big-integer matrix powers.
std::vector<Int> adjacency_traces_reference(const Graph& g, std::size_t kmax);

namespace detail {
// Characteristic polynomial of the Laplacian modulo a prime p < 2^62,
// coefficient of x^k at index k.
std::vector<std::uint64_t> laplacian_charpoly_mod(const Graph& g, std::uint64_t p);
// Largest primes below 2^62, descending.
std::vector<std::uint64_t> crt_primes(std::size_t count);
}  // namespace detail

}  // namespace lapcoef
