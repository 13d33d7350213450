#pragma once

#include <functional>
#include <vector>

#include "lapcoef/census.hpp"
#include "lapcoef/exact.hpp"
#include "lapcoef/expr.hpp"
#include "lapcoef/graph.hpp"

namespace lapcoef {

// m_0..m_kmax (entries past the maximum matching are 0). Forests use a linear
// tree DP; other graphs a memoised vertex-elimination recursion.
std::vector<Int> matching_vector(const Graph& g, std::size_t kmax);
std::vector<Int> matching_vector(const Graph& g);  // kmax = n/2

// Reference: memoised edge deletion-contraction on the first edge. Small graphs only.
std::vector<Int> matching_vector_reference(const Graph& g);

Int matching_count(const Graph& g, std::size_t k);

// Coefficients of x^0..x^n of sum_k (-1)^k m_k x^(n-2k).
std::vector<Int> matching_polynomial(const Graph& g);

// sum over copies X of H in G of f(G - V(X)).
Rational h_operator(PatternId h, const Expr& f, const Graph& g);
Rational h_operator(PatternId h, const std::function<Rational(const Graph&)>& f, const Graph& g);

struct RecursionCheck {
  Rational lhs;  // k m_k(G)
  Rational rhs;  // P2 m_{k-1}(G)
  bool equal = false;
};

RecursionCheck matching_recursion_check(const Graph& g, std::size_t k);

}  // namespace lapcoef
