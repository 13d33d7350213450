#pragma once

#include <algorithm>
#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "lapcoef/census.hpp"
#include "lapcoef/exact.hpp"
#include "lapcoef/graph.hpp"

namespace lapcoef {

enum class InvariantKind {
  kEdges,
  kVertices,
  kTriangles,
  kM1,     // sum deg^a
  kM2,     // sum over edges (deg u deg v)^a
  kAlpha,  // sum over edges deg u^a deg v^b + deg u^b deg v^a
  kBeta,
  kEM1,
  kEM2,
  kTheta1,
  kTheta2,
  kTheta3,
  kTheta4,
  kTheta5,
  kTheta6,
  kTheta2Plus,
  kTheta3Plus,
  kTheta3PlusSq,
  kWiener,
  kHyperWiener,
  kTau,
  kMij,   // edges joining degrees a and b
  kP3ij,  // P3 copies whose end degrees are {a, b}
  // Oracle quantities, so that identity sides share one vocabulary.
  kWalks,            // Tr A^a
  kCount,            // subgraph copies of a pattern
  kMatchings,        // m_a
  kCoefficient,      // c_a
  kCoefficientTop,   // c_{n-a}
};

struct InvariantId {
  InvariantKind kind = InvariantKind::kEdges;
  int a = 0;
  int b = 0;
  PatternId pattern = PatternId::kP2;

  static InvariantId edges() { return {InvariantKind::kEdges}; }
  static InvariantId vertices() { return {InvariantKind::kVertices}; }
  static InvariantId triangles() { return {InvariantKind::kTriangles}; }
  static InvariantId m1(int alpha);
  static InvariantId m2(int lambda);
  static InvariantId alpha(int lambda, int xi);
  static InvariantId simple(InvariantKind kind) { return {kind}; }
  static InvariantId mij(int i, int j) { return {InvariantKind::kMij, std::min(i, j), std::max(i, j)}; }
  static InvariantId p3ij(int i, int j) { return {InvariantKind::kP3ij, std::min(i, j), std::max(i, j)}; }
  static InvariantId walks(int k) { return {InvariantKind::kWalks, k}; }
  static InvariantId count(PatternId p) { return {InvariantKind::kCount, 0, 0, p}; }
  static InvariantId matchings(int k) { return {InvariantKind::kMatchings, k}; }
  static InvariantId coefficient(int k) { return {InvariantKind::kCoefficient, k}; }
  static InvariantId coefficient_top(int k) { return {InvariantKind::kCoefficientTop, k}; }

  std::string name() const;
  friend auto operator<=>(const InvariantId&, const InvariantId&) = default;
};

// Accepts the names produced by InvariantId::name().
InvariantId parse_invariant(std::string_view name);

// The degree- and distance-based registry entries (no oracle extras).
const std::vector<InvariantId>& standard_registry();

// Throws PreconditionError for W/WW on disconnected graphs and for
// coefficient indices outside 0..n.
Int eval_invariant(const InvariantId& id, const Graph& g);

Int spanning_tree_count(const Graph& g);
Int wiener_index(const Graph& g);
Int hyper_wiener_index(const Graph& g);

// Exact determinant of a square integer matrix (fraction-free Bareiss).
Int bareiss_determinant(std::vector<std::vector<Int>> a);

}  // namespace lapcoef
