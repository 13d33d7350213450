#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lapcoef/census.hpp"
#include "lapcoef/exact.hpp"
#include "lapcoef/graph.hpp"
#include "lapcoef/invariants.hpp"
#include "lapcoef/spectra.hpp"

namespace lapcoef {

// Immutable expression over registry invariants.
class Expr {
 public:
  enum class Kind { kConst, kLeaf, kSum, kProduct, kPow, kOfSubdivision, kOfLine, kHOp };

  Expr(const Rational& c);  // NOLINT(google-explicit-constructor)
  Expr(long c) : Expr(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  Expr(int c) : Expr(Rational(c)) {}   // NOLINT(google-explicit-constructor)

  static Expr leaf(const InvariantId& id);
  static Expr of_subdivision(const Expr& e);
  static Expr of_line(std::size_t k, const Expr& e);
  static Expr h_op(PatternId p, const Expr& e);

  friend Expr operator+(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a, const Expr& b);
  friend Expr operator*(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a);
  friend Expr pow(const Expr& base, unsigned exponent);

  Kind kind() const;
  const Rational& constant() const;
  const InvariantId& invariant() const;
  const std::vector<Expr>& children() const;
  unsigned exponent() const;
  std::size_t line_order() const;
  PatternId pattern() const;

  std::string to_string() const;

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Parses the text form produced by Expr::to_string(), e.g.
//   "(m+3)*M1_2 - M1_3 - 4*M2_1 - 2*m"
//   "P2(m*M1_2)"  "S(M1_2)"  "L(2, m)"  "H(P3, m)"  "count(C4)"  "cn(4)"
// Division is only allowed by constants. Throws ParseError.
Expr parse_expr(std::string_view text);

// Per-graph evaluation context with invariant and transform caches.
// Not thread-safe: confine each Evaluator to one thread.
class Evaluator {
 public:
  explicit Evaluator(Graph g);

  const Graph& graph() const { return g_; }
  Int invariant(const InvariantId& id);
  Rational eval(const Expr& e);

  Evaluator& subdivision();
  Evaluator& line(std::size_t k);
  const CoefficientVector& charpoly();
  const Int& trace(std::size_t k);

 private:
  Graph g_;
  std::map<InvariantId, Int> cache_;
  std::unique_ptr<Evaluator> subdivision_;
  std::unique_ptr<Evaluator> line_;
  std::optional<CoefficientVector> charpoly_;
  std::vector<Int> traces_;
};

Rational eval_expr(const Expr& e, const Graph& g);

}  // namespace lapcoef
