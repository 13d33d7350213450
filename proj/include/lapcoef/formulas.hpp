#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lapcoef/exact.hpp"
#include "lapcoef/expr.hpp"
#include "lapcoef/graph.hpp"

namespace lapcoef {

// ---- coefficient routes ----------------------------------------------------

enum class Method { kCharpoly, kSubdivisionMatching, kDegreeFormula, kTraceFormula };

inline constexpr Method kAllMethods[] = {Method::kCharpoly, Method::kSubdivisionMatching,
                                         Method::kDegreeFormula, Method::kTraceFormula};

std::string_view method_name(Method m);
std::optional<Method> parse_method(std::string_view name);

// c_k by the chosen route. Throws PreconditionError when k > n or the route
// is not defined on g (forest-only formulas on a cyclic graph, or an index
// the route does not cover).
Int laplacian_coefficient(Evaluator& ev, std::size_t k, Method method);
Int laplacian_coefficient(const Graph& g, std::size_t k, Method method);

// Closed forms for c_{n-x}(T(k,t)), k in {3,4}, x in 1..6, as polynomials in
// 2^t or 3^t. x = 6 needs t >= 2. Throws PreconditionError otherwise.
Int tkt_closed_form(std::size_t k, std::size_t t, std::size_t x);

// ---- identity catalog ------------------------------------------------------

struct Precondition {
  enum class Kind { kAny, kForest, kTree, kGirthAtLeast5, kRootedTree };
  Kind kind = Kind::kAny;
  std::size_t arity = 0;  // internal degree for kRootedTree

  static Precondition any() { return {Kind::kAny}; }
  static Precondition forest() { return {Kind::kForest}; }
  static Precondition tree() { return {Kind::kTree}; }
  static Precondition girth5() { return {Kind::kGirthAtLeast5}; }
  static Precondition rooted_tree(std::size_t k) { return {Kind::kRootedTree, k}; }

  bool holds(const Graph& g) const;
  std::string name() const;
};

using Side = std::function<Rational(Evaluator&)>;

struct IdentityRecord {
  std::string id;
  Precondition precondition;
  std::string lhs_text;  // oracle route
  std::string rhs_text;  // closed form
  Side lhs;
  Side rhs;
  std::string note;  // set on records whose printed form is known to be wrong
};

const std::vector<IdentityRecord>& identity_catalog();

// Throws Error for an unknown id.
const IdentityRecord& find_identity(std::string_view id);

// Records whose id equals a selector or starts with "<selector>." ; "all" or
// an empty list selects everything. Unknown selectors throw Error.
std::vector<const IdentityRecord*> select_identities(const std::vector<std::string>& selectors);

struct Verdict {
  std::string graph6;
  bool precondition_met = false;
  Rational lhs;
  Rational rhs;
  bool equal = false;
};

// A PreconditionError raised while evaluating either side (for example a
// coefficient index below 0 on a small graph) counts as precondition unmet.
Verdict evaluate_identity(const IdentityRecord& rec, Evaluator& ev);
Verdict evaluate_identity(std::string_view id, const Graph& g);

// ---- conjecture ------------------------------------------------------------

enum class Relation { kLess, kEqual, kGreater };
std::string_view relation_symbol(Relation r);

struct ConjectureItem {
  int item = 0;  // 1..3, bounding c_{n-4}, c_{n-5}, c_{n-6}
  bool evaluated = false;
  Int lhs;
  Rational rhs;
  Relation relation = Relation::kEqual;
  bool equality_predicted = false;
};

struct ConjectureReport {
  Girth girth = Girth::unbounded();
  std::vector<ConjectureItem> items;
};

// Items whose coefficient index n-k is negative come back with evaluated=false.
ConjectureReport conjecture_bounds(Evaluator& ev);
ConjectureReport conjecture_bounds(const Graph& g);

// Text of the trace expression for c_{n-j}, j = 1..6 (j = 6 with the sign
// correction applied).
const std::string& trace_formula_text(std::size_t j);

}  // namespace lapcoef
