#pragma once

// Shared formula texts for the coefficient routes and the catalog.

#include <string>

#include "lapcoef/expr.hpp"

namespace lapcoef::detail {

// c_{n-j} in degree-based invariants, j = 2..6 (j >= 4 valid on forests).
const std::string& degree_formula_text(std::size_t j);
const Expr& degree_formula_expr(std::size_t j);

// c_{n-j} via closed walks in G and L_1(G), j = 1..6. The j = 6 entry has the
// sign of the final trace group corrected; `printed` returns it as published.
const std::string& trace_text(std::size_t j);
const std::string& trace_text_printed_6();
const Expr& trace_expr(std::size_t j);

}  // namespace lapcoef::detail
