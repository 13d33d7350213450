#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lapcoef/exact.hpp"
#include "lapcoef/graph.hpp"

namespace lapcoef {

enum class PatternId {
  kP2,
  kP3,
  kP4,
  kS4,  // K_{1,3}
  kC3,
  kC4,
  kC5,
  kC6,
  kK4,
  kK4MinusEdge,
  kC3Pendant,  // triangle with one pendant edge (paw)
  kC4Pendant,
  kBowtie,  // two triangles sharing a vertex
  kK5,
  kK6,
};

inline constexpr PatternId kAllPatterns[] = {
    PatternId::kP2,  PatternId::kP3,          PatternId::kP4,        PatternId::kS4,
    PatternId::kC3,  PatternId::kC4,          PatternId::kC5,        PatternId::kC6,
    PatternId::kK4,  PatternId::kK4MinusEdge, PatternId::kC3Pendant, PatternId::kC4Pendant,
    PatternId::kBowtie, PatternId::kK5,       PatternId::kK6,
};

const Graph& pattern_graph(PatternId p);
std::string_view pattern_name(PatternId p);
std::optional<PatternId> parse_pattern(std::string_view name);

// Number of automorphisms of the pattern.
std::size_t automorphism_count(PatternId p);

// Subgraphs (not necessarily induced) of g isomorphic to p.
Int count_pattern(const Graph& g, PatternId p);

// Copies grouped by vertex set: `copies` subgraphs isomorphic to p span exactly `vertices`.
struct PatternCopies {
  std::vector<Vertex> vertices;  // sorted
  std::size_t copies;
};
std::vector<PatternCopies> pattern_copies(const Graph& g, PatternId p);

Int triangle_count(const Graph& g);

// Tr A^k.
Int closed_walks_trace(const Graph& g, std::size_t k);

// Explicit walk enumeration; limited to k <= 8 and n <= 12.
Int closed_walks_enum(const Graph& g, std::size_t k);

// Census expansion of W_k for k in 1..6.
Int walk_count_formula(const Graph& g, std::size_t k);

}  // namespace lapcoef
