#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "lapcoef/graph.hpp"

namespace lapcoef {

// Labeled tree from a Pruefer sequence over 0..n-1 of length n-2 (n >= 2).
Graph pruefer_decode(std::span<const Vertex> sequence);
std::vector<Vertex> pruefer_encode(const Graph& tree);

std::vector<Vertex> tree_centers(const Graph& tree);

// Canonical string of a tree (AHU encoding rooted at its center(s)); equal
// strings iff the trees are isomorphic.
std::string tree_canonical_form(const Graph& tree);

enum class Dedupe { kLabeled, kIsomorphismClasses };

inline constexpr std::size_t kMaxExhaustiveTreeOrder = 10;

// Visits every labeled tree on n vertices (n^(n-2) of them, via Pruefer
// sequences), or one representative per isomorphism class.
void for_each_tree(std::size_t n, Dedupe mode, const std::function<void(const Graph&)>& visit);

// One representative per isomorphism class, in a deterministic order.
std::vector<Graph> unlabeled_trees(std::size_t n);

// Uniform random labeled tree (random Pruefer sequence).
Graph random_tree(std::size_t n, std::mt19937_64& rng);

}  // namespace lapcoef
