#pragma once

#include "hgd/decomposition.hpp"
#include "hgd/hypergraph.hpp"

#include <optional>

namespace hgd {

// Deterministic decision procedure for hw(H) <= k with witness HD.
// Memoized recursion over (component, parent edge set) subproblems;
// existential guesses become ordered enumeration (edge sets in
// lexicographic order of sorted edge-id tuples), universal branching
// becomes conjunction over components. First success wins.
std::optional<DecompositionTree> solve_hd(const Hypergraph & h, std::size_t k);

// least k with an HD; at most |E(H)|
std::size_t hw(const Hypergraph & h);

} // namespace hgd
