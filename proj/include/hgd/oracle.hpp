#pragma once

#include "hgd/decomposition.hpp"
#include "hgd/hypergraph.hpp"
#include "hgd/rational.hpp"

#include <optional>

namespace hgd {

// Exhaustive component recursion: a component is decomposable iff some bag
// covering the boundary exists whose cover fits the budget (rho for GHD,
// rho* for FHD, HD threads the special condition), such that all inner
// components recurse. Complete because every decomposition normalizes.
// Hard cap on |V(H)|.
std::optional<DecompositionTree> brute_width(const Hypergraph & h, const Rational & k,
        DecompKind kind, std::size_t vertex_cap = 12);

// exact E(H)|_X = 2^X test
bool brute_shattered(const Hypergraph & h, const VertexSet & x);

// Second, independent route for GHD/FHD: minimum over elimination orderings
// of the primal graph of the maximum bag cover cost. Exact optimum width.
Rational ordering_width(const Hypergraph & h, DecompKind kind);

} // namespace hgd
