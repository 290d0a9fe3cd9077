#pragma once

#include "hgd/hypergraph.hpp"
#include "hgd/rational.hpp"
#include "hgd/weighting.hpp"

#include <optional>

namespace hgd {

// exact LP optimum rho*(target) with a witness weighting; weights clipped
// to <= 1 (minimization never needs more). Throws if a target vertex lies
// in no edge.
std::pair<EdgeWeighting, Rational> optimal_fractional_cover(const Hypergraph & h,
        const VertexSet & target);

// exact minimum integral edge cover rho(target), branch and bound with the
// LP relaxation as lower bound and a greedy initial incumbent
std::pair<EdgeWeighting, std::size_t> optimal_integral_cover(const Hypergraph & h,
        const VertexSet & target);

// witness gamma with target subseteq B(gamma) and weight <= bound, or
// nullopt; absence is a normal outcome. `forbidden_edges` get weight 0.
std::optional<EdgeWeighting> exists_fractional_cover(const Hypergraph & h,
        const VertexSet & target, const Rational & bound,
        const std::vector<std::size_t> * forbidden_edges = nullptr);

// Uncov/Omega rounding loop: repeatedly pick the lowest-index uncovered
// vertex of B(gamma) and add its maximal-weight incident edge (weight is
// then >= 1/degree). Result covers B(gamma) with weight <= degree * weight.
EdgeWeighting degree_round(const Hypergraph & h, const EdgeWeighting & gamma);

} // namespace hgd
