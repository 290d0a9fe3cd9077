#pragma once

#include "hgd/decomposition.hpp"
#include "hgd/hypergraph.hpp"
#include "hgd/rational.hpp"

#include <optional>
#include <string>

namespace hgd {

// same tree and bags, each fractional cover replaced by an optimal
// integral cover of its bag
DecompositionTree fhd_to_ghd_bagwise(const Hypergraph & h, const DecompositionTree & fhd);

// same tree and bags, each cover rounded by the degree loop; width grows
// by at most a factor of degree(H)
DecompositionTree fhd_to_ghd_degree(const Hypergraph & h, const DecompositionTree & fhd);

// minimum (fractional) hitting set of all edges, computed directly over
// vertices; the dual-route counterpart of the edge-cover LP
std::size_t transversality(const Hypergraph & h);
Rational fractional_transversality(const Hypergraph & h);

struct BoundReport {
    std::optional<std::size_t> vc; // absent beyond the brute-force cap
    Rational rho_star;             // rho*(V(H))
    // 2^(vc+2) * ln(11 rho*) / rho*; advisory only, never drives a decision
    std::optional<double> cigap_bound;
    std::size_t degree = 0;
    Rational degree_bound; // degree * k

    std::string text() const;
    std::string csv_row() const;
};

BoundReport bound_report(const Hypergraph & h, const Rational & k);

} // namespace hgd
