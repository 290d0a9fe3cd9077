#pragma once

#include "hgd/decomposition.hpp"
#include "hgd/hypergraph.hpp"
#include "hgd/subedges.hpp"

#include <optional>

namespace hgd {

struct GhdMode {
    bool bmip = false;
    std::size_t c = 2; // bmip only
    // completeness assumption to report against; measured value by default
    std::optional<std::size_t> assumed_intersection_bound;
};

struct GhdResult {
    std::optional<DecompositionTree> decomposition; // lifted back over H
    std::size_t measured_iwidth = 0;
    std::size_t measured_miwidth = 0; // c-multi-intersection width in bmip mode
    std::size_t subedge_count = 0;
    // set when the absence verdict rests on an assumption the input violates
    bool unsound_if = false;
};

// GHD decision via subedge augmentation: generate f(H,k) (BIP) or the
// transversal-branch family g(H,k,c) (BMIP), decide hw on the augmented
// hypergraph, lift the witness back
GhdResult solve_ghd(const Hypergraph & h, std::size_t k, const GhdMode & mode = {},
        std::size_t budget = default_subedge_budget);

} // namespace hgd
