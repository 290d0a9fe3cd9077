#pragma once

#include "hgd/hypergraph.hpp"

#include <cstdint>
#include <vector>

namespace hgd {

inline constexpr std::size_t default_subedge_budget = 10000000;

enum class SubedgeRule { BipIntersectionOfUnion, BmipTransversalBranch, FractionalSizeCap };

struct Subedge {
    VertexSet vertices;
    std::size_t parent;                // lowest-index parent edge
    std::vector<std::size_t> parents;  // all parents that generate it
};

struct SubedgeSet {
    SubedgeRule rule;
    std::vector<Subedge> subedges; // deduplicated by vertex set, stable order
};

// all non-empty subsets of e cap (e_1 cup ... cup e_j), j <= k, over every
// edge e and every choice of up to k other edges; subedges equal to an
// existing edge are dropped
SubedgeSet f_bip(const Hypergraph & h, std::size_t k,
        std::size_t budget = default_subedge_budget);

// per edge e, I(e) = non-empty meets of e with up to c-1 further distinct
// edges; emit all non-empty subsets of unions of <= k^(c-1) members of I(e)
SubedgeSet g_bmip(const Hypergraph & h, std::size_t k, std::size_t c,
        std::size_t budget = default_subedge_budget);

// every non-empty subedge of size <= floor(k)*iwidth + c of every edge
SubedgeSet fractional_subedges(const Hypergraph & h, std::size_t size_cap,
        std::size_t budget = default_subedge_budget);

struct Augmentation {
    Hypergraph extended;                  // original edges first, then subedges
    std::vector<std::size_t> parent_of;   // per extended edge: original index or npos
};

// extended hypergraph with identical vertex indexing plus one fresh edge
// per subedge, named aug<i>:<parent id>
Augmentation augment(const Hypergraph & h, const SubedgeSet & s);

} // namespace hgd
