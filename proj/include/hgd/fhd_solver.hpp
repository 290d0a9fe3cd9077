#pragma once

#include "hgd/decomposition.hpp"
#include "hgd/hypergraph.hpp"
#include "hgd/rational.hpp"
#include "hgd/subedges.hpp"

#include <optional>

namespace hgd {

// H plus every non-empty subedge of size <= floor(k)*iwidth(H) + c of
// every edge, with provenance for lifting
Augmentation augment_fractional(const Hypergraph & h, const Rational & k, std::size_t c,
        std::size_t budget = default_subedge_budget);

struct FracOptions {
    // check 2.a (W_s disjoint from the guessed integral cover); a strict
    // reading of the figure drops the check, kept for comparison
    bool enforce_disjoint_w = true;
    // restrict the search to integral-part-free nodes (rank shortcut)
    bool empty_s_only = false;
};

// Deterministic memoized realization of the FRACDECOMP search: decides
// whether H has an FHD of width <= k in fractional normal form with
// c-bounded fractional part satisfying the weak special condition, and
// emits the witness tree on acceptance.
std::optional<DecompositionTree> fracdecomp(const Hypergraph & h, const Rational & k,
        std::size_t c, const FracOptions & opts = {});

struct FhdOptions {
    std::optional<std::size_t> c; // explicit; otherwise auto-iterate 0,1,2,...
    bool rank_mode = false;       // c := floor(k * rank), no augmentation, S = {}
    std::optional<std::size_t> auto_cap; // default max(8, floor(k*rank))
    std::size_t budget = default_subedge_budget;
    FracOptions frac;
};

struct FhdResult {
    std::optional<DecompositionTree> decomposition; // lifted back over H
    std::size_t c_used = 0;
    std::size_t measured_iwidth = 0;
    std::size_t measured_degree = 0;
    std::size_t measured_rank = 0;
    // the Lemma-constant for reference; never used to drive the search
    BigInt lemma_c_bound;
    // rejections are complete only up to the c cap that was actually searched
    std::size_t c_cap_searched = 0;
};

FhdResult solve_fhd(const Hypergraph & h, const Rational & k, const FhdOptions & opts = {});

// the proof's recurrence, evaluated exactly: n = k*d, r_0 = n,
// r_{l+1} = r_l + d*i*(r_l + (d-1)*n), result k*d*r_n*i; rational k is
// rounded up first
BigInt c_bound(const Rational & k, std::size_t d, std::size_t i);

} // namespace hgd
