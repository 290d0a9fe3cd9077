#include "hgd/ghd_solver.hpp"
#include "hgd/hd_solver.hpp"
#include "hgd/properties.hpp"

namespace hgd {

GhdResult solve_ghd(const Hypergraph & h, std::size_t k, const GhdMode & mode,
        std::size_t budget)
{
    if (k == 0)
        throw Error("solve_ghd requires k >= 1");

    GhdResult res;
    res.measured_iwidth = iwidth(h);
    res.measured_miwidth = mode.bmip ? c_miwidth(h, mode.c) : res.measured_iwidth;

    SubedgeSet subedges = mode.bmip ? g_bmip(h, k, mode.c, budget) : f_bip(h, k, budget);
    res.subedge_count = subedges.subedges.size();
    Augmentation aug = augment(h, subedges);

    auto hd = solve_hd(aug.extended, k);
    if (hd.has_value()) {
        DecompositionTree lifted = lift_to_original(h, aug.extended, aug.parent_of, *hd);
        lifted.kind = DecompKind::GHD;
        res.decomposition = std::move(lifted);
    }
    else if (mode.assumed_intersection_bound.has_value() &&
            res.measured_miwidth > *mode.assumed_intersection_bound) {
        res.unsound_if = true;
    }
    return res;
}

} // namespace hgd
