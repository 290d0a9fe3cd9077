#pragma once

#include "hgd/covers.hpp"
#include "hgd/hypergraph.hpp"
#include "hgd/rational.hpp"
#include "hgd/weighting.hpp"

#include <string>
#include <vector>

namespace hgd {

enum class DecompKind { HD, GHD, FHD };

std::string kind_name(DecompKind k);

struct DecompNode {
    std::size_t parent = VertexSet::npos; // npos for the root
    std::vector<std::size_t> children;
    VertexSet bag;
    EdgeWeighting cover;
};

struct DecompositionTree {
    DecompKind kind = DecompKind::GHD;
    std::vector<DecompNode> nodes;
    std::size_t root = 0;

    std::size_t add_node(std::size_t parent, VertexSet bag, EdgeWeighting cover);
    // union of bags in the subtree rooted at u
    VertexSet subtree_vertices(std::size_t u) const;
    std::vector<std::size_t> preorder() const;
};

Rational width(const DecompositionTree & d);

enum class ViolationKind {
    EdgeNotCovered,       // condition (1): edge inside no bag
    VertexDisconnected,   // condition (2): occurrence set not connected
    BagNotCovered,        // condition (3)/(3'): bag not within B(cover)
    WidthExceeded,        // some node heavier than k
    SpecialCondition,     // HD condition (4)
    WeakSpecialCondition, // Def of weak special condition
    FnfOneComponent,      // FNF condition 1
    FnfChildMeetsComponent, // FNF condition 2
    FnfBoundaryCoverage,  // FNF condition 3
    KindMismatch          // fractional weights under an integral kind
};

struct Violation {
    ViolationKind kind;
    std::size_t node = VertexSet::npos;
    std::size_t edge = VertexSet::npos;
    std::size_t vertex = VertexSet::npos;
};

std::string violation_text(const Hypergraph & h, const DecompositionTree & d, const Violation & v);

// conditions (1),(2),(3)/(3'), width <= k, and for HD kind the special
// condition. Structural problems (dangling references, broken tree shape)
// throw instead of reporting violations.
std::vector<Violation> validate(const Hypergraph & h, const DecompositionTree & d,
        const Rational & k);

// weak special condition: per node, B(gamma|S) cap V(T_u) subseteq B_u for
// S = {e : gamma_u(e) = 1}
std::vector<Violation> check_weak_special(const Hypergraph & h, const DecompositionTree & d);

// per node, |B_u minus B(gamma|S)| <= c
bool check_c_bounded(const Hypergraph & h, const DecompositionTree & d, std::size_t c);

// fractional normal form, Def: exactly one [B_r]-component C_r with
// V(T_s) = C_r cup (B_r cap B_s); B_s cap C_r nonempty; B(cover_s) cap B_r
// subseteq B_s
std::vector<Violation> check_fnf(const Hypergraph & h, const DecompositionTree & d);

// swap coverable-but-excluded vertices into bags until fixpoint (BFS node
// order, vertices by index); width unchanged
DecompositionTree bag_maximalize(const Hypergraph & h, const DecompositionTree & d);

// replace augmentation subedges in covers by their recorded parent edges;
// bags unchanged. parent_of[e] is the original-edge index for augmented
// edge indices, npos for native ones.
DecompositionTree lift_to_original(const Hypergraph & original, const Hypergraph & augmented,
        const std::vector<std::size_t> & parent_of, const DecompositionTree & d);

} // namespace hgd
