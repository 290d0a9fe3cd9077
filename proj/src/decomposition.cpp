#include "hgd/decomposition.hpp"

#include <algorithm>
#include <deque>

namespace hgd {

std::string kind_name(DecompKind k)
{
    switch (k) {
    case DecompKind::HD: return "HD";
    case DecompKind::GHD: return "GHD";
    case DecompKind::FHD: return "FHD";
    }
    return "?";
}

std::size_t DecompositionTree::add_node(std::size_t parent, VertexSet bag, EdgeWeighting cover)
{
    std::size_t id = nodes.size();
    nodes.push_back(DecompNode{parent, {}, std::move(bag), std::move(cover)});
    if (parent != VertexSet::npos)
        nodes[parent].children.push_back(id);
    return id;
}

VertexSet DecompositionTree::subtree_vertices(std::size_t u) const
{
    VertexSet out = nodes[u].bag;
    for (auto c : nodes[u].children)
        out |= subtree_vertices(c);
    return out;
}

std::vector<std::size_t> DecompositionTree::preorder() const
{
    std::vector<std::size_t> order;
    std::deque<std::size_t> queue{root};
    while (! queue.empty()) {
        std::size_t u = queue.front();
        queue.pop_front();
        order.push_back(u);
        for (auto c : nodes[u].children)
            queue.push_back(c);
    }
    return order;
}

Rational width(const DecompositionTree & d)
{
    Rational w(0);
    for (const auto & n : d.nodes) {
        Rational t = n.cover.total_weight();
        if (t > w)
            w = t;
    }
    return w;
}

std::string violation_text(const Hypergraph & h, const DecompositionTree & d, const Violation & v)
{
    auto node = [&](std::size_t u) { return "node " + std::to_string(u); };
    switch (v.kind) {
    case ViolationKind::EdgeNotCovered:
        return "edge " + h.edge(v.edge).id + " inside no bag";
    case ViolationKind::VertexDisconnected:
        return "vertex " + h.vertex_name(v.vertex) + " has a disconnected occurrence set";
    case ViolationKind::BagNotCovered:
        return node(v.node) + ": bag vertex " + h.vertex_name(v.vertex) + " not covered";
    case ViolationKind::WidthExceeded:
        return node(v.node) + ": cover weight exceeds the bound";
    case ViolationKind::SpecialCondition:
        return node(v.node) + ": special condition fails for edge " + h.edge(v.edge).id +
                " at vertex " + h.vertex_name(v.vertex);
    case ViolationKind::WeakSpecialCondition:
        return node(v.node) + ": weak special condition fails for edge " + h.edge(v.edge).id +
                " at vertex " + h.vertex_name(v.vertex);
    case ViolationKind::FnfOneComponent:
        return node(v.node) + ": subtree does not equal one component plus the interface";
    case ViolationKind::FnfChildMeetsComponent:
        return node(v.node) + ": child bag misses its component";
    case ViolationKind::FnfBoundaryCoverage:
        return node(v.node) + ": covered boundary vertex " + h.vertex_name(v.vertex) +
                " missing from bag";
    case ViolationKind::KindMismatch:
        return node(v.node) + ": fractional weights under an integral kind";
    }
    return "?";
}

namespace {

void check_structure(const Hypergraph & h, const DecompositionTree & d)
{
    if (d.nodes.empty())
        throw Error("decomposition has no nodes");
    if (d.root >= d.nodes.size())
        throw Error("root out of range");
    if (d.nodes[d.root].parent != VertexSet::npos)
        throw Error("root has a parent");
    std::vector<char> seen(d.nodes.size(), false);
    std::deque<std::size_t> queue{d.root};
    std::size_t reached = 0;
    while (! queue.empty()) {
        std::size_t u = queue.front();
        queue.pop_front();
        if (u >= d.nodes.size())
            throw Error("child index out of range");
        if (seen[u])
            throw Error("node reached twice; not a tree");
        seen[u] = true;
        ++reached;
        for (auto c : d.nodes[u].children) {
            if (c >= d.nodes.size() || d.nodes[c].parent != u)
                throw Error("parent/child links inconsistent");
            queue.push_back(c);
        }
    }
    if (reached != d.nodes.size())
        throw Error("tree is not connected");
    for (const auto & n : d.nodes) {
        if (n.bag.universe() != h.vertex_count())
            throw Error("bag over a different vertex universe");
        for (const auto & [e, w] : n.cover.entries())
            if (e >= h.edge_count())
                throw Error("cover references unknown edge");
    }
}

} // namespace

std::vector<Violation> validate(const Hypergraph & h, const DecompositionTree & d,
        const Rational & k)
{
    check_structure(h, d);
    std::vector<Violation> out;

    // (1) every edge inside some bag
    for (std::size_t e = 0; e < h.edge_count(); ++e) {
        bool covered = false;
        for (const auto & n : d.nodes)
            if (n.bag.contains(h.edge(e).vertices)) {
                covered = true;
                break;
            }
        if (! covered)
            out.push_back({ViolationKind::EdgeNotCovered, VertexSet::npos, e, VertexSet::npos});
    }

    // (2) occurrence sets connected
    for (std::size_t v = 0; v < h.vertex_count(); ++v) {
        std::vector<std::size_t> occ;
        for (std::size_t u = 0; u < d.nodes.size(); ++u)
            if (d.nodes[u].bag.test(v))
                occ.push_back(u);
        if (occ.empty())
            continue;
        std::vector<char> in_occ(d.nodes.size(), false);
        for (auto u : occ)
            in_occ[u] = true;
        std::vector<char> seen(d.nodes.size(), false);
        std::deque<std::size_t> queue{occ.front()};
        seen[occ.front()] = true;
        std::size_t reached = 1;
        while (! queue.empty()) {
            std::size_t u = queue.front();
            queue.pop_front();
            std::vector<std::size_t> adj = d.nodes[u].children;
            if (d.nodes[u].parent != VertexSet::npos)
                adj.push_back(d.nodes[u].parent);
            for (auto w : adj)
                if (in_occ[w] && ! seen[w]) {
                    seen[w] = true;
                    ++reached;
                    queue.push_back(w);
                }
        }
        if (reached != occ.size())
            out.push_back({ViolationKind::VertexDisconnected, VertexSet::npos, VertexSet::npos, v});
    }

    // (3)/(3'), width, kind discipline, (4) for HDs
    for (std::size_t u = 0; u < d.nodes.size(); ++u) {
        const auto & n = d.nodes[u];
        if (d.kind != DecompKind::FHD && ! n.cover.is_integral_values()) {
            out.push_back({ViolationKind::KindMismatch, u, VertexSet::npos, VertexSet::npos});
            continue;
        }
        VertexSet covered = coverage(h, n.cover);
        if (! covered.contains(n.bag)) {
            VertexSet missing = n.bag;
            missing -= covered;
            out.push_back({ViolationKind::BagNotCovered, u, VertexSet::npos, missing.first()});
        }
        if (n.cover.total_weight() > k)
            out.push_back({ViolationKind::WidthExceeded, u, VertexSet::npos, VertexSet::npos});
        if (d.kind == DecompKind::HD) {
            VertexSet reach = d.subtree_vertices(u);
            for (const auto & [e, w] : n.cover.entries()) {
                VertexSet bad = h.edge(e).vertices & reach;
                bad -= n.bag;
                if (! bad.empty())
                    out.push_back({ViolationKind::SpecialCondition, u, e, bad.first()});
            }
        }
    }
    return out;
}

std::vector<Violation> check_weak_special(const Hypergraph & h, const DecompositionTree & d)
{
    check_structure(h, d);
    std::vector<Violation> out;
    for (std::size_t u = 0; u < d.nodes.size(); ++u) {
        VertexSet reach = d.subtree_vertices(u);
        for (std::size_t e : d.nodes[u].cover.integral_part()) {
            VertexSet bad = h.edge(e).vertices & reach;
            bad -= d.nodes[u].bag;
            if (! bad.empty())
                out.push_back({ViolationKind::WeakSpecialCondition, u, e, bad.first()});
        }
    }
    return out;
}

bool check_c_bounded(const Hypergraph & h, const DecompositionTree & d, std::size_t c)
{
    check_structure(h, d);
    for (const auto & n : d.nodes) {
        VertexSet integral_covered(h.vertex_count());
        for (std::size_t e : n.cover.integral_part())
            integral_covered |= h.edge(e).vertices;
        VertexSet fractional_part = n.bag;
        fractional_part -= integral_covered;
        if (fractional_part.count() > c)
            return false;
    }
    return true;
}

std::vector<Violation> check_fnf(const Hypergraph & h, const DecompositionTree & d)
{
    check_structure(h, d);
    std::vector<Violation> out;
    for (std::size_t r = 0; r < d.nodes.size(); ++r) {
        auto comps = component_members_within(h, d.nodes[r].bag, h.all_vertices());
        for (std::size_t s : d.nodes[r].children) {
            VertexSet sub = d.subtree_vertices(s);
            VertexSet interface = sub & d.nodes[r].bag;

            // condition 1: sub minus B_r is exactly one [B_r]-component and
            // the B_r part of the subtree sits inside B_s
            VertexSet rest = sub;
            rest -= d.nodes[r].bag;
            const VertexSet * the_comp = nullptr;
            bool ok = ! rest.empty();
            if (ok) {
                for (const auto & c : comps)
                    if (c.intersects(rest)) {
                        if (the_comp != nullptr || c != rest) {
                            ok = false;
                            break;
                        }
                        the_comp = &c;
                    }
            }
            if (! (d.nodes[s].bag & d.nodes[r].bag).contains(interface))
                ok = false;
            if (! ok || the_comp == nullptr) {
                out.push_back({ViolationKind::FnfOneComponent, s, VertexSet::npos, VertexSet::npos});
                continue;
            }

            // condition 2
            if (! d.nodes[s].bag.intersects(*the_comp))
                out.push_back({ViolationKind::FnfChildMeetsComponent, s, VertexSet::npos,
                        VertexSet::npos});

            // condition 3
            VertexSet boundary = coverage(h, d.nodes[s].cover) & d.nodes[r].bag;
            boundary -= d.nodes[s].bag;
            if (! boundary.empty())
                out.push_back({ViolationKind::FnfBoundaryCoverage, s, VertexSet::npos,
                        boundary.first()});
        }
    }
    return out;
}

namespace {

// nodes currently holding v form a subtree; u may join if it touches it
bool can_swap_in(const DecompositionTree & d, std::size_t u, std::size_t v)
{
    std::vector<std::size_t> occ;
    for (std::size_t w = 0; w < d.nodes.size(); ++w)
        if (d.nodes[w].bag.test(v))
            occ.push_back(w);
    if (occ.empty())
        return true;
    if (d.nodes[u].parent != VertexSet::npos && d.nodes[d.nodes[u].parent].bag.test(v))
        return true;
    for (auto c : d.nodes[u].children)
        if (d.nodes[c].bag.test(v))
            return true;
    return false;
}

} // namespace

DecompositionTree bag_maximalize(const Hypergraph & h, const DecompositionTree & d)
{
    if (! validate(h, d, width(d)).empty())
        throw Error("bag_maximalize: input does not validate");
    DecompositionTree out = d;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t u : out.preorder()) {
            VertexSet candidates = coverage(h, out.nodes[u].cover);
            candidates -= out.nodes[u].bag;
            candidates.for_each([&](std::size_t v) {
                if (can_swap_in(out, u, v)) {
                    out.nodes[u].bag.add(v);
                    changed = true;
                }
            });
        }
    }
    return out;
}

DecompositionTree lift_to_original(const Hypergraph & original, const Hypergraph & augmented,
        const std::vector<std::size_t> & parent_of, const DecompositionTree & d)
{
    DecompositionTree out;
    out.kind = d.kind;
    out.root = d.root;
    for (const auto & n : d.nodes) {
        std::vector<Rational> sums(original.edge_count());
        for (const auto & [e, w] : n.cover.entries()) {
            std::size_t target;
            if (parent_of[e] != VertexSet::npos)
                target = parent_of[e];
            else {
                auto idx = original.edge_index(augmented.edge(e).id);
                if (! idx.has_value())
                    throw Error("augmented edge " + augmented.edge(e).id + " has no recorded parent");
                target = *idx;
            }
            sums[target] += w;
        }
        std::vector<std::pair<std::size_t, Rational>> entries;
        for (std::size_t e = 0; e < sums.size(); ++e) {
            if (sums[e].is_zero())
                continue;
            // merging a subedge into its parent can only widen what a unit
            // of weight covers; capping at 1 keeps every covered vertex covered
            entries.emplace_back(e, sums[e] > Rational(1) ? Rational(1) : sums[e]);
        }
        VertexSet bag(original.vertex_count());
        n.bag.for_each([&](std::size_t v) {
            bag.add(*original.vertex_index(augmented.vertex_name(v)));
        });
        EdgeWeighting cover = EdgeWeighting::fractional(std::move(entries));
        if (d.kind != DecompKind::FHD)
            cover.set_kind(WeightKind::Integral);
        out.nodes.push_back(DecompNode{n.parent, n.children, std::move(bag), std::move(cover)});
    }
    return out;
}

} // namespace hgd
