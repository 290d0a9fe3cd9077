#include "hgd/oracle.hpp"
#include "hgd/covers.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

namespace hgd {

namespace {

struct KeyHash {
    std::size_t operator()(const std::vector<std::size_t> & v) const
    {
        std::size_t h = v.size();
        for (auto x : v)
            h = h * 1099511628211ull + x;
        return h;
    }
};

// (component, boundary bag, forbidden set) flattened to vertex lists
using Key = std::vector<std::size_t>;

Key make_key(const VertexSet & a, const VertexSet & b, const VertexSet * c = nullptr)
{
    Key key;
    key.push_back(a.count());
    a.for_each([&](std::size_t v) { key.push_back(v); });
    key.push_back(b.count());
    b.for_each([&](std::size_t v) { key.push_back(v); });
    if (c != nullptr)
        c->for_each([&](std::size_t v) { key.push_back(v); });
    return key;
}

struct BagChoice {
    VertexSet bag;
    EdgeWeighting cover;
};

class BruteSearch {
public:
    BruteSearch(const Hypergraph & h, const Rational & k, DecompKind kind) :
        h_(h), k_(k), kind_(kind)
    {
    }

    std::optional<DecompositionTree> run()
    {
        VertexSet none(h_.vertex_count());
        if (! solvable(h_.all_vertices(), none, none))
            return std::nullopt;
        DecompositionTree tree;
        tree.kind = kind_;
        build(h_.all_vertices(), none, none, VertexSet::npos, tree);
        return tree;
    }

private:
    // cover of B within budget, or nullopt; memoized across subproblems
    std::optional<EdgeWeighting> bag_cover(const VertexSet & b)
    {
        auto it = cover_memo_.find(b);
        if (it != cover_memo_.end())
            return it->second;
        std::optional<EdgeWeighting> out;
        if (kind_ == DecompKind::FHD) {
            out = exists_fractional_cover(h_, b, k_);
        }
        else {
            auto [lam, value] = optimal_integral_cover(h_, b);
            if (Rational(BigInt(value)) <= k_)
                out = lam;
        }
        cover_memo_.emplace(b, out);
        return out;
    }

    // candidate bags for (C, boundary Bp, forbidden X), in enumeration order
    template <typename F>
    void for_each_bag(const VertexSet & c, const VertexSet & bp, const VertexSet & x, F && f)
    {
        auto inc = edges_incident(h_, c);
        VertexSet required(h_.vertex_count());
        VertexSet relevant_bp(h_.vertex_count());
        for (auto e : inc) {
            required |= h_.edge(e).vertices & bp;
            relevant_bp |= h_.edge(e).vertices;
        }
        relevant_bp &= bp;
        if (required.intersects(x))
            return;

        VertexSet free = c | relevant_bp;
        free -= required;
        free -= x;
        auto free_list = free.to_vector();
        if (free_list.size() > 25)
            throw Error("oracle bag enumeration too large");
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free_list.size()); ++mask) {
            VertexSet bag = required;
            for (std::size_t i = 0; i < free_list.size(); ++i)
                if ((mask >> i) & 1)
                    bag.add(free_list[i]);
            if (! bag.intersects(c))
                continue;
            if (! f(bag))
                return;
        }
    }

    // lambda candidates covering the bag for the HD kind, |lambda| <= k
    template <typename F>
    void for_each_hd_lambda(const VertexSet & bag, F && f)
    {
        std::size_t limit = static_cast<std::size_t>(k_.floor_nonneg());
        const auto & pool = h_.distinct_edges();
        std::vector<std::size_t> chosen;
        bool stop = false;
        auto rec = [&](auto && self, std::size_t from, const VertexSet & covered) -> void {
            if (stop)
                return;
            if (covered.contains(bag)) {
                if (! f(chosen))
                    stop = true;
                return;
            }
            if (chosen.size() == limit)
                return;
            for (std::size_t i = from; i < pool.size() && ! stop; ++i) {
                chosen.push_back(pool[i]);
                self(self, i + 1, covered | h_.edge(pool[i]).vertices);
                chosen.pop_back();
            }
        };
        rec(rec, 0, VertexSet(h_.vertex_count()));
    }

    bool solvable(const VertexSet & c, const VertexSet & bp, const VertexSet & x)
    {
        // only the component's own region matters for every check below
        VertexSet region = vertex_region(c);
        VertexSet bp_rel = bp & region;
        VertexSet x_rel = x & region;
        Key key = make_key(c, bp_rel, &x_rel);
        auto it = memo_.find(key);
        if (it != memo_.end())
            return it->second.has_value();

        std::optional<BagChoice> found;
        if (kind_ == DecompKind::HD) {
            for_each_bag(c, bp_rel, x_rel, [&](const VertexSet & bag) {
                bool keep_going = true;
                for_each_hd_lambda(bag, [&](const std::vector<std::size_t> & lam) {
                    VertexSet lam_verts(h_.vertex_count());
                    for (auto e : lam)
                        lam_verts |= h_.edge(e).vertices;
                    VertexSet x_next = x_rel | (lam_verts - bag);
                    if (children_solvable(c, bag, x_next)) {
                        found = BagChoice{bag, EdgeWeighting::integral(lam)};
                        keep_going = false;
                        return false;
                    }
                    return true;
                });
                return keep_going;
            });
        }
        else {
            VertexSet none(h_.vertex_count());
            for_each_bag(c, bp_rel, none, [&](const VertexSet & bag) {
                auto cover = bag_cover(bag);
                if (cover.has_value() && children_solvable(c, bag, none)) {
                    found = BagChoice{bag, *cover};
                    return false;
                }
                return true;
            });
        }
        memo_.emplace(std::move(key), found);
        return found.has_value();
    }

    bool children_solvable(const VertexSet & c, const VertexSet & bag, const VertexSet & x_next)
    {
        for (const auto & sub : component_members_within(h_, bag, c))
            if (! solvable(sub, bag, x_next))
                return false;
        return true;
    }

    VertexSet vertex_region(const VertexSet & c) const
    {
        VertexSet region = c;
        for (auto e : edges_incident(h_, c))
            region |= h_.edge(e).vertices;
        return region;
    }

    void build(const VertexSet & c, const VertexSet & bp, const VertexSet & x,
            std::size_t parent, DecompositionTree & tree)
    {
        VertexSet region = vertex_region(c);
        VertexSet bp_rel = bp & region;
        VertexSet x_rel = x & region;
        Key key = make_key(c, bp_rel, &x_rel);
        const auto & choice = memo_.at(key);
        std::size_t u = tree.add_node(parent, choice->bag, choice->cover);
        VertexSet x_next = x_rel;
        if (kind_ == DecompKind::HD) {
            VertexSet lam_verts(h_.vertex_count());
            for (auto e : choice->cover.support())
                lam_verts |= h_.edge(e).vertices;
            x_next = x_rel | (lam_verts - choice->bag);
        }
        for (const auto & sub : component_members_within(h_, choice->bag, c))
            build(sub, choice->bag, x_next, u, tree);
    }

    const Hypergraph & h_;
    Rational k_;
    DecompKind kind_;
    std::unordered_map<Key, std::optional<BagChoice>, KeyHash> memo_;
    std::unordered_map<VertexSet, std::optional<EdgeWeighting>, VertexSetHash> cover_memo_;
};

} // namespace

std::optional<DecompositionTree> brute_width(const Hypergraph & h, const Rational & k,
        DecompKind kind, std::size_t vertex_cap)
{
    if (h.vertex_count() > vertex_cap)
        throw Error("brute_width: vertex count exceeds cap " + std::to_string(vertex_cap));
    if (h.edge_count() == 0)
        throw Error("brute_width: empty hypergraph");
    if (k < Rational(1))
        return std::nullopt;
    return BruteSearch(h, k, kind).run();
}

bool brute_shattered(const Hypergraph & h, const VertexSet & x)
{
    if (x.count() > 20)
        throw Error("brute_shattered: set too large");
    auto members = x.to_vector();
    std::unordered_set<std::uint64_t> traces;
    for (std::size_t e : h.distinct_edges()) {
        std::uint64_t mask = 0;
        for (std::size_t i = 0; i < members.size(); ++i)
            if (h.edge(e).vertices.test(members[i]))
                mask |= std::uint64_t{1} << i;
        traces.insert(mask);
    }
    return traces.size() == (std::uint64_t{1} << members.size());
}

Rational ordering_width(const Hypergraph & h, DecompKind kind)
{
    if (kind == DecompKind::HD)
        throw Error("ordering_width: no elimination characterization for HDs");
    const std::size_t n = h.vertex_count();
    if (n > 8)
        throw Error("ordering_width: too many vertices");

    std::vector<std::vector<char>> base_adj(n, std::vector<char>(n, false));
    for (std::size_t e = 0; e < h.edge_count(); ++e) {
        auto verts = h.edge(e).vertices.to_vector();
        for (std::size_t i = 0; i < verts.size(); ++i)
            for (std::size_t j = i + 1; j < verts.size(); ++j)
                base_adj[verts[i]][verts[j]] = base_adj[verts[j]][verts[i]] = true;
    }

    std::unordered_map<VertexSet, Rational, VertexSetHash> cost_memo;
    auto bag_cost = [&](const VertexSet & bag) {
        auto it = cost_memo.find(bag);
        if (it != cost_memo.end())
            return it->second;
        Rational cost;
        if (kind == DecompKind::FHD)
            cost = optimal_fractional_cover(h, bag).second;
        else
            cost = Rational(BigInt(optimal_integral_cover(h, bag).second));
        cost_memo.emplace(bag, cost);
        return cost;
    };

    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i)
        perm[i] = i;
    std::optional<Rational> best;
    do {
        auto adj = base_adj;
        std::vector<char> gone(n, false);
        Rational widest(0);
        for (std::size_t v : perm) {
            VertexSet bag(n);
            bag.add(v);
            std::vector<std::size_t> nbrs;
            for (std::size_t w = 0; w < n; ++w)
                if (! gone[w] && w != v && adj[v][w]) {
                    bag.add(w);
                    nbrs.push_back(w);
                }
            for (std::size_t i = 0; i < nbrs.size(); ++i)
                for (std::size_t j = i + 1; j < nbrs.size(); ++j)
                    adj[nbrs[i]][nbrs[j]] = adj[nbrs[j]][nbrs[i]] = true;
            gone[v] = true;
            Rational c = bag_cost(bag);
            if (c > widest)
                widest = c;
            if (best.has_value() && widest >= *best)
                break;
        }
        if (! best.has_value() || widest < *best)
            best = widest;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return *best;
}

} // namespace hgd
