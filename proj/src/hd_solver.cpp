#include "hgd/hd_solver.hpp"

#include <algorithm>
#include <unordered_map>

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

class HdSearch {
public:
    HdSearch(const Hypergraph & h, std::size_t k) : h_(h), k_(k) {}

    std::optional<DecompositionTree> run()
    {
        if (! solvable(h_.all_vertices(), {}))
            return std::nullopt;
        DecompositionTree tree;
        tree.kind = DecompKind::HD;
        build(h_.all_vertices(), {}, VertexSet::npos, h_.empty_set(), tree);
        return tree;
    }

private:
    using Key = std::vector<std::size_t>;

    Key make_key(const VertexSet & c, const std::vector<std::size_t> & r) const
    {
        Key key;
        key.push_back(c.count());
        c.for_each([&](std::size_t v) { key.push_back(v); });
        for (auto e : r)
            key.push_back(h_.edge_count() + e);
        return key;
    }

    VertexSet edge_union(const std::vector<std::size_t> & edges) const
    {
        VertexSet s(h_.vertex_count());
        for (auto e : edges)
            s |= h_.edge(e).vertices;
        return s;
    }

    // subproblem: decompose component c below a node covered by edge set r
    bool solvable(const VertexSet & c, const std::vector<std::size_t> & r)
    {
        Key key = make_key(c, r);
        auto it = memo_.find(key);
        if (it != memo_.end())
            return it->second.has_value();

        VertexSet region(h_.vertex_count());
        for (auto e : edges_incident(h_, c))
            region |= h_.edge(e).vertices;
        VertexSet connector = edge_union(r) & region;

        // only edges meeting the component's region can matter here
        std::vector<std::size_t> pool;
        for (std::size_t e : h_.distinct_edges())
            if (h_.edge(e).vertices.intersects(region))
                pool.push_back(e);

        std::optional<std::vector<std::size_t>> found;
        std::vector<std::size_t> chosen;
        auto try_sets = [&](auto && self, std::size_t from, const VertexSet & covered) -> bool {
            if (! chosen.empty() && covered.contains(connector) && covered.intersects(c)) {
                bool all_ok = true;
                for (const auto & sub : component_members_within(h_, covered, c))
                    if (! solvable(sub, chosen)) {
                        all_ok = false;
                        break;
                    }
                if (all_ok) {
                    found = chosen;
                    return true;
                }
            }
            if (chosen.size() == k_)
                return false;
            for (std::size_t i = from; i < pool.size(); ++i) {
                chosen.push_back(pool[i]);
                if (self(self, i + 1, covered | h_.edge(pool[i]).vertices))
                    return true;
                chosen.pop_back();
            }
            return false;
        };
        try_sets(try_sets, 0, VertexSet(h_.vertex_count()));

        memo_.emplace(std::move(key), found);
        return found.has_value();
    }

    void build(const VertexSet & c, const std::vector<std::size_t> & r, std::size_t parent,
            const VertexSet & parent_bag, DecompositionTree & tree)
    {
        const auto & chosen = memo_.at(make_key(c, r));
        VertexSet region(h_.vertex_count());
        for (auto e : edges_incident(h_, c))
            region |= h_.edge(e).vertices;
        VertexSet lam_verts = edge_union(*chosen);
        VertexSet bag = (lam_verts & region) | (lam_verts & parent_bag);
        std::size_t u = tree.add_node(parent, bag, EdgeWeighting::integral(*chosen));
        for (const auto & sub : component_members_within(h_, lam_verts, c))
            build(sub, *chosen, u, bag, tree);
    }

    const Hypergraph & h_;
    std::size_t k_;
    std::unordered_map<Key, std::optional<std::vector<std::size_t>>, KeyHash> memo_;
};

} // namespace

std::optional<DecompositionTree> solve_hd(const Hypergraph & h, std::size_t k)
{
    if (k == 0)
        throw Error("solve_hd requires k >= 1");
    if (h.edge_count() == 0)
        throw Error("solve_hd: empty hypergraph");
    return HdSearch(h, k).run();
}

std::size_t hw(const Hypergraph & h)
{
    for (std::size_t k = 1;; ++k)
        if (solve_hd(h, k).has_value())
            return k;
}

} // namespace hgd
