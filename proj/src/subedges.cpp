#include "hgd/subedges.hpp"
#include "hgd/properties.hpp"

#include <algorithm>
#include <map>

namespace hgd {

namespace {

// collects candidate subedges, deduplicating by vertex set and dropping
// any set equal to an existing edge
class Collector {
public:
    Collector(const Hypergraph & h, std::size_t budget) : h_(h), budget_(budget)
    {
        for (std::size_t e : h.distinct_edges())
            existing_.emplace(h.edge(e).vertices.to_vector(), 0);
    }

    void add(const VertexSet & vertices, std::size_t parent)
    {
        auto key = vertices.to_vector();
        if (existing_.contains(key))
            return;
        auto it = index_.find(key);
        if (it != index_.end()) {
            auto & parents = out_[it->second].parents;
            if (std::find(parents.begin(), parents.end(), parent) == parents.end())
                parents.push_back(parent);
            return;
        }
        if (out_.size() >= budget_)
            throw BudgetError("subedge budget exceeded after " + std::to_string(out_.size()) +
                    " subedges; lower k or raise the budget");
        index_.emplace(std::move(key), out_.size());
        out_.push_back(Subedge{vertices, parent, {parent}});
    }

    // every non-empty subset of base, attributed to parent
    void add_all_subsets(const VertexSet & base, std::size_t parent)
    {
        auto verts = base.to_vector();
        if (verts.size() > 25)
            throw BudgetError("subedge powerset too large (" + std::to_string(verts.size()) +
                    " vertices); lower k or raise the budget");
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << verts.size()); ++mask) {
            VertexSet s(h_.vertex_count());
            for (std::size_t i = 0; i < verts.size(); ++i)
                if ((mask >> i) & 1)
                    s.add(verts[i]);
            add(s, parent);
        }
    }

    std::vector<Subedge> take() { return std::move(out_); }

private:
    const Hypergraph & h_;
    std::size_t budget_;
    std::map<std::vector<std::size_t>, std::size_t> index_;
    std::map<std::vector<std::size_t>, char> existing_;
    std::vector<Subedge> out_;
};

} // namespace

SubedgeSet f_bip(const Hypergraph & h, std::size_t k, std::size_t budget)
{
    if (k == 0)
        throw Error("f_bip requires k >= 1");
    Collector collect(h, budget);
    const auto & pool = h.distinct_edges();
    for (std::size_t e : pool) {
        const VertexSet & base = h.edge(e).vertices;
        // unions of up to k other edges, pruned to their meet with e
        std::vector<std::size_t> others;
        for (std::size_t f : pool)
            if (f != e && h.edge(f).vertices.intersects(base))
                others.push_back(f);
        auto rec = [&](auto && self, std::size_t from, std::size_t depth,
                const VertexSet & cut) -> void {
            if (depth > 0)
                collect.add_all_subsets(cut, e);
            if (depth == k)
                return;
            for (std::size_t i = from; i < others.size(); ++i) {
                VertexSet next = cut | (h.edge(others[i]).vertices & base);
                self(self, i + 1, depth + 1, next);
            }
        };
        rec(rec, 0, 0, VertexSet(h.vertex_count()));
    }
    return SubedgeSet{SubedgeRule::BipIntersectionOfUnion, collect.take()};
}

SubedgeSet g_bmip(const Hypergraph & h, std::size_t k, std::size_t c, std::size_t budget)
{
    if (k == 0 || c < 2)
        throw Error("g_bmip requires k >= 1 and c >= 2");
    Collector collect(h, budget);
    const auto & pool = h.distinct_edges();

    // union arity follows the proof's branch count
    std::size_t arity = 1;
    for (std::size_t i = 0; i + 1 < c; ++i) {
        if (arity > 64 / std::max<std::size_t>(k, 1))
            throw BudgetError("g_bmip branch bound k^(c-1) too large");
        arity *= k;
    }

    for (std::size_t e : pool) {
        const VertexSet & base = h.edge(e).vertices;

        // I(e): meets of e with 1..c-1 further distinct edges, non-empty,
        // deduplicated; the search starts at e and prunes empty meets
        std::vector<VertexSet> meets;
        {
            std::map<std::vector<std::size_t>, char> seen;
            auto rec = [&](auto && self, std::size_t from, std::size_t depth,
                    const VertexSet & meet) -> void {
                if (depth > 0 && seen.emplace(meet.to_vector(), 0).second)
                    meets.push_back(meet);
                if (depth + 1 >= c)
                    return;
                for (std::size_t i = from; i < pool.size(); ++i) {
                    if (pool[i] == e)
                        continue;
                    VertexSet next = meet & h.edge(pool[i]).vertices;
                    if (next.empty())
                        continue;
                    self(self, i + 1, depth + 1, next);
                }
            };
            rec(rec, 0, 0, base);
        }

        // subsets of unions of up to k^(c-1) members of I(e)
        std::map<std::vector<std::size_t>, char> union_seen;
        auto rec = [&](auto && self, std::size_t from, std::size_t depth,
                const VertexSet & acc) -> void {
            if (depth > 0 && union_seen.emplace(acc.to_vector(), 0).second)
                collect.add_all_subsets(acc, e);
            if (depth == arity)
                return;
            for (std::size_t i = from; i < meets.size(); ++i) {
                VertexSet next = acc | meets[i];
                self(self, i + 1, depth + 1, next);
            }
        };
        rec(rec, 0, 0, VertexSet(h.vertex_count()));
    }
    return SubedgeSet{SubedgeRule::BmipTransversalBranch, collect.take()};
}

SubedgeSet fractional_subedges(const Hypergraph & h, std::size_t size_cap, std::size_t budget)
{
    Collector collect(h, budget);
    for (std::size_t e : h.distinct_edges()) {
        auto verts = h.edge(e).vertices.to_vector();
        std::vector<std::size_t> pick;
        auto rec = [&](auto && self, std::size_t from) -> void {
            if (! pick.empty()) {
                VertexSet s(h.vertex_count());
                for (auto v : pick)
                    s.add(v);
                collect.add(s, e);
            }
            if (pick.size() == size_cap)
                return;
            for (std::size_t i = from; i < verts.size(); ++i) {
                pick.push_back(verts[i]);
                self(self, i + 1);
                pick.pop_back();
            }
        };
        rec(rec, 0);
    }
    return SubedgeSet{SubedgeRule::FractionalSizeCap, collect.take()};
}

Augmentation augment(const Hypergraph & h, const SubedgeSet & s)
{
    std::vector<std::pair<std::string, std::vector<std::string>>> spec;
    for (const auto & e : h.edges()) {
        std::vector<std::string> names;
        e.vertices.for_each([&](std::size_t v) { names.push_back(h.vertex_name(v)); });
        spec.emplace_back(e.id, std::move(names));
    }
    for (std::size_t i = 0; i < s.subedges.size(); ++i) {
        std::vector<std::string> names;
        s.subedges[i].vertices.for_each([&](std::size_t v) {
            names.push_back(h.vertex_name(v));
        });
        spec.emplace_back("aug" + std::to_string(i) + ":" + h.edge(s.subedges[i].parent).id,
                std::move(names));
    }

    Augmentation out;
    out.extended = Hypergraph::build(spec, std::max(default_vertex_cap, h.vertex_count()));
    out.parent_of.assign(out.extended.edge_count(), VertexSet::npos);
    for (std::size_t i = 0; i < s.subedges.size(); ++i)
        out.parent_of[h.edge_count() + i] = s.subedges[i].parent;
    return out;
}

} // namespace hgd
