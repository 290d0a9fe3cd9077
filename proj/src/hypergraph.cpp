#include "hgd/hypergraph.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace hgd {

Hypergraph Hypergraph::build(const std::vector<std::pair<std::string, std::vector<std::string>>> & edges,
        std::size_t vertex_cap)
{
    // first pass: dense vertex indices in first-seen order
    Hypergraph h;
    for (const auto & [id, verts] : edges) {
        if (verts.empty())
            throw Error("empty edge " + id);
        if (h.edge_index_.contains(id))
            throw Error("duplicate edge id " + id);
        h.edge_index_.emplace(id, h.edge_index_.size());
        for (const auto & name : verts) {
            if (! h.vertex_index_.contains(name)) {
                h.vertex_index_.emplace(name, h.vertex_names_.size());
                h.vertex_names_.push_back(name);
            }
        }
    }
    if (h.vertex_names_.size() > vertex_cap)
        throw Error("vertex count " + std::to_string(h.vertex_names_.size()) +
                " exceeds cap " + std::to_string(vertex_cap));

    const std::size_t n = h.vertex_names_.size();
    h.incidence_.assign(n, {});
    for (const auto & [id, verts] : edges) {
        VertexSet s(n);
        for (const auto & name : verts)
            s.add(h.vertex_index_.at(name));
        std::size_t e = h.edges_.size();
        s.for_each([&](std::size_t v) { h.incidence_[v].push_back(e); });
        h.edges_.push_back(HyperEdge{id, std::move(s)});
    }

    std::map<std::vector<std::size_t>, std::size_t> seen;
    h.dedup_rep_.resize(h.edges_.size());
    for (std::size_t e = 0; e < h.edges_.size(); ++e) {
        auto key = h.edges_[e].vertices.to_vector();
        auto [it, inserted] = seen.emplace(std::move(key), e);
        h.dedup_rep_[e] = it->second;
        if (inserted)
            h.distinct_edges_.push_back(e);
        else
            h.has_duplicate_edges_ = true;
    }
    return h;
}

std::optional<std::size_t> Hypergraph::vertex_index(const std::string & name) const
{
    auto it = vertex_index_.find(name);
    if (it == vertex_index_.end())
        return std::nullopt;
    return it->second;
}

std::optional<std::size_t> Hypergraph::edge_index(const std::string & id) const
{
    auto it = edge_index_.find(id);
    if (it == edge_index_.end())
        return std::nullopt;
    return it->second;
}

std::string Hypergraph::vertex_set_names(const VertexSet & s) const
{
    std::string out = "{";
    bool sep = false;
    s.for_each([&](std::size_t v) {
        if (sep)
            out += ",";
        out += vertex_names_[v];
        sep = true;
    });
    return out + "}";
}

std::vector<std::size_t> edges_incident(const Hypergraph & h, const VertexSet & c)
{
    std::vector<std::size_t> out;
    for (std::size_t e = 0; e < h.edge_count(); ++e)
        if (h.edge(e).vertices.intersects(c))
            out.push_back(e);
    return out;
}

std::vector<VertexSet> component_members_within(const Hypergraph & h, const VertexSet & v,
        const VertexSet & within)
{
    std::vector<VertexSet> out;
    VertexSet unseen = within;
    unseen -= v;
    std::vector<char> edge_done(h.edge_count(), false);
    while (true) {
        std::size_t seed = unseen.first();
        if (seed == VertexSet::npos)
            break;
        VertexSet members(h.vertex_count());
        std::deque<std::size_t> queue{seed};
        members.add(seed);
        unseen.remove(seed);
        while (! queue.empty()) {
            std::size_t cur = queue.front();
            queue.pop_front();
            for (std::size_t e : h.incident_edges(cur)) {
                if (edge_done[e])
                    continue;
                edge_done[e] = true;
                VertexSet span = h.edge(e).vertices;
                span -= v;
                // span vertices are pairwise [v]-adjacent
                span.for_each([&](std::size_t w) {
                    if (! members.test(w)) {
                        members.add(w);
                        unseen.remove(w);
                        queue.push_back(w);
                    }
                });
            }
        }
        if (within.contains(members))
            out.push_back(std::move(members));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Component> components(const Hypergraph & h, const VertexSet & v)
{
    std::vector<Component> out;
    for (auto & m : component_members_within(h, v, h.all_vertices()))
        out.push_back(Component{v, std::move(m)});
    return out;
}

std::optional<std::vector<std::size_t>> find_v_path(const Hypergraph & h, const VertexSet & v,
        std::size_t x, std::size_t y)
{
    if (v.test(x) || v.test(y))
        return std::nullopt;
    std::vector<std::size_t> pred(h.vertex_count(), VertexSet::npos);
    VertexSet seen(h.vertex_count());
    seen.add(x);
    std::deque<std::size_t> queue{x};
    while (! queue.empty()) {
        std::size_t cur = queue.front();
        queue.pop_front();
        if (cur == y)
            break;
        for (std::size_t e : h.incident_edges(cur)) {
            VertexSet span = h.edge(e).vertices;
            span -= v;
            if (! span.test(cur))
                continue;
            span.for_each([&](std::size_t w) {
                if (! seen.test(w)) {
                    seen.add(w);
                    pred[w] = cur;
                    queue.push_back(w);
                }
            });
        }
    }
    if (! seen.test(y))
        return std::nullopt;
    std::vector<std::size_t> path;
    for (std::size_t cur = y;; cur = pred[cur]) {
        path.push_back(cur);
        if (cur == x)
            break;
    }
    std::reverse(path.begin(), path.end());
    return path;
}

InducedSubhypergraph induced_sub(const Hypergraph & h, const VertexSet & keep)
{
    // projected edges, deduplicated, in first-seen order
    std::map<std::vector<std::size_t>, std::size_t> projected;
    std::vector<std::pair<std::string, std::vector<std::string>>> spec;
    std::vector<std::vector<std::size_t>> sources;
    for (std::size_t e = 0; e < h.edge_count(); ++e) {
        VertexSet cut = h.edge(e).vertices & keep;
        if (cut.empty())
            continue;
        auto key = cut.to_vector();
        auto it = projected.find(key);
        if (it == projected.end()) {
            projected.emplace(key, spec.size());
            std::vector<std::string> names;
            for (auto v : key)
                names.push_back(h.vertex_name(v));
            spec.emplace_back(h.edge(e).id, std::move(names));
            sources.push_back({e});
        }
        else {
            sources[it->second].push_back(e);
        }
    }

    InducedSubhypergraph out;
    out.hg = Hypergraph::build(spec);
    out.sources = std::move(sources);
    out.vertex_map.resize(out.hg.vertex_count());
    for (std::size_t v = 0; v < out.hg.vertex_count(); ++v)
        out.vertex_map[v] = *h.vertex_index(out.hg.vertex_name(v));
    return out;
}

DualResult dual(const Hypergraph & h)
{
    std::vector<std::pair<std::string, std::vector<std::string>>> spec;
    for (std::size_t v = 0; v < h.vertex_count(); ++v) {
        std::vector<std::string> members;
        for (std::size_t e : h.incident_edges(v))
            members.push_back(h.edge(e).id);
        spec.emplace_back(h.vertex_name(v), std::move(members));
    }
    return DualResult{Hypergraph::build(spec), is_essential(h)};
}

bool is_essential(const Hypergraph & h)
{
    std::map<std::vector<std::size_t>, std::size_t> types;
    for (std::size_t v = 0; v < h.vertex_count(); ++v)
        if (! types.emplace(h.incident_edges(v), v).second)
            return false;
    return true;
}

EssentialReduction reduce_essential(const Hypergraph & h)
{
    std::map<std::vector<std::size_t>, std::size_t> types;
    VertexSet keep(h.vertex_count());
    EssentialReduction out;
    for (std::size_t v = 0; v < h.vertex_count(); ++v) {
        auto [it, inserted] = types.emplace(h.incident_edges(v), v);
        if (inserted)
            keep.add(v);
        else
            out.merged.emplace_back(h.vertex_name(v), h.vertex_name(it->second));
    }

    std::vector<std::pair<std::string, std::vector<std::string>>> spec;
    for (std::size_t e = 0; e < h.edge_count(); ++e) {
        std::vector<std::string> names;
        (h.edge(e).vertices & keep).for_each([&](std::size_t v) {
            names.push_back(h.vertex_name(v));
        });
        spec.emplace_back(h.edge(e).id, std::move(names));
    }
    out.hg = Hypergraph::build(spec);
    return out;
}

} // namespace hgd
