#pragma once

#include "hgd/hypergraph.hpp"

#include <random>
#include <string>
#include <vector>

namespace fixtures {

using EdgeSpec = std::vector<std::pair<std::string, std::vector<std::string>>>;

inline hgd::Hypergraph triangle()
{
    return hgd::Hypergraph::build({{"e1", {"a", "b"}}, {"e2", {"b", "c"}}, {"e3", {"a", "c"}}});
}

inline hgd::Hypergraph path2()
{
    return hgd::Hypergraph::build({{"e1", {"a", "b"}}, {"e2", {"b", "c"}}});
}

inline hgd::Hypergraph single_edge(std::size_t size = 3)
{
    std::vector<std::string> verts;
    for (std::size_t i = 0; i < size; ++i)
        verts.push_back("v" + std::to_string(i + 1));
    return hgd::Hypergraph::build({{"e1", verts}});
}

// all binary edges on n vertices
inline hgd::Hypergraph clique(std::size_t n)
{
    EdgeSpec spec;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            spec.push_back({"e" + std::to_string(i + 1) + "_" + std::to_string(j + 1),
                    {"v" + std::to_string(i + 1), "v" + std::to_string(j + 1)}});
    return hgd::Hypergraph::build(spec);
}

inline hgd::Hypergraph cycle(std::size_t n)
{
    EdgeSpec spec;
    for (std::size_t i = 0; i < n; ++i)
        spec.push_back({"e" + std::to_string(i + 1),
                {"v" + std::to_string(i + 1), "v" + std::to_string((i + 1) % n + 1)}});
    return hgd::Hypergraph::build(spec);
}

// H_n: edges are all (n-1)-subsets V_n minus one vertex
inline hgd::Hypergraph co_singleton_family(std::size_t n)
{
    EdgeSpec spec;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::string> verts;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i)
                verts.push_back("v" + std::to_string(j + 1));
        spec.push_back({"e" + std::to_string(i + 1), std::move(verts)});
    }
    return hgd::Hypergraph::build(spec);
}

inline hgd::Hypergraph random_hypergraph(std::mt19937_64 & rng, std::size_t max_vertices,
        std::size_t max_edges)
{
    std::uniform_int_distribution<std::size_t> nv(2, max_vertices);
    std::uniform_int_distribution<std::size_t> ne(1, max_edges);
    std::size_t pool = nv(rng);
    std::size_t m = ne(rng);
    EdgeSpec spec;
    for (std::size_t e = 0; e < m; ++e) {
        std::uniform_int_distribution<std::size_t> sz(1, std::min<std::size_t>(4, pool));
        std::size_t size = sz(rng);
        std::vector<std::size_t> ids(pool);
        for (std::size_t i = 0; i < pool; ++i)
            ids[i] = i;
        std::shuffle(ids.begin(), ids.end(), rng);
        std::vector<std::string> verts;
        for (std::size_t i = 0; i < size; ++i)
            verts.push_back("v" + std::to_string(ids[i] + 1));
        spec.push_back({"e" + std::to_string(e + 1), std::move(verts)});
    }
    return hgd::Hypergraph::build(spec);
}

inline hgd::VertexSet set_of(const hgd::Hypergraph & h, const std::vector<std::string> & names)
{
    hgd::VertexSet s(h.vertex_count());
    for (const auto & n : names)
        s.add(*h.vertex_index(n));
    return s;
}

} // namespace fixtures
