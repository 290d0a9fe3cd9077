#pragma once

#include "hgd/vertex_set.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace hgd {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// resource budget exceeded; never silent truncation
class BudgetError : public Error {
public:
    using Error::Error;
};

inline constexpr std::size_t default_vertex_cap = 4096;

struct HyperEdge {
    std::string id;
    VertexSet vertices;
};

// Immutable hypergraph over dense vertex indices assigned in first-seen
// order. No isolated vertices by construction: the vertex universe is
// exactly the union of the edges.
class Hypergraph {
public:
    Hypergraph() = default;

    // input: list of (edge id, vertex name list)
    static Hypergraph build(const std::vector<std::pair<std::string, std::vector<std::string>>> & edges,
            std::size_t vertex_cap = default_vertex_cap);

    std::size_t vertex_count() const { return vertex_names_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    const std::string & vertex_name(std::size_t v) const { return vertex_names_[v]; }
    std::optional<std::size_t> vertex_index(const std::string & name) const;

    const HyperEdge & edge(std::size_t e) const { return edges_[e]; }
    const std::vector<HyperEdge> & edges() const { return edges_; }
    std::optional<std::size_t> edge_index(const std::string & id) const;

    const std::vector<std::size_t> & incident_edges(std::size_t v) const { return incidence_[v]; }

    VertexSet all_vertices() const { return VertexSet::full(vertex_count()); }
    VertexSet empty_set() const { return VertexSet(vertex_count()); }

    // duplicate vertex sets under distinct identifiers are allowed but flagged
    bool has_duplicate_edges() const { return has_duplicate_edges_; }

    // edge -> lowest-index edge with the same vertex set
    std::size_t dedup_representative(std::size_t e) const { return dedup_rep_[e]; }
    // lowest-index edges of each distinct vertex set, ascending
    const std::vector<std::size_t> & distinct_edges() const { return distinct_edges_; }

    std::string vertex_set_names(const VertexSet & s) const;

private:
    std::vector<std::string> vertex_names_;
    std::unordered_map<std::string, std::size_t> vertex_index_;
    std::vector<HyperEdge> edges_;
    std::unordered_map<std::string, std::size_t> edge_index_;
    std::vector<std::vector<std::size_t>> incidence_;
    std::vector<std::size_t> dedup_rep_;
    std::vector<std::size_t> distinct_edges_;
    bool has_duplicate_edges_ = false;
};

// Canonical [V]-component: the separator it was computed against plus the
// maximal [V]-connected member set.
struct Component {
    VertexSet separator;
    VertexSet members;
};

// edges(C) = { e : e cap C != empty }
std::vector<std::size_t> edges_incident(const Hypergraph & h, const VertexSet & c);

// all [V]-components, sorted by canonical key (lexicographic member list)
std::vector<Component> components(const Hypergraph & h, const VertexSet & v);

// members of the [V]-components that lie entirely inside `within`;
// components that merely touch `within` are dropped
std::vector<VertexSet> component_members_within(const Hypergraph & h, const VertexSet & v,
        const VertexSet & within);

// witness that x and y lie in the same [V]-component: the vertex sequence
// of a [V]-path, or nullopt
std::optional<std::vector<std::size_t>> find_v_path(const Hypergraph & h, const VertexSet & v,
        std::size_t x, std::size_t y);

struct InducedSubhypergraph {
    Hypergraph hg;
    // new edge index -> original edge indices that project onto it
    std::vector<std::vector<std::size_t>> sources;
    // new vertex index -> original vertex index
    std::vector<std::size_t> vertex_map;
};

InducedSubhypergraph induced_sub(const Hypergraph & h, const VertexSet & keep);

struct DualResult {
    Hypergraph hg;
    // the dual is faithful (dual of dual = original) only for essential inputs
    bool input_was_essential;
};

DualResult dual(const Hypergraph & h);

bool is_essential(const Hypergraph & h);

struct EssentialReduction {
    Hypergraph hg;
    // deleted vertex name -> kept representative name
    std::vector<std::pair<std::string, std::string>> merged;
};

// delete all but the first vertex of every edge-type class
EssentialReduction reduce_essential(const Hypergraph & h);

} // namespace hgd
