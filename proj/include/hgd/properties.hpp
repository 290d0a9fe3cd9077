#pragma once

#include "hgd/hypergraph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hgd {

inline constexpr std::size_t default_vc_cap = 16;

// max over vertices of the incident-edge count
std::size_t degree(const Hypergraph & h);

// max |e1 cap e2| over distinct edge pairs; identical vertex sets count
// once unless count_duplicate_edges
std::size_t iwidth(const Hypergraph & h, bool count_duplicate_edges = false);

// max cardinality of intersections of c pairwise-distinct edges; 0 when
// fewer than c edges; c = 1 yields the rank
std::size_t c_miwidth(const Hypergraph & h, std::size_t c, bool count_duplicate_edges = false);

// exact VC dimension by ascending shattered-set search; nullopt when the
// vertex count exceeds the brute-force cap (never a guess)
std::optional<std::size_t> vc_dimension(const Hypergraph & h,
        std::size_t cap = default_vc_cap);

// max |e|
std::size_t rank(const Hypergraph & h);

struct PropertyReport {
    std::string instance;
    std::size_t degree = 0;
    std::size_t iwidth = 0;
    std::vector<std::pair<std::size_t, std::size_t>> miwidth; // (c, value)
    std::optional<std::size_t> vc_dim;
    std::size_t rank = 0;
    std::size_t vertices = 0;
    std::size_t edges = 0;
};

PropertyReport analyze(const Hypergraph & h, const std::vector<std::size_t> & multi_cs,
        std::size_t vc_cap = default_vc_cap);

struct CorpusReport {
    std::vector<PropertyReport> rows;
    std::vector<std::pair<std::string, std::string>> errors; // (path, message)

    // per-property histogram over buckets 0..5 and ">5"
    std::string table_text(const std::vector<std::size_t> & multi_cs) const;
    std::string csv(const std::vector<std::size_t> & multi_cs) const;
};

CorpusReport analyze_corpus(const std::vector<std::string> & paths,
        const std::vector<std::size_t> & multi_cs, std::size_t vc_cap = default_vc_cap,
        std::size_t jobs = 1);

} // namespace hgd
