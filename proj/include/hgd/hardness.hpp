#pragma once

#include "hgd/decomposition.hpp"
#include "hgd/hypergraph.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace hgd {

struct Literal {
    std::size_t variable = 0; // 1-based
    bool positive = true;
};

// 3CNF instance; every clause has exactly three literals
struct CnfFormula {
    std::size_t variables = 0;
    std::vector<std::array<Literal, 3>> clauses;

    static CnfFormula parse_dimacs(const std::string & text);
    // clauses separated by ';', literals are signed 1-based integers,
    // e.g. "1 -2 3; -1 2 -3"
    static CnfFormula parse_compact(const std::string & text);

    bool satisfied_by(const std::vector<bool> & assignment) const;
    // nullopt when the brute-force cap (20 variables) is exceeded
    std::optional<bool> satisfiable() const;
};

// index pair p = (i,j) of [2n+3; m] plus specials (0,1),(0,0),(1,0)
using IndexPair = std::pair<std::size_t, std::size_t>;

struct ReductionLayout {
    std::size_t n = 0, m = 0;
    std::vector<IndexPair> p_order; // [2n+3; m] in lexicographic order

    std::vector<std::string> s_family, a_family, ap_family, y_family, yp_family;
    std::vector<std::string> m1, m2, m1p, m2p;
    std::vector<std::string> gadget, gadget_prime;

    static std::string s_name(const IndexPair & q, std::size_t k, std::size_t tau);
    static std::string a_name(const IndexPair & p);
    static std::string ap_name(const IndexPair & p);
    static std::string y_name(std::size_t i);
    static std::string yp_name(std::size_t i);

    static std::string path_edge(const IndexPair & p);      // e_p
    static std::string y_edge(std::size_t i);                // e_{y_i}
    static std::string clause_edge(const IndexPair & p, std::size_t k, std::size_t tau);

    std::string sidecar_text(const std::string & expected_width) const;
};

// the 16-edge gadget over {a1..d2} cup M1 cup M2; the reserved gadget
// names must not occur in M1/M2
Hypergraph gadget_h0(const std::vector<std::string> & m1, const std::vector<std::string> & m2,
        const std::string & name_prefix = "");

std::pair<Hypergraph, ReductionLayout> reduce_3sat(const CnfFormula & phi);

// the path-shaped width-2 witness for a satisfying assignment; rejects
// non-models naming a falsified clause
DecompositionTree witness_ghd(const Hypergraph & h, const ReductionLayout & layout,
        const CnfFormula & phi, const std::vector<bool> & sigma);

// integer case (q = 0): a clique of 2l fresh vertices, each joined to
// every old vertex; rational case (l > q >= 1): a clique of l fresh
// vertices plus cyclic q-ary edges. Shifts widths by l resp. l/q.
Hypergraph pad_width(const Hypergraph & h, std::size_t l, std::size_t q);

} // namespace hgd
