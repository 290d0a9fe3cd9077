#include "hgd/hardness.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace hgd {

namespace {

std::string pair_tag(const IndexPair & p)
{
    return std::to_string(p.first) + "-" + std::to_string(p.second);
}

} // namespace

CnfFormula CnfFormula::parse_dimacs(const std::string & text)
{
    CnfFormula out;
    std::istringstream in(text);
    std::string line;
    std::vector<long long> pending;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c')
            continue;
        std::istringstream ls(line);
        if (line[0] == 'p') {
            std::string p, cnf;
            std::size_t n = 0, m = 0;
            if (! (ls >> p >> cnf >> n >> m) || cnf != "cnf")
                throw Error("malformed DIMACS header");
            out.variables = n;
            header_seen = true;
            continue;
        }
        long long lit;
        while (ls >> lit) {
            if (lit == 0) {
                if (pending.size() != 3)
                    throw Error("clause with " + std::to_string(pending.size()) +
                            " literals; exactly 3 required");
                std::array<Literal, 3> clause;
                for (std::size_t i = 0; i < 3; ++i) {
                    auto v = static_cast<std::size_t>(std::labs(pending[i]));
                    if (v == 0 || (header_seen && v > out.variables))
                        throw Error("literal out of range");
                    clause[i] = Literal{v, pending[i] > 0};
                    out.variables = std::max(out.variables, v);
                }
                out.clauses.push_back(clause);
                pending.clear();
            }
            else {
                pending.push_back(lit);
            }
        }
    }
    if (! pending.empty())
        throw Error("unterminated clause");
    if (out.clauses.empty())
        throw Error("formula has no clauses");
    return out;
}

CnfFormula CnfFormula::parse_compact(const std::string & text)
{
    CnfFormula out;
    std::istringstream in(text);
    std::string chunk;
    while (std::getline(in, chunk, ';')) {
        std::istringstream ls(chunk);
        std::vector<long long> lits;
        long long lit;
        while (ls >> lit)
            lits.push_back(lit);
        if (lits.empty())
            continue;
        if (lits.size() != 3)
            throw Error("clause with " + std::to_string(lits.size()) +
                    " literals; exactly 3 required");
        std::array<Literal, 3> clause;
        for (std::size_t i = 0; i < 3; ++i) {
            auto v = static_cast<std::size_t>(std::labs(lits[i]));
            if (v == 0)
                throw Error("literal 0 not allowed");
            clause[i] = Literal{v, lits[i] > 0};
            out.variables = std::max(out.variables, v);
        }
        out.clauses.push_back(clause);
    }
    if (out.clauses.empty())
        throw Error("formula has no clauses");
    return out;
}

bool CnfFormula::satisfied_by(const std::vector<bool> & assignment) const
{
    if (assignment.size() < variables)
        throw Error("assignment too short");
    for (const auto & clause : clauses) {
        bool sat = false;
        for (const auto & lit : clause)
            if (assignment[lit.variable - 1] == lit.positive)
                sat = true;
        if (! sat)
            return false;
    }
    return true;
}

std::optional<bool> CnfFormula::satisfiable() const
{
    if (variables > 20)
        return std::nullopt;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << variables); ++mask) {
        std::vector<bool> assignment(variables);
        for (std::size_t i = 0; i < variables; ++i)
            assignment[i] = (mask >> i) & 1;
        if (satisfied_by(assignment))
            return true;
    }
    return false;
}

std::string ReductionLayout::s_name(const IndexPair & q, std::size_t k, std::size_t tau)
{
    return "S:" + pair_tag(q) + ":" + std::to_string(k) + "-" + std::to_string(tau);
}

std::string ReductionLayout::a_name(const IndexPair & p) { return "A:" + pair_tag(p); }
std::string ReductionLayout::ap_name(const IndexPair & p) { return "Ap:" + pair_tag(p); }
std::string ReductionLayout::y_name(std::size_t i) { return "y:" + std::to_string(i); }
std::string ReductionLayout::yp_name(std::size_t i) { return "yp:" + std::to_string(i); }

std::string ReductionLayout::path_edge(const IndexPair & p) { return "e:" + pair_tag(p); }
std::string ReductionLayout::y_edge(std::size_t i) { return "ey:" + std::to_string(i); }

std::string ReductionLayout::clause_edge(const IndexPair & p, std::size_t k, std::size_t tau)
{
    return "ec:" + pair_tag(p) + ":" + std::to_string(k) + "-" + std::to_string(tau);
}

std::string ReductionLayout::sidecar_text(const std::string & expected_width) const
{
    std::ostringstream out;
    auto emit = [&](const std::string & key, const std::vector<std::string> & names) {
        out << key << ":";
        for (const auto & name : names)
            out << " " << name;
        out << "\n";
    };
    out << "n: " << n << "\n";
    out << "m: " << m << "\n";
    out << "expected_width: " << expected_width << "\n";
    emit("S", s_family);
    emit("A", a_family);
    emit("Ap", ap_family);
    emit("Y", y_family);
    emit("Yp", yp_family);
    emit("M1", m1);
    emit("M2", m2);
    emit("M1p", m1p);
    emit("M2p", m2p);
    emit("gadget", gadget);
    emit("gadget_prime", gadget_prime);
    return out.str();
}

namespace {

const std::vector<std::string> gadget_names = {"a1", "a2", "b1", "b2", "c1", "c2", "d1", "d2"};

using EdgeSpec = std::vector<std::pair<std::string, std::vector<std::string>>>;

std::vector<std::string> cat(std::vector<std::string> base, const std::vector<std::string> & more)
{
    base.insert(base.end(), more.begin(), more.end());
    return base;
}

// the sixteen edges E_A cup E_B cup E_C over {a1..d2} cup M1 cup M2
EdgeSpec gadget_edges(const std::vector<std::string> & m1, const std::vector<std::string> & m2,
        const std::string & vp, const std::string & ep)
{
    auto v = [&](const char * name) { return vp + name; };
    EdgeSpec spec;
    spec.push_back({ep + "gA1", cat({v("a1"), v("b1")}, m1)});
    spec.push_back({ep + "gA2", cat({v("a2"), v("b2")}, m2)});
    spec.push_back({ep + "gA3", {v("a1"), v("b2")}});
    spec.push_back({ep + "gA4", {v("a2"), v("b1")}});
    spec.push_back({ep + "gA5", {v("a1"), v("a2")}});
    spec.push_back({ep + "gB1", cat({v("b1"), v("c1")}, m1)});
    spec.push_back({ep + "gB2", cat({v("b2"), v("c2")}, m2)});
    spec.push_back({ep + "gB3", {v("b1"), v("c2")}});
    spec.push_back({ep + "gB4", {v("b2"), v("c1")}});
    spec.push_back({ep + "gB5", {v("b1"), v("b2")}});
    spec.push_back({ep + "gB6", {v("c1"), v("c2")}});
    spec.push_back({ep + "gC1", cat({v("c1"), v("d1")}, m1)});
    spec.push_back({ep + "gC2", cat({v("c2"), v("d2")}, m2)});
    spec.push_back({ep + "gC3", {v("c1"), v("d2")}});
    spec.push_back({ep + "gC4", {v("c2"), v("d1")}});
    spec.push_back({ep + "gC5", {v("d1"), v("d2")}});
    return spec;
}

} // namespace

Hypergraph gadget_h0(const std::vector<std::string> & m1, const std::vector<std::string> & m2,
        const std::string & name_prefix)
{
    std::set<std::string> m_all(m1.begin(), m1.end());
    m_all.insert(m2.begin(), m2.end());
    for (const auto & g : gadget_names)
        if (m_all.contains(name_prefix + g))
            throw Error("M1/M2 overlap reserved gadget vertex " + name_prefix + g);
    for (const auto & x : m1)
        if (std::find(m2.begin(), m2.end(), x) != m2.end())
            throw Error("M1 and M2 must be disjoint: " + x);
    return Hypergraph::build(gadget_edges(m1, m2, name_prefix, name_prefix));
}

std::pair<Hypergraph, ReductionLayout> reduce_3sat(const CnfFormula & phi)
{
    ReductionLayout lay;
    lay.n = phi.variables;
    lay.m = phi.clauses.size();
    const std::size_t rows = 2 * lay.n + 3;

    for (std::size_t i = 1; i <= rows; ++i)
        for (std::size_t j = 1; j <= lay.m; ++j)
            lay.p_order.push_back({i, j});

    std::vector<IndexPair> q_all = lay.p_order;
    q_all.push_back({0, 1});
    q_all.push_back({0, 0});
    q_all.push_back({1, 0});

    auto s_slice = [&](const IndexPair & q) {
        std::vector<std::string> out;
        for (std::size_t k = 1; k <= 3; ++k)
            for (std::size_t tau = 0; tau <= 1; ++tau)
                out.push_back(ReductionLayout::s_name(q, k, tau));
        return out;
    };

    for (const auto & q : q_all)
        for (const auto & name : s_slice(q))
            lay.s_family.push_back(name);
    for (const auto & p : lay.p_order) {
        lay.a_family.push_back(ReductionLayout::a_name(p));
        lay.ap_family.push_back(ReductionLayout::ap_name(p));
    }
    for (std::size_t i = 1; i <= lay.n; ++i) {
        lay.y_family.push_back(ReductionLayout::y_name(i));
        lay.yp_family.push_back(ReductionLayout::yp_name(i));
    }

    auto s_minus_slice = [&](const IndexPair & q) {
        std::vector<std::string> skip = s_slice(q);
        std::vector<std::string> out;
        for (const auto & name : lay.s_family)
            if (std::find(skip.begin(), skip.end(), name) == skip.end())
                out.push_back(name);
        return out;
    };

    lay.m1 = cat(s_minus_slice({0, 1}), {"z1"});
    lay.m2 = cat(cat(lay.y_family, s_slice({0, 1})), {"z2"});
    lay.m1p = cat(s_minus_slice({1, 0}), {"z1"});
    lay.m2p = cat(cat(lay.yp_family, s_slice({1, 0})), {"z2"});
    lay.gadget = gadget_names;
    for (const auto & g : gadget_names)
        lay.gadget_prime.push_back(std::string(1, g[0]) + "p" + std::string(1, g[1]));

    EdgeSpec spec = gadget_edges(lay.m1, lay.m2, "", "");
    {
        // primed copy: gadget vertices ap1..dp2, edge ids gpA1..gpC5
        EdgeSpec primed = gadget_edges(lay.m1p, lay.m2p, "", "");
        for (auto & [id, verts] : primed) {
            id = "gp" + id.substr(1);
            for (auto & name : verts)
                for (const auto & g : gadget_names)
                    if (name == g)
                        name = std::string(1, g[0]) + "p" + std::string(1, g[1]);
            spec.push_back({id, verts});
        }
    }

    auto a_prefix = [&](const IndexPair & p, bool primed) {
        std::vector<std::string> out;
        for (const auto & q : lay.p_order) {
            out.push_back(primed ? ReductionLayout::ap_name(q) : ReductionLayout::a_name(q));
            if (q == p)
                break;
        }
        return out;
    };
    auto a_suffix = [&](const IndexPair & p) {
        std::vector<std::string> out;
        bool on = false;
        for (const auto & q : lay.p_order) {
            if (q == p)
                on = true;
            if (on)
                out.push_back(ReductionLayout::a_name(q));
        }
        return out;
    };

    // e_p = A'_p cup Abar_p, for p before max
    for (std::size_t idx = 0; idx + 1 < lay.p_order.size(); ++idx) {
        const auto & p = lay.p_order[idx];
        spec.push_back({ReductionLayout::path_edge(p), cat(a_prefix(p, true), a_suffix(p))});
    }

    for (std::size_t i = 1; i <= lay.n; ++i)
        spec.push_back({ReductionLayout::y_edge(i),
                {ReductionLayout::y_name(i), ReductionLayout::yp_name(i)}});

    // clause edges e^{k,0}_p and e^{k,1}_p
    auto y_without = [&](std::size_t l) {
        std::vector<std::string> out;
        for (std::size_t i = 1; i <= lay.n; ++i)
            if (i != l)
                out.push_back(ReductionLayout::y_name(i));
        return out;
    };
    auto yp_without = [&](std::size_t l) {
        std::vector<std::string> out;
        for (std::size_t i = 1; i <= lay.n; ++i)
            if (i != l)
                out.push_back(ReductionLayout::yp_name(i));
        return out;
    };

    for (std::size_t idx = 0; idx + 1 < lay.p_order.size(); ++idx) {
        const auto & p = lay.p_order[idx];
        const auto & clause = phi.clauses[p.second - 1];
        for (std::size_t k = 1; k <= 3; ++k) {
            const Literal & lit = clause[k - 1];
            std::vector<std::string> without_slice;
            std::string dropped = ReductionLayout::s_name(p, k, 1);
            for (const auto & name : lay.s_family)
                if (name != dropped)
                    without_slice.push_back(name);

            std::vector<std::string> e0 = a_suffix(p);
            e0 = cat(std::move(e0), without_slice);
            e0 = cat(std::move(e0), lit.positive ? lay.y_family : y_without(lit.variable));
            e0.push_back("z1");
            spec.push_back({ReductionLayout::clause_edge(p, k, 0), std::move(e0)});

            std::vector<std::string> e1 = a_prefix(p, true);
            e1.push_back(dropped);
            e1 = cat(std::move(e1), lit.positive ? yp_without(lit.variable) : lay.yp_family);
            e1.push_back("z2");
            spec.push_back({ReductionLayout::clause_edge(p, k, 1), std::move(e1)});
        }
    }

    // the four connecting specials
    {
        std::vector<std::string> e0min = {"a1"};
        e0min = cat(std::move(e0min), lay.a_family);
        e0min = cat(std::move(e0min), s_minus_slice({0, 0}));
        e0min = cat(std::move(e0min), lay.y_family);
        e0min.push_back("z1");
        spec.push_back({"e0:0-0", std::move(e0min)});

        std::vector<std::string> e1min = s_slice({0, 0});
        e1min = cat(std::move(e1min), lay.yp_family);
        e1min.push_back("z2");
        spec.push_back({"e1:0-0", std::move(e1min)});

        const IndexPair pmax = lay.p_order.back();
        std::vector<std::string> e0max = s_minus_slice(pmax);
        e0max = cat(std::move(e0max), lay.y_family);
        e0max.push_back("z1");
        spec.push_back({"e0:max", std::move(e0max)});

        std::vector<std::string> e1max = {"ap1"};
        e1max = cat(std::move(e1max), lay.ap_family);
        e1max = cat(std::move(e1max), s_slice(pmax));
        e1max = cat(std::move(e1max), lay.yp_family);
        e1max.push_back("z2");
        spec.push_back({"e1:max", std::move(e1max)});
    }

    return {Hypergraph::build(spec), lay};
}

DecompositionTree witness_ghd(const Hypergraph & h, const ReductionLayout & layout,
        const CnfFormula & phi, const std::vector<bool> & sigma)
{
    if (sigma.size() < phi.variables)
        throw Error("assignment too short");
    for (std::size_t j = 0; j < phi.clauses.size(); ++j) {
        bool sat = false;
        for (const auto & lit : phi.clauses[j])
            if (sigma[lit.variable - 1] == lit.positive)
                sat = true;
        if (! sat)
            throw Error("assignment falsifies clause " + std::to_string(j + 1));
    }

    // k_j: first satisfied literal index of clause j
    std::vector<std::size_t> k_of_clause(phi.clauses.size());
    for (std::size_t j = 0; j < phi.clauses.size(); ++j)
        for (std::size_t k = 1; k <= 3; ++k) {
            const auto & lit = phi.clauses[j][k - 1];
            if (sigma[lit.variable - 1] == lit.positive) {
                k_of_clause[j] = k;
                break;
            }
        }

    auto vset = [&](const std::vector<std::string> & names) {
        VertexSet s(h.vertex_count());
        for (const auto & name : names) {
            auto v = h.vertex_index(name);
            if (! v.has_value())
                throw Error("layout references unknown vertex " + name);
            s.add(*v);
        }
        return s;
    };
    auto eidx = [&](const std::string & id) {
        auto e = h.edge_index(id);
        if (! e.has_value())
            throw Error("layout references unknown edge " + id);
        return *e;
    };

    VertexSet s_all = vset(layout.s_family);
    VertexSet y_all = vset(layout.y_family);
    VertexSet yp_all = vset(layout.yp_family);
    VertexSet zs = vset({"z1", "z2"});

    VertexSet z(h.vertex_count());
    for (std::size_t i = 1; i <= layout.n; ++i)
        z.add(*h.vertex_index(sigma[i - 1] ? ReductionLayout::y_name(i)
                                           : ReductionLayout::yp_name(i)));

    DecompositionTree tree;
    tree.kind = DecompKind::GHD;
    auto chain = [&](std::size_t parent, const VertexSet & bag,
            const std::vector<std::size_t> & lam) {
        return tree.add_node(parent, bag, EdgeWeighting::integral(lam));
    };

    std::size_t u = chain(VertexSet::npos,
            vset({"d1", "d2", "c1", "c2"}) | y_all | s_all | zs, {eidx("gC1"), eidx("gC2")});
    u = chain(u, vset({"c1", "c2", "b1", "b2"}) | y_all | s_all | zs,
            {eidx("gB1"), eidx("gB2")});
    u = chain(u, vset({"b1", "b2", "a1", "a2"}) | y_all | s_all | zs,
            {eidx("gA1"), eidx("gA2")});
    u = chain(u, vset({"a1"}) | vset(layout.a_family) | y_all | s_all | z | zs,
            {eidx("e0:0-0"), eidx("e1:0-0")});

    for (std::size_t idx = 0; idx + 1 < layout.p_order.size(); ++idx) {
        const auto & p = layout.p_order[idx];
        std::vector<std::string> a_part;
        for (std::size_t i = 0; i < layout.p_order.size(); ++i) {
            if (i <= idx)
                a_part.push_back(layout.ap_family[i]);
            if (i >= idx)
                a_part.push_back(layout.a_family[i]);
        }
        std::size_t k = k_of_clause[p.second - 1];
        u = chain(u, vset(a_part) | s_all | z | zs,
                {eidx(ReductionLayout::clause_edge(p, k, 0)),
                 eidx(ReductionLayout::clause_edge(p, k, 1))});
    }

    u = chain(u, vset({"ap1"}) | vset(layout.ap_family) | yp_all | s_all | z | zs,
            {eidx("e0:max"), eidx("e1:max")});
    u = chain(u, vset({"ap1", "ap2", "bp1", "bp2"}) | yp_all | s_all | zs,
            {eidx("gpA1"), eidx("gpA2")});
    u = chain(u, vset({"bp1", "bp2", "cp1", "cp2"}) | yp_all | s_all | zs,
            {eidx("gpB1"), eidx("gpB2")});
    chain(u, vset({"cp1", "cp2", "dp1", "dp2"}) | yp_all | s_all | zs,
            {eidx("gpC1"), eidx("gpC2")});
    return tree;
}

Hypergraph pad_width(const Hypergraph & h, std::size_t l, std::size_t q)
{
    if (l == 0)
        throw Error("pad_width requires l >= 1");
    if (q != 0 && l <= q)
        throw Error("rational padding requires l > q");

    std::size_t fresh_count = q == 0 ? 2 * l : l;
    std::vector<std::string> fresh;
    for (std::size_t i = 1; i <= fresh_count; ++i) {
        std::string name = "pad" + std::to_string(i);
        if (h.vertex_index(name).has_value())
            throw Error("input already uses reserved vertex name " + name);
        fresh.push_back(name);
    }

    std::vector<std::pair<std::string, std::vector<std::string>>> spec;
    for (const auto & e : h.edges()) {
        std::vector<std::string> names;
        e.vertices.for_each([&](std::size_t v) { names.push_back(h.vertex_name(v)); });
        spec.emplace_back(e.id, std::move(names));
    }

    for (std::size_t i = 0; i < fresh_count; ++i)
        for (std::size_t j = i + 1; j < fresh_count; ++j)
            spec.push_back({"padc:" + std::to_string(i + 1) + "-" + std::to_string(j + 1),
                    {fresh[i], fresh[j]}});

    if (q >= 1) {
        // cyclic q-ary edges {v_i, ..., v_{i + q - 1 mod l}}
        for (std::size_t i = 0; i < l; ++i) {
            std::vector<std::string> verts;
            for (std::size_t o = 0; o < q; ++o)
                verts.push_back(fresh[(i + o) % l]);
            spec.push_back({"padq:" + std::to_string(i + 1), std::move(verts)});
        }
    }

    for (std::size_t i = 0; i < fresh_count; ++i)
        for (std::size_t v = 0; v < h.vertex_count(); ++v)
            spec.push_back({"padx:" + std::to_string(i + 1) + ":" + h.vertex_name(v),
                    {fresh[i], h.vertex_name(v)}});

    return Hypergraph::build(spec);
}

} // namespace hgd
