#include "hgd/covers.hpp"
#include "hgd/simplex.hpp"

#include <algorithm>

namespace hgd {

namespace {

// LP columns: edges that intersect the target (others are useless)
struct CoverLp {
    std::vector<std::size_t> cols; // edge indices
    LpResult result;
};

CoverLp solve_cover_lp(const Hypergraph & h, const VertexSet & target,
        const std::vector<std::size_t> * forbidden_edges)
{
    CoverLp lp;
    std::vector<char> banned(h.edge_count(), false);
    if (forbidden_edges != nullptr)
        for (auto e : *forbidden_edges)
            banned[e] = true;

    std::vector<std::size_t> col_of(h.edge_count(), VertexSet::npos);
    for (std::size_t e = 0; e < h.edge_count(); ++e) {
        if (banned[e] || ! h.edge(e).vertices.intersects(target))
            continue;
        // drop duplicate vertex sets, one column per distinct edge
        if (h.dedup_representative(e) != e && ! banned[h.dedup_representative(e)])
            continue;
        col_of[e] = lp.cols.size();
        lp.cols.push_back(e);
    }

    std::vector<LpRow> rows;
    bool uncoverable = false;
    target.for_each([&](std::size_t v) {
        LpRow row;
        row.rhs = Rational(1);
        for (std::size_t e : h.incident_edges(v))
            if (col_of[e] != VertexSet::npos)
                row.coeffs.emplace_back(col_of[e], Rational(1));
        if (row.coeffs.empty())
            uncoverable = true;
        rows.push_back(std::move(row));
    });
    if (uncoverable) {
        lp.result.status = LpResult::Status::Infeasible;
        return lp;
    }

    std::vector<Rational> costs(lp.cols.size(), Rational(1));
    lp.result = solve_min_lp(lp.cols.size(), costs, rows);
    return lp;
}

EdgeWeighting weighting_from_lp(const CoverLp & lp)
{
    std::vector<std::pair<std::size_t, Rational>> entries;
    for (std::size_t j = 0; j < lp.cols.size(); ++j) {
        Rational w = lp.result.solution[j];
        if (w.is_zero())
            continue;
        if (w > Rational(1))
            w = Rational(1); // safe: the remaining sum at any covered vertex stays >= 1
        entries.emplace_back(lp.cols[j], w);
    }
    return EdgeWeighting::fractional(std::move(entries));
}

} // namespace

std::pair<EdgeWeighting, Rational> optimal_fractional_cover(const Hypergraph & h,
        const VertexSet & target)
{
    target.for_each([&](std::size_t v) {
        if (h.incident_edges(v).empty())
            throw Error("vertex " + h.vertex_name(v) + " lies in no edge");
    });
    if (target.empty())
        return {EdgeWeighting::fractional({}), Rational(0)};

    CoverLp lp = solve_cover_lp(h, target, nullptr);
    if (lp.result.status != LpResult::Status::Optimal)
        throw Error("cover LP infeasible"); // cannot happen after the precheck
    return {weighting_from_lp(lp), lp.result.value};
}

std::optional<EdgeWeighting> exists_fractional_cover(const Hypergraph & h,
        const VertexSet & target, const Rational & bound,
        const std::vector<std::size_t> * forbidden_edges)
{
    if (bound < Rational(0))
        return std::nullopt;
    if (target.empty())
        return EdgeWeighting::fractional({});

    CoverLp lp = solve_cover_lp(h, target, forbidden_edges);
    if (lp.result.status != LpResult::Status::Optimal || lp.result.value > bound)
        return std::nullopt;
    return weighting_from_lp(lp);
}

namespace {

struct BranchState {
    const Hypergraph & h;
    std::vector<std::size_t> candidates; // ordered by coverage cardinality desc
    std::vector<std::size_t> chosen;
    std::vector<std::size_t> best;
    std::size_t best_size;

    void search(const VertexSet & remaining)
    {
        if (remaining.empty()) {
            if (chosen.size() < best_size) {
                best_size = chosen.size();
                best = chosen;
            }
            return;
        }
        if (chosen.size() + 1 >= best_size)
            return;
        // LP relaxation lower bound on the rest
        auto [unused, opt] = optimal_fractional_cover(h, remaining);
        BigInt lb = opt.numerator() / opt.denominator();
        if (Rational(lb) < opt)
            lb += 1;
        if (BigInt(chosen.size()) + lb >= BigInt(best_size))
            return;

        // branch on the first remaining vertex: some candidate must cover it
        std::size_t v = remaining.first();
        for (std::size_t e : candidates) {
            if (! h.edge(e).vertices.test(v))
                continue;
            chosen.push_back(e);
            VertexSet rest = remaining;
            rest -= h.edge(e).vertices;
            search(rest);
            chosen.pop_back();
        }
    }
};

} // namespace

std::pair<EdgeWeighting, std::size_t> optimal_integral_cover(const Hypergraph & h,
        const VertexSet & target)
{
    target.for_each([&](std::size_t v) {
        if (h.incident_edges(v).empty())
            throw Error("vertex " + h.vertex_name(v) + " lies in no edge");
    });
    if (target.empty())
        return {EdgeWeighting::integral({}), 0};

    BranchState st{h, {}, {}, {}, 0};
    for (std::size_t e : h.distinct_edges())
        if (h.edge(e).vertices.intersects(target))
            st.candidates.push_back(e);
    std::stable_sort(st.candidates.begin(), st.candidates.end(),
            [&](std::size_t a, std::size_t b) {
                return (h.edge(a).vertices & target).count() > (h.edge(b).vertices & target).count();
            });

    // greedy incumbent
    {
        VertexSet remaining = target;
        while (! remaining.empty()) {
            std::size_t pick = VertexSet::npos;
            std::size_t gain = 0;
            for (std::size_t e : st.candidates) {
                std::size_t g = (h.edge(e).vertices & remaining).count();
                if (g > gain) {
                    gain = g;
                    pick = e;
                }
            }
            st.best.push_back(pick);
            remaining -= h.edge(pick).vertices;
        }
        st.best_size = st.best.size();
    }

    st.search(target);
    return {EdgeWeighting::integral(st.best), st.best.size()};
}

EdgeWeighting degree_round(const Hypergraph & h, const EdgeWeighting & gamma)
{
    VertexSet uncovered = coverage(h, gamma);
    std::vector<std::size_t> omega;
    while (! uncovered.empty()) {
        std::size_t v = uncovered.first();
        // maximal-weight incident edge; ties to the lowest edge index
        std::size_t pick = VertexSet::npos;
        Rational pick_weight(-1);
        for (std::size_t e : h.incident_edges(v)) {
            Rational w = gamma.weight_of(e);
            if (w > pick_weight) {
                pick_weight = w;
                pick = e;
            }
        }
        omega.push_back(pick);
        uncovered -= h.edge(pick).vertices;
    }
    return EdgeWeighting::integral(std::move(omega));
}

} // namespace hgd
