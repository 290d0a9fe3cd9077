#include "hgd/weighting.hpp"

#include <algorithm>

namespace hgd {

EdgeWeighting EdgeWeighting::integral(std::vector<std::size_t> support)
{
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());
    EdgeWeighting w;
    w.kind_ = WeightKind::Integral;
    for (auto e : support)
        w.entries_.emplace_back(e, Rational(1));
    return w;
}

EdgeWeighting EdgeWeighting::fractional(std::vector<std::pair<std::size_t, Rational>> entries)
{
    std::sort(entries.begin(), entries.end(),
            [](const auto & a, const auto & b) { return a.first < b.first; });
    EdgeWeighting w;
    w.kind_ = WeightKind::Fractional;
    for (auto & [e, weight] : entries) {
        if (weight < Rational(0) || weight > Rational(1))
            throw Error("edge weight outside [0,1]");
        if (weight.is_zero())
            continue;
        if (! w.entries_.empty() && w.entries_.back().first == e)
            throw Error("duplicate weight entry for edge index " + std::to_string(e));
        w.entries_.emplace_back(e, weight);
    }
    return w;
}

bool EdgeWeighting::is_integral_values() const
{
    for (const auto & [e, w] : entries_)
        if (w != Rational(1))
            return false;
    return true;
}

Rational EdgeWeighting::weight_of(std::size_t edge) const
{
    for (const auto & [e, w] : entries_)
        if (e == edge)
            return w;
    return Rational(0);
}

Rational EdgeWeighting::total_weight() const
{
    Rational sum;
    for (const auto & [e, w] : entries_)
        sum += w;
    return sum;
}

std::vector<std::size_t> EdgeWeighting::support() const
{
    std::vector<std::size_t> out;
    for (const auto & [e, w] : entries_)
        out.push_back(e);
    return out;
}

std::vector<std::size_t> EdgeWeighting::integral_part() const
{
    std::vector<std::size_t> out;
    for (const auto & [e, w] : entries_)
        if (w == Rational(1))
            out.push_back(e);
    return out;
}

VertexSet coverage(const Hypergraph & h, const EdgeWeighting & theta)
{
    std::vector<Rational> sums(h.vertex_count());
    for (const auto & [e, w] : theta.entries()) {
        if (e >= h.edge_count())
            throw Error("weighting references unknown edge index " + std::to_string(e));
        h.edge(e).vertices.for_each([&](std::size_t v) { sums[v] += w; });
    }
    VertexSet covered(h.vertex_count());
    for (std::size_t v = 0; v < h.vertex_count(); ++v)
        if (sums[v] >= Rational(1))
            covered.add(v);
    return covered;
}

} // namespace hgd
