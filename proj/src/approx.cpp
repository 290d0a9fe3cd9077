#include "hgd/approx.hpp"
#include "hgd/covers.hpp"
#include "hgd/properties.hpp"
#include "hgd/simplex.hpp"

#include <cmath>
#include <sstream>

namespace hgd {

namespace {

DecompositionTree convert_covers(const Hypergraph & h, const DecompositionTree & fhd,
        bool bagwise)
{
    if (! validate(h, fhd, width(fhd)).empty())
        throw Error("conversion input does not validate");
    DecompositionTree out = fhd;
    out.kind = DecompKind::GHD;
    for (auto & n : out.nodes) {
        if (bagwise)
            n.cover = optimal_integral_cover(h, n.bag).first;
        else
            n.cover = degree_round(h, n.cover);
    }
    return out;
}

} // namespace

DecompositionTree fhd_to_ghd_bagwise(const Hypergraph & h, const DecompositionTree & fhd)
{
    return convert_covers(h, fhd, true);
}

DecompositionTree fhd_to_ghd_degree(const Hypergraph & h, const DecompositionTree & fhd)
{
    return convert_covers(h, fhd, false);
}

std::size_t transversality(const Hypergraph & h)
{
    // ascending-size enumeration over vertex subsets; exact at desk scale
    const std::size_t n = h.vertex_count();
    if (n > 24)
        throw Error("transversality: too many vertices for exact enumeration");
    for (std::size_t size = 0; size <= n; ++size) {
        std::vector<std::size_t> pick;
        bool found = false;
        auto rec = [&](auto && self, std::size_t from) -> void {
            if (found)
                return;
            if (pick.size() == size) {
                VertexSet s(n);
                for (auto v : pick)
                    s.add(v);
                for (std::size_t e = 0; e < h.edge_count(); ++e)
                    if (! h.edge(e).vertices.intersects(s))
                        return;
                found = true;
                return;
            }
            for (std::size_t v = from; v < n && ! found; ++v) {
                pick.push_back(v);
                self(self, v + 1);
                pick.pop_back();
            }
        };
        rec(rec, 0);
        if (found)
            return size;
    }
    return n;
}

Rational fractional_transversality(const Hypergraph & h)
{
    // min sum w_v subject to sum_{v in e} w_v >= 1 per edge
    std::vector<LpRow> rows;
    for (std::size_t e = 0; e < h.edge_count(); ++e) {
        LpRow row;
        row.rhs = Rational(1);
        h.edge(e).vertices.for_each([&](std::size_t v) {
            row.coeffs.emplace_back(v, Rational(1));
        });
        rows.push_back(std::move(row));
    }
    std::vector<Rational> costs(h.vertex_count(), Rational(1));
    auto res = solve_min_lp(h.vertex_count(), costs, rows);
    if (res.status != LpResult::Status::Optimal)
        throw Error("transversal LP infeasible");
    return res.value;
}

std::string BoundReport::text() const
{
    std::ostringstream out;
    out << "vc: " << (vc.has_value() ? std::to_string(*vc) : std::string("unavailable")) << "\n";
    out << "rho_star: " << rho_star.str_canonical() << "\n";
    out << "cigap_bound: ";
    if (cigap_bound.has_value())
        out << *cigap_bound;
    else
        out << "unavailable";
    out << "\n";
    out << "degree: " << degree << "\n";
    out << "degree_bound: " << degree_bound.str_canonical() << "\n";
    return out.str();
}

std::string BoundReport::csv_row() const
{
    std::ostringstream out;
    out << (vc.has_value() ? std::to_string(*vc) : std::string("unavailable")) << ","
        << rho_star.str_canonical() << ",";
    if (cigap_bound.has_value())
        out << *cigap_bound;
    else
        out << "unavailable";
    out << "," << degree << "," << degree_bound.str_canonical();
    return out.str();
}

BoundReport bound_report(const Hypergraph & h, const Rational & k)
{
    BoundReport rep;
    rep.vc = vc_dimension(h);
    rep.rho_star = optimal_fractional_cover(h, h.all_vertices()).second;
    rep.degree = degree(h);
    rep.degree_bound = Rational(BigInt(rep.degree)) * k;
    if (rep.vc.has_value()) {
        double rs = static_cast<double>(rep.rho_star.numerator().convert_to<double>()) /
                rep.rho_star.denominator().convert_to<double>();
        rep.cigap_bound = std::pow(2.0, static_cast<double>(*rep.vc) + 2.0) *
                std::log(11.0 * rs) / rs;
    }
    return rep;
}

} // namespace hgd
