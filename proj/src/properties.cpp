#include "hgd/properties.hpp"
#include "hgd/io.hpp"
#include "hgd/oracle.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

namespace hgd {

std::size_t degree(const Hypergraph & h)
{
    std::size_t d = 0;
    for (std::size_t v = 0; v < h.vertex_count(); ++v)
        d = std::max(d, h.incident_edges(v).size());
    return d;
}

namespace {

std::vector<std::size_t> edge_view(const Hypergraph & h, bool count_duplicate_edges)
{
    if (count_duplicate_edges) {
        std::vector<std::size_t> all(h.edge_count());
        for (std::size_t e = 0; e < all.size(); ++e)
            all[e] = e;
        return all;
    }
    return h.distinct_edges();
}

} // namespace

std::size_t iwidth(const Hypergraph & h, bool count_duplicate_edges)
{
    auto view = edge_view(h, count_duplicate_edges);
    std::size_t best = 0;
    for (std::size_t i = 0; i < view.size(); ++i)
        for (std::size_t j = i + 1; j < view.size(); ++j)
            best = std::max(best,
                    (h.edge(view[i]).vertices & h.edge(view[j]).vertices).count());
    return best;
}

std::size_t c_miwidth(const Hypergraph & h, std::size_t c, bool count_duplicate_edges)
{
    if (c == 0)
        throw Error("c_miwidth requires c >= 1");
    auto view = edge_view(h, count_duplicate_edges);
    if (view.size() < c)
        return 0;
    std::size_t best = 0;
    // running-intersection enumeration; prune empty meets and branches that
    // cannot beat the incumbent
    auto rec = [&](auto && self, std::size_t from, std::size_t depth,
            const VertexSet & meet) -> void {
        if (depth == c) {
            best = std::max(best, meet.count());
            return;
        }
        for (std::size_t i = from; i + (c - depth) <= view.size(); ++i) {
            VertexSet next = depth == 0 ? h.edge(view[i]).vertices
                                        : (meet & h.edge(view[i]).vertices);
            if (next.count() <= best && depth + 1 < c)
                continue; // can only shrink further
            if (next.empty() && depth + 1 < c)
                continue;
            self(self, i + 1, depth + 1, next);
        }
    };
    VertexSet all(h.vertex_count());
    rec(rec, 0, 0, all);
    return best;
}

std::optional<std::size_t> vc_dimension(const Hypergraph & h, std::size_t cap)
{
    if (h.vertex_count() > cap)
        return std::nullopt;
    const std::size_t n = h.vertex_count();
    std::size_t best = 0;
    // shattering is downward closed, so sizes can be searched in ascending
    // order with an early exit on the first empty level
    for (std::size_t size = 1; size <= n; ++size) {
        // each trace comes from some edge, so 2^size distinct traces need
        // at least that many distinct edges
        if (size >= 64 || (std::uint64_t{1} << size) > h.distinct_edges().size())
            break;
        bool found = false;
        std::vector<std::size_t> pick;
        auto rec = [&](auto && self, std::size_t from) -> void {
            if (found)
                return;
            if (pick.size() == size) {
                VertexSet x(n);
                for (auto v : pick)
                    x.add(v);
                if (brute_shattered(h, x))
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
        if (! found)
            break;
        best = size;
    }
    return best;
}

std::size_t rank(const Hypergraph & h)
{
    std::size_t r = 0;
    for (const auto & e : h.edges())
        r = std::max(r, e.vertices.count());
    return r;
}

PropertyReport analyze(const Hypergraph & h, const std::vector<std::size_t> & multi_cs,
        std::size_t vc_cap)
{
    PropertyReport rep;
    rep.degree = degree(h);
    rep.iwidth = iwidth(h);
    for (auto c : multi_cs)
        rep.miwidth.emplace_back(c, c_miwidth(h, c));
    rep.vc_dim = vc_dimension(h, vc_cap);
    rep.rank = rank(h);
    rep.vertices = h.vertex_count();
    rep.edges = h.edge_count();
    return rep;
}

namespace {

constexpr std::size_t bucket_count = 7; // 0..5 and >5

std::size_t bucket_of(std::size_t value)
{
    return value <= 5 ? value : 6;
}

std::string bucket_label(std::size_t b)
{
    return b < 6 ? std::to_string(b) : ">5";
}

} // namespace

std::string CorpusReport::table_text(const std::vector<std::size_t> & multi_cs) const
{
    std::vector<std::string> props = {"degree", "iwidth"};
    for (auto c : multi_cs)
        props.push_back("miwidth_c" + std::to_string(c));
    props.push_back("vc_dim");
    props.push_back("rank");

    std::vector<std::vector<std::size_t>> hist(props.size(),
            std::vector<std::size_t>(bucket_count, 0));
    std::size_t vc_unavailable = 0;
    for (const auto & row : rows) {
        std::size_t p = 0;
        hist[p++][bucket_of(row.degree)]++;
        hist[p++][bucket_of(row.iwidth)]++;
        for (const auto & [c, value] : row.miwidth)
            hist[p++][bucket_of(value)]++;
        if (row.vc_dim.has_value())
            hist[p][bucket_of(*row.vc_dim)]++;
        else
            ++vc_unavailable;
        ++p;
        hist[p++][bucket_of(row.rank)]++;
    }

    std::ostringstream out;
    out << "i";
    for (const auto & p : props)
        out << "\t" << p;
    out << "\n";
    for (std::size_t b = 0; b < bucket_count; ++b) {
        out << bucket_label(b);
        for (std::size_t p = 0; p < props.size(); ++p)
            out << "\t" << hist[p][b];
        out << "\n";
    }
    out << "instances: " << rows.size() << "\n";
    if (vc_unavailable > 0)
        out << "vc_dim unavailable for " << vc_unavailable << " instance(s)\n";
    for (const auto & [path, message] : errors)
        out << "error: " << path << ": " << message << "\n";
    return out.str();
}

std::string CorpusReport::csv(const std::vector<std::size_t> & multi_cs) const
{
    std::ostringstream out;
    out << "instance,degree,iwidth";
    for (auto c : multi_cs)
        out << ",miwidth_c" << c;
    out << ",vc_dim,rank\n";
    for (const auto & row : rows) {
        out << row.instance << "," << row.degree << "," << row.iwidth;
        for (const auto & [c, value] : row.miwidth)
            out << "," << value;
        out << ",";
        if (row.vc_dim.has_value())
            out << *row.vc_dim;
        else
            out << "unavailable";
        out << "," << row.rank << "\n";
    }
    return out.str();
}

CorpusReport analyze_corpus(const std::vector<std::string> & paths,
        const std::vector<std::size_t> & multi_cs, std::size_t vc_cap, std::size_t jobs)
{
    CorpusReport report;
    std::vector<std::optional<PropertyReport>> results(paths.size());
    std::vector<std::optional<std::string>> failures(paths.size());

    auto work = [&](std::size_t begin, std::size_t step) {
        for (std::size_t i = begin; i < paths.size(); i += step) {
            try {
                Hypergraph h = read_hypergraph_file(paths[i]);
                auto rep = analyze(h, multi_cs, vc_cap);
                rep.instance = paths[i];
                results[i] = std::move(rep);
            }
            catch (const std::exception & ex) {
                failures[i] = ex.what();
            }
        }
    };

    if (jobs <= 1) {
        work(0, 1);
    }
    else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < jobs; ++t)
            pool.emplace_back(work, t, jobs);
        for (auto & t : pool)
            t.join();
    }

    // deterministic file-order reduction
    for (std::size_t i = 0; i < paths.size(); ++i) {
        if (results[i].has_value())
            report.rows.push_back(std::move(*results[i]));
        else
            report.errors.emplace_back(paths[i], *failures[i]);
    }
    return report;
}

} // namespace hgd
