#include "hgd/fhd_solver.hpp"
#include "hgd/covers.hpp"
#include "hgd/properties.hpp"

#include <algorithm>
#include <unordered_map>

namespace hgd {

Augmentation augment_fractional(const Hypergraph & h, const Rational & k, std::size_t c,
        std::size_t budget)
{
    if (k < Rational(1))
        throw Error("augment_fractional requires k >= 1");
    std::size_t cap = static_cast<std::size_t>(k.floor_nonneg()) * iwidth(h) + c;
    return augment(h, fractional_subedges(h, cap, budget));
}

namespace {

struct KeyHash {
    std::size_t operator()(const std::vector<std::size_t> & v) const
    {
        std::size_t h = v.size();
        for (auto x : v)
            h = h * 1099511628211ull + x;
        return h;
    }
};

struct Choice {
    std::vector<std::size_t> s_eff; // integral part after weight-1 promotion
    VertexSet w_eff;
    EdgeWeighting fractional; // strictly sub-unit weights
};

class FracSearch {
public:
    FracSearch(const Hypergraph & h, const Rational & k, std::size_t c,
            const FracOptions & opts) :
        h_(h),
        k_(k),
        kmax_(opts.empty_s_only ? 0 : static_cast<std::size_t>(k.floor_nonneg())),
        c_(c),
        opts_(opts)
    {
    }

    std::optional<DecompositionTree> run()
    {
        if (! solvable(h_.all_vertices(), h_.empty_set(), {}))
            return std::nullopt;
        DecompositionTree tree;
        tree.kind = DecompKind::FHD;
        build(h_.all_vertices(), h_.empty_set(), {}, VertexSet::npos, h_.empty_set(), tree);
        return tree;
    }

private:
    using Key = std::vector<std::size_t>;

    Key make_key(const VertexSet & c, const VertexSet & w, const std::vector<std::size_t> & r) const
    {
        Key key;
        key.push_back(c.count());
        c.for_each([&](std::size_t v) { key.push_back(v); });
        key.push_back(w.count());
        w.for_each([&](std::size_t v) { key.push_back(v); });
        for (auto e : r)
            key.push_back(h_.edge_count() + e);
        return key;
    }

    VertexSet edge_union(const std::vector<std::size_t> & edges) const
    {
        VertexSet s(h_.vertex_count());
        for (auto e : edges)
            s |= h_.edge(e).vertices;
        return s;
    }

    struct Frame {
        VertexSet region;     // component plus every vertex of its edges
        VertexSet connector;  // boundary vertices the next bag must absorb
        VertexSet w_pool;     // allowed fractional-part vertices
        std::vector<std::size_t> pool; // candidate integral-part edges
    };

    Frame make_frame(const VertexSet & c, const VertexSet & w_r,
            const std::vector<std::size_t> & r) const
    {
        Frame f;
        f.region = c;
        for (auto e : edges_incident(h_, c))
            f.region |= h_.edge(e).vertices;
        f.connector = (edge_union(r) | w_r) & f.region;
        f.w_pool = f.connector | c;
        for (std::size_t e : h_.distinct_edges())
            if (h_.edge(e).vertices.intersects(f.region))
                f.pool.push_back(e);
        return f;
    }

    // evaluate one (S, W_s) guess; fills `out` on success
    bool try_guess(const VertexSet & c, const Frame & f, const VertexSet & boundary,
            const std::vector<std::size_t> & s, const VertexSet & vs, const VertexSet & w,
            std::optional<Choice> & out)
    {
        // 2.c: every component edge keeps its boundary inside the new bag
        VertexSet need = f.connector;
        need -= vs;
        if (! w.contains(need))
            return false;
        // 2.d: the bag must meet the component
        if (! vs.intersects(c) && ! w.intersects(c))
            return false;

        // 2.b: fractional budget for the W part
        VertexSet w_target = w;
        w_target -= vs;
        Rational budget = k_ - Rational(BigInt(s.size()));
        auto gamma = exists_fractional_cover(h_, w_target, budget, &s);
        if (! gamma.has_value())
            return false;

        // edges the LP drove to weight 1 belong to the integral part
        std::vector<std::size_t> s_eff = s;
        std::vector<std::pair<std::size_t, Rational>> frac_entries;
        for (const auto & [e, weight] : gamma->entries()) {
            if (weight == Rational(1))
                s_eff.push_back(e);
            else
                frac_entries.emplace_back(e, weight);
        }
        std::sort(s_eff.begin(), s_eff.end());
        EdgeWeighting frac = EdgeWeighting::fractional(std::move(frac_entries));
        VertexSet vs_eff = vs | edge_union(std::vector<std::size_t>(
                s_eff.begin() + s.size(), s_eff.end()));
        VertexSet w_eff = w;
        w_eff -= vs_eff;

        // c-bounded fractional part, counting boundary vertices the
        // fractional cover reaches (they may join the bag for normal form)
        VertexSet frac_covered = coverage(h_, frac);
        VertexSet stray = frac_covered & boundary;
        stray -= vs_eff;
        stray -= w_eff;
        if ((w_eff | stray).count() > c_)
            return false;

        // recurse on the inner components of the new separator
        for (const auto & sub : component_members_within(h_, vs_eff | w_eff, c))
            if (! solvable(sub, w_eff, s_eff))
                return false;

        out = Choice{std::move(s_eff), std::move(w_eff), std::move(frac)};
        return true;
    }

    bool solvable(const VertexSet & c, const VertexSet & w_r, const std::vector<std::size_t> & r)
    {
        Key key = make_key(c, w_r, r);
        auto it = memo_.find(key);
        if (it != memo_.end())
            return it->second.has_value();
        // mark in-progress defensively; components shrink strictly so
        // recursion cannot revisit the key
        Frame f = make_frame(c, w_r, r);
        VertexSet boundary = edge_union(r) | w_r;

        std::optional<Choice> found;

        // S by ascending size then lexicographic over the pool
        std::vector<std::size_t> s;
        auto enumerate_w = [&](const VertexSet & vs) -> bool {
            VertexSet forced = f.connector;
            forced -= vs;
            if (forced.count() > c_)
                return false;
            if (opts_.enforce_disjoint_w && forced.intersects(vs))
                return false; // cannot happen: forced excludes vs
            VertexSet pool = f.w_pool;
            pool -= forced;
            if (opts_.enforce_disjoint_w)
                pool -= vs;
            auto pool_list = pool.to_vector();
            std::size_t max_extra = c_ - forced.count();

            // extras by ascending size then lexicographic
            std::vector<std::size_t> pick;
            auto combos = [&](auto && self, std::size_t from, std::size_t want) -> bool {
                if (want == 0) {
                    VertexSet w = forced;
                    for (auto v : pick)
                        w.add(v);
                    return try_guess(c, f, boundary, s, vs, w, found);
                }
                for (std::size_t i = from; i + want <= pool_list.size(); ++i) {
                    pick.push_back(pool_list[i]);
                    if (self(self, i + 1, want - 1))
                        return true;
                    pick.pop_back();
                }
                return false;
            };
            for (std::size_t extra = 0; extra <= std::min(max_extra, pool_list.size()); ++extra)
                if (combos(combos, 0, extra))
                    return true;
            return false;
        };

        auto enumerate_s = [&](auto && self, std::size_t from, std::size_t want,
                const VertexSet & vs) -> bool {
            if (want == 0)
                return enumerate_w(vs);
            for (std::size_t i = from; i + want <= f.pool.size(); ++i) {
                s.push_back(f.pool[i]);
                if (self(self, i + 1, want - 1, vs | h_.edge(f.pool[i]).vertices))
                    return true;
                s.pop_back();
            }
            return false;
        };

        for (std::size_t size = 0; size <= std::min(kmax_, f.pool.size()); ++size)
            if (enumerate_s(enumerate_s, 0, size, h_.empty_set()))
                break;

        memo_.emplace(std::move(key), found);
        return found.has_value();
    }

    void build(const VertexSet & c, const VertexSet & w_r, const std::vector<std::size_t> & r,
            std::size_t parent, const VertexSet & parent_bag, DecompositionTree & tree)
    {
        const auto & choice = memo_.at(make_key(c, w_r, r));
        Frame f = make_frame(c, w_r, r);

        std::vector<std::pair<std::size_t, Rational>> cover_entries;
        for (auto e : choice->s_eff)
            cover_entries.emplace_back(e, Rational(1));
        for (const auto & [e, weight] : choice->fractional.entries())
            cover_entries.emplace_back(e, weight);
        EdgeWeighting cover = EdgeWeighting::fractional(std::move(cover_entries));

        VertexSet vs_eff = edge_union(choice->s_eff);
        VertexSet bag = (vs_eff & (c | f.connector)) | choice->w_eff;
        // normal form: pull covered parent-bag vertices into the bag
        bag |= coverage(h_, cover) & parent_bag;

        std::size_t u = tree.add_node(parent, bag, cover);
        for (const auto & sub : component_members_within(h_, vs_eff | choice->w_eff, c))
            build(sub, choice->w_eff, choice->s_eff, u, bag, tree);
    }

    const Hypergraph & h_;
    Rational k_;
    std::size_t kmax_;
    std::size_t c_;
    FracOptions opts_;
    std::unordered_map<Key, std::optional<Choice>, KeyHash> memo_;
};

} // namespace

std::optional<DecompositionTree> fracdecomp(const Hypergraph & h, const Rational & k,
        std::size_t c, const FracOptions & opts)
{
    if (k < Rational(1))
        throw Error("fracdecomp requires k >= 1");
    if (h.edge_count() == 0)
        throw Error("fracdecomp: empty hypergraph");
    return FracSearch(h, k, c, opts).run();
}

FhdResult solve_fhd(const Hypergraph & h, const Rational & k, const FhdOptions & opts)
{
    if (k < Rational(1))
        throw Error("solve_fhd requires k >= 1");

    FhdResult res;
    res.measured_iwidth = iwidth(h);
    res.measured_degree = degree(h);
    res.measured_rank = rank(h);
    res.lemma_c_bound = c_bound(k, std::max<std::size_t>(res.measured_degree, 1),
            res.measured_iwidth);

    if (opts.rank_mode) {
        // a cover of weight k reaches at most k*rank vertices, so every FHD
        // trivially has c-bounded fractional part at this c; the integral
        // guess is skipped entirely
        std::size_t c = static_cast<std::size_t>(
                (k * Rational(BigInt(res.measured_rank))).floor_nonneg());
        FracOptions fo = opts.frac;
        fo.empty_s_only = true;
        res.c_used = res.c_cap_searched = c;
        res.decomposition = fracdecomp(h, k, c, fo);
        return res;
    }

    std::vector<std::size_t> cs;
    if (opts.c.has_value()) {
        cs.push_back(*opts.c);
    }
    else {
        std::size_t cap = opts.auto_cap.value_or(std::max<std::size_t>(8,
                static_cast<std::size_t>((k * Rational(BigInt(res.measured_rank))).floor_nonneg())));
        for (std::size_t c = 0; c <= cap; ++c)
            cs.push_back(c);
    }

    for (std::size_t c : cs) {
        res.c_used = res.c_cap_searched = c;
        Augmentation aug = augment_fractional(h, k, c, opts.budget);
        auto found = fracdecomp(aug.extended, k, c, opts.frac);
        if (found.has_value()) {
            res.decomposition = lift_to_original(h, aug.extended, aug.parent_of, *found);
            return res;
        }
    }
    return res;
}

BigInt c_bound(const Rational & k, std::size_t d, std::size_t i)
{
    if (k < Rational(1) || d < 1)
        throw Error("c_bound requires k >= 1 and d >= 1");
    BigInt kc = k.numerator() / k.denominator();
    if (Rational(kc) < k)
        kc += 1; // ceil for rational k
    BigInt n = kc * d;
    BigInt r = n;
    for (BigInt l = 0; l < n; ++l)
        r = r + BigInt(d) * BigInt(i) * (r + BigInt(d - 1) * n);
    return kc * d * r * i;
}

} // namespace hgd
