#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "hgd/hypergraph.hpp"
#include "hgd/oracle.hpp"

#include <algorithm>
#include <random>

using namespace hgd;

TEST_CASE("build assigns dense indices in first-seen order")
{
    auto h = Hypergraph::build({{"e1", {"a", "b"}}});
    CHECK(h.vertex_count() == 2);
    CHECK(h.edge_count() == 1);
    CHECK(*h.vertex_index("a") == 0);
    CHECK(*h.vertex_index("b") == 1);

    auto t = fixtures::triangle();
    CHECK(t.vertex_count() == 3);
    CHECK(t.edge_count() == 3);
}

TEST_CASE("build rejections")
{
    CHECK_THROWS_WITH(Hypergraph::build({{"e1", {}}}), "empty edge e1");
    CHECK_THROWS_AS(Hypergraph::build({{"e1", {"a"}}, {"e1", {"b"}}}), Error);
}

TEST_CASE("duplicate vertex sets are kept but flagged")
{
    auto h = Hypergraph::build({{"e1", {"a", "b"}}, {"e2", {"b", "a"}}});
    CHECK(h.has_duplicate_edges());
    CHECK(h.edge_count() == 2);
    CHECK(h.dedup_representative(1) == 0);
    CHECK(h.distinct_edges() == std::vector<std::size_t>{0});
}

TEST_CASE("edges_incident")
{
    auto t = fixtures::triangle();
    auto inc = edges_incident(t, fixtures::set_of(t, {"a"}));
    CHECK(inc == std::vector<std::size_t>{0, 2});
    CHECK(edges_incident(t, t.empty_set()).empty());
    CHECK(edges_incident(t, t.all_vertices()).size() == 3);
}

TEST_CASE("components")
{
    auto t = fixtures::triangle();
    auto comps = components(t, fixtures::set_of(t, {"b"}));
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].members == fixtures::set_of(t, {"a", "c"}));

    comps = components(t, t.empty_set());
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].members == t.all_vertices());

    auto p = fixtures::path2();
    comps = components(p, fixtures::set_of(p, {"b"}));
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].members == fixtures::set_of(p, {"a"}));
    CHECK(comps[1].members == fixtures::set_of(p, {"c"}));
}

TEST_CASE("components partition the leftover vertices and carry path witnesses")
{
    std::mt19937_64 rng(7101);
    for (int trial = 0; trial < 80; ++trial) {
        auto h = fixtures::random_hypergraph(rng, 9, 7);
        std::uniform_int_distribution<std::size_t> pick(0, h.vertex_count() - 1);
        VertexSet v(h.vertex_count());
        for (std::size_t i = 0, stop = pick(rng) % 4; i < stop; ++i)
            v.add(pick(rng));
        auto comps = components(h, v);
        VertexSet seen(h.vertex_count());
        for (const auto & c : comps) {
            CHECK(! c.members.empty());
            CHECK(! c.members.intersects(v));
            CHECK(! c.members.intersects(seen));
            seen |= c.members;
            auto members = c.members.to_vector();
            for (std::size_t i = 1; i < members.size(); ++i) {
                auto path = find_v_path(h, v, members[0], members[i]);
                REQUIRE(path.has_value());
                for (auto x : *path)
                    CHECK(c.members.test(x));
            }
        }
        seen |= v;
        CHECK(seen == h.all_vertices());
    }
}

TEST_CASE("induced subhypergraph")
{
    auto t = fixtures::triangle();
    auto sub = induced_sub(t, fixtures::set_of(t, {"a", "b"}));
    CHECK(sub.hg.vertex_count() == 2);
    CHECK(sub.hg.edge_count() == 3); // {a,b}, {b}, {a}

    auto full = induced_sub(t, t.all_vertices());
    CHECK(full.hg.edge_count() == 3);
    CHECK(full.hg.vertex_count() == 3);

    auto empty = induced_sub(t, t.empty_set());
    CHECK(empty.hg.vertex_count() == 0);
    CHECK(empty.hg.edge_count() == 0);
}

TEST_CASE("dual per definition")
{
    auto t = fixtures::triangle();
    auto d = dual(t);
    CHECK(d.input_was_essential);
    CHECK(d.hg.vertex_count() == 3); // e1, e2, e3
    REQUIRE(d.hg.edge_count() == 3);
    // a -> {e1,e3}, b -> {e1,e2}, c -> {e2,e3}
    CHECK(d.hg.edge(0).id == "a");
    CHECK(d.hg.edge(0).vertices == fixtures::set_of(d.hg, {"e1", "e3"}));
    CHECK(d.hg.edge(1).vertices == fixtures::set_of(d.hg, {"e1", "e2"}));
    CHECK(d.hg.edge(2).vertices == fixtures::set_of(d.hg, {"e2", "e3"}));

    auto p = fixtures::path2();
    auto dp = dual(p);
    CHECK(dp.hg.vertex_count() == 2);
    CHECK(dp.hg.edge_count() == 3); // {e1}, {e1,e2}, {e2}
}

TEST_CASE("dual of dual is the identity on essential hypergraphs")
{
    std::mt19937_64 rng(40923);
    int done = 0;
    while (done < 60) {
        auto h = fixtures::random_hypergraph(rng, 10, 8);
        if (! is_essential(h))
            h = reduce_essential(h).hg;
        auto dd = dual(dual(h).hg);
        REQUIRE(dd.hg.vertex_count() == h.vertex_count());
        REQUIRE(dd.hg.edge_count() == h.edge_count());
        // identity up to relabeling: same edge ids carrying the same vertex sets
        auto sorted_names = [](const Hypergraph & g, const VertexSet & s) {
            std::vector<std::string> names;
            s.for_each([&](std::size_t v) { names.push_back(g.vertex_name(v)); });
            std::sort(names.begin(), names.end());
            return names;
        };
        for (std::size_t e = 0; e < h.edge_count(); ++e) {
            auto other = dd.hg.edge_index(h.edge(e).id);
            REQUIRE(other.has_value());
            CHECK(sorted_names(dd.hg, dd.hg.edge(*other).vertices) ==
                    sorted_names(h, h.edge(e).vertices));
        }
        ++done;
    }
}

TEST_CASE("reduce_essential")
{
    auto one = fixtures::single_edge(3);
    auto red = reduce_essential(one);
    CHECK(red.hg.vertex_count() == 1);
    REQUIRE(red.merged.size() == 2);
    CHECK(red.merged[0] == std::pair<std::string, std::string>{"v2", "v1"});
    CHECK(red.merged[1] == std::pair<std::string, std::string>{"v3", "v1"});

    auto t = fixtures::triangle();
    CHECK(reduce_essential(t).merged.empty());

    auto h = Hypergraph::build({{"e1", {"a", "b"}}, {"e2", {"a", "b", "c"}}});
    auto r = reduce_essential(h);
    CHECK(r.hg.vertex_count() == 2);
    CHECK(r.merged == std::vector<std::pair<std::string, std::string>>{{"b", "a"}});
}

TEST_CASE("reduce_essential preserves brute-force widths")
{
    std::mt19937_64 rng(5150);
    for (int trial = 0; trial < 25; ++trial) {
        auto h = fixtures::random_hypergraph(rng, 8, 6);
        auto r = reduce_essential(h);
        for (int k = 1; k <= 2; ++k) {
            CHECK(brute_width(h, Rational(k), DecompKind::GHD).has_value() ==
                    brute_width(r.hg, Rational(k), DecompKind::GHD).has_value());
            CHECK(brute_width(h, Rational(k), DecompKind::HD).has_value() ==
                    brute_width(r.hg, Rational(k), DecompKind::HD).has_value());
        }
        CHECK(brute_width(h, Rational(3, 2), DecompKind::FHD).has_value() ==
                brute_width(r.hg, Rational(3, 2), DecompKind::FHD).has_value());
    }
}
