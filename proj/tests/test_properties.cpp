#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "hgd/io.hpp"
#include "hgd/properties.hpp"

#include <filesystem>
#include <random>

using namespace hgd;

TEST_CASE("degree")
{
    CHECK(degree(fixtures::triangle()) == 2);
    CHECK(degree(fixtures::single_edge(3)) == 1);
    CHECK(degree(fixtures::clique(4)) == 3);
}

TEST_CASE("iwidth")
{
    CHECK(iwidth(fixtures::clique(4)) == 1);
    auto h = Hypergraph::build({{"e1", {"a", "b", "c"}}, {"e2", {"b", "c", "d"}}});
    CHECK(iwidth(h) == 2);
    CHECK(iwidth(fixtures::single_edge(3)) == 0);
}

TEST_CASE("iwidth duplicate knob")
{
    auto h = Hypergraph::build({{"e1", {"a", "b"}}, {"e2", {"a", "b"}}});
    CHECK(iwidth(h) == 0);       // dedup view: one distinct edge
    CHECK(iwidth(h, true) == 2); // literal view over identifiers
}

TEST_CASE("c_miwidth")
{
    auto h6 = fixtures::co_singleton_family(6);
    CHECK(c_miwidth(h6, 3) == 3);

    auto k4 = fixtures::clique(4);
    CHECK(c_miwidth(k4, 2) == 1);
    CHECK(c_miwidth(k4, 3) == 0);

    CHECK(c_miwidth(fixtures::triangle(), 2) == 1);
    CHECK(c_miwidth(fixtures::triangle(), 1) == rank(fixtures::triangle()));
}

TEST_CASE("vc_dimension small cases")
{
    CHECK(vc_dimension(fixtures::triangle()) == 1);
    CHECK(vc_dimension(fixtures::co_singleton_family(4)) == 1);
    CHECK(vc_dimension(fixtures::single_edge(2)) == 0);
}

TEST_CASE("vc cap yields unavailable")
{
    auto h = fixtures::clique(9);
    CHECK(vc_dimension(h, 8) == std::nullopt);
    CHECK(vc_dimension(h, 16).has_value());
}

TEST_CASE("rank")
{
    CHECK(rank(fixtures::single_edge(3)) == 3);
    CHECK(rank(fixtures::clique(4)) == 2);
    CHECK(rank(fixtures::triangle()) == 2);
}

TEST_CASE("vc <= c + c_miwidth on random hypergraphs")
{
    std::mt19937_64 rng(606);
    for (int trial = 0; trial < 220; ++trial) {
        auto h = fixtures::random_hypergraph(rng, 10, 8);
        auto vc = vc_dimension(h);
        REQUIRE(vc.has_value());
        for (std::size_t c : {std::size_t{2}, std::size_t{3}})
            CHECK(*vc <= c + c_miwidth(h, c));
    }
}

TEST_CASE("c_miwidth monotone in c")
{
    std::mt19937_64 rng(607);
    for (int trial = 0; trial < 60; ++trial) {
        auto h = fixtures::random_hypergraph(rng, 10, 8);
        for (std::size_t c = 1; c + 1 <= 4; ++c)
            CHECK(c_miwidth(h, c + 1) <= c_miwidth(h, c));
    }
}

TEST_CASE("co-singleton family: unbounded miwidth, tiny vc")
{
    for (std::size_t n = 3; n <= 10; ++n) {
        auto h = fixtures::co_singleton_family(n);
        for (std::size_t c : {std::size_t{2}, std::size_t{3}})
            if (c < n)
                CHECK(c_miwidth(h, c) == n - c);
        auto vc = vc_dimension(h);
        REQUIRE(vc.has_value());
        CHECK(*vc <= 2);
    }
}

TEST_CASE("degree d forces empty (d+1)-intersections")
{
    std::mt19937_64 rng(608);
    for (int trial = 0; trial < 40; ++trial) {
        auto h = fixtures::random_hypergraph(rng, 9, 6);
        std::size_t d = degree(h);
        if (d + 1 <= h.edge_count())
            CHECK(c_miwidth(h, d + 1, true) == 0);
    }
}

TEST_CASE("corpus analysis")
{
    namespace fs = std::filesystem;
    auto dir = fs::temp_directory_path() / "hgd_props_test";
    fs::create_directories(dir);
    auto tri = dir / "tri.hg";
    auto bad = dir / "bad.hg";
    write_text_file(tri.string(), write_hypergraph(fixtures::triangle()));
    write_text_file(bad.string(), "e1(a,b\n");

    auto report = analyze_corpus({tri.string(), bad.string()}, {3, 4});
    REQUIRE(report.rows.size() == 1);
    CHECK(report.rows[0].degree == 2);
    CHECK(report.rows[0].iwidth == 1);
    REQUIRE(report.errors.size() == 1);
    CHECK(report.errors[0].first == bad.string());

    auto table = report.table_text({3, 4});
    CHECK(table.find("error") != std::string::npos);
    auto csv = report.csv({3, 4});
    CHECK(csv.find("instance,degree,iwidth,miwidth_c3,miwidth_c4,vc_dim,rank") == 0);

    auto empty = analyze_corpus({}, {3});
    CHECK(empty.rows.empty());
    CHECK(empty.table_text({3}).find("instances: 0") != std::string::npos);

    // per-file fan-out must reduce deterministically
    auto seq = analyze_corpus({tri.string(), bad.string(), tri.string()}, {3, 4}, 16, 1);
    auto par = analyze_corpus({tri.string(), bad.string(), tri.string()}, {3, 4}, 16, 3);
    CHECK(seq.csv({3, 4}) == par.csv({3, 4}));
}
