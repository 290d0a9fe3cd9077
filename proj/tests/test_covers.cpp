#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "hgd/covers.hpp"
#include "hgd/properties.hpp"

#include <random>

using namespace hgd;

TEST_CASE("rational parsing and canonical form")
{
    CHECK(Rational::parse("3/2") == Rational(3, 2));
    CHECK(Rational::parse("2") == Rational(2));
    CHECK(Rational::parse("2/4") == Rational(1, 2));
    CHECK(Rational(3, 2).str_canonical() == "3/2");
    CHECK(Rational(2).str_canonical() == "2/1");
    CHECK(! Rational::parse("1/0").has_value());
    CHECK(! Rational::parse("x").has_value());
    CHECK(Rational(3, 2) - Rational(1, 1000) == Rational(1499, 1000));
}

TEST_CASE("coverage")
{
    auto t = fixtures::triangle();
    auto halves = EdgeWeighting::fractional({{0, {1, 2}}, {1, {1, 2}}, {2, {1, 2}}});
    CHECK(coverage(t, halves) == t.all_vertices());

    auto single = EdgeWeighting::integral({0});
    CHECK(coverage(t, single) == fixtures::set_of(t, {"a", "b"}));

    auto half = EdgeWeighting::fractional({{0, {1, 2}}});
    CHECK(coverage(t, half).empty());
}

TEST_CASE("weight")
{
    auto halves = EdgeWeighting::fractional({{0, {1, 2}}, {1, {1, 2}}, {2, {1, 2}}});
    CHECK(halves.total_weight() == Rational(3, 2));
    CHECK(EdgeWeighting::fractional({}).total_weight() == Rational(0));
    CHECK(EdgeWeighting::integral({0, 1}).total_weight() == Rational(2));
}

TEST_CASE("weights above 1 rejected at construction")
{
    CHECK_THROWS_AS(EdgeWeighting::fractional({{0, Rational(3, 2)}}), Error);
}

TEST_CASE("optimal fractional cover")
{
    auto k4 = fixtures::clique(4);
    CHECK(optimal_fractional_cover(k4, k4.all_vertices()).second == Rational(2));

    auto t = fixtures::triangle();
    auto [gamma, opt] = optimal_fractional_cover(t, t.all_vertices());
    CHECK(opt == Rational(3, 2));
    CHECK(coverage(t, gamma) == t.all_vertices());
    CHECK(gamma.total_weight() == opt);

    auto one = fixtures::single_edge(3);
    CHECK(optimal_fractional_cover(one, one.all_vertices()).second == Rational(1));
}

TEST_CASE("optimal integral cover")
{
    auto k4 = fixtures::clique(4);
    CHECK(optimal_integral_cover(k4, k4.all_vertices()).second == 2);

    auto t = fixtures::triangle();
    CHECK(optimal_integral_cover(t, t.all_vertices()).second == 2);

    auto one = fixtures::single_edge(3);
    CHECK(optimal_integral_cover(one, one.all_vertices()).second == 1);
}

TEST_CASE("exists_fractional_cover")
{
    auto t = fixtures::triangle();
    auto hit = exists_fractional_cover(t, t.all_vertices(), Rational(3, 2));
    REQUIRE(hit.has_value());
    CHECK(hit->total_weight() <= Rational(3, 2));
    CHECK(coverage(t, *hit) == t.all_vertices());

    CHECK(! exists_fractional_cover(t, t.all_vertices(), Rational(1)).has_value());
    CHECK(exists_fractional_cover(t, t.empty_set(), Rational(0)).has_value());
}

TEST_CASE("clique law: rho = rho* = n on K_2n")
{
    for (std::size_t n = 1; n <= 4; ++n) {
        auto k = fixtures::clique(2 * n);
        CHECK(optimal_integral_cover(k, k.all_vertices()).second == n);
        CHECK(optimal_fractional_cover(k, k.all_vertices()).second == Rational(BigInt(n)));
    }
}

TEST_CASE("rho* <= rho on random instances, witnesses re-verify")
{
    std::mt19937_64 rng(90210);
    for (int trial = 0; trial < 60; ++trial) {
        auto h = fixtures::random_hypergraph(rng, 10, 8);
        auto [gamma, frac] = optimal_fractional_cover(h, h.all_vertices());
        auto [lambda, integral] = optimal_integral_cover(h, h.all_vertices());
        CHECK(frac <= Rational(BigInt(integral)));
        CHECK(coverage(h, gamma) == h.all_vertices());
        CHECK(coverage(h, lambda) == h.all_vertices());
        CHECK(gamma.total_weight() == frac);
        CHECK(lambda.total_weight() == Rational(BigInt(integral)));
    }
}

TEST_CASE("LP optimum invariant under edge duplication and relabeling")
{
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 20; ++trial) {
        auto h = fixtures::random_hypergraph(rng, 8, 6);
        auto base = optimal_fractional_cover(h, h.all_vertices()).second;

        std::vector<std::pair<std::string, std::vector<std::string>>> spec;
        for (const auto & e : h.edges()) {
            std::vector<std::string> names;
            e.vertices.for_each([&](std::size_t v) { names.push_back("x_" + h.vertex_name(v)); });
            spec.emplace_back(e.id, names);
            spec.emplace_back(e.id + "_dup", names);
        }
        auto doubled = Hypergraph::build(spec);
        CHECK(optimal_fractional_cover(doubled, doubled.all_vertices()).second == base);
    }
}

TEST_CASE("degree_round traces the Uncov loop")
{
    auto t = fixtures::triangle();
    auto halves = EdgeWeighting::fractional({{0, {1, 2}}, {1, {1, 2}}, {2, {1, 2}}});
    auto rounded = degree_round(t, halves);
    CHECK(rounded.is_integral_values());
    CHECK(coverage(t, rounded).contains(coverage(t, halves)));
    CHECK(rounded.support().size() == 2); // greedy picks e1 (covers a,b) then e2

    auto single = EdgeWeighting::fractional({{0, Rational(1)}});
    CHECK(degree_round(t, single).support() == std::vector<std::size_t>{0});
}

TEST_CASE("degree_round bound on random weightings")
{
    std::mt19937_64 rng(1415);
    for (int trial = 0; trial < 80; ++trial) {
        auto h = fixtures::random_hypergraph(rng, 10, 8);
        std::uniform_int_distribution<int> num(0, 4);
        std::vector<std::pair<std::size_t, Rational>> entries;
        for (std::size_t e = 0; e < h.edge_count(); ++e) {
            int v = num(rng);
            if (v > 0)
                entries.emplace_back(e, Rational(v, 4));
        }
        auto gamma = EdgeWeighting::fractional(std::move(entries));
        auto lambda = degree_round(h, gamma);
        CHECK(coverage(h, lambda).contains(coverage(h, gamma)));
        CHECK(lambda.total_weight() <=
                Rational(BigInt(degree(h))) * gamma.total_weight());
    }
}

TEST_CASE("weighting referencing an unknown edge index is rejected")
{
    auto t = fixtures::triangle();
    auto bad = EdgeWeighting::integral({5});
    CHECK_THROWS_AS(coverage(t, bad), Error);
}
