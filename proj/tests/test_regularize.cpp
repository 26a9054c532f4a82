#include <kstk/generators.hpp>
#include <kstk/regularize.hpp>

#include <doctest.h>

#include <cmath>

using namespace kstk;

TEST_CASE("almost-regular predicate")
{
    CHECK(is_almost_regular(cycle_graph(8), 1.0));
    CHECK(!is_almost_regular(star_graph(3), 2.0));
    CHECK(is_almost_regular(complete_graph(4).without_edge(0, 1), 1.5));
    CHECK_THROWS(is_almost_regular(Graph(), 2.0));
    CHECK_THROWS(is_almost_regular(cycle_graph(4), 0.5));
}

TEST_CASE("a regular input comes back unchanged")
{
    for (const auto &g : {cycle_graph(8), petersen_graph(), complete_graph(6)}) {
        auto r = extract_almost_regular(g, {});
        CHECK(r.subgraph == g);
        CHECK(r.achieved_k == 1.0);
    }
}

TEST_CASE("star plus K4 selects the K4")
{
    auto g = disjoint_union(star_graph(9), complete_graph(4));
    auto r = extract_almost_regular(g, {0.5, 1.0});
    CHECK(r.m == 4);
    CHECK(r.edges == 6);
    CHECK(r.achieved_k == 1.0);
    CHECK(r.vertices == std::vector<Vertex>{10, 11, 12, 13});
}

TEST_CASE("output is induced and never worse than the input")
{
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        auto g = random_gnm(200, 2000, seed);
        auto r = extract_almost_regular(g, {0.5, 1.0});
        CHECK(r.m > 0);
        CHECK(r.subgraph == g.induced(r.vertices));
        CHECK(r.achieved_k == achieved_k(r.subgraph));
        CHECK(r.achieved_k <= achieved_k(g));
        // idempotence in quality
        auto again = extract_almost_regular(r.subgraph, {0.5, 1.0});
        CHECK(again.achieved_k <= r.achieved_k);
    }
}

TEST_CASE("theoretical constant is reported in log form")
{
    auto r = extract_almost_regular(cycle_graph(5), {0.5, 1.0});
    CHECK(r.theoretical_k_log2 == doctest::Approx(std::log2(20.0) + 4.0 + 1.0));
    CHECK(r.theoretical_k == doctest::Approx(20.0 * 32.0));
    auto tiny = extract_almost_regular(cycle_graph(5), {0.01, 1.0});
    CHECK(std::isinf(tiny.theoretical_k));
}
