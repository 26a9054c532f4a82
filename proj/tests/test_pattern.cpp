#include <kstk/generators.hpp>
#include <kstk/matcher.hpp>
#include <kstk/pattern.hpp>

#include <doctest.h>

using namespace kstk;

TEST_CASE("pattern descriptors parse and print")
{
    for (std::string text : {"kst:2,3^2", "cycle:8", "spider:1,2,3", "spider:2,2^3*4", "edges:0-1,1-2", "kst:3,3"})
        CHECK(to_string(parse_pattern(text)) == text);
    auto d = parse_pattern("spider:2,1*3");
    CHECK(d.kind == PatternDescriptor::Kind::spider);
    CHECK(d.legs == std::vector<std::size_t>{2, 1});
    CHECK(d.blowup == 3u);
}

TEST_CASE("malformed descriptors are rejected")
{
    for (std::string text : {"kst:2", "kst:0,3", "cycle:2", "spider:", "spider:1,0", "kst:2,2^0", "kst:2,2*3",
                             "edges:0-0", "edges:0-1,1-0", "wheel:5", "kst:2,2^2^3", "cycle8"})
        CHECK_THROWS_AS(parse_pattern(text), std::invalid_argument);
}

TEST_CASE("kst pattern graph equals the subdivided complete bipartite graph")
{
    for (std::size_t s = 1; s <= 3; ++s)
        for (std::size_t t = 1; t <= 3; ++t)
            for (std::size_t k = 1; k <= 3; ++k) {
                PatternDescriptor d;
                d.s = s;
                d.t = t;
                d.subdivision = k;
                CHECK(instantiate(d).graph() == subdivide(complete_bipartite(s, t), k));
            }
}

TEST_CASE("cycle pattern is a cycle")
{
    auto p = instantiate(parse_pattern("cycle:7"));
    auto g = p.graph();
    CHECK(g.vertex_count() == 7);
    CHECK(g.edge_count() == 7);
    CHECK(find_isomorphism(g, cycle_graph(7)).has_value());
    auto c4k = instantiate(parse_pattern("cycle:4^2")).graph();
    CHECK(find_isomorphism(c4k, cycle_graph(8)).has_value());
}

TEST_CASE("subdivision counts")
{
    auto f = petersen_graph();
    for (std::size_t k = 1; k <= 3; ++k) {
        auto fk = subdivide(f, k);
        CHECK(fk.vertex_count() == 10 + (k - 1) * 15);
        CHECK(fk.edge_count() == k * 15);
    }
    CHECK_THROWS(subdivide(f, 0));
}

TEST_CASE("spider blowup is the subdivided K_{s,t}")
{
    for (std::size_t s = 1; s <= 3; ++s)
        for (std::size_t t = 1; t <= 3; ++t)
            for (std::size_t k = 1; k <= 3; ++k) {
                auto blown = rooted_blowup(spider_pattern(std::vector<std::size_t>(s, k)), t);
                CHECK(find_isomorphism(blown, subdivide(complete_bipartite(s, t), k)).has_value());
            }
}

TEST_CASE("rooted blowup layout")
{
    auto sp = spider_pattern({1, 2});
    CHECK(sp.roots == std::vector<Vertex>{1, 3});
    auto b = rooted_blowup(sp, 2);
    CHECK(b.vertex_count() == 2 + 2 * 2);
    CHECK(b.edge_count() == 6);
    CHECK_THROWS(rooted_blowup(sp, 0));
}
