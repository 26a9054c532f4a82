#include "brute_force.hpp"

#include <kstk/generators.hpp>
#include <kstk/spiders.hpp>

#include <doctest.h>

using namespace kstk;

TEST_CASE("spider accessors")
{
    Spider s{0, {{1, 2}, {}, {3}}};
    CHECK(s.lengths() == LengthVector{2, 0, 1});
    CHECK(s.leaves() == LeafVector{2, 0, 3});
    CHECK(s.non_leaf_vertices() == std::vector<Vertex>{0, 1});
    CHECK(subspider(s, {1, 0, 0}) == Spider{0, {{1}, {}, {}}});
    CHECK_THROWS(subspider(s, {3, 0, 0}));
}

TEST_CASE("subspider is monotone")
{
    auto g = petersen_graph();
    for (const auto &s : enumerate_spiders(g, {3, 2})) {
        CHECK(subspider(s, {3, 2}) == s);
        CHECK(subspider(subspider(s, {2, 1}), {1, 1}) == subspider(s, {1, 1}));
    }
}

TEST_CASE("enumeration matches the naive enumerator")
{
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        auto g = random_gnm(9, 16, seed);
        for (LengthVector lv : {LengthVector{1, 1}, LengthVector{2, 1}, LengthVector{2, 2}, LengthVector{1, 0, 2}}) {
            auto fast = enumerate_spiders(g, lv);
            auto naive = brute::all_spiders(g, lv);
            REQUIRE(fast.size() == naive.size());
            CHECK(std::is_sorted(fast.begin(), fast.end()));
            for (const auto &s : fast)
                CHECK(is_spider_in(g, s));
            CHECK(count_spiders(g, lv, 3) == naive.size());
            std::map<LeafVector, std::uint64_t> expected;
            for (const auto &s : naive)
                ++expected[s.leaves()];
            CHECK(count_by_leaf(g, lv, 2) == expected);
        }
    }
}

TEST_CASE("leaf entries of a proper spider are distinct")
{
    auto g = complete_graph(6);
    for (const auto &s : enumerate_spiders(g, {1, 2, 1})) {
        auto leaves = s.leaves();
        std::sort(leaves.begin(), leaves.end());
        CHECK(std::adjacent_find(leaves.begin(), leaves.end()) == leaves.end());
    }
}

TEST_CASE("length vector parsing")
{
    CHECK(parse_length_vector("2,2,3") == LengthVector{2, 2, 3});
    CHECK(parse_length_vector("0,1", 0) == LengthVector{0, 1});
    CHECK_THROWS(parse_length_vector("0,1"));
    CHECK_THROWS(parse_length_vector("2,,3"));
    CHECK(to_string(LengthVector{1, 2}) == "1,2");
}
