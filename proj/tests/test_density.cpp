#include <kstk/density.hpp>
#include <kstk/generators.hpp>

#include <doctest.h>

using namespace kstk;

TEST_CASE("rooted density of small spiders")
{
    // single leg of length 2 rooted at its end: non-roots {centre, middle}, 2 edges
    auto sp = spider_pattern({2});
    CHECK(rooted_density(sp) == Rational(2, 2));
    std::vector<Vertex> only_centre{0};
    CHECK(rooted_density(sp, only_centre) == Rational(1, 1));
    std::vector<Vertex> bad{sp.roots[0]};
    CHECK_THROWS_AS(rooted_density(sp, bad), std::invalid_argument);
}

TEST_CASE("spider closed form agrees with exhaustive balance")
{
    CHECK(spider_is_balanced(std::vector<std::size_t>{2, 2}));
    CHECK(!spider_is_balanced(std::vector<std::size_t>{1, 1, 5}));
    CHECK(is_balanced(spider_pattern({1, 1, 5})) == Balance::unbalanced);
    CHECK(is_balanced(spider_pattern({3, 3, 3})) == Balance::balanced);
}

TEST_CASE("balance becomes undecidable past the exhaustive limit")
{
    CHECK(is_balanced(spider_pattern({5, 5, 5}), 10) == Balance::undecidable);
}
