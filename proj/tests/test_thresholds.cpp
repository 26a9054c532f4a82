#include <kstk/thresholds.hpp>

#include <doctest.h>

#include <limits>

using namespace kstk;

namespace {

// Direct recursion over exact rationals, independent of the library's
// bounded representation.
std::vector<mpq_class> recurse(const mpq_class &big_l, std::size_t levels)
{
    std::vector<mpq_class> f(levels + 1);
    f[1] = big_l;
    for (std::size_t l = 2; l <= levels; ++l) {
        mpq_class best = 0;
        for (std::size_t i = 1; i < l; ++i)
            best = std::max<mpq_class>(best, f[i] * f[l - i]);
        mpq_class p = 1;
        for (int e = 0; e < 16; ++e)
            p *= f[l - 1];
        f[l] = 1 + p * mpq_class(static_cast<unsigned long>((l - 1) * (l - 1))) * best;
    }
    return f;
}

mpz_class ceil_of(const mpq_class &q)
{
    mpz_class c;
    mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return c;
}

} // namespace

TEST_CASE("known values")
{
    for (unsigned long l : {1ul, 2ul, 5ul, 7ul})
        CHECK(f_value(1, mpq_class(l)) == mpz_class(l));
    CHECK(f_value(2, 2) == 262145);
    CHECK(f_value(3, 1) == 524289);
    CHECK(f_value(2, 3) == mpz_class("387420490"));
}

TEST_CASE("agrees with the direct recursion")
{
    for (const mpq_class &big_l : {mpq_class(1), mpq_class(2), mpq_class(5, 2)}) {
        auto expected = recurse(big_l, 4);
        auto f = ThresholdFn::paper(big_l);
        for (std::size_t l = 1; l <= 4; ++l) {
            CHECK(f_value(l, big_l) == ceil_of(expected[l]));
            CHECK(f.ceil_value(l) == ceil_of(expected[l]));
        }
    }
}

TEST_CASE("strictly increasing up to level 8")
{
    for (unsigned long big_l : {1ul, 2ul}) {
        auto f = ThresholdFn::paper(big_l);
        for (std::size_t l = 1; l < 8; ++l)
            CHECK(f.compare(l, l + 1) == -1);
        CHECK(f.compare(3, 3) == 0);
    }
}

TEST_CASE("count queries in paper mode")
{
    auto f = ThresholdFn::paper(2);
    CHECK(f.within(2, 262145));
    CHECK(!f.within(2, 262146));
    CHECK(f.cap(2) == 262145);
    CHECK(f.at_least_half(2, 131073));
    CHECK(!f.at_least_half(2, 131072));
    // astronomically large levels: every count is within, none reaches half
    CHECK(f.within(8, std::numeric_limits<std::uint64_t>::max()));
    CHECK(!f.at_least_half(8, std::numeric_limits<std::uint64_t>::max()));
    CHECK(f.cap(8) == std::numeric_limits<std::uint64_t>::max());
}

TEST_CASE("real L uses the exact real value")
{
    auto f = ThresholdFn::paper(mpq_class(5, 2));
    CHECK(f.ceil_value(1) == 3);
    CHECK(f.within(1, 2));
    CHECK(!f.within(1, 3));
    CHECK(f.at_least_half(1, 2)); // 4 >= 2.5
    CHECK(!f.at_least_half(1, 1));
}

TEST_CASE("constant, infinite and table modes")
{
    auto zero = ThresholdFn::constant(0);
    CHECK(zero.within(3, 0));
    CHECK(!zero.within(3, 1));
    CHECK(zero.at_least_half(3, 0));
    auto inf = ThresholdFn::infinite();
    CHECK(inf.within(5, std::numeric_limits<std::uint64_t>::max()));
    CHECK(!inf.at_least_half(5, 10));
    auto table = ThresholdFn::table({3, 5});
    CHECK(table.cap(1) == 3);
    CHECK(table.cap(2) == 5);
    CHECK_THROWS(table.cap(3));
}

TEST_CASE("parsing")
{
    CHECK(ThresholdFn::parse("const:4").cap(7) == 4);
    CHECK(ThresholdFn::parse("paper", 2).cap(2) == 262145);
    CHECK(ThresholdFn::parse("paper:1").cap(3) == 524289);
    CHECK(ThresholdFn::parse("const:inf").cap(1) == std::numeric_limits<std::uint64_t>::max());
    CHECK(ThresholdFn::parse("table:1,2").cap(2) == 2);
    CHECK_THROWS(ThresholdFn::parse("const:-1"));
    CHECK_THROWS(ThresholdFn::parse("paper:0"));
    CHECK_THROWS(ThresholdFn::parse("nonsense"));
    CHECK(parse_rational("2.5") == mpq_class(5, 2));
    CHECK(parse_rational("5/2") == mpq_class(5, 2));
    CHECK_THROWS(parse_rational("x"));
}

TEST_CASE("invalid levels")
{
    CHECK_THROWS_AS(f_value(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(f_value(1, mpq_class(1, 2)), std::invalid_argument);
    CHECK_THROWS_AS(f_value(4, 2, 1000), std::length_error);
}
