#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace kstk {

/// Parses "7", "2.5" or "5/2" into an exact rational. Throws std::invalid_argument.
mpq_class parse_rational(const std::string &text);

/**
 * The threshold sequence f(1), f(2), ... used by the goodness classification.
 *
 * paper mode follows f(1) = L and
 *     f(l) = 1 + f(l-1)^16 (l-1)^2 max_{1<=i<l} f(i) f(l-i)
 * over the rationals. Values are held exactly while they stay below
 * `exact_bit_limit` bits; beyond that only certified bounds
 * 2^lo <= f(l) <= 2^hi are tracked. Every query the classification needs
 * (count <= f, 2 count >= f, comparisons between levels) is decided either
 * exactly or from bounds, and throws std::domain_error if neither suffices.
 *
 * constant mode uses the same N at every level (N may be 0, or infinite);
 * table mode takes explicit values for l = 1..size.
 *
 * Instances are cheap to copy and safe to query from several threads.
 */
class ThresholdFn
{
public:
    static constexpr std::uint64_t default_exact_bit_limit = std::uint64_t{1} << 22;

    static ThresholdFn paper(const mpq_class &l, std::uint64_t exact_bit_limit = default_exact_bit_limit);
    static ThresholdFn constant(const mpz_class &n);
    static ThresholdFn infinite();
    static ThresholdFn table(std::vector<mpz_class> values);

    /// "paper:L", "const:N", "const:inf" or "table:a,b,c". `l` is used when
    /// the string is just "paper".
    static ThresholdFn parse(const std::string &spec, const mpq_class &l = 1);

    std::string describe() const;

    /// count <= f(level)
    bool within(std::size_t level, std::uint64_t count) const;
    /// 2 * count >= f(level)
    bool at_least_half(std::size_t level, std::uint64_t count) const;
    /// Largest count with count <= f(level), saturated at UINT64_MAX.
    std::uint64_t cap(std::size_t level) const;

    bool is_exact(std::size_t level) const;
    /// Smallest integer >= f(level). Throws std::length_error if only bounds are held.
    mpz_class ceil_value(std::size_t level) const;
    /// Certified log2 bounds (lo, hi); both saturate at INT64_MAX.
    /// For f(level) == 0 lo is INT64_MIN.
    std::pair<std::int64_t, std::int64_t> log2_bounds(std::size_t level) const;
    /// -1, 0 or 1 comparing f(a) with f(b).
    int compare(std::size_t a, std::size_t b) const;

    // Implementation detail, defined in thresholds.cpp.
    struct State;
    struct Level;

private:
    const Level &level(std::size_t l) const;

    std::shared_ptr<State> state_;
};

/// Exact smallest integer >= f(l, L) in paper mode. Throws std::invalid_argument
/// for l < 1 or L < 1, std::length_error if the value would exceed `bit_limit` bits.
mpz_class f_value(std::size_t l, const mpq_class &big_l, std::uint64_t bit_limit = std::uint64_t{1} << 31);

} // namespace kstk
