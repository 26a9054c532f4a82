#include <kstk/thresholds.hpp>

#include <algorithm>
#include <bit>
#include <deque>
#include <limits>
#include <mutex>
#include <stdexcept>

namespace kstk {

namespace {

constexpr std::int64_t int_max = std::numeric_limits<std::int64_t>::max();
constexpr std::int64_t int_min = std::numeric_limits<std::int64_t>::min();

std::int64_t sat_add(std::int64_t a, std::int64_t b)
{
    if (a == int_max || b == int_max)
        return int_max;
    std::int64_t out;
    if (__builtin_add_overflow(a, b, &out))
        return int_max;
    return out;
}

std::int64_t sat_mul(std::int64_t a, std::int64_t b)
{
    if (a == int_max || b == int_max)
        return int_max;
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out))
        return int_max;
    return out;
}

std::uint64_t bits(const mpz_class &x)
{
    return x == 0 ? 0 : mpz_sizeinbase(x.get_mpz_t(), 2);
}

// A positive rational kept as an unreduced numerator/denominator pair.
struct Fraction
{
    mpz_class num;
    mpz_class den;
};

std::pair<std::int64_t, std::int64_t> fraction_bounds(const Fraction &f)
{
    if (f.num == 0)
        return {int_min, int_min};
    auto a = static_cast<std::int64_t>(bits(f.num));
    if (f.den == 1)
        return {a - 1, a};
    auto b = static_cast<std::int64_t>(bits(f.den));
    return {a - 1 - b, a - b + 1};
}

int compare_fractions(const Fraction &x, const Fraction &y)
{
    if (x.den == 1 && y.den == 1)
        return cmp(x.num, y.num) < 0 ? -1 : cmp(x.num, y.num) > 0 ? 1 : 0;
    mpz_class lhs = x.num * y.den;
    mpz_class rhs = y.num * x.den;
    return lhs < rhs ? -1 : lhs > rhs ? 1 : 0;
}

Fraction multiply(const Fraction &x, const Fraction &y)
{
    Fraction out;
    out.num = x.num * y.num;
    out.den = (x.den == 1) ? y.den : (y.den == 1 ? x.den : mpz_class(x.den * y.den));
    return out;
}

std::int64_t floor_log2(std::uint64_t c)
{
    return static_cast<std::int64_t>(std::bit_width(c)) - 1;
}

std::int64_t ceil_log2(std::uint64_t c)
{
    return c <= 1 ? 0 : static_cast<std::int64_t>(std::bit_width(c - 1));
}

// Rough size of the next exact level, in bits of numerator plus denominator.
std::uint64_t estimate_bits(const std::vector<const Fraction *> &prev)
{
    const std::size_t l = prev.size() + 1;
    auto size = [](const Fraction &f) { return bits(f.num) + bits(f.den); };
    std::uint64_t best = 0;
    for (std::size_t i = 1; i < l; ++i)
        best = std::max(best, size(*prev[i - 1]) + size(*prev[l - i - 1]));
    return 16 * size(*prev[l - 2]) + 2 * std::bit_width(l - 1) + best + 2;
}

// f(l) from exact f(1..l-1); prev[i] holds f(i+1).
Fraction exact_step(const std::vector<const Fraction *> &prev)
{
    const std::size_t l = prev.size() + 1;
    Fraction best = multiply(*prev[0], *prev[l - 2]);
    for (std::size_t i = 2; i <= l / 2; ++i) {
        auto candidate = multiply(*prev[i - 1], *prev[l - i - 1]);
        if (compare_fractions(candidate, best) > 0)
            best = std::move(candidate);
    }
    const auto &last = *prev[l - 2];
    Fraction power;
    mpz_pow_ui(power.num.get_mpz_t(), last.num.get_mpz_t(), 16);
    if (last.den == 1)
        power.den = 1;
    else
        mpz_pow_ui(power.den.get_mpz_t(), last.den.get_mpz_t(), 16);
    auto x = multiply(power, best);
    x.num *= static_cast<unsigned long>((l - 1) * (l - 1));
    x.num += x.den;
    return x;
}

} // namespace

mpq_class parse_rational(const std::string &text)
{
    if (text.empty())
        throw std::invalid_argument("empty number");
    try {
        auto slash = text.find('/');
        if (slash != std::string::npos) {
            mpq_class q(text);
            q.canonicalize();
            if (q.get_den() == 0)
                throw std::invalid_argument("zero denominator");
            return q;
        }
        auto dot = text.find('.');
        if (dot == std::string::npos)
            return mpq_class(mpz_class(text));
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        if (digits.empty() || text.find('.', dot + 1) != std::string::npos)
            throw std::invalid_argument("bad number");
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, text.size() - dot - 1);
        mpq_class q(mpz_class(digits.empty() ? "0" : digits), den);
        q.canonicalize();
        return q;
    }
    catch (const std::invalid_argument &) {
        throw std::invalid_argument("not a number: '" + text + "'");
    }
}

struct ThresholdFn::Level
{
    bool infinite = false;
    bool exact = false;
    Fraction value; // when exact
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    std::uint64_t cap = 0;
    std::uint64_t half_min = 0;
    bool half_reachable = true;
};

struct ThresholdFn::State
{
    enum class Mode
    {
        paper,
        constant,
        table,
    } mode = Mode::constant;
    mpq_class l;
    std::uint64_t exact_bit_limit = default_exact_bit_limit;
    std::vector<mpz_class> table;
    bool infinite = false;
    mpz_class constant;

    std::mutex mutex;
    std::deque<Level> levels; // levels[i] is f(i+1)
};

ThresholdFn ThresholdFn::paper(const mpq_class &l, std::uint64_t exact_bit_limit)
{
    if (l < 1)
        throw std::invalid_argument("threshold: L must be >= 1");
    ThresholdFn f;
    f.state_ = std::make_shared<State>();
    f.state_->mode = State::Mode::paper;
    f.state_->l = l;
    f.state_->l.canonicalize();
    f.state_->exact_bit_limit = exact_bit_limit;
    return f;
}

ThresholdFn ThresholdFn::constant(const mpz_class &n)
{
    if (n < 0)
        throw std::invalid_argument("threshold: constant must be >= 0");
    ThresholdFn f;
    f.state_ = std::make_shared<State>();
    f.state_->constant = n;
    return f;
}

ThresholdFn ThresholdFn::infinite()
{
    ThresholdFn f;
    f.state_ = std::make_shared<State>();
    f.state_->infinite = true;
    return f;
}

ThresholdFn ThresholdFn::table(std::vector<mpz_class> values)
{
    if (values.empty())
        throw std::invalid_argument("threshold: table needs at least one value");
    for (const auto &v : values)
        if (v < 0)
            throw std::invalid_argument("threshold: table values must be >= 0");
    ThresholdFn f;
    f.state_ = std::make_shared<State>();
    f.state_->mode = State::Mode::table;
    f.state_->table = std::move(values);
    return f;
}

ThresholdFn ThresholdFn::parse(const std::string &spec, const mpq_class &l)
{
    auto colon = spec.find(':');
    std::string kind = spec.substr(0, colon);
    std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (kind == "paper")
        return paper(arg.empty() ? l : parse_rational(arg));
    if (kind == "const") {
        if (arg == "inf")
            return infinite();
        try {
            return constant(mpz_class(arg));
        }
        catch (const std::invalid_argument &) {
            throw std::invalid_argument("threshold: bad constant '" + arg + "'");
        }
    }
    if (kind == "table") {
        std::vector<mpz_class> values;
        std::size_t start = 0;
        while (true) {
            auto comma = arg.find(',', start);
            auto part = arg.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
            try {
                values.emplace_back(part);
            }
            catch (const std::invalid_argument &) {
                throw std::invalid_argument("threshold: bad table entry '" + part + "'");
            }
            if (comma == std::string::npos)
                break;
            start = comma + 1;
        }
        return table(std::move(values));
    }
    throw std::invalid_argument("threshold: expected paper, const:N or table:..., got '" + spec + "'");
}

std::string ThresholdFn::describe() const
{
    switch (state_->mode) {
    case State::Mode::paper:
        return "paper:" + state_->l.get_str();
    case State::Mode::table: {
        std::string out = "table:";
        for (std::size_t i = 0; i < state_->table.size(); ++i)
            out += (i ? "," : "") + state_->table[i].get_str();
        return out;
    }
    case State::Mode::constant:
        break;
    }
    return state_->infinite ? "const:inf" : "const:" + state_->constant.get_str();
}

namespace {

void finish_exact(ThresholdFn::Level &lv)
{
    lv.exact = true;
    std::tie(lv.lo, lv.hi) = fraction_bounds(lv.value);
    mpz_class floor_value;
    mpz_fdiv_q(floor_value.get_mpz_t(), lv.value.num.get_mpz_t(), lv.value.den.get_mpz_t());
    lv.cap = floor_value.fits_ulong_p() ? floor_value.get_ui() : std::numeric_limits<std::uint64_t>::max();
    // Smallest count with 2 count >= num/den.
    mpz_class twice_den = lv.value.den * 2;
    mpz_class half;
    mpz_cdiv_q(half.get_mpz_t(), lv.value.num.get_mpz_t(), twice_den.get_mpz_t());
    lv.half_reachable = half.fits_ulong_p();
    lv.half_min = lv.half_reachable ? half.get_ui() : 0;
}

void finish_bounds(ThresholdFn::Level &lv)
{
    lv.exact = false;
    if (lv.lo < 64)
        throw std::domain_error("threshold bounds too loose to classify counts");
    lv.cap = std::numeric_limits<std::uint64_t>::max();
    lv.half_reachable = false;
}

} // namespace

const ThresholdFn::Level &ThresholdFn::level(std::size_t l) const
{
    if (l < 1)
        throw std::invalid_argument("threshold: level must be >= 1");
    std::lock_guard lock(state_->mutex);
    auto &levels = state_->levels;
    while (levels.size() < l) {
        Level next;
        const std::size_t cur = levels.size() + 1;
        if (state_->infinite) {
            next.infinite = true;
            next.lo = next.hi = int_max;
            next.cap = std::numeric_limits<std::uint64_t>::max();
            next.half_reachable = false;
        }
        else if (state_->mode == State::Mode::constant) {
            next.value = {state_->constant, 1};
            finish_exact(next);
        }
        else if (state_->mode == State::Mode::table) {
            if (cur > state_->table.size())
                throw std::out_of_range("threshold table has no value for level " + std::to_string(cur));
            next.value = {state_->table[cur - 1], 1};
            finish_exact(next);
        }
        else if (cur == 1) {
            next.value = {state_->l.get_num(), state_->l.get_den()};
            finish_exact(next);
        }
        else {
            bool all_exact = true;
            std::vector<const Fraction *> prev;
            for (const auto &p : levels) {
                all_exact = all_exact && p.exact;
                prev.push_back(&p.value);
            }
            if (all_exact && estimate_bits(prev) <= state_->exact_bit_limit) {
                next.value = exact_step(prev);
                finish_exact(next);
            }
            else {
                const auto c = static_cast<std::uint64_t>((cur - 1) * (cur - 1));
                std::int64_t lo_best = int_min, hi_best = int_min;
                for (std::size_t i = 1; i < cur; ++i) {
                    lo_best = std::max(lo_best, sat_add(levels[i - 1].lo, levels[cur - i - 1].lo));
                    hi_best = std::max(hi_best, sat_add(levels[i - 1].hi, levels[cur - i - 1].hi));
                }
                const auto &last = levels[cur - 2];
                next.lo = sat_add(sat_add(sat_mul(16, last.lo), floor_log2(c)), lo_best);
                next.hi = sat_add(sat_add(sat_add(sat_mul(16, last.hi), ceil_log2(c)), hi_best), 1);
                finish_bounds(next);
            }
        }
        levels.push_back(std::move(next));
    }
    return levels[l - 1];
}

bool ThresholdFn::within(std::size_t level_no, std::uint64_t count) const
{
    return count <= level(level_no).cap;
}

bool ThresholdFn::at_least_half(std::size_t level_no, std::uint64_t count) const
{
    const auto &lv = level(level_no);
    return lv.half_reachable && count >= lv.half_min;
}

std::uint64_t ThresholdFn::cap(std::size_t level_no) const
{
    return level(level_no).cap;
}

bool ThresholdFn::is_exact(std::size_t level_no) const
{
    return level(level_no).exact;
}

mpz_class ThresholdFn::ceil_value(std::size_t level_no) const
{
    const auto &lv = level(level_no);
    if (!lv.exact)
        throw std::length_error("threshold f(" + std::to_string(level_no) + ") is only known up to bounds");
    mpz_class out;
    mpz_cdiv_q(out.get_mpz_t(), lv.value.num.get_mpz_t(), lv.value.den.get_mpz_t());
    return out;
}

std::pair<std::int64_t, std::int64_t> ThresholdFn::log2_bounds(std::size_t level_no) const
{
    const auto &lv = level(level_no);
    return {lv.lo, lv.hi};
}

int ThresholdFn::compare(std::size_t a, std::size_t b) const
{
    const auto &x = level(a);
    const auto &y = level(b);
    if (x.infinite || y.infinite) {
        if (x.infinite && y.infinite)
            return 0;
        return x.infinite ? 1 : -1;
    }
    if (x.exact && y.exact)
        return compare_fractions(x.value, y.value);
    if (x.hi < y.lo && x.hi != int_max)
        return -1;
    if (y.hi < x.lo && y.hi != int_max)
        return 1;
    throw std::domain_error("threshold comparison undecidable from bounds");
}

mpz_class f_value(std::size_t l, const mpq_class &big_l, std::uint64_t bit_limit)
{
    if (l < 1)
        throw std::invalid_argument("f_value: level must be >= 1");
    if (big_l < 1)
        throw std::invalid_argument("f_value: L must be >= 1");
    mpq_class q = big_l;
    q.canonicalize();
    std::deque<Fraction> levels{{q.get_num(), q.get_den()}};
    while (levels.size() < l) {
        std::vector<const Fraction *> prev;
        for (const auto &p : levels)
            prev.push_back(&p);
        if (estimate_bits(prev) > bit_limit)
            throw std::length_error("f_value: f(" + std::to_string(levels.size() + 1) + ") exceeds the bit limit");
        levels.push_back(exact_step(prev));
    }
    mpz_class out;
    mpz_cdiv_q(out.get_mpz_t(), levels.back().num.get_mpz_t(), levels.back().den.get_mpz_t());
    return out;
}

} // namespace kstk
