#include <kstk/sweep.hpp>

#include <kstk/extremal.hpp>
#include <kstk/matcher.hpp>
#include <kstk/parallel.hpp>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <stdexcept>

namespace kstk {

namespace {

std::size_t parse_field(const std::string &text)
{
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
        throw std::invalid_argument("n-range: bad number '" + text + "'");
    return value;
}

std::string format_double(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

// splitmix64 finaliser; decorrelates neighbouring (seed, n) cells
std::uint64_t cell_seed(std::uint64_t seed, std::size_t n)
{
    std::uint64_t z = seed * 0x9e3779b97f4a7c15ULL + n;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace

std::vector<std::size_t> NRange::values() const
{
    std::vector<std::size_t> out;
    for (std::size_t n = start; n <= stop; n += step)
        out.push_back(n);
    return out;
}

NRange parse_n_range(const std::string &text)
{
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (true) {
        auto next = text.find(':', pos);
        parts.push_back(text.substr(pos, next == std::string::npos ? std::string::npos : next - pos));
        if (next == std::string::npos)
            break;
        pos = next + 1;
    }
    if (parts.size() != 2 && parts.size() != 3)
        throw std::invalid_argument("n-range: expected A:B or A:B:S");
    NRange r;
    r.start = parse_field(parts[0]);
    r.stop = parse_field(parts[1]);
    if (parts.size() == 3)
        r.step = parse_field(parts[2]);
    if (r.step < 1)
        throw std::invalid_argument("n-range: step must be >= 1");
    if (r.start > r.stop)
        throw std::invalid_argument("n-range: empty range " + text);
    return r;
}

std::optional<double> theory_exponent(const PatternDescriptor &p)
{
    using Kind = PatternDescriptor::Kind;
    const double k = static_cast<double>(p.subdivision);
    switch (p.kind) {
    case Kind::complete_bipartite: {
        const double s = static_cast<double>(std::min(p.s, p.t));
        return 1.0 + (s - 1.0) / (s * k);
    }
    case Kind::cycle: {
        const std::size_t len = p.length * p.subdivision;
        if (len % 2)
            return 2.0;
        return 1.0 + 2.0 / static_cast<double>(len);
    }
    case Kind::spider: {
        if (!p.blowup)
            return std::nullopt;
        double total = 0;
        for (auto len : p.legs)
            total += static_cast<double>(len) * k;
        return 1.0 + (static_cast<double>(p.legs.size()) - 1.0) / total;
    }
    case Kind::arbitrary:
        return std::nullopt;
    }
    return std::nullopt;
}

std::optional<double> fit_slope(const std::vector<SweepRow> &rows)
{
    std::map<std::size_t, std::size_t> best;
    for (const auto &r : rows)
        best[r.n] = std::max(best[r.n], r.edges);
    std::vector<std::pair<double, double>> points;
    const std::size_t skip = best.size() / 2;
    std::size_t index = 0;
    for (auto [n, e] : best) {
        if (index++ < skip || n < 2 || e == 0)
            continue;
        points.push_back({std::log(static_cast<double>(n)), std::log(static_cast<double>(e))});
    }
    if (points.size() < 2)
        return std::nullopt;
    double mx = 0, my = 0;
    for (auto [x, y] : points) {
        mx += x;
        my += y;
    }
    mx /= static_cast<double>(points.size());
    my /= static_cast<double>(points.size());
    double sxy = 0, sxx = 0;
    for (auto [x, y] : points) {
        sxy += (x - mx) * (y - my);
        sxx += (x - mx) * (x - mx);
    }
    if (sxx == 0)
        return std::nullopt;
    return sxy / sxx;
}

SweepResult run_sweep(const SweepConfig &config)
{
    if (config.seeds < 1)
        throw std::invalid_argument("sweep: seeds must be >= 1");
    const PatternMatcher matcher(instantiate(config.pattern));
    const auto ns = config.n_range.values();
    if (ns.empty())
        throw std::invalid_argument("sweep: empty n-range");

    SweepResult result;
    result.rows.resize(ns.size() * config.seeds);
    parallel_for(result.rows.size(), config.threads, [&](std::size_t cell) {
        SweepRow &row = result.rows[cell];
        row.n = ns[cell / config.seeds];
        row.seed = cell % config.seeds + 1;
        const auto started = std::chrono::steady_clock::now();
        const std::size_t iterations = config.mode == SweepConfig::Mode::hillclimb ? config.iterations : 0;
        auto climbed = hill_climb_free(row.n, matcher, iterations, cell_seed(row.seed, row.n));
        auto check = check_free_and_maximal(climbed.graph, matcher);
        row.edges = climbed.graph.edge_count();
        row.verified = check.free && check.maximal;
        if (config.timing)
            row.wall_ms = static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                                          std::chrono::steady_clock::now() - started)
                                                          .count());
    });
    for (const auto &row : result.rows)
        if (!row.verified)
            throw std::runtime_error("sweep: graph for n=" + std::to_string(row.n) + " seed=" +
                                     std::to_string(row.seed) + " failed the freeness/maximality check");
    result.slope = fit_slope(result.rows);
    result.theory = theory_exponent(config.pattern);
    return result;
}

std::string sweep_csv(const SweepConfig &config, const SweepResult &result)
{
    std::string out = "n,seed,edges,verified,wall_ms\n";
    for (const auto &r : result.rows)
        out += std::to_string(r.n) + "," + std::to_string(r.seed) + "," + std::to_string(r.edges) + "," +
               (r.verified ? "true" : "false") + "," + std::to_string(r.wall_ms) + "\n";
    out += "# slope=" + (result.slope ? format_double(*result.slope) : std::string("n/a")) + "\n";
    out += "# theory=" + (result.theory ? format_double(*result.theory) : std::string("n/a")) + "\n";
    out += "# edges are heuristic lower bounds for ex(n, " + to_string(config.pattern) + ")\n";
    return out;
}

} // namespace kstk
