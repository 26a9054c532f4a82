#pragma once

#include <kstk/pattern.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace kstk {

struct NRange
{
    std::size_t start = 0;
    std::size_t stop = 0;
    std::size_t step = 1;

    std::vector<std::size_t> values() const;
};

/// "A:B:S" or "A:B" (step 1). Throws std::invalid_argument on an empty or
/// malformed range.
NRange parse_n_range(const std::string &text);

struct SweepConfig
{
    enum class Mode
    {
        hillclimb,
        random_threshold, ///< a single random-order saturation, no hill climbing
    };

    PatternDescriptor pattern;
    NRange n_range;
    std::size_t seeds = 1;
    Mode mode = Mode::hillclimb;
    std::size_t iterations = 100;
    unsigned threads = 1;
    bool timing = false; ///< record wall_ms; otherwise it is written as 0
};

struct SweepRow
{
    std::size_t n = 0;
    std::uint64_t seed = 0;
    std::size_t edges = 0;
    bool verified = false;
    std::uint64_t wall_ms = 0;
};

struct SweepResult
{
    std::vector<SweepRow> rows; ///< (n, seed) order
    std::optional<double> slope;
    std::optional<double> theory;
};

/// Exponent of the known upper bound on ex(n, H), where one applies.
std::optional<double> theory_exponent(const PatternDescriptor &pattern);

/// Least-squares slope of log(edges) against log(n), using the best edge
/// count per n over the largest half of the distinct n values.
std::optional<double> fit_slope(const std::vector<SweepRow> &rows);

/// Runs every (n, seed) cell, re-verifying each graph as free and
/// edge-maximal. Throws std::runtime_error if any row fails verification.
SweepResult run_sweep(const SweepConfig &config);

/// Header `n,seed,edges,verified,wall_ms`, one line per row, then the
/// `# slope=` and `# theory=` summary lines.
std::string sweep_csv(const SweepConfig &config, const SweepResult &result);

} // namespace kstk
