#pragma once

#include <kstk/graph.hpp>
#include <kstk/matcher.hpp>
#include <kstk/pattern.hpp>

#include <cstdint>

namespace kstk {

struct ExtremalResult
{
    std::size_t n = 0;
    PatternDescriptor pattern;
    std::size_t value = 0;
    Graph witness;
    bool exhaustive = false;
};

/**
 * ex(n, H). For n <= 10 the H-free graphs are generated level by level by
 * edge count, one representative per isomorphism class, until a level is
 * empty; K_n itself is tried first. Beyond n = 10, or when the budget runs
 * out, the best hill-climbing result is returned with exhaustive = false.
 */
ExtremalResult extremal_number(std::size_t n, const PatternDescriptor &pattern, const SearchBudget &budget = {},
                               std::size_t fallback_iterations = 200, std::uint64_t fallback_seed = 1);

struct HillClimbResult
{
    Graph graph;
    std::size_t iterations = 0;
    std::size_t accepted = 0;
};

/**
 * Randomised edge-maximal H-free graph on n vertices. Pairs are offered in
 * random order and kept when no copy of H appears; each iteration then drops
 * one or two random edges, re-saturates and keeps the result if it has at
 * least as many edges. Deterministic for a given seed.
 */
HillClimbResult hill_climb_free(std::size_t n, const PatternMatcher &matcher, std::size_t iterations,
                                std::uint64_t seed);
HillClimbResult hill_climb_free(std::size_t n, const PatternDescriptor &pattern, std::size_t iterations,
                                std::uint64_t seed);

struct FreenessCheck
{
    bool free = false;
    bool maximal = false;
};

/// Full post-hoc check: no copy of H, and every non-edge would create one.
FreenessCheck check_free_and_maximal(const Graph &g, const PatternMatcher &matcher);

} // namespace kstk
