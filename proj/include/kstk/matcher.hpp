#pragma once

#include <kstk/graph.hpp>
#include <kstk/pattern.hpp>

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace kstk {

struct SearchBudget
{
    std::optional<std::uint64_t> node_limit;
    std::optional<double> time_limit; ///< seconds; makes results timing dependent
};

enum class SearchStatus
{
    found,
    absent,
    budget_exhausted,
};

const char *to_string(SearchStatus s);

struct SearchResult
{
    SearchStatus status = SearchStatus::absent;
    std::vector<Vertex> mapping; ///< pattern-graph vertex -> host vertex, when found
    std::uint64_t nodes = 0;
};

/**
 * Backtracking search for a (not necessarily induced) copy of pattern.graph()
 * inside a host graph, which for a topological pattern is exactly a copy of
 * the subdivision.
 *
 * Vertices are placed one at a time. Branch vertices (and pinned vertices)
 * act as anchors; the order first routes the shortest pending segment whose
 * two anchors are already placed, otherwise extends along the shortest
 * segment towards an unplaced anchor, otherwise starts a new component at
 * the highest-degree unplaced anchor. Candidates come from the neighbourhood
 * of the previously placed neighbour and are pruned by degree, adjacency to
 * placed neighbours and host distance to every placed anchor.
 *
 * Patterns whose graph is a single cycle (cycle:L, kst:2,2^k) use a
 * meet-in-the-middle path search instead, which is much faster on the dense
 * hosts produced by hill climbing.
 */
class PatternMatcher
{
public:
    explicit PatternMatcher(Pattern pattern);

    const Pattern &pattern() const { return pattern_; }
    const Graph &pattern_graph() const { return h_; }

    /// pins: (pattern vertex, host vertex) pairs that must hold.
    SearchResult find(const Graph &g, const SearchBudget &budget = {},
                      const std::vector<std::pair<Vertex, Vertex>> &pins = {}) const;

    /// A copy whose edge set uses the host edge x-y; tries one pattern edge
    /// per orbit of directed pattern edges under automorphisms.
    SearchResult find_through_edge(const Graph &g, Vertex x, Vertex y, const SearchBudget &budget = {}) const;

    /// Representatives (a, b) of the orbits of directed pattern edges.
    const std::vector<std::pair<Vertex, Vertex>> &edge_orbit_representatives() const { return edge_reps_; }

    struct Step
    {
        Vertex w = 0;
        std::int64_t parent = -1;
        std::optional<Vertex> pin;
        std::vector<Vertex> adjacent;                       // placed pattern neighbours besides parent
        std::vector<std::pair<Vertex, std::size_t>> reach; // (placed anchor, pattern distance)
    };

private:
    std::vector<Step> plan(const std::vector<std::pair<Vertex, Vertex>> &pins) const;
    SearchResult run(const Graph &g, const std::vector<Step> &steps, const SearchBudget &budget) const;
    SearchResult cycle_through_edge(const Graph &g, Vertex x, Vertex y, const SearchBudget &budget) const;

    Pattern pattern_;
    Graph h_;
    std::vector<std::vector<std::size_t>> dist_h_;
    std::vector<std::pair<Vertex, Vertex>> edge_reps_;
    std::vector<std::vector<Step>> edge_plans_;
    std::vector<Vertex> cycle_order_; // nonempty iff the pattern graph is a single cycle
};

/// Bijection from a to b preserving adjacency and non-adjacency, honouring
/// pins (a vertex, b vertex). Backtracking; meant for small graphs.
std::optional<std::vector<Vertex>> find_isomorphism(const Graph &a, const Graph &b,
                                                    const std::vector<std::pair<Vertex, Vertex>> &pins = {});

} // namespace kstk
