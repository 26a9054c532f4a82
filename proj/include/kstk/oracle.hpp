#pragma once

#include <kstk/graph.hpp>
#include <kstk/matcher.hpp>
#include <kstk/pattern.hpp>
#include <kstk/witness.hpp>

#include <cstdint>
#include <optional>

namespace kstk {

struct ContainsResult
{
    SearchStatus status = SearchStatus::absent;
    std::optional<Witness> witness; ///< set iff status == found; always verified
    std::uint64_t nodes = 0;
};

/// Searches G for a copy of the pattern. "absent" is only reported after the
/// search space was exhausted within the budget.
ContainsResult contains(const Graph &g, const PatternDescriptor &pattern, const SearchBudget &budget = {});
ContainsResult contains(const Graph &g, const PatternMatcher &matcher, const SearchBudget &budget = {});

/// Largest graph size supported by canonical_code.
inline constexpr std::size_t canonical_max_vertices = 11;

/// Isomorphism-invariant code: the adjacency bits of the upper triangle
/// under a canonical labelling (individualisation-refinement with twin
/// pruning). Equal codes iff isomorphic, for graphs of equal order.
std::uint64_t canonical_code(const Graph &g);
Graph graph_from_code(std::size_t n, std::uint64_t code);

} // namespace kstk
