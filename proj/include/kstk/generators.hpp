#pragma once

#include <kstk/graph.hpp>

#include <cstdint>
#include <span>

namespace kstk {

/// Parts are 0..s-1 and s..s+t-1.
Graph complete_bipartite(std::size_t s, std::size_t t);
Graph complete_graph(std::size_t n);
/// Requires len >= 3; vertex i is joined to i+1 mod len.
Graph cycle_graph(std::size_t len);
Graph path_graph(std::size_t vertices);
Graph star_graph(std::size_t leaves);
Graph petersen_graph();

/// Uniform G(n, m); identical seeds give identical graphs.
Graph random_gnm(std::size_t n, std::size_t m, std::uint64_t seed);

/// Vertex v of `g` becomes perm[v].
Graph relabel(const Graph &g, std::span<const Vertex> perm);
/// Vertices of `b` are shifted past those of `a`.
Graph disjoint_union(const Graph &a, const Graph &b);

} // namespace kstk
