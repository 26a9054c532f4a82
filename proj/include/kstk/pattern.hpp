#pragma once

#include <kstk/graph.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kstk {

/**
 * Names a forbidden or sought pattern.
 *
 * CLI syntax: `kst:s,t`, `cycle:L`, `spider:k1,...,ks`, `edges:0-1,1-2,...`,
 * optionally followed by `^k` (k-subdivision) and/or `*t` (rooted t-blowup,
 * spiders only, roots = leaves).
 */
struct PatternDescriptor
{
    enum class Kind
    {
        complete_bipartite,
        cycle,
        spider,
        arbitrary,
    };

    Kind kind = Kind::complete_bipartite;
    std::size_t s = 0;                 ///< complete_bipartite: rooted side
    std::size_t t = 0;                 ///< complete_bipartite: other side
    std::size_t length = 0;            ///< cycle
    std::vector<std::size_t> legs;     ///< spider length vector
    std::size_t vertices = 0;          ///< arbitrary
    std::vector<Edge> edges;           ///< arbitrary
    std::size_t subdivision = 1;
    std::optional<std::size_t> blowup;

    bool operator==(const PatternDescriptor &) const = default;
};

/// Throws std::invalid_argument on malformed or out-of-range descriptors.
PatternDescriptor parse_pattern(std::string_view text);
std::string to_string(const PatternDescriptor &d);

struct PatternPath
{
    Vertex from = 0;
    Vertex to = 0;
    std::size_t length = 1;
};

/**
 * A pattern in topological form: branch vertices 0..branch_count-1 joined by
 * internally vertex-disjoint paths of prescribed lengths.
 *
 * `graph()` lays vertices out as the branch vertices first, then the interior
 * of every path in `paths` order, each interior listed from its `from` end.
 * For kst:s,t^k this coincides with subdivide(complete_bipartite(s,t), k).
 */
struct Pattern
{
    PatternDescriptor descriptor;
    std::size_t branch_count = 0;
    std::vector<Vertex> roots;
    std::vector<PatternPath> paths;

    std::size_t vertex_count() const;
    Graph graph() const;
    /// Vertex ids in graph() along path p, from `from` to `to`.
    std::vector<Vertex> path_vertices(std::size_t p) const;
};

Pattern instantiate(const PatternDescriptor &d);

/// Every edge becomes a path of length k. Original vertices keep their ids;
/// the k-1 new vertices of each edge are appended edge by edge (sorted edge
/// order, listed from the smaller endpoint). Throws on k == 0.
Graph subdivide(const Graph &f, std::size_t k);

struct RootedPattern
{
    Graph graph;
    std::vector<Vertex> roots;
};

/// Centre 0, then the vertices of each leg from the centre outwards; the
/// roots are the leaves.
RootedPattern spider_pattern(const std::vector<std::size_t> &lengths);

/// t copies of F glued along the roots. Layout: roots first (in root order),
/// then for each copy its non-root vertices in increasing original id.
/// Edges between two roots are kept once.
Graph rooted_blowup(const RootedPattern &f, std::size_t t);

} // namespace kstk
