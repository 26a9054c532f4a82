#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kstk {

using Vertex = std::uint32_t;

struct Edge
{
    Vertex u = 0;
    Vertex v = 0;

    auto operator<=>(const Edge &) const = default;
};

/// Raised by the edge-list reader; `line()` is 1-based.
class ParseError : public std::runtime_error
{
public:
    ParseError(std::size_t line, const std::string &message);

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/**
 * Undirected simple graph on the vertices 0..n-1.
 *
 * Adjacency is stored in compressed rows with every row sorted ascending, so
 * neighbour iteration order is deterministic. Instances are immutable; the
 * `with_edge` / `without_edge` helpers return modified copies.
 */
class Graph
{
public:
    Graph() = default;
    explicit Graph(std::size_t n);
    /// Throws std::invalid_argument on a loop, a repeated edge or an endpoint >= n.
    Graph(std::size_t n, std::span<const Edge> edges);

    std::size_t vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    /// Normalised edges (u < v), sorted.
    const std::vector<Edge> &edges() const noexcept { return edges_; }

    std::span<const Vertex> neighbors(Vertex v) const
    {
        return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
    }

    std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
    bool has_edge(Vertex u, Vertex v) const;

    /// 0 for the empty graph.
    std::size_t min_degree() const;
    std::size_t max_degree() const;

    Graph with_edge(Vertex u, Vertex v) const;
    Graph without_edge(Vertex u, Vertex v) const;

    /// Subgraph induced by `vertices`; vertex vertices[i] becomes i.
    Graph induced(std::span<const Vertex> vertices) const;

    bool operator==(const Graph &other) const { return n_ == other.n_ && edges_ == other.edges_; }

private:
    void build();

    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_{0};
    std::vector<Vertex> adjacency_;
};

/// Reads the "n m" header followed by m "u v" lines.
Graph load_graph(std::string_view text);
Graph load_graph_file(const std::string &path);

/// Inverse of load_graph; edges are written in sorted order.
std::string to_edge_list(const Graph &g);
void save_graph_file(const Graph &g, const std::string &path);

} // namespace kstk
