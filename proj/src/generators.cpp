#include <kstk/generators.hpp>

#include <algorithm>
#include <random>
#include <stdexcept>
#include <unordered_set>

namespace kstk {

Graph complete_bipartite(std::size_t s, std::size_t t)
{
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < t; ++j)
            edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(s + j)});
    return Graph(s + t, edges);
}

Graph complete_graph(std::size_t n)
{
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            edges.push_back({u, v});
    return Graph(n, edges);
}

Graph cycle_graph(std::size_t len)
{
    if (len < 3)
        throw std::invalid_argument("cycle length must be at least 3");
    std::vector<Edge> edges;
    for (Vertex v = 0; v < len; ++v)
        edges.push_back({v, static_cast<Vertex>((v + 1) % len)});
    return Graph(len, edges);
}

Graph path_graph(std::size_t vertices)
{
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < vertices; ++v)
        edges.push_back({v, v + 1});
    return Graph(vertices, edges);
}

Graph star_graph(std::size_t leaves)
{
    std::vector<Edge> edges;
    for (Vertex v = 1; v <= leaves; ++v)
        edges.push_back({0, v});
    return Graph(leaves + 1, edges);
}

Graph petersen_graph()
{
    std::vector<Edge> edges;
    for (Vertex i = 0; i < 5; ++i) {
        edges.push_back({i, static_cast<Vertex>((i + 1) % 5)});
        edges.push_back({i, i + 5});
        edges.push_back({i + 5, static_cast<Vertex>(5 + (i + 2) % 5)});
    }
    return Graph(10, edges);
}

Graph random_gnm(std::size_t n, std::size_t m, std::uint64_t seed)
{
    const std::uint64_t pairs = n < 2 ? 0 : static_cast<std::uint64_t>(n) * (n - 1) / 2;
    if (m > pairs)
        throw std::invalid_argument("random graph: m exceeds n(n-1)/2");

    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    edges.reserve(m);
    if (pairs <= (std::uint64_t{1} << 22)) {
        std::vector<Edge> all;
        all.reserve(pairs);
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                all.push_back({u, v});
        // partial Fisher-Yates
        for (std::size_t i = 0; i < m; ++i) {
            std::uniform_int_distribution<std::size_t> pick(i, all.size() - 1);
            std::swap(all[i], all[pick(rng)]);
            edges.push_back(all[i]);
        }
    }
    else {
        std::unordered_set<std::uint64_t> taken;
        std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
        while (edges.size() < m) {
            Vertex u = pick(rng), v = pick(rng);
            if (u == v)
                continue;
            if (u > v)
                std::swap(u, v);
            if (taken.insert((static_cast<std::uint64_t>(u) << 32) | v).second)
                edges.push_back({u, v});
        }
    }
    return Graph(n, edges);
}

Graph relabel(const Graph &g, std::span<const Vertex> perm)
{
    if (perm.size() != g.vertex_count())
        throw std::invalid_argument("relabel: permutation size mismatch");
    std::vector<Edge> edges;
    edges.reserve(g.edge_count());
    for (const auto &e : g.edges())
        edges.push_back({perm[e.u], perm[e.v]});
    return Graph(g.vertex_count(), edges);
}

Graph disjoint_union(const Graph &a, const Graph &b)
{
    std::vector<Edge> edges = a.edges();
    const auto shift = static_cast<Vertex>(a.vertex_count());
    for (const auto &e : b.edges())
        edges.push_back({e.u + shift, e.v + shift});
    return Graph(a.vertex_count() + b.vertex_count(), edges);
}

} // namespace kstk
