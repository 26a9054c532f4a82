#include <kstk/oracle.hpp>

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace kstk {

ContainsResult contains(const Graph &g, const PatternMatcher &matcher, const SearchBudget &budget)
{
    auto r = matcher.find(g, budget);
    ContainsResult out;
    out.status = r.status;
    out.nodes = r.nodes;
    if (r.status == SearchStatus::found) {
        out.witness = witness_from_mapping(matcher.pattern(), r.mapping, "oracle");
        auto verdict = verify_embedding(g, *out.witness);
        if (!verdict)
            throw std::logic_error("oracle produced an invalid witness: " + verdict.reason);
    }
    return out;
}

ContainsResult contains(const Graph &g, const PatternDescriptor &pattern, const SearchBudget &budget)
{
    return contains(g, PatternMatcher(instantiate(pattern)), budget);
}

namespace {

using Cells = std::vector<std::vector<Vertex>>;

std::size_t pair_index(std::size_t i, std::size_t j, std::size_t n)
{
    // Row-major position of (i, j), i < j, in the strict upper triangle.
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

struct Canon
{
    std::size_t n;
    std::vector<std::uint32_t> adj; // bitmask rows
    std::uint64_t best = 0;
    bool have_best = false;

    void refine(Cells &cells) const
    {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t s = 0; s < cells.size(); ++s) {
                std::uint32_t splitter = 0;
                for (auto v : cells[s])
                    splitter |= 1u << v;
                Cells next;
                for (const auto &cell : cells) {
                    if (cell.size() == 1) {
                        next.push_back(cell);
                        continue;
                    }
                    std::vector<std::pair<int, Vertex>> keyed;
                    for (auto v : cell)
                        keyed.push_back({std::popcount(adj[v] & splitter), v});
                    std::stable_sort(keyed.begin(), keyed.end(),
                                     [](const auto &a, const auto &b) { return a.first < b.first; });
                    std::size_t start = 0;
                    for (std::size_t i = 1; i <= keyed.size(); ++i)
                        if (i == keyed.size() || keyed[i].first != keyed[start].first) {
                            std::vector<Vertex> part;
                            for (std::size_t j = start; j < i; ++j)
                                part.push_back(keyed[j].second);
                            next.push_back(std::move(part));
                            start = i;
                        }
                    if (next.size() > 0 && keyed.front().first != keyed.back().first)
                        changed = true;
                }
                cells = std::move(next);
            }
        }
    }

    std::uint64_t code_of(const Cells &cells) const
    {
        std::vector<Vertex> at(n);
        for (std::size_t i = 0; i < n; ++i)
            at[i] = cells[i][0];
        std::uint64_t code = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (adj[at[i]] >> at[j] & 1u)
                    code |= std::uint64_t{1} << pair_index(i, j, n);
        return code;
    }

    bool twins(Vertex u, Vertex v) const
    {
        const std::uint32_t mask = ~((1u << u) | (1u << v));
        return (adj[u] & mask) == (adj[v] & mask);
    }

    void search(Cells cells)
    {
        refine(cells);
        std::size_t target = cells.size();
        for (std::size_t i = 0; i < cells.size(); ++i)
            if (cells[i].size() > 1) {
                target = i;
                break;
            }
        if (target == cells.size()) {
            auto code = code_of(cells);
            if (!have_best || code > best) {
                best = code;
                have_best = true;
            }
            return;
        }
        std::vector<Vertex> tried;
        for (auto v : cells[target]) {
            bool redundant = false;
            for (auto u : tried)
                if (twins(u, v)) {
                    redundant = true;
                    break;
                }
            if (redundant)
                continue;
            tried.push_back(v);
            Cells next;
            for (std::size_t i = 0; i < cells.size(); ++i) {
                if (i != target) {
                    next.push_back(cells[i]);
                    continue;
                }
                next.push_back({v});
                std::vector<Vertex> rest;
                for (auto w : cells[i])
                    if (w != v)
                        rest.push_back(w);
                next.push_back(std::move(rest));
            }
            search(std::move(next));
        }
    }
};

} // namespace

std::uint64_t canonical_code(const Graph &g)
{
    const std::size_t n = g.vertex_count();
    if (n > canonical_max_vertices)
        throw std::invalid_argument("canonical_code: at most 11 vertices supported");
    if (n == 0)
        return 0;
    Canon c{n, std::vector<std::uint32_t>(n, 0)};
    for (const auto &e : g.edges()) {
        c.adj[e.u] |= 1u << e.v;
        c.adj[e.v] |= 1u << e.u;
    }
    Cells start(1);
    for (Vertex v = 0; v < n; ++v)
        start[0].push_back(v);
    c.search(std::move(start));
    return c.best;
}

Graph graph_from_code(std::size_t n, std::uint64_t code)
{
    if (n > canonical_max_vertices)
        throw std::invalid_argument("graph_from_code: at most 11 vertices supported");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (code >> pair_index(i, j, n) & 1u)
                edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
    return Graph(n, edges);
}

} // namespace kstk
