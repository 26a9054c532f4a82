#include <kstk/regularize.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

namespace kstk {

double achieved_k(const Graph &g)
{
    const auto lo = g.min_degree();
    const auto hi = g.max_degree();
    if (hi == 0)
        return 1.0;
    if (lo == 0)
        return std::numeric_limits<double>::infinity();
    return static_cast<double>(hi) / static_cast<double>(lo);
}

bool is_almost_regular(const Graph &g, double k)
{
    if (g.vertex_count() == 0)
        throw std::invalid_argument("is_almost_regular: graph has no vertices");
    if (!(k >= 1.0))
        throw std::invalid_argument("is_almost_regular: K must be >= 1");
    return static_cast<double>(g.max_degree()) <= k * static_cast<double>(g.min_degree());
}

namespace {

struct Candidate
{
    std::vector<Vertex> vertices; // sorted host ids
    Graph graph;
    long double score = 0;
};

// Degree-ratio comparison without rounding: hi1/lo1 <= hi2/lo2.
bool ratio_at_most(const Graph &a, const Graph &b)
{
    auto key = [](const Graph &g) -> std::pair<std::uint64_t, std::uint64_t> {
        auto hi = g.max_degree(), lo = g.min_degree();
        if (hi == 0)
            return {1, 1};
        return {hi, lo}; // lo == 0 encodes +inf
    };
    auto [ha, la] = key(a);
    auto [hb, lb] = key(b);
    if (lb == 0)
        return true;
    if (la == 0)
        return false;
    return ha * lb <= hb * la;
}

std::vector<Vertex> peel(const Graph &g)
{
    const std::size_t n = g.vertex_count();
    std::vector<bool> alive(n, true);
    std::vector<std::size_t> degree(n);
    for (Vertex v = 0; v < n; ++v)
        degree[v] = g.degree(v);
    std::size_t alive_count = n;
    std::size_t twice_edges = 2 * g.edge_count();

    // Batch rounds: every vertex below half the current average goes at once.
    while (alive_count > 0) {
        std::vector<Vertex> doomed;
        for (Vertex v = 0; v < n; ++v)
            if (alive[v] && 2 * degree[v] * alive_count < twice_edges)
                doomed.push_back(v);
        if (doomed.empty() || doomed.size() == alive_count)
            break;
        for (auto v : doomed)
            alive[v] = false;
        for (auto v : doomed)
            for (auto w : g.neighbors(v))
                if (alive[w]) {
                    --degree[w];
                    twice_edges -= 2;
                }
        // Edges between two doomed vertices.
        for (auto v : doomed)
            for (auto w : g.neighbors(v))
                if (!alive[w] && v < w && std::binary_search(doomed.begin(), doomed.end(), w))
                    twice_edges -= 2;
        alive_count -= doomed.size();
    }
    std::vector<Vertex> kept;
    for (Vertex v = 0; v < n; ++v)
        if (alive[v])
            kept.push_back(v);
    return kept;
}

} // namespace

RegularizeReport extract_almost_regular(const Graph &g, const RegularizeParams &params)
{
    if (g.vertex_count() == 0)
        throw std::invalid_argument("extract_almost_regular: empty graph");
    if (!(params.epsilon > 0.0 && params.epsilon < 1.0))
        throw std::invalid_argument("extract_almost_regular: epsilon must lie in (0,1)");
    if (!(params.c >= 1.0))
        throw std::invalid_argument("extract_almost_regular: c must be >= 1");

    const long double exponent = 1.0L + params.epsilon;
    auto make = [&](std::vector<Vertex> vertices) {
        Candidate c;
        c.graph = g.induced(vertices);
        c.vertices = std::move(vertices);
        c.score = static_cast<long double>(c.graph.edge_count()) /
                  std::pow(static_cast<long double>(c.vertices.size()), exponent);
        return c;
    };

    std::set<std::vector<Vertex>> seen;
    std::vector<Candidate> candidates;
    auto add = [&](std::vector<Vertex> vertices) {
        if (vertices.empty() || !seen.insert(vertices).second)
            return;
        candidates.push_back(make(std::move(vertices)));
    };

    std::vector<Vertex> all(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        all[v] = v;
    add(all);

    auto core = peel(g);
    add(core);

    // Dyadic bands on degrees inside the peeled graph.
    Graph core_graph = g.induced(core);
    std::map<int, std::vector<Vertex>> bands;
    for (std::size_t i = 0; i < core.size(); ++i) {
        auto d = core_graph.degree(static_cast<Vertex>(i));
        if (d > 0)
            bands[std::bit_width(d) - 1].push_back(core[i]);
    }
    for (const auto &[band, members] : bands) {
        add(members);
        auto next = bands.find(band + 1);
        if (next != bands.end()) {
            std::vector<Vertex> joined;
            std::merge(members.begin(), members.end(), next->second.begin(), next->second.end(),
                       std::back_inserter(joined));
            add(joined);
        }
    }

    const Graph &input = candidates.front().graph;
    const Candidate *best = nullptr;
    for (const auto &c : candidates) {
        if (!ratio_at_most(c.graph, input))
            continue;
        if (!best || c.score > best->score ||
            (c.score == best->score &&
             (c.vertices.size() > best->vertices.size() ||
              (c.vertices.size() == best->vertices.size() && c.vertices < best->vertices))))
            best = &c;
    }

    RegularizeReport report;
    report.subgraph = best->graph;
    report.vertices = best->vertices;
    report.m = best->vertices.size();
    report.edges = best->graph.edge_count();
    report.achieved_k = achieved_k(best->graph);
    if (report.m > 1 && report.edges > 0)
        report.density_exponent =
            std::log(static_cast<double>(report.edges)) / std::log(static_cast<double>(report.m)) - 1.0;
    report.theoretical_k_log2 = std::log2(20.0) + 1.0 / (params.epsilon * params.epsilon) + 1.0;
    report.theoretical_k = std::exp2(report.theoretical_k_log2);
    return report;
}

} // namespace kstk
