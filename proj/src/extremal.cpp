#include <kstk/extremal.hpp>
#include <kstk/generators.hpp>
#include <kstk/oracle.hpp>

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <stdexcept>

namespace kstk {

namespace {

class FreeGraphBuilder
{
public:
    FreeGraphBuilder(std::size_t n, const PatternMatcher &matcher) :
        n_(n),
        matcher_(matcher),
        present_(pair_count(), 0),
        block_(pair_count())
    {
    }

    std::size_t pair_count() const { return n_ * (n_ - (n_ > 0)) / 2; }
    std::size_t edge_total() const { return edges_; }

    std::size_t id(Vertex i, Vertex j) const
    {
        if (i > j)
            std::swap(i, j);
        return i * n_ - std::size_t{i} * (i + 1) / 2 + (j - i - 1);
    }

    Edge pair(std::size_t p) const { return pairs_.at(p); }

    void index_pairs()
    {
        for (Vertex i = 0; i < n_; ++i)
            for (Vertex j = i + 1; j < n_; ++j)
                pairs_.push_back({i, j});
    }

    Graph graph() const
    {
        std::vector<Edge> edges;
        for (std::size_t p = 0; p < present_.size(); ++p)
            if (present_[p])
                edges.push_back(pairs_[p]);
        return Graph(n_, edges);
    }

    /// Offers pairs in the given order; non-edges are added when that keeps
    /// the graph free, otherwise the blocking copy is recorded.
    void saturate(const std::vector<std::size_t> &order)
    {
        for (auto p : order) {
            if (present_[p])
                continue;
            auto [x, y] = pairs_[p];
            present_[p] = 1;
            Graph with = graph();
            auto r = matcher_.find_through_edge(with, x, y);
            if (r.status == SearchStatus::found) {
                present_[p] = 0;
                auto &blk = block_[p];
                blk.clear();
                for (const auto &e : matcher_.pattern_graph().edges()) {
                    auto q = id(r.mapping[e.u], r.mapping[e.v]);
                    if (q != p)
                        blk.push_back(q);
                }
            }
            else if (r.status == SearchStatus::absent) {
                block_[p].clear();
                ++edges_;
            }
            else
                throw std::logic_error("unbounded search reported budget exhaustion");
        }
    }

    /// Removes the given edges and returns the non-edges that may now be
    /// addable: the removed pairs and every pair whose blocking copy used one.
    std::vector<std::size_t> remove(const std::vector<std::size_t> &gone)
    {
        for (auto p : gone) {
            present_[p] = 0;
            --edges_;
        }
        std::vector<std::size_t> affected;
        for (std::size_t p = 0; p < present_.size(); ++p) {
            if (present_[p] || std::find(gone.begin(), gone.end(), p) != gone.end())
                continue;
            for (auto q : block_[p])
                if (std::find(gone.begin(), gone.end(), q) != gone.end()) {
                    affected.push_back(p);
                    break;
                }
        }
        return affected;
    }

    std::vector<std::size_t> present_list() const
    {
        std::vector<std::size_t> out;
        for (std::size_t p = 0; p < present_.size(); ++p)
            if (present_[p])
                out.push_back(p);
        return out;
    }

    std::size_t n_;
    const PatternMatcher &matcher_;
    std::vector<Edge> pairs_;
    std::vector<char> present_;
    std::vector<std::vector<std::size_t>> block_;
    std::size_t edges_ = 0;
};

template <class Rng>
void shuffle_in_place(std::vector<std::size_t> &v, Rng &rng)
{
    // Explicit Fisher-Yates so the order does not depend on the library.
    for (std::size_t i = v.size(); i > 1; --i) {
        auto j = static_cast<std::size_t>(rng() % i);
        std::swap(v[i - 1], v[j]);
    }
}

} // namespace

HillClimbResult hill_climb_free(std::size_t n, const PatternMatcher &matcher, std::size_t iterations,
                                std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    FreeGraphBuilder b(n, matcher);
    b.index_pairs();
    std::vector<std::size_t> order(b.pair_count());
    for (std::size_t p = 0; p < order.size(); ++p)
        order[p] = p;
    shuffle_in_place(order, rng);
    b.saturate(order);

    HillClimbResult result;
    for (std::size_t it = 0; it < iterations; ++it) {
        auto present = b.present_list();
        if (present.empty())
            break;
        ++result.iterations;
        const std::size_t drop = std::min<std::size_t>(present.size(), 1 + rng() % 2);
        std::vector<std::size_t> gone;
        for (std::size_t k = 0; k < drop; ++k) {
            auto pick = static_cast<std::size_t>(rng() % present.size());
            gone.push_back(present[pick]);
            present.erase(present.begin() + static_cast<std::ptrdiff_t>(pick));
        }
        const auto saved_present = b.present_;
        const auto saved_block = b.block_;
        const auto saved_edges = b.edges_;

        auto retry = b.remove(gone);
        shuffle_in_place(retry, rng);
        // The dropped edges go last so that alternatives get the first chance.
        retry.insert(retry.end(), gone.begin(), gone.end());
        b.saturate(retry);
        if (b.edges_ >= saved_edges)
            ++result.accepted;
        else {
            b.present_ = saved_present;
            b.block_ = saved_block;
            b.edges_ = saved_edges;
        }
    }
    result.graph = b.graph();
    return result;
}

HillClimbResult hill_climb_free(std::size_t n, const PatternDescriptor &pattern, std::size_t iterations,
                                std::uint64_t seed)
{
    return hill_climb_free(n, PatternMatcher(instantiate(pattern)), iterations, seed);
}

FreenessCheck check_free_and_maximal(const Graph &g, const PatternMatcher &matcher)
{
    FreenessCheck out;
    auto r = matcher.find(g);
    out.free = r.status == SearchStatus::absent;
    if (!out.free)
        return out;
    out.maximal = true;
    for (Vertex i = 0; i < g.vertex_count() && out.maximal; ++i)
        for (Vertex j = i + 1; j < g.vertex_count() && out.maximal; ++j)
            if (!g.has_edge(i, j))
                out.maximal = matcher.find_through_edge(g.with_edge(i, j), i, j).status == SearchStatus::found;
    return out;
}

ExtremalResult extremal_number(std::size_t n, const PatternDescriptor &pattern, const SearchBudget &budget,
                               std::size_t fallback_iterations, std::uint64_t fallback_seed)
{
    using clock = std::chrono::steady_clock;
    const auto start = clock::now();
    PatternMatcher matcher(instantiate(pattern));
    ExtremalResult result;
    result.n = n;
    result.pattern = pattern;

    auto heuristic = [&] {
        auto hc = hill_climb_free(n, matcher, fallback_iterations, fallback_seed);
        result.value = hc.graph.edge_count();
        result.witness = hc.graph;
        result.exhaustive = false;
        return result;
    };
    if (n > 10)
        return heuristic();

    std::uint64_t nodes_used = 0;
    auto remaining = [&] {
        SearchBudget b;
        if (budget.node_limit)
            b.node_limit = *budget.node_limit - std::min(*budget.node_limit, nodes_used);
        if (budget.time_limit)
            b.time_limit = std::max(0.0, *budget.time_limit - std::chrono::duration<double>(clock::now() - start).count());
        return b;
    };

    auto full = complete_graph(n);
    auto top = matcher.find(full, remaining());
    nodes_used += top.nodes;
    if (top.status == SearchStatus::budget_exhausted)
        return heuristic();
    if (top.status == SearchStatus::absent) {
        result.value = full.edge_count();
        result.witness = full;
        result.exhaustive = true;
        return result;
    }

    std::set<std::uint64_t> level{canonical_code(Graph(n))};
    for (std::size_t m = 0;; ++m) {
        std::set<std::uint64_t> next, blocked;
        for (auto code : level) {
            Graph g = graph_from_code(n, code);
            for (Vertex i = 0; i < n; ++i)
                for (Vertex j = i + 1; j < n; ++j) {
                    if (g.has_edge(i, j))
                        continue;
                    Graph bigger = g.with_edge(i, j);
                    auto c = canonical_code(bigger);
                    if (next.count(c) || blocked.count(c))
                        continue;
                    auto r = matcher.find_through_edge(bigger, i, j, remaining());
                    nodes_used += r.nodes;
                    if (r.status == SearchStatus::budget_exhausted)
                        return heuristic();
                    (r.status == SearchStatus::found ? blocked : next).insert(c);
                }
        }
        if (next.empty()) {
            result.value = m;
            result.witness = graph_from_code(n, *level.begin());
            result.exhaustive = true;
            return result;
        }
        level = std::move(next);
    }
}

} // namespace kstk
