#include <kstk/matcher.hpp>

#include <algorithm>
#include <chrono>
#include <deque>
#include <functional>
#include <limits>
#include <stdexcept>

namespace kstk {

const char *to_string(SearchStatus s)
{
    switch (s) {
    case SearchStatus::found:
        return "found";
    case SearchStatus::absent:
        return "absent";
    case SearchStatus::budget_exhausted:
        return "budget_exhausted";
    }
    return "?";
}

namespace {

constexpr std::size_t unreachable = std::numeric_limits<std::size_t>::max();
constexpr Vertex unmapped = std::numeric_limits<Vertex>::max();

std::vector<std::size_t> bfs(const Graph &g, Vertex from)
{
    std::vector<std::size_t> dist(g.vertex_count(), unreachable);
    std::deque<Vertex> queue{from};
    dist[from] = 0;
    while (!queue.empty()) {
        auto v = queue.front();
        queue.pop_front();
        for (auto w : g.neighbors(v))
            if (dist[w] == unreachable) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

} // namespace

PatternMatcher::PatternMatcher(Pattern pattern) :
    pattern_(std::move(pattern)),
    h_(pattern_.graph())
{
    for (Vertex v = 0; v < h_.vertex_count(); ++v)
        dist_h_.push_back(bfs(h_, v));

    // Orbits of directed pattern edges under automorphisms of the pattern graph.
    std::vector<std::pair<Vertex, Vertex>> directed;
    for (const auto &e : h_.edges()) {
        directed.push_back({e.u, e.v});
        directed.push_back({e.v, e.u});
    }
    std::sort(directed.begin(), directed.end());
    std::vector<bool> covered(directed.size(), false);
    for (std::size_t i = 0; i < directed.size(); ++i) {
        if (covered[i])
            continue;
        covered[i] = true;
        edge_reps_.push_back(directed[i]);
        for (std::size_t j = i + 1; j < directed.size(); ++j) {
            if (covered[j])
                continue;
            auto [a, b] = directed[i];
            auto [c, d] = directed[j];
            if (find_isomorphism(h_, h_, {{a, c}, {b, d}}))
                covered[j] = true;
        }
    }
    for (const auto &[a, b] : edge_reps_)
        edge_plans_.push_back(plan({{a, 0}, {b, 0}}));

    const std::size_t nh = h_.vertex_count();
    bool two_regular = nh >= 3 && h_.edge_count() == nh;
    for (Vertex v = 0; v < nh && two_regular; ++v)
        two_regular = h_.degree(v) == 2;
    if (two_regular) {
        std::vector<Vertex> order{0};
        Vertex prev = 0, cur = h_.neighbors(0)[0];
        while (cur != 0) {
            order.push_back(cur);
            auto nb = h_.neighbors(cur);
            Vertex next = nb[0] == prev ? nb[1] : nb[0];
            prev = cur;
            cur = next;
        }
        if (order.size() == nh)
            cycle_order_ = std::move(order);
    }
}

namespace {

// Simple path y ... x with `len` edges whose interior avoids x and y, found
// by joining half-paths from both ends at a common middle vertex.
std::optional<std::vector<Vertex>> join_halves(const Graph &g, Vertex x, Vertex y, std::size_t len,
                                               std::uint64_t &nodes, const std::function<bool()> &out_of_budget)
{
    const std::size_t n = g.vertex_count();
    const std::size_t a = len / 2, b = len - a;
    // Half-paths from y with a edges avoiding x, grouped by end vertex.
    std::vector<std::vector<Vertex>> from_y(n);
    std::vector<Vertex> seq{y};
    std::vector<char> used(n, 0);
    used[y] = used[x] = 1;
    bool stop = false;
    auto grow_y = [&](auto &self) -> void {
        if (stop)
            return;
        if (seq.size() == a + 1) {
            auto &bucket = from_y[seq.back()];
            bucket.insert(bucket.end(), seq.begin(), seq.end());
            return;
        }
        for (auto w : g.neighbors(seq.back())) {
            if (used[w])
                continue;
            if (++nodes, out_of_budget()) {
                stop = true;
                return;
            }
            used[w] = 1;
            seq.push_back(w);
            self(self);
            seq.pop_back();
            used[w] = 0;
        }
    };
    grow_y(grow_y);
    if (stop)
        throw SearchStatus::budget_exhausted;

    std::fill(used.begin(), used.end(), 0);
    used[x] = used[y] = 1;
    seq.assign(1, x);
    std::optional<std::vector<Vertex>> found;
    auto grow_x = [&](auto &self) -> void {
        if (found || stop)
            return;
        if (seq.size() == b + 1) {
            const Vertex z = seq.back();
            const auto &bucket = from_y[z];
            for (std::size_t off = 0; off < bucket.size(); off += a + 1) {
                if (++nodes, out_of_budget()) {
                    stop = true;
                    return;
                }
                bool clash = false;
                for (std::size_t i = 1; i < a && !clash; ++i)
                    clash = used[bucket[off + i]];
                if (clash)
                    continue;
                std::vector<Vertex> path(bucket.begin() + static_cast<std::ptrdiff_t>(off),
                                         bucket.begin() + static_cast<std::ptrdiff_t>(off + a + 1));
                path.insert(path.end(), seq.rbegin() + 1, seq.rend());
                found = std::move(path);
                return;
            }
            return;
        }
        for (auto w : g.neighbors(seq.back())) {
            if (used[w])
                continue;
            if (++nodes, out_of_budget()) {
                stop = true;
                return;
            }
            used[w] = 1;
            seq.push_back(w);
            self(self);
            seq.pop_back();
            used[w] = 0;
        }
    };
    grow_x(grow_x);
    if (stop)
        throw SearchStatus::budget_exhausted;
    return found;
}

} // namespace

SearchResult PatternMatcher::cycle_through_edge(const Graph &g, Vertex x, Vertex y, const SearchBudget &budget) const
{
    using clock = std::chrono::steady_clock;
    const auto deadline = budget.time_limit
                              ? clock::now() + std::chrono::duration_cast<clock::duration>(
                                                   std::chrono::duration<double>(*budget.time_limit))
                              : clock::time_point::max();
    SearchResult result;
    auto out_of_budget = [&] {
        return (budget.node_limit && result.nodes > *budget.node_limit) ||
               (budget.time_limit && (result.nodes & 1023) == 0 && clock::now() > deadline);
    };
    const std::size_t len = cycle_order_.size();
    if (len > g.vertex_count()) {
        result.status = SearchStatus::absent;
        return result;
    }
    try {
        auto path = join_halves(g, x, y, len - 1, result.nodes, out_of_budget);
        if (!path) {
            result.status = SearchStatus::absent;
            return result;
        }
        result.status = SearchStatus::found;
        result.mapping.assign(len, 0);
        result.mapping[cycle_order_[0]] = x;
        for (std::size_t i = 1; i < len; ++i)
            result.mapping[cycle_order_[i]] = (*path)[i - 1];
    }
    catch (SearchStatus) {
        result.status = SearchStatus::budget_exhausted;
    }
    return result;
}

std::vector<PatternMatcher::Step> PatternMatcher::plan(const std::vector<std::pair<Vertex, Vertex>> &pins) const
{
    const std::size_t nh = h_.vertex_count();
    std::vector<bool> anchor(nh, false);
    for (std::size_t b = 0; b < pattern_.branch_count; ++b)
        anchor[b] = true;
    for (const auto &[hv, gv] : pins) {
        if (hv >= nh)
            throw std::invalid_argument("pin refers to a vertex outside the pattern");
        anchor[hv] = true;
    }

    std::vector<std::vector<Vertex>> segments;
    for (std::size_t p = 0; p < pattern_.paths.size(); ++p) {
        auto seq = pattern_.path_vertices(p);
        std::size_t start = 0;
        for (std::size_t i = 1; i < seq.size(); ++i)
            if (anchor[seq[i]]) {
                segments.emplace_back(seq.begin() + static_cast<std::ptrdiff_t>(start),
                                      seq.begin() + static_cast<std::ptrdiff_t>(i) + 1);
                start = i;
            }
    }

    std::vector<Step> steps;
    std::vector<bool> placed(nh, false);
    auto place = [&](Vertex w, std::int64_t parent, std::optional<Vertex> pin) {
        if (placed[w])
            throw std::invalid_argument("pattern vertex pinned twice");
        placed[w] = true;
        Step s;
        s.w = w;
        s.parent = parent;
        s.pin = pin;
        steps.push_back(std::move(s));
    };

    for (const auto &[hv, gv] : pins)
        place(hv, -1, gv);
    std::vector<bool> done(segments.size(), false);
    while (steps.size() < nh) {
        // (a) close a segment whose two anchors are placed
        std::size_t pick = segments.size();
        for (std::size_t i = 0; i < segments.size(); ++i)
            if (!done[i] && placed[segments[i].front()] && placed[segments[i].back()] &&
                (pick == segments.size() || segments[i].size() < segments[pick].size()))
                pick = i;
        if (pick < segments.size()) {
            done[pick] = true;
            const auto &seg = segments[pick];
            for (std::size_t i = 1; i + 1 < seg.size(); ++i)
                place(seg[i], seg[i - 1], std::nullopt);
            continue;
        }
        // (b) grow along the shortest segment towards an unplaced anchor
        for (std::size_t i = 0; i < segments.size(); ++i)
            if (!done[i] && (placed[segments[i].front()] != placed[segments[i].back()]) &&
                (pick == segments.size() || segments[i].size() < segments[pick].size()))
                pick = i;
        if (pick < segments.size()) {
            done[pick] = true;
            auto seg = segments[pick];
            if (!placed[seg.front()])
                std::reverse(seg.begin(), seg.end());
            for (std::size_t i = 1; i < seg.size(); ++i)
                place(seg[i], seg[i - 1], std::nullopt);
            continue;
        }
        // (c) start a new component
        Vertex best = unmapped;
        for (Vertex v = 0; v < nh; ++v)
            if (!placed[v] && anchor[v] && (best == unmapped || h_.degree(v) > h_.degree(best)))
                best = v;
        if (best == unmapped)
            for (Vertex v = 0; v < nh && best == unmapped; ++v)
                if (!placed[v])
                    best = v;
        place(best, -1, std::nullopt);
    }

    std::vector<std::size_t> position(nh);
    for (std::size_t i = 0; i < steps.size(); ++i)
        position[steps[i].w] = i;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        auto &s = steps[i];
        for (auto u : h_.neighbors(s.w))
            if (position[u] < i && static_cast<std::int64_t>(u) != s.parent)
                s.adjacent.push_back(u);
        for (std::size_t j = 0; j < i; ++j) {
            auto a = steps[j].w;
            auto d = dist_h_[s.w][a];
            if (anchor[a] && d >= 2 && d != unreachable)
                s.reach.push_back({a, d});
        }
    }
    return steps;
}

SearchResult PatternMatcher::run(const Graph &g, const std::vector<Step> &steps, const SearchBudget &budget) const
{
    using clock = std::chrono::steady_clock;
    const std::size_t n = g.vertex_count();
    const std::size_t nh = h_.vertex_count();
    SearchResult result;
    if (nh > n) {
        result.status = SearchStatus::absent;
        return result;
    }
    for (const auto &s : steps)
        if (s.pin && *s.pin >= n)
            throw std::invalid_argument("pin refers to a vertex outside the host");

    std::vector<Vertex> phi(nh, unmapped);
    std::vector<char> used(n, 0);
    std::vector<std::vector<std::size_t>> dist_cache(n);
    auto dist = [&](Vertex from, Vertex to) {
        auto &row = dist_cache[from];
        if (row.empty())
            row = bfs(g, from);
        return row[to];
    };
    const auto deadline = budget.time_limit
                              ? clock::now() + std::chrono::duration_cast<clock::duration>(
                                                   std::chrono::duration<double>(*budget.time_limit))
                              : clock::time_point::max();
    bool exhausted = false;

    auto recurse = [&](auto &self, std::size_t i) -> bool {
        if (i == steps.size())
            return true;
        const auto &step = steps[i];
        auto attempt = [&](Vertex c) -> bool {
            if (used[c] || g.degree(c) < h_.degree(step.w))
                return false;
            for (auto a : step.adjacent)
                if (!g.has_edge(c, phi[a]))
                    return false;
            for (const auto &[a, d] : step.reach)
                if (dist(phi[a], c) > d)
                    return false;
            ++result.nodes;
            if ((budget.node_limit && result.nodes > *budget.node_limit) ||
                (budget.time_limit && (result.nodes & 1023) == 0 && clock::now() > deadline)) {
                exhausted = true;
                return false;
            }
            phi[step.w] = c;
            used[c] = 1;
            if (self(self, i + 1))
                return true;
            used[c] = 0;
            phi[step.w] = unmapped;
            return false;
        };
        if (step.pin)
            return attempt(*step.pin);
        if (step.parent >= 0) {
            for (auto c : g.neighbors(phi[static_cast<std::size_t>(step.parent)])) {
                if (attempt(c))
                    return true;
                if (exhausted)
                    return false;
            }
            return false;
        }
        for (Vertex c = 0; c < n; ++c) {
            if (attempt(c))
                return true;
            if (exhausted)
                return false;
        }
        return false;
    };

    if (recurse(recurse, 0)) {
        result.status = SearchStatus::found;
        result.mapping = std::move(phi);
    }
    else
        result.status = exhausted ? SearchStatus::budget_exhausted : SearchStatus::absent;
    return result;
}

SearchResult PatternMatcher::find(const Graph &g, const SearchBudget &budget,
                                  const std::vector<std::pair<Vertex, Vertex>> &pins) const
{
    if (cycle_order_.empty() || !pins.empty())
        return run(g, plan(pins), budget);

    // Every copy of a cycle passes through its smallest host edge; edges
    // already shown to lie on no copy are dropped as the scan proceeds.
    SearchResult total;
    total.status = SearchStatus::absent;
    if (cycle_order_.size() > g.vertex_count())
        return total;
    Graph rest = g;
    SearchBudget remaining = budget;
    for (const auto &e : g.edges()) {
        auto r = cycle_through_edge(rest, e.u, e.v, remaining);
        total.nodes += r.nodes;
        if (r.status != SearchStatus::absent) {
            r.nodes = total.nodes;
            return r;
        }
        if (remaining.node_limit)
            *remaining.node_limit -= std::min(*remaining.node_limit, r.nodes);
        rest = rest.without_edge(e.u, e.v);
    }
    return total;
}

SearchResult PatternMatcher::find_through_edge(const Graph &g, Vertex x, Vertex y, const SearchBudget &budget) const
{
    if (!g.has_edge(x, y))
        throw std::invalid_argument("find_through_edge: x-y is not an edge of the host");
    if (!cycle_order_.empty())
        return cycle_through_edge(g, x, y, budget);
    SearchResult total;
    total.status = SearchStatus::absent;
    SearchBudget remaining = budget;
    for (std::size_t i = 0; i < edge_plans_.size(); ++i) {
        auto steps = edge_plans_[i];
        steps[0].pin = x;
        steps[1].pin = y;
        auto r = run(g, steps, remaining);
        total.nodes += r.nodes;
        if (remaining.node_limit)
            *remaining.node_limit -= std::min(*remaining.node_limit, r.nodes);
        if (r.status == SearchStatus::found) {
            r.nodes = total.nodes;
            return r;
        }
        if (r.status == SearchStatus::budget_exhausted)
            total.status = SearchStatus::budget_exhausted;
    }
    return total;
}

std::optional<std::vector<Vertex>> find_isomorphism(const Graph &a, const Graph &b,
                                                    const std::vector<std::pair<Vertex, Vertex>> &pins)
{
    const std::size_t n = a.vertex_count();
    if (n != b.vertex_count() || a.edge_count() != b.edge_count())
        return std::nullopt;
    {
        std::vector<std::size_t> da, db;
        for (Vertex v = 0; v < n; ++v) {
            da.push_back(a.degree(v));
            db.push_back(b.degree(v));
        }
        std::sort(da.begin(), da.end());
        std::sort(db.begin(), db.end());
        if (da != db)
            return std::nullopt;
    }

    std::vector<Vertex> pin_of(n, unmapped);
    for (const auto &[u, v] : pins) {
        if (u >= n || v >= n)
            throw std::invalid_argument("find_isomorphism: pin out of range");
        pin_of[u] = v;
    }

    // Order: pinned vertices, then repeatedly the vertex with most ordered neighbours.
    std::vector<Vertex> order;
    std::vector<bool> ordered(n, false);
    std::vector<std::size_t> links(n, 0);
    auto take = [&](Vertex v) {
        ordered[v] = true;
        order.push_back(v);
        for (auto w : a.neighbors(v))
            ++links[w];
    };
    for (const auto &[u, v] : pins)
        if (!ordered[u])
            take(u);
    while (order.size() < n) {
        Vertex best = unmapped;
        for (Vertex v = 0; v < n; ++v)
            if (!ordered[v] && (best == unmapped || links[v] > links[best] ||
                                (links[v] == links[best] && a.degree(v) > a.degree(best))))
                best = v;
        take(best);
    }
    std::vector<std::int64_t> anchor(n, -1); // an earlier neighbour in the order
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (a.has_edge(order[i], order[j])) {
                anchor[i] = static_cast<std::int64_t>(order[j]);
                break;
            }

    std::vector<Vertex> phi(n, unmapped);
    std::vector<char> used(n, 0);
    auto recurse = [&](auto &self, std::size_t i) -> bool {
        if (i == n)
            return true;
        const Vertex w = order[i];
        auto attempt = [&](Vertex c) -> bool {
            if (used[c] || a.degree(w) != b.degree(c))
                return false;
            for (std::size_t j = 0; j < i; ++j)
                if (a.has_edge(w, order[j]) != b.has_edge(c, phi[order[j]]))
                    return false;
            phi[w] = c;
            used[c] = 1;
            if (self(self, i + 1))
                return true;
            used[c] = 0;
            phi[w] = unmapped;
            return false;
        };
        if (pin_of[w] != unmapped)
            return attempt(pin_of[w]);
        if (anchor[i] >= 0) {
            for (auto c : b.neighbors(phi[static_cast<std::size_t>(anchor[i])]))
                if (attempt(c))
                    return true;
            return false;
        }
        for (Vertex c = 0; c < n; ++c)
            if (attempt(c))
                return true;
        return false;
    };
    if (!recurse(recurse, 0))
        return std::nullopt;
    return phi;
}

} // namespace kstk
