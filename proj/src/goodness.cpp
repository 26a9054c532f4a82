#include <kstk/goodness.hpp>
#include <kstk/parallel.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace kstk {

namespace {

std::uint64_t pair_key(Vertex a, Vertex b)
{
    if (a > b)
        std::swap(a, b);
    return (std::uint64_t{a} << 32) | b;
}

std::uint64_t lookup(const std::unordered_map<std::uint64_t, std::uint64_t> &map, std::uint64_t key)
{
    auto it = map.find(key);
    return it == map.end() ? 0 : it->second;
}

void merge_into(std::unordered_map<std::uint64_t, std::uint64_t> &target,
                const std::vector<std::unordered_map<std::uint64_t, std::uint64_t>> &parts)
{
    std::size_t total = 0;
    for (const auto &p : parts)
        total += p.size();
    target.reserve(total);
    for (const auto &p : parts)
        for (const auto &[key, c] : p)
            target[key] += c;
}

LevelTotals totals_from(const std::unordered_map<std::uint64_t, std::uint64_t> &counts, std::uint64_t objects,
                        std::uint64_t cap)
{
    LevelTotals t;
    t.objects = objects;
    for (const auto &[key, c] : counts) {
        t.admissible += c;
        if (c <= cap)
            t.good += c;
    }
    return t;
}

} // namespace

std::uint64_t PathTables::count(std::size_t length, Vertex a, Vertex b) const
{
    if (length < 1 || length > max_length())
        throw std::out_of_range("path length outside the classified range");
    if (length == 1)
        return g_->has_edge(a, b) ? 1 : 0;
    return lookup(counts_[length - 1], pair_key(a, b));
}

bool PathTables::within(std::size_t length, Vertex a, Vertex b) const
{
    return length == 1 || lookup(counts_[length - 1], pair_key(a, b)) <= caps_[length - 1];
}

bool PathTables::is_admissible(std::span<const Vertex> path) const
{
    const std::size_t len = path.size() - 1;
    if (path.size() < 2 || len > max_length())
        throw std::out_of_range("path length outside the classified range");
    for (std::size_t m = 2; m < len; ++m)
        for (std::size_t start = 0; start + m <= len; ++start)
            if (!within(m, path[start], path[start + m]))
                return false;
    return true;
}

bool PathTables::is_good(std::span<const Vertex> path) const
{
    return is_admissible(path) && within(path.size() - 1, path.front(), path.back());
}

std::vector<std::pair<Edge, std::uint64_t>> PathTables::pair_counts(std::size_t length) const
{
    std::vector<std::pair<Edge, std::uint64_t>> out;
    if (length == 1) {
        for (const auto &e : g_->edges())
            out.push_back({e, 1});
        return out;
    }
    for (const auto &[key, c] : counts_.at(length - 1))
        out.push_back({Edge{static_cast<Vertex>(key >> 32), static_cast<Vertex>(key & 0xffffffffu)}, c});
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Visits every path of length `len` starting at v whose far end is larger
// than v, i.e. every undirected path once. `ok` is false once some checked
// suffix failed.
template <class Check, class Visit>
void path_dfs(const Graph &g, std::vector<Vertex> &seq, std::vector<char> &used, std::size_t len, bool ok,
              Check &check, Visit &visit)
{
    const std::size_t cur = seq.size() - 1;
    if (cur == len) {
        if (seq.back() > seq.front())
            visit(seq, ok);
        return;
    }
    for (auto w : g.neighbors(seq.back())) {
        if (used[w])
            continue;
        used[w] = 1;
        seq.push_back(w);
        path_dfs(g, seq, used, len, ok && check(seq), check, visit);
        seq.pop_back();
        used[w] = 0;
    }
}

} // namespace

PathTables classify_paths(const Graph &g, std::size_t k, const ThresholdFn &f, unsigned threads)
{
    if (k < 1)
        throw std::invalid_argument("classify_paths: k must be >= 1");
    PathTables t;
    t.g_ = &g;
    t.f_ = f;
    t.counts_.resize(k);
    t.caps_.resize(k);
    t.totals_.resize(k);
    t.caps_[0] = std::numeric_limits<std::uint64_t>::max();
    t.totals_[0] = {g.edge_count(), g.edge_count(), g.edge_count()};

    const std::size_t n = g.vertex_count();
    for (std::size_t len = 2; len <= k; ++len) {
        t.caps_[len - 1] = f.cap(len);
        std::vector<std::unordered_map<std::uint64_t, std::uint64_t>> parts(n);
        std::vector<std::uint64_t> objects(n, 0);
        parallel_for(n, threads, [&](std::size_t v) {
            std::vector<Vertex> seq{static_cast<Vertex>(v)};
            std::vector<char> used(n, 0);
            used[v] = 1;
            // New suffixes ending at the appended vertex, lengths 2..len-1.
            auto check = [&](const std::vector<Vertex> &s) {
                const std::size_t cur = s.size() - 1;
                for (std::size_t m = 2; m <= std::min(cur, len - 1); ++m)
                    if (!t.within(m, s[cur - m], s[cur]))
                        return false;
                return true;
            };
            auto visit = [&](const std::vector<Vertex> &s, bool ok) {
                ++objects[v];
                if (ok)
                    ++parts[v][pair_key(s.front(), s.back())];
            };
            path_dfs(g, seq, used, len, true, check, visit);
        });
        merge_into(t.counts_[len - 1], parts);
        std::uint64_t total = 0;
        for (auto o : objects)
            total += o;
        t.totals_[len - 1] = totals_from(t.counts_[len - 1], total, t.caps_[len - 1]);
    }
    return t;
}

std::size_t SpiderTables::index_of(const LengthVector &mu) const
{
    auto it = index_.find(mu);
    if (it == index_.end())
        throw std::out_of_range("length vector " + to_string(mu) + " was not classified");
    return it->second;
}

std::uint64_t SpiderTables::pack(const Spider &s, const LengthVector &nu) const
{
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < nu.size(); ++i)
        key |= std::uint64_t{s.legs[i][nu[i] - 1]} << (bits_ * i);
    return key;
}

bool SpiderTables::within(const Spider &s, const LengthVector &nu) const
{
    auto idx = index_of(nu);
    return lookup(counts_[idx], pack(s, nu)) <= caps_[idx];
}

std::uint64_t SpiderTables::count(const LengthVector &mu, const LeafVector &leaves) const
{
    auto idx = index_of(mu);
    if (leaves.size() != top_.size())
        throw std::invalid_argument("leaf vector has the wrong size");
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < leaves.size(); ++i) {
        if (leaves[i] >= n_)
            return 0;
        key |= std::uint64_t{leaves[i]} << (bits_ * i);
    }
    return lookup(counts_[idx], key);
}

namespace {

// All nu with 1 <= nu <= mu other than mu itself.
std::vector<LengthVector> proper_truncations(const LengthVector &mu)
{
    std::vector<LengthVector> out;
    LengthVector nu(mu.size(), 1);
    while (true) {
        if (nu != mu)
            out.push_back(nu);
        std::size_t i = 0;
        while (i < nu.size() && nu[i] == mu[i]) {
            nu[i] = 1;
            ++i;
        }
        if (i == nu.size())
            break;
        ++nu[i];
    }
    return out;
}

bool legs_good(const PathTables &paths, const Spider &s, std::vector<Vertex> &scratch)
{
    for (const auto &leg : s.legs) {
        if (leg.size() < 2)
            continue; // single edges are always good
        scratch.assign(1, s.centre);
        scratch.insert(scratch.end(), leg.begin(), leg.end());
        if (!paths.is_good(scratch))
            return false;
    }
    return true;
}

} // namespace

bool SpiderTables::is_admissible(const Spider &s) const
{
    return status(s).first;
}

bool SpiderTables::is_good(const Spider &s) const
{
    return status(s).second;
}

std::pair<bool, bool> SpiderTables::status(const Spider &s) const
{
    auto mu = s.lengths();
    auto idx = index_of(mu);
    std::vector<Vertex> scratch;
    if (!legs_good(*paths_, s, scratch))
        return {false, false};
    for (const auto &nu : below_[idx])
        if (!within(s, nu))
            return {false, false};
    return {true, lookup(counts_[idx], pack(s, mu)) <= caps_[idx]};
}

std::vector<std::pair<LeafVector, std::uint64_t>> SpiderTables::leaf_counts(const LengthVector &mu) const
{
    std::vector<std::pair<LeafVector, std::uint64_t>> out;
    const std::uint64_t mask = bits_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits_) - 1;
    for (const auto &[key, c] : counts_[index_of(mu)]) {
        LeafVector leaves(top_.size());
        for (std::size_t i = 0; i < leaves.size(); ++i)
            leaves[i] = static_cast<Vertex>((key >> (bits_ * i)) & mask);
        out.push_back({std::move(leaves), c});
    }
    std::sort(out.begin(), out.end());
    return out;
}

SpiderTables classify_spiders(const Graph &g, const LengthVector &lv, const PathTables &paths, unsigned threads)
{
    if (lv.empty())
        throw std::invalid_argument("classify_spiders: empty length vector");
    for (auto l : lv) {
        if (l < 1)
            throw std::invalid_argument("classify_spiders: leg lengths must be >= 1");
        if (l > paths.max_length())
            throw std::invalid_argument("classify_spiders: path tables only cover lengths up to " +
                                        std::to_string(paths.max_length()));
    }
    const std::size_t n = g.vertex_count();
    SpiderTables t;
    t.paths_ = &paths;
    t.n_ = n;
    t.bits_ = std::max(1u, static_cast<unsigned>(std::bit_width(n)));
    if (t.bits_ * lv.size() > 64)
        throw std::invalid_argument("classify_spiders: too many legs for this graph size");
    t.top_ = lv;

    auto all = proper_truncations(lv);
    all.push_back(lv);
    std::sort(all.begin(), all.end(), [](const LengthVector &a, const LengthVector &b) {
        auto sa = std::accumulate(a.begin(), a.end(), std::size_t{0});
        auto sb = std::accumulate(b.begin(), b.end(), std::size_t{0});
        return sa != sb ? sa < sb : a < b;
    });
    t.order_ = all;
    for (std::size_t i = 0; i < all.size(); ++i) {
        t.index_[all[i]] = i;
        t.below_.push_back(proper_truncations(all[i]));
    }
    t.counts_.resize(all.size());
    t.caps_.resize(all.size());
    t.totals_.resize(all.size());

    for (std::size_t idx = 0; idx < all.size(); ++idx) {
        const auto &mu = all[idx];
        t.caps_[idx] = paths.thresholds().cap(std::accumulate(mu.begin(), mu.end(), std::size_t{0}));
        const auto &below = t.below_[idx];
        std::vector<std::unordered_map<std::uint64_t, std::uint64_t>> parts(n);
        std::vector<std::uint64_t> objects(n, 0);
        parallel_for(n, threads, [&](std::size_t u) {
            std::vector<Vertex> scratch;
            for_each_spider_at(g, mu, static_cast<Vertex>(u), [&](const Spider &s) {
                ++objects[u];
                if (!legs_good(paths, s, scratch))
                    return;
                for (const auto &nu : below)
                    if (!t.within(s, nu))
                        return;
                ++parts[u][t.pack(s, mu)];
            });
        });
        merge_into(t.counts_[idx], parts);
        std::uint64_t total = 0;
        for (auto o : objects)
            total += o;
        t.totals_[idx] = totals_from(t.counts_[idx], total, t.caps_[idx]);
    }
    return t;
}

double not_good_ratio(const Graph &g, const SpiderTables &tables, const LengthVector &mu)
{
    const auto &totals = tables.totals(mu);
    const auto delta = g.min_degree();
    if (delta == 0)
        return std::numeric_limits<double>::infinity();
    const auto total = std::accumulate(mu.begin(), mu.end(), std::size_t{0});
    const double denom = static_cast<double>(g.vertex_count()) * std::pow(static_cast<double>(delta), total);
    return static_cast<double>(totals.admissible_not_good()) / denom;
}

} // namespace kstk
