#pragma once

// Naive reference implementations used as test oracles. They follow the
// definitions directly and share no code with the library beyond Graph.

#include <kstk/graph.hpp>

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

namespace brute {

using kstk::Graph;
using kstk::Vertex;
using Seq = std::vector<Vertex>;
using Lengths = std::vector<std::size_t>;

/// cap(level): the largest count still considered good.
using CapFn = std::function<std::uint64_t(std::size_t)>;

inline void extend_paths(const Graph &g, Seq &cur, std::size_t len, std::vector<Seq> &out)
{
    if (cur.size() == len + 1) {
        out.push_back(cur);
        return;
    }
    for (Vertex w = 0; w < g.vertex_count(); ++w) {
        if (!g.has_edge(cur.back(), w) || std::find(cur.begin(), cur.end(), w) != cur.end())
            continue;
        cur.push_back(w);
        extend_paths(g, cur, len, out);
        cur.pop_back();
    }
}

/// Every path of the given length, as a vertex sequence read in the direction
/// that makes it lexicographically smaller than its reversal.
inline std::vector<Seq> all_paths(const Graph &g, std::size_t len)
{
    std::vector<Seq> raw;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        Seq cur{v};
        extend_paths(g, cur, len, raw);
    }
    std::set<Seq> unique;
    for (auto p : raw) {
        Seq r(p.rbegin(), p.rend());
        unique.insert(std::min(p, r));
    }
    return {unique.begin(), unique.end()};
}

inline Seq canonical(Seq p)
{
    Seq r(p.rbegin(), p.rend());
    return std::min(p, r);
}

struct PathClassification
{
    // per length: path -> (admissible, good)
    std::vector<std::map<Seq, std::pair<bool, bool>>> flags;
    // per length: endpoint pair (a < b) -> admissible count
    std::vector<std::map<std::pair<Vertex, Vertex>, std::uint64_t>> counts;

    bool good(const Seq &p) const { return flags.at(p.size() - 1).at(canonical(p)).second; }
};

/// Literal recursive definition: length-1 paths are admissible and good; a
/// longer path is admissible iff every proper contiguous subpath is good, and
/// good iff admissible and at most cap(length) admissible paths of its length
/// join its endpoints.
inline PathClassification classify_paths(const Graph &g, std::size_t k, const CapFn &cap)
{
    PathClassification c;
    c.flags.resize(k + 1);
    c.counts.resize(k + 1);
    for (std::size_t len = 1; len <= k; ++len) {
        auto paths = all_paths(g, len);
        std::map<Seq, bool> admissible;
        for (const auto &p : paths) {
            bool ok = true;
            if (len >= 2)
                for (std::size_t sub = 1; sub < len && ok; ++sub)
                    for (std::size_t start = 0; start + sub <= len && ok; ++start) {
                        Seq q(p.begin() + static_cast<std::ptrdiff_t>(start),
                              p.begin() + static_cast<std::ptrdiff_t>(start + sub + 1));
                        ok = c.flags[sub].at(canonical(q)).second;
                    }
            admissible[p] = ok;
            if (ok) {
                auto key = std::minmax(p.front(), p.back());
                ++c.counts[len][{key.first, key.second}];
            }
        }
        for (const auto &p : paths) {
            bool good = admissible[p];
            if (len >= 2 && good) {
                auto key = std::minmax(p.front(), p.back());
                good = c.counts[len][{key.first, key.second}] <= cap(len);
            }
            c.flags[len][p] = {admissible[p], good};
        }
    }
    return c;
}

struct NaiveSpider
{
    Vertex centre;
    std::vector<Seq> legs; // without the centre

    auto operator<=>(const NaiveSpider &) const = default;

    Seq leaves() const
    {
        Seq out;
        for (const auto &l : legs)
            out.push_back(l.empty() ? centre : l.back());
        return out;
    }
};

inline void grow_spider(const Graph &g, const Lengths &lv, NaiveSpider &cur, std::size_t leg,
                        std::vector<NaiveSpider> &out)
{
    if (leg == lv.size()) {
        out.push_back(cur);
        return;
    }
    if (cur.legs[leg].size() == lv[leg]) {
        grow_spider(g, lv, cur, leg + 1, out);
        return;
    }
    Vertex tip = cur.legs[leg].empty() ? cur.centre : cur.legs[leg].back();
    for (Vertex w = 0; w < g.vertex_count(); ++w) {
        if (!g.has_edge(tip, w) || w == cur.centre)
            continue;
        bool used = false;
        for (const auto &l : cur.legs)
            used = used || std::find(l.begin(), l.end(), w) != l.end();
        if (used)
            continue;
        cur.legs[leg].push_back(w);
        grow_spider(g, lv, cur, leg, out);
        cur.legs[leg].pop_back();
    }
}

inline std::vector<NaiveSpider> all_spiders(const Graph &g, const Lengths &lv)
{
    std::vector<NaiveSpider> out;
    for (Vertex c = 0; c < g.vertex_count(); ++c) {
        NaiveSpider cur{c, std::vector<Seq>(lv.size())};
        grow_spider(g, lv, cur, 0, out);
    }
    return out;
}

struct SpiderClassification
{
    std::map<Lengths, std::map<NaiveSpider, std::pair<bool, bool>>> flags;
    std::map<Lengths, std::map<Seq, std::uint64_t>> counts; // admissible per leaf vector
};

/// Literal recursive definition over every mu with 1 <= mu <= lv: (1,...,1)
/// spiders are admissible; otherwise admissible iff every full leg is a good
/// path and, for every leg i and 1 <= j < mu_i, the spider with leg i cut to
/// j edges is good.
inline SpiderClassification classify_spiders(const Graph &g, const Lengths &lv, const PathClassification &paths,
                                             const CapFn &cap)
{
    std::vector<Lengths> order;
    Lengths mu(lv.size(), 1);
    while (true) {
        order.push_back(mu);
        std::size_t i = 0;
        while (i < mu.size() && mu[i] == lv[i])
            mu[i++] = 1;
        if (i == mu.size())
            break;
        ++mu[i];
    }
    auto total = [](const Lengths &m) {
        std::size_t t = 0;
        for (auto x : m)
            t += x;
        return t;
    };
    std::stable_sort(order.begin(), order.end(), [&](const Lengths &a, const Lengths &b) { return total(a) < total(b); });

    SpiderClassification c;
    for (const auto &m : order) {
        auto spiders = all_spiders(g, m);
        std::map<NaiveSpider, bool> admissible;
        auto &counts = c.counts[m];
        for (const auto &sp : spiders) {
            bool ok = true;
            bool base = std::all_of(m.begin(), m.end(), [](std::size_t x) { return x == 1; });
            if (!base) {
                for (const auto &leg : sp.legs) {
                    Seq full{sp.centre};
                    full.insert(full.end(), leg.begin(), leg.end());
                    ok = ok && paths.good(full);
                }
                for (std::size_t i = 0; i < m.size() && ok; ++i)
                    for (std::size_t j = 1; j < m[i] && ok; ++j) {
                        NaiveSpider cut = sp;
                        cut.legs[i].resize(j);
                        Lengths cm = m;
                        cm[i] = j;
                        ok = c.flags.at(cm).at(cut).second;
                    }
            }
            admissible[sp] = ok;
            if (ok)
                ++counts[sp.leaves()];
        }
        auto &flags = c.flags[m];
        for (const auto &sp : spiders) {
            bool good = admissible[sp] && counts[sp.leaves()] <= cap(total(m));
            flags[sp] = {admissible[sp], good};
        }
    }
    return c;
}

/// Plain injective backtracking: pattern vertex i is mapped after 0..i-1 and
/// must be adjacent to the images of its earlier neighbours.
inline bool contains_subgraph(const Graph &host, const Graph &pattern)
{
    const std::size_t p = pattern.vertex_count();
    if (p > host.vertex_count())
        return false;
    std::vector<Vertex> image(p);
    std::vector<char> used(host.vertex_count(), 0);
    std::function<bool(std::size_t)> place = [&](std::size_t i) {
        if (i == p)
            return true;
        for (Vertex h = 0; h < host.vertex_count(); ++h) {
            if (used[h])
                continue;
            bool fits = true;
            for (std::size_t j = 0; j < i && fits; ++j)
                if (pattern.has_edge(static_cast<Vertex>(i), static_cast<Vertex>(j)))
                    fits = host.has_edge(h, image[j]);
            if (!fits)
                continue;
            used[h] = 1;
            image[i] = h;
            if (place(i + 1))
                return true;
            used[h] = 0;
        }
        return false;
    };
    return place(0);
}

/// Refinement conditions re-checked from scratch. `half_ok(count)` decides
/// 2 * count >= f(l).
struct RefineCheck
{
    bool leaf_condition = true;
    bool containment_condition = true;
};

template <class SpiderT>
Seq spider_leaves(const SpiderT &s)
{
    Seq out;
    for (const auto &l : s.legs)
        out.push_back(l.empty() ? s.centre : l.back());
    return out;
}

template <class SpiderT>
Seq truncation_key(const SpiderT &s, std::uint32_t gamma)
{
    Seq key{s.centre};
    for (std::size_t i = 0; i < s.legs.size(); ++i) {
        std::size_t keep = s.legs[i].size() - ((gamma >> i) & 1);
        key.insert(key.end(), s.legs[i].begin(), s.legs[i].begin() + static_cast<std::ptrdiff_t>(keep));
        key.push_back(static_cast<Vertex>(-1)); // leg separator
    }
    return key;
}

/// delta^g <= count * L^2, decided with exact rationals.
inline bool containment_ok(std::uint64_t count, std::uint64_t delta, std::size_t g, const mpq_class &big_l)
{
    mpz_class power = 1;
    for (std::size_t i = 0; i < g; ++i)
        power *= static_cast<unsigned long>(delta);
    return mpq_class(power) <= mpq_class(static_cast<unsigned long>(count)) * big_l * big_l;
}

template <class SpiderT>
RefineCheck check_refined(const std::vector<SpiderT> &family, const std::function<bool(std::uint64_t)> &half_ok,
                          std::uint64_t delta, const mpq_class &big_l)
{
    RefineCheck out;
    if (family.empty())
        return out;
    const std::size_t s = family.front().legs.size();
    std::map<Seq, std::uint64_t> by_leaf;
    for (const auto &m : family)
        ++by_leaf[spider_leaves(m)];
    for (const auto &m : family)
        out.leaf_condition = out.leaf_condition && half_ok(by_leaf[spider_leaves(m)]);
    for (std::uint32_t gamma = 0; gamma < (1u << s); ++gamma) {
        std::map<Seq, std::uint64_t> by_key;
        for (const auto &m : family)
            ++by_key[truncation_key(m, gamma)];
        for (const auto &m : family)
            out.containment_condition = out.containment_condition &&
                                        containment_ok(by_key[truncation_key(m, gamma)], delta,
                                                       static_cast<std::size_t>(__builtin_popcount(gamma)), big_l);
    }
    return out;
}

/// The largest subfamily satisfying both conditions: remove every violator
/// at once and repeat until nothing changes.
template <class SpiderT>
std::vector<SpiderT> refine_fixpoint(std::vector<SpiderT> family, const std::function<bool(std::uint64_t)> &half_ok,
                                     std::uint64_t delta, const mpq_class &big_l)
{
    while (!family.empty()) {
        const std::size_t s = family.front().legs.size();
        std::map<Seq, std::uint64_t> by_leaf;
        for (const auto &m : family)
            ++by_leaf[spider_leaves(m)];
        std::vector<std::map<Seq, std::uint64_t>> by_key(std::size_t{1} << s);
        for (std::uint32_t gamma = 0; gamma < (1u << s); ++gamma)
            for (const auto &m : family)
                ++by_key[gamma][truncation_key(m, gamma)];
        std::vector<SpiderT> kept;
        for (const auto &m : family) {
            bool ok = half_ok(by_leaf[spider_leaves(m)]);
            for (std::uint32_t gamma = 0; gamma < (1u << s) && ok; ++gamma)
                ok = containment_ok(by_key[gamma][truncation_key(m, gamma)], delta,
                                    static_cast<std::size_t>(__builtin_popcount(gamma)), big_l);
            if (ok)
                kept.push_back(m);
        }
        if (kept.size() == family.size())
            break;
        family = std::move(kept);
    }
    return family;
}

} // namespace brute
