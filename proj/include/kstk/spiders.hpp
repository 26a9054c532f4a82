#pragma once

#include <kstk/graph.hpp>

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <type_traits>
#include <vector>

namespace kstk {

using LengthVector = std::vector<std::size_t>;
using LeafVector = std::vector<Vertex>;

/**
 * A centre plus ordered legs. legs[i] lists the vertices of leg i after the
 * centre, so legs[i].size() is the leg length; an empty leg (generalised
 * spiders only) has the centre as its leaf.
 *
 * The defaulted ordering compares the centre, then the legs lexicographically;
 * this is the canonical order used for enumeration and every arbitrary choice
 * in the finder.
 */
struct Spider
{
    Vertex centre = 0;
    std::vector<std::vector<Vertex>> legs;

    auto operator<=>(const Spider &) const = default;

    LengthVector lengths() const;
    LeafVector leaves() const;
    Vertex leaf(std::size_t i) const { return legs[i].empty() ? centre : legs[i].back(); }
    /// Centre and all leg vertices.
    std::vector<Vertex> vertices() const;
    /// vertices() minus the leaves of the nonempty legs.
    std::vector<Vertex> non_leaf_vertices() const;
};

/// Prefix truncation of every leg to target[i] edges.
/// Throws std::invalid_argument if a target exceeds the leg length.
Spider subspider(const Spider &s, const LengthVector &target);

/// True if `s` is a spider of G: legs follow edges and share only the centre.
bool is_spider_in(const Graph &g, const Spider &s);

namespace detail {

template <class Visit>
bool spider_dfs(const Graph &g, const LengthVector &lv, Spider &cur, std::vector<char> &used, std::size_t leg,
                Visit &visit)
{
    if (leg == lv.size())
        return visit(static_cast<const Spider &>(cur));
    auto &path = cur.legs[leg];
    if (path.size() == lv[leg])
        return spider_dfs(g, lv, cur, used, leg + 1, visit);
    Vertex tip = path.empty() ? cur.centre : path.back();
    for (auto w : g.neighbors(tip)) {
        if (used[w])
            continue;
        used[w] = 1;
        path.push_back(w);
        bool go_on = spider_dfs(g, lv, cur, used, leg, visit);
        path.pop_back();
        used[w] = 0;
        if (!go_on)
            return false;
    }
    return true;
}

} // namespace detail

/**
 * Calls visit(const Spider&) for every spider with centre `centre` and length
 * vector lv, in canonical order. `visit` may return void, or bool where false
 * stops the enumeration. Returns false if stopped.
 */
template <class Visit>
bool for_each_spider_at(const Graph &g, const LengthVector &lv, Vertex centre, Visit &&visit)
{
    Spider cur;
    cur.centre = centre;
    cur.legs.assign(lv.size(), {});
    for (std::size_t i = 0; i < lv.size(); ++i)
        cur.legs[i].reserve(lv[i]);
    std::vector<char> used(g.vertex_count(), 0);
    used[centre] = 1;
    auto wrapped = [&](const Spider &s) {
        if constexpr (std::is_same_v<decltype(visit(s)), void>) {
            visit(s);
            return true;
        }
        else
            return static_cast<bool>(visit(s));
    };
    return detail::spider_dfs(g, lv, cur, used, 0, wrapped);
}

/// Every spider of G with length vector lv, centre ascending then legs
/// lexicographic. Legs of length 0 are allowed (generalised spiders).
template <class Visit>
bool for_each_spider(const Graph &g, const LengthVector &lv, Visit &&visit)
{
    for (Vertex u = 0; u < g.vertex_count(); ++u)
        if (!for_each_spider_at(g, lv, u, visit))
            return false;
    return true;
}

std::vector<Spider> enumerate_spiders(const Graph &g, const LengthVector &lv);

/// Number of spiders with length vector lv, split across `threads` workers
/// by centre.
std::uint64_t count_spiders(const Graph &g, const LengthVector &lv, unsigned threads = 1);

std::map<LeafVector, std::uint64_t> count_by_leaf(const std::vector<Spider> &spiders);
std::map<LeafVector, std::uint64_t> count_by_leaf(const Graph &g, const LengthVector &lv, unsigned threads = 1);

/// Parses "2,2,3" into a length vector; entries must be >= min_entry.
LengthVector parse_length_vector(const std::string &text, std::size_t min_entry = 1);
std::string to_string(const LengthVector &lv);

} // namespace kstk
