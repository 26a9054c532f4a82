#include <kstk/density.hpp>

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace kstk {

namespace {

std::vector<bool> root_mask(const RootedPattern &f)
{
    std::vector<bool> is_root(f.graph.vertex_count(), false);
    for (auto r : f.roots) {
        if (r >= f.graph.vertex_count())
            throw std::invalid_argument("root out of range");
        is_root[r] = true;
    }
    return is_root;
}

} // namespace

Rational rooted_density(const RootedPattern &f, std::span<const Vertex> s)
{
    if (s.empty())
        throw std::invalid_argument("rooted_density: S must be nonempty");
    auto is_root = root_mask(f);
    std::vector<bool> in_s(f.graph.vertex_count(), false);
    for (auto v : s) {
        if (v >= f.graph.vertex_count() || in_s[v])
            throw std::invalid_argument("rooted_density: S must list distinct vertices");
        if (is_root[v])
            throw std::invalid_argument("rooted_density: S must avoid the roots");
        in_s[v] = true;
    }
    std::int64_t e_s = 0;
    for (const auto &e : f.graph.edges())
        if (in_s[e.u] || in_s[e.v])
            ++e_s;
    return Rational(e_s, static_cast<std::int64_t>(s.size()));
}

Rational rooted_density(const RootedPattern &f)
{
    auto is_root = root_mask(f);
    std::vector<Vertex> s;
    for (Vertex v = 0; v < f.graph.vertex_count(); ++v)
        if (!is_root[v])
            s.push_back(v);
    return rooted_density(f, s);
}

Balance is_balanced(const RootedPattern &f, std::size_t max_exhaustive)
{
    auto is_root = root_mask(f);
    std::vector<Vertex> non_roots;
    for (Vertex v = 0; v < f.graph.vertex_count(); ++v)
        if (!is_root[v])
            non_roots.push_back(v);
    if (non_roots.empty())
        throw std::invalid_argument("is_balanced: pattern has no non-root vertex");
    if (non_roots.size() > max_exhaustive || non_roots.size() > 30)
        return Balance::undecidable;

    const std::size_t m = non_roots.size();
    std::vector<std::size_t> index(f.graph.vertex_count(), m);
    for (std::size_t i = 0; i < m; ++i)
        index[non_roots[i]] = i;

    // Each edge is represented by the bitmask of its non-root endpoints;
    // it counts towards e_S iff the mask meets S.
    std::vector<std::uint32_t> edge_masks;
    for (const auto &e : f.graph.edges()) {
        std::uint32_t mask = 0;
        if (index[e.u] < m)
            mask |= 1u << index[e.u];
        if (index[e.v] < m)
            mask |= 1u << index[e.v];
        edge_masks.push_back(mask);
    }

    const std::uint32_t full = m == 32 ? ~0u : (1u << m) - 1;
    auto e_of = [&](std::uint32_t set) {
        std::int64_t count = 0;
        for (auto mask : edge_masks)
            if (mask & set)
                ++count;
        return count;
    };
    const Rational whole(e_of(full), static_cast<std::int64_t>(m));
    for (std::uint32_t set = 1; set < full; ++set) {
        Rational rho(e_of(set), std::popcount(set));
        if (rho < whole)
            return Balance::unbalanced;
    }
    return Balance::balanced;
}

bool spider_is_balanced(std::span<const std::size_t> lengths)
{
    if (lengths.empty())
        throw std::invalid_argument("spider_is_balanced: need at least one leg");
    const std::size_t total = std::accumulate(lengths.begin(), lengths.end(), std::size_t{0});
    const std::size_t longest = *std::max_element(lengths.begin(), lengths.end());
    return total >= (lengths.size() - 1) * longest;
}

} // namespace kstk
