#include <kstk/spiders.hpp>
#include <kstk/parallel.hpp>

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace kstk {

LengthVector Spider::lengths() const
{
    LengthVector lv;
    for (const auto &leg : legs)
        lv.push_back(leg.size());
    return lv;
}

LeafVector Spider::leaves() const
{
    LeafVector out;
    for (std::size_t i = 0; i < legs.size(); ++i)
        out.push_back(leaf(i));
    return out;
}

std::vector<Vertex> Spider::vertices() const
{
    std::vector<Vertex> out{centre};
    for (const auto &leg : legs)
        out.insert(out.end(), leg.begin(), leg.end());
    return out;
}

std::vector<Vertex> Spider::non_leaf_vertices() const
{
    std::vector<Vertex> out{centre};
    for (const auto &leg : legs)
        if (!leg.empty())
            out.insert(out.end(), leg.begin(), leg.end() - 1);
    return out;
}

Spider subspider(const Spider &s, const LengthVector &target)
{
    if (target.size() != s.legs.size())
        throw std::invalid_argument("subspider: target has the wrong number of legs");
    Spider out;
    out.centre = s.centre;
    for (std::size_t i = 0; i < target.size(); ++i) {
        if (target[i] > s.legs[i].size())
            throw std::invalid_argument("subspider: target exceeds leg length");
        out.legs.emplace_back(s.legs[i].begin(), s.legs[i].begin() + static_cast<std::ptrdiff_t>(target[i]));
    }
    return out;
}

bool is_spider_in(const Graph &g, const Spider &s)
{
    if (s.centre >= g.vertex_count())
        return false;
    std::vector<char> used(g.vertex_count(), 0);
    used[s.centre] = 1;
    for (const auto &leg : s.legs) {
        Vertex prev = s.centre;
        for (auto v : leg) {
            if (v >= g.vertex_count() || used[v] || !g.has_edge(prev, v))
                return false;
            used[v] = 1;
            prev = v;
        }
    }
    return true;
}

std::vector<Spider> enumerate_spiders(const Graph &g, const LengthVector &lv)
{
    std::vector<Spider> out;
    for_each_spider(g, lv, [&](const Spider &s) { out.push_back(s); });
    return out;
}

std::uint64_t count_spiders(const Graph &g, const LengthVector &lv, unsigned threads)
{
    std::vector<std::uint64_t> per_centre(g.vertex_count(), 0);
    parallel_for(g.vertex_count(), threads, [&](std::size_t u) {
        for_each_spider_at(g, lv, static_cast<Vertex>(u), [&](const Spider &) { ++per_centre[u]; });
    });
    std::uint64_t total = 0;
    for (auto c : per_centre)
        total += c;
    return total;
}

std::map<LeafVector, std::uint64_t> count_by_leaf(const std::vector<Spider> &spiders)
{
    std::map<LeafVector, std::uint64_t> counts;
    for (const auto &s : spiders)
        ++counts[s.leaves()];
    return counts;
}

std::map<LeafVector, std::uint64_t> count_by_leaf(const Graph &g, const LengthVector &lv, unsigned threads)
{
    std::vector<std::map<LeafVector, std::uint64_t>> per_centre(g.vertex_count());
    parallel_for(g.vertex_count(), threads, [&](std::size_t u) {
        for_each_spider_at(g, lv, static_cast<Vertex>(u), [&](const Spider &s) { ++per_centre[u][s.leaves()]; });
    });
    std::map<LeafVector, std::uint64_t> counts;
    for (const auto &part : per_centre)
        for (const auto &[leaf, c] : part)
            counts[leaf] += c;
    return counts;
}

LengthVector parse_length_vector(const std::string &text, std::size_t min_entry)
{
    LengthVector lv;
    std::size_t start = 0;
    while (true) {
        auto comma = text.find(',', start);
        auto part = std::string_view(text).substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        std::size_t value = 0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
        if (part.empty() || ec != std::errc{} || ptr != part.data() + part.size())
            throw std::invalid_argument("bad length vector '" + text + "'");
        if (value < min_entry)
            throw std::invalid_argument("length vector entries must be >= " + std::to_string(min_entry));
        lv.push_back(value);
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return lv;
}

std::string to_string(const LengthVector &lv)
{
    std::string out;
    for (std::size_t i = 0; i < lv.size(); ++i)
        out += (i ? "," : "") + std::to_string(lv[i]);
    return out;
}

} // namespace kstk
