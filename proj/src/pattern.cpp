#include <kstk/pattern.hpp>

#include <kstk/generators.hpp>

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace kstk {

namespace {

std::size_t parse_count(std::string_view text, std::string_view what)
{
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
        throw std::invalid_argument("pattern: bad " + std::string(what) + " '" + std::string(text) + "'");
    return value;
}

std::vector<std::string_view> split(std::string_view text, char sep)
{
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        auto pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos)
            break;
        start = pos + 1;
    }
    return parts;
}

} // namespace

PatternDescriptor parse_pattern(std::string_view text)
{
    auto modifier_at = text.find_first_of("^*");
    std::string_view base = text.substr(0, modifier_at);
    std::string_view modifiers = modifier_at == std::string_view::npos ? std::string_view{} : text.substr(modifier_at);

    auto colon = base.find(':');
    if (colon == std::string_view::npos)
        throw std::invalid_argument("pattern: expected 'kind:arguments', got '" + std::string(text) + "'");
    auto kind = base.substr(0, colon);
    auto args = base.substr(colon + 1);

    PatternDescriptor d;
    if (kind == "kst") {
        auto parts = split(args, ',');
        if (parts.size() != 2)
            throw std::invalid_argument("pattern: kst needs 's,t'");
        d.kind = PatternDescriptor::Kind::complete_bipartite;
        d.s = parse_count(parts[0], "s");
        d.t = parse_count(parts[1], "t");
        if (d.s < 1 || d.t < 1)
            throw std::invalid_argument("pattern: kst needs s,t >= 1");
    }
    else if (kind == "cycle") {
        d.kind = PatternDescriptor::Kind::cycle;
        d.length = parse_count(args, "cycle length");
        if (d.length < 3)
            throw std::invalid_argument("pattern: cycle length must be at least 3");
    }
    else if (kind == "spider") {
        d.kind = PatternDescriptor::Kind::spider;
        for (auto part : split(args, ',')) {
            auto len = parse_count(part, "leg length");
            if (len < 1)
                throw std::invalid_argument("pattern: spider legs must have length >= 1");
            d.legs.push_back(len);
        }
    }
    else if (kind == "edges") {
        d.kind = PatternDescriptor::Kind::arbitrary;
        for (auto part : split(args, ',')) {
            auto ends = split(part, '-');
            if (ends.size() != 2)
                throw std::invalid_argument("pattern: edges are written 'u-v'");
            Edge e{static_cast<Vertex>(parse_count(ends[0], "vertex")), static_cast<Vertex>(parse_count(ends[1], "vertex"))};
            if (e.u == e.v)
                throw std::invalid_argument("pattern: loop in edge list");
            d.edges.push_back(e);
            d.vertices = std::max<std::size_t>(d.vertices, std::max(e.u, e.v) + 1);
        }
        Graph check(d.vertices, d.edges); // rejects duplicates
    }
    else
        throw std::invalid_argument("pattern: unknown kind '" + std::string(kind) + "'");

    bool seen_subdivision = false;
    while (!modifiers.empty()) {
        char op = modifiers[0];
        auto next = modifiers.find_first_of("^*", 1);
        auto value = parse_count(modifiers.substr(1, next == std::string_view::npos ? std::string_view::npos : next - 1),
                                 op == '^' ? "subdivision" : "blowup");
        if (op == '^') {
            if (seen_subdivision)
                throw std::invalid_argument("pattern: repeated '^'");
            if (value < 1)
                throw std::invalid_argument("pattern: subdivision k must be >= 1");
            seen_subdivision = true;
            d.subdivision = value;
        }
        else {
            if (d.blowup)
                throw std::invalid_argument("pattern: repeated '*'");
            if (value < 1)
                throw std::invalid_argument("pattern: blowup t must be >= 1");
            if (d.kind != PatternDescriptor::Kind::spider)
                throw std::invalid_argument("pattern: '*t' blowups are defined for spider patterns only");
            d.blowup = value;
        }
        modifiers = next == std::string_view::npos ? std::string_view{} : modifiers.substr(next);
    }
    return d;
}

std::string to_string(const PatternDescriptor &d)
{
    std::string out;
    switch (d.kind) {
    case PatternDescriptor::Kind::complete_bipartite:
        out = "kst:" + std::to_string(d.s) + "," + std::to_string(d.t);
        break;
    case PatternDescriptor::Kind::cycle:
        out = "cycle:" + std::to_string(d.length);
        break;
    case PatternDescriptor::Kind::spider:
        out = "spider:";
        for (std::size_t i = 0; i < d.legs.size(); ++i)
            out += (i ? "," : "") + std::to_string(d.legs[i]);
        break;
    case PatternDescriptor::Kind::arbitrary:
        out = "edges:";
        for (std::size_t i = 0; i < d.edges.size(); ++i)
            out += (i ? "," : "") + std::to_string(d.edges[i].u) + "-" + std::to_string(d.edges[i].v);
        break;
    }
    if (d.subdivision != 1)
        out += "^" + std::to_string(d.subdivision);
    if (d.blowup)
        out += "*" + std::to_string(*d.blowup);
    return out;
}

std::size_t Pattern::vertex_count() const
{
    std::size_t count = branch_count;
    for (const auto &p : paths)
        count += p.length - 1;
    return count;
}

Graph Pattern::graph() const
{
    std::vector<Edge> edges;
    for (std::size_t p = 0; p < paths.size(); ++p) {
        auto seq = path_vertices(p);
        for (std::size_t i = 0; i + 1 < seq.size(); ++i)
            edges.push_back({seq[i], seq[i + 1]});
    }
    return Graph(vertex_count(), edges);
}

std::vector<Vertex> Pattern::path_vertices(std::size_t p) const
{
    auto next = static_cast<Vertex>(branch_count);
    for (std::size_t q = 0; q < p; ++q)
        next += static_cast<Vertex>(paths[q].length - 1);
    std::vector<Vertex> seq{paths[p].from};
    for (std::size_t i = 1; i < paths[p].length; ++i)
        seq.push_back(next++);
    seq.push_back(paths[p].to);
    return seq;
}

Pattern instantiate(const PatternDescriptor &d)
{
    Pattern p;
    p.descriptor = d;
    const std::size_t k = d.subdivision;
    if (k < 1)
        throw std::invalid_argument("pattern: subdivision k must be >= 1");

    switch (d.kind) {
    case PatternDescriptor::Kind::complete_bipartite:
        p.branch_count = d.s + d.t;
        for (std::size_t i = 0; i < d.s; ++i)
            p.roots.push_back(static_cast<Vertex>(i));
        for (std::size_t i = 0; i < d.s; ++i)
            for (std::size_t j = 0; j < d.t; ++j)
                p.paths.push_back({static_cast<Vertex>(i), static_cast<Vertex>(d.s + j), k});
        break;
    case PatternDescriptor::Kind::cycle: {
        if (d.length < 3)
            throw std::invalid_argument("pattern: cycle length must be at least 3");
        const std::size_t total = d.length * k;
        p.branch_count = 2;
        p.paths.push_back({0, 1, total / 2});
        p.paths.push_back({0, 1, total - total / 2});
        break;
    }
    case PatternDescriptor::Kind::spider: {
        if (d.legs.empty())
            throw std::invalid_argument("pattern: spider needs at least one leg");
        const std::size_t s = d.legs.size();
        const std::size_t copies = d.blowup.value_or(1);
        p.branch_count = s + copies;
        for (std::size_t i = 0; i < s; ++i)
            p.roots.push_back(static_cast<Vertex>(i));
        for (std::size_t r = 0; r < copies; ++r)
            for (std::size_t i = 0; i < s; ++i)
                p.paths.push_back({static_cast<Vertex>(s + r), static_cast<Vertex>(i), d.legs[i] * k});
        break;
    }
    case PatternDescriptor::Kind::arbitrary:
        p.branch_count = d.vertices;
        for (const auto &e : d.edges)
            p.paths.push_back({e.u, e.v, k});
        break;
    }
    return p;
}

Graph subdivide(const Graph &f, std::size_t k)
{
    if (k == 0)
        throw std::invalid_argument("subdivide: k must be >= 1");
    std::vector<Edge> edges;
    edges.reserve(f.edge_count() * k);
    auto next = static_cast<Vertex>(f.vertex_count());
    for (const auto &e : f.edges()) {
        Vertex prev = e.u;
        for (std::size_t i = 1; i < k; ++i) {
            edges.push_back({prev, next});
            prev = next++;
        }
        edges.push_back({prev, e.v});
    }
    return Graph(next, edges);
}

RootedPattern spider_pattern(const std::vector<std::size_t> &lengths)
{
    if (lengths.empty())
        throw std::invalid_argument("spider_pattern: need at least one leg");
    std::vector<Edge> edges;
    std::vector<Vertex> roots;
    Vertex next = 1;
    for (auto len : lengths) {
        if (len < 1)
            throw std::invalid_argument("spider_pattern: legs must have length >= 1");
        Vertex prev = 0;
        for (std::size_t i = 0; i < len; ++i) {
            edges.push_back({prev, next});
            prev = next++;
        }
        roots.push_back(prev);
    }
    return {Graph(next, edges), roots};
}

Graph rooted_blowup(const RootedPattern &f, std::size_t t)
{
    const std::size_t n = f.graph.vertex_count();
    if (t < 1)
        throw std::invalid_argument("rooted_blowup: t must be >= 1");
    if (f.roots.empty() || f.roots.size() >= n)
        throw std::invalid_argument("rooted_blowup: roots must be a nonempty proper subset");

    std::vector<std::int64_t> root_index(n, -1);
    for (std::size_t i = 0; i < f.roots.size(); ++i) {
        if (f.roots[i] >= n || root_index[f.roots[i]] != -1)
            throw std::invalid_argument("rooted_blowup: roots must be distinct vertices");
        root_index[f.roots[i]] = static_cast<std::int64_t>(i);
    }
    std::vector<Vertex> non_roots;
    std::vector<std::size_t> non_root_index(n, 0);
    for (Vertex v = 0; v < n; ++v)
        if (root_index[v] < 0) {
            non_root_index[v] = non_roots.size();
            non_roots.push_back(v);
        }

    const std::size_t r = f.roots.size();
    const std::size_t per_copy = non_roots.size();
    auto image = [&](Vertex v, std::size_t copy) -> Vertex {
        if (root_index[v] >= 0)
            return static_cast<Vertex>(root_index[v]);
        return static_cast<Vertex>(r + copy * per_copy + non_root_index[v]);
    };

    std::vector<Edge> edges;
    for (const auto &e : f.graph.edges())
        if (root_index[e.u] >= 0 && root_index[e.v] >= 0)
            edges.push_back({image(e.u, 0), image(e.v, 0)});
    for (std::size_t copy = 0; copy < t; ++copy)
        for (const auto &e : f.graph.edges())
            if (root_index[e.u] < 0 || root_index[e.v] < 0)
                edges.push_back({image(e.u, copy), image(e.v, copy)});
    return Graph(r + t * per_copy, edges);
}

} // namespace kstk
