#include <kstk/graph.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>

namespace kstk {

ParseError::ParseError(std::size_t line, const std::string &message) :
    std::runtime_error("line " + std::to_string(line) + ": " + message),
    line_(line)
{
}

Graph::Graph(std::size_t n) :
    n_(n)
{
    build();
}

Graph::Graph(std::size_t n, std::span<const Edge> edges) :
    n_(n)
{
    edges_.reserve(edges.size());
    for (const auto &e : edges) {
        if (e.u >= n || e.v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (e.u == e.v)
            throw std::invalid_argument("loop at vertex " + std::to_string(e.u));
        edges_.push_back(e.u < e.v ? e : Edge{e.v, e.u});
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end())
        throw std::invalid_argument("duplicate edge " + std::to_string(dup->u) + " " + std::to_string(dup->v));
    build();
}

void Graph::build()
{
    std::vector<std::size_t> degree(n_ + 1, 0);
    for (const auto &e : edges_) {
        ++degree[e.u];
        ++degree[e.v];
    }
    offsets_.assign(n_ + 1, 0);
    for (std::size_t v = 0; v < n_; ++v)
        offsets_[v + 1] = offsets_[v] + degree[v];
    adjacency_.assign(offsets_[n_], 0);
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (const auto &e : edges_) {
        adjacency_[fill[e.u]++] = e.v;
        adjacency_[fill[e.v]++] = e.u;
    }
    for (std::size_t v = 0; v < n_; ++v)
        std::sort(adjacency_.begin() + offsets_[v], adjacency_.begin() + offsets_[v + 1]);
}

bool Graph::has_edge(Vertex u, Vertex v) const
{
    if (u >= n_ || v >= n_)
        return false;
    if (degree(u) > degree(v))
        std::swap(u, v);
    auto row = neighbors(u);
    return std::binary_search(row.begin(), row.end(), v);
}

std::size_t Graph::min_degree() const
{
    std::size_t best = n_ == 0 ? 0 : degree(0);
    for (Vertex v = 1; v < n_; ++v)
        best = std::min(best, degree(v));
    return best;
}

std::size_t Graph::max_degree() const
{
    std::size_t best = 0;
    for (Vertex v = 0; v < n_; ++v)
        best = std::max(best, degree(v));
    return best;
}

Graph Graph::with_edge(Vertex u, Vertex v) const
{
    std::vector<Edge> edges = edges_;
    edges.push_back({u, v});
    return Graph(n_, edges);
}

Graph Graph::without_edge(Vertex u, Vertex v) const
{
    Edge target = u < v ? Edge{u, v} : Edge{v, u};
    std::vector<Edge> edges;
    edges.reserve(edges_.size());
    for (const auto &e : edges_)
        if (e != target)
            edges.push_back(e);
    return Graph(n_, edges);
}

Graph Graph::induced(std::span<const Vertex> vertices) const
{
    std::vector<std::int64_t> position(n_, -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i] >= n_ || position[vertices[i]] != -1)
            throw std::invalid_argument("induced: vertex list must be distinct and in range");
        position[vertices[i]] = static_cast<std::int64_t>(i);
    }
    std::vector<Edge> edges;
    for (const auto &e : edges_)
        if (position[e.u] >= 0 && position[e.v] >= 0)
            edges.push_back({static_cast<Vertex>(position[e.u]), static_cast<Vertex>(position[e.v])});
    return Graph(vertices.size(), edges);
}

namespace {

std::vector<std::string_view> split_fields(std::string_view line)
{
    std::vector<std::string_view> fields;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r')
            ++i;
        if (i > start)
            fields.push_back(line.substr(start, i - start));
    }
    return fields;
}

std::uint64_t parse_number(std::string_view field, std::size_t line_no)
{
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size())
        throw ParseError(line_no, "expected a non-negative integer, got '" + std::string(field) + "'");
    return value;
}

} // namespace

Graph load_graph(std::string_view text)
{
    std::vector<std::string_view> lines;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto next = text.find('\n', pos);
        if (next == std::string_view::npos) {
            lines.push_back(text.substr(pos));
            break;
        }
        lines.push_back(text.substr(pos, next - pos));
        pos = next + 1;
    }

    if (lines.empty() || split_fields(lines[0]).empty())
        throw ParseError(1, "missing 'n m' header");
    auto header = split_fields(lines[0]);
    if (header.size() != 2)
        throw ParseError(1, "header must be 'n m'");
    auto n = parse_number(header[0], 1);
    auto m = parse_number(header[1], 1);
    if (n > std::numeric_limits<Vertex>::max())
        throw ParseError(1, "vertex count too large");

    std::vector<Edge> edges;
    edges.reserve(std::min<std::uint64_t>(m, 1u << 20));
    std::size_t line_no = 1;
    for (; line_no < lines.size() && edges.size() < m; ++line_no) {
        auto fields = split_fields(lines[line_no]);
        if (fields.size() != 2)
            throw ParseError(line_no + 1, "expected 'u v'");
        auto u = parse_number(fields[0], line_no + 1);
        auto v = parse_number(fields[1], line_no + 1);
        if (u >= n || v >= n)
            throw ParseError(line_no + 1, "vertex out of range");
        if (u == v)
            throw ParseError(line_no + 1, "loop at vertex " + std::to_string(u));
        edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
    if (edges.size() < m)
        throw ParseError(line_no + 1, "expected " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
    for (; line_no < lines.size(); ++line_no)
        if (!split_fields(lines[line_no]).empty())
            throw ParseError(line_no + 1, "unexpected content after the last edge");

    // Duplicates are reported against the line of the second occurrence.
    std::vector<std::pair<Edge, std::size_t>> keyed;
    keyed.reserve(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto e = edges[i];
        keyed.push_back({e.u < e.v ? e : Edge{e.v, e.u}, i});
    }
    std::sort(keyed.begin(), keyed.end());
    for (std::size_t i = 1; i < keyed.size(); ++i)
        if (keyed[i].first == keyed[i - 1].first)
            throw ParseError(keyed[i].second + 2, "duplicate edge " + std::to_string(keyed[i].first.u) + " " +
                                                      std::to_string(keyed[i].first.v));

    return Graph(n, edges);
}

Graph load_graph_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return load_graph(buffer.str());
}

std::string to_edge_list(const Graph &g)
{
    std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
    for (const auto &e : g.edges())
        out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    return out;
}

void save_graph_file(const Graph &g, const std::string &path)
{
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    out << to_edge_list(g);
}

} // namespace kstk
