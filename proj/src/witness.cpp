#include <kstk/witness.hpp>

#include <json.hpp>

#include <stdexcept>

namespace kstk {

Witness witness_from_mapping(const Pattern &pattern, const std::vector<Vertex> &mapping, std::string route)
{
    if (mapping.size() != pattern.vertex_count())
        throw std::invalid_argument("witness_from_mapping: mapping has the wrong size");
    Witness w;
    w.pattern = pattern.descriptor;
    w.route = std::move(route);
    for (std::size_t b = 0; b < pattern.branch_count; ++b)
        w.branches.push_back(mapping[b]);
    for (auto r : pattern.roots)
        w.roots.push_back(mapping[r]);
    for (std::size_t p = 0; p < pattern.paths.size(); ++p) {
        std::vector<Vertex> path;
        for (auto v : pattern.path_vertices(p))
            path.push_back(mapping[v]);
        w.paths.push_back(std::move(path));
    }
    return w;
}

Verdict verify_embedding(const Graph &g, const Witness &w)
{
    auto fail = [](std::string reason) { return Verdict{false, std::move(reason)}; };

    Pattern pattern;
    try {
        pattern = instantiate(w.pattern);
    }
    catch (const std::exception &e) {
        return fail(std::string("pattern not instantiable: ") + e.what());
    }
    if (w.route != "constructive" && w.route != "oracle")
        return fail("unknown route '" + w.route + "'");
    if (w.branches.size() != pattern.branch_count)
        return fail("expected " + std::to_string(pattern.branch_count) + " branch vertices, got " +
                    std::to_string(w.branches.size()));
    if (w.roots.size() != pattern.roots.size())
        return fail("expected " + std::to_string(pattern.roots.size()) + " roots, got " +
                    std::to_string(w.roots.size()));
    if (w.paths.size() != pattern.paths.size())
        return fail("expected " + std::to_string(pattern.paths.size()) + " paths, got " +
                    std::to_string(w.paths.size()));

    const std::size_t n = g.vertex_count();
    std::vector<char> taken(n, 0);
    for (std::size_t b = 0; b < w.branches.size(); ++b) {
        auto v = w.branches[b];
        if (v >= n)
            return fail("branch vertex " + std::to_string(b) + " maps outside the host");
        if (taken[v])
            return fail("host vertex " + std::to_string(v) + " used by two branch vertices");
        taken[v] = 1;
    }
    for (std::size_t i = 0; i < w.roots.size(); ++i)
        if (w.roots[i] != w.branches[pattern.roots[i]])
            return fail("root " + std::to_string(i) + " disagrees with its branch image");

    for (std::size_t p = 0; p < w.paths.size(); ++p) {
        const auto &path = w.paths[p];
        const auto &spec = pattern.paths[p];
        const std::string name = "path " + std::to_string(p);
        if (path.size() != spec.length + 1)
            return fail(name + " has length " + std::to_string(path.size() - 1) + ", expected " +
                        std::to_string(spec.length));
        if (path.front() != w.branches[spec.from] || path.back() != w.branches[spec.to])
            return fail(name + " does not join the images of its branch vertices");
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
            if (path[i] >= n || path[i + 1] >= n)
                return fail(name + " leaves the host");
            if (!g.has_edge(path[i], path[i + 1]))
                return fail(name + " uses the non-edge " + std::to_string(path[i]) + "-" +
                            std::to_string(path[i + 1]));
        }
        for (std::size_t i = 1; i + 1 < path.size(); ++i) {
            if (taken[path[i]])
                return fail(name + " reuses host vertex " + std::to_string(path[i]));
            taken[path[i]] = 1;
        }
    }
    return {true, ""};
}

std::string witness_to_json(const Witness &w, int indent)
{
    nlohmann::ordered_json j;
    j["pattern"] = to_string(w.pattern);
    j["roots"] = w.roots;
    j["branches"] = w.branches;
    j["paths"] = w.paths;
    j["route"] = w.route;
    return j.dump(indent) + "\n";
}

Witness witness_from_json(const std::string &text)
{
    try {
        auto j = nlohmann::json::parse(text);
        Witness w;
        w.pattern = parse_pattern(j.at("pattern").get<std::string>());
        w.roots = j.at("roots").get<std::vector<Vertex>>();
        w.branches = j.at("branches").get<std::vector<Vertex>>();
        w.paths = j.at("paths").get<std::vector<std::vector<Vertex>>>();
        w.route = j.at("route").get<std::string>();
        return w;
    }
    catch (const nlohmann::json::exception &e) {
        throw std::invalid_argument(std::string("malformed witness: ") + e.what());
    }
}

} // namespace kstk
