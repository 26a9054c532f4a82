#pragma once

#include <kstk/graph.hpp>
#include <kstk/pattern.hpp>

#include <string>
#include <vector>

namespace kstk {

/**
 * An embedding certificate. `branches[b]` is the host image of pattern
 * branch vertex b, `roots` repeats the images of the pattern roots in root
 * order, and `paths[p]` is the host path for pattern path p, running from the
 * image of its `from` end to the image of its `to` end.
 */
struct Witness
{
    PatternDescriptor pattern;
    std::vector<Vertex> roots;
    std::vector<Vertex> branches;
    std::vector<std::vector<Vertex>> paths;
    std::string route = "oracle"; ///< "constructive" or "oracle"

    bool operator==(const Witness &) const = default;
};

/// Builds a witness from a map of every vertex of pattern.graph() into the host.
Witness witness_from_mapping(const Pattern &pattern, const std::vector<Vertex> &mapping, std::string route);

struct Verdict
{
    bool ok = false;
    std::string reason;

    explicit operator bool() const { return ok; }
};

/// Independent check of a witness against the host graph.
Verdict verify_embedding(const Graph &g, const Witness &w);

/// Fixed key order: pattern, roots, branches, paths, route.
std::string witness_to_json(const Witness &w, int indent = 2);
/// Throws std::invalid_argument on a malformed document.
Witness witness_from_json(const std::string &text);

} // namespace kstk
