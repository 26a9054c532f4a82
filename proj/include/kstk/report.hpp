#pragma once

#include <kstk/finder.hpp>
#include <kstk/goodness.hpp>
#include <kstk/regularize.hpp>
#include <kstk/witness.hpp>

#include <json.hpp>

#include <optional>
#include <string>

namespace kstk {

using Json = nlohmann::ordered_json;

inline constexpr const char *tool_version = "0.1.0";

/// {"tool", "version", "command", "params"}; callers append their results.
Json report_header(const std::string &command, Json params);

/// Doubles as JSON numbers, except infinities and NaN which become strings.
Json json_number(double x);

/// Per-length path totals and, when given, per-vector spider totals.
Json classification_json(const Graph &g, const PathTables &paths, const SpiderTables *spiders);

Json regularize_json(const RegularizeReport &report);

Json finder_json(const FinderResult &result);

/// Two-space indentation and a trailing newline.
std::string render(const Json &doc);

} // namespace kstk
