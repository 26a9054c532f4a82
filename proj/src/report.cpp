#include <kstk/report.hpp>

#include <cmath>

namespace kstk {

namespace {

Json totals_json(const LevelTotals &t, double ratio)
{
    Json j;
    j["objects"] = t.objects;
    j["admissible"] = t.admissible;
    j["good"] = t.good;
    j["admissible_not_good"] = t.admissible_not_good();
    j["not_good_ratio"] = json_number(ratio);
    return j;
}

double path_ratio(const Graph &g, std::uint64_t not_good, std::size_t length)
{
    const double delta = static_cast<double>(g.min_degree());
    if (not_good == 0)
        return 0.0;
    if (delta == 0)
        return INFINITY;
    return static_cast<double>(not_good) /
           (static_cast<double>(g.vertex_count()) * std::pow(delta, static_cast<double>(length)));
}

} // namespace

Json report_header(const std::string &command, Json params)
{
    Json j;
    j["tool"] = "kstk";
    j["version"] = tool_version;
    j["command"] = command;
    j["params"] = std::move(params);
    return j;
}

Json json_number(double x)
{
    if (std::isnan(x))
        return "nan";
    if (std::isinf(x))
        return x > 0 ? "inf" : "-inf";
    return x;
}

Json classification_json(const Graph &g, const PathTables &paths, const SpiderTables *spiders)
{
    Json j;
    j["graph"] = {{"n", g.vertex_count()}, {"m", g.edge_count()}, {"min_degree", g.min_degree()}};
    j["thresholds"] = paths.thresholds().describe();
    Json levels = Json::array();
    for (std::size_t len = 1; len <= paths.max_length(); ++len) {
        const auto &t = paths.totals(len);
        Json row = {{"length", len}};
        row.update(totals_json(t, path_ratio(g, t.admissible_not_good(), len)));
        levels.push_back(std::move(row));
    }
    j["paths"] = std::move(levels);
    if (spiders) {
        Json vectors = Json::array();
        for (const auto &mu : spiders->vectors()) {
            Json row = {{"lv", to_string(mu)}};
            row.update(totals_json(spiders->totals(mu), not_good_ratio(g, *spiders, mu)));
            vectors.push_back(std::move(row));
        }
        j["spiders"] = std::move(vectors);
    }
    return j;
}

Json regularize_json(const RegularizeReport &r)
{
    Json j;
    j["m"] = r.m;
    j["e"] = r.edges;
    j["achieved_k"] = json_number(r.achieved_k);
    j["density_exponent"] = json_number(r.density_exponent);
    j["theoretical_k_log2"] = json_number(r.theoretical_k_log2);
    j["theoretical_k"] = json_number(r.theoretical_k);
    j["vertices"] = r.vertices;
    return j;
}

Json finder_json(const FinderResult &result)
{
    Json j;
    j["found"] = result.witness.has_value();
    j["route"] = result.witness ? Json(result.witness->route) : Json(nullptr);
    j["delta"] = result.delta;
    j["oracle_used"] = result.oracle_used;
    j["oracle_status"] = result.oracle_used ? Json(to_string(result.oracle_status)) : Json(nullptr);
    Json attempts = Json::array();
    for (const auto &a : result.attempts)
        attempts.push_back({{"lv", to_string(a.lv)},
                            {"not_good", a.not_good},
                            {"family", a.family},
                            {"rounds", a.rounds},
                            {"outcome", a.outcome}});
    j["attempts"] = std::move(attempts);
    j["warnings"] = result.warnings;
    j["witness"] = result.witness ? Json::parse(witness_to_json(*result.witness, -1)) : Json(nullptr);
    return j;
}

std::string render(const Json &doc)
{
    return doc.dump(2) + "\n";
}

} // namespace kstk
