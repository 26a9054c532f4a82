#include <kstk/extremal.hpp>
#include <kstk/finder.hpp>
#include <kstk/generators.hpp>
#include <kstk/goodness.hpp>
#include <kstk/oracle.hpp>
#include <kstk/regularize.hpp>
#include <kstk/report.hpp>
#include <kstk/spiders.hpp>
#include <kstk/sweep.hpp>
#include <kstk/thresholds.hpp>
#include <kstk/witness.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace kstk;

// Exit codes shared by every command.
constexpr int exit_ok = 0;
constexpr int exit_negative = 1;
constexpr int exit_input_error = 2;
constexpr int exit_internal_error = 3;

struct Globals
{
    unsigned threads = 1;
    bool quiet = false;
};

void emit(const std::string &text, const std::string &out_path, const Globals &globals)
{
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write " + out_path);
    out << text;
    if (!globals.quiet)
        std::cerr << "wrote " << out_path << "\n";
}

std::string read_file(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

SearchBudget budget_from(std::uint64_t node_limit)
{
    SearchBudget b;
    if (node_limit > 0)
        b.node_limit = node_limit;
    return b;
}

Json edges_json(const Graph &g)
{
    Json edges = Json::array();
    for (const auto &e : g.edges())
        edges.push_back({e.u, e.v});
    return edges;
}

struct GenArgs
{
    std::string pattern;
    std::string gnm;
    bool petersen = false;
    std::uint64_t seed = 1;
    std::string out;
};

int run_gen(const GenArgs &a, const Globals &globals)
{
    const int chosen = !a.pattern.empty() + !a.gnm.empty() + a.petersen;
    if (chosen != 1)
        throw std::invalid_argument("gen: give exactly one of --pattern, --gnm, --petersen");
    Graph g;
    if (!a.pattern.empty())
        g = instantiate(parse_pattern(a.pattern)).graph();
    else if (a.petersen)
        g = petersen_graph();
    else {
        auto comma = a.gnm.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("gen: --gnm expects N,M");
        g = random_gnm(std::stoull(a.gnm.substr(0, comma)), std::stoull(a.gnm.substr(comma + 1)), a.seed);
    }
    emit(to_edge_list(g), a.out, globals);
    return exit_ok;
}

struct RegularizeArgs
{
    std::string graph;
    double epsilon = 0.5;
    double c = 1.0;
    std::string out;
    std::string subgraph_out;
};

int run_regularize(const RegularizeArgs &a, const Globals &globals)
{
    if (!(a.epsilon > 0 && a.epsilon < 1))
        throw std::invalid_argument("regularize: epsilon must lie in (0,1)");
    if (!(a.c >= 1))
        throw std::invalid_argument("regularize: c must be >= 1");
    auto g = load_graph_file(a.graph);
    if (g.vertex_count() == 0)
        throw std::invalid_argument("regularize: the graph is empty");
    auto report = extract_almost_regular(g, {a.epsilon, a.c});
    auto doc = report_header("regularize", {{"graph", a.graph}, {"epsilon", a.epsilon}, {"c", a.c}});
    doc["result"] = regularize_json(report);
    emit(render(doc), a.out, globals);
    if (!a.subgraph_out.empty())
        emit(to_edge_list(report.subgraph), a.subgraph_out, globals);
    return exit_ok;
}

struct SpidersArgs
{
    std::string graph;
    std::string lv;
    bool by_leaf = false;
    std::string out;
};

int run_spiders_count(const SpidersArgs &a, const Globals &globals)
{
    auto g = load_graph_file(a.graph);
    auto lv = parse_length_vector(a.lv, 0);
    std::string text;
    if (a.by_leaf) {
        for (std::size_t i = 0; i < lv.size(); ++i)
            text += "leaf_" + std::to_string(i + 1) + ",";
        text += "count\n";
        for (const auto &[leaves, count] : count_by_leaf(g, lv, globals.threads)) {
            for (auto v : leaves)
                text += std::to_string(v) + ",";
            text += std::to_string(count) + "\n";
        }
    }
    else
        text = "lv=" + to_string(lv) + " spiders=" + std::to_string(count_spiders(g, lv, globals.threads)) + "\n";
    emit(text, a.out, globals);
    return exit_ok;
}

struct ClassifyArgs
{
    std::string graph;
    std::size_t k = 2;
    std::string big_l = "1";
    std::string threshold = "paper";
    std::string lv;
    std::string out;
};

int run_classify(const ClassifyArgs &a, const Globals &globals)
{
    auto g = load_graph_file(a.graph);
    const auto big_l = parse_rational(a.big_l);
    auto f = ThresholdFn::parse(a.threshold, big_l);
    std::size_t depth = a.k;
    LengthVector lv;
    if (!a.lv.empty()) {
        lv = parse_length_vector(a.lv);
        depth = std::max(depth, *std::max_element(lv.begin(), lv.end()));
    }
    if (depth < 1)
        throw std::invalid_argument("classify: --k must be >= 1");
    auto paths = classify_paths(g, depth, f, globals.threads);
    std::optional<SpiderTables> spiders;
    if (!lv.empty())
        spiders = classify_spiders(g, lv, paths, globals.threads);

    Json params = {{"graph", a.graph}, {"k", a.k}, {"L", a.big_l}, {"threshold", a.threshold}};
    params["lv"] = a.lv.empty() ? Json(nullptr) : Json(to_string(lv));
    auto doc = report_header("classify", std::move(params));
    doc["result"] = classification_json(g, paths, spiders ? &*spiders : nullptr);
    emit(render(doc), a.out, globals);
    return exit_ok;
}

struct FindArgs
{
    std::string graph;
    std::string pattern;
    std::string threshold = "const:1";
    std::string big_l = "2";
    std::size_t max_family = 200000;
    std::size_t max_starts = 1000;
    std::uint64_t node_limit = 0;
    bool no_oracle = false;
    std::string out;
    std::string witness_out;
};

int run_find(const FindArgs &a, const Globals &globals)
{
    auto g = load_graph_file(a.graph);
    auto pattern = parse_pattern(a.pattern);
    FinderOptions options;
    options.big_l = parse_rational(a.big_l);
    options.thresholds = ThresholdFn::parse(a.threshold, options.big_l);
    options.max_family = a.max_family;
    options.max_starts = a.max_starts;
    options.oracle_fallback = !a.no_oracle;
    options.oracle_budget = budget_from(a.node_limit);
    options.threads = globals.threads;
    auto result = find_blowup(g, pattern, options);

    auto doc = report_header("find", {{"graph", a.graph},
                                      {"pattern", to_string(pattern)},
                                      {"threshold", a.threshold},
                                      {"L", a.big_l},
                                      {"max_family", a.max_family},
                                      {"max_starts", a.max_starts},
                                      {"node_limit", a.node_limit},
                                      {"oracle_fallback", !a.no_oracle}});
    doc["result"] = finder_json(result);
    emit(render(doc), a.out, globals);
    if (result.witness && !a.witness_out.empty())
        emit(witness_to_json(*result.witness) + "\n", a.witness_out, globals);
    if (!globals.quiet)
        for (const auto &w : result.warnings)
            std::cerr << "warning: " << w << "\n";
    return result.witness ? exit_ok : exit_negative;
}

struct OracleArgs
{
    std::string graph;
    std::string pattern;
    std::uint64_t node_limit = 0;
    std::size_t n = 0;
    std::size_t iters = 100;
    std::uint64_t seed = 1;
    std::string out;
};

int run_contains(const OracleArgs &a, const Globals &globals)
{
    auto g = load_graph_file(a.graph);
    auto pattern = parse_pattern(a.pattern);
    auto r = contains(g, pattern, budget_from(a.node_limit));
    auto doc = report_header("oracle contains",
                             {{"graph", a.graph}, {"pattern", to_string(pattern)}, {"node_limit", a.node_limit}});
    doc["status"] = to_string(r.status);
    doc["nodes"] = r.nodes;
    doc["witness"] = r.witness ? Json::parse(witness_to_json(*r.witness, -1)) : Json(nullptr);
    emit(render(doc), a.out, globals);
    return r.status == SearchStatus::found ? exit_ok : exit_negative;
}

int run_extremal(const OracleArgs &a, const Globals &globals)
{
    auto pattern = parse_pattern(a.pattern);
    auto r = extremal_number(a.n, pattern, budget_from(a.node_limit));
    auto doc = report_header("oracle extremal",
                             {{"n", a.n}, {"pattern", to_string(pattern)}, {"node_limit", a.node_limit}});
    doc["value"] = r.value;
    doc["exhaustive"] = r.exhaustive;
    doc["witness_edges"] = edges_json(r.witness);
    emit(render(doc), a.out, globals);
    return exit_ok;
}

int run_hillclimb(const OracleArgs &a, const Globals &globals)
{
    auto pattern = parse_pattern(a.pattern);
    PatternMatcher matcher(instantiate(pattern));
    auto r = hill_climb_free(a.n, matcher, a.iters, a.seed);
    auto check = check_free_and_maximal(r.graph, matcher);
    if (!check.free || !check.maximal)
        throw std::runtime_error("hillclimb: result failed the freeness/maximality check");
    emit(to_edge_list(r.graph), a.out, globals);
    if (!globals.quiet)
        std::cerr << "edges=" << r.graph.edge_count() << " iterations=" << r.iterations << " accepted=" << r.accepted
                  << " (heuristic lower bound)\n";
    return exit_ok;
}

struct SweepArgs
{
    std::string pattern;
    std::string n_range;
    std::size_t seeds = 1;
    std::size_t iters = 100;
    std::string mode = "hillclimb";
    bool timing = false;
    std::string out;
};

int run_sweep_command(const SweepArgs &a, const Globals &globals)
{
    SweepConfig config;
    config.pattern = parse_pattern(a.pattern);
    config.n_range = parse_n_range(a.n_range);
    config.seeds = a.seeds;
    config.iterations = a.iters;
    config.threads = globals.threads;
    config.timing = a.timing;
    if (a.mode == "hillclimb")
        config.mode = SweepConfig::Mode::hillclimb;
    else if (a.mode == "random-threshold")
        config.mode = SweepConfig::Mode::random_threshold;
    else
        throw std::invalid_argument("sweep: unknown mode '" + a.mode + "'");
    if (config.seeds < 1)
        throw std::invalid_argument("sweep: --seeds must be >= 1");
    auto result = run_sweep(config);
    emit(sweep_csv(config, result), a.out, globals);
    return exit_ok;
}

struct VerifyArgs
{
    std::string graph;
    std::string witness;
};

int run_verify(const VerifyArgs &a, const Globals &)
{
    auto g = load_graph_file(a.graph);
    auto w = witness_from_json(read_file(a.witness));
    auto verdict = verify_embedding(g, w);
    if (verdict) {
        std::cout << "ok\n";
        return exit_ok;
    }
    std::cout << "invalid: " << verdict.reason << "\n";
    return exit_negative;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Subdivided complete bipartite graphs: goodness classification, constructive search and oracles"};
    app.require_subcommand(1);
    app.set_version_flag("--version", tool_version);
    Globals globals;
    app.add_option("--threads", globals.threads, "Worker threads")->check(CLI::Range(1u, 1024u));
    app.add_flag("--quiet", globals.quiet, "Suppress informational messages");

    int status = exit_ok;
    std::function<int()> action;

    GenArgs gen;
    auto *gen_cmd = app.add_subcommand("gen", "Write a graph as an edge list");
    gen_cmd->add_option("--pattern", gen.pattern, "Pattern graph, e.g. kst:2,4^2");
    gen_cmd->add_option("--gnm", gen.gnm, "Uniform random graph N,M");
    gen_cmd->add_flag("--petersen", gen.petersen, "The Petersen graph");
    gen_cmd->add_option("--seed", gen.seed, "Seed for --gnm");
    gen_cmd->add_option("--out", gen.out, "Output file (default stdout)");
    gen_cmd->callback([&] { action = [&] { return run_gen(gen, globals); }; });

    RegularizeArgs reg;
    auto *reg_cmd = app.add_subcommand("regularize", "Extract a dense almost-regular induced subgraph");
    reg_cmd->add_option("--graph", reg.graph)->required();
    reg_cmd->add_option("--epsilon", reg.epsilon)->required();
    reg_cmd->add_option("--c", reg.c);
    reg_cmd->add_option("--out", reg.out);
    reg_cmd->add_option("--subgraph-out", reg.subgraph_out, "Write the chosen subgraph as an edge list");
    reg_cmd->callback([&] { action = [&] { return run_regularize(reg, globals); }; });

    SpidersArgs sp;
    auto *sp_cmd = app.add_subcommand("spiders", "Spider enumeration");
    sp_cmd->require_subcommand(1);
    auto *sp_count = sp_cmd->add_subcommand("count", "Count spiders with a given length vector");
    sp_count->add_option("--graph", sp.graph)->required();
    sp_count->add_option("--lv", sp.lv)->required();
    sp_count->add_flag("--by-leaf", sp.by_leaf, "Per-leaf-vector CSV");
    sp_count->add_option("--out", sp.out);
    sp_count->callback([&] { action = [&] { return run_spiders_count(sp, globals); }; });

    ClassifyArgs cl;
    auto *cl_cmd = app.add_subcommand("classify", "Admissible/good totals for paths and spiders");
    cl_cmd->add_option("--graph", cl.graph)->required();
    cl_cmd->add_option("--k", cl.k, "Longest path length");
    cl_cmd->add_option("--L", cl.big_l, "Threshold parameter L");
    cl_cmd->add_option("--threshold", cl.threshold, "paper | const:N | const:inf | table:a,b,...");
    cl_cmd->add_option("--lv", cl.lv, "Spider length vector");
    cl_cmd->add_option("--out", cl.out);
    cl_cmd->callback([&] { action = [&] { return run_classify(cl, globals); }; });

    FindArgs fd;
    auto *fd_cmd = app.add_subcommand("find", "Search for a subdivided K_{s,t} or spider blowup");
    fd_cmd->add_option("--graph", fd.graph)->required();
    fd_cmd->add_option("--pattern", fd.pattern)->required();
    fd_cmd->add_option("--threshold", fd.threshold);
    fd_cmd->add_option("--L", fd.big_l);
    fd_cmd->add_option("--max-family", fd.max_family);
    fd_cmd->add_option("--max-starts", fd.max_starts);
    fd_cmd->add_option("--node-limit", fd.node_limit, "Oracle node budget (0 = unlimited)");
    fd_cmd->add_flag("--no-oracle", fd.no_oracle, "Disable the backtracking fallback");
    fd_cmd->add_option("--out", fd.out);
    fd_cmd->add_option("--witness-out", fd.witness_out);
    fd_cmd->callback([&] { action = [&] { return run_find(fd, globals); }; });

    OracleArgs orc;
    auto *orc_cmd = app.add_subcommand("oracle", "Exact backtracking oracles");
    orc_cmd->require_subcommand(1);
    auto *orc_contains = orc_cmd->add_subcommand("contains", "Decide whether a graph contains a pattern");
    orc_contains->add_option("--graph", orc.graph)->required();
    orc_contains->add_option("--pattern", orc.pattern)->required();
    orc_contains->add_option("--node-limit", orc.node_limit);
    orc_contains->add_option("--out", orc.out);
    orc_contains->callback([&] { action = [&] { return run_contains(orc, globals); }; });
    auto *orc_extremal = orc_cmd->add_subcommand("extremal", "ex(n, H) for small n");
    orc_extremal->add_option("--n", orc.n)->required();
    orc_extremal->add_option("--pattern", orc.pattern)->required();
    orc_extremal->add_option("--node-limit", orc.node_limit);
    orc_extremal->add_option("--out", orc.out);
    orc_extremal->callback([&] { action = [&] { return run_extremal(orc, globals); }; });
    auto *orc_hill = orc_cmd->add_subcommand("hillclimb", "Randomised edge-maximal H-free graph");
    orc_hill->add_option("--n", orc.n)->required();
    orc_hill->add_option("--pattern", orc.pattern)->required();
    orc_hill->add_option("--iters", orc.iters);
    orc_hill->add_option("--seed", orc.seed);
    orc_hill->add_option("--out", orc.out);
    orc_hill->callback([&] { action = [&] { return run_hillclimb(orc, globals); }; });

    SweepArgs sw;
    auto *sw_cmd = app.add_subcommand("sweep", "Heuristic lower bounds for ex(n, H) over a range of n");
    sw_cmd->add_option("--pattern", sw.pattern)->required();
    sw_cmd->add_option("--n-range", sw.n_range, "A:B:S")->required();
    sw_cmd->add_option("--seeds", sw.seeds);
    sw_cmd->add_option("--iters", sw.iters);
    sw_cmd->add_option("--mode", sw.mode, "hillclimb | random-threshold");
    sw_cmd->add_flag("--timing", sw.timing, "Record wall_ms (makes the CSV timing dependent)");
    sw_cmd->add_option("--out", sw.out);
    sw_cmd->callback([&] { action = [&] { return run_sweep_command(sw, globals); }; });

    VerifyArgs vf;
    auto *vf_cmd = app.add_subcommand("verify", "Check a witness against a graph");
    vf_cmd->add_option("--graph", vf.graph)->required();
    vf_cmd->add_option("--witness", vf.witness)->required();
    vf_cmd->callback([&] { action = [&] { return run_verify(vf, globals); }; });

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e) {
        return app.exit(e) == 0 ? exit_ok : exit_input_error;
    }

    try {
        status = action();
    }
    catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input_error;
    }
    catch (const std::logic_error &e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return exit_internal_error;
    }
    catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input_error;
    }
    return status;
}
