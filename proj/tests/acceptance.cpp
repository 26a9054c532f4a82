// Acceptance gate: one pass/fail line per criterion. Time limits and
// tolerances are fixed here; a criterion fails if it exceeds its limit.

#include "brute_force.hpp"

#include <kstk/density.hpp>
#include <kstk/extremal.hpp>
#include <kstk/finder.hpp>
#include <kstk/generators.hpp>
#include <kstk/goodness.hpp>
#include <kstk/matcher.hpp>
#include <kstk/oracle.hpp>
#include <kstk/pattern.hpp>
#include <kstk/sweep.hpp>
#include <kstk/thresholds.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include <unistd.h>

using namespace kstk;
namespace fs = std::filesystem;

namespace {

struct Outcome
{
    bool pass = false;
    std::string detail;
};

int failures = 0;

void criterion(int id, const std::string &name, double limit_seconds, const std::function<Outcome()> &body)
{
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    }
    catch (const std::exception &e) {
        out = {false, std::string("exception: ") + e.what()};
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool pass = out.pass && elapsed <= limit_seconds;
    if (out.pass && !pass)
        out.detail += " (time limit exceeded)";
    failures += !pass;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs / %.0fs", elapsed, limit_seconds);
    std::cout << "criterion " << id << " " << (pass ? "PASS" : "FAIL") << " [" << name << "] " << timing
              << (out.detail.empty() ? "" : " : " + out.detail) << std::endl;
}

Outcome expect(bool ok, std::string detail)
{
    return {ok, std::move(detail)};
}

// ---------------------------------------------------------------- 1

std::vector<mpq_class> recurse_thresholds(const mpq_class &big_l, std::size_t levels)
{
    std::vector<mpq_class> f(levels + 1);
    f[1] = big_l;
    for (std::size_t l = 2; l <= levels; ++l) {
        mpq_class best = 0;
        for (std::size_t i = 1; i < l; ++i)
            best = std::max<mpq_class>(best, f[i] * f[l - i]);
        mpq_class p = 1;
        for (int e = 0; e < 16; ++e)
            p *= f[l - 1];
        f[l] = 1 + p * mpq_class(static_cast<unsigned long>((l - 1) * (l - 1))) * best;
    }
    return f;
}

Outcome threshold_recursion()
{
    for (unsigned long l : {1ul, 2ul, 5ul})
        if (f_value(1, mpq_class(l)) != l)
            return expect(false, "f(1,L) != L");
    // independent recursion for the small exact values
    auto one = recurse_thresholds(1, 3);
    auto two = recurse_thresholds(2, 2);
    if (two[2] != 262145 || f_value(2, 2) != mpz_class(262145))
        return expect(false, "f(2,2)");
    if (one[3] != 524289 || f_value(3, 1) != mpz_class(524289))
        return expect(false, "f(3,1)");
    for (unsigned long big_l : {1ul, 2ul}) {
        auto f = ThresholdFn::paper(big_l);
        for (std::size_t l = 1; l < 8; ++l)
            if (f.compare(l, l + 1) != -1)
                return expect(false, "not increasing at L=" + std::to_string(big_l) + " l=" + std::to_string(l));
    }
    return expect(true, "f(2,2)=262145 f(3,1)=524289, increasing to l=8");
}

// ---------------------------------------------------------------- 2

Outcome constructor_laws()
{
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + rng() % 10;
        const std::size_t m = rng() % (n * (n - 1) / 2 + 1);
        auto f = random_gnm(n, m, rng());
        for (std::size_t k = 1; k <= 3; ++k) {
            auto fk = subdivide(f, k);
            if (fk.vertex_count() != n + (k - 1) * m || fk.edge_count() != k * m)
                return expect(false, "subdivision counts, trial " + std::to_string(trial));
        }
    }
    for (std::size_t s = 1; s <= 3; ++s)
        for (std::size_t t = 1; t <= 3; ++t)
            for (std::size_t k = 1; k <= 3; ++k) {
                auto blown = rooted_blowup(spider_pattern(std::vector<std::size_t>(s, k)), t);
                if (!find_isomorphism(blown, subdivide(complete_bipartite(s, t), k)))
                    return expect(false, "blowup not isomorphic for s,t,k=" + std::to_string(s) + "," +
                                             std::to_string(t) + "," + std::to_string(k));
            }
    return expect(true, "50 graphs x k<=3, 27 blowups");
}

// ---------------------------------------------------------------- 3

Outcome goodness_equivalence()
{
    std::mt19937_64 rng(77);
    const std::vector<LengthVector> vectors{{2, 2, 2}, {3, 3}, {1, 2, 3}, {2, 4}, {1, 1, 2, 2}};
    std::size_t compared = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 6 + rng() % 7;
        const std::size_t m = n + rng() % (n + 1);
        auto g = random_gnm(n, std::min(m, n * (n - 1) / 2), rng());
        const std::uint64_t cap_value = rng() % 3;
        auto f = ThresholdFn::constant(cap_value);
        auto cap = [&](std::size_t) { return cap_value; };

        auto paths = classify_paths(g, 4, f);
        auto slow_paths = brute::classify_paths(g, 4, cap);
        for (std::size_t len = 1; len <= 4; ++len) {
            std::uint64_t admissible = 0, good = 0;
            for (const auto &[p, flags] : slow_paths.flags[len]) {
                admissible += flags.first;
                good += flags.second;
                if (paths.is_good(p) != flags.second || paths.is_admissible(p) != flags.first)
                    return expect(false, "path flags differ, trial " + std::to_string(trial));
                if (flags.second && !flags.first)
                    return expect(false, "brute force: good but not admissible");
            }
            if (paths.totals(len).admissible != admissible || paths.totals(len).good != good ||
                paths.totals(len).objects != slow_paths.flags[len].size())
                return expect(false, "path totals differ, trial " + std::to_string(trial));
            if (len >= 2)
                for (const auto &[pair, count] : slow_paths.counts[len])
                    if (paths.count(len, pair.first, pair.second) != count)
                        return expect(false, "path counts differ, trial " + std::to_string(trial));
            if (paths.totals(len).good > paths.totals(len).admissible)
                return expect(false, "good exceeds admissible");
        }

        const auto &lv = vectors[trial % vectors.size()];
        auto spiders = classify_spiders(g, lv, paths);
        auto slow = brute::classify_spiders(g, lv, slow_paths, cap);
        for (const auto &[mu, flags] : slow.flags) {
            std::uint64_t admissible = 0;
            for (const auto &[sp, fl] : flags) {
                admissible += fl.first;
                auto st = spiders.status(Spider{sp.centre, sp.legs});
                if (st != fl)
                    return expect(false, "spider flags differ, trial " + std::to_string(trial));
                if (st.second && !st.first)
                    return expect(false, "good spider not admissible");
            }
            if (spiders.totals(mu).admissible != admissible)
                return expect(false, "spider totals differ, trial " + std::to_string(trial));
            for (const auto &[leaves, count] : slow.counts.at(mu))
                if (spiders.count(mu, leaves) != count)
                    return expect(false, "spider counts differ, trial " + std::to_string(trial));
            ++compared;
        }
    }
    return expect(true, "100 graphs, " + std::to_string(compared) + " spider vectors compared");
}

// ---------------------------------------------------------------- 4

void compositions(std::size_t remaining, LengthVector &cur, const std::function<void(const LengthVector &)> &visit)
{
    if (!cur.empty())
        visit(cur);
    for (std::size_t next = 1; next <= remaining; ++next) {
        cur.push_back(next);
        compositions(remaining - next, cur, visit);
        cur.pop_back();
    }
}

Outcome balance_calculus()
{
    std::size_t checked = 0;
    std::string mismatch;
    LengthVector cur;
    compositions(12, cur, [&](const LengthVector &lv) {
        if (!mismatch.empty())
            return;
        auto exhaustive = is_balanced(spider_pattern(lv), 20);
        bool closed = spider_is_balanced(lv);
        if (exhaustive == Balance::undecidable || (exhaustive == Balance::balanced) != closed)
            mismatch = to_string(lv);
        ++checked;
    });
    if (!mismatch.empty())
        return expect(false, "mismatch at lv=" + mismatch);
    for (std::int64_t s = 1; s <= 5; ++s)
        for (std::int64_t k = 1; k <= 5; ++k) {
            auto rho = rooted_density(spider_pattern(std::vector<std::size_t>(s, k)));
            if (rho != Rational(s * k, s * (k - 1) + 1))
                return expect(false, "density of spider s=" + std::to_string(s) + " k=" + std::to_string(k));
        }
    return expect(true, std::to_string(checked) + " length vectors, 25 densities");
}

// ---------------------------------------------------------------- 5

Graph crafted_host(std::mt19937_64 &rng)
{
    const std::size_t s = 2 + rng() % 2;
    const std::size_t t = 2 + rng() % 4;
    const std::size_t k = 2 + rng() % 2;
    auto core = subdivide(complete_bipartite(s, t), k);
    const std::size_t extra = rng() % 30;
    auto noise = random_gnm(extra + 5, rng() % (extra + 6), rng());
    auto g = disjoint_union(core, noise);
    std::vector<Edge> edges = g.edges();
    // a few random chords so the copy is not isolated
    for (int c = 0; c < 6; ++c) {
        Vertex a = static_cast<Vertex>(rng() % g.vertex_count());
        Vertex b = static_cast<Vertex>(rng() % g.vertex_count());
        if (a != b && !g.has_edge(a, b) &&
            std::find(edges.begin(), edges.end(), Edge{std::min(a, b), std::max(a, b)}) == edges.end())
            edges.push_back({std::min(a, b), std::max(a, b)});
    }
    std::vector<Vertex> perm(g.vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return relabel(Graph(g.vertex_count(), edges), perm);
}

Outcome finder_soundness()
{
    std::mt19937_64 rng(5150);
    std::size_t witnesses = 0, families = 0, constructive = 0;
    for (int trial = 0; trial < 200; ++trial) {
        Graph g;
        if (trial % 2 == 0) {
            const std::size_t n = 20 + rng() % 101;
            const std::size_t m = n + rng() % (2 * n);
            g = random_gnm(n, m, rng());
        }
        else
            g = crafted_host(rng);

        const std::uint64_t cap_value = rng() % 3;
        auto f = ThresholdFn::constant(cap_value);
        const mpq_class big_l = 1 + rng() % 3;
        FinderOptions options;
        options.thresholds = f;
        options.big_l = big_l;
        options.max_family = 50000;
        options.max_starts = 200;
        options.oracle_budget.node_limit = 200000;
        const std::size_t t = 2 + rng() % 2;
        auto r = find_kstk(g, 2, t, 2, options);
        if (r.witness) {
            ++witnesses;
            constructive += r.witness->route == "constructive";
            auto v = verify_embedding(g, *r.witness);
            if (!v)
                return expect(false, "find_kstk witness rejected: " + v.reason);
        }

        // refine and assemble directly, re-checking the family from scratch
        LengthVector lv = trial % 3 == 0 ? LengthVector{1, 2} : LengthVector{2, 2};
        auto paths = classify_paths(g, 2, f);
        auto tables = classify_spiders(g, lv, paths);
        std::vector<Spider> t0;
        bool too_big = false;
        for_each_spider(g, lv, [&](const Spider &s) {
            auto [adm, good] = tables.status(s);
            if (adm && !good)
                t0.push_back(s);
            too_big = t0.size() > 50000;
            return !too_big;
        });
        if (too_big)
            continue;
        const std::uint64_t delta = g.min_degree();
        auto family = refine_family(t0, f, delta, big_l);
        auto half_ok = [&](std::uint64_t c) { return 2 * c >= cap_value; };
        auto check = brute::check_refined(family.members(), half_ok, delta, big_l);
        if (!check.leaf_condition || !check.containment_condition)
            return expect(false, "refined family violates its conditions, trial " + std::to_string(trial));
        std::sort(t0.begin(), t0.end());
        if (family.members() != brute::refine_fixpoint(t0, half_ok, delta, big_l))
            return expect(false, "refined family is not the largest valid one, trial " + std::to_string(trial));
        ++families;
        if (family.empty())
            continue;
        auto assembled = assemble_blowup(g, family, {2, 3}, t, 100);
        if (assembled.witness) {
            ++witnesses;
            auto v = verify_embedding(g, *assembled.witness);
            if (!v)
                return expect(false, "assemble_blowup witness rejected: " + v.reason);
        }
    }
    return expect(true, std::to_string(witnesses) + " witnesses verified (" + std::to_string(constructive) +
                            " constructive from find), " + std::to_string(families) + " families re-checked");
}

// ---------------------------------------------------------------- 6

Outcome constructive_smoke()
{
    auto g = subdivide(complete_bipartite(2, 4), 2);
    FinderOptions options;
    options.thresholds = ThresholdFn::constant(1);
    options.big_l = 2;
    options.oracle_fallback = false;
    auto r = find_kstk(g, 2, 2, 2, options);
    if (!r.witness)
        return expect(false, "no witness");
    if (r.witness->route != "constructive" || r.oracle_used)
        return expect(false, "witness did not come from the constructive route");
    auto v = verify_embedding(g, *r.witness);
    return expect(v.ok, v.ok ? "K_{2,2}^2 via " + to_string(r.attempts.back().lv) : v.reason);
}

// ---------------------------------------------------------------- 7

Outcome extremal_values()
{
    auto c8 = parse_pattern("cycle:8");
    for (std::size_t n = 1; n <= 7; ++n) {
        auto r = extremal_number(n, c8);
        if (!r.exhaustive || r.value != n * (n - 1) / 2)
            return expect(false, "ex(" + std::to_string(n) + ", C8)");
    }
    auto r = extremal_number(4, parse_pattern("cycle:4"));
    if (!r.exhaustive || r.value != 4)
        return expect(false, "ex(4, C4) = " + std::to_string(r.value));
    return expect(true, "ex(n,C8)=n(n-1)/2 for n<=7, ex(4,C4)=4");
}

// ---------------------------------------------------------------- 8

Outcome sweep_sanity()
{
    SweepConfig config;
    config.pattern = parse_pattern("kst:2,2^2");
    config.n_range = parse_n_range("16:128:16");
    config.seeds = 3;
    config.iterations = 50;
    config.threads = std::max(1u, std::thread::hardware_concurrency());
    auto result = run_sweep(config);
    if (result.rows.size() != 8 * 3)
        return expect(false, "row count");
    for (const auto &row : result.rows)
        if (!row.verified)
            return expect(false, "unverified row");
    auto csv = sweep_csv(config, result);
    if (csv.find("# theory=1.250000") == std::string::npos || csv.find("# slope=") == std::string::npos)
        return expect(false, "summary lines missing");
    char slope[32];
    std::snprintf(slope, sizeof slope, "%.3f", result.slope.value_or(NAN));
    return expect(true, std::string("24 rows verified, slope=") + slope + " theory=1.25");
}

// ---------------------------------------------------------------- 9

std::string slurp(const fs::path &p)
{
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome cli_determinism()
{
    const fs::path dir = fs::temp_directory_path() / ("kstk_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    const std::string cli = KSTK_CLI_PATH;
    // "{OUT}" in the arguments is replaced by a per-run file whose contents
    // take part in the comparison.
    auto run = [&](std::string args, const std::string &tag) {
        const fs::path out = dir / (tag + ".stdout");
        const fs::path file = dir / (tag + ".out");
        for (auto pos = args.find("{OUT}"); pos != std::string::npos; pos = args.find("{OUT}"))
            args.replace(pos, 5, "\"" + file.string() + "\"");
        std::string cmd = "\"" + cli + "\" --quiet " + args + " > \"" + out.string() + "\" 2>&1";
        int rc = std::system(cmd.c_str());
        std::string all = std::to_string(rc) + "\n" + slurp(out);
        for (const auto &extra : {file, fs::path(file.string() + ".w")})
            if (fs::exists(extra))
                all += "--- " + extra.extension().string() + "\n" + slurp(extra);
        return all;
    };
    const std::string host = (dir / "host.txt").string();
    const std::string crafted = (dir / "crafted.txt").string();
    const std::string wit = (dir / "witness.json").string();
    for (const auto &setup : {"gen --gnm 60,150 --seed 4 --out \"" + host + "\"",
                              "gen --pattern kst:2,4^2 --out \"" + crafted + "\"",
                              "find --graph \"" + crafted + "\" --pattern kst:2,2^2 --witness-out \"" + wit + "\""})
        if (run(setup, "setup").rfind("0\n", 0) != 0)
            return expect(false, "setup failed: " + setup);

    const std::vector<std::string> commands{
        "gen --gnm 40,90 --seed 7",
        "gen --pattern spider:1,2*3",
        "regularize --graph \"" + host + "\" --epsilon 0.5",
        "spiders count --graph \"" + host + "\" --lv 2,2",
        "spiders count --graph \"" + host + "\" --lv 1,2 --by-leaf",
        "classify --graph \"" + host + "\" --k 3 --L 2 --threshold const:1 --lv 2,2",
        "classify --graph \"" + host + "\" --k 3 --L 2 --threshold paper",
        "find --graph \"" + crafted + "\" --pattern kst:2,2^2",
        "find --graph \"" + host + "\" --pattern kst:2,2^2 --threshold const:2",
        "oracle contains --graph \"" + host + "\" --pattern cycle:6",
        "oracle extremal --n 6 --pattern cycle:4",
        "oracle hillclimb --n 20 --pattern kst:2,2^2 --iters 30 --seed 3 --out {OUT}",
        "sweep --pattern cycle:6 --n-range 8:20:4 --seeds 2 --iters 10",
        "sweep --pattern kst:2,2^2 --n-range 10:30:10 --seeds 2 --iters 10 --out {OUT}",
        "find --graph \"" + crafted + "\" --pattern kst:2,2^2 --out {OUT} --witness-out {OUT}.w",
        "verify --graph \"" + crafted + "\" --witness \"" + wit + "\"",
    };
    for (std::size_t i = 0; i < commands.size(); ++i) {
        const auto tag = "c" + std::to_string(i);
        auto a = run("--threads 1 " + commands[i], tag + "a");
        auto b = run("--threads 1 " + commands[i], tag + "b");
        auto c = run("--threads 8 " + commands[i], tag + "c");
        if (a != b || a != c)
            return expect(false, "output differs for: " + commands[i]);
        if (a.rfind("0\n", 0) != 0)
            return expect(false, "nonzero exit for: " + commands[i] + "\n" + a);
    }
    fs::remove_all(dir);
    return expect(true, std::to_string(commands.size()) + " commands x 3 runs byte-identical");
}

} // namespace

int main()
{
    criterion(1, "threshold recursion", 1.0, threshold_recursion);
    criterion(2, "constructor laws", 30.0, constructor_laws);
    criterion(3, "goodness oracle equivalence", 300.0, goodness_equivalence);
    criterion(4, "balance calculus", 60.0, balance_calculus);
    criterion(5, "finder soundness", 600.0, finder_soundness);
    criterion(6, "constructive route smoke test", 60.0, constructive_smoke);
    criterion(7, "exact extremal values", 120.0, extremal_values);
    criterion(8, "sweep sanity", 900.0, sweep_sanity);
    criterion(9, "CLI determinism", 600.0, cli_determinism);
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
    return failures == 0 ? 0 : 1;
}
