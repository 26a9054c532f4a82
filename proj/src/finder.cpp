#include <kstk/finder.hpp>

#include <kstk/oracle.hpp>

#include <boost/functional/hash.hpp>

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>

namespace kstk {

namespace {

const std::vector<std::uint32_t> no_members;

bool contains_sorted(const std::vector<Vertex> &sorted, Vertex v)
{
    return std::binary_search(sorted.begin(), sorted.end(), v);
}

std::vector<Vertex> sorted_unique(std::vector<Vertex> v)
{
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

GammaMask column_mask(const std::vector<std::vector<int>> &gamma, std::size_t j)
{
    GammaMask mask = 0;
    for (std::size_t i = 0; i < gamma.size(); ++i)
        if (gamma[i][j])
            mask |= GammaMask{1} << i;
    return mask;
}

void check_targets(const LengthVector &lv, const LengthVector &targets)
{
    if (lv.empty() || lv.size() > 31)
        throw std::invalid_argument("finder: spiders need between 1 and 31 legs");
    if (targets.size() != lv.size())
        throw std::invalid_argument("finder: target vector has the wrong number of legs");
    std::size_t ones = 0;
    for (std::size_t i = 0; i < lv.size(); ++i) {
        if (lv[i] < 1 || lv[i] > targets[i])
            throw std::invalid_argument("finder: leg lengths must satisfy 1 <= l_i <= k_i");
        ones += lv[i] == 1;
    }
    if (ones > 1)
        throw std::invalid_argument("finder: at most one leg may have length one");
}

} // namespace

LengthVector truncated_lengths(const LengthVector &lv, GammaMask gamma)
{
    LengthVector out = lv;
    for (std::size_t i = 0; i < out.size(); ++i)
        if (gamma >> i & 1) {
            if (out[i] == 0)
                throw std::invalid_argument("truncated_lengths: leg of length zero cannot be shortened");
            --out[i];
        }
    return out;
}

std::vector<Vertex> spider_key(const Spider &s)
{
    std::vector<Vertex> key{s.centre};
    for (const auto &leg : s.legs)
        key.insert(key.end(), leg.begin(), leg.end());
    return key;
}

std::size_t SpiderFamily::VectorHash::operator()(const std::vector<Vertex> &v) const
{
    return boost::hash_range(v.begin(), v.end());
}

SpiderFamily::SpiderFamily(LengthVector lv, std::vector<Spider> members) :
    lv_(std::move(lv))
{
    if (lv_.size() > 16)
        throw std::invalid_argument("SpiderFamily: at most 16 legs");
    for (const auto &m : members)
        if (m.lengths() != lv_)
            throw std::invalid_argument("SpiderFamily: member with the wrong length vector");
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    members_ = std::move(members);

    const GammaMask masks = GammaMask{1} << lv_.size();
    by_sub_.resize(masks);
    for (std::uint32_t idx = 0; idx < members_.size(); ++idx) {
        const auto &m = members_[idx];
        by_leaf_[m.leaves()].push_back(idx);
        for (GammaMask gamma = 0; gamma < masks; ++gamma)
            by_sub_[gamma][spider_key(subspider(m, truncated_lengths(lv_, gamma)))].push_back(idx);
    }
}

const std::vector<std::uint32_t> &SpiderFamily::with_leaves(const LeafVector &leaves) const
{
    auto it = by_leaf_.find(leaves);
    return it == by_leaf_.end() ? no_members : it->second;
}

const std::vector<std::uint32_t> &SpiderFamily::containing(GammaMask gamma, const Spider &sub) const
{
    if (gamma >= by_sub_.size())
        return no_members;
    auto it = by_sub_[gamma].find(spider_key(sub));
    return it == by_sub_[gamma].end() ? no_members : it->second;
}

std::uint64_t containment_threshold(std::uint64_t delta, std::size_t g, const mpq_class &big_l)
{
    if (big_l <= 0)
        throw std::invalid_argument("containment_threshold: L must be positive");
    mpz_class power;
    mpz_pow_ui(power.get_mpz_t(), mpz_class(static_cast<unsigned long>(delta)).get_mpz_t(), g);
    mpq_class q = mpq_class(power) / (big_l * big_l);
    q.canonicalize();
    mpz_class c;
    mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    if (c > mpz_class(std::to_string(std::numeric_limits<std::uint64_t>::max())))
        return std::numeric_limits<std::uint64_t>::max();
    return std::stoull(c.get_str());
}

SpiderFamily refine_family(std::vector<Spider> t0, const ThresholdFn &f, std::uint64_t delta, const mpq_class &big_l)
{
    std::sort(t0.begin(), t0.end());
    t0.erase(std::unique(t0.begin(), t0.end()), t0.end());
    if (t0.empty())
        return {};
    const LengthVector lv = t0.front().lengths();
    for (const auto &m : t0)
        if (m.lengths() != lv)
            throw std::invalid_argument("refine_family: members must share one length vector");
    const std::size_t s = lv.size();
    if (s > 16)
        throw std::invalid_argument("refine_family: at most 16 legs");
    const std::size_t ell = std::accumulate(lv.begin(), lv.end(), std::size_t{0});
    const std::size_t n = t0.size();
    const GammaMask masks = GammaMask{1} << s;

    using KeyMap = std::unordered_map<std::vector<Vertex>, std::uint32_t, boost::hash<std::vector<Vertex>>>;
    auto intern = [](KeyMap &ids, std::vector<Vertex> key, std::vector<std::vector<std::uint32_t>> &groups) {
        auto [it, fresh] = ids.try_emplace(std::move(key), static_cast<std::uint32_t>(groups.size()));
        if (fresh)
            groups.emplace_back();
        return it->second;
    };

    KeyMap leaf_ids;
    std::vector<std::vector<std::uint32_t>> leaf_members;
    std::vector<std::uint32_t> member_leaf(n);
    std::vector<KeyMap> sub_ids(masks);
    std::vector<std::vector<std::vector<std::uint32_t>>> sub_members(masks);
    std::vector<std::vector<std::uint32_t>> member_sub(masks, std::vector<std::uint32_t>(n));
    for (std::uint32_t m = 0; m < n; ++m) {
        member_leaf[m] = intern(leaf_ids, t0[m].leaves(), leaf_members);
        leaf_members[member_leaf[m]].push_back(m);
        for (GammaMask gamma = 0; gamma < masks; ++gamma) {
            auto id = intern(sub_ids[gamma], spider_key(subspider(t0[m], truncated_lengths(lv, gamma))),
                             sub_members[gamma]);
            member_sub[gamma][m] = id;
            sub_members[gamma][id].push_back(m);
        }
    }

    std::vector<std::uint64_t> leaf_count(leaf_members.size());
    for (std::size_t i = 0; i < leaf_members.size(); ++i)
        leaf_count[i] = leaf_members[i].size();
    std::vector<std::vector<std::uint64_t>> sub_count(masks);
    for (GammaMask gamma = 0; gamma < masks; ++gamma)
        for (const auto &group : sub_members[gamma])
            sub_count[gamma].push_back(group.size());
    std::vector<std::uint64_t> needed(s + 1);
    for (std::size_t g = 0; g <= s; ++g)
        needed[g] = containment_threshold(delta, g, big_l);

    auto leaf_ok = [&](std::uint64_t count) { return f.at_least_half(ell, count); };

    std::vector<char> alive(n, 1);
    std::set<std::uint32_t> bad_leaf;
    std::set<std::uint32_t> bad_sub;
    for (std::uint32_t m = 0; m < n; ++m) {
        if (!leaf_ok(leaf_count[member_leaf[m]]))
            bad_leaf.insert(m);
        for (GammaMask gamma = 0; gamma < masks; ++gamma)
            if (sub_count[gamma][member_sub[gamma][m]] < needed[std::popcount(gamma)])
                bad_sub.insert(m);
    }

    while (!bad_leaf.empty() || !bad_sub.empty()) {
        std::uint32_t victim = !bad_leaf.empty() ? *bad_leaf.begin() : *bad_sub.begin();
        bad_leaf.erase(victim);
        bad_sub.erase(victim);
        alive[victim] = 0;

        auto &lc = leaf_count[member_leaf[victim]];
        bool was_ok = leaf_ok(lc);
        --lc;
        if (was_ok && !leaf_ok(lc))
            for (auto m : leaf_members[member_leaf[victim]])
                if (alive[m])
                    bad_leaf.insert(m);

        for (GammaMask gamma = 0; gamma < masks; ++gamma) {
            auto id = member_sub[gamma][victim];
            auto &c = sub_count[gamma][id];
            const auto need = needed[std::popcount(gamma)];
            bool met = c >= need;
            --c;
            if (met && c < need)
                for (auto m : sub_members[gamma][id])
                    if (alive[m])
                        bad_sub.insert(m);
        }
    }

    std::vector<Spider> kept;
    for (std::uint32_t m = 0; m < n; ++m)
        if (alive[m])
            kept.push_back(std::move(t0[m]));
    SpiderFamily family(lv, std::move(kept));
    family.delta = static_cast<double>(delta);
    family.big_l = big_l;
    return family;
}

Representatives disjoint_representatives(const SpiderFamily &family, const LeafVector &leaves, std::size_t quota,
                                         const std::vector<Vertex> &forbidden)
{
    Representatives out;
    std::vector<Vertex> blocked = sorted_unique(forbidden);
    for (auto idx : family.with_leaves(leaves)) {
        if (out.spiders.size() >= quota)
            break;
        const auto &cand = family.members()[idx];
        auto inner = cand.non_leaf_vertices();
        if (std::any_of(inner.begin(), inner.end(), [&](Vertex v) { return contains_sorted(blocked, v); }))
            continue;
        out.spiders.push_back(cand);
        blocked.insert(blocked.end(), inner.begin(), inner.end());
        blocked = sorted_unique(std::move(blocked));
    }
    out.shortfall = out.spiders.size() < quota;
    return out;
}

std::vector<std::vector<int>> gamma_table(const LengthVector &lv, const LengthVector &targets)
{
    if (lv.size() != targets.size())
        throw std::invalid_argument("gamma_table: length mismatch");
    std::vector<std::size_t> half(lv.size());
    std::vector<int> first(lv.size());
    std::size_t width = 1;
    for (std::size_t i = 0; i < lv.size(); ++i) {
        if (lv[i] > targets[i])
            throw std::invalid_argument("gamma_table: l_i exceeds k_i");
        const std::size_t gap = targets[i] - lv[i];
        first[i] = static_cast<int>(gap % 2);
        half[i] = gap / 2;
        width = std::max(width, half[i] + 1);
    }
    std::vector<std::vector<int>> gamma(lv.size(), std::vector<int>(width, 0));
    for (std::size_t i = 0; i < lv.size(); ++i) {
        gamma[i][0] = first[i];
        for (std::size_t j = 1; j <= half[i]; ++j)
            gamma[i][j] = 1;
    }
    return gamma;
}

BuiltPaths build_paths(const SpiderFamily &family, const Spider &r0, const std::vector<Vertex> &z,
                       const LengthVector &targets)
{
    const LengthVector &lv = family.lengths();
    check_targets(lv, targets);
    const std::size_t s = lv.size();
    const auto gamma = gamma_table(lv, targets);
    const std::size_t steps = gamma.front().size();

    if (r0.lengths() != truncated_lengths(lv, column_mask(gamma, 0)))
        throw std::invalid_argument("build_paths: starting subspider has the wrong shape");
    const auto zs = sorted_unique(z);
    for (auto v : r0.leaves())
        if (contains_sorted(zs, v))
            throw std::invalid_argument("build_paths: Z meets the leaves of the starting subspider");

    BuiltPaths out;
    out.grid.assign(s, std::vector<Vertex>(2 * steps));
    for (std::size_t i = 0; i < s; ++i)
        out.grid[i][0] = r0.leaf(i);

    std::vector<Vertex> used = zs;
    Spider r = r0;
    for (std::size_t j = 1; j <= steps; ++j) {
        const auto r_vertices = sorted_unique(r.vertices());
        const Spider *chosen_s = nullptr;
        for (auto idx : family.containing(column_mask(gamma, j - 1), r)) {
            const auto &cand = family.members()[idx];
            bool clear = true;
            for (auto v : cand.vertices())
                if (!contains_sorted(r_vertices, v) && contains_sorted(used, v)) {
                    clear = false;
                    break;
                }
            if (clear) {
                chosen_s = &cand;
                break;
            }
        }
        if (!chosen_s) {
            out.failure = "no spider S_" + std::to_string(j) + " extends R_" + std::to_string(j - 1) +
                          " while avoiding the forbidden vertices";
            return out;
        }
        for (std::size_t i = 0; i < s; ++i)
            out.grid[i][2 * j - 1] = chosen_s->leaf(i);
        auto s_vertices = chosen_s->vertices();
        used.insert(used.end(), s_vertices.begin(), s_vertices.end());
        used = sorted_unique(std::move(used));

        if (j == steps) {
            out.chain.push_back({*chosen_s, std::nullopt, r});
            break;
        }

        const Spider *chosen_t = nullptr;
        for (auto idx : family.with_leaves(chosen_s->leaves())) {
            const auto &cand = family.members()[idx];
            auto inner = cand.non_leaf_vertices();
            if (std::none_of(inner.begin(), inner.end(), [&](Vertex v) { return contains_sorted(used, v); })) {
                chosen_t = &cand;
                break;
            }
        }
        if (!chosen_t) {
            out.failure = "no spider T_" + std::to_string(j) + " shares the leaves of S_" + std::to_string(j) +
                          " while avoiding the forbidden vertices";
            return out;
        }
        auto inner = chosen_t->non_leaf_vertices();
        used.insert(used.end(), inner.begin(), inner.end());
        used = sorted_unique(std::move(used));

        Spider next = subspider(*chosen_t, truncated_lengths(lv, column_mask(gamma, j)));
        for (std::size_t i = 0; i < s; ++i)
            out.grid[i][2 * j] = next.leaf(i);
        out.chain.push_back({*chosen_s, *chosen_t, next});
        r = std::move(next);
    }

    for (std::size_t c = 0; c < 2 * steps; ++c) {
        std::vector<Vertex> column;
        for (std::size_t i = 0; i < s; ++i)
            column.push_back(out.grid[i][c]);
        if (sorted_unique(column).size() != s)
            throw std::logic_error("build_paths: column " + std::to_string(c) + " repeats a vertex");
    }

    for (std::size_t i = 0; i < s; ++i) {
        std::vector<Vertex> path;
        for (auto x : out.grid[i])
            if (path.empty() || path.back() != x)
                path.push_back(x);
        if (path.size() - 1 != targets[i] - lv[i])
            throw std::logic_error("build_paths: path " + std::to_string(i) + " has the wrong length");
        out.v.push_back(path.front());
        out.w.push_back(path.back());
        out.paths.push_back(std::move(path));
    }
    out.ok = true;
    return out;
}

Connected connect_paths(const SpiderFamily &family, const BuiltPaths &built, const std::vector<Vertex> &z)
{
    Connected out;
    if (!built.ok) {
        out.failure = built.failure.empty() ? "paths were not built" : built.failure;
        return out;
    }
    std::vector<Vertex> forbidden = z;
    for (const auto &p : built.paths)
        forbidden.insert(forbidden.end(), p.begin(), p.end());
    auto reps = disjoint_representatives(family, built.w, 1, forbidden);
    if (reps.spiders.empty()) {
        out.failure = "no spider joins the path ends while avoiding the forbidden vertices";
        return out;
    }
    const Spider &joiner = reps.spiders.front();
    Spider full;
    full.centre = joiner.centre;
    for (std::size_t i = 0; i < built.paths.size(); ++i) {
        auto leg = joiner.legs[i];
        const auto &p = built.paths[i];
        leg.insert(leg.end(), p.rbegin() + 1, p.rend());
        full.legs.push_back(std::move(leg));
    }
    out.spider = std::move(full);
    return out;
}

AssembleResult assemble_blowup(const Graph &g, const SpiderFamily &family, const LengthVector &targets, std::size_t t,
                               std::size_t max_starts)
{
    AssembleResult out;
    if (t < 1)
        throw std::invalid_argument("assemble_blowup: t must be >= 1");
    if (family.empty()) {
        out.failure = "empty family";
        return out;
    }
    const LengthVector &lv = family.lengths();
    check_targets(lv, targets);
    const auto gamma = gamma_table(lv, targets);
    const auto start_lengths = truncated_lengths(lv, column_mask(gamma, 0));
    const mpq_class big_l = family.big_l;

    std::set<std::vector<Vertex>> seen;
    for (const auto &member : family.members()) {
        if (out.starts_tried >= max_starts)
            break;
        Spider r0 = subspider(member, start_lengths);
        if (!seen.insert(spider_key(r0)).second)
            continue;
        ++out.starts_tried;

        const auto v = r0.leaves();
        std::vector<Vertex> z;
        std::vector<Spider> copies;
        std::string failure;
        while (copies.size() < t) {
            auto built = build_paths(family, r0, z, targets);
            auto joined = connect_paths(family, built, z);
            if (!joined.spider) {
                failure = joined.failure;
                break;
            }
            for (auto x : joined.spider->vertices())
                if (std::find(v.begin(), v.end(), x) == v.end())
                    z.push_back(x);
            z = sorted_unique(std::move(z));
            out.max_z = std::max(out.max_z, z.size());
            if (mpq_class(static_cast<unsigned long>(z.size())) > big_l)
                out.z_exceeded_l = true;
            copies.push_back(std::move(*joined.spider));
        }
        if (copies.size() > out.rounds_completed || out.failure.empty())
            out.failure = failure;
        out.rounds_completed = std::max(out.rounds_completed, copies.size());
        if (copies.size() < t)
            continue;

        Witness w;
        w.pattern.kind = PatternDescriptor::Kind::spider;
        w.pattern.legs = targets;
        w.pattern.blowup = t;
        w.route = "constructive";
        w.roots = v;
        w.branches = v;
        for (const auto &c : copies)
            w.branches.push_back(c.centre);
        for (const auto &c : copies)
            for (const auto &leg : c.legs) {
                std::vector<Vertex> path{c.centre};
                path.insert(path.end(), leg.begin(), leg.end());
                w.paths.push_back(std::move(path));
            }
        auto verdict = verify_embedding(g, w);
        if (!verdict)
            throw std::logic_error("assemble_blowup: assembled witness fails verification: " + verdict.reason);
        out.witness = std::move(w);
        out.failure.clear();
        return out;
    }
    if (out.failure.empty())
        out.failure = "no starting subspider completed " + std::to_string(t) + " rounds";
    return out;
}

Witness spider_witness_to_kst(const Witness &w)
{
    const auto &d = w.pattern;
    if (d.kind != PatternDescriptor::Kind::spider || d.legs.empty())
        throw std::invalid_argument("spider_witness_to_kst: not a spider witness");
    const std::size_t k = d.legs.front() * d.subdivision;
    for (auto len : d.legs)
        if (len * d.subdivision != k)
            throw std::invalid_argument("spider_witness_to_kst: legs differ in length");
    const std::size_t s = d.legs.size();
    const std::size_t t = d.blowup.value_or(1);
    if (w.paths.size() != s * t)
        throw std::invalid_argument("spider_witness_to_kst: wrong number of paths");

    Witness out;
    out.pattern.kind = PatternDescriptor::Kind::complete_bipartite;
    out.pattern.s = s;
    out.pattern.t = t;
    out.pattern.subdivision = k;
    out.roots = w.roots;
    out.branches = w.branches;
    out.route = w.route;
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < t; ++j) {
            auto p = w.paths[j * s + i];
            std::reverse(p.begin(), p.end());
            out.paths.push_back(std::move(p));
        }
    return out;
}

FinderResult find_blowup(const Graph &g, const PatternDescriptor &pattern, const FinderOptions &options)
{
    LengthVector targets;
    std::size_t t = 1;
    const bool is_kst = pattern.kind == PatternDescriptor::Kind::complete_bipartite;
    if (is_kst) {
        targets.assign(pattern.s, pattern.subdivision);
        t = pattern.t;
    }
    else if (pattern.kind == PatternDescriptor::Kind::spider) {
        for (auto len : pattern.legs)
            targets.push_back(len * pattern.subdivision);
        t = pattern.blowup.value_or(1);
    }
    else
        throw std::invalid_argument("find: the constructive search handles kst and spider patterns only");

    FinderResult result;
    result.delta = g.min_degree();
    const ThresholdFn &f = options.thresholds;
    const std::size_t s = targets.size();
    const std::size_t ell = std::accumulate(targets.begin(), targets.end(), std::size_t{0});
    const auto bits = std::max<std::size_t>(1, std::bit_width(g.vertex_count()));

    if (g.vertex_count() == 0 || s * bits > 64 || s > 16)
        result.warnings.push_back("constructive route skipped: host or pattern too large for the leaf index");
    else {
        const std::size_t kmax = *std::max_element(targets.begin(), targets.end());
        auto paths = classify_paths(g, kmax, f, options.threads);
        auto spiders = classify_spiders(g, targets, paths, options.threads);

        const auto good = spiders.totals(targets).good;
        const auto cap = f.cap(ell);
        if (cap != std::numeric_limits<std::uint64_t>::max()) {
            mpz_class bound;
            mpz_pow_ui(bound.get_mpz_t(), mpz_class(static_cast<unsigned long>(g.vertex_count())).get_mpz_t(), s);
            bound *= mpz_class(std::to_string(cap));
            if (mpz_class(std::to_string(good)) > bound)
                throw std::logic_error("find: more good spiders than the pigeonhole bound allows");
        }

        std::vector<FinderAttempt> candidates;
        for (const auto &mu : spiders.vectors()) {
            const auto not_good = spiders.totals(mu).admissible_not_good();
            if (not_good == 0)
                continue;
            FinderAttempt a;
            a.lv = mu;
            a.not_good = not_good;
            if (std::count(mu.begin(), mu.end(), std::size_t{1}) > 1)
                a.outcome = "skipped: two legs of length one";
            candidates.push_back(std::move(a));
        }
        std::stable_sort(candidates.begin(), candidates.end(), [](const FinderAttempt &a, const FinderAttempt &b) {
            if (a.not_good != b.not_good)
                return a.not_good > b.not_good;
            return a.lv < b.lv;
        });

        for (auto &a : candidates) {
            if (!a.outcome.empty()) {
                result.attempts.push_back(a);
                continue;
            }
            std::vector<Spider> t0;
            bool too_big = false;
            for_each_spider(g, a.lv, [&](const Spider &sp) {
                auto [admissible, is_good] = spiders.status(sp);
                if (admissible && !is_good) {
                    if (t0.size() >= options.max_family) {
                        too_big = true;
                        return false;
                    }
                    t0.push_back(sp);
                }
                return true;
            });
            if (too_big) {
                a.outcome = "skipped: more than " + std::to_string(options.max_family) + " admissible spiders";
                result.attempts.push_back(a);
                continue;
            }
            auto family = refine_family(std::move(t0), f, result.delta, options.big_l);
            a.family = family.size();
            if (family.empty()) {
                a.outcome = "family empty after refinement";
                result.attempts.push_back(a);
                continue;
            }
            auto assembled = assemble_blowup(g, family, targets, t, options.max_starts);
            a.rounds = assembled.rounds_completed;
            if (assembled.z_exceeded_l)
                result.warnings.push_back("|Z| reached " + std::to_string(assembled.max_z) + " > L for lv=" +
                                          to_string(a.lv));
            if (assembled.witness) {
                a.outcome = "found";
                result.attempts.push_back(a);
                Witness w = std::move(*assembled.witness);
                if (is_kst)
                    w = spider_witness_to_kst(w);
                else
                    w.pattern = pattern;
                if (!verify_embedding(g, w))
                    throw std::logic_error("find: converted witness fails verification");
                result.witness = std::move(w);
                return result;
            }
            a.outcome = "failed after " + std::to_string(a.rounds) + " rounds: " + assembled.failure;
            result.attempts.push_back(a);
        }
    }

    if (options.oracle_fallback) {
        result.oracle_used = true;
        auto r = contains(g, pattern, options.oracle_budget);
        result.oracle_status = r.status;
        if (r.witness)
            result.witness = std::move(r.witness);
    }
    return result;
}

FinderResult find_kstk(const Graph &g, std::size_t s, std::size_t t, std::size_t k, const FinderOptions &options)
{
    if (s < 2 || t < 2 || k < 2)
        throw std::invalid_argument("find_kstk: s, t and k must be at least 2");
    PatternDescriptor d;
    d.kind = PatternDescriptor::Kind::complete_bipartite;
    d.s = s;
    d.t = t;
    d.subdivision = k;
    return find_blowup(g, d, options);
}

} // namespace kstk
