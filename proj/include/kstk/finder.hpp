#pragma once

#include <kstk/goodness.hpp>
#include <kstk/matcher.hpp>
#include <kstk/spiders.hpp>
#include <kstk/thresholds.hpp>
#include <kstk/witness.hpp>

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace kstk {

/// Bitmask over legs: bit i set means leg i is shortened by one edge.
using GammaMask = std::uint32_t;

/// Leg lengths after removing the edges selected by gamma.
LengthVector truncated_lengths(const LengthVector &lv, GammaMask gamma);

/**
 * A set of spiders sharing one length vector, kept in canonical order and
 * indexed by leaf vector and, for every gamma, by the gamma-truncated
 * generalised subspider.
 */
class SpiderFamily
{
public:
    SpiderFamily() = default;
    /// `members` must all have length vector lv; duplicates are dropped.
    SpiderFamily(LengthVector lv, std::vector<Spider> members);

    const LengthVector &lengths() const { return lv_; }
    const std::vector<Spider> &members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }

    /// Member indices (canonical order) with the given leaf vector.
    const std::vector<std::uint32_t> &with_leaves(const LeafVector &leaves) const;
    /// Member indices whose gamma-truncation equals `sub`.
    const std::vector<std::uint32_t> &containing(GammaMask gamma, const Spider &sub) const;

    /// Refinement parameters, echoed in reports.
    double delta = 0;
    mpq_class big_l = 1;

private:
    struct VectorHash
    {
        std::size_t operator()(const std::vector<Vertex> &v) const;
    };

    LengthVector lv_;
    std::vector<Spider> members_;
    std::unordered_map<std::vector<Vertex>, std::vector<std::uint32_t>, VectorHash> by_leaf_;
    std::vector<std::unordered_map<std::vector<Vertex>, std::vector<std::uint32_t>, VectorHash>> by_sub_;
};

/// Flattened key of a generalised spider: centre followed by every leg.
std::vector<Vertex> spider_key(const Spider &s);

/// Smallest integer c with c >= delta^g / L^2, saturated at UINT64_MAX.
std::uint64_t containment_threshold(std::uint64_t delta, std::size_t g, const mpq_class &big_l);

/**
 * Discards spiders until (i) every member shares its leaf vector with at
 * least f(l)/2 members and (ii) every gamma-truncation of every member lies
 * in at least delta^|gamma| / L^2 members. Violators of (i) go first, always
 * the canonically smallest one.
 */
SpiderFamily refine_family(std::vector<Spider> t0, const ThresholdFn &f, std::uint64_t delta, const mpq_class &big_l);

struct Representatives
{
    std::vector<Spider> spiders;
    bool shortfall = false;
};

/// Greedy scan in canonical order over members with the given leaves,
/// keeping those that share only leaves with the kept ones and whose
/// non-leaf vertices avoid `forbidden`.
Representatives disjoint_representatives(const SpiderFamily &family, const LeafVector &leaves, std::size_t quota,
                                         const std::vector<Vertex> &forbidden = {});

struct ChainStep
{
    Spider s;
    std::optional<Spider> t; ///< absent for the final step
    Spider r;                ///< truncation of t feeding the next step
};

struct BuiltPaths
{
    bool ok = false;
    std::string failure;
    std::vector<std::vector<Vertex>> paths; ///< paths[i] runs from v_i to w_i
    LeafVector v;
    LeafVector w;
    std::vector<ChainStep> chain;
    std::vector<std::vector<Vertex>> grid; ///< grid[i][c] = x_{i,c}
};

/// The leg parities: gamma[i][0] = (k_i - l_i) mod 2, then ones in the
/// earliest positions so that gamma[i][0] + 2 * sum_{j>=1} gamma[i][j] = k_i - l_i.
std::vector<std::vector<int>> gamma_table(const LengthVector &lv, const LengthVector &targets);

/// Throws std::invalid_argument on precondition violations (l_i > k_i, two
/// legs of length one, R0 of the wrong shape, Z meeting the leaves of R0).
BuiltPaths build_paths(const SpiderFamily &family, const Spider &r0, const std::vector<Vertex> &z,
                       const LengthVector &targets);

struct Connected
{
    std::optional<Spider> spider;
    std::string failure;
};

Connected connect_paths(const SpiderFamily &family, const BuiltPaths &built, const std::vector<Vertex> &z);

struct AssembleResult
{
    std::optional<Witness> witness;
    std::size_t rounds_completed = 0; ///< best over all starting subspiders
    std::size_t starts_tried = 0;
    std::size_t max_z = 0;
    bool z_exceeded_l = false;
    std::string failure;
};

/// t rounds of connect_paths sharing the leaves of one starting subspider,
/// each round forbidding the non-leaf vertices of the earlier spiders. The
/// starting subspiders are tried in canonical order. The witness describes
/// spider:k_1,...,k_s*t and is verified before it is returned.
AssembleResult assemble_blowup(const Graph &g, const SpiderFamily &family, const LengthVector &targets, std::size_t t,
                               std::size_t max_starts = 1000);

struct FinderOptions
{
    ThresholdFn thresholds = ThresholdFn::constant(1);
    mpq_class big_l = 2;
    std::size_t max_family = 200000;
    std::size_t max_starts = 1000;
    bool oracle_fallback = true;
    SearchBudget oracle_budget;
    unsigned threads = 1;
};

struct FinderAttempt
{
    LengthVector lv;
    std::uint64_t not_good = 0;
    std::size_t family = 0;
    std::size_t rounds = 0;
    std::string outcome;
};

struct FinderResult
{
    std::optional<Witness> witness;
    SearchStatus oracle_status = SearchStatus::absent;
    bool oracle_used = false;
    std::uint64_t delta = 0;
    std::vector<FinderAttempt> attempts;
    std::vector<std::string> warnings;
};

/**
 * Looks for `pattern` (kst:s,t^k or spider:k_1,...,k_s[^m][*t]): classify
 * paths and spiders, then for every length vector below the targets with at
 * most one leg of length one, in decreasing order of admissible-but-not-good
 * count, refine a family and try to assemble the blowup. Vectors with two
 * legs of length one are skipped. Falls back to the oracle when enabled.
 */
FinderResult find_blowup(const Graph &g, const PatternDescriptor &pattern, const FinderOptions &options);

/// find_blowup for kst:s,t^k; requires s, t, k >= 2.
FinderResult find_kstk(const Graph &g, std::size_t s, std::size_t t, std::size_t k, const FinderOptions &options);

/// Re-expresses a spider-blowup witness with equal legs as a kst witness.
Witness spider_witness_to_kst(const Witness &w);

} // namespace kstk
