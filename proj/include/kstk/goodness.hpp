#pragma once

#include <kstk/graph.hpp>
#include <kstk/spiders.hpp>
#include <kstk/thresholds.hpp>

#include <cstdint>
#include <map>
#include <span>
#include <unordered_map>
#include <vector>

namespace kstk {

struct LevelTotals
{
    std::uint64_t objects = 0;
    std::uint64_t admissible = 0;
    std::uint64_t good = 0;

    std::uint64_t admissible_not_good() const { return admissible - good; }
};

/**
 * Admissible-path counts per unordered endpoint pair for lengths 1..k.
 *
 * A path of length >= 2 is admissible iff both of its subpaths of length one
 * less are good, and good iff it is admissible and at most f(length)
 * admissible paths of that length join its endpoints. Unrolled, a path is
 * good iff every contiguous subpath q of length >= 2 (itself included) has
 * count(|q|, ends(q)) <= f(|q|); flags are derived from the counts on demand.
 * A path and its reversal are the same object.
 */
class PathTables
{
public:
    std::size_t max_length() const { return counts_.size(); }
    const ThresholdFn &thresholds() const { return f_; }
    const LevelTotals &totals(std::size_t length) const { return totals_.at(length - 1); }

    std::uint64_t count(std::size_t length, Vertex a, Vertex b) const;
    /// `path` is a vertex sequence with path.size() - 1 <= max_length().
    bool is_admissible(std::span<const Vertex> path) const;
    bool is_good(std::span<const Vertex> path) const;
    /// Endpoint pairs (a < b) with their admissible count at `length`, sorted.
    std::vector<std::pair<Edge, std::uint64_t>> pair_counts(std::size_t length) const;

    friend PathTables classify_paths(const Graph &g, std::size_t k, const ThresholdFn &f, unsigned threads);

private:
    bool within(std::size_t length, Vertex a, Vertex b) const;

    const Graph *g_ = nullptr;
    ThresholdFn f_ = ThresholdFn::infinite();
    std::vector<std::unordered_map<std::uint64_t, std::uint64_t>> counts_; // index length-1; length 1 unused
    std::vector<std::uint64_t> caps_;
    std::vector<LevelTotals> totals_;
};

PathTables classify_paths(const Graph &g, std::size_t k, const ThresholdFn &f, unsigned threads = 1);

/**
 * Admissible-spider counts per leaf vector for every length vector mu with
 * 1 <= mu_i <= lv_i, processed by increasing total length.
 *
 * A spider with vector mu is admissible iff every full leg is a good path and
 * every spider obtained by shortening one leg of length >= 2 by one edge is
 * good; (1,...,1) spiders are always admissible. Good means admissible with at
 * most f(total length) admissible spiders of that vector sharing its leaf
 * vector. Unrolled: admissible iff all legs are good paths and every proper
 * truncation nu (1 <= nu <= mu, nu != mu) is within its threshold.
 */
class SpiderTables
{
public:
    const LengthVector &top() const { return top_; }
    const std::vector<LengthVector> &vectors() const { return order_; }
    const LevelTotals &totals(const LengthVector &mu) const { return totals_.at(index_of(mu)); }

    std::uint64_t count(const LengthVector &mu, const LeafVector &leaves) const;
    bool is_admissible(const Spider &s) const;
    bool is_good(const Spider &s) const;
    /// (admissible, good) in one pass.
    std::pair<bool, bool> status(const Spider &s) const;
    /// Leaf vectors with their admissible count at mu, sorted by leaf vector.
    std::vector<std::pair<LeafVector, std::uint64_t>> leaf_counts(const LengthVector &mu) const;

    friend SpiderTables classify_spiders(const Graph &g, const LengthVector &lv, const PathTables &paths,
                                         unsigned threads);

private:
    std::size_t index_of(const LengthVector &mu) const;
    std::uint64_t pack(const Spider &s, const LengthVector &nu) const;
    bool within(const Spider &s, const LengthVector &nu) const;

    const PathTables *paths_ = nullptr;
    std::size_t n_ = 0;
    unsigned bits_ = 1;
    LengthVector top_;
    std::vector<LengthVector> order_;            // increasing total, then lexicographic
    std::vector<std::vector<LengthVector>> below_; // proper truncations, per order_ entry
    std::map<LengthVector, std::size_t> index_;
    std::vector<std::unordered_map<std::uint64_t, std::uint64_t>> counts_;
    std::vector<std::uint64_t> caps_;
    std::vector<LevelTotals> totals_;
};

/// `paths` must cover every leg length in lv and outlive the result.
/// Throws std::invalid_argument on a precondition violation.
SpiderTables classify_spiders(const Graph &g, const LengthVector &lv, const PathTables &paths, unsigned threads = 1);

/// Admissible-but-not-good spiders with vector mu divided by n * delta^total,
/// delta the minimum degree; +infinity when delta is 0.
double not_good_ratio(const Graph &g, const SpiderTables &tables, const LengthVector &mu);

} // namespace kstk
