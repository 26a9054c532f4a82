#pragma once

#include <kstk/pattern.hpp>

#include <boost/rational.hpp>

#include <cstdint>
#include <span>

namespace kstk {

using Rational = boost::rational<std::int64_t>;

/// e_S / |S|, where e_S counts edges of F with at least one endpoint in S.
/// Throws std::invalid_argument if S is empty, repeats a vertex or meets a root.
Rational rooted_density(const RootedPattern &f, std::span<const Vertex> s);

/// Density of the whole non-root set.
Rational rooted_density(const RootedPattern &f);

enum class Balance
{
    balanced,
    unbalanced,
    undecidable,
};

/// Exhaustive over all nonempty non-root subsets; `undecidable` when there
/// are more than `max_exhaustive` non-root vertices.
Balance is_balanced(const RootedPattern &f, std::size_t max_exhaustive = 20);

/// Closed form for a spider rooted at its leaves: k_1+...+k_s >= (s-1) max k_i.
bool spider_is_balanced(std::span<const std::size_t> lengths);

} // namespace kstk
