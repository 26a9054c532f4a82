#pragma once

#include <kstk/graph.hpp>

#include <vector>

namespace kstk {

struct RegularizeParams
{
    double epsilon = 0.5; ///< in (0,1)
    double c = 1.0;       ///< >= 1; echoed in reports only
};

struct RegularizeReport
{
    Graph subgraph;
    std::vector<Vertex> vertices; ///< host ids; subgraph vertex i is vertices[i]
    std::size_t m = 0;
    std::size_t edges = 0;
    double achieved_k = 1.0;      ///< max/min degree; +inf when min is 0 but max is not
    double density_exponent = 0.0; ///< log(e)/log(m) - 1, 0 when undefined
    double theoretical_k_log2 = 0.0; ///< log2 of 20 * 2^(1/eps^2 + 1)
    double theoretical_k = 0.0;      ///< +inf when it overflows a double
};

/// max degree <= K * min degree. Requires at least one vertex and K >= 1.
bool is_almost_regular(const Graph &g, double k);

/// Degree-ratio of g, as reported in RegularizeReport::achieved_k.
double achieved_k(const Graph &g);

/**
 * Peels vertices of degree below half the current average, splits the rest
 * into dyadic degree bands and returns the induced subgraph (a single band,
 * two adjacent bands, the whole peeled graph or the input itself) maximising
 * e / m^(1+epsilon) among the candidates whose degree ratio does not exceed
 * that of the input. Ties prefer more vertices, then the lexicographically
 * smallest vertex set. A regular input is returned unchanged.
 */
RegularizeReport extract_almost_regular(const Graph &g, const RegularizeParams &params);

} // namespace kstk
