#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <utility>
#include <vector>

#include "capgraph/sphere.hpp"

// Construction of the cap-intersection graph: vertices are cap centers,
// an edge joins {i,j} iff the caps overlap, i.e. the great-circle distance
// between the centers is strictly less than 2a (caps are open).

namespace capgraph {

struct CapGraph {
    int n = 0;
    double a = 0.0;
    std::vector<UnitVector> centers;
    std::vector<std::pair<int, int>> edges;  // i < j, ascending lexicographic
    std::vector<int> degrees;
};

/// Builder instrumentation, mainly for verifying the zoned pruning.
struct BuildStats {
    std::uint64_t distance_evals = 0;
    std::size_t band_count = 0;
    bool used_fallback = false;
};

/// Examine all n(n-1)/2 pairs. Throws std::domain_error for a radius outside
/// [0, pi] or a center that is not unit norm.
CapGraph build_graph_naive(std::vector<UnitVector> centers, double a,
                           BuildStats* stats = nullptr);

/// Same output as build_graph_naive on every input. Vertices are bucketed
/// into latitude bands of width max(2a, pi/64); since the band width is at
/// least 2a, only same-band and adjacent-band pairs can be within 2a, and
/// only those are distance-tested. Falls back to the naive scan when
/// 2a >= pi/2 or n < 64.
CapGraph build_graph_zoned(std::vector<UnitVector> centers, double a,
                           BuildStats* stats = nullptr);

/// Number of degree-zero vertices.
int isolated_count(const CapGraph& g);

/// Map degree -> vertex count; totals n, and [0] equals isolated_count.
std::map<int, int> degree_histogram(const CapGraph& g);

/// One edge per line, "i j" with i < j, ascending lexicographic order.
void write_edge_list(const CapGraph& g, std::ostream& out);

}  // namespace capgraph
