#include "capgraph/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace capgraph {

namespace {

constexpr double kNormTolerance = 1e-6;

void validate_input(const std::vector<UnitVector>& centers, double a) {
    if (!(a >= 0.0 && a <= std::numbers::pi)) {
        throw std::domain_error("angular radius a must lie in [0,pi]");
    }
    for (const auto& c : centers) {
        if (std::abs(norm(c) - 1.0) > kNormTolerance) {
            throw std::domain_error("cap centers must be unit vectors");
        }
    }
}

void finalize(CapGraph& g) {
    std::sort(g.edges.begin(), g.edges.end());
    g.degrees.assign(g.n, 0);
    for (const auto& [i, j] : g.edges) {
        ++g.degrees[i];
        ++g.degrees[j];
    }
}

bool caps_intersect(const UnitVector& u, const UnitVector& v, double threshold,
                    BuildStats* stats) {
    if (stats != nullptr) ++stats->distance_evals;
    return angular_distance(u, v) < threshold;
}

}  // namespace

CapGraph build_graph_naive(std::vector<UnitVector> centers, double a, BuildStats* stats) {
    validate_input(centers, a);
    CapGraph g;
    g.n = static_cast<int>(centers.size());
    g.a = a;
    g.centers = std::move(centers);

    const double threshold = 2.0 * a;
    for (int i = 0; i < g.n; ++i) {
        for (int j = i + 1; j < g.n; ++j) {
            if (caps_intersect(g.centers[i], g.centers[j], threshold, stats)) {
                g.edges.emplace_back(i, j);
            }
        }
    }
    finalize(g);
    return g;
}

CapGraph build_graph_zoned(std::vector<UnitVector> centers, double a, BuildStats* stats) {
    const double threshold = 2.0 * a;
    const int n = static_cast<int>(centers.size());
    if (threshold >= 0.5 * std::numbers::pi || n < 64) {
        if (stats != nullptr) stats->used_fallback = true;
        return build_graph_naive(std::move(centers), a, stats);
    }
    validate_input(centers, a);

    CapGraph g;
    g.n = n;
    g.a = a;
    g.centers = std::move(centers);

    // Band width >= 2a, so two centers within 2a always land in the same or
    // in vertically adjacent bands (colatitude difference bounds the angle
    // from below).
    const double width = std::max(threshold, std::numbers::pi / 64.0);
    const auto band_count = static_cast<std::size_t>(std::ceil(std::numbers::pi / width));
    if (stats != nullptr) stats->band_count = band_count;

    std::vector<std::vector<int>> bands(band_count);
    for (int i = 0; i < g.n; ++i) {
        const double colat = std::acos(std::clamp(g.centers[i].z, -1.0, 1.0));
        auto b = static_cast<std::size_t>(colat / width);
        if (b >= band_count) b = band_count - 1;
        bands[b].push_back(i);
    }

    auto scan_pair = [&](int i, int j) {
        if (i > j) std::swap(i, j);
        if (caps_intersect(g.centers[i], g.centers[j], threshold, stats)) {
            g.edges.emplace_back(i, j);
        }
    };

    for (std::size_t b = 0; b < band_count; ++b) {
        const auto& cur = bands[b];
        for (std::size_t s = 0; s < cur.size(); ++s) {
            for (std::size_t t = s + 1; t < cur.size(); ++t) {
                scan_pair(cur[s], cur[t]);
            }
        }
        if (b + 1 < band_count) {
            for (int i : cur) {
                for (int j : bands[b + 1]) {
                    scan_pair(i, j);
                }
            }
        }
    }
    finalize(g);
    return g;
}

int isolated_count(const CapGraph& g) {
    return static_cast<int>(std::count(g.degrees.begin(), g.degrees.end(), 0));
}

std::map<int, int> degree_histogram(const CapGraph& g) {
    std::map<int, int> hist;
    for (int d : g.degrees) {
        ++hist[d];
    }
    return hist;
}

void write_edge_list(const CapGraph& g, std::ostream& out) {
    for (const auto& [i, j] : g.edges) {
        out << i << ' ' << j << '\n';
    }
}

}  // namespace capgraph
