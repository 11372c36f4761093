#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "capgraph/graph.hpp"
#include "capgraph/model.hpp"
#include "capgraph/sphere.hpp"
#include "doctest.h"

using namespace capgraph;

namespace {

constexpr double kPi = std::numbers::pi;

void check_graph_invariants(const CapGraph& g) {
    int prev_i = -1, prev_j = -1;
    std::size_t degree_total = 0;
    for (const auto& [i, j] : g.edges) {
        CHECK(i < j);
        CHECK(0 <= i);
        CHECK(j < g.n);
        // ascending lexicographic, no duplicates
        CHECK((i > prev_i || (i == prev_i && j > prev_j)));
        prev_i = i;
        prev_j = j;
        CHECK(angular_distance(g.centers[i], g.centers[j]) < 2.0 * g.a);
    }
    for (int d : g.degrees) degree_total += static_cast<std::size_t>(d);
    CHECK(degree_total == 2 * g.edges.size());
}

}  // namespace

TEST_CASE("naive builder on hand-checkable configurations") {
    const UnitVector north{0, 0, 1};
    const UnitVector south{0, 0, -1};
    const UnitVector ex{1, 0, 0};
    const UnitVector ey{0, 1, 0};

    CHECK(build_graph_naive({north, south}, kPi / 4).edges.empty());

    // Three mutually orthogonal centers: threshold 2a vs pi/2.
    const std::vector<UnitVector> ortho{ex, ey, north};
    CHECK(build_graph_naive(ortho, 0.3).edges.empty());
    CHECK(build_graph_naive(ortho, 0.9).edges.size() == 3);

    // 2a >= pi exceeds the metric diameter: complete graph.
    RandomStream stream(11, 0);
    const auto centers = sample_unit_vectors(stream, 20);
    const CapGraph complete = build_graph_naive(centers, kPi / 2);
    CHECK(complete.edges.size() == 190);
    for (int d : complete.degrees) CHECK(d == 19);
    check_graph_invariants(complete);
}

TEST_CASE("builder input validation") {
    const UnitVector ex{1, 0, 0};
    CHECK_THROWS_AS(build_graph_naive({ex}, -0.1), std::domain_error);
    CHECK_THROWS_AS(build_graph_naive({ex}, kPi + 0.1), std::domain_error);
    CHECK_THROWS_AS(build_graph_naive({UnitVector{0.9, 0, 0}}, 0.5), std::domain_error);
    CHECK_THROWS_AS(build_graph_zoned({UnitVector{0.9, 0, 0}}, 0.5), std::domain_error);
}

TEST_CASE("edge threshold is strict and two-sided") {
    RandomStream stream(17, 0);
    const auto centers = sample_unit_vectors(stream, 60);
    const double a = radius_from_probability(0.08);
    const CapGraph g = build_graph_naive(centers, a);
    check_graph_invariants(g);

    std::vector<std::vector<bool>> adj(g.n, std::vector<bool>(g.n, false));
    for (const auto& [i, j] : g.edges) adj[i][j] = adj[j][i] = true;
    for (int i = 0; i < g.n; ++i) {
        for (int j = i + 1; j < g.n; ++j) {
            const double d = angular_distance(centers[i], centers[j]);
            if (adj[i][j]) {
                CHECK(d < 2.0 * a);
            } else {
                CHECK(d >= 2.0 * a);
            }
        }
    }
}

TEST_CASE("isolated count and degree histogram") {
    const UnitVector north{0, 0, 1};
    RandomStream stream(23, 0);

    // a = 0: everything isolated.
    const auto scattered = sample_unit_vectors(stream, 7);
    const CapGraph empty = build_graph_naive(scattered, 0.0);
    CHECK(isolated_count(empty) == 7);
    const auto empty_hist = degree_histogram(empty);
    CHECK(empty_hist.size() == 1);
    CHECK(empty_hist.at(0) == 7);

    // Complete graph on 4: no isolated vertices, all degree 3.
    const auto four = sample_unit_vectors(stream, 4);
    const CapGraph complete = build_graph_naive(four, kPi / 2);
    CHECK(isolated_count(complete) == 0);
    const auto complete_hist = degree_histogram(complete);
    CHECK(complete_hist.size() == 1);
    CHECK(complete_hist.at(3) == 4);

    // Exactly one edge among three vertices.
    const UnitVector near_north{std::sin(0.01), 0, std::cos(0.01)};
    const CapGraph one_edge =
        build_graph_naive({north, near_north, UnitVector{0, 0, -1}}, 0.05);
    CHECK(one_edge.edges.size() == 1);
    CHECK(isolated_count(one_edge) == 1);
    const auto hist = degree_histogram(one_edge);
    CHECK(hist.at(0) == 1);
    CHECK(hist.at(1) == 2);

    // Histogram totals n and bucket 0 matches isolated_count.
    const auto centers = sample_unit_vectors(stream, 90);
    const CapGraph g = build_graph_naive(centers, radius_from_probability(0.02));
    int total = 0;
    for (const auto& [deg, cnt] : degree_histogram(g)) total += cnt;
    CHECK(total == 90);
    CHECK(degree_histogram(g).count(0) ==
          (isolated_count(g) > 0 ? std::size_t{1} : std::size_t{0}));
    if (isolated_count(g) > 0) CHECK(degree_histogram(g).at(0) == isolated_count(g));
}

TEST_CASE("zoned builder matches naive on a seeded grid") {
    int trial = 0;
    for (int n : {10, 100, 500}) {
        for (double p : {1e-4, 1e-3, 1e-2, 0.3, 0.6}) {
            for (int rep = 0; rep < 5; ++rep, ++trial) {
                RandomStream stream(555, static_cast<std::uint64_t>(trial));
                const auto centers = sample_unit_vectors(stream, static_cast<std::size_t>(n));
                const double a = radius_from_probability(p);
                const CapGraph naive = build_graph_naive(centers, a);
                const CapGraph zoned = build_graph_zoned(centers, a);
                CHECK(naive.edges == zoned.edges);
                CHECK(naive.degrees == zoned.degrees);
                check_graph_invariants(zoned);
            }
        }
    }
}

TEST_CASE("zoned builder prunes most pairs in the sparse regime") {
    RandomStream stream(808, 0);
    const auto centers = sample_unit_vectors(stream, 500);
    const double a = radius_from_probability(1e-4);

    BuildStats stats;
    const CapGraph zoned = build_graph_zoned(centers, a, &stats);
    CHECK_FALSE(stats.used_fallback);
    CHECK(stats.band_count == 64);
    CHECK(stats.distance_evals <= 124750 / 4);  // <= 25% of n(n-1)/2

    BuildStats naive_stats;
    const CapGraph naive = build_graph_naive(centers, a, &naive_stats);
    CHECK(naive_stats.distance_evals == 124750);
    CHECK(naive.edges == zoned.edges);
}

TEST_CASE("zoned builder matches naive over 1000 sparse n=500 trials") {
    const double a = radius_from_probability(1e-3);
    for (std::uint64_t rep = 0; rep < 1000; ++rep) {
        RandomStream stream(777, rep);
        const auto centers = sample_unit_vectors(stream, 500);
        const CapGraph naive = build_graph_naive(centers, a);
        const CapGraph zoned = build_graph_zoned(centers, a);
        REQUIRE(naive.edges == zoned.edges);
    }
}

TEST_CASE("zoned builder handles band boundaries and poles") {
    // Points packed onto rings at exact band-boundary colatitudes, plus the
    // poles themselves; distances straddle the band edges.
    const double p = 1e-3;
    const double a = radius_from_probability(p);
    const double width = std::numbers::pi / 64.0;  // > 2a, so bands use pi/64

    std::vector<UnitVector> centers;
    centers.push_back({0, 0, 1});
    centers.push_back({0, 0, -1});
    RandomStream stream(606, 0);
    for (int band : {1, 2, 31, 32, 62, 63}) {
        const double boundary = band * width;
        for (int k = 0; k < 20; ++k) {
            const double jitter = (stream.next_double() - 0.5) * 4.0 * a;
            const double colat =
                std::clamp(boundary + jitter, 0.0, std::numbers::pi);
            const double phi = 2.0 * std::numbers::pi * stream.next_double();
            centers.push_back({std::sin(colat) * std::cos(phi),
                               std::sin(colat) * std::sin(phi), std::cos(colat)});
        }
    }
    const CapGraph naive = build_graph_naive(centers, a);
    const CapGraph zoned = build_graph_zoned(centers, a);
    CHECK(naive.edges == zoned.edges);
    CHECK_FALSE(naive.edges.empty());  // the rings are dense enough to touch
    check_graph_invariants(zoned);
}

TEST_CASE("zoned builder falls back for wide caps and small graphs") {
    RandomStream stream(9, 0);
    const auto small = sample_unit_vectors(stream, 20);
    BuildStats stats;
    build_graph_zoned(small, 0.3, &stats);
    CHECK(stats.used_fallback);

    const auto wide = sample_unit_vectors(stream, 128);
    BuildStats wide_stats;
    build_graph_zoned(wide, 0.9, &wide_stats);  // 2a = 1.8 >= pi/2
    CHECK(wide_stats.used_fallback);
}

TEST_CASE("edge list dump format") {
    const UnitVector north{0, 0, 1};
    const UnitVector near{std::sin(0.01), 0, std::cos(0.01)};
    const UnitVector tilt{0, std::sin(0.012), std::cos(0.012)};
    const CapGraph g = build_graph_naive({north, near, tilt}, 0.05);
    std::ostringstream out;
    write_edge_list(g, out);
    CHECK(out.str() == "0 1\n0 2\n1 2\n");
}
