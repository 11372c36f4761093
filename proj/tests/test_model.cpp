#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "capgraph/model.hpp"
#include "doctest.h"

using namespace capgraph;

namespace {
constexpr double kPi = std::numbers::pi;

bool has_claim(const std::vector<RegimeClaim>& claims, RegimeClaim c) {
    return std::find(claims.begin(), claims.end(), c) != claims.end();
}
}  // namespace

TEST_CASE("cap probability from radius") {
    CHECK(cap_probability_from_radius(0.0) == 0.0);
    CHECK(cap_probability_from_radius(kPi) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(cap_probability_from_radius(kPi / 2) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK_THROWS_AS(cap_probability_from_radius(-0.1), std::domain_error);
    CHECK_THROWS_AS(cap_probability_from_radius(kPi + 0.1), std::domain_error);
    CHECK_THROWS_AS(cap_probability_from_radius(std::nan("")), std::domain_error);
}

TEST_CASE("radius from probability") {
    CHECK(radius_from_probability(0.0) == 0.0);
    CHECK(radius_from_probability(0.5) == doctest::Approx(kPi / 2).epsilon(1e-15));
    CHECK(radius_from_probability(1.0) == doctest::Approx(kPi).epsilon(1e-15));
    CHECK_THROWS_AS(radius_from_probability(-1e-9), std::domain_error);
    CHECK_THROWS_AS(radius_from_probability(1.0 + 1e-9), std::domain_error);
}

TEST_CASE("radius/probability round trip on a 1000-point grid") {
    for (int i = 0; i <= 1000; ++i) {
        const double a = kPi * i / 1000.0;
        const double back = radius_from_probability(cap_probability_from_radius(a));
        CHECK(std::abs(back - a) <= 1e-10);
    }
}

TEST_CASE("cap probability is strictly increasing, edge probability nondecreasing") {
    double prev = cap_probability_from_radius(0.001);
    for (int i = 2; i < 1000; ++i) {
        const double cur = cap_probability_from_radius(kPi * i / 1000.0);
        CHECK(cur > prev);
        prev = cur;
    }
    double prev_q = edge_probability(0.0);
    for (int i = 1; i <= 500; ++i) {
        const double q = edge_probability(0.5 * i / 500.0);
        CHECK(q >= prev_q);
        prev_q = q;
    }
}

TEST_CASE("edge probability values and hemisphere clamp") {
    CHECK(edge_probability(0.0) == 0.0);
    CHECK(edge_probability(0.5) == 1.0);
    CHECK(edge_probability(0.01) == doctest::Approx(0.0396).epsilon(1e-15));
    CHECK(edge_probability(0.75) == 1.0);
    CHECK(edge_probability(1.0) == 1.0);
    CHECK_THROWS_AS(edge_probability(-0.1), std::domain_error);
    CHECK_THROWS_AS(edge_probability(1.1), std::domain_error);

    // q equals the doubled-cap area p(2a), including the clamp at 2a = pi.
    for (int i = 0; i <= 200; ++i) {
        const double p = i / 200.0;
        const double doubled = std::min(kPi, 2.0 * radius_from_probability(p));
        CHECK(std::abs(edge_probability(p) - cap_probability_from_radius(doubled)) <= 1e-10);
    }
}

TEST_CASE("expected edge count") {
    CHECK(expected_edge_count(0, 0.3) == 0.0);
    CHECK(expected_edge_count(1, 0.3) == 0.0);
    CHECK(expected_edge_count(2, 0.5) == 1.0);
    CHECK(expected_edge_count(10, 0.01) == doctest::Approx(1.782).epsilon(1e-15));
    CHECK_THROWS_AS(expected_edge_count(-1, 0.3), std::domain_error);

    for (int n : {0, 1, 2, 7, 50, 313}) {
        for (double p : {0.0, 1e-4, 0.2, 0.5, 0.9}) {
            CHECK(expected_edge_count(n, p) == params_from_area_fraction(n, p).lambda);
            CHECK(expected_edge_count(n, p) == poisson_lambda(n, p));
        }
    }
}

TEST_CASE("chen-stein bounds at the frozen reference point") {
    // Hand evaluation at n = 10, p = 0.01: q = 0.0396, lambda = 45q = 1.782,
    // prefactor = 1/1.782; paper bracket = (3645 + 45) q^2 = 5.7865104,
    // corrected bracket = 45 q^2 (4*10-7) = 2.3287176.
    const ChenSteinBound cs = chen_stein_bounds(10, 0.01);
    CHECK(cs.lambda == doctest::Approx(1.782).epsilon(1e-15));
    CHECK(cs.prefactor == doctest::Approx(1.0 / 1.782).epsilon(1e-15));
    CHECK(cs.bound_paper == doctest::Approx(3.2472).epsilon(1e-9));
    CHECK(cs.bound_corrected == doctest::Approx(1.3068).epsilon(1e-9));
    CHECK(cs.b1 == doctest::Approx(1.1996424).epsilon(1e-12));
    CHECK(cs.b2 == doctest::Approx(1.1290752).epsilon(1e-12));
    CHECK(cs.bound_corrected ==
          doctest::Approx(cs.prefactor * (cs.b1 + cs.b2)).epsilon(1e-15));
}

TEST_CASE("chen-stein edge cases") {
    const ChenSteinBound zero = chen_stein_bounds(2, 0.0);
    CHECK(zero.bound_paper == 0.0);
    CHECK(zero.bound_corrected == 0.0);
    CHECK(zero.prefactor == 3.0);  // lambda = 0
    CHECK_THROWS_AS(chen_stein_bounds(1, 0.1), std::domain_error);
    CHECK_THROWS_AS(chen_stein_bounds(10, 1.5), std::domain_error);
}

TEST_CASE("neighborhood sums match a brute-force enumeration over pairs") {
    // Enumerate all vertex pairs; a pair's neighborhood is every pair that
    // shares one of its endpoints (itself included). Each pair carries
    // probability q and each shared-vertex joint probability is q^2.
    for (int n : {2, 3, 4, 5, 8}) {
        for (double p : {0.01, 0.2, 0.5}) {
            const double q = edge_probability(p);
            std::vector<std::pair<int, int>> pairs;
            for (int i = 0; i < n; ++i) {
                for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
            }
            double b1 = 0.0, b2 = 0.0;
            for (const auto& e : pairs) {
                for (const auto& f : pairs) {
                    const bool shares_vertex = e.first == f.first || e.first == f.second ||
                                               e.second == f.first || e.second == f.second;
                    if (!shares_vertex) continue;
                    b1 += q * q;
                    if (e != f) b2 += q * q;
                }
            }
            const ChenSteinBound cs = chen_stein_bounds(n, p);
            CHECK(cs.b1 == doctest::Approx(b1).epsilon(1e-12));
            CHECK(cs.b2 == doctest::Approx(b2).epsilon(1e-12));
            CHECK(cs.bound_corrected ==
                  doctest::Approx(cs.prefactor * (b1 + b2)).epsilon(1e-12));
        }
    }
}

TEST_CASE("corrected bound never exceeds the paper bound") {
    for (int n = 2; n <= 64; ++n) {
        for (int i = 0; i <= 50; ++i) {
            const double p = 0.5 * i / 50.0;
            const ChenSteinBound cs = chen_stein_bounds(n, p);
            CHECK(cs.bound_corrected <= cs.bound_paper * (1.0 + 1e-12));
            CHECK(cs.b1 >= 0.0);
            CHECK(cs.b2 >= 0.0);
        }
    }
}

TEST_CASE("expected isolated count") {
    CHECK(expected_isolated_count(1, 0.3) == 1.0);
    CHECK(expected_isolated_count(5, 0.5) == 0.0);
    // n = 200, p = 200^-1.5: q = 4p(1-p) = 1.413713562373095e-3,
    // n (1-q)^(n-1) evaluated in extended precision.
    const double p = std::pow(200.0, -1.5);
    CHECK(expected_isolated_count(200, p) ==
          doctest::Approx(150.92595023036253).epsilon(1e-12));
    CHECK_THROWS_AS(expected_isolated_count(0, 0.3), std::domain_error);
}

TEST_CASE("isolated-vertex union bound") {
    CHECK(isolated_exists_upper_bound(2, 0.0) == 1.0);  // clamped
    CHECK(isolated_exists_upper_bound(2, 0.5) ==
          doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
    const double p500 = std::pow(500.0, -0.5);
    CHECK(isolated_exists_upper_bound(500, p500) ==
          doctest::Approx(4.623956337537907e-35).epsilon(1e-12));
    CHECK(isolated_exists_upper_bound_raw(2, 0.0) == 1.0);
    CHECK(isolated_exists_upper_bound_raw(10, 0.0) == 9.0);
    CHECK_THROWS_AS(isolated_exists_upper_bound(1, 0.1), std::domain_error);
}

TEST_CASE("all-isolated paper formula") {
    CHECK(all_isolated_upper_bound(2, 0.0) == 1.0);
    CHECK(all_isolated_upper_bound(2, 0.5) ==
          doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
    const double p = std::pow(200.0, -3.5);
    CHECK(all_isolated_upper_bound(200, p) ==
          doctest::Approx(0.9986008729224923).epsilon(1e-12));
}

TEST_CASE("edge-existence first-moment bound") {
    CHECK(edge_existence_upper_bound(1, 0.3) == 0.0);
    CHECK(edge_existence_upper_bound(10, 0.5) == 1.0);  // expected edges = 45
    CHECK(edge_existence_upper_bound_raw(10, 0.5) == 45.0);
    const double p = std::pow(200.0, -3.5);
    CHECK(edge_existence_upper_bound(200, p) ==
          doctest::Approx(7.035712410618648e-4).epsilon(1e-12));
}

TEST_CASE("params from alpha") {
    CHECK(params_from_alpha(100, 1.0, 0.0).p == 1.0);
    CHECK(params_from_alpha(100, 1.0, 2.0).p == doctest::Approx(1e-4).epsilon(1e-12));
    CHECK(params_from_alpha(10, 200.0, 1.0).p == 1.0);  // clamped from 20
    CHECK_THROWS_AS(params_from_alpha(0, 1.0, 2.0), std::domain_error);
    CHECK_THROWS_AS(params_from_alpha(10, 0.0, 2.0), std::domain_error);
    CHECK_THROWS_AS(params_from_alpha(10, -1.0, 2.0), std::domain_error);

    const ModelParams mp = params_from_alpha(200, 1.0, 1.5);
    CHECK(mp.c.has_value());
    CHECK(mp.alpha.has_value());
    CHECK(mp.q == doctest::Approx(edge_probability(mp.p)).epsilon(1e-15));
    CHECK(mp.a == doctest::Approx(radius_from_probability(mp.p)).epsilon(1e-15));
    CHECK(mp.lambda == doctest::Approx(28.132899891224593).epsilon(1e-12));
    CHECK(cap_probability_from_radius(mp.a) == doctest::Approx(mp.p).epsilon(1e-12));
}

TEST_CASE("params invariants on a grid") {
    for (int n : {1, 2, 17, 400}) {
        for (double p : {0.0, 1e-6, 0.2, 0.49, 0.5, 0.51, 1.0}) {
            const ModelParams mp = params_from_area_fraction(n, p);
            CHECK(std::abs(cap_probability_from_radius(mp.a) - mp.p) <= 1e-12);
            CHECK(mp.q == edge_probability(p));
            CHECK(mp.lambda == 0.5 * n * (n - 1.0) * mp.q);
            CHECK_FALSE(mp.c.has_value());
        }
    }
}

TEST_CASE("regime classification") {
    const auto dense = regime_classify(0.5);
    CHECK(dense.size() == 3);
    CHECK(has_claim(dense, RegimeClaim::NO_ISOLATED_AS));
    CHECK(has_claim(dense, RegimeClaim::AT_LEAST_HALF_N_EDGES));
    CHECK(has_claim(dense, RegimeClaim::NOT_ALL_ISOLATED_EVENTUALLY));

    const auto sparse = regime_classify(2.5);
    CHECK(sparse.size() == 1);
    CHECK(has_claim(sparse, RegimeClaim::POISSON_TV_CONVERGES));

    const auto empty = regime_classify(3.5);
    CHECK(empty.size() == 3);
    CHECK(has_claim(empty, RegimeClaim::POISSON_TV_CONVERGES));
    CHECK(has_claim(empty, RegimeClaim::ALL_ISOLATED_AS));
    CHECK(has_claim(empty, RegimeClaim::NO_EDGES_AS));

    for (double boundary : {1.0, 2.0, 3.0}) {
        CHECK(has_claim(regime_classify(boundary), RegimeClaim::UNRESOLVED_BOUNDARY));
    }
    const auto at_one = regime_classify(1.0);
    CHECK_FALSE(has_claim(at_one, RegimeClaim::NO_ISOLATED_AS));
    CHECK(has_claim(at_one, RegimeClaim::NOT_ALL_ISOLATED_EVENTUALLY));
    const auto at_two = regime_classify(2.0);
    CHECK(at_two.size() == 1);
    const auto at_three = regime_classify(3.0);
    CHECK(has_claim(at_three, RegimeClaim::POISSON_TV_CONVERGES));
    CHECK_FALSE(has_claim(at_three, RegimeClaim::NO_EDGES_AS));
}
