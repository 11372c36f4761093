#include "capgraph/model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace capgraph {

namespace {

void check_area_fraction(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::domain_error("area fraction p must lie in [0,1]");
    }
}

void check_vertex_count(int n, int min_n) {
    if (n < min_n) {
        throw std::domain_error("vertex count n must be >= " + std::to_string(min_n));
    }
}

double pair_count(int n) {
    return 0.5 * static_cast<double>(n) * static_cast<double>(n - 1);
}

}  // namespace

double cap_probability_from_radius(double a) {
    if (!(a >= 0.0 && a <= std::numbers::pi)) {
        throw std::domain_error("angular radius a must lie in [0,pi]");
    }
    const double s = std::sin(0.5 * a);
    return s * s;
}

double radius_from_probability(double p) {
    check_area_fraction(p);
    return 2.0 * std::asin(std::sqrt(p));
}

double edge_probability(double p) {
    check_area_fraction(p);
    if (p > 0.5) return 1.0;  // doubled cap covers the sphere
    return 4.0 * p * (1.0 - p);
}

double expected_edge_count(int n, double p) {
    check_vertex_count(n, 0);
    return pair_count(n) * edge_probability(p);
}

double poisson_lambda(int n, double p) { return expected_edge_count(n, p); }

ChenSteinBound chen_stein_bounds(int n, double p) {
    check_vertex_count(n, 2);
    check_area_fraction(p);

    ChenSteinBound out;
    out.lambda = expected_edge_count(n, p);
    out.prefactor = out.lambda > 0.0 ? std::min(3.0, 1.0 / out.lambda) : 3.0;

    const double q = edge_probability(p);
    const double q2 = q * q;
    const double pairs = pair_count(n);
    const double neighbors = 2.0 * static_cast<double>(n - 2);  // pairs sharing a vertex

    out.b1 = pairs * (neighbors + 1.0) * q2;  // neighborhood includes the pair itself
    out.b2 = pairs * neighbors * q2;          // p_ef = q^2 exactly for shared-vertex pairs
    out.bound_corrected = std::max(0.0, out.prefactor * (out.b1 + out.b2));

    const double nm1 = static_cast<double>(n - 1);
    const double bracket_paper = 0.5 * n * nm1 * nm1 * nm1 * q2 + pairs * q2;
    out.bound_paper = std::max(0.0, out.prefactor * bracket_paper);
    return out;
}

double expected_isolated_count(int n, double p) {
    check_vertex_count(n, 1);
    const double q = edge_probability(p);
    return static_cast<double>(n) * std::pow(1.0 - q, static_cast<double>(n - 1));
}

double isolated_exists_upper_bound_raw(int n, double p) {
    check_vertex_count(n, 2);
    check_area_fraction(p);
    return static_cast<double>(n - 1) * std::exp(-4.0 * (n - 1) * p * (1.0 - p));
}

double isolated_exists_upper_bound(int n, double p) {
    return std::min(1.0, isolated_exists_upper_bound_raw(n, p));
}

double all_isolated_upper_bound(int n, double p) {
    check_vertex_count(n, 2);
    check_area_fraction(p);
    const double nm1 = static_cast<double>(n - 1);
    return std::exp(-4.0 * nm1 * nm1 * p * (1.0 - p));
}

double edge_existence_upper_bound_raw(int n, double p) {
    return expected_edge_count(n, p);
}

double edge_existence_upper_bound(int n, double p) {
    return std::min(1.0, edge_existence_upper_bound_raw(n, p));
}

ModelParams params_from_area_fraction(int n, double p) {
    check_vertex_count(n, 0);
    check_area_fraction(p);
    ModelParams mp;
    mp.n = n;
    mp.p = p;
    mp.a = radius_from_probability(p);
    mp.q = edge_probability(p);
    mp.lambda = expected_edge_count(n, p);
    return mp;
}

ModelParams params_from_alpha(int n, double c, double alpha) {
    check_vertex_count(n, 1);
    if (!(c > 0.0)) {
        throw std::domain_error("scale constant c must be > 0");
    }
    const double raw = c * std::pow(static_cast<double>(n), -alpha);
    ModelParams mp = params_from_area_fraction(n, std::clamp(raw, 0.0, 1.0));
    mp.c = c;
    mp.alpha = alpha;
    return mp;
}

const char* to_string(RegimeClaim claim) {
    switch (claim) {
        case RegimeClaim::NO_ISOLATED_AS: return "NO_ISOLATED_AS";
        case RegimeClaim::AT_LEAST_HALF_N_EDGES: return "AT_LEAST_HALF_N_EDGES";
        case RegimeClaim::NOT_ALL_ISOLATED_EVENTUALLY: return "NOT_ALL_ISOLATED_EVENTUALLY";
        case RegimeClaim::POISSON_TV_CONVERGES: return "POISSON_TV_CONVERGES";
        case RegimeClaim::ALL_ISOLATED_AS: return "ALL_ISOLATED_AS";
        case RegimeClaim::NO_EDGES_AS: return "NO_EDGES_AS";
        case RegimeClaim::UNRESOLVED_BOUNDARY: return "UNRESOLVED_BOUNDARY";
    }
    return "UNKNOWN";
}

std::vector<RegimeClaim> regime_classify(double alpha) {
    std::vector<RegimeClaim> claims;
    if (alpha < 1.0) {
        claims.push_back(RegimeClaim::NO_ISOLATED_AS);
        claims.push_back(RegimeClaim::AT_LEAST_HALF_N_EDGES);
    }
    if (alpha < 2.0) {
        claims.push_back(RegimeClaim::NOT_ALL_ISOLATED_EVENTUALLY);
    }
    if (alpha > 2.0) {
        claims.push_back(RegimeClaim::POISSON_TV_CONVERGES);
    }
    if (alpha > 3.0) {
        claims.push_back(RegimeClaim::ALL_ISOLATED_AS);
        claims.push_back(RegimeClaim::NO_EDGES_AS);
    }
    if (alpha == 1.0 || alpha == 2.0 || alpha == 3.0) {
        claims.push_back(RegimeClaim::UNRESOLVED_BOUNDARY);
    }
    return claims;
}

}  // namespace capgraph
