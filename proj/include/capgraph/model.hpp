#pragma once

#include <optional>
#include <string>
#include <vector>

// Closed-form quantities for the spherical-cap intersection graph model:
// parameter conversions, edge probability, expected counts, the Chen-Stein
// total-variation bounds and the union/independence probability bounds used
// by the regime sweeps. All functions are pure.

namespace capgraph {

/// Model parameters. `p` is the cap-area fraction (cap area = 4*pi*p),
/// `a` the angular radius, `q` the pairwise edge probability and `lambda`
/// the expected edge count over all n(n-1)/2 pairs. When the model is
/// parameterized as p = c / n^alpha, `c` and `alpha` are recorded too.
struct ModelParams {
    int n = 0;
    double p = 0.0;
    double a = 0.0;
    double q = 0.0;
    double lambda = 0.0;
    std::optional<double> c;
    std::optional<double> alpha;
};

/// Area fraction of a cap of angular radius `a`: sin^2(a/2).
/// Throws std::domain_error unless 0 <= a <= pi.
double cap_probability_from_radius(double a);

/// Inverse of cap_probability_from_radius: 2*asin(sqrt(p)).
/// Throws std::domain_error unless 0 <= p <= 1.
double radius_from_probability(double p);

/// Probability that two independent uniform caps of area fraction `p`
/// intersect: 4p(1-p) for p <= 1/2. For p > 1/2 the doubled cap exceeds a
/// hemisphere and covers the whole sphere, so the result clamps to 1.
double edge_probability(double p);

/// Expected number of edges, [n(n-1)/2] * edge_probability(p).
double expected_edge_count(int n, double p);

/// Poisson intensity for the edge count; identical to expected_edge_count.
double poisson_lambda(int n, double p);

/// Chen-Stein total-variation bound ingredients for the edge count.
///
/// `b1` and `b2` are the shared-vertex neighborhood sums over per-pair
/// indicators: a pair's neighborhood is the 2(n-2) pairs sharing one of its
/// endpoints plus itself, and the joint probability for two pairs sharing a
/// vertex is exactly q^2 (the two memberships are conditionally independent
/// given the shared center). `bound_corrected` = prefactor * (b1 + b2).
/// `bound_paper` reproduces the published display verbatim:
/// prefactor * [ n(n-1)^3/2 * q^2 + n(n-1)/2 * q^2 ].
struct ChenSteinBound {
    double lambda = 0.0;
    double prefactor = 0.0;  // min(3, 1/lambda); 3 when lambda == 0
    double b1 = 0.0;
    double b2 = 0.0;
    double bound_paper = 0.0;
    double bound_corrected = 0.0;
};

/// Throws std::domain_error when n < 2 or p is outside [0,1].
ChenSteinBound chen_stein_bounds(int n, double p);

/// Exact expected number of isolated vertices, n*(1-q)^(n-1).
/// Requires n >= 1.
double expected_isolated_count(int n, double p);

/// Union bound on P[at least one isolated vertex]:
/// (n-1)*exp(-4(n-1)p(1-p)), clamped to [0,1]. Requires n >= 2.
double isolated_exists_upper_bound(int n, double p);
/// Same bound before clamping (can exceed 1).
double isolated_exists_upper_bound_raw(int n, double p);

/// The published expression for P[every vertex isolated]:
/// exp(-4(n-1)^2 p(1-p)). The independence step behind it is dubious, so
/// this is reported as a formula value, never asserted as a true bound.
/// Requires n >= 2.
double all_isolated_upper_bound(int n, double p);

/// First-moment bound P[edge set nonempty] <= E|edges|, clamped to [0,1].
double edge_existence_upper_bound(int n, double p);
/// Same bound before clamping (equals the Poisson intensity).
double edge_existence_upper_bound_raw(int n, double p);

/// Fill every derived field from (n, p). Requires n >= 0 and p in [0,1].
ModelParams params_from_area_fraction(int n, double p);

/// Fill every derived field from p = c * n^(-alpha), clamped into [0,1].
/// Requires n >= 1 and c > 0.
ModelParams params_from_alpha(int n, double c, double alpha);

/// The almost-sure / convergence claims that apply in each exponent regime.
enum class RegimeClaim {
    NO_ISOLATED_AS,               // alpha < 1
    AT_LEAST_HALF_N_EDGES,        // alpha < 1
    NOT_ALL_ISOLATED_EVENTUALLY,  // alpha < 2 (corrected reading)
    POISSON_TV_CONVERGES,         // alpha > 2
    ALL_ISOLATED_AS,              // alpha > 3
    NO_EDGES_AS,                  // alpha > 3
    UNRESOLVED_BOUNDARY,          // alpha in {1, 2, 3}
};

const char* to_string(RegimeClaim claim);

/// Claims applicable at the given exponent, in declaration order.
std::vector<RegimeClaim> regime_classify(double alpha);

}  // namespace capgraph
