"""Spherical-cap random intersection graphs.

Closed-form model quantities, deterministic sphere sampling, cap-graph
builders and seeded Monte Carlo ensembles with Poisson-approximation
diagnostics. The heavy lifting lives in the compiled ``_capgraph`` module.
"""

from ._capgraph import (
    CapGraph,
    ChenSteinBound,
    EnsembleSummary,
    ModelParams,
    RandomStream,
    TrialStats,
    UnitVector,
    __version__,
    all_isolated_upper_bound,
    angular_distance,
    build_graph_naive,
    build_graph_zoned,
    cap_probability_from_radius,
    chen_stein_bounds,
    coverage_probability,
    degree_histogram,
    edge_existence_upper_bound,
    edge_probability,
    expected_edge_count,
    expected_isolated_count,
    fibonacci_grid,
    isolated_count,
    isolated_exists_upper_bound,
    params_from_alpha,
    params_from_area_fraction,
    poisson_lambda,
    poisson_pmf,
    radius_from_probability,
    realize_trial_graph,
    regime_classify,
    regime_sweep,
    run_ensemble,
    run_trial,
    sample_unit_vectors,
    tv_distance_poisson,
    tv_mc_allowance,
)

__all__ = [
    "CapGraph",
    "ChenSteinBound",
    "EnsembleSummary",
    "ModelParams",
    "RandomStream",
    "TrialStats",
    "UnitVector",
    "__version__",
    "all_isolated_upper_bound",
    "angular_distance",
    "build_graph_naive",
    "build_graph_zoned",
    "cap_probability_from_radius",
    "chen_stein_bounds",
    "coverage_probability",
    "degree_histogram",
    "edge_existence_upper_bound",
    "edge_probability",
    "expected_edge_count",
    "expected_isolated_count",
    "fibonacci_grid",
    "isolated_count",
    "isolated_exists_upper_bound",
    "params_from_alpha",
    "params_from_area_fraction",
    "poisson_lambda",
    "poisson_pmf",
    "radius_from_probability",
    "realize_trial_graph",
    "regime_classify",
    "regime_sweep",
    "run_ensemble",
    "run_trial",
    "sample_unit_vectors",
    "tv_distance_poisson",
    "tv_mc_allowance",
]
