#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "capgraph/graph.hpp"
#include "capgraph/model.hpp"

// Seeded ensembles of graph realizations: edge-count distribution, its
// total-variation distance to Poisson(lambda), regime event frequencies,
// the alpha sweep with claim verdicts, and the approximate coverage
// estimator.
//
// Trial t draws its centers from RandomStream(master_seed, t), so every
// per-trial result is a pure function of (params, master_seed, t) and the
// ensemble is independent of scheduling. Cross-trial aggregation uses exact
// integer counters only; derived moments are computed from those integers,
// which makes summaries bit-identical for every thread count.

namespace capgraph {

struct TrialStats {
    std::uint64_t trial_index = 0;
    std::uint64_t edge_count = 0;
    int isolated_count = 0;
    std::map<int, int> degree_hist;
};

struct EnsembleSummary {
    ModelParams params;
    std::uint64_t r = 0;
    std::map<std::uint64_t, std::uint64_t> counts;  // edge count -> #trials
    std::map<std::uint64_t, double> pmf;            // edge count -> frequency
    double mean_edges = 0.0;
    double var_edges = 0.0;  // unbiased sample variance
    double mean_isolated = 0.0;
    double tv_distance = 0.0;
    double tv_mc_error = 0.0;
    double frac_no_isolated = 0.0;
    double frac_all_isolated = 0.0;
    double frac_no_edges = 0.0;
    double frac_half_n_edges = 0.0;  // trials with >= n/2 edges
};

/// One realization: sample params.n centers from stream
/// (master_seed, trial_index), build the graph (zoned builder), summarize.
TrialStats run_trial(const ModelParams& params, std::uint64_t master_seed,
                     std::uint64_t trial_index);

/// The realized graph behind run_trial, for inspection and edge dumps.
CapGraph realize_trial_graph(const ModelParams& params, std::uint64_t master_seed,
                             std::uint64_t trial_index);

/// Poisson(lambda) pmf at k, evaluated in log space; lambda = 0 gives a
/// point mass at zero.
double poisson_pmf(std::uint64_t k, double lambda);

/// Aggregate r independent trials (trial_index = 0..r-1).
/// Throws std::domain_error when r == 0.
EnsembleSummary run_ensemble(const ModelParams& params, std::uint64_t r,
                             std::uint64_t master_seed, int threads = 1);

/// Total-variation distance between an empirical edge-count pmf and
/// Poisson(lambda): (1/2) sum_{k<=k_max} |pmf[k] - poi(k)| plus half the
/// Poisson tail mass beyond k_max, where k_max is the smallest k with
/// Poisson CDF >= 1 - 1e-12 (extended to the largest observed count). The
/// Poisson pmf is evaluated in log space. Throws std::domain_error when the
/// pmf does not sum to 1 within 1e-9.
double tv_distance_poisson(const std::map<std::uint64_t, double>& pmf, double lambda);

/// First-order Monte Carlo allowance for the empirical TV estimate:
/// sum over the truncated support of (1/2) * sqrt(p_k (1-p_k) / r).
double tv_mc_allowance(const std::map<std::uint64_t, double>& pmf, std::uint64_t r,
                       double lambda);

struct ClaimVerdict {
    RegimeClaim claim;
    bool checked = false;  // UNRESOLVED_BOUNDARY rows carry no numeric check
    bool pass = false;
};

struct RegimeRow {
    ModelParams params;
    ChenSteinBound chen_stein;
    EnsembleSummary summary;
    std::vector<ClaimVerdict> verdicts;
};

struct RegimeReport {
    std::vector<int> n_list;
    std::vector<double> alpha_grid;
    double c = 1.0;
    std::uint64_t r = 0;
    std::uint64_t master_seed = 0;
    double delta = 0.01;
    std::vector<RegimeRow> rows;  // alpha-major, n within alpha, input order

    bool all_checked_pass() const;
};

/// One ensemble per (n, alpha) grid point, with a verdict for every claim
/// regime_classify reports for that alpha (slack delta on event
/// frequencies). POISSON_TV_CONVERGES compares consecutive n within one
/// alpha: the TV distance may not increase by more than the two Monte Carlo
/// allowances combined. Per-cell seeds are derived from
/// (master_seed, n, alpha) with splitmix64 mixing, so cells decorrelate.
RegimeReport regime_sweep(const std::vector<int>& n_list,
                          const std::vector<double>& alpha_grid, double c,
                          std::uint64_t r, std::uint64_t master_seed,
                          double delta = 0.01, int threads = 1);

/// Fraction of trials in which every fibonacci_grid(m) point lies within
/// angular distance a of some center. Grid-approximate by construction:
/// holes smaller than the grid mesh go undetected.
double coverage_probability(const ModelParams& params, std::uint64_t r, std::size_t m,
                            std::uint64_t master_seed, int threads = 1);

}  // namespace capgraph
