#include "capgraph/ensemble.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "capgraph/sphere.hpp"

namespace capgraph {

namespace {

struct TrialCore {
    std::uint64_t edge_count = 0;
    int isolated_count = 0;
};

CapGraph realize_graph(const ModelParams& params, std::uint64_t master_seed,
                       std::uint64_t trial_index) {
    RandomStream stream(master_seed, trial_index);
    auto centers = sample_unit_vectors(stream, static_cast<std::size_t>(params.n));
    return build_graph_zoned(std::move(centers), params.a);
}

TrialCore run_trial_core(const ModelParams& params, std::uint64_t master_seed,
                         std::uint64_t trial_index) {
    const CapGraph g = realize_graph(params, master_seed, trial_index);
    return {g.edges.size(), isolated_count(g)};
}

// Exact integer aggregates; merging two accumulators commutes, so the
// ensemble result cannot depend on how trials were scheduled.
struct Accumulator {
    std::map<std::uint64_t, std::uint64_t> edge_counts;
    std::uint64_t sum_edges = 0;
    unsigned __int128 sum_edges_sq = 0;
    std::uint64_t sum_isolated = 0;
    std::uint64_t trials_no_isolated = 0;
    std::uint64_t trials_all_isolated = 0;
    std::uint64_t trials_no_edges = 0;
    std::uint64_t trials_half_n_edges = 0;

    void add(const TrialCore& t, int n) {
        ++edge_counts[t.edge_count];
        sum_edges += t.edge_count;
        sum_edges_sq += static_cast<unsigned __int128>(t.edge_count) * t.edge_count;
        sum_isolated += static_cast<std::uint64_t>(t.isolated_count);
        if (t.isolated_count == 0) ++trials_no_isolated;
        if (t.isolated_count == n) ++trials_all_isolated;
        if (t.edge_count == 0) ++trials_no_edges;
        if (2 * t.edge_count >= static_cast<std::uint64_t>(n)) ++trials_half_n_edges;
    }

    void merge(const Accumulator& other) {
        for (const auto& [k, v] : other.edge_counts) edge_counts[k] += v;
        sum_edges += other.sum_edges;
        sum_edges_sq += other.sum_edges_sq;
        sum_isolated += other.sum_isolated;
        trials_no_isolated += other.trials_no_isolated;
        trials_all_isolated += other.trials_all_isolated;
        trials_no_edges += other.trials_no_edges;
        trials_half_n_edges += other.trials_half_n_edges;
    }
};

template <typename PerTrial>
Accumulator accumulate_trials(const ModelParams& params, std::uint64_t r, int threads,
                              PerTrial per_trial) {
    const int workers = std::max(1, threads);
    if (workers == 1 || r < 2) {
        Accumulator acc;
        for (std::uint64_t t = 0; t < r; ++t) acc.add(per_trial(t), params.n);
        return acc;
    }
    std::vector<Accumulator> partials(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            const std::uint64_t lo = r * static_cast<std::uint64_t>(w) / workers;
            const std::uint64_t hi = r * static_cast<std::uint64_t>(w + 1) / workers;
            for (std::uint64_t t = lo; t < hi; ++t) partials[w].add(per_trial(t), params.n);
        });
    }
    for (auto& th : pool) th.join();
    Accumulator acc;
    for (const auto& partial : partials) acc.merge(partial);
    return acc;
}

// Count trials satisfying a deterministic per-trial predicate.
template <typename Predicate>
std::uint64_t count_trials(std::uint64_t r, int threads, Predicate pred) {
    const int workers = std::max(1, threads);
    if (workers == 1 || r < 2) {
        std::uint64_t hits = 0;
        for (std::uint64_t t = 0; t < r; ++t) hits += pred(t) ? 1 : 0;
        return hits;
    }
    std::vector<std::uint64_t> partials(workers, 0);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            const std::uint64_t lo = r * static_cast<std::uint64_t>(w) / workers;
            const std::uint64_t hi = r * static_cast<std::uint64_t>(w + 1) / workers;
            for (std::uint64_t t = lo; t < hi; ++t) partials[w] += pred(t) ? 1 : 0;
        });
    }
    for (auto& th : pool) th.join();
    std::uint64_t hits = 0;
    for (std::uint64_t partial : partials) hits += partial;
    return hits;
}

double log_poisson_pmf(std::uint64_t k, double lambda) {
    return -lambda + static_cast<double>(k) * std::log(lambda) -
           std::lgamma(static_cast<double>(k) + 1.0);
}

// Smallest k with Poisson CDF >= 1 - 1e-12, extended to cover the observed
// support. The scan is capped well past the 1e-12 quantile.
std::uint64_t truncation_point(const std::map<std::uint64_t, double>& pmf, double lambda) {
    std::uint64_t k_max = 0;
    if (lambda > 0.0) {
        const auto hard_cap = static_cast<std::uint64_t>(
            lambda + 20.0 * std::sqrt(lambda + 1.0) + 200.0);
        double cdf = 0.0;
        while (k_max < hard_cap) {
            cdf += std::exp(log_poisson_pmf(k_max, lambda));
            if (cdf >= 1.0 - 1e-12) break;
            ++k_max;
        }
    }
    if (!pmf.empty()) k_max = std::max(k_max, pmf.rbegin()->first);
    return k_max;
}

void validate_pmf(const std::map<std::uint64_t, double>& pmf) {
    double total = 0.0;
    for (const auto& [k, v] : pmf) {
        if (v < 0.0) throw std::domain_error("pmf values must be nonnegative");
        total += v;
    }
    if (std::abs(total - 1.0) > 1e-9) {
        throw std::domain_error("pmf must sum to 1 within 1e-9");
    }
}

double pmf_at(const std::map<std::uint64_t, double>& pmf, std::uint64_t k) {
    const auto it = pmf.find(k);
    return it == pmf.end() ? 0.0 : it->second;
}

std::uint64_t cell_seed(std::uint64_t master_seed, int n, double alpha) {
    const auto alpha_bits = std::bit_cast<std::uint64_t>(alpha);
    return mix64(mix64(mix64(master_seed) ^ alpha_bits) + static_cast<std::uint64_t>(n));
}

}  // namespace

CapGraph realize_trial_graph(const ModelParams& params, std::uint64_t master_seed,
                             std::uint64_t trial_index) {
    return realize_graph(params, master_seed, trial_index);
}

double poisson_pmf(std::uint64_t k, double lambda) {
    if (!(lambda >= 0.0)) throw std::domain_error("lambda must be >= 0");
    if (lambda == 0.0) return k == 0 ? 1.0 : 0.0;
    return std::exp(log_poisson_pmf(k, lambda));
}

TrialStats run_trial(const ModelParams& params, std::uint64_t master_seed,
                     std::uint64_t trial_index) {
    const CapGraph g = realize_graph(params, master_seed, trial_index);
    TrialStats stats;
    stats.trial_index = trial_index;
    stats.edge_count = g.edges.size();
    stats.isolated_count = isolated_count(g);
    stats.degree_hist = degree_histogram(g);
    return stats;
}

EnsembleSummary run_ensemble(const ModelParams& params, std::uint64_t r,
                             std::uint64_t master_seed, int threads) {
    if (r == 0) throw std::domain_error("trial count r must be >= 1");

    const Accumulator acc = accumulate_trials(
        params, r, threads,
        [&](std::uint64_t t) { return run_trial_core(params, master_seed, t); });

    EnsembleSummary s;
    s.params = params;
    s.r = r;
    s.counts = acc.edge_counts;
    const auto rd = static_cast<double>(r);
    for (const auto& [k, count] : acc.edge_counts) {
        s.pmf[k] = static_cast<double>(count) / rd;
    }
    s.mean_edges = static_cast<double>(acc.sum_edges) / rd;
    if (r > 1) {
        const double sum_sq = static_cast<double>(acc.sum_edges_sq);
        const double sum = static_cast<double>(acc.sum_edges);
        s.var_edges = std::max(0.0, (sum_sq - sum * sum / rd) / (rd - 1.0));
    }
    s.mean_isolated = static_cast<double>(acc.sum_isolated) / rd;
    s.tv_distance = tv_distance_poisson(s.pmf, params.lambda);
    s.tv_mc_error = tv_mc_allowance(s.pmf, r, params.lambda);
    s.frac_no_isolated = static_cast<double>(acc.trials_no_isolated) / rd;
    s.frac_all_isolated = static_cast<double>(acc.trials_all_isolated) / rd;
    s.frac_no_edges = static_cast<double>(acc.trials_no_edges) / rd;
    s.frac_half_n_edges = static_cast<double>(acc.trials_half_n_edges) / rd;
    return s;
}

double tv_distance_poisson(const std::map<std::uint64_t, double>& pmf, double lambda) {
    if (!(lambda >= 0.0)) throw std::domain_error("lambda must be >= 0");
    validate_pmf(pmf);

    if (lambda == 0.0) {
        // Poisson(0) is a point mass at zero.
        double tv = std::abs(pmf_at(pmf, 0) - 1.0);
        for (const auto& [k, v] : pmf) {
            if (k > 0) tv += v;
        }
        return std::clamp(0.5 * tv, 0.0, 1.0);
    }

    const std::uint64_t k_max = truncation_point(pmf, lambda);
    double tv = 0.0;
    double cdf = 0.0;
    for (std::uint64_t k = 0; k <= k_max; ++k) {
        const double poi = std::exp(log_poisson_pmf(k, lambda));
        cdf += poi;
        tv += std::abs(pmf_at(pmf, k) - poi);
    }
    tv += std::max(0.0, 1.0 - cdf);  // Poisson tail beyond the truncation
    return std::clamp(0.5 * tv, 0.0, 1.0);
}

double tv_mc_allowance(const std::map<std::uint64_t, double>& pmf, std::uint64_t r,
                       double lambda) {
    if (r == 0) throw std::domain_error("trial count r must be >= 1");
    const std::uint64_t k_max = truncation_point(pmf, lambda);
    double allowance = 0.0;
    for (const auto& [k, v] : pmf) {
        if (k > k_max) continue;
        allowance += 0.5 * std::sqrt(v * (1.0 - v) / static_cast<double>(r));
    }
    return allowance;
}

bool RegimeReport::all_checked_pass() const {
    for (const auto& row : rows) {
        for (const auto& verdict : row.verdicts) {
            if (verdict.checked && !verdict.pass) return false;
        }
    }
    return true;
}

RegimeReport regime_sweep(const std::vector<int>& n_list,
                          const std::vector<double>& alpha_grid, double c,
                          std::uint64_t r, std::uint64_t master_seed, double delta,
                          int threads) {
    if (n_list.empty() || alpha_grid.empty()) {
        throw std::domain_error("regime_sweep requires non-empty n and alpha grids");
    }
    if (r == 0) throw std::domain_error("trial count r must be >= 1");

    RegimeReport report;
    report.n_list = n_list;
    report.alpha_grid = alpha_grid;
    report.c = c;
    report.r = r;
    report.master_seed = master_seed;
    report.delta = delta;

    for (double alpha : alpha_grid) {
        const std::size_t first_row = report.rows.size();
        for (int n : n_list) {
            RegimeRow row;
            row.params = params_from_alpha(n, c, alpha);
            row.chen_stein = chen_stein_bounds(n, row.params.p);
            row.summary =
                run_ensemble(row.params, r, cell_seed(master_seed, n, alpha), threads);
            report.rows.push_back(std::move(row));
        }

        // Verdicts per applicable claim. POISSON_TV_CONVERGES is a
        // cross-n statement, checked against the previous smaller n.
        std::vector<std::size_t> order;
        for (std::size_t i = first_row; i < report.rows.size(); ++i) order.push_back(i);
        std::sort(order.begin(), order.end(), [&](std::size_t l, std::size_t rr) {
            return report.rows[l].params.n < report.rows[rr].params.n;
        });

        const auto claims = regime_classify(alpha);
        for (std::size_t pos = 0; pos < order.size(); ++pos) {
            RegimeRow& row = report.rows[order[pos]];
            const EnsembleSummary& s = row.summary;
            for (RegimeClaim claim : claims) {
                ClaimVerdict verdict{claim, true, false};
                switch (claim) {
                    case RegimeClaim::NO_ISOLATED_AS:
                        verdict.pass = s.frac_no_isolated >= 1.0 - delta;
                        break;
                    case RegimeClaim::AT_LEAST_HALF_N_EDGES:
                        verdict.pass = s.frac_half_n_edges >= 1.0 - delta;
                        break;
                    case RegimeClaim::NOT_ALL_ISOLATED_EVENTUALLY:
                        verdict.pass = 1.0 - s.frac_all_isolated >= 1.0 - delta;
                        break;
                    case RegimeClaim::ALL_ISOLATED_AS:
                    case RegimeClaim::NO_EDGES_AS:
                        verdict.pass = s.frac_no_edges >= 1.0 - delta;
                        break;
                    case RegimeClaim::POISSON_TV_CONVERGES: {
                        if (pos == 0) {
                            verdict.pass = true;  // smallest n has no predecessor
                        } else {
                            const EnsembleSummary& prev =
                                report.rows[order[pos - 1]].summary;
                            verdict.pass = s.tv_distance <= prev.tv_distance +
                                                                prev.tv_mc_error +
                                                                s.tv_mc_error;
                        }
                        break;
                    }
                    case RegimeClaim::UNRESOLVED_BOUNDARY:
                        verdict.checked = false;
                        verdict.pass = true;
                        break;
                }
                row.verdicts.push_back(verdict);
            }
        }
    }
    return report;
}

double coverage_probability(const ModelParams& params, std::uint64_t r, std::size_t m,
                            std::uint64_t master_seed, int threads) {
    if (r == 0) throw std::domain_error("trial count r must be >= 1");
    if (m == 0) throw std::domain_error("grid size m must be >= 1");

    const auto grid = fibonacci_grid(m);
    const double cos_a = std::cos(params.a);

    // A grid point is covered iff it lies strictly inside some (open) cap,
    // i.e. its dot product with a center exceeds cos(a).
    auto covered_trial = [&](std::uint64_t t) {
        RandomStream stream(master_seed, t);
        const auto centers =
            sample_unit_vectors(stream, static_cast<std::size_t>(params.n));
        for (const auto& g : grid) {
            bool covered = false;
            for (const auto& c : centers) {
                if (dot(g, c) > cos_a) {
                    covered = true;
                    break;
                }
            }
            if (!covered) return false;
        }
        return true;
    };

    const std::uint64_t covered = count_trials(r, threads, covered_trial);
    return static_cast<double>(covered) / static_cast<double>(r);
}

}  // namespace capgraph
