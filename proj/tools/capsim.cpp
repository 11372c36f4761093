// capsim: command-line front end for the spherical-cap intersection graph
// simulator. Subcommands: formulas, simulate, sweep, coverage.
//
// Every artifact embeds the statistical configuration, the master seed and
// the tool version, so a result is reproducible from its own header. Numbers
// are serialized with up to 17 significant digits (%.17g), which round-trips
// doubles exactly. Execution knobs (--threads, output paths) are not part of
// the embedded config: the same configuration produces byte-identical
// artifacts for any thread count.
//
// Exit codes: 0 success, 2 usage error, 3 I/O error, 4 claim-verdict failure
// (sweep --check).

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "capgraph/ensemble.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitVerdict = 4;

// Fixed default master seed; deliberately not time-based.
constexpr std::uint64_t kDefaultSeed = 1729;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string fmt_opt(const std::optional<double>& v) {
    return v ? fmt(*v) : "null";
}

std::string json_params(const capgraph::ModelParams& mp) {
    std::ostringstream out;
    out << "{\"n\": " << mp.n << ", \"p\": " << fmt(mp.p) << ", \"a\": " << fmt(mp.a)
        << ", \"q\": " << fmt(mp.q) << ", \"lambda\": " << fmt(mp.lambda)
        << ", \"c\": " << fmt_opt(mp.c) << ", \"alpha\": " << fmt_opt(mp.alpha) << "}";
    return out.str();
}

std::string json_chen_stein(const capgraph::ChenSteinBound& cs) {
    std::ostringstream out;
    out << "{\"lambda\": " << fmt(cs.lambda) << ", \"prefactor\": " << fmt(cs.prefactor)
        << ", \"b1\": " << fmt(cs.b1) << ", \"b2\": " << fmt(cs.b2)
        << ", \"bound_paper\": " << fmt(cs.bound_paper)
        << ", \"bound_paper_clamped\": " << fmt(std::min(1.0, cs.bound_paper))
        << ", \"bound_corrected\": " << fmt(cs.bound_corrected)
        << ", \"bound_corrected_clamped\": " << fmt(std::min(1.0, cs.bound_corrected))
        << "}";
    return out.str();
}

// Options shared by the subcommands; which ones are meaningful depends on
// the subcommand.
struct Options {
    int n = 0;
    std::vector<int> n_list;
    std::optional<double> p;
    std::optional<double> c;
    std::optional<double> alpha;
    std::vector<double> alpha_grid;
    std::uint64_t trials = 1000;
    std::uint64_t seed = kDefaultSeed;
    std::size_t grid_points = 2000;
    double delta = 0.01;
    int threads = 1;
    std::string out;
    std::string emit_pmf;
    std::string dump_edges;
    bool check = false;
};

// Exactly one of p or (c, alpha) selects the model.
capgraph::ModelParams resolve_params(const Options& opt) {
    const bool has_p = opt.p.has_value();
    const bool has_c = opt.c.has_value();
    const bool has_alpha = opt.alpha.has_value();
    if (has_p && (has_c || has_alpha)) {
        throw UsageError("--p conflicts with --c/--alpha; choose one parameterization");
    }
    if (has_p) return capgraph::params_from_area_fraction(opt.n, *opt.p);
    if (has_c != has_alpha) {
        throw UsageError("--c and --alpha must be given together");
    }
    if (!has_c) {
        throw UsageError("missing parameterization: give --p or both --c and --alpha");
    }
    return capgraph::params_from_alpha(opt.n, *opt.c, *opt.alpha);
}

std::string config_pair(const char* key, const std::string& value) {
    return std::string("\"") + key + "\": " + value;
}

std::string json_config(const Options& opt, const char* command) {
    std::ostringstream out;
    out << "{" << config_pair("n", std::to_string(opt.n)) << ", "
        << config_pair("p", fmt_opt(opt.p)) << ", " << config_pair("c", fmt_opt(opt.c))
        << ", " << config_pair("alpha", fmt_opt(opt.alpha));
    const std::string cmd(command);
    if (cmd != "formulas") {
        out << ", " << config_pair("trials", std::to_string(opt.trials));
    }
    if (cmd == "coverage") {
        out << ", " << config_pair("grid_points", std::to_string(opt.grid_points));
    }
    if (cmd == "simulate") {
        out << ", " << config_pair("delta", fmt(opt.delta));
    }
    out << ", " << config_pair("master_seed", std::to_string(opt.seed)) << "}";
    return out.str();
}

void write_artifact(const Options& opt, const std::string& text) {
    if (opt.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(opt.out, std::ios::binary);
    if (!file) throw std::ios_base::failure("cannot open output file: " + opt.out);
    file << text;
    if (!file) throw std::ios_base::failure("failed writing output file: " + opt.out);
}

void write_named_file(const std::string& path, const std::string& text) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::ios_base::failure("cannot open output file: " + path);
    file << text;
    if (!file) throw std::ios_base::failure("failed writing output file: " + path);
}

std::string header_lines(const char* command) {
    std::ostringstream out;
    out << "{\n  \"artifact\": \"capsim\",\n  \"version\": \"" << CAPGRAPH_VERSION
        << "\",\n  \"command\": \"" << command << "\",\n";
    return out.str();
}

int cmd_formulas(const Options& opt) {
    const capgraph::ModelParams mp = resolve_params(opt);

    std::ostringstream out;
    out << header_lines("formulas");
    out << "  \"config\": " << json_config(opt, "formulas") << ",\n";
    out << "  \"params\": " << json_params(mp) << ",\n";
    out << "  \"formulas\": {";
    out << "\"expected_edge_count\": " << fmt(capgraph::expected_edge_count(mp.n, mp.p));
    out << ", \"expected_isolated_count\": "
        << (mp.n >= 1 ? fmt(capgraph::expected_isolated_count(mp.n, mp.p)) : "null");
    if (mp.n >= 2) {
        out << ", \"isolated_exists_upper_bound\": "
            << fmt(capgraph::isolated_exists_upper_bound(mp.n, mp.p));
        out << ", \"isolated_exists_upper_bound_raw\": "
            << fmt(capgraph::isolated_exists_upper_bound_raw(mp.n, mp.p));
        out << ", \"all_isolated_upper_bound_paper\": "
            << fmt(capgraph::all_isolated_upper_bound(mp.n, mp.p));
    } else {
        out << ", \"isolated_exists_upper_bound\": null"
            << ", \"isolated_exists_upper_bound_raw\": null"
            << ", \"all_isolated_upper_bound_paper\": null";
    }
    out << ", \"edge_existence_upper_bound\": "
        << fmt(capgraph::edge_existence_upper_bound(mp.n, mp.p));
    out << ", \"edge_existence_upper_bound_raw\": "
        << fmt(capgraph::edge_existence_upper_bound_raw(mp.n, mp.p));
    out << "},\n";
    out << "  \"chen_stein\": "
        << (mp.n >= 2 ? json_chen_stein(capgraph::chen_stein_bounds(mp.n, mp.p)) : "null")
        << ",\n";
    out << "  \"regimes\": ";
    if (mp.alpha) {
        out << "[";
        const auto claims = capgraph::regime_classify(*mp.alpha);
        for (std::size_t i = 0; i < claims.size(); ++i) {
            out << (i ? ", " : "") << "\"" << capgraph::to_string(claims[i]) << "\"";
        }
        out << "]";
    } else {
        out << "null";
    }
    out << "\n}\n";
    write_artifact(opt, out.str());
    return kExitOk;
}

std::string json_summary(const capgraph::EnsembleSummary& s) {
    std::ostringstream out;
    out << "{\n    \"r\": " << s.r << ",\n    \"mean_edges\": " << fmt(s.mean_edges)
        << ",\n    \"var_edges\": " << fmt(s.var_edges)
        << ",\n    \"mean_isolated\": " << fmt(s.mean_isolated)
        << ",\n    \"tv_distance\": " << fmt(s.tv_distance)
        << ",\n    \"tv_mc_error\": " << fmt(s.tv_mc_error)
        << ",\n    \"frac_no_isolated\": " << fmt(s.frac_no_isolated)
        << ",\n    \"frac_all_isolated\": " << fmt(s.frac_all_isolated)
        << ",\n    \"frac_no_edges\": " << fmt(s.frac_no_edges)
        << ",\n    \"frac_half_n_edges\": " << fmt(s.frac_half_n_edges)
        << ",\n    \"pmf\": {";
    bool first = true;
    for (const auto& [k, v] : s.pmf) {
        out << (first ? "" : ", ") << "\"" << k << "\": " << fmt(v);
        first = false;
    }
    out << "}\n  }";
    return out.str();
}

int cmd_simulate(const Options& opt) {
    const capgraph::ModelParams mp = resolve_params(opt);
    const capgraph::EnsembleSummary s =
        capgraph::run_ensemble(mp, opt.trials, opt.seed, opt.threads);

    std::ostringstream out;
    out << header_lines("simulate");
    out << "  \"config\": " << json_config(opt, "simulate") << ",\n";
    out << "  \"params\": " << json_params(mp) << ",\n";
    out << "  \"chen_stein\": "
        << (mp.n >= 2 ? json_chen_stein(capgraph::chen_stein_bounds(mp.n, mp.p)) : "null")
        << ",\n";
    out << "  \"summary\": " << json_summary(s) << "\n}\n";
    write_artifact(opt, out.str());

    if (!opt.emit_pmf.empty()) {
        std::ostringstream csv;
        csv << "k,count,probability,poisson_probability\n";
        for (const auto& [k, count] : s.counts) {
            csv << k << ',' << count << ',' << fmt(s.pmf.at(k)) << ','
                << fmt(capgraph::poisson_pmf(k, mp.lambda)) << '\n';
        }
        write_named_file(opt.emit_pmf, csv.str());
    }
    if (!opt.dump_edges.empty()) {
        const capgraph::CapGraph g = capgraph::realize_trial_graph(mp, opt.seed, 0);
        std::ostringstream dump;
        capgraph::write_edge_list(g, dump);
        write_named_file(opt.dump_edges, dump.str());
    }
    return kExitOk;
}

int cmd_sweep(const Options& opt) {
    if (opt.n_list.empty()) throw UsageError("sweep requires --n-list");
    if (opt.alpha_grid.empty()) throw UsageError("sweep requires --alpha-grid");
    const double c = opt.c.value_or(1.0);

    const capgraph::RegimeReport report = capgraph::regime_sweep(
        opt.n_list, opt.alpha_grid, c, opt.trials, opt.seed, opt.delta, opt.threads);

    std::ostringstream out;
    out << "# capsim sweep\n";
    out << "# version=" << CAPGRAPH_VERSION << "\n";
    out << "# master_seed=" << opt.seed << "\n";
    out << "# c=" << fmt(c) << "\n";
    out << "# trials=" << opt.trials << "\n";
    out << "# delta=" << fmt(opt.delta) << "\n";
    out << "# n_list=";
    for (std::size_t i = 0; i < opt.n_list.size(); ++i) {
        out << (i ? ";" : "") << opt.n_list[i];
    }
    out << "\n# alpha_grid=";
    for (std::size_t i = 0; i < opt.alpha_grid.size(); ++i) {
        out << (i ? ";" : "") << fmt(opt.alpha_grid[i]);
    }
    out << "\nn,c,alpha,p,q,lambda,mean_edges,var_edges,mean_isolated,tv_distance,"
           "tv_mc_error,bound_paper,bound_corrected,frac_no_isolated,frac_all_isolated,"
           "frac_no_edges,frac_half_n_edges,verdicts\n";

    for (const auto& row : report.rows) {
        const auto& s = row.summary;
        out << row.params.n << ',' << fmt(*row.params.c) << ',' << fmt(*row.params.alpha)
            << ',' << fmt(row.params.p) << ',' << fmt(row.params.q) << ','
            << fmt(row.params.lambda) << ',' << fmt(s.mean_edges) << ','
            << fmt(s.var_edges) << ',' << fmt(s.mean_isolated) << ','
            << fmt(s.tv_distance) << ',' << fmt(s.tv_mc_error) << ','
            << fmt(row.chen_stein.bound_paper) << ',' << fmt(row.chen_stein.bound_corrected)
            << ',' << fmt(s.frac_no_isolated) << ',' << fmt(s.frac_all_isolated) << ','
            << fmt(s.frac_no_edges) << ',' << fmt(s.frac_half_n_edges) << ',';
        for (std::size_t i = 0; i < row.verdicts.size(); ++i) {
            const auto& verdict = row.verdicts[i];
            out << (i ? ";" : "") << capgraph::to_string(verdict.claim) << '='
                << (!verdict.checked ? "na" : (verdict.pass ? "pass" : "fail"));
        }
        out << '\n';
    }
    write_artifact(opt, out.str());

    if (opt.check && !report.all_checked_pass()) {
        std::cerr << "capsim: sweep verdict failure\n";
        return kExitVerdict;
    }
    return kExitOk;
}

int cmd_coverage(const Options& opt) {
    const capgraph::ModelParams mp = resolve_params(opt);
    const double estimate = capgraph::coverage_probability(mp, opt.trials, opt.grid_points,
                                                           opt.seed, opt.threads);
    // The Np/log N threshold ratio is undefined at n <= 1.
    const bool has_ratio = mp.n > 1;
    const double ratio =
        has_ratio ? mp.n * mp.p / std::log(static_cast<double>(mp.n)) : 0.0;

    std::ostringstream out;
    out << header_lines("coverage");
    out << "  \"config\": " << json_config(opt, "coverage") << ",\n";
    out << "  \"params\": " << json_params(mp) << ",\n";
    out << "  \"coverage\": {\"probability\": " << fmt(estimate)
        << ", \"np_over_log_n\": " << (has_ratio ? fmt(ratio) : "null")
        << ", \"threshold\": 0.5" << ", \"above_threshold\": "
        << (has_ratio ? (ratio > 0.5 ? "true" : "false") : "null")
        << ", \"note\": \"approximate (grid)\"}\n}\n";
    write_artifact(opt, out.str());
    return kExitOk;
}

void add_model_options(CLI::App* cmd, Options& opt, bool list_form) {
    if (list_form) {
        cmd->add_option("--n-list", opt.n_list, "vertex counts (comma separated)")
            ->delimiter(',')
            ->envname("CAPSIM_N_LIST");
        cmd->add_option("--alpha-grid", opt.alpha_grid, "decay exponents (comma separated)")
            ->delimiter(',')
            ->envname("CAPSIM_ALPHA_GRID");
        cmd->add_option("--c", opt.c, "scale constant in p = c/n^alpha (default 1)")
            ->envname("CAPSIM_C");
    } else {
        cmd->add_option("--n", opt.n, "vertex count")->required()->envname("CAPSIM_N");
        cmd->add_option("--p", opt.p, "cap area fraction in [0,1]")->envname("CAPSIM_P");
        cmd->add_option("--c", opt.c, "scale constant in p = c/n^alpha")
            ->envname("CAPSIM_C");
        cmd->add_option("--alpha", opt.alpha, "decay exponent in p = c/n^alpha")
            ->envname("CAPSIM_ALPHA");
    }
}

void add_run_options(CLI::App* cmd, Options& opt) {
    cmd->add_option("--trials", opt.trials, "number of trials")->envname("CAPSIM_TRIALS");
    cmd->add_option("--seed", opt.seed, "master seed (default 1729)")
        ->envname("CAPSIM_SEED");
    cmd->add_option("--threads", opt.threads, "worker threads (output-invariant)")
        ->envname("CAPSIM_THREADS");
    cmd->add_option("--out", opt.out, "output path (default: stdout)")
        ->envname("CAPSIM_OUT");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spherical-cap intersection graph simulator"};
    app.require_subcommand(1);

    Options opt;

    CLI::App* formulas = app.add_subcommand("formulas", "closed-form model quantities");
    add_model_options(formulas, opt, false);
    formulas->add_option("--out", opt.out, "output path (default: stdout)")
        ->envname("CAPSIM_OUT");

    CLI::App* simulate = app.add_subcommand("simulate", "run a seeded ensemble");
    add_model_options(simulate, opt, false);
    add_run_options(simulate, opt);
    simulate->add_option("--delta", opt.delta, "verdict slack")->envname("CAPSIM_DELTA");
    simulate->add_option("--emit-pmf", opt.emit_pmf, "write the edge-count pmf table (CSV)")
        ->envname("CAPSIM_EMIT_PMF");
    simulate->add_option("--dump-edges", opt.dump_edges, "write trial 0's edge list")
        ->envname("CAPSIM_DUMP_EDGES");

    CLI::App* sweep = app.add_subcommand("sweep", "ensemble grid over (n, alpha)");
    add_model_options(sweep, opt, true);
    add_run_options(sweep, opt);
    sweep->add_option("--delta", opt.delta, "verdict slack (default 0.01)")
        ->envname("CAPSIM_DELTA");
    sweep->add_flag("--check", opt.check, "exit 4 when an applicable claim fails")
        ->envname("CAPSIM_CHECK");

    CLI::App* coverage = app.add_subcommand("coverage", "grid-approximate coverage estimate");
    add_model_options(coverage, opt, false);
    add_run_options(coverage, opt);
    coverage->add_option("--grid-points", opt.grid_points, "test grid size")
        ->envname("CAPSIM_GRID_POINTS");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (formulas->parsed()) return cmd_formulas(opt);
        if (simulate->parsed()) return cmd_simulate(opt);
        if (sweep->parsed()) return cmd_sweep(opt);
        if (coverage->parsed()) return cmd_coverage(opt);
        std::cerr << "capsim: no subcommand\n";
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "capsim: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "capsim: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::domain_error& e) {
        std::cerr << "capsim: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "capsim: " << e.what() << "\n";
        return 1;
    }
}
