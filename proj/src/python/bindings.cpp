#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "capgraph/ensemble.hpp"

namespace py = pybind11;
using namespace capgraph;

namespace {

std::vector<std::string> claim_names(double alpha) {
    std::vector<std::string> names;
    for (RegimeClaim claim : regime_classify(alpha)) {
        names.emplace_back(to_string(claim));
    }
    return names;
}

py::list rows_as_dicts(const RegimeReport& report) {
    py::list rows;
    for (const auto& row : report.rows) {
        py::dict d;
        d["n"] = row.params.n;
        d["c"] = row.params.c ? py::cast(*row.params.c) : py::none();
        d["alpha"] = row.params.alpha ? py::cast(*row.params.alpha) : py::none();
        d["p"] = row.params.p;
        d["q"] = row.params.q;
        d["lambda"] = row.params.lambda;
        d["bound_paper"] = row.chen_stein.bound_paper;
        d["bound_corrected"] = row.chen_stein.bound_corrected;
        d["summary"] = row.summary;
        py::dict verdicts;
        for (const auto& verdict : row.verdicts) {
            verdicts[to_string(verdict.claim)] =
                verdict.checked ? py::cast(verdict.pass) : py::none();
        }
        d["verdicts"] = verdicts;
        rows.append(d);
    }
    return rows;
}

}  // namespace

PYBIND11_MODULE(_capgraph, m) {
    m.doc() = "Spherical-cap random intersection graphs: closed forms, seeded "
              "Monte Carlo ensembles, Poisson-approximation diagnostics.";
    m.attr("__version__") = CAPGRAPH_VERSION;

    py::class_<ModelParams>(m, "ModelParams")
        .def_readonly("n", &ModelParams::n)
        .def_readonly("p", &ModelParams::p)
        .def_readonly("a", &ModelParams::a)
        .def_readonly("q", &ModelParams::q)
        .def_readonly("lam", &ModelParams::lambda)
        .def_property_readonly("c",
                               [](const ModelParams& mp) -> py::object {
                                   return mp.c ? py::cast(*mp.c) : py::none();
                               })
        .def_property_readonly("alpha",
                               [](const ModelParams& mp) -> py::object {
                                   return mp.alpha ? py::cast(*mp.alpha) : py::none();
                               })
        .def("__repr__", [](const ModelParams& mp) {
            std::ostringstream out;
            out << "ModelParams(n=" << mp.n << ", p=" << mp.p << ", q=" << mp.q
                << ", lam=" << mp.lambda << ")";
            return out.str();
        });

    py::class_<ChenSteinBound>(m, "ChenSteinBound")
        .def_readonly("lam", &ChenSteinBound::lambda)
        .def_readonly("prefactor", &ChenSteinBound::prefactor)
        .def_readonly("b1", &ChenSteinBound::b1)
        .def_readonly("b2", &ChenSteinBound::b2)
        .def_readonly("bound_paper", &ChenSteinBound::bound_paper)
        .def_readonly("bound_corrected", &ChenSteinBound::bound_corrected);

    py::class_<UnitVector>(m, "UnitVector")
        .def(py::init<double, double, double>(), py::arg("x"), py::arg("y"), py::arg("z"))
        .def_readonly("x", &UnitVector::x)
        .def_readonly("y", &UnitVector::y)
        .def_readonly("z", &UnitVector::z)
        .def("__repr__", [](const UnitVector& v) {
            std::ostringstream out;
            out << "UnitVector(" << v.x << ", " << v.y << ", " << v.z << ")";
            return out.str();
        });

    py::class_<RandomStream>(m, "RandomStream")
        .def(py::init<std::uint64_t, std::uint64_t>(), py::arg("master_seed"),
             py::arg("stream_index"))
        .def("next_u64", &RandomStream::next_u64)
        .def("next_double", &RandomStream::next_double)
        .def_property_readonly("master_seed", &RandomStream::master_seed)
        .def_property_readonly("stream_index", &RandomStream::stream_index)
        .def_property_readonly("position", &RandomStream::position);

    py::class_<CapGraph>(m, "CapGraph")
        .def_readonly("n", &CapGraph::n)
        .def_readonly("a", &CapGraph::a)
        .def_readonly("centers", &CapGraph::centers)
        .def_readonly("edges", &CapGraph::edges)
        .def_readonly("degrees", &CapGraph::degrees);

    py::class_<TrialStats>(m, "TrialStats")
        .def_readonly("trial_index", &TrialStats::trial_index)
        .def_readonly("edge_count", &TrialStats::edge_count)
        .def_readonly("isolated_count", &TrialStats::isolated_count)
        .def_readonly("degree_hist", &TrialStats::degree_hist);

    py::class_<EnsembleSummary>(m, "EnsembleSummary")
        .def_readonly("params", &EnsembleSummary::params)
        .def_readonly("r", &EnsembleSummary::r)
        .def_readonly("counts", &EnsembleSummary::counts)
        .def_readonly("pmf", &EnsembleSummary::pmf)
        .def_readonly("mean_edges", &EnsembleSummary::mean_edges)
        .def_readonly("var_edges", &EnsembleSummary::var_edges)
        .def_readonly("mean_isolated", &EnsembleSummary::mean_isolated)
        .def_readonly("tv_distance", &EnsembleSummary::tv_distance)
        .def_readonly("tv_mc_error", &EnsembleSummary::tv_mc_error)
        .def_readonly("frac_no_isolated", &EnsembleSummary::frac_no_isolated)
        .def_readonly("frac_all_isolated", &EnsembleSummary::frac_all_isolated)
        .def_readonly("frac_no_edges", &EnsembleSummary::frac_no_edges)
        .def_readonly("frac_half_n_edges", &EnsembleSummary::frac_half_n_edges);

    // model formulas
    m.def("cap_probability_from_radius", &cap_probability_from_radius, py::arg("a"));
    m.def("radius_from_probability", &radius_from_probability, py::arg("p"));
    m.def("edge_probability", &edge_probability, py::arg("p"));
    m.def("expected_edge_count", &expected_edge_count, py::arg("n"), py::arg("p"));
    m.def("poisson_lambda", &poisson_lambda, py::arg("n"), py::arg("p"));
    m.def("chen_stein_bounds", &chen_stein_bounds, py::arg("n"), py::arg("p"));
    m.def("expected_isolated_count", &expected_isolated_count, py::arg("n"), py::arg("p"));
    m.def("isolated_exists_upper_bound", &isolated_exists_upper_bound, py::arg("n"),
          py::arg("p"));
    m.def("all_isolated_upper_bound", &all_isolated_upper_bound, py::arg("n"),
          py::arg("p"));
    m.def("edge_existence_upper_bound", &edge_existence_upper_bound, py::arg("n"),
          py::arg("p"));
    m.def("params_from_area_fraction", &params_from_area_fraction, py::arg("n"),
          py::arg("p"));
    m.def("params_from_alpha", &params_from_alpha, py::arg("n"), py::arg("c"),
          py::arg("alpha"));
    m.def("regime_classify", &claim_names, py::arg("alpha"),
          "Applicable claim labels for a decay exponent.");

    // sphere
    m.def("sample_unit_vectors",
          [](std::uint64_t master_seed, std::uint64_t stream_index, std::size_t count) {
              RandomStream stream(master_seed, stream_index);
              return sample_unit_vectors(stream, count);
          },
          py::arg("master_seed"), py::arg("stream_index"), py::arg("count"));
    m.def("angular_distance", &angular_distance, py::arg("u"), py::arg("v"));
    m.def("fibonacci_grid", &fibonacci_grid, py::arg("m"));

    // graph builders
    m.def("build_graph_naive",
          [](const std::vector<UnitVector>& centers, double a) {
              return build_graph_naive(centers, a);
          },
          py::arg("centers"), py::arg("a"));
    m.def("build_graph_zoned",
          [](const std::vector<UnitVector>& centers, double a) {
              return build_graph_zoned(centers, a);
          },
          py::arg("centers"), py::arg("a"));
    m.def("isolated_count", &isolated_count, py::arg("graph"));
    m.def("degree_histogram", &degree_histogram, py::arg("graph"));

    // ensembles
    m.def("run_trial", &run_trial, py::arg("params"), py::arg("master_seed"),
          py::arg("trial_index"));
    m.def("realize_trial_graph", &realize_trial_graph, py::arg("params"),
          py::arg("master_seed"), py::arg("trial_index"));
    m.def("run_ensemble", &run_ensemble, py::arg("params"), py::arg("r"),
          py::arg("master_seed"), py::arg("threads") = 1,
          py::call_guard<py::gil_scoped_release>());
    m.def("tv_distance_poisson", &tv_distance_poisson, py::arg("pmf"), py::arg("lam"));
    m.def("tv_mc_allowance", &tv_mc_allowance, py::arg("pmf"), py::arg("r"),
          py::arg("lam"));
    m.def("poisson_pmf", &poisson_pmf, py::arg("k"), py::arg("lam"));
    m.def("regime_sweep",
          [](const std::vector<int>& n_list, const std::vector<double>& alpha_grid,
             double c, std::uint64_t r, std::uint64_t master_seed, double delta,
             int threads) {
              return rows_as_dicts(
                  regime_sweep(n_list, alpha_grid, c, r, master_seed, delta, threads));
          },
          py::arg("n_list"), py::arg("alpha_grid"), py::arg("c"), py::arg("r"),
          py::arg("master_seed"), py::arg("delta") = 0.01, py::arg("threads") = 1);
    m.def("coverage_probability", &coverage_probability, py::arg("params"), py::arg("r"),
          py::arg("m"), py::arg("master_seed"), py::arg("threads") = 1,
          py::call_guard<py::gil_scoped_release>());
}
