#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "netvuln/betweenness.hpp"
#include "netvuln/fractal.hpp"
#include "netvuln/generators.hpp"
#include "netvuln/graph.hpp"
#include "netvuln/io.hpp"
#include "netvuln/vulnerability.hpp"

namespace py = pybind11;
using namespace netvuln;

namespace {

AnalysisConfig make_config(int box_runs, std::uint64_t seed, int p_max, double fraction,
                           std::optional<std::pair<int, int>> fit_range, bool geometric_mean,
                           bool with_fractal) {
    AnalysisConfig config;
    config.box_runs = box_runs;
    config.seed = seed;
    config.p_max = p_max;
    config.attack_fraction = fraction;
    config.fit_range = fit_range;
    config.geometric_mean = geometric_mean;
    config.analyze_with_fractal = with_fractal;
    config.attack_with_fractal = with_fractal;
    return config;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Fractal-dimension-weighted vulnerability index for undirected networks";
    m.attr("__version__") = "0.1.0";
    m.attr("UNREACHABLE") = kUnreachable;

    py::register_exception<InputError>(m, "InputError");
    py::register_exception<ParameterError>(m, "ParameterError");
    py::register_exception<UndefinedMetricError>(m, "UndefinedMetricError");
    py::register_exception<FitError>(m, "FitError");
    // The payload (scanned curves) is not carried across; use compare_json
    // for the full record of an indistinguishable pair.
    py::register_exception<IndistinguishableError>(m, "IndistinguishableError");

    py::class_<Graph>(m, "Graph")
        .def_property_readonly("vertex_count", &Graph::vertex_count)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def_property_readonly("edges", [](const Graph& g) { return g.edges(); },
                               "Edges as (u, v) index pairs with u < v")
        .def_property_readonly("labels", [](const Graph& g) { return g.labels(); })
        .def("label", &Graph::label, py::arg("v"))
        .def("index_of", &Graph::index_of, py::arg("label"))
        .def("degree", &Graph::degree, py::arg("v"))
        .def("neighbors",
             [](const Graph& g, int v) {
                 auto span = g.neighbors(v);
                 return std::vector<int>(span.begin(), span.end());
             },
             py::arg("v"))
        .def("has_edge", &Graph::has_edge, py::arg("u"), py::arg("v"))
        .def("induced_subgraph", &Graph::induced_subgraph, py::arg("keep"))
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.vertex_count()) +
                   ", edges=" + std::to_string(g.edge_count()) + ")";
        });

    m.def("build_graph", &build_graph, py::arg("edges"),
          "Build a graph from (label, label) pairs");
    m.def("parse_edge_list", &parse_edge_list_text, py::arg("text"),
          "Parse the edge-list text format ('#' comments, 'v <label>' vertex lines)");
    m.def("edge_list", &edge_list_string, py::arg("graph"),
          "Serialize a graph in the edge-list text format");

    py::class_<DistanceMatrix>(m, "DistanceMatrix")
        .def_property_readonly("vertex_count", &DistanceMatrix::vertex_count)
        .def_property_readonly("diameter", &DistanceMatrix::diameter)
        .def_property_readonly("component_count", &DistanceMatrix::component_count)
        .def_property_readonly("component_sizes", &DistanceMatrix::component_sizes)
        .def_property_readonly("largest_component_size", &DistanceMatrix::largest_component_size)
        .def("distance", [](const DistanceMatrix& dm, int v, int w) { return dm(v, w); },
             py::arg("v"), py::arg("w"), "Hop distance; UNREACHABLE across components")
        .def("reachable", &DistanceMatrix::reachable, py::arg("v"), py::arg("w"));

    m.def("all_pairs_distances", &all_pairs_distances, py::arg("graph"));

    py::class_<BetweennessProfile>(m, "BetweennessProfile")
        .def_readonly("edge_values", &BetweennessProfile::edge_values)
        .def_readonly("vertex_values", &BetweennessProfile::vertex_values)
        .def_readonly("vertex_count", &BetweennessProfile::vertex_count)
        .def_readonly("pair_normalization", &BetweennessProfile::pair_normalization);

    py::enum_<Normalization>(m, "Normalization")
        .value("RAW", Normalization::kRaw)
        .value("PAIR_NORMALIZED", Normalization::kPairNormalized);

    m.def("edge_betweenness", &edge_betweenness, py::arg("graph"));
    m.def("average_betweenness", &average_betweenness, py::arg("profile"));
    m.def("multiscale_vulnerability", &multiscale_vulnerability, py::arg("profile"), py::arg("p"),
          py::arg("norm") = Normalization::kRaw);
    m.def("normalized_betweenness", &normalized_betweenness, py::arg("profile"));

    py::class_<PSearchResult>(m, "PSearchResult")
        .def_readonly("p_star", &PSearchResult::p_star)
        .def_readonly("scanned_p", &PSearchResult::scanned_p)
        .def_readonly("f_curve", &PSearchResult::f_curve)
        .def_readonly("bp_first", &PSearchResult::bp_first)
        .def_readonly("bp_second", &PSearchResult::bp_second)
        .def_readonly("swapped", &PSearchResult::swapped)
        .def_readonly("b1_first", &PSearchResult::b1_first)
        .def_readonly("b1_second", &PSearchResult::b1_second)
        .def_readonly("bp_first_at_p_star", &PSearchResult::bp_first_at_p_star)
        .def_readonly("bp_second_at_p_star", &PSearchResult::bp_second_at_p_star)
        .def_readonly("more_vulnerable", &PSearchResult::more_vulnerable);

    m.def(
        "p_search",
        [](const Graph& first, const Graph& second, int p_max, double tie_eps) {
            PSearchOptions options;
            options.p_max = p_max;
            options.tie_eps = tie_eps;
            return p_search(first, second, options);
        },
        py::arg("first"), py::arg("second"), py::arg("p_max") = 50, py::arg("tie_eps") = 1e-12);

    py::class_<BoxCoverCurve>(m, "BoxCoverCurve")
        .def_readonly("sizes", &BoxCoverCurve::sizes)
        .def_readonly("mean_boxes", &BoxCoverCurve::mean_boxes)
        .def_readonly("runs", &BoxCoverCurve::runs)
        .def_readonly("component_count", &BoxCoverCurve::component_count);

    m.def(
        "box_cover_curve",
        [](const Graph& g, int runs, std::uint64_t seed) { return box_cover_curve(g, runs, seed); },
        py::arg("graph"), py::arg("runs") = 100, py::arg("seed") = 42);

    py::class_<FractalFit>(m, "FractalFit")
        .def_readonly("dimension", &FractalFit::dimension)
        .def_readonly("intercept", &FractalFit::intercept)
        .def_readonly("r2", &FractalFit::r2)
        .def_readonly("fit_lo", &FractalFit::fit_lo)
        .def_readonly("fit_hi", &FractalFit::fit_hi)
        .def_readonly("points", &FractalFit::points);

    m.def(
        "fit_dimension",
        [](const BoxCoverCurve& curve, std::optional<std::pair<int, int>> size_range,
           bool geometric_mean) {
            FitOptions options;
            options.size_range = size_range;
            options.geometric_mean = geometric_mean;
            return fit_dimension(curve, options);
        },
        py::arg("curve"), py::arg("size_range") = py::none(), py::arg("geometric_mean") = false);

    m.def("inverse_geodesic_length",
          [](const Graph& g) { return inverse_geodesic_length(all_pairs_distances(g)); },
          py::arg("graph"));
    m.def("largest_component_fraction",
          [](const Graph& g) { return largest_component_fraction(all_pairs_distances(g)); },
          py::arg("graph"));
    m.def("fractal_vulnerability", &fractal_vulnerability, py::arg("profile"),
          py::arg("dimension"));

    py::class_<VulnerabilityReport>(m, "VulnerabilityReport")
        .def_readonly("n", &VulnerabilityReport::n)
        .def_readonly("edge_count", &VulnerabilityReport::edge_count)
        .def_readonly("v_db", &VulnerabilityReport::v_db)
        .def_readonly("d_b", &VulnerabilityReport::d_b)
        .def_readonly("b1_raw", &VulnerabilityReport::b1_raw)
        .def_readonly("b1_normalized", &VulnerabilityReport::b1_normalized)
        .def_readonly("b_nor", &VulnerabilityReport::b_nor)
        .def_readonly("inv_geodesic", &VulnerabilityReport::inv_geodesic)
        .def_readonly("lcs", &VulnerabilityReport::lcs);

    m.def(
        "compute_report",
        [](const Graph& g, bool with_fractal, int box_runs, std::uint64_t seed,
           std::optional<std::pair<int, int>> fit_range, bool geometric_mean) {
            ReportOptions options;
            options.with_fractal = with_fractal;
            options.box_runs = box_runs;
            options.seed = seed;
            options.fit_range = fit_range;
            options.geometric_mean = geometric_mean;
            return compute_report(g, options);
        },
        py::arg("graph"), py::arg("with_fractal") = true, py::arg("box_runs") = 100,
        py::arg("seed") = 42, py::arg("fit_range") = py::none(),
        py::arg("geometric_mean") = false);

    py::class_<RemovedVertex>(m, "RemovedVertex")
        .def_readonly("label", &RemovedVertex::label)
        .def_readonly("betweenness", &RemovedVertex::betweenness);

    py::class_<AttackTrace>(m, "AttackTrace")
        .def_readonly("fraction", &AttackTrace::fraction)
        .def_readonly("removed", &AttackTrace::removed)
        .def_readonly("initial", &AttackTrace::initial)
        .def_readonly("post", &AttackTrace::post)
        .def_readonly("inv_geodesic_ratio", &AttackTrace::inv_geodesic_ratio)
        .def_readonly("lcs_ratio", &AttackTrace::lcs_ratio)
        .def_readonly("b_nor_ratio", &AttackTrace::b_nor_ratio);

    m.def(
        "betweenness_attack",
        [](const Graph& g, double fraction, bool with_fractal, int box_runs, std::uint64_t seed) {
            AttackOptions options;
            options.fraction = fraction;
            options.with_fractal = with_fractal;
            options.box_runs = box_runs;
            options.seed = seed;
            return betweenness_attack(g, options);
        },
        py::arg("graph"), py::arg("fraction") = 0.01, py::arg("with_fractal") = false,
        py::arg("box_runs") = 100, py::arg("seed") = 42);

    m.def("generate_erdos_renyi", &generate_erdos_renyi, py::arg("n"), py::arg("mean_degree"),
          py::arg("seed") = 42);
    m.def("generate_barabasi_albert", &generate_barabasi_albert, py::arg("n"), py::arg("m"),
          py::arg("seed") = 42);
    m.def("generate_barabasi_albert_mixed", &generate_barabasi_albert_mixed, py::arg("n"),
          py::arg("target_mean_degree"), py::arg("seed") = 42);

    m.def(
        "analyze_json",
        [](const Graph& g, int box_runs, std::uint64_t seed, bool with_fractal,
           std::optional<std::pair<int, int>> fit_range, bool geometric_mean) {
            AnalysisConfig config =
                make_config(box_runs, seed, 50, 0.01, fit_range, geometric_mean, with_fractal);
            return run_analyze(g, config);
        },
        py::arg("graph"), py::arg("box_runs") = 100, py::arg("seed") = 42,
        py::arg("with_fractal") = true, py::arg("fit_range") = py::none(),
        py::arg("geometric_mean") = false);

    m.def(
        "compare_json",
        [](const Graph& first, const Graph& second, const std::string& name_first,
           const std::string& name_second, int p_max) {
            AnalysisConfig config = make_config(100, 42, p_max, 0.01, std::nullopt, false, true);
            return run_compare(first, second, name_first, name_second, config);
        },
        py::arg("first"), py::arg("second"), py::arg("name_first") = "first",
        py::arg("name_second") = "second", py::arg("p_max") = 50);

    m.def(
        "attack_json",
        [](const Graph& g, double fraction, bool with_fractal, int box_runs, std::uint64_t seed) {
            AnalysisConfig config =
                make_config(box_runs, seed, 50, fraction, std::nullopt, false, with_fractal);
            config.attack_with_fractal = with_fractal;
            return run_attack(g, config);
        },
        py::arg("graph"), py::arg("fraction") = 0.01, py::arg("with_fractal") = false,
        py::arg("box_runs") = 100, py::arg("seed") = 42);

    m.def(
        "boxcover_json",
        [](const Graph& g, int box_runs, std::uint64_t seed,
           std::optional<std::pair<int, int>> fit_range, bool geometric_mean) {
            AnalysisConfig config =
                make_config(box_runs, seed, 50, 0.01, fit_range, geometric_mean, true);
            return run_boxcover(g, config);
        },
        py::arg("graph"), py::arg("box_runs") = 100, py::arg("seed") = 42,
        py::arg("fit_range") = py::none(), py::arg("geometric_mean") = false);
}
