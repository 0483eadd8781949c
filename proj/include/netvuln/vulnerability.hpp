#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "netvuln/betweenness.hpp"
#include "netvuln/fractal.hpp"
#include "netvuln/graph.hpp"

namespace netvuln {

/// Average inverse geodesic length over ordered distinct vertex pairs;
/// unreachable pairs contribute 0. Lies in [0, 1]; larger is more robust.
/// Throws UndefinedMetricError for fewer than two vertices.
double inverse_geodesic_length(const DistanceMatrix& dm);

/// Fraction of vertices in the largest connected component, in (0, 1].
double largest_component_fraction(const DistanceMatrix& dm);

/// The dimension-weighted vulnerability index: the power mean of
/// pair-normalized edge betweenness with exponent equal to the box-counting
/// dimension. Throws ParameterError when the dimension is not positive.
double fractal_vulnerability(const BetweennessProfile& profile, double dimension);

/// Metric bundle for one graph. Metrics that are undefined for the graph
/// (no edges, too few vertices, failed dimension fit) stay disengaged.
struct VulnerabilityReport {
    int n = 0;
    int edge_count = 0;
    std::optional<double> v_db;          // dimension-weighted index
    std::optional<double> d_b;           // fitted box-counting dimension
    std::optional<double> b1_raw;        // average edge betweenness
    std::optional<double> b1_normalized; // pair-normalized average
    std::optional<double> b_nor;         // rescaled between complete and path
    std::optional<double> inv_geodesic;
    std::optional<double> lcs;
};

struct ReportOptions {
    bool with_fractal = true; // run the box-covering pipeline (d_B and V_dB)
    int box_runs = 100;
    std::uint64_t seed = 42;
    std::optional<std::pair<int, int>> fit_range;
    bool geometric_mean = false;
};

VulnerabilityReport compute_report(const Graph& g, const ReportOptions& options = {});

struct RemovedVertex {
    std::string label;
    double betweenness = 0.0; // vertex betweenness at removal time
};

/// Result of the recalculated-betweenness attack.
struct AttackTrace {
    double fraction = 0.01;
    std::vector<RemovedVertex> removed;
    VulnerabilityReport initial;
    VulnerabilityReport post;
    // Post-attack values divided by the initial ones, when both exist and
    // the initial value is nonzero.
    std::optional<double> inv_geodesic_ratio;
    std::optional<double> lcs_ratio;
    std::optional<double> b_nor_ratio;
};

struct AttackOptions {
    double fraction = 0.01;
    /// Also run the box-covering pipeline on the initial and residual graphs.
    /// Off by default: the attack comparison needs only the geodesic and
    /// betweenness metrics, and covering arbitrary residuals can dwarf the
    /// attack itself.
    bool with_fractal = false;
    int box_runs = 100;
    std::uint64_t seed = 42;
};

/// Iteratively removes ceil(fraction * N) vertices, recomputing vertex
/// betweenness on the residual graph at every step and always taking the
/// current maximum (ties broken by smallest dense index).
AttackTrace betweenness_attack(const Graph& g, const AttackOptions& options = {});

} // namespace netvuln
