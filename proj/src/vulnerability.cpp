#include "netvuln/vulnerability.hpp"

#include <algorithm>
#include <cmath>

namespace netvuln {

double inverse_geodesic_length(const DistanceMatrix& dm) {
    const int n = dm.vertex_count();
    if (n < 2) {
        throw UndefinedMetricError("inverse geodesic length undefined for fewer than 2 vertices");
    }
    double sum = 0.0;
    for (int v = 0; v < n; ++v) {
        for (int w = 0; w < n; ++w) {
            if (w == v) continue;
            const std::int32_t d = dm(v, w);
            if (d != kUnreachable) sum += 1.0 / static_cast<double>(d);
        }
    }
    return sum / (static_cast<double>(n) * (n - 1));
}

double largest_component_fraction(const DistanceMatrix& dm) {
    const int n = dm.vertex_count();
    if (n < 1) {
        throw UndefinedMetricError("largest component fraction undefined for an empty graph");
    }
    return static_cast<double>(dm.largest_component_size()) / static_cast<double>(n);
}

double fractal_vulnerability(const BetweennessProfile& profile, double dimension) {
    if (!(dimension > 0.0)) {
        throw ParameterError("fractal vulnerability needs a positive dimension");
    }
    return multiscale_vulnerability(profile, dimension, Normalization::kPairNormalized);
}

VulnerabilityReport compute_report(const Graph& g, const ReportOptions& options) {
    if (options.box_runs < 1) throw ParameterError("box covering needs at least one run");

    VulnerabilityReport report;
    report.n = g.vertex_count();
    report.edge_count = g.edge_count();

    const DistanceMatrix dm = all_pairs_distances(g);
    if (report.n >= 2) report.inv_geodesic = inverse_geodesic_length(dm);
    report.lcs = largest_component_fraction(dm);

    const BetweennessProfile profile = edge_betweenness(g);
    if (report.edge_count >= 1) {
        report.b1_raw = average_betweenness(profile);
        report.b1_normalized =
            multiscale_vulnerability(profile, 1.0, Normalization::kPairNormalized);
        if (report.n >= 3) report.b_nor = normalized_betweenness(profile);
    }

    if (options.with_fractal) {
        const BoxCoverCurve curve = box_cover_curve(g, dm, options.box_runs, options.seed);
        FitOptions fit_options;
        fit_options.size_range = options.fit_range;
        fit_options.geometric_mean = options.geometric_mean;
        try {
            const FractalFit fit = fit_dimension(curve, fit_options);
            report.d_b = fit.dimension;
            if (report.edge_count >= 1 && fit.dimension > 0.0) {
                report.v_db = fractal_vulnerability(profile, fit.dimension);
            }
        } catch (const FitError&) {
            // Dimension (and the index built on it) stays absent.
        }
    }
    return report;
}

namespace {

std::optional<double> ratio(const std::optional<double>& post,
                            const std::optional<double>& initial) {
    if (!post || !initial || *initial == 0.0) return std::nullopt;
    return *post / *initial;
}

} // namespace

AttackTrace betweenness_attack(const Graph& g, const AttackOptions& options) {
    if (!(options.fraction > 0.0 && options.fraction < 1.0)) {
        throw ParameterError("attack fraction must lie strictly between 0 and 1");
    }
    const int n = g.vertex_count();
    const int remove_count = static_cast<int>(std::ceil(options.fraction * n));

    ReportOptions report_options;
    report_options.with_fractal = options.with_fractal;
    report_options.box_runs = options.box_runs;
    report_options.seed = options.seed;

    AttackTrace trace;
    trace.fraction = options.fraction;
    trace.initial = compute_report(g, report_options);

    Graph current = g;
    bool emptied = false;
    for (int step = 0; step < remove_count; ++step) {
        const BetweennessProfile profile = edge_betweenness(current);
        int target = 0;
        for (int v = 1; v < current.vertex_count(); ++v) {
            if (profile.vertex_values[v] > profile.vertex_values[target]) target = v;
        }
        trace.removed.push_back({current.label(target), profile.vertex_values[target]});
        if (current.vertex_count() == 1) {
            emptied = true;
            break;
        }
        std::vector<bool> keep(current.vertex_count(), true);
        keep[target] = false;
        current = current.induced_subgraph(keep);
    }

    if (emptied) {
        trace.post = VulnerabilityReport{}; // nothing left to measure
    } else {
        trace.post = compute_report(current, report_options);
    }
    trace.inv_geodesic_ratio = ratio(trace.post.inv_geodesic, trace.initial.inv_geodesic);
    trace.lcs_ratio = ratio(trace.post.lcs, trace.initial.lcs);
    trace.b_nor_ratio = ratio(trace.post.b_nor, trace.initial.b_nor);
    return trace;
}

} // namespace netvuln
