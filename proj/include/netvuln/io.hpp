#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "netvuln/betweenness.hpp"
#include "netvuln/fractal.hpp"
#include "netvuln/graph.hpp"
#include "netvuln/vulnerability.hpp"

namespace netvuln {

enum class OutputFormat { kJson, kCsv, kTable };

/// Knobs shared by the analysis commands. Defaults: 100 covering runs,
/// seed 42, exponent scan up to 50, 1% attack fraction.
struct AnalysisConfig {
    int box_runs = 100;
    std::uint64_t seed = 42;
    int p_max = 50;
    double attack_fraction = 0.01;
    std::optional<std::pair<int, int>> fit_range;
    bool geometric_mean = false;
    bool analyze_with_fractal = true;
    bool attack_with_fractal = false;
    OutputFormat format = OutputFormat::kJson;

    void validate() const; // throws ParameterError
};

/// Parses the edge-list format: one edge per line as two whitespace- or
/// comma-separated labels, lines starting with '#' ignored, blank lines
/// ignored, and "v <label>" declaring an isolated vertex. Errors carry the
/// offending line number.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list_text(std::string_view text);

/// Writes a graph in the same format parse_edge_list ingests. Every vertex
/// is declared first so a round trip reproduces the dense indexing exactly.
void write_edge_list(const Graph& g, std::ostream& out);
std::string edge_list_string(const Graph& g);

/// Shortest round-trip decimal form (17 significant digits at most).
std::string format_full(double value);

// Serialization of the report types. JSON field names are stable:
// vDB, dB, b1Raw, b1Normalized, bNor, invGeo, lcs, n, edgeCount.
std::string report_to_json(const VulnerabilityReport& report);
std::string report_to_csv(const VulnerabilityReport& report);
std::string report_to_table(const VulnerabilityReport& report);

std::string trace_to_json(const AttackTrace& trace);
std::string trace_to_csv(const AttackTrace& trace);
std::string trace_to_table(const AttackTrace& trace);

std::string psearch_to_json(const PSearchResult& result, const std::string& name_first,
                            const std::string& name_second, bool distinguishable);
std::string psearch_to_csv(const PSearchResult& result, const std::string& name_first,
                           const std::string& name_second, bool distinguishable);
std::string psearch_to_table(const PSearchResult& result, const std::string& name_first,
                             const std::string& name_second, bool distinguishable);

std::string curve_to_json(const BoxCoverCurve& curve, const std::optional<FractalFit>& fit,
                          const std::string& fit_error);
std::string curve_to_csv(const BoxCoverCurve& curve, const std::optional<FractalFit>& fit,
                         const std::string& fit_error);
std::string curve_to_table(const BoxCoverCurve& curve, const std::optional<FractalFit>& fit,
                           const std::string& fit_error);

// Command backends used by the CLI and the Python module. Each returns the
// serialized output in the configured format.
std::string run_analyze(const Graph& g, const AnalysisConfig& config);
std::string run_compare(const Graph& first, const Graph& second,
                        const std::string& name_first, const std::string& name_second,
                        const AnalysisConfig& config);
std::string run_attack(const Graph& g, const AnalysisConfig& config);
std::string run_boxcover(const Graph& g, const AnalysisConfig& config);

} // namespace netvuln
