#include "netvuln/io.hpp"

#include <charconv>
#include <cstddef>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <system_error>
#include <vector>

#include <json.hpp>

namespace netvuln {

namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> tokens;
    std::string current;
    for (char c : line) {
        if (c == ' ' || c == '\t' || c == ',') {
            if (!current.empty()) {
                tokens.push_back(std::move(current));
                current.clear();
            }
        } else {
            current.push_back(c);
        }
    }
    if (!current.empty()) tokens.push_back(std::move(current));
    // A token opening with '#' comments out the rest of the line.
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (tokens[i][0] == '#') {
            tokens.resize(i);
            break;
        }
    }
    return tokens;
}

[[noreturn]] void parse_fail(int line_no, const std::string& what) {
    throw InputError("line " + std::to_string(line_no) + ": " + what);
}

std::string to_fixed(double value, int precision) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::fixed, precision);
    return std::string(buf, res.ptr);
}

ordered_json opt_json(const std::optional<double>& value) {
    if (!value) return nullptr;
    return *value;
}

std::string csv_cell(const std::optional<double>& value) {
    return value ? format_full(*value) : std::string();
}

std::string table_cell(const std::optional<double>& value) {
    return value ? to_fixed(*value, 4) : std::string("n/a");
}

std::string table_row(std::string_view key, std::string_view value) {
    std::string row(key);
    row.append(key.size() < 16 ? 16 - key.size() : 1, ' ');
    row += value;
    row += '\n';
    return row;
}

// Field order shared by every report serialization.
ordered_json report_object(const VulnerabilityReport& r) {
    ordered_json j;
    j["n"] = r.n;
    j["edgeCount"] = r.edge_count;
    j["b1Raw"] = opt_json(r.b1_raw);
    j["b1Normalized"] = opt_json(r.b1_normalized);
    j["bNor"] = opt_json(r.b_nor);
    j["dB"] = opt_json(r.d_b);
    j["vDB"] = opt_json(r.v_db);
    j["invGeo"] = opt_json(r.inv_geodesic);
    j["lcs"] = opt_json(r.lcs);
    return j;
}

constexpr const char* kReportFields[] = {"n",  "edgeCount", "b1Raw",   "b1Normalized", "bNor",
                                         "dB", "vDB",       "invGeo",  "lcs"};

std::vector<std::string> report_cells(const VulnerabilityReport& r) {
    return {std::to_string(r.n),      std::to_string(r.edge_count), csv_cell(r.b1_raw),
            csv_cell(r.b1_normalized), csv_cell(r.b_nor),           csv_cell(r.d_b),
            csv_cell(r.v_db),          csv_cell(r.inv_geodesic),    csv_cell(r.lcs)};
}

std::vector<std::string> report_table_cells(const VulnerabilityReport& r) {
    return {std::to_string(r.n),        std::to_string(r.edge_count), table_cell(r.b1_raw),
            table_cell(r.b1_normalized), table_cell(r.b_nor),         table_cell(r.d_b),
            table_cell(r.v_db),          table_cell(r.inv_geodesic),  table_cell(r.lcs)};
}

std::string join_csv(const std::vector<std::string>& cells) {
    std::string line;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) line += ',';
        line += cells[i];
    }
    line += '\n';
    return line;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

ordered_json psearch_object(const PSearchResult& r, const std::string& name_first,
                            const std::string& name_second, bool distinguishable) {
    ordered_json j;
    j["first"] = name_first;
    j["second"] = name_second;
    j["b1First"] = r.b1_first;
    j["b1Second"] = r.b1_second;
    j["distinguishable"] = distinguishable;
    if (distinguishable) {
        j["pStar"] = r.p_star;
        j["moreVulnerable"] = r.more_vulnerable == 0 ? name_first : name_second;
        j["bpFirstAtPStar"] = r.bp_first_at_p_star;
        j["bpSecondAtPStar"] = r.bp_second_at_p_star;
    } else {
        j["pStar"] = nullptr;
        j["moreVulnerable"] = nullptr;
        j["bpFirstAtPStar"] = nullptr;
        j["bpSecondAtPStar"] = nullptr;
    }
    ordered_json curve = ordered_json::array();
    for (std::size_t i = 0; i < r.scanned_p.size(); ++i) {
        ordered_json point;
        point["p"] = r.scanned_p[i];
        point["bpFirst"] = r.bp_first[i];
        point["bpSecond"] = r.bp_second[i];
        point["f"] = r.f_curve[i];
        curve.push_back(std::move(point));
    }
    j["curve"] = std::move(curve);
    return j;
}

ordered_json curve_object(const BoxCoverCurve& curve, const std::optional<FractalFit>& fit,
                          const std::string& fit_error) {
    ordered_json j;
    j["runs"] = curve.runs;
    j["componentCount"] = curve.component_count;
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < curve.sizes.size(); ++i) {
        ordered_json row;
        row["lB"] = curve.sizes[i];
        row["meanNB"] = curve.mean_boxes[i];
        rows.push_back(std::move(row));
    }
    j["curve"] = std::move(rows);
    if (fit) {
        ordered_json f;
        f["dB"] = fit->dimension;
        f["intercept"] = fit->intercept;
        f["r2"] = fit->r2;
        f["fitLo"] = fit->fit_lo;
        f["fitHi"] = fit->fit_hi;
        f["points"] = fit->points;
        j["fit"] = std::move(f);
        j["fitError"] = nullptr;
    } else {
        j["fit"] = nullptr;
        j["fitError"] = fit_error;
    }
    return j;
}

ReportOptions report_options(const AnalysisConfig& config) {
    ReportOptions options;
    options.with_fractal = config.analyze_with_fractal;
    options.box_runs = config.box_runs;
    options.seed = config.seed;
    options.fit_range = config.fit_range;
    options.geometric_mean = config.geometric_mean;
    return options;
}

} // namespace

void AnalysisConfig::validate() const {
    if (box_runs < 1) throw ParameterError("covering runs must be at least 1");
    if (p_max < 1) throw ParameterError("exponent limit must be at least 1");
    if (!(attack_fraction > 0.0) || !(attack_fraction < 1.0))
        throw ParameterError("attack fraction must lie in (0, 1)");
    if (fit_range) {
        if (fit_range->first < 1) throw ParameterError("fit range must start at box size 1 or above");
        if (fit_range->second <= fit_range->first)
            throw ParameterError("fit range upper bound must exceed the lower bound");
    }
}

Graph parse_edge_list(std::istream& in) {
    GraphBuilder builder;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        if (tokens[0] == "v") {
            if (tokens.size() != 2) parse_fail(line_no, "vertex line expects exactly one label");
            builder.add_vertex(tokens[1]);
        } else if (tokens.size() == 2) {
            try {
                builder.add_edge(tokens[0], tokens[1]);
            } catch (const InputError& e) {
                parse_fail(line_no, e.what());
            }
        } else {
            parse_fail(line_no, "expected two labels, found " + std::to_string(tokens.size()) +
                                    " token(s)");
        }
    }
    return std::move(builder).build();
}

Graph parse_edge_list_text(std::string_view text) {
    std::istringstream stream{std::string(text)};
    return parse_edge_list(stream);
}

void write_edge_list(const Graph& g, std::ostream& out) {
    // Declaring every vertex first makes the round trip reproduce the dense
    // indexing, including vertices no edge mentions.
    for (int v = 0; v < g.vertex_count(); ++v) out << "v " << g.label(v) << '\n';
    for (const auto& [u, v] : g.edges()) out << g.label(u) << ' ' << g.label(v) << '\n';
}

std::string edge_list_string(const Graph& g) {
    std::ostringstream out;
    write_edge_list(g, out);
    return out.str();
}

std::string format_full(double value) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

std::string report_to_json(const VulnerabilityReport& report) {
    return dump(report_object(report));
}

std::string report_to_csv(const VulnerabilityReport& report) {
    std::vector<std::string> header(std::begin(kReportFields), std::end(kReportFields));
    return join_csv(header) + join_csv(report_cells(report));
}

std::string report_to_table(const VulnerabilityReport& report) {
    const auto cells = report_table_cells(report);
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) out += table_row(kReportFields[i], cells[i]);
    return out;
}

std::string trace_to_json(const AttackTrace& trace) {
    ordered_json j;
    j["fraction"] = trace.fraction;
    j["removedCount"] = trace.removed.size();
    ordered_json removed = ordered_json::array();
    for (const auto& r : trace.removed) {
        ordered_json entry;
        entry["label"] = r.label;
        entry["betweenness"] = r.betweenness;
        removed.push_back(std::move(entry));
    }
    j["removed"] = std::move(removed);
    j["initial"] = report_object(trace.initial);
    j["post"] = report_object(trace.post);
    j["invGeoRatio"] = opt_json(trace.inv_geodesic_ratio);
    j["lcsRatio"] = opt_json(trace.lcs_ratio);
    j["bNorRatio"] = opt_json(trace.b_nor_ratio);
    return dump(j);
}

std::string trace_to_csv(const AttackTrace& trace) {
    std::vector<std::string> header = {"fraction", "removedCount"};
    for (const char* field : kReportFields) header.push_back(std::string("initial_") + field);
    for (const char* field : kReportFields) header.push_back(std::string("post_") + field);
    header.insert(header.end(), {"invGeoRatio", "lcsRatio", "bNorRatio"});

    std::vector<std::string> cells = {format_full(trace.fraction),
                                      std::to_string(trace.removed.size())};
    for (auto& cell : report_cells(trace.initial)) cells.push_back(std::move(cell));
    for (auto& cell : report_cells(trace.post)) cells.push_back(std::move(cell));
    cells.push_back(csv_cell(trace.inv_geodesic_ratio));
    cells.push_back(csv_cell(trace.lcs_ratio));
    cells.push_back(csv_cell(trace.b_nor_ratio));
    return join_csv(header) + join_csv(cells);
}

std::string trace_to_table(const AttackTrace& trace) {
    std::string out;
    out += table_row("fraction", to_fixed(trace.fraction, 4));
    out += table_row("removedCount", std::to_string(trace.removed.size()));
    std::string names;
    for (std::size_t i = 0; i < trace.removed.size(); ++i) {
        if (i) names += ", ";
        names += trace.removed[i].label;
    }
    out += table_row("removed", names);
    const auto initial = report_table_cells(trace.initial);
    const auto post = report_table_cells(trace.post);
    out += table_row("metric", "initial / post");
    for (std::size_t i = 0; i < initial.size(); ++i)
        out += table_row(kReportFields[i], initial[i] + " / " + post[i]);
    out += table_row("invGeoRatio", table_cell(trace.inv_geodesic_ratio));
    out += table_row("lcsRatio", table_cell(trace.lcs_ratio));
    out += table_row("bNorRatio", table_cell(trace.b_nor_ratio));
    return out;
}

std::string psearch_to_json(const PSearchResult& result, const std::string& name_first,
                            const std::string& name_second, bool distinguishable) {
    return dump(psearch_object(result, name_first, name_second, distinguishable));
}

std::string psearch_to_csv(const PSearchResult& result, const std::string& name_first,
                           const std::string& name_second, bool distinguishable) {
    std::vector<std::string> header = {"first",          "second",         "b1First",
                                       "b1Second",       "distinguishable", "pStar",
                                       "moreVulnerable", "bpFirstAtPStar", "bpSecondAtPStar"};
    std::vector<std::string> cells = {name_first, name_second, format_full(result.b1_first),
                                      format_full(result.b1_second),
                                      distinguishable ? "true" : "false"};
    if (distinguishable) {
        cells.push_back(std::to_string(result.p_star));
        cells.push_back(result.more_vulnerable == 0 ? name_first : name_second);
        cells.push_back(format_full(result.bp_first_at_p_star));
        cells.push_back(format_full(result.bp_second_at_p_star));
    } else {
        cells.insert(cells.end(), {"", "", "", ""});
    }
    return join_csv(header) + join_csv(cells);
}

std::string psearch_to_table(const PSearchResult& result, const std::string& name_first,
                             const std::string& name_second, bool distinguishable) {
    std::string out;
    out += table_row("first", name_first);
    out += table_row("second", name_second);
    out += table_row("b1First", to_fixed(result.b1_first, 4));
    out += table_row("b1Second", to_fixed(result.b1_second, 4));
    out += table_row("distinguishable", distinguishable ? "yes" : "no");
    if (distinguishable) {
        out += table_row("pStar", std::to_string(result.p_star));
        out += table_row("moreVulnerable", result.more_vulnerable == 0 ? name_first : name_second);
        out += table_row("bpFirstAtPStar", to_fixed(result.bp_first_at_p_star, 4));
        out += table_row("bpSecondAtPStar", to_fixed(result.bp_second_at_p_star, 4));
    }
    out += table_row("p", "bpFirst / bpSecond / f");
    for (std::size_t i = 0; i < result.scanned_p.size(); ++i) {
        out += table_row(std::to_string(result.scanned_p[i]),
                         to_fixed(result.bp_first[i], 4) + " / " +
                             to_fixed(result.bp_second[i], 4) + " / " +
                             to_fixed(result.f_curve[i], 6));
    }
    return out;
}

std::string curve_to_json(const BoxCoverCurve& curve, const std::optional<FractalFit>& fit,
                          const std::string& fit_error) {
    return dump(curve_object(curve, fit, fit_error));
}

std::string curve_to_csv(const BoxCoverCurve& curve, const std::optional<FractalFit>& fit,
                         const std::string& fit_error) {
    (void)fit;
    (void)fit_error;
    std::string out = "lB,meanNB\n";
    for (std::size_t i = 0; i < curve.sizes.size(); ++i)
        out += join_csv({std::to_string(curve.sizes[i]), format_full(curve.mean_boxes[i])});
    return out;
}

std::string curve_to_table(const BoxCoverCurve& curve, const std::optional<FractalFit>& fit,
                           const std::string& fit_error) {
    std::string out;
    out += table_row("runs", std::to_string(curve.runs));
    out += table_row("componentCount", std::to_string(curve.component_count));
    out += table_row("lB", "meanNB");
    for (std::size_t i = 0; i < curve.sizes.size(); ++i)
        out += table_row(std::to_string(curve.sizes[i]), to_fixed(curve.mean_boxes[i], 4));
    if (fit) {
        out += table_row("dB", to_fixed(fit->dimension, 4));
        out += table_row("intercept", to_fixed(fit->intercept, 4));
        out += table_row("r2", to_fixed(fit->r2, 6));
        out += table_row("fitRange", std::to_string(fit->fit_lo) + ".." + std::to_string(fit->fit_hi));
    } else {
        out += table_row("fitError", fit_error);
    }
    return out;
}

std::string run_analyze(const Graph& g, const AnalysisConfig& config) {
    config.validate();
    const VulnerabilityReport report = compute_report(g, report_options(config));
    switch (config.format) {
        case OutputFormat::kCsv: return report_to_csv(report);
        case OutputFormat::kTable: return report_to_table(report);
        case OutputFormat::kJson: break;
    }
    return report_to_json(report);
}

std::string run_compare(const Graph& first, const Graph& second,
                        const std::string& name_first, const std::string& name_second,
                        const AnalysisConfig& config) {
    config.validate();
    PSearchOptions options;
    options.p_max = config.p_max;
    PSearchResult result;
    bool distinguishable = true;
    try {
        result = p_search(first, second, options);
    } catch (const IndistinguishableError& e) {
        result = e.result;
        distinguishable = false;
    }
    switch (config.format) {
        case OutputFormat::kCsv: return psearch_to_csv(result, name_first, name_second, distinguishable);
        case OutputFormat::kTable:
            return psearch_to_table(result, name_first, name_second, distinguishable);
        case OutputFormat::kJson: break;
    }
    return psearch_to_json(result, name_first, name_second, distinguishable);
}

std::string run_attack(const Graph& g, const AnalysisConfig& config) {
    config.validate();
    AttackOptions options;
    options.fraction = config.attack_fraction;
    options.with_fractal = config.attack_with_fractal;
    options.box_runs = config.box_runs;
    options.seed = config.seed;
    const AttackTrace trace = betweenness_attack(g, options);
    switch (config.format) {
        case OutputFormat::kCsv: return trace_to_csv(trace);
        case OutputFormat::kTable: return trace_to_table(trace);
        case OutputFormat::kJson: break;
    }
    return trace_to_json(trace);
}

std::string run_boxcover(const Graph& g, const AnalysisConfig& config) {
    config.validate();
    const BoxCoverCurve curve = box_cover_curve(g, config.box_runs, config.seed);
    FitOptions options;
    options.size_range = config.fit_range;
    options.geometric_mean = config.geometric_mean;
    std::optional<FractalFit> fit;
    std::string fit_error;
    try {
        fit = fit_dimension(curve, options);
    } catch (const FitError& e) {
        fit_error = e.what();
    }
    switch (config.format) {
        case OutputFormat::kCsv: return curve_to_csv(curve, fit, fit_error);
        case OutputFormat::kTable: return curve_to_table(curve, fit, fit_error);
        case OutputFormat::kJson: break;
    }
    return curve_to_json(curve, fit, fit_error);
}

} // namespace netvuln
