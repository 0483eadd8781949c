#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <string>
#include <vector>

#include <json.hpp>

#include "netvuln/io.hpp"
#include "support.hpp"

using namespace netvuln;
using nlohmann::json;

TEST_CASE("edge list parsing handles comments, commas and vertex lines") {
    const std::string text =
        "# generated by hand\n"
        "\n"
        "a b\n"
        "b,c\n"
        "c d # trailing note\n"
        "\td\te\t\n"
        "v lonely\n"
        "\r\n"
        "e a\r\n";
    Graph g = parse_edge_list_text(text);
    CHECK(g.vertex_count() == 6);
    CHECK(g.edge_count() == 5);
    CHECK(g.index_of("lonely").has_value());
    CHECK(g.degree(*g.index_of("lonely")) == 0);
    CHECK(g.has_edge(*g.index_of("e"), *g.index_of("a")));
}

TEST_CASE("edge list errors carry the line number") {
    CHECK_THROWS_WITH_AS(parse_edge_list_text("a b\nc\n"), doctest::Contains("line 2"),
                         InputError);
    CHECK_THROWS_WITH_AS(parse_edge_list_text("a b\nx y z\n"), doctest::Contains("line 2"),
                         InputError);
    CHECK_THROWS_WITH_AS(parse_edge_list_text("a b\n\nq q\n"), doctest::Contains("line 3"),
                         InputError);
    CHECK_THROWS_WITH_AS(parse_edge_list_text("v\n"), doctest::Contains("line 1"), InputError);
    CHECK_THROWS_AS(parse_edge_list_text("# nothing but comments\n"), InputError);
}

TEST_CASE("edge list round trip preserves indices, labels and edges") {
    Graph g = support::random_graph(20, 0.15, 4);
    Graph back = parse_edge_list_text(edge_list_string(g));
    CHECK(back.labels() == g.labels());
    CHECK(back.edges() == g.edges());
}

TEST_CASE("full-precision formatting survives a parse round trip") {
    for (double value : {1.0 / 3.0, 2.0, 0.1, 9.87654321e-7, 12345.678901234567}) {
        const std::string text = format_full(value);
        CHECK(std::strtod(text.c_str(), nullptr) == value);
    }
    CHECK(format_full(2.0) == "2");
}

TEST_CASE("config validation rejects out-of-range knobs") {
    AnalysisConfig config;
    config.box_runs = 0;
    CHECK_THROWS_AS(config.validate(), ParameterError);
    config = {};
    config.p_max = 0;
    CHECK_THROWS_AS(config.validate(), ParameterError);
    config = {};
    config.attack_fraction = 1.0;
    CHECK_THROWS_AS(config.validate(), ParameterError);
    config = {};
    config.fit_range = {{3, 2}};
    CHECK_THROWS_AS(config.validate(), ParameterError);
    config = {};
    CHECK_NOTHROW(config.validate());
}

TEST_CASE("report JSON uses the stable field names in order") {
    VulnerabilityReport report = compute_report(support::path_graph(4));
    json j = json::parse(report_to_json(report));
    const std::vector<std::string> expected = {"n",    "edgeCount", "b1Raw",
                                               "b1Normalized", "bNor", "dB",
                                               "vDB",  "invGeo",    "lcs"};
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    std::sort(keys.begin(), keys.end());
    std::vector<std::string> expected_sorted = expected;
    std::sort(expected_sorted.begin(), expected_sorted.end());
    CHECK(keys == expected_sorted);

    // Ordered serialization: the raw text starts with "n".
    const std::string text = report_to_json(report);
    CHECK(text.find("\"n\"") < text.find("\"edgeCount\""));
    CHECK(text.find("\"dB\"") < text.find("\"vDB\""));
    CHECK(j["n"] == 4);
    CHECK(j["b1Raw"].get<double>() == doctest::Approx(10.0 / 3.0));
}

TEST_CASE("undefined metrics serialize as null, empty and n/a") {
    VulnerabilityReport report = compute_report(support::path_graph(2));
    json j = json::parse(report_to_json(report));
    CHECK(j["bNor"].is_null());

    GraphBuilder edgeless;
    edgeless.add_vertex("a");
    edgeless.add_vertex("b");
    json iso = json::parse(report_to_json(compute_report(std::move(edgeless).build())));
    CHECK(iso["vDB"].is_null()); // no edges and a single curve point: nothing to fit
    CHECK(iso["dB"].is_null());
    CHECK(iso["b1Raw"].is_null());

    const std::string csv = report_to_csv(report);
    const auto header_end = csv.find('\n');
    const std::string row = csv.substr(header_end + 1);
    CHECK(row.find(",,") != std::string::npos);

    const std::string table = report_to_table(report);
    CHECK(table.find("n/a") != std::string::npos);
}

TEST_CASE("report CSV quotes nothing and parses back to the same doubles") {
    VulnerabilityReport report = compute_report(support::cycle_graph(6));
    const std::string csv = report_to_csv(report);
    const auto split = [](const std::string& line) {
        std::vector<std::string> cells;
        std::size_t start = 0;
        while (true) {
            const auto comma = line.find(',', start);
            if (comma == std::string::npos) {
                cells.push_back(line.substr(start));
                break;
            }
            cells.push_back(line.substr(start, comma - start));
            start = comma + 1;
        }
        return cells;
    };
    const auto newline = csv.find('\n');
    const auto header = split(csv.substr(0, newline));
    const auto row = split(csv.substr(newline + 1, csv.size() - newline - 2));
    REQUIRE(header.size() == 9);
    REQUIRE(row.size() == 9);
    CHECK(header[0] == "n");
    CHECK(std::strtod(row[2].c_str(), nullptr) == *report.b1_raw);
}

TEST_CASE("analysis runner respects the format switch") {
    Graph g = support::path_graph(4);
    AnalysisConfig config;
    config.box_runs = 10;

    config.format = OutputFormat::kJson;
    CHECK(run_analyze(g, config).front() == '{');
    config.format = OutputFormat::kCsv;
    CHECK(run_analyze(g, config).substr(0, 2) == "n,");
    config.format = OutputFormat::kTable;
    CHECK(run_analyze(g, config).find("b1Raw") != std::string::npos);
}

TEST_CASE("comparison output marks an undecidable pair") {
    Graph a = support::complete_graph(4);
    Graph b = support::complete_graph(4);
    AnalysisConfig config;
    json j = json::parse(run_compare(a, b, "left", "right", config));
    CHECK(j["distinguishable"] == false);
    CHECK(j["pStar"].is_null());
    CHECK(j["moreVulnerable"].is_null());
    CHECK(j["curve"].size() == 50);

    json decided = json::parse(run_compare(support::path_graph(4), support::cycle_graph(4),
                                           "path", "cycle", config));
    CHECK(decided["distinguishable"] == true);
    CHECK(decided["pStar"] == 1);
    CHECK(decided["moreVulnerable"] == "path");
}

TEST_CASE("attack output nests both reports and the ratios") {
    AnalysisConfig config;
    config.attack_fraction = 0.2;
    json j = json::parse(run_attack(support::path_graph(5), config));
    CHECK(j["removedCount"] == 1);
    CHECK(j["removed"][0]["label"] == "2");
    CHECK(j["initial"]["n"] == 5);
    CHECK(j["post"]["n"] == 4);
    CHECK(j["lcsRatio"].get<double>() == doctest::Approx(0.5));
}

TEST_CASE("boxcover output carries the curve and the fit") {
    AnalysisConfig config;
    config.box_runs = 20;
    json j = json::parse(run_boxcover(support::complete_graph(4), config));
    REQUIRE(j["curve"].size() == 2);
    CHECK(j["curve"][0]["lB"] == 1);
    CHECK(j["curve"][0]["meanNB"].get<double>() == doctest::Approx(4.0));
    CHECK(j["fit"]["dB"].get<double>() == doctest::Approx(2.0));
    CHECK(j["fitError"].is_null());

    const std::string csv = curve_to_csv(box_cover_curve(support::complete_graph(4), 5, 1),
                                         std::nullopt, "");
    CHECK(csv.substr(0, 10) == "lB,meanNB\n");
}

TEST_CASE("boxcover output reports a failed fit without dying") {
    GraphBuilder builder;
    builder.add_vertex("a");
    AnalysisConfig config;
    json j = json::parse(run_boxcover(std::move(builder).build(), config));
    CHECK(j["fit"].is_null());
    CHECK(j["fitError"].is_string());
    CHECK(j["curve"].size() == 1);
}
