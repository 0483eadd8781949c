#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "netvuln/generators.hpp"
#include "netvuln/graph.hpp"
#include "netvuln/io.hpp"

namespace {

netvuln::Graph load_graph(const std::string& path) {
    if (path == "-") return netvuln::parse_edge_list(std::cin);
    std::ifstream in(path);
    if (!in) throw netvuln::InputError("cannot open '" + path + "'");
    try {
        return netvuln::parse_edge_list(in);
    } catch (const netvuln::InputError& e) {
        throw netvuln::InputError(path + ": " + e.what());
    }
}

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output_path);
    if (!out) throw netvuln::InputError("cannot write '" + output_path + "'");
    out << text;
}

struct CliState {
    netvuln::AnalysisConfig config;
    std::string output;
    std::string input_a;
    std::string input_b;
    std::optional<int> fit_lo;
    std::optional<int> fit_hi;
    // generate
    std::string model;
    int n = 0;
    double mean_degree = 0.0;
    std::optional<int> ba_m;
};

void add_format_options(CLI::App* cmd, CliState& state) {
    static const std::map<std::string, netvuln::OutputFormat> kFormats = {
        {"json", netvuln::OutputFormat::kJson},
        {"csv", netvuln::OutputFormat::kCsv},
        {"table", netvuln::OutputFormat::kTable},
    };
    cmd->add_option("--format", state.config.format, "Output format")
        ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case))
        ->default_str("json");
    cmd->add_option("--output,-o", state.output, "Write the result to this file instead of stdout");
}

void add_fit_options(CLI::App* cmd, CliState& state) {
    cmd->add_option("--fit-lo", state.fit_lo, "Smallest box size of the regression window");
    cmd->add_option("--fit-hi", state.fit_hi, "Largest box size of the regression window");
    cmd->add_flag("--geometric-mean", state.config.geometric_mean,
                  "Aggregate covering runs with the geometric mean");
}

void resolve_fit_range(CliState& state) {
    if (state.fit_lo.has_value() != state.fit_hi.has_value())
        throw netvuln::ParameterError("--fit-lo and --fit-hi must be given together");
    if (state.fit_lo) state.config.fit_range = {{*state.fit_lo, *state.fit_hi}};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fractal-dimension-weighted vulnerability analysis of undirected networks"};
    app.require_subcommand(1);
    CliState state;

    auto* analyze = app.add_subcommand(
        "analyze", "Full metric report for one graph (betweenness, dimension, V_dB)");
    analyze->add_option("input", state.input_a, "Edge-list file ('-' for stdin)")->required();
    analyze->add_option("--runs", state.config.box_runs, "Random covering orders per box size");
    analyze->add_option("--seed", state.config.seed, "Seed for the covering orders");
    analyze->add_flag("!--no-fractal", state.config.analyze_with_fractal,
                      "Skip box covering (omits dB and vDB)");
    add_fit_options(analyze, state);
    add_format_options(analyze, state);

    auto* compare = app.add_subcommand(
        "compare", "Find the exponent that best separates two graphs by vulnerability");
    compare->add_option("first", state.input_a, "Edge-list file")->required();
    compare->add_option("second", state.input_b, "Edge-list file")->required();
    compare->add_option("--pmax", state.config.p_max, "Largest exponent scanned");
    add_format_options(compare, state);

    auto* attack = app.add_subcommand(
        "attack", "Remove the highest-betweenness vertices and report the damage");
    attack->add_option("input", state.input_a, "Edge-list file ('-' for stdin)")->required();
    attack->add_option("--fraction", state.config.attack_fraction,
                       "Fraction of vertices to remove (rounded up)");
    attack->add_flag("--with-fractal", state.config.attack_with_fractal,
                     "Also fit the dimension before and after the attack");
    attack->add_option("--runs", state.config.box_runs, "Random covering orders per box size");
    attack->add_option("--seed", state.config.seed, "Seed for the covering orders");
    add_format_options(attack, state);

    auto* boxcover = app.add_subcommand(
        "boxcover", "Box-covering curve N_B(l_B) and the fitted dimension");
    boxcover->add_option("input", state.input_a, "Edge-list file ('-' for stdin)")->required();
    boxcover->add_option("--runs", state.config.box_runs, "Random covering orders per box size");
    boxcover->add_option("--seed", state.config.seed, "Seed for the covering orders");
    add_fit_options(boxcover, state);
    add_format_options(boxcover, state);

    auto* generate = app.add_subcommand("generate", "Write a synthetic graph as an edge list");
    generate->add_option("--model", state.model, "er (uniform random) or ba (preferential attachment)")
        ->required()
        ->check(CLI::IsMember({"er", "ba"}, CLI::ignore_case));
    generate->add_option("--n", state.n, "Number of vertices")->required();
    generate->add_option("--mean-degree", state.mean_degree,
                         "Target mean degree (er always; ba instead of --m)");
    generate->add_option("--m", state.ba_m, "Edges attached per new vertex (ba)");
    generate->add_option("--seed", state.config.seed, "Generator seed");
    generate->add_option("--output,-o", state.output, "Write to this file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        resolve_fit_range(state);
        if (analyze->parsed()) {
            emit(netvuln::run_analyze(load_graph(state.input_a), state.config), state.output);
        } else if (compare->parsed()) {
            emit(netvuln::run_compare(load_graph(state.input_a), load_graph(state.input_b),
                                      state.input_a, state.input_b, state.config),
                 state.output);
        } else if (attack->parsed()) {
            emit(netvuln::run_attack(load_graph(state.input_a), state.config), state.output);
        } else if (boxcover->parsed()) {
            emit(netvuln::run_boxcover(load_graph(state.input_a), state.config), state.output);
        } else if (generate->parsed()) {
            netvuln::Graph g = [&] {
                if (state.model == "er" || state.model == "ER") {
                    if (!(state.mean_degree > 0.0))
                        throw netvuln::ParameterError("er needs --mean-degree");
                    return netvuln::generate_erdos_renyi(state.n, state.mean_degree,
                                                         state.config.seed);
                }
                if (state.ba_m && state.mean_degree > 0.0)
                    throw netvuln::ParameterError("ba takes --m or --mean-degree, not both");
                if (state.ba_m)
                    return netvuln::generate_barabasi_albert(state.n, *state.ba_m,
                                                             state.config.seed);
                if (state.mean_degree > 0.0)
                    return netvuln::generate_barabasi_albert_mixed(state.n, state.mean_degree,
                                                                   state.config.seed);
                throw netvuln::ParameterError("ba needs --m or --mean-degree");
            }();
            emit(netvuln::edge_list_string(g), state.output);
        }
    } catch (const netvuln::ParameterError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const netvuln::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
