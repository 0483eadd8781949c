#pragma once

#include <vector>

#include "netvuln/errors.hpp"
#include "netvuln/graph.hpp"

namespace netvuln {

/// Exact edge and vertex betweenness, summed over unordered vertex pairs.
///
/// For an edge l, edge_values[l] = sum over pairs {j,k} of n_jk(l)/n_jk where
/// n_jk counts the geodesics between j and k and n_jk(l) those through l.
/// Pairs in different components contribute nothing. The pair {j,k} formed by
/// an edge's own endpoints does contribute (its geodesic is the edge itself),
/// so every edge value is at least 1. Vertex values exclude pair endpoints.
struct BetweennessProfile {
    std::vector<double> edge_values;   // indexed like Graph::edges()
    std::vector<double> vertex_values; // indexed by vertex
    int vertex_count = 0;
    double pair_normalization = 0.0;   // N(N-1)/2
};

BetweennessProfile edge_betweenness(const Graph& g);

/// Average edge betweenness over raw edge values.
/// Throws UndefinedMetricError when the profile has no edges.
double average_betweenness(const BetweennessProfile& profile);

enum class Normalization {
    kRaw,
    kPairNormalized, // each edge value divided by N(N-1)/2 first
};

/// p-th power mean of the edge betweenness values:
/// ((1/|E|) sum_l b_l^p)^(1/p). Larger means more vulnerable.
/// Throws ParameterError for p <= 0, UndefinedMetricError without edges.
double multiscale_vulnerability(const BetweennessProfile& profile, double p,
                                Normalization norm = Normalization::kRaw);

/// Average edge betweenness rescaled between the complete-graph (0) and
/// path-graph (1) extremes: (b1 - 1) / (N(N+1)/6 - 1), raw values.
/// Throws UndefinedMetricError for N <= 2 or without edges.
double normalized_betweenness(const BetweennessProfile& profile);

struct PSearchOptions {
    int p_max = 50;
    double tie_eps = 1e-12;
};

/// Outcome of the discriminating-exponent search between two graphs.
///
/// f_curve holds f(p) = (b_p(X) - b_p(Y))/b_p(X) for integer p over
/// scanned_p, oriented so that its maximum is positive; swapped records
/// whether that orientation reverses the argument order. bp_first/bp_second
/// always follow the argument order.
struct PSearchResult {
    int p_star = 1;
    std::vector<int> scanned_p;
    std::vector<double> f_curve;
    std::vector<double> bp_first;
    std::vector<double> bp_second;
    bool swapped = false;
    double b1_first = 0.0;
    double b1_second = 0.0;
    double bp_first_at_p_star = 0.0;
    double bp_second_at_p_star = 0.0;
    int more_vulnerable = 0; // 0 => first argument, 1 => second
};

/// No integer exponent up to p_max separated the two graphs beyond tie_eps.
/// Carries the scanned curves (f_curve in argument order, unoriented).
class IndistinguishableError : public Error {
public:
    IndistinguishableError(const std::string& message, PSearchResult partial)
        : Error(message), result(std::move(partial)) {}
    PSearchResult result;
};

/// Compares two graphs by multi-scale betweenness vulnerability.
///
/// If the b_1 values differ beyond tie_eps the search stops at p = 1.
/// Otherwise integer exponents 1..p_max are scanned and p_star maximizes the
/// oriented relative difference f(p). Throws IndistinguishableError when no
/// exponent separates the graphs.
PSearchResult p_search(const Graph& first, const Graph& second,
                       const PSearchOptions& options = {});

} // namespace netvuln
