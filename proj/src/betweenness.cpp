#include "netvuln/betweenness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace netvuln {

BetweennessProfile edge_betweenness(const Graph& g) {
    const int n = g.vertex_count();
    BetweennessProfile profile;
    profile.vertex_count = n;
    profile.pair_normalization = static_cast<double>(n) * (n - 1) / 2.0;
    profile.edge_values.assign(g.edge_count(), 0.0);
    profile.vertex_values.assign(n, 0.0);

    std::vector<std::int32_t> dist(n);
    std::vector<double> sigma(n);
    std::vector<double> delta(n);
    std::vector<int> order;
    order.reserve(n);

    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), kUnreachable);
        std::fill(sigma.begin(), sigma.end(), 0.0);
        order.clear();
        dist[s] = 0;
        sigma[s] = 1.0;
        order.push_back(s);
        for (std::size_t head = 0; head < order.size(); ++head) {
            int v = order[head];
            std::int32_t d = dist[v];
            for (int w : g.neighbors(v)) {
                if (dist[w] == kUnreachable) {
                    dist[w] = d + 1;
                    order.push_back(w);
                }
                if (dist[w] == d + 1) sigma[w] += sigma[v];
            }
        }

        // Dependency accumulation over the predecessor DAG, deepest first.
        std::fill(delta.begin(), delta.end(), 0.0);
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            int w = *it;
            auto nb = g.neighbors(w);
            auto eids = g.incident_edges(w);
            const double coeff = (1.0 + delta[w]) / sigma[w];
            for (std::size_t i = 0; i < nb.size(); ++i) {
                int v = nb[i];
                if (dist[v] != kUnreachable && dist[v] == dist[w] - 1) {
                    const double c = sigma[v] * coeff;
                    profile.edge_values[eids[i]] += c;
                    delta[v] += c;
                }
            }
            if (w != s) profile.vertex_values[w] += delta[w];
        }
    }

    // Each unordered pair was visited from both endpoints.
    for (double& b : profile.edge_values) b /= 2.0;
    for (double& b : profile.vertex_values) b /= 2.0;
    return profile;
}

double average_betweenness(const BetweennessProfile& profile) {
    if (profile.edge_values.empty()) {
        throw UndefinedMetricError("average edge betweenness undefined: graph has no edges");
    }
    double sum = 0.0;
    for (double b : profile.edge_values) sum += b;
    return sum / static_cast<double>(profile.edge_values.size());
}

double multiscale_vulnerability(const BetweennessProfile& profile, double p,
                                Normalization norm) {
    if (!(p > 0.0)) {
        throw ParameterError("multi-scale exponent must be positive");
    }
    if (profile.edge_values.empty()) {
        throw UndefinedMetricError("multi-scale vulnerability undefined: graph has no edges");
    }
    const double scale = norm == Normalization::kPairNormalized ? profile.pair_normalization : 1.0;
    const double count = static_cast<double>(profile.edge_values.size());

    if (p == 1.0) {
        double sum = 0.0;
        for (double b : profile.edge_values) sum += b / scale;
        return sum / count;
    }

    // Power mean evaluated against the largest value so b^p cannot overflow.
    double max_value = 0.0;
    for (double b : profile.edge_values) max_value = std::max(max_value, b / scale);
    if (max_value == 0.0) return 0.0;
    double acc = 0.0;
    for (double b : profile.edge_values) acc += std::pow(b / scale / max_value, p);
    return max_value * std::pow(acc / count, 1.0 / p);
}

double normalized_betweenness(const BetweennessProfile& profile) {
    const int n = profile.vertex_count;
    const double denom = static_cast<double>(n) * (n + 1) / 6.0 - 1.0;
    if (denom <= 0.0) {
        throw UndefinedMetricError("normalized betweenness undefined for fewer than 3 vertices");
    }
    return (average_betweenness(profile) - 1.0) / denom;
}

namespace {

// Relative difference curve (bp_x - bp_y)/bp_x for one orientation.
std::vector<double> relative_curve(const std::vector<double>& bp_x,
                                   const std::vector<double>& bp_y) {
    std::vector<double> f(bp_x.size());
    for (std::size_t i = 0; i < bp_x.size(); ++i) {
        f[i] = (bp_x[i] - bp_y[i]) / bp_x[i];
    }
    return f;
}

} // namespace

PSearchResult p_search(const Graph& first, const Graph& second,
                       const PSearchOptions& options) {
    if (options.p_max < 1) throw ParameterError("p_max must be at least 1");
    if (options.tie_eps < 0.0) throw ParameterError("tie_eps must be non-negative");

    const BetweennessProfile profile_first = edge_betweenness(first);
    const BetweennessProfile profile_second = edge_betweenness(second);

    PSearchResult result;
    result.b1_first = average_betweenness(profile_first);
    result.b1_second = average_betweenness(profile_second);

    if (std::abs(result.b1_first - result.b1_second) > options.tie_eps) {
        result.p_star = 1;
        result.scanned_p = {1};
        result.bp_first = {result.b1_first};
        result.bp_second = {result.b1_second};
        result.swapped = result.b1_first < result.b1_second;
        const double hi = std::max(result.b1_first, result.b1_second);
        const double lo = std::min(result.b1_first, result.b1_second);
        result.f_curve = {(hi - lo) / hi};
        result.bp_first_at_p_star = result.b1_first;
        result.bp_second_at_p_star = result.b1_second;
        result.more_vulnerable = result.b1_first >= result.b1_second ? 0 : 1;
        return result;
    }

    result.scanned_p.resize(options.p_max);
    result.bp_first.resize(options.p_max);
    result.bp_second.resize(options.p_max);
    bool separated = false;
    for (int p = 1; p <= options.p_max; ++p) {
        result.scanned_p[p - 1] = p;
        result.bp_first[p - 1] = multiscale_vulnerability(profile_first, p);
        result.bp_second[p - 1] = multiscale_vulnerability(profile_second, p);
        if (std::abs(result.bp_first[p - 1] - result.bp_second[p - 1]) > options.tie_eps) {
            separated = true;
        }
    }

    if (!separated) {
        result.f_curve = relative_curve(result.bp_first, result.bp_second);
        throw IndistinguishableError(
            "graphs are indistinguishable by b_p for every p up to " +
                std::to_string(options.p_max),
            std::move(result));
    }

    const std::vector<double> f_fs = relative_curve(result.bp_first, result.bp_second);
    const std::vector<double> f_sf = relative_curve(result.bp_second, result.bp_first);
    const double max_fs = *std::max_element(f_fs.begin(), f_fs.end());
    const double max_sf = *std::max_element(f_sf.begin(), f_sf.end());
    result.swapped = max_sf > max_fs;
    result.f_curve = result.swapped ? f_sf : f_fs;

    int best = 0;
    for (int i = 1; i < static_cast<int>(result.f_curve.size()); ++i) {
        if (result.f_curve[i] > result.f_curve[best]) best = i;
    }
    result.p_star = result.scanned_p[best];
    result.bp_first_at_p_star = result.bp_first[best];
    result.bp_second_at_p_star = result.bp_second[best];
    result.more_vulnerable = result.bp_first_at_p_star >= result.bp_second_at_p_star ? 0 : 1;
    return result;
}

} // namespace netvuln
