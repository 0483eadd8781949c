#pragma once

// Shared fixtures for the test suites: tiny deterministic graph builders and
// brute-force oracles that are intentionally independent of the library's
// algorithms (Floyd-Warshall instead of per-source BFS, explicit geodesic
// enumeration instead of dependency accumulation).

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "netvuln/graph.hpp"

namespace support {

constexpr int kFar = 1 << 28; // oracle-side "no path" marker

inline std::string name(int v) { return std::to_string(v); }

inline netvuln::Graph from_pairs(const std::vector<std::pair<int, int>>& pairs, int n = 0) {
    netvuln::GraphBuilder builder;
    for (int v = 0; v < n; ++v) builder.add_vertex(name(v));
    for (const auto& [u, v] : pairs) builder.add_edge(name(u), name(v));
    return std::move(builder).build();
}

inline netvuln::Graph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return from_pairs(edges, n);
}

inline netvuln::Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return from_pairs(edges, n);
}

inline netvuln::Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return from_pairs(edges, n);
}

/// Star with `leaves` leaves: vertex 0 is the hub, n = leaves + 1.
inline netvuln::Graph star_graph(int leaves) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
    return from_pairs(edges, leaves + 1);
}

inline netvuln::Graph grid_graph(int rows, int cols) {
    std::vector<std::pair<int, int>> edges;
    auto id = [cols](int r, int c) { return r * cols + c; };
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) edges.emplace_back(id(r, c), id(r, c + 1));
            if (r + 1 < rows) edges.emplace_back(id(r, c), id(r + 1, c));
        }
    return from_pairs(edges, rows * cols);
}

/// Bernoulli random graph, possibly disconnected; always has at least one
/// edge. Deliberately not the library's generator.
inline netvuln::Graph random_graph(int n, double edge_prob, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (unit(rng) < edge_prob) edges.emplace_back(u, v);
    if (edges.empty()) edges.emplace_back(0, 1);
    return from_pairs(edges, n);
}

/// Floyd-Warshall all-pairs distances; kFar marks unreachable pairs.
inline std::vector<std::vector<int>> oracle_apsp(const netvuln::Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> d(n, std::vector<int>(n, kFar));
    for (int v = 0; v < n; ++v) d[v][v] = 0;
    for (const auto& [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
    return d;
}

struct OracleBetweenness {
    std::vector<double> edge;   // indexed like Graph::edges()
    std::vector<double> vertex; // pair endpoints excluded
};

/// Edge and vertex betweenness by enumerating every geodesic of every pair.
/// Exponential in the worst case; fine for the n <= 12 graphs it is used on.
inline OracleBetweenness oracle_betweenness(const netvuln::Graph& g) {
    const int n = g.vertex_count();
    const auto d = oracle_apsp(g);
    OracleBetweenness out;
    out.edge.assign(g.edge_count(), 0.0);
    out.vertex.assign(n, 0.0);

    std::vector<int> path;
    std::vector<std::vector<int>> geodesics;
    auto extend = [&](auto&& self, int cur, int target) -> void {
        if (cur == target) {
            geodesics.push_back(path);
            return;
        }
        for (int next : g.neighbors(cur)) {
            if (d[cur][target] == d[next][target] + 1) {
                path.push_back(next);
                self(self, next, target);
                path.pop_back();
            }
        }
    };

    for (int j = 0; j < n; ++j) {
        for (int k = j + 1; k < n; ++k) {
            if (d[j][k] >= kFar) continue;
            geodesics.clear();
            path.assign(1, j);
            extend(extend, j, k);
            const double total = static_cast<double>(geodesics.size());
            for (const auto& geo : geodesics) {
                for (std::size_t i = 0; i + 1 < geo.size(); ++i) {
                    out.edge[*g.edge_index(geo[i], geo[i + 1])] += 1.0 / total;
                    if (i > 0) out.vertex[geo[i]] += 1.0 / total;
                }
            }
        }
    }
    return out;
}

} // namespace support
