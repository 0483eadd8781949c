#pragma once

#include <cstdint>

#include "netvuln/graph.hpp"

namespace netvuln {

/// Uniform random simple graph with exactly round(n * mean_degree / 2)
/// edges, sampled without replacement; vertices are labelled "0".."n-1"
/// and all of them are present even when isolated. Deterministic per seed.
/// Throws ParameterError when the edge budget exceeds n(n-1)/2.
Graph generate_erdos_renyi(int n, double mean_degree, std::uint64_t seed);

/// Preferential-attachment graph: a complete seed graph on m+1 vertices,
/// then each new vertex attaches m edges to distinct existing vertices with
/// probability proportional to current degree. Deterministic per seed.
/// Throws ParameterError unless 1 <= m < n.
Graph generate_barabasi_albert(int n, int m, std::uint64_t seed);

/// Preferential attachment with a per-vertex attachment count drawn between
/// floor(target_mean_degree / 2) and that plus one, so the expected mean
/// degree hits targets that no single integer m can reach (e.g. 4.8).
Graph generate_barabasi_albert_mixed(int n, double target_mean_degree, std::uint64_t seed);

} // namespace netvuln
