#include "netvuln/generators.hpp"

#include <cmath>
#include <random>
#include <string>
#include <unordered_set>
#include <vector>

namespace netvuln {

namespace {

std::mt19937_64 seeded_generator(std::uint64_t seed) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed),
                      static_cast<std::uint32_t>(seed >> 32)};
    return std::mt19937_64(seq);
}

std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
    return rng() % bound;
}

double unit_double(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

GraphBuilder builder_with_vertices(int n) {
    GraphBuilder builder;
    for (int v = 0; v < n; ++v) builder.add_vertex(std::to_string(v));
    return builder;
}

std::pair<int, int> pair_from_index(std::uint64_t idx) {
    // Inverse of k = v(v-1)/2 + u for u < v.
    const auto v = static_cast<std::uint64_t>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(idx))) / 2.0);
    std::uint64_t lo = v * (v - 1) / 2;
    std::uint64_t hi = v;
    // Guard against floating point off-by-one at large indices.
    while (lo > idx) {
        --hi;
        lo -= hi;
    }
    while (idx >= lo + hi) {
        lo += hi;
        ++hi;
    }
    return {static_cast<int>(idx - lo), static_cast<int>(hi)};
}

Graph ba_with_attachment(int n, int seed_clique, const std::vector<int>& attach_counts,
                         std::mt19937_64& rng) {
    GraphBuilder builder = builder_with_vertices(n);
    std::vector<int> repeated; // vertex v appears deg(v) times
    for (int u = 0; u < seed_clique; ++u) {
        for (int v = u + 1; v < seed_clique; ++v) {
            builder.add_edge(std::to_string(u), std::to_string(v));
        }
        for (int k = 0; k < seed_clique - 1; ++k) repeated.push_back(u);
    }

    std::vector<int> targets;
    for (int t = seed_clique; t < n; ++t) {
        const int m = attach_counts[t];
        const auto pool_size = static_cast<std::uint64_t>(repeated.size());
        targets.clear();
        while (static_cast<int>(targets.size()) < m) {
            const int candidate = repeated[bounded(rng, pool_size)];
            bool duplicate = false;
            for (int chosen : targets) {
                if (chosen == candidate) {
                    duplicate = true;
                    break;
                }
            }
            if (!duplicate) targets.push_back(candidate);
        }
        for (int target : targets) {
            builder.add_edge(std::to_string(t), std::to_string(target));
            repeated.push_back(target);
        }
        for (int k = 0; k < m; ++k) repeated.push_back(t);
    }
    return std::move(builder).build();
}

} // namespace

Graph generate_erdos_renyi(int n, double mean_degree, std::uint64_t seed) {
    if (n < 2) throw ParameterError("random graph needs at least 2 vertices");
    if (!(mean_degree > 0.0)) throw ParameterError("mean degree must be positive");
    const std::uint64_t total = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    const auto edge_count = static_cast<std::uint64_t>(std::llround(static_cast<double>(n) * mean_degree / 2.0));
    if (edge_count > total) {
        throw ParameterError("mean degree asks for more edges than the graph can hold");
    }

    auto rng = seeded_generator(seed);
    GraphBuilder builder = builder_with_vertices(n);

    constexpr std::uint64_t kMaterializeLimit = 1u << 23;
    if (total <= kMaterializeLimit) {
        // Partial Fisher-Yates over the full pair list: exact count, no retries.
        std::vector<std::uint64_t> pairs(total);
        for (std::uint64_t k = 0; k < total; ++k) pairs[k] = k;
        for (std::uint64_t i = 0; i < edge_count; ++i) {
            const std::uint64_t j = i + bounded(rng, total - i);
            std::swap(pairs[i], pairs[j]);
            const auto [u, v] = pair_from_index(pairs[i]);
            builder.add_edge(std::to_string(u), std::to_string(v));
        }
    } else {
        std::unordered_set<std::uint64_t> chosen;
        chosen.reserve(edge_count * 2);
        while (chosen.size() < edge_count) {
            const std::uint64_t idx = bounded(rng, total);
            if (chosen.insert(idx).second) {
                const auto [u, v] = pair_from_index(idx);
                builder.add_edge(std::to_string(u), std::to_string(v));
            }
        }
    }
    return std::move(builder).build();
}

Graph generate_barabasi_albert(int n, int m, std::uint64_t seed) {
    if (m < 1) throw ParameterError("attachment count must be at least 1");
    if (m >= n) throw ParameterError("attachment count must be smaller than the vertex count");
    auto rng = seeded_generator(seed);
    std::vector<int> attach_counts(n, m);
    return ba_with_attachment(n, m + 1, attach_counts, rng);
}

Graph generate_barabasi_albert_mixed(int n, double target_mean_degree, std::uint64_t seed) {
    const int m_low = static_cast<int>(std::floor(target_mean_degree / 2.0));
    const double frac = target_mean_degree / 2.0 - m_low;
    const int m_high = frac > 0.0 ? m_low + 1 : m_low;
    if (m_low < 1) throw ParameterError("target mean degree must be at least 2");
    if (m_high >= n) throw ParameterError("target mean degree too large for the vertex count");

    auto rng = seeded_generator(seed);
    std::vector<int> attach_counts(n, m_low);
    for (int t = m_high + 1; t < n; ++t) {
        if (unit_double(rng) < frac) attach_counts[t] = m_high;
    }
    return ba_with_attachment(n, m_high + 1, attach_counts, rng);
}

} // namespace netvuln
