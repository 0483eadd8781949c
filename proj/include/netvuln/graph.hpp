#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "netvuln/errors.hpp"

namespace netvuln {

class Graph;

/// Incremental construction of an immutable Graph.
///
/// Labels are mapped to dense indices 0..n-1 in first-appearance order.
/// Duplicate edges collapse silently; self-loops are rejected.
class GraphBuilder {
public:
    /// Declares a vertex (idempotent) and returns its dense index.
    int add_vertex(std::string label);

    /// Declares an undirected edge between two labelled vertices.
    /// Throws InputError if both labels are equal (self-loop).
    void add_edge(const std::string& a, const std::string& b);

    /// Finalizes the graph. Throws InputError if nothing was declared.
    Graph build() &&;

private:
    std::unordered_map<std::string, int> index_;
    std::vector<std::string> labels_;
    std::vector<std::pair<int, int>> edges_; // u < v, insertion order
    std::unordered_set<std::uint64_t> edge_keys_;
};

/// Immutable simple undirected unweighted graph.
///
/// Vertices carry dense indices 0..n-1 plus the original string labels.
/// Adjacency is stored in compressed form; neighbor order follows edge
/// insertion order and is deterministic.
class Graph {
public:
    int vertex_count() const { return static_cast<int>(labels_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    /// Edges as (u, v) index pairs with u < v, in insertion order.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    std::span<const int> neighbors(int v) const {
        return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
    }

    /// Edge indices parallel to neighbors(v).
    std::span<const int> incident_edges(int v) const {
        return {adj_edge_.data() + offsets_[v], adj_edge_.data() + offsets_[v + 1]};
    }

    int degree(int v) const { return offsets_[v + 1] - offsets_[v]; }

    const std::string& label(int v) const { return labels_[v]; }
    const std::vector<std::string>& labels() const { return labels_; }

    std::optional<int> index_of(std::string_view label) const;

    /// Index into edges() for the pair {u, v}, if present.
    std::optional<int> edge_index(int u, int v) const;

    bool has_edge(int u, int v) const { return edge_index(u, v).has_value(); }

    /// Subgraph induced by vertices with keep[v] == true. Labels carry over;
    /// surviving vertices are re-indexed in increasing original index order.
    Graph induced_subgraph(const std::vector<bool>& keep) const;

private:
    friend class GraphBuilder;
    Graph() = default;
    void build_adjacency();

    std::vector<std::string> labels_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<int> offsets_;  // size n+1
    std::vector<int> adj_;      // size 2|E|
    std::vector<int> adj_edge_; // size 2|E|
};

/// Builds a graph from labelled edge pairs. Throws InputError on self-loops
/// or when the edge list is empty.
Graph build_graph(const std::vector<std::pair<std::string, std::string>>& edge_list);

/// Distance sentinel for vertex pairs in different components. Consumers
/// must branch on it; it never participates in arithmetic.
inline constexpr std::int32_t kUnreachable = -1;

/// All-pairs hop distances with component decomposition.
class DistanceMatrix {
public:
    int vertex_count() const { return n_; }

    /// Hop distance, or kUnreachable for pairs in different components.
    std::int32_t operator()(int v, int w) const { return dist_[static_cast<std::size_t>(v) * n_ + w]; }

    bool reachable(int v, int w) const { return (*this)(v, w) != kUnreachable; }

    /// Largest finite distance in the matrix (0 for edgeless graphs).
    int diameter() const { return diameter_; }

    int component_id(int v) const { return component_id_[v]; }
    const std::vector<int>& component_sizes() const { return component_sizes_; }
    int component_count() const { return static_cast<int>(component_sizes_.size()); }
    int largest_component_size() const;

private:
    friend DistanceMatrix all_pairs_distances(const Graph&);
    int n_ = 0;
    int diameter_ = 0;
    std::vector<std::int32_t> dist_;
    std::vector<int> component_id_;
    std::vector<int> component_sizes_;
};

DistanceMatrix all_pairs_distances(const Graph& g);

/// Single-source geodesic counts plus the shortest-path predecessor DAG.
struct GeodesicCounts {
    int source = 0;
    std::vector<std::int32_t> dist;          // hops from source, kUnreachable if none
    std::vector<double> path_count;          // number of geodesics from source
    std::vector<std::vector<int>> predecessors;
    std::vector<int> visit_order;            // breadth-first, non-decreasing distance
};

GeodesicCounts geodesic_counts(const Graph& g, int source);

} // namespace netvuln
