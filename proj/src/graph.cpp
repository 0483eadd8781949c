#include "netvuln/graph.hpp"

#include <algorithm>
#include <queue>

namespace netvuln {

namespace {

std::uint64_t edge_key(int u, int v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

} // namespace

int GraphBuilder::add_vertex(std::string label) {
    auto it = index_.find(label);
    if (it != index_.end()) return it->second;
    int idx = static_cast<int>(labels_.size());
    index_.emplace(label, idx);
    labels_.push_back(std::move(label));
    return idx;
}

void GraphBuilder::add_edge(const std::string& a, const std::string& b) {
    if (a == b) {
        throw InputError("self-loop rejected: '" + a + "' -- '" + b + "'");
    }
    int u = add_vertex(a);
    int v = add_vertex(b);
    if (u > v) std::swap(u, v);
    if (edge_keys_.insert(edge_key(u, v)).second) {
        edges_.emplace_back(u, v);
    }
}

Graph GraphBuilder::build() && {
    if (labels_.empty()) {
        throw InputError("empty graph: no vertices or edges declared");
    }
    Graph g;
    g.labels_ = std::move(labels_);
    g.edges_ = std::move(edges_);
    g.build_adjacency();
    return g;
}

void Graph::build_adjacency() {
    const int n = vertex_count();
    offsets_.assign(n + 1, 0);
    for (const auto& [u, v] : edges_) {
        ++offsets_[u + 1];
        ++offsets_[v + 1];
    }
    for (int i = 0; i < n; ++i) offsets_[i + 1] += offsets_[i];
    adj_.resize(edges_.size() * 2);
    adj_edge_.resize(edges_.size() * 2);
    std::vector<int> cursor(offsets_.begin(), offsets_.end() - 1);
    for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
        const auto& [u, v] = edges_[e];
        adj_[cursor[u]] = v;
        adj_edge_[cursor[u]++] = e;
        adj_[cursor[v]] = u;
        adj_edge_[cursor[v]++] = e;
    }
}

std::optional<int> Graph::index_of(std::string_view label) const {
    for (int v = 0; v < vertex_count(); ++v) {
        if (labels_[v] == label) return v;
    }
    return std::nullopt;
}

std::optional<int> Graph::edge_index(int u, int v) const {
    if (degree(u) > degree(v)) std::swap(u, v);
    auto nb = neighbors(u);
    auto ids = incident_edges(u);
    for (std::size_t i = 0; i < nb.size(); ++i) {
        if (nb[i] == v) return ids[i];
    }
    return std::nullopt;
}

Graph Graph::induced_subgraph(const std::vector<bool>& keep) const {
    GraphBuilder builder;
    for (int v = 0; v < vertex_count(); ++v) {
        if (keep[v]) builder.add_vertex(labels_[v]);
    }
    for (const auto& [u, v] : edges_) {
        if (keep[u] && keep[v]) builder.add_edge(labels_[u], labels_[v]);
    }
    return std::move(builder).build();
}

Graph build_graph(const std::vector<std::pair<std::string, std::string>>& edge_list) {
    if (edge_list.empty()) {
        throw InputError("empty graph: no edges given");
    }
    GraphBuilder builder;
    for (const auto& [a, b] : edge_list) builder.add_edge(a, b);
    return std::move(builder).build();
}

int DistanceMatrix::largest_component_size() const {
    int best = 0;
    for (int s : component_sizes_) best = std::max(best, s);
    return best;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
    const int n = g.vertex_count();
    DistanceMatrix dm;
    dm.n_ = n;
    dm.dist_.assign(static_cast<std::size_t>(n) * n, kUnreachable);
    dm.component_id_.assign(n, -1);

    std::vector<int> queue;
    queue.reserve(n);
    for (int s = 0; s < n; ++s) {
        std::int32_t* row = dm.dist_.data() + static_cast<std::size_t>(s) * n;
        row[s] = 0;
        queue.clear();
        queue.push_back(s);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int v = queue[head];
            std::int32_t d = row[v];
            for (int w : g.neighbors(v)) {
                if (row[w] == kUnreachable) {
                    row[w] = d + 1;
                    queue.push_back(w);
                    dm.diameter_ = std::max(dm.diameter_, d + 1);
                }
            }
        }
        // Component decomposition from the first source that reaches each vertex.
        if (dm.component_id_[s] == -1) {
            int cid = static_cast<int>(dm.component_sizes_.size());
            dm.component_sizes_.push_back(static_cast<int>(queue.size()));
            for (int v : queue) dm.component_id_[v] = cid;
        }
    }
    return dm;
}

GeodesicCounts geodesic_counts(const Graph& g, int source) {
    const int n = g.vertex_count();
    if (source < 0 || source >= n) {
        throw ParameterError("geodesic source out of range");
    }
    GeodesicCounts gc;
    gc.source = source;
    gc.dist.assign(n, kUnreachable);
    gc.path_count.assign(n, 0.0);
    gc.predecessors.assign(n, {});
    gc.visit_order.reserve(n);

    gc.dist[source] = 0;
    gc.path_count[source] = 1.0;
    gc.visit_order.push_back(source);
    for (std::size_t head = 0; head < gc.visit_order.size(); ++head) {
        int v = gc.visit_order[head];
        std::int32_t d = gc.dist[v];
        for (int w : g.neighbors(v)) {
            if (gc.dist[w] == kUnreachable) {
                gc.dist[w] = d + 1;
                gc.visit_order.push_back(w);
            }
            if (gc.dist[w] == d + 1) {
                gc.path_count[w] += gc.path_count[v];
                gc.predecessors[w].push_back(v);
            }
        }
    }
    return gc;
}

} // namespace netvuln
