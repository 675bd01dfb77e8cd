#ifndef CLARCUBE_GRAPH_HPP
#define CLARCUBE_GRAPH_HPP

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

namespace clarcube {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>; // stored with first < second

inline Edge make_edge(Vertex u, Vertex v) {
    return u < v ? Edge{u, v} : Edge{v, u};
}

// Plain undirected graph with sorted adjacency lists.
struct SimpleGraph {
    std::vector<std::vector<Vertex>> adj;

    SimpleGraph() = default;
    explicit SimpleGraph(int n) : adj(static_cast<std::size_t>(n)) {}

    int n() const { return static_cast<int>(adj.size()); }
    std::size_t edge_count() const;
    int max_degree() const;

    void add_edge(Vertex u, Vertex v);
    // Sorts and deduplicates adjacency; rejects loops.
    void finalize();

    bool has_vertex(Vertex v) const { return v >= 0 && v < n(); }
    bool has_edge(Vertex u, Vertex v) const;
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj[static_cast<std::size_t>(v)]; }

    bool connected() const;
    std::vector<Edge> edges() const; // sorted list, u < v

    // Unweighted distances from src; -1 marks unreachable vertices.
    std::vector<std::int32_t> bfs_distances(Vertex src) const;
};

// Memoized BFS rows, safe for concurrent readers. Rows are computed at most
// once per source and shared.
class DistanceCache {
public:
    explicit DistanceCache(const SimpleGraph& g) : g_(&g) {}

    std::shared_ptr<const std::vector<std::int32_t>> row(Vertex src) const;
    std::optional<int> distance(Vertex u, Vertex v) const;

private:
    const SimpleGraph* g_;
    mutable std::mutex mutex_;
    mutable std::unordered_map<Vertex, std::shared_ptr<const std::vector<std::int32_t>>> rows_;
};

// True iff every vertex on every geodesic between members of `s` is in `s`.
// Vertices of `s` in different components impose no constraint.
bool is_convex_set(const SimpleGraph& g, const DistanceCache& cache, const std::vector<Vertex>& s);

} // namespace clarcube

#endif
