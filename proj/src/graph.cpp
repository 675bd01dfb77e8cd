#include "clarcube/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "clarcube/error.hpp"

namespace clarcube {

std::size_t SimpleGraph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& nb : adj) twice += nb.size();
    return twice / 2;
}

int SimpleGraph::max_degree() const {
    std::size_t d = 0;
    for (const auto& nb : adj) d = std::max(d, nb.size());
    return static_cast<int>(d);
}

void SimpleGraph::add_edge(Vertex u, Vertex v) {
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
}

void SimpleGraph::finalize() {
    for (std::size_t v = 0; v < adj.size(); ++v) {
        auto& nb = adj[v];
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        for (Vertex w : nb) {
            if (w == static_cast<Vertex>(v)) throw std::logic_error("self-loop in graph");
            if (w < 0 || w >= n()) throw std::logic_error("neighbor out of range");
        }
    }
}

bool SimpleGraph::has_edge(Vertex u, Vertex v) const {
    if (!has_vertex(u) || !has_vertex(v)) return false;
    const auto& nb = adj[static_cast<std::size_t>(u)];
    return std::binary_search(nb.begin(), nb.end(), v);
}

bool SimpleGraph::connected() const {
    if (n() == 0) return true;
    std::vector<char> seen(adj.size(), 0);
    std::deque<Vertex> queue{0};
    seen[0] = 1;
    int reached = 1;
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        for (Vertex w : adj[static_cast<std::size_t>(v)]) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++reached;
                queue.push_back(w);
            }
        }
    }
    return reached == n();
}

std::vector<Edge> SimpleGraph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (Vertex u = 0; u < n(); ++u)
        for (Vertex v : adj[static_cast<std::size_t>(u)])
            if (u < v) out.emplace_back(u, v);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::int32_t> SimpleGraph::bfs_distances(Vertex src) const {
    std::vector<std::int32_t> dist(adj.size(), -1);
    dist[static_cast<std::size_t>(src)] = 0;
    std::deque<Vertex> queue{src};
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        for (Vertex w : adj[static_cast<std::size_t>(v)]) {
            if (dist[static_cast<std::size_t>(w)] < 0) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

std::shared_ptr<const std::vector<std::int32_t>> DistanceCache::row(Vertex src) const {
    if (!g_->has_vertex(src)) throw Error(ErrorCode::UnknownVertex, "vertex id " + std::to_string(src));
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = rows_.find(src);
        if (it != rows_.end()) return it->second;
    }
    auto computed = std::make_shared<const std::vector<std::int32_t>>(g_->bfs_distances(src));
    std::lock_guard<std::mutex> lock(mutex_);
    auto [it, inserted] = rows_.emplace(src, computed);
    return it->second;
}

std::optional<int> DistanceCache::distance(Vertex u, Vertex v) const {
    if (!g_->has_vertex(v)) throw Error(ErrorCode::UnknownVertex, "vertex id " + std::to_string(v));
    auto r = row(u);
    std::int32_t d = (*r)[static_cast<std::size_t>(v)];
    if (d < 0) return std::nullopt;
    return static_cast<int>(d);
}

bool is_convex_set(const SimpleGraph& g, const DistanceCache& cache, const std::vector<Vertex>& s) {
    for (Vertex v : s)
        if (!g.has_vertex(v)) throw Error(ErrorCode::UnknownVertex, "vertex id " + std::to_string(v));
    std::vector<char> inside(static_cast<std::size_t>(g.n()), 0);
    for (Vertex v : s) inside[static_cast<std::size_t>(v)] = 1;
    for (std::size_t i = 0; i < s.size(); ++i) {
        auto du = cache.row(s[i]);
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            auto dv = cache.row(s[j]);
            std::int32_t d = (*du)[static_cast<std::size_t>(s[j])];
            if (d < 0) continue; // different components: no geodesics to contain
            for (Vertex w = 0; w < g.n(); ++w) {
                if (inside[static_cast<std::size_t>(w)]) continue;
                std::int32_t a = (*du)[static_cast<std::size_t>(w)];
                std::int32_t b = (*dv)[static_cast<std::size_t>(w)];
                if (a >= 0 && b >= 0 && a + b == d) return false;
            }
        }
    }
    return true;
}

} // namespace clarcube
