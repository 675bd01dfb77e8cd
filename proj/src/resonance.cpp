#include "clarcube/resonance.hpp"

#include <algorithm>
#include <stdexcept>

#include "clarcube/error.hpp"

namespace clarcube {

const DistanceCache& ResonanceGraph::distances() const {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    if (!cache_) cache_ = std::make_unique<DistanceCache>(graph_);
    return *cache_;
}

int ResonanceGraph::label(Vertex u, Vertex v) const {
    auto it = labels_.find(make_edge(u, v));
    if (it == labels_.end())
        throw std::out_of_range("no resonance edge between " + std::to_string(u) + " and " +
                                std::to_string(v));
    return it->second;
}

std::optional<int> ResonanceGraph::matching_id(const PerfectMatching& m) const {
    auto it = id_index_.find(m.partner);
    if (it == id_index_.end()) return std::nullopt;
    return it->second;
}

std::optional<int> ResonanceGraph::distance(Vertex u, Vertex v) const {
    return distances().distance(u, v);
}

bool ResonanceGraph::is_convex(const std::vector<Vertex>& s) const {
    return is_convex_set(graph_, distances(), s);
}

ResonanceGraph build_resonance_graph(const MolecularGraph& g,
                                     const std::vector<PerfectMatching>& ms) {
    ResonanceGraph r;
    r.matchings_ = ms;
    r.graph_ = SimpleGraph(static_cast<int>(ms.size()));
    for (int i = 0; i < static_cast<int>(ms.size()); ++i) r.id_index_.emplace(ms[i].partner, i);

    // Neighbor discovery by flipping each sextet: O(N * #hexagons) instead of
    // pairwise symmetric differences.
    std::vector<int> hexes = g.hexagon_faces();
    for (int i = 0; i < static_cast<int>(ms.size()); ++i) {
        for (int h : hexes) {
            if (!is_sextet(g, ms[i], h)) continue;
            PerfectMatching flipped = flip(g, ms[i], h);
            auto it = r.id_index_.find(flipped.partner);
            if (it == r.id_index_.end())
                throw std::logic_error("flip neighbor missing from canonical matching list");
            int j = it->second;
            if (i < j) {
                r.graph_.add_edge(i, j);
                r.labels_.emplace(Edge{i, j}, h);
            }
        }
    }
    r.graph_.finalize();
    return r;
}

} // namespace clarcube
