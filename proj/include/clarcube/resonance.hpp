#ifndef CLARCUBE_RESONANCE_HPP
#define CLARCUBE_RESONANCE_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "clarcube/matchings.hpp"
#include "clarcube/molecular_graph.hpp"

namespace clarcube {

// Graph on the perfect matchings of a molecular graph; two matchings are
// adjacent when their symmetric difference is the edge set of a hexagonal
// face. Each resonance edge is labeled with that face's index. Immutable
// after construction; distance rows are memoized and safe to query from
// concurrent readers.
class ResonanceGraph {
public:
    ResonanceGraph() = default;
    ResonanceGraph(const ResonanceGraph&) = delete;
    ResonanceGraph& operator=(const ResonanceGraph&) = delete;
    ResonanceGraph(ResonanceGraph&& o) noexcept
        : graph_(std::move(o.graph_)),
          matchings_(std::move(o.matchings_)),
          labels_(std::move(o.labels_)),
          id_index_(std::move(o.id_index_)) {}
    ResonanceGraph& operator=(ResonanceGraph&& o) noexcept {
        graph_ = std::move(o.graph_);
        matchings_ = std::move(o.matchings_);
        labels_ = std::move(o.labels_);
        id_index_ = std::move(o.id_index_);
        std::lock_guard<std::mutex> lock(cache_mutex_);
        cache_.reset(); // rebound lazily against the new graph
        return *this;
    }

    int n() const { return graph_.n(); }
    std::size_t edge_count() const { return graph_.edge_count(); }
    const SimpleGraph& graph() const { return graph_; }
    const std::vector<PerfectMatching>& matchings() const { return matchings_; }
    const std::map<Edge, int>& edge_labels() const { return labels_; }

    int label(Vertex u, Vertex v) const; // hexagon face index of edge (u, v)
    std::optional<int> matching_id(const PerfectMatching& m) const;

    std::optional<int> distance(Vertex u, Vertex v) const;
    bool is_convex(const std::vector<Vertex>& s) const;
    const DistanceCache& distances() const;

    friend ResonanceGraph build_resonance_graph(const MolecularGraph& g,
                                                const std::vector<PerfectMatching>& ms);

private:
    SimpleGraph graph_;
    std::vector<PerfectMatching> matchings_;
    std::map<Edge, int> labels_;
    std::map<std::vector<Vertex>, int> id_index_; // partner array -> matching id

    mutable std::mutex cache_mutex_;
    mutable std::unique_ptr<DistanceCache> cache_;
};

// ms must be the complete canonical matching list of g.
ResonanceGraph build_resonance_graph(const MolecularGraph& g, const std::vector<PerfectMatching>& ms);

} // namespace clarcube

#endif
