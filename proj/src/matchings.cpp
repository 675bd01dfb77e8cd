#include "clarcube/matchings.hpp"

#include <algorithm>

#include "clarcube/error.hpp"

namespace clarcube {

std::vector<Edge> PerfectMatching::edges() const {
    std::vector<Edge> out;
    for (Vertex v = 0; v < static_cast<Vertex>(partner.size()); ++v)
        if (partner[static_cast<std::size_t>(v)] > v)
            out.emplace_back(v, partner[static_cast<std::size_t>(v)]);
    return out;
}

namespace {

// Branch on the lowest-indexed uncovered vertex, extending by each incident
// free edge in ascending neighbor order. Trying neighbors in ascending order
// makes the emission order lexicographic on the partner array.
struct MatchingSearch {
    const SimpleGraph& g;
    std::vector<Vertex> partner;
    std::vector<PerfectMatching>* sink = nullptr;
    long long count = 0;

    explicit MatchingSearch(const SimpleGraph& graph, const std::vector<char>& active)
        : g(graph), partner(static_cast<std::size_t>(graph.n()), -1) {
        for (Vertex v = 0; v < graph.n(); ++v)
            if (!active[static_cast<std::size_t>(v)]) partner[static_cast<std::size_t>(v)] = -2;
    }

    bool uncovered(Vertex v) const { return partner[static_cast<std::size_t>(v)] == -1; }

    bool has_free_neighbor(Vertex v) const {
        for (Vertex w : g.neighbors(v))
            if (uncovered(w)) return true;
        return false;
    }

    // A vertex adjacent to the just-matched pair may have lost its last free
    // neighbor; such a branch can never complete.
    bool locally_dead(Vertex u, Vertex w) const {
        for (Vertex x : g.neighbors(u))
            if (uncovered(x) && !has_free_neighbor(x)) return true;
        for (Vertex x : g.neighbors(w))
            if (uncovered(x) && !has_free_neighbor(x)) return true;
        return false;
    }

    void run(Vertex from) {
        Vertex v = from;
        while (v < g.n() && !uncovered(v)) ++v;
        if (v >= g.n()) {
            if (sink) {
                PerfectMatching m;
                m.partner = partner;
                for (Vertex& p : m.partner)
                    if (p == -2) p = -1;
                sink->push_back(std::move(m));
            }
            ++count;
            return;
        }
        for (Vertex w : g.neighbors(v)) {
            if (!uncovered(w)) continue;
            partner[static_cast<std::size_t>(v)] = w;
            partner[static_cast<std::size_t>(w)] = v;
            if (!locally_dead(v, w)) run(v + 1);
            partner[static_cast<std::size_t>(v)] = -1;
            partner[static_cast<std::size_t>(w)] = -1;
        }
    }
};

} // namespace

std::vector<PerfectMatching> enumerate_perfect_matchings_masked(const SimpleGraph& g,
                                                                const std::vector<char>& active) {
    MatchingSearch search(g, active);
    std::vector<PerfectMatching> out;
    search.sink = &out;
    search.run(0);
    return out;
}

long long count_perfect_matchings_masked(const SimpleGraph& g, const std::vector<char>& active) {
    MatchingSearch search(g, active);
    search.run(0);
    return search.count;
}

std::vector<PerfectMatching> enumerate_perfect_matchings(const MolecularGraph& g) {
    std::vector<char> active(static_cast<std::size_t>(g.n()), 1);
    return enumerate_perfect_matchings_masked(g.graph, active);
}

bool is_sextet(const MolecularGraph& g, const PerfectMatching& m, int face_index) {
    const Face& f = g.faces.at(static_cast<std::size_t>(face_index));
    if (!f.is_hexagon())
        throw Error(ErrorCode::NotAHexagon, "face " + std::to_string(face_index) + " is a pentagon");
    int hits = 0;
    for (const Edge& e : f.edges())
        if (m.contains(e.first, e.second)) ++hits;
    return hits == 3;
}

PerfectMatching flip(const MolecularGraph& g, const PerfectMatching& m, int face_index) {
    if (!is_sextet(g, m, face_index))
        throw Error(ErrorCode::NotASextet,
                    "matching is not alternating on face " + std::to_string(face_index));
    PerfectMatching out = m;
    const Face& f = g.faces.at(static_cast<std::size_t>(face_index));
    const auto& b = f.boundary;
    // Symmetric difference with the hexagon: the three matched sides drop
    // out, the other three come in.
    for (std::size_t i = 0; i < b.size(); ++i) {
        Vertex u = b[i], v = b[(i + 1) % b.size()];
        if (m.contains(u, v)) {
            out.partner[static_cast<std::size_t>(u)] = -1;
            out.partner[static_cast<std::size_t>(v)] = -1;
        }
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
        Vertex u = b[i], v = b[(i + 1) % b.size()];
        if (!m.contains(u, v) && out.partner[static_cast<std::size_t>(u)] == -1 &&
            out.partner[static_cast<std::size_t>(v)] == -1) {
            out.partner[static_cast<std::size_t>(u)] = v;
            out.partner[static_cast<std::size_t>(v)] = u;
        }
    }
    return out;
}

} // namespace clarcube
