#ifndef CLARCUBE_MATCHINGS_HPP
#define CLARCUBE_MATCHINGS_HPP

#include <cstdint>
#include <vector>

#include "clarcube/molecular_graph.hpp"

namespace clarcube {

// Perfect matching stored as a per-vertex partner array. Vertices excluded
// from a masked enumeration keep partner -1. Canonical order between
// matchings of the same graph is lexicographic on the partner array.
struct PerfectMatching {
    std::vector<Vertex> partner;

    bool covers(Vertex v) const { return partner[static_cast<std::size_t>(v)] >= 0; }
    bool contains(Vertex u, Vertex v) const { return partner[static_cast<std::size_t>(u)] == v; }
    std::vector<Edge> edges() const;

    friend bool operator==(const PerfectMatching& a, const PerfectMatching& b) {
        return a.partner == b.partner;
    }
    friend bool operator<(const PerfectMatching& a, const PerfectMatching& b) {
        return a.partner < b.partner;
    }
};

// All perfect matchings of g in canonical order. An empty list is a valid
// outcome, not an error.
std::vector<PerfectMatching> enumerate_perfect_matchings(const MolecularGraph& g);

// Same, restricted to the subgraph induced on vertices with active[v] != 0.
// Partner entries of inactive vertices stay -1.
std::vector<PerfectMatching> enumerate_perfect_matchings_masked(const SimpleGraph& g,
                                                                const std::vector<char>& active);

// Count-only variant of the masked enumeration.
long long count_perfect_matchings_masked(const SimpleGraph& g, const std::vector<char>& active);

// True iff matching m uses exactly 3 of the hexagon's 6 edges.
bool is_sextet(const MolecularGraph& g, const PerfectMatching& m, int face_index);

// Symmetric difference with the hexagon's edge set. Requires is_sextet.
PerfectMatching flip(const MolecularGraph& g, const PerfectMatching& m, int face_index);

} // namespace clarcube

#endif
