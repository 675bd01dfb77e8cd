#ifndef CLARCUBE_CLAR_COVER_HPP
#define CLARCUBE_CLAR_COVER_HPP

#include <vector>

#include "clarcube/matchings.hpp"
#include "clarcube/molecular_graph.hpp"
#include "clarcube/polynomial.hpp"

namespace clarcube {

// Spanning subgraph whose components are hexagonal faces (C6), perimeters of
// fused hexagon pairs (C10), and single edges (K2). Hexagons are face
// indices, pairs are indices into fused_hexagon_pairs(g), both sorted.
struct GeneralizedClarCover {
    std::vector<int> hexagons;
    std::vector<int> pairs;
    std::vector<Edge> free_edges;
};

// All covers with exactly k C6 components and l C10 components, in
// lexicographic order on (hexagons, pairs, remainder matching).
std::vector<GeneralizedClarCover> enumerate_generalized_clar_covers(const MolecularGraph& g,
                                                                    int k, int l);

// Coefficient of x^k y^l counts covers with k hexagons and l 10-cycles.
BivariatePoly gzz_polynomial(const MolecularGraph& g);

// y = 0 slice of the above: the classic Clar cover counting polynomial.
BivariatePoly zz_polynomial(const MolecularGraph& g);

// Disjointness + coverage validator used by tests and the verifier.
bool cover_is_valid(const MolecularGraph& g, const GeneralizedClarCover& c, int k, int l);

} // namespace clarcube

#endif
