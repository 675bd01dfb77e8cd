#ifndef CLARCUBE_BIJECTION_HPP
#define CLARCUBE_BIJECTION_HPP

#include <string>
#include <vector>

#include "clarcube/clar_cover.hpp"
#include "clarcube/resonance.hpp"

namespace clarcube {

// Image of one generalized Clar cover in the resonance graph: the matchings
// satisfying the cover's constraints, addressed by mixed-radix coordinate
// strings (k digits in {0,1} for the C6 components, then l digits in {0,1,2}
// for the C10 components, both in sorted component order).
struct QklEmbedding {
    int k = 0;
    int l = 0;
    std::vector<int> matching_for_code; // code -> matching id in r

    std::vector<Vertex> vertex_set() const; // sorted, deduplicated
};

// The per-component choices behind one coordinate digit. For a C6 component
// the two alternating matchings are possibilities 0 and 1 (0 is the one whose
// edge at the hexagon's smallest vertex has the smaller other endpoint). For
// a C10 component possibility 1 contains the shared edge of the two hexagons,
// and possibility 0 flips possibility 1 on the lower-indexed hexagon.
std::vector<std::vector<Edge>> c6_possibilities(const MolecularGraph& g, int face_index);
std::vector<std::vector<Edge>> c10_possibilities(const MolecularGraph& g, const FusedPair& pair);

QklEmbedding clar_cover_to_subgraph(const MolecularGraph& g, const ResonanceGraph& r,
                                    const GeneralizedClarCover& c);

struct BijectionEntry {
    int k = 0;
    int l = 0;
    long long cover_count = 0;  // generalized Clar covers with (k, l) cycles
    long long subgraph_count = 0; // induced convex Q_{k,l} subgraphs of r
    bool images_valid = true;   // size, label isomorphism, convexity
    bool injective = true;      // image sets pairwise distinct
    bool sets_match = true;     // image sets == enumerated subgraph sets
    std::string counterexample; // first discrepancy, empty if none
    std::vector<Vertex> counterexample_set; // offending matching-id set, if any
    bool passed() const { return images_valid && injective && sets_match; }
};

struct BijectionReport {
    std::vector<BijectionEntry> entries;
    bool passed() const;
    std::string first_failure() const;
};

struct FourCycleReport {
    long long cycles_checked = 0;
    bool passed = true;
    std::string counterexample;
};

// Checks, for every (k, l) with a nonzero count on either side, that cover
// images are valid convex Q_{k,l} subgraphs, pairwise distinct, and exactly
// the enumerated convex subgraph sets.
BijectionReport verify_bijection(const MolecularGraph& g, const ResonanceGraph& r,
                                 int threads = 1);

// Every 4-cycle of r must be induced by two disjoint hexagons, with opposite
// edges carrying equal labels.
FourCycleReport verify_four_cycle_lemma(const MolecularGraph& g, const ResonanceGraph& r);

} // namespace clarcube

#endif
