#ifndef CLARCUBE_MOLECULAR_GRAPH_HPP
#define CLARCUBE_MOLECULAR_GRAPH_HPP

#include <compare>
#include <set>
#include <string>
#include <vector>

#include "clarcube/graph.hpp"

namespace clarcube {

enum class Family { benzenoid, tubulene, fullerene };

const char* family_name(Family f);

// Hexagon center in axial coordinates on the infinite hexagonal lattice.
struct HexCoord {
    int q = 0;
    int r = 0;
    auto operator<=>(const HexCoord&) const = default;
};

struct TubuleneSpec {
    int n = 0;
    int m = 0;
    int rings = 1; // complete hexagon rings between the two boundary cycles
};

enum class FaceKind { pentagon, hexagon };

// Simple bounded face, boundary listed in cyclic order.
struct Face {
    std::vector<Vertex> boundary;

    FaceKind kind() const { return boundary.size() == 5 ? FaceKind::pentagon : FaceKind::hexagon; }
    bool is_hexagon() const { return boundary.size() == 6; }
    std::vector<Edge> edges() const;
    std::vector<Vertex> sorted_vertices() const;
};

struct MolecularGraph {
    SimpleGraph graph;
    std::vector<Face> faces;
    Family family = Family::benzenoid;

    int n() const { return graph.n(); }
    std::size_t edge_count() const { return graph.edge_count(); }
    std::vector<int> hexagon_faces() const; // indices of hexagonal faces
    std::vector<int> pentagon_faces() const;
};

// Two hexagonal faces sharing exactly one edge (and only its two endpoints).
// Their perimeter is a 10-cycle; the shared edge is the chord.
struct FusedPair {
    int face_a = 0; // face indices, face_a < face_b
    int face_b = 0;
    Edge shared_edge;
};

MolecularGraph build_benzenoid(const std::set<HexCoord>& hexagons);
MolecularGraph build_tubulene(const TubuleneSpec& spec);
// rotation_system[i] lists the 3 neighbors of vertex i in cyclic order.
MolecularGraph load_fullerene(const std::vector<std::vector<Vertex>>& rotation_system);

std::vector<FusedPair> fused_hexagon_pairs(const MolecularGraph& g);

// Perimeter of a fused pair: the 10-cycle E(h1) ∪ E(h2) minus the shared edge.
std::vector<Edge> fused_pair_cycle_edges(const MolecularGraph& g, const FusedPair& pair);
std::vector<Vertex> fused_pair_vertices(const MolecularGraph& g, const FusedPair& pair);

} // namespace clarcube

#endif
