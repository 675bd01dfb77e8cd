#ifndef CLARCUBE_PRESETS_HPP
#define CLARCUBE_PRESETS_HPP

#include <set>
#include <string>
#include <vector>

#include "clarcube/molecular_graph.hpp"

namespace clarcube {

// Named inputs covering the three families. Preset grammar:
//   linear:H  zigzag:H  pyrene  coronene  tube:N,M,R  c20  c24  c60
struct PresetInput {
    Family family = Family::benzenoid;
    std::set<HexCoord> hexagons;                   // benzenoid
    TubuleneSpec tube;                             // tubulene
    std::vector<std::vector<Vertex>> rotation;     // fullerene
};

PresetInput make_preset(const std::string& name);
MolecularGraph build_preset(const std::string& name);

std::set<HexCoord> benzenoid_linear(int hexagons);
std::set<HexCoord> benzenoid_zigzag(int hexagons);
std::set<HexCoord> benzenoid_pyrene();
std::set<HexCoord> benzenoid_coronene();

std::vector<std::vector<Vertex>> fullerene_c20_rotation();
std::vector<std::vector<Vertex>> fullerene_c24_rotation();
std::vector<std::vector<Vertex>> fullerene_c60_rotation();

// Rotation-system toolkit used to derive the fullerene presets from oriented
// face lists; exposed for tests.
std::vector<std::vector<Vertex>> orient_faces(std::vector<std::vector<Vertex>> faces, int n);
std::vector<std::vector<Vertex>> rotation_from_faces(const std::vector<std::vector<Vertex>>& oriented,
                                                     int n);
std::vector<std::vector<Vertex>> trace_faces(const std::vector<std::vector<Vertex>>& rotation);
std::vector<std::vector<Vertex>> dual_rotation(const std::vector<std::vector<Vertex>>& rotation);
std::vector<std::vector<Vertex>> truncate_rotation(const std::vector<std::vector<Vertex>>& rotation);

} // namespace clarcube

#endif
