#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "clarcube/error.hpp"
#include "clarcube/molecular_graph.hpp"
#include "clarcube/presets.hpp"

using namespace clarcube;

namespace {

void check_common_invariants(const MolecularGraph& g) {
    // Handshake identity.
    std::size_t degree_sum = 0;
    for (Vertex v = 0; v < g.n(); ++v) degree_sum += g.graph.neighbors(v).size();
    CHECK(degree_sum == 2 * g.edge_count());
    // Each edge lies on at most two faces.
    std::map<Edge, int> face_count;
    for (const Face& f : g.faces) {
        for (const Edge& e : f.edges()) {
            ++face_count[e];
            CHECK(g.graph.has_edge(e.first, e.second));
        }
    }
    for (const auto& [e, c] : face_count) CHECK(c <= 2);
    CHECK(g.graph.connected());
}

} // namespace

TEST_CASE("single hexagon is benzene") {
    MolecularGraph g = build_benzenoid({{0, 0}});
    CHECK(g.n() == 6);
    CHECK(g.edge_count() == 6);
    CHECK(g.faces.size() == 1);
    CHECK(g.faces[0].is_hexagon());
    check_common_invariants(g);
}

TEST_CASE("two fused hexagons share exactly one edge") {
    MolecularGraph g = build_benzenoid({{0, 0}, {1, 0}});
    CHECK(g.n() == 10);
    CHECK(g.edge_count() == 11);
    CHECK(g.faces.size() == 2);
    auto shared = fused_hexagon_pairs(g);
    REQUIRE(shared.size() == 1);
    check_common_invariants(g);
}

TEST_CASE("anthracene: linear chain of three") {
    MolecularGraph g = build_benzenoid(benzenoid_linear(3));
    CHECK(g.n() == 14);
    CHECK(g.edge_count() == 16);
    CHECK(g.faces.size() == 3);
    CHECK(g.n() - static_cast<int>(g.edge_count()) + static_cast<int>(g.faces.size()) == 1);
    check_common_invariants(g);
}

TEST_CASE("benzenoid construction is canonical across input orderings") {
    MolecularGraph a = build_benzenoid({{0, 0}, {1, 0}, {2, 0}});
    MolecularGraph b = build_benzenoid({{2, 0}, {0, 0}, {1, 0}});
    CHECK(a.graph.adj == b.graph.adj);
    REQUIRE(a.faces.size() == b.faces.size());
    for (std::size_t i = 0; i < a.faces.size(); ++i) CHECK(a.faces[i].boundary == b.faces[i].boundary);
}

TEST_CASE("benzenoid error paths") {
    CHECK_THROWS_WITH_AS(build_benzenoid({}), doctest::Contains("EmptyInput"), Error);
    CHECK_THROWS_WITH_AS(build_benzenoid({{0, 0}, {2, 0}}), doctest::Contains("DisconnectedHexagons"),
                         Error);
    // Ring of six hexagons around a missing center: every edge exists but the
    // center face is absent.
    std::set<HexCoord> ring = benzenoid_coronene();
    ring.erase({0, 0});
    CHECK_THROWS_WITH_AS(build_benzenoid(ring), doctest::Contains("HoleDetected"), Error);
}

TEST_CASE("fused pair enumeration on chains") {
    MolecularGraph benzene = build_benzenoid({{0, 0}});
    CHECK(fused_hexagon_pairs(benzene).empty());

    MolecularGraph naphthalene = build_benzenoid({{0, 0}, {1, 0}});
    CHECK(fused_hexagon_pairs(naphthalene).size() == 1);

    MolecularGraph anthracene = build_benzenoid(benzenoid_linear(3));
    auto pairs = fused_hexagon_pairs(anthracene);
    REQUIRE(pairs.size() == 2);
    CHECK(pairs[0].face_a == 0);
    CHECK(pairs[0].face_b == 1);
    CHECK(pairs[1].face_a == 1);
    CHECK(pairs[1].face_b == 2);
}

TEST_CASE("fused pair perimeters are 10-cycles") {
    for (const char* preset : {"linear:3", "zigzag:4", "pyrene", "coronene"}) {
        MolecularGraph g = build_preset(preset);
        for (const FusedPair& p : fused_hexagon_pairs(g)) {
            CHECK(fused_pair_vertices(g, p).size() == 10);
            std::vector<Edge> ea = g.faces[static_cast<std::size_t>(p.face_a)].edges();
            std::vector<Edge> eb = g.faces[static_cast<std::size_t>(p.face_b)].edges();
            std::vector<Edge> all;
            std::set_union(ea.begin(), ea.end(), eb.begin(), eb.end(), std::back_inserter(all));
            CHECK(all.size() == 11);
            CHECK(fused_pair_cycle_edges(g, p).size() == 10);
        }
    }
}

TEST_CASE("tubulene (2,2,1) is a valid cylinder band") {
    MolecularGraph g = build_tubulene({2, 2, 1});
    check_common_invariants(g);
    for (const Face& f : g.faces) CHECK(f.is_hexagon());
    for (Vertex v = 0; v < g.n(); ++v) {
        std::size_t d = g.graph.neighbors(v).size();
        CHECK((d == 2 || d == 3));
    }
    // Cylinder Euler characteristic.
    CHECK(g.n() - static_cast<int>(g.edge_count()) + static_cast<int>(g.faces.size()) == 0);
    CHECK(g.faces.size() == 4);
    CHECK(g.n() == 16);
}

TEST_CASE("tubulene (4,-3,2) builds and passes the cylinder checks") {
    MolecularGraph g = build_tubulene({4, -3, 2});
    check_common_invariants(g);
    CHECK(g.n() - static_cast<int>(g.edge_count()) + static_cast<int>(g.faces.size()) == 0);
    CHECK(g.faces.size() == 8); // two rings of four hexagons
    CHECK(g.family == Family::tubulene);
}

TEST_CASE("tubulene rejects invalid chiral vectors") {
    CHECK_THROWS_WITH_AS(build_tubulene({1, 0, 1}), doctest::Contains("InvalidChiralVector"), Error);
    CHECK_THROWS_WITH_AS(build_tubulene({0, 1, 1}), doctest::Contains("InvalidChiralVector"), Error);
    CHECK_THROWS_WITH_AS(build_tubulene({1, -1, 1}), doctest::Contains("InvalidChiralVector"), Error);
    CHECK_THROWS_WITH_AS(build_tubulene({-1, 1, 2}), doctest::Contains("InvalidChiralVector"), Error);
}

TEST_CASE("tubulene construction covers a range of chiral vectors") {
    for (int n = -4; n <= 4; ++n) {
        for (int m = -4; m <= 4; ++m) {
            if (std::abs(n) + std::abs(m) <= 1 || n * m == -1) continue;
            for (int rings = 1; rings <= 2; ++rings) {
                CAPTURE(n);
                CAPTURE(m);
                CAPTURE(rings);
                MolecularGraph g = build_tubulene({n, m, rings});
                check_common_invariants(g);
                CHECK(g.n() - static_cast<int>(g.edge_count()) + static_cast<int>(g.faces.size()) == 0);
            }
        }
    }
}

TEST_CASE("dodecahedron loads as C20") {
    MolecularGraph g = load_fullerene(fullerene_c20_rotation());
    CHECK(g.n() == 20);
    CHECK(g.edge_count() == 30);
    CHECK(g.faces.size() == 12);
    CHECK(g.pentagon_faces().size() == 12);
    CHECK(g.hexagon_faces().empty());
    check_common_invariants(g);
}

TEST_CASE("truncated icosahedron loads as C60") {
    MolecularGraph g = load_fullerene(fullerene_c60_rotation());
    CHECK(g.n() == 60);
    CHECK(g.edge_count() == 90);
    CHECK(g.faces.size() == 32);
    CHECK(g.pentagon_faces().size() == 12);
    CHECK(g.hexagon_faces().size() == 20);
    check_common_invariants(g);
}

TEST_CASE("24-vertex fullerene has two hexagonal caps") {
    MolecularGraph g = load_fullerene(fullerene_c24_rotation());
    CHECK(g.n() == 24);
    CHECK(g.edge_count() == 36);
    CHECK(g.pentagon_faces().size() == 12);
    CHECK(g.hexagon_faces().size() == 2);
    CHECK(fused_hexagon_pairs(g).empty());
    check_common_invariants(g);
}

TEST_CASE("fullerene loader rejects bad rotation systems") {
    // K4: valid cubic rotation system, triangular faces.
    std::vector<std::vector<Vertex>> k4{{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}};
    CHECK_THROWS_WITH_AS(load_fullerene(k4), doctest::Contains("BadFaceSize"), Error);

    std::vector<std::vector<Vertex>> not_cubic{{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1}};
    CHECK_THROWS_WITH_AS(load_fullerene(not_cubic), doctest::Contains("NotCubic"), Error);

    // Replace one neighbor with a vertex that does not list 0 back.
    auto broken = fullerene_c20_rotation();
    for (Vertex cand = 0; cand < 20; ++cand) {
        if (cand == 0 || cand == broken[0][1] || cand == broken[0][2] || cand == broken[0][0]) continue;
        bool lists_zero = false;
        for (Vertex w : broken[static_cast<std::size_t>(cand)]) lists_zero |= (w == 0);
        if (!lists_zero) {
            broken[0][0] = cand;
            break;
        }
    }
    CHECK_THROWS_WITH_AS(load_fullerene(broken), doctest::Contains("NotCubic"), Error);
}
