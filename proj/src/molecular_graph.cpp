#include "clarcube/molecular_graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "clarcube/error.hpp"

namespace clarcube {

const char* family_name(Family f) {
    switch (f) {
        case Family::benzenoid: return "benzenoid";
        case Family::tubulene: return "tubulene";
        case Family::fullerene: return "fullerene";
    }
    return "unknown";
}

std::vector<Edge> Face::edges() const {
    std::vector<Edge> out;
    out.reserve(boundary.size());
    for (std::size_t i = 0; i < boundary.size(); ++i)
        out.push_back(make_edge(boundary[i], boundary[(i + 1) % boundary.size()]));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Vertex> Face::sorted_vertices() const {
    std::vector<Vertex> out = boundary;
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> MolecularGraph::hexagon_faces() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < faces.size(); ++i)
        if (faces[i].is_hexagon()) out.push_back(static_cast<int>(i));
    return out;
}

std::vector<int> MolecularGraph::pentagon_faces() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < faces.size(); ++i)
        if (!faces[i].is_hexagon()) out.push_back(static_cast<int>(i));
    return out;
}

namespace {

// Corner lattice scheme: hexagon (q, r) has its center at (3q, 2r + q) in a
// skewed integer plane where the six corners sit at the offsets below, listed
// in cyclic order. Axially adjacent hexagons share exactly two consecutive
// corners, i.e. one side.
struct LatticePoint {
    long long x = 0;
    long long y = 0;
    auto operator<=>(const LatticePoint&) const = default;
    LatticePoint operator+(const LatticePoint& o) const { return {x + o.x, y + o.y}; }
    LatticePoint operator-(const LatticePoint& o) const { return {x - o.x, y - o.y}; }
    LatticePoint operator*(long long t) const { return {x * t, y * t}; }
};

constexpr LatticePoint kCornerOffsets[6] = {
    {2, 0}, {1, 1}, {-1, 1}, {-2, 0}, {-1, -1}, {1, -1},
};

LatticePoint hex_center(int q, int r) { return {3LL * q, 2LL * r + q}; }

constexpr int kAxialNeighborCount = 6;
constexpr std::pair<int, int> kAxialNeighbors[kAxialNeighborCount] = {
    {1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1},
};

long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// Canonical representative of p modulo the rank-1 lattice Z·t: the copy whose
// projection onto t lies in [0, 1).
LatticePoint reduce_mod(const LatticePoint& p, const LatticePoint& t) {
    long long num = p.x * t.x + p.y * t.y;
    long long den = t.x * t.x + t.y * t.y;
    long long k = floor_div(num, den);
    return p - t * k;
}

std::vector<Vertex> rotate_to_min(std::vector<Vertex> boundary) {
    auto it = std::min_element(boundary.begin(), boundary.end());
    std::rotate(boundary.begin(), it, boundary.end());
    return boundary;
}

void check_handshake_and_degrees(const MolecularGraph& g, bool cubic) {
    for (Vertex v = 0; v < g.graph.n(); ++v) {
        std::size_t d = g.graph.neighbors(v).size();
        if (cubic ? d != 3 : (d != 2 && d != 3))
            throw std::logic_error("constructed graph has invalid vertex degree");
    }
}

} // namespace

MolecularGraph build_benzenoid(const std::set<HexCoord>& hexagons) {
    if (hexagons.empty()) throw Error(ErrorCode::EmptyInput, "no hexagon coordinates given");

    // Edge-connectivity of the cell union equals adjacency in axial coords.
    std::deque<HexCoord> queue{*hexagons.begin()};
    std::set<HexCoord> seen{*hexagons.begin()};
    while (!queue.empty()) {
        HexCoord h = queue.front();
        queue.pop_front();
        for (auto [dq, dr] : kAxialNeighbors) {
            HexCoord nb{h.q + dq, h.r + dr};
            if (hexagons.count(nb) && !seen.count(nb)) {
                seen.insert(nb);
                queue.push_back(nb);
            }
        }
    }
    if (seen.size() != hexagons.size())
        throw Error(ErrorCode::DisconnectedHexagons,
                    "hexagon set is not edge-connected (" + std::to_string(seen.size()) + " of " +
                        std::to_string(hexagons.size()) + " reachable)");

    std::set<LatticePoint> corner_set;
    for (const HexCoord& h : hexagons) {
        LatticePoint c = hex_center(h.q, h.r);
        for (const LatticePoint& off : kCornerOffsets) corner_set.insert(c + off);
    }
    // Canonical vertex numbering: lexicographic on corner lattice position.
    std::map<LatticePoint, Vertex> index;
    Vertex next = 0;
    for (const LatticePoint& p : corner_set) index[p] = next++;

    MolecularGraph g;
    g.family = Family::benzenoid;
    g.graph = SimpleGraph(static_cast<int>(corner_set.size()));
    for (const HexCoord& h : hexagons) {
        LatticePoint c = hex_center(h.q, h.r);
        std::vector<Vertex> boundary;
        boundary.reserve(6);
        for (const LatticePoint& off : kCornerOffsets) boundary.push_back(index.at(c + off));
        for (int i = 0; i < 6; ++i) g.graph.add_edge(boundary[i], boundary[(i + 1) % 6]);
        g.faces.push_back(Face{rotate_to_min(std::move(boundary))});
    }
    g.graph.finalize();

    long long v = g.graph.n();
    long long e = static_cast<long long>(g.graph.edge_count());
    long long h = static_cast<long long>(g.faces.size());
    if (v - e + h != 1)
        throw Error(ErrorCode::HoleDetected,
                    "hexagon set is not simply connected (v-e+h = " + std::to_string(v - e + h) + ")");

    check_handshake_and_degrees(g, /*cubic=*/false);
    return g;
}

namespace {

// Evenly interleaved step sequence: `a` copies of va and `b` copies of vb
// along the digital straight segment from the origin to a*va + b*vb.
std::vector<std::pair<int, int>> interleave_steps(std::pair<int, int> va, int a,
                                                  std::pair<int, int> vb, int b) {
    std::vector<std::pair<int, int>> steps;
    int p = a + b;
    steps.reserve(static_cast<std::size_t>(p));
    for (int i = 0; i < p; ++i) {
        long long before = static_cast<long long>(i) * b / p;
        long long after = static_cast<long long>(i + 1) * b / p;
        steps.push_back(after > before ? vb : va);
    }
    return steps;
}

} // namespace

MolecularGraph build_tubulene(const TubuleneSpec& spec) {
    if (std::abs(spec.n) + std::abs(spec.m) <= 1 || spec.n * spec.m == -1)
        throw Error(ErrorCode::InvalidChiralVector,
                    "chiral vector (" + std::to_string(spec.n) + "," + std::to_string(spec.m) +
                        ") violates |n|+|m|>1, nm != -1");
    if (spec.rings < 1)
        throw Error(ErrorCode::ParseError, "rings must be a positive integer");

    // (n, m) and (-n, -m) roll up to the same cylinder.
    int n = spec.n, m = spec.m;
    if (n < 0 || (n == 0 && m < 0)) {
        n = -n;
        m = -m;
    }

    // Canonical straight ring: lattice path of edge-adjacent hexagons from
    // (0,0) to (n,m), closing into a cycle once centers are identified modulo
    // the chiral vector. Layers are stacked along a transversal step s chosen
    // so that the translated rings tile the whole center lattice.
    std::vector<std::pair<int, int>> steps;
    std::pair<int, int> s;
    if (m >= 0) {
        steps = interleave_steps({1, 0}, n, {0, 1}, m);
        s = {1, -1};
    } else {
        int mp = -m;
        if (n >= mp) {
            steps = interleave_steps({1, 0}, n - mp, {1, -1}, mp);
            s = {0, 1};
        } else {
            steps = interleave_steps({1, -1}, n, {0, -1}, mp - n);
            s = {1, 0};
        }
    }

    std::vector<HexCoord> band;
    {
        std::set<std::pair<long long, long long>> dedup;
        LatticePoint hex_mod{n, m};
        for (int j = 0; j < spec.rings; ++j) {
            int q = j * s.first, r = j * s.second;
            for (std::size_t t = 0; t < steps.size(); ++t) {
                LatticePoint rep = reduce_mod(LatticePoint{q, r}, hex_mod);
                if (!dedup.insert({rep.x, rep.y}).second)
                    throw std::logic_error("tubulene ring stacking produced a duplicate hexagon");
                band.push_back(HexCoord{static_cast<int>(q), static_cast<int>(r)});
                q += steps[t].first;
                r += steps[t].second;
            }
        }
    }

    // Corner identification modulo the chiral translation.
    const LatticePoint T{3LL * n, n + 2LL * m};
    std::set<LatticePoint> corner_set;
    for (const HexCoord& h : band) {
        LatticePoint c = hex_center(h.q, h.r);
        for (const LatticePoint& off : kCornerOffsets) corner_set.insert(reduce_mod(c + off, T));
    }
    std::map<LatticePoint, Vertex> index;
    Vertex next = 0;
    for (const LatticePoint& p : corner_set) index[p] = next++;

    MolecularGraph g;
    g.family = Family::tubulene;
    g.graph = SimpleGraph(static_cast<int>(corner_set.size()));

    // Lift displacement per directed edge, used for the winding check. Two
    // hexagons generating the same edge must agree on it, else the wrap is
    // degenerate (edge identified with itself around the cylinder).
    std::map<std::pair<Vertex, Vertex>, LatticePoint> lift;
    auto record_lift = [&](Vertex u, Vertex v, const LatticePoint& delta) {
        auto [it, inserted] = lift.try_emplace({u, v}, delta);
        if (!inserted && it->second != delta)
            throw Error(ErrorCode::InvalidChiralVector,
                        "circumference too small: an edge wraps onto itself");
    };

    for (const HexCoord& h : band) {
        LatticePoint c = hex_center(h.q, h.r);
        std::vector<Vertex> boundary;
        boundary.reserve(6);
        for (const LatticePoint& off : kCornerOffsets) boundary.push_back(index.at(reduce_mod(c + off, T)));
        for (int i = 0; i < 6; ++i) {
            Vertex u = boundary[i], v = boundary[(i + 1) % 6];
            if (u == v)
                throw Error(ErrorCode::InvalidChiralVector, "circumference too small: edge collapsed");
            LatticePoint pu = c + kCornerOffsets[i];
            LatticePoint pv = c + kCornerOffsets[(i + 1) % 6];
            record_lift(u, v, pv - pu);
            record_lift(v, u, pu - pv);
            g.graph.add_edge(u, v);
        }
        g.faces.push_back(Face{rotate_to_min(std::move(boundary))});
    }
    g.graph.finalize();
    check_handshake_and_degrees(g, /*cubic=*/false);
    if (!g.graph.connected()) throw std::logic_error("tubulene band is disconnected");

    // Cylinder Euler characteristic: v - e + #hexagons = 0.
    long long v = g.graph.n();
    long long e = static_cast<long long>(g.graph.edge_count());
    long long f = static_cast<long long>(g.faces.size());
    if (v - e + f != 0)
        throw Error(ErrorCode::InvalidChiralVector,
                    "band does not form a cylinder tessellation (v-e+f = " + std::to_string(v - e + f) + ")");

    // The boundary must consist of exactly two vertex-disjoint cycles, each
    // winding once around the axis.
    std::map<Edge, int> face_count;
    for (const Face& face : g.faces)
        for (const Edge& ed : face.edges()) ++face_count[ed];
    std::vector<std::vector<Vertex>> boundary_adj(static_cast<std::size_t>(g.graph.n()));
    for (const auto& [ed, cnt] : face_count) {
        if (cnt > 2) throw std::logic_error("edge bounded by more than two hexagons");
        if (cnt == 1) {
            boundary_adj[static_cast<std::size_t>(ed.first)].push_back(ed.second);
            boundary_adj[static_cast<std::size_t>(ed.second)].push_back(ed.first);
        }
    }
    std::vector<char> visited(static_cast<std::size_t>(g.graph.n()), 0);
    int cycles = 0;
    for (Vertex start = 0; start < g.graph.n(); ++start) {
        if (boundary_adj[static_cast<std::size_t>(start)].empty() || visited[static_cast<std::size_t>(start)])
            continue;
        if (boundary_adj[static_cast<std::size_t>(start)].size() != 2)
            throw Error(ErrorCode::InvalidChiralVector, "boundary is not a disjoint union of cycles");
        ++cycles;
        LatticePoint winding{0, 0};
        Vertex prev = -1, cur = start;
        do {
            visited[static_cast<std::size_t>(cur)] = 1;
            const auto& nb = boundary_adj[static_cast<std::size_t>(cur)];
            if (nb.size() != 2)
                throw Error(ErrorCode::InvalidChiralVector, "boundary is not a disjoint union of cycles");
            Vertex nxt = (nb[0] == prev) ? nb[1] : nb[0];
            winding = winding + lift.at({cur, nxt});
            prev = cur;
            cur = nxt;
        } while (cur != start);
        bool winds_once = (winding == T) || (winding == LatticePoint{-T.x, -T.y});
        if (!winds_once)
            throw Error(ErrorCode::InvalidChiralVector, "boundary cycle does not encircle the axis");
    }
    if (cycles != 2)
        throw Error(ErrorCode::InvalidChiralVector,
                    "expected two boundary cycles, found " + std::to_string(cycles));

    return g;
}

MolecularGraph load_fullerene(const std::vector<std::vector<Vertex>>& rotation_system) {
    const int n = static_cast<int>(rotation_system.size());
    if (n == 0) throw Error(ErrorCode::EmptyInput, "empty rotation system");
    for (Vertex v = 0; v < n; ++v) {
        const auto& nb = rotation_system[static_cast<std::size_t>(v)];
        if (nb.size() != 3)
            throw Error(ErrorCode::NotCubic, "vertex " + std::to_string(v) + " lists " +
                                                 std::to_string(nb.size()) + " neighbors");
        for (Vertex w : nb) {
            if (w < 0 || w >= n)
                throw Error(ErrorCode::NotCubic, "vertex " + std::to_string(v) + " lists unknown neighbor " +
                                                     std::to_string(w));
            if (w == v) throw Error(ErrorCode::NotCubic, "vertex " + std::to_string(v) + " lists itself");
        }
        if (nb[0] == nb[1] || nb[0] == nb[2] || nb[1] == nb[2])
            throw Error(ErrorCode::NotCubic, "vertex " + std::to_string(v) + " repeats a neighbor");
    }
    auto neighbor_index = [&](Vertex v, Vertex w) -> int {
        const auto& nb = rotation_system[static_cast<std::size_t>(v)];
        for (int i = 0; i < 3; ++i)
            if (nb[i] == w) return i;
        return -1;
    };
    for (Vertex v = 0; v < n; ++v)
        for (Vertex w : rotation_system[static_cast<std::size_t>(v)])
            if (neighbor_index(w, v) < 0)
                throw Error(ErrorCode::NotCubic, "neighbor listing is not symmetric between " +
                                                     std::to_string(v) + " and " + std::to_string(w));

    MolecularGraph g;
    g.family = Family::fullerene;
    g.graph = SimpleGraph(n);
    for (Vertex v = 0; v < n; ++v)
        for (Vertex w : rotation_system[static_cast<std::size_t>(v)])
            if (v < w) g.graph.add_edge(v, w);
    g.graph.finalize();
    for (Vertex v = 0; v < n; ++v)
        if (g.graph.neighbors(v).size() != 3)
            throw Error(ErrorCode::NotCubic, "vertex " + std::to_string(v) + " has a repeated edge");

    // Standard face tracing of the combinatorial embedding: from arc (u, v)
    // continue along (v, successor of u in the rotation at v).
    std::vector<std::vector<char>> used(static_cast<std::size_t>(n), std::vector<char>(3, 0));
    for (Vertex u = 0; u < n; ++u) {
        for (int i = 0; i < 3; ++i) {
            if (used[static_cast<std::size_t>(u)][static_cast<std::size_t>(i)]) continue;
            std::vector<Vertex> boundary;
            Vertex cu = u;
            int ci = i;
            do {
                used[static_cast<std::size_t>(cu)][static_cast<std::size_t>(ci)] = 1;
                boundary.push_back(cu);
                Vertex cv = rotation_system[static_cast<std::size_t>(cu)][static_cast<std::size_t>(ci)];
                int j = neighbor_index(cv, cu);
                ci = (j + 1) % 3;
                cu = cv;
                if (boundary.size() > static_cast<std::size_t>(2 * n))
                    throw Error(ErrorCode::NotPlanarEmbedding, "face tracing did not terminate");
            } while (!(cu == u && ci == i));
            if (boundary.size() != 5 && boundary.size() != 6)
                throw Error(ErrorCode::BadFaceSize,
                            "traced face has length " + std::to_string(boundary.size()));
            std::vector<Vertex> sorted = boundary;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
                throw Error(ErrorCode::BadFaceSize, "traced face is not a simple cycle");
            g.faces.push_back(Face{rotate_to_min(std::move(boundary))});
        }
    }

    long long v = n;
    long long e = static_cast<long long>(g.graph.edge_count());
    long long f = static_cast<long long>(g.faces.size());
    if (v - e + f != 2)
        throw Error(ErrorCode::NotPlanarEmbedding,
                    "Euler's formula fails: v-e+f = " + std::to_string(v - e + f));
    if (!g.graph.connected())
        throw Error(ErrorCode::NotPlanarEmbedding, "graph is disconnected");

    int pentagons = static_cast<int>(g.pentagon_faces().size());
    if (pentagons != 12)
        throw Error(ErrorCode::NotPlanarEmbedding,
                    "expected 12 pentagonal faces, found " + std::to_string(pentagons));
    check_handshake_and_degrees(g, /*cubic=*/true);
    return g;
}

std::vector<FusedPair> fused_hexagon_pairs(const MolecularGraph& g) {
    std::vector<FusedPair> out;
    std::vector<int> hexes = g.hexagon_faces();
    std::vector<std::vector<Edge>> edge_sets;
    std::vector<std::vector<Vertex>> vertex_sets;
    edge_sets.reserve(hexes.size());
    vertex_sets.reserve(hexes.size());
    for (int f : hexes) {
        edge_sets.push_back(g.faces[static_cast<std::size_t>(f)].edges());
        vertex_sets.push_back(g.faces[static_cast<std::size_t>(f)].sorted_vertices());
    }
    for (std::size_t a = 0; a < hexes.size(); ++a) {
        for (std::size_t b = a + 1; b < hexes.size(); ++b) {
            std::vector<Edge> shared_edges;
            std::set_intersection(edge_sets[a].begin(), edge_sets[a].end(), edge_sets[b].begin(),
                                  edge_sets[b].end(), std::back_inserter(shared_edges));
            if (shared_edges.size() != 1) continue;
            std::vector<Vertex> shared_vertices;
            std::set_intersection(vertex_sets[a].begin(), vertex_sets[a].end(), vertex_sets[b].begin(),
                                  vertex_sets[b].end(), std::back_inserter(shared_vertices));
            if (shared_vertices.size() != 2) continue; // perimeter must be a 10-cycle
            out.push_back(FusedPair{hexes[a], hexes[b], shared_edges[0]});
        }
    }
    return out;
}

std::vector<Edge> fused_pair_cycle_edges(const MolecularGraph& g, const FusedPair& pair) {
    std::vector<Edge> ea = g.faces[static_cast<std::size_t>(pair.face_a)].edges();
    std::vector<Edge> eb = g.faces[static_cast<std::size_t>(pair.face_b)].edges();
    std::vector<Edge> all;
    std::set_union(ea.begin(), ea.end(), eb.begin(), eb.end(), std::back_inserter(all));
    all.erase(std::remove(all.begin(), all.end(), pair.shared_edge), all.end());
    return all;
}

std::vector<Vertex> fused_pair_vertices(const MolecularGraph& g, const FusedPair& pair) {
    std::vector<Vertex> va = g.faces[static_cast<std::size_t>(pair.face_a)].sorted_vertices();
    std::vector<Vertex> vb = g.faces[static_cast<std::size_t>(pair.face_b)].sorted_vertices();
    std::vector<Vertex> all;
    std::set_union(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(all));
    return all;
}

} // namespace clarcube
