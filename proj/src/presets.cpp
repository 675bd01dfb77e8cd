#include "clarcube/presets.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

#include "clarcube/error.hpp"

namespace clarcube {

std::set<HexCoord> benzenoid_linear(int hexagons) {
    std::set<HexCoord> out;
    for (int i = 0; i < hexagons; ++i) out.insert({i, 0});
    return out;
}

std::set<HexCoord> benzenoid_zigzag(int hexagons) {
    std::set<HexCoord> out;
    for (int i = 0; i < hexagons; ++i) out.insert({(i + 1) / 2, i / 2});
    return out;
}

std::set<HexCoord> benzenoid_pyrene() {
    return {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
}

std::set<HexCoord> benzenoid_coronene() {
    return {{0, 0}, {1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}};
}

std::vector<std::vector<Vertex>> orient_faces(std::vector<std::vector<Vertex>> faces, int n) {
    // Orientations are consistent when every edge is traversed once in each
    // direction. Fix face 0 and propagate across shared edges.
    std::map<Edge, std::vector<int>> edge_faces;
    for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
        const auto& cyc = faces[static_cast<std::size_t>(f)];
        for (std::size_t i = 0; i < cyc.size(); ++i)
            edge_faces[make_edge(cyc[i], cyc[(i + 1) % cyc.size()])].push_back(f);
    }
    for (const auto& [e, fs] : edge_faces)
        if (fs.size() != 2)
            throw std::logic_error("face list does not describe a closed surface");
    (void)n;

    auto traverses = [&](int f, Vertex u, Vertex v) {
        const auto& cyc = faces[static_cast<std::size_t>(f)];
        for (std::size_t i = 0; i < cyc.size(); ++i)
            if (cyc[i] == u && cyc[(i + 1) % cyc.size()] == v) return true;
        return false;
    };

    std::vector<int> state(faces.size(), 0); // 0 unvisited, 1 fixed
    std::deque<int> queue{0};
    state[0] = 1;
    while (!queue.empty()) {
        int f = queue.front();
        queue.pop_front();
        const auto cyc = faces[static_cast<std::size_t>(f)];
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            Vertex u = cyc[i], v = cyc[(i + 1) % cyc.size()];
            for (int g : edge_faces[make_edge(u, v)]) {
                if (g == f) continue;
                bool needs_reverse = traverses(g, u, v); // must traverse v -> u
                if (state[static_cast<std::size_t>(g)] == 0) {
                    if (needs_reverse)
                        std::reverse(faces[static_cast<std::size_t>(g)].begin(),
                                     faces[static_cast<std::size_t>(g)].end());
                    state[static_cast<std::size_t>(g)] = 1;
                    queue.push_back(g);
                } else if (needs_reverse) {
                    throw std::logic_error("face list is not orientable");
                }
            }
        }
    }
    if (std::find(state.begin(), state.end(), 0) != state.end())
        throw std::logic_error("face list is not connected");
    return faces;
}

std::vector<std::vector<Vertex>> rotation_from_faces(const std::vector<std::vector<Vertex>>& oriented,
                                                     int n) {
    // In a face ... u, v, w ... the rotation at v continues from u to w.
    std::vector<std::map<Vertex, Vertex>> successor(static_cast<std::size_t>(n));
    for (const auto& cyc : oriented) {
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            Vertex u = cyc[i];
            Vertex v = cyc[(i + 1) % cyc.size()];
            Vertex w = cyc[(i + 2) % cyc.size()];
            auto [it, inserted] = successor[static_cast<std::size_t>(v)].emplace(u, w);
            if (!inserted) throw std::logic_error("inconsistent corner in face list");
        }
    }
    std::vector<std::vector<Vertex>> rotation(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
        const auto& succ = successor[static_cast<std::size_t>(v)];
        if (succ.empty()) throw std::logic_error("isolated vertex in face list");
        Vertex start = succ.begin()->first;
        Vertex cur = start;
        do {
            rotation[static_cast<std::size_t>(v)].push_back(cur);
            cur = succ.at(cur);
        } while (cur != start);
        if (rotation[static_cast<std::size_t>(v)].size() != succ.size())
            throw std::logic_error("rotation at a vertex is not a single cycle");
    }
    return rotation;
}

std::vector<std::vector<Vertex>> trace_faces(const std::vector<std::vector<Vertex>>& rotation) {
    const int n = static_cast<int>(rotation.size());
    auto neighbor_index = [&](Vertex v, Vertex w) {
        const auto& nb = rotation[static_cast<std::size_t>(v)];
        for (std::size_t i = 0; i < nb.size(); ++i)
            if (nb[i] == w) return static_cast<int>(i);
        throw std::logic_error("rotation system is not symmetric");
    };
    std::vector<std::vector<char>> used(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v)
        used[static_cast<std::size_t>(v)].assign(rotation[static_cast<std::size_t>(v)].size(), 0);
    std::vector<std::vector<Vertex>> faces;
    for (Vertex u = 0; u < n; ++u) {
        for (std::size_t i = 0; i < rotation[static_cast<std::size_t>(u)].size(); ++i) {
            if (used[static_cast<std::size_t>(u)][i]) continue;
            std::vector<Vertex> face;
            Vertex cu = u;
            int ci = static_cast<int>(i);
            do {
                used[static_cast<std::size_t>(cu)][static_cast<std::size_t>(ci)] = 1;
                face.push_back(cu);
                Vertex cv = rotation[static_cast<std::size_t>(cu)][static_cast<std::size_t>(ci)];
                int j = neighbor_index(cv, cu);
                ci = (j + 1) % static_cast<int>(rotation[static_cast<std::size_t>(cv)].size());
                cu = cv;
            } while (!(cu == u && ci == static_cast<int>(i)));
            faces.push_back(std::move(face));
        }
    }
    return faces;
}

std::vector<std::vector<Vertex>> dual_rotation(const std::vector<std::vector<Vertex>>& rotation) {
    std::vector<std::vector<Vertex>> faces = trace_faces(rotation);
    std::map<std::pair<Vertex, Vertex>, int> face_of_arc; // directed edge -> face
    for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
        const auto& cyc = faces[static_cast<std::size_t>(f)];
        for (std::size_t i = 0; i < cyc.size(); ++i)
            face_of_arc[{cyc[i], cyc[(i + 1) % cyc.size()]}] = f;
    }
    std::vector<std::vector<Vertex>> dual(faces.size());
    for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
        const auto& cyc = faces[static_cast<std::size_t>(f)];
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            Vertex u = cyc[i], v = cyc[(i + 1) % cyc.size()];
            dual[static_cast<std::size_t>(f)].push_back(
                static_cast<Vertex>(face_of_arc.at({v, u})));
        }
    }
    return dual;
}

std::vector<std::vector<Vertex>> truncate_rotation(const std::vector<std::vector<Vertex>>& rotation) {
    const int n = static_cast<int>(rotation.size());
    std::vector<int> offset(static_cast<std::size_t>(n) + 1, 0);
    for (Vertex v = 0; v < n; ++v)
        offset[static_cast<std::size_t>(v) + 1] =
            offset[static_cast<std::size_t>(v)] + static_cast<int>(rotation[static_cast<std::size_t>(v)].size());
    auto flag_id = [&](Vertex v, int i) { return offset[static_cast<std::size_t>(v)] + i; };
    auto neighbor_index = [&](Vertex v, Vertex w) {
        const auto& nb = rotation[static_cast<std::size_t>(v)];
        for (std::size_t i = 0; i < nb.size(); ++i)
            if (nb[i] == w) return static_cast<int>(i);
        throw std::logic_error("rotation system is not symmetric");
    };
    // Each vertex-edge flag becomes a vertex adjacent to its edge partner and
    // to the two neighboring flags around the original vertex.
    std::vector<std::vector<Vertex>> out(static_cast<std::size_t>(offset.back()));
    for (Vertex v = 0; v < n; ++v) {
        const int d = static_cast<int>(rotation[static_cast<std::size_t>(v)].size());
        for (int i = 0; i < d; ++i) {
            Vertex w = rotation[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)];
            int j = neighbor_index(w, v);
            out[static_cast<std::size_t>(flag_id(v, i))] = {
                static_cast<Vertex>(flag_id(w, j)),
                static_cast<Vertex>(flag_id(v, (i + 1) % d)),
                static_cast<Vertex>(flag_id(v, (i - 1 + d) % d)),
            };
        }
    }
    return out;
}

namespace {

std::vector<std::vector<Vertex>> icosahedron_rotation() {
    // Vertices: 0 top, 1..5 upper ring, 6..10 lower ring, 11 bottom.
    std::vector<std::vector<Vertex>> faces;
    auto U = [](int i) { return static_cast<Vertex>(1 + (i % 5 + 5) % 5); };
    auto L = [](int i) { return static_cast<Vertex>(6 + (i % 5 + 5) % 5); };
    for (int i = 0; i < 5; ++i) {
        faces.push_back({0, U(i), U(i + 1)});
        faces.push_back({U(i), L(i), U(i + 1)});
        faces.push_back({U(i + 1), L(i), L(i + 1)});
        faces.push_back({L(i), 11, L(i + 1)});
    }
    return rotation_from_faces(orient_faces(std::move(faces), 12), 12);
}

std::vector<std::vector<Vertex>> c24_faces() {
    // Hexagonal barrel: two hexagonal caps and a belt of 12 pentagons.
    // Rings of six: 0..5 (top cycle), 6..11, 12..17, 18..23 (bottom cycle).
    std::vector<std::vector<Vertex>> faces;
    auto A = [](int i) { return static_cast<Vertex>((i % 6 + 6) % 6); };
    auto B = [](int i) { return static_cast<Vertex>(6 + (i % 6 + 6) % 6); };
    auto C = [](int i) { return static_cast<Vertex>(12 + (i % 6 + 6) % 6); };
    auto D = [](int i) { return static_cast<Vertex>(18 + (i % 6 + 6) % 6); };
    faces.push_back({A(0), A(1), A(2), A(3), A(4), A(5)});
    for (int i = 0; i < 6; ++i) faces.push_back({A(i), A(i + 1), B(i + 1), C(i), B(i)});
    for (int i = 0; i < 6; ++i) faces.push_back({D(i), D(i + 1), C(i + 1), B(i + 1), C(i)});
    faces.push_back({D(0), D(1), D(2), D(3), D(4), D(5)});
    return faces;
}

} // namespace

std::vector<std::vector<Vertex>> fullerene_c20_rotation() {
    return dual_rotation(icosahedron_rotation());
}

std::vector<std::vector<Vertex>> fullerene_c24_rotation() {
    return rotation_from_faces(orient_faces(c24_faces(), 24), 24);
}

std::vector<std::vector<Vertex>> fullerene_c60_rotation() {
    return truncate_rotation(icosahedron_rotation());
}

namespace {

int parse_positive_int(const std::string& text, const std::string& preset) {
    try {
        std::size_t used = 0;
        int value = std::stoi(text, &used);
        if (used != text.size() || value <= 0) throw std::invalid_argument("range");
        return value;
    } catch (const std::exception&) {
        throw Error(ErrorCode::UnknownPreset, "bad argument '" + text + "' in preset '" + preset + "'");
    }
}

int parse_int(const std::string& text, const std::string& preset) {
    try {
        std::size_t used = 0;
        int value = std::stoi(text, &used);
        if (used != text.size()) throw std::invalid_argument("trailing");
        return value;
    } catch (const std::exception&) {
        throw Error(ErrorCode::UnknownPreset, "bad argument '" + text + "' in preset '" + preset + "'");
    }
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos == std::string::npos ? pos : pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return parts;
}

} // namespace

PresetInput make_preset(const std::string& name) {
    PresetInput input;
    std::string head = name, args;
    if (auto pos = name.find(':'); pos != std::string::npos) {
        head = name.substr(0, pos);
        args = name.substr(pos + 1);
    }
    if (head == "linear" || head == "zigzag") {
        int h = parse_positive_int(args, name);
        input.family = Family::benzenoid;
        input.hexagons = head == "linear" ? benzenoid_linear(h) : benzenoid_zigzag(h);
        return input;
    }
    if (name == "pyrene") {
        input.family = Family::benzenoid;
        input.hexagons = benzenoid_pyrene();
        return input;
    }
    if (name == "coronene") {
        input.family = Family::benzenoid;
        input.hexagons = benzenoid_coronene();
        return input;
    }
    if (head == "tube") {
        auto parts = split(args, ',');
        if (parts.size() != 3)
            throw Error(ErrorCode::UnknownPreset, "tube preset needs n,m,rings");
        input.family = Family::tubulene;
        input.tube.n = parse_int(parts[0], name);
        input.tube.m = parse_int(parts[1], name);
        input.tube.rings = parse_int(parts[2], name);
        if (std::abs(input.tube.n) + std::abs(input.tube.m) <= 1 ||
            input.tube.n * input.tube.m == -1)
            throw Error(ErrorCode::InvalidChiralVector,
                        "chiral vector (" + parts[0] + "," + parts[1] + ") violates |n|+|m|>1, nm != -1");
        if (input.tube.rings < 1)
            throw Error(ErrorCode::UnknownPreset, "tube preset needs rings >= 1");
        return input;
    }
    if (name == "c20" || name == "c24" || name == "c60") {
        input.family = Family::fullerene;
        input.rotation = name == "c20"   ? fullerene_c20_rotation()
                         : name == "c24" ? fullerene_c24_rotation()
                                         : fullerene_c60_rotation();
        return input;
    }
    throw Error(ErrorCode::UnknownPreset, "no preset named '" + name + "'");
}

MolecularGraph build_preset(const std::string& name) {
    PresetInput input = make_preset(name);
    switch (input.family) {
        case Family::benzenoid: return build_benzenoid(input.hexagons);
        case Family::tubulene: return build_tubulene(input.tube);
        case Family::fullerene: return load_fullerene(input.rotation);
    }
    throw Error(ErrorCode::UnknownPreset, "no preset named '" + name + "'");
}

} // namespace clarcube
