#include "clarcube/clar_cover.hpp"

#include <algorithm>
#include <functional>

#include "clarcube/error.hpp"

namespace clarcube {

namespace {

struct CycleSystemContext {
    const MolecularGraph& g;
    std::vector<int> hexes;                  // hexagonal face indices
    std::vector<FusedPair> pairs;            // fused hexagon pairs
    std::vector<std::vector<Vertex>> hex_vertices;
    std::vector<std::vector<Vertex>> pair_vertices;

    explicit CycleSystemContext(const MolecularGraph& graph) : g(graph) {
        hexes = graph.hexagon_faces();
        pairs = fused_hexagon_pairs(graph);
        hex_vertices.reserve(hexes.size());
        for (int h : hexes)
            hex_vertices.push_back(graph.faces[static_cast<std::size_t>(h)].sorted_vertices());
        pair_vertices.reserve(pairs.size());
        for (const FusedPair& p : pairs) pair_vertices.push_back(fused_pair_vertices(graph, p));
    }
};

bool all_free(const std::vector<Vertex>& vs, const std::vector<char>& free_vertex) {
    for (Vertex v : vs)
        if (!free_vertex[static_cast<std::size_t>(v)]) return false;
    return true;
}

void mark(const std::vector<Vertex>& vs, std::vector<char>& free_vertex, char value) {
    for (Vertex v : vs) free_vertex[static_cast<std::size_t>(v)] = value;
}

// Enumerates disjoint selections of k hexagons and l fused pairs in
// lexicographic order, invoking fn with the free-vertex mask of the rest.
void for_each_cycle_system(const CycleSystemContext& ctx, int k, int l,
                           const std::function<void(const std::vector<int>&, const std::vector<int>&,
                                                    const std::vector<char>&)>& fn) {
    const int n = ctx.g.n();
    std::vector<char> free_vertex(static_cast<std::size_t>(n), 1);
    std::vector<int> chosen_hexes, chosen_pairs;

    std::function<void(int)> choose_pairs = [&](int start) {
        if (static_cast<int>(chosen_pairs.size()) == l) {
            fn(chosen_hexes, chosen_pairs, free_vertex);
            return;
        }
        for (int i = start; i < static_cast<int>(ctx.pairs.size()); ++i) {
            if (!all_free(ctx.pair_vertices[static_cast<std::size_t>(i)], free_vertex)) continue;
            mark(ctx.pair_vertices[static_cast<std::size_t>(i)], free_vertex, 0);
            chosen_pairs.push_back(i);
            choose_pairs(i + 1);
            chosen_pairs.pop_back();
            mark(ctx.pair_vertices[static_cast<std::size_t>(i)], free_vertex, 1);
        }
    };
    std::function<void(int)> choose_hexes = [&](int start) {
        if (static_cast<int>(chosen_hexes.size()) == k) {
            choose_pairs(0);
            return;
        }
        for (int i = start; i < static_cast<int>(ctx.hexes.size()); ++i) {
            if (!all_free(ctx.hex_vertices[static_cast<std::size_t>(i)], free_vertex)) continue;
            mark(ctx.hex_vertices[static_cast<std::size_t>(i)], free_vertex, 0);
            chosen_hexes.push_back(i);
            choose_hexes(i + 1);
            chosen_hexes.pop_back();
            mark(ctx.hex_vertices[static_cast<std::size_t>(i)], free_vertex, 1);
        }
    };
    choose_hexes(0);
}

} // namespace

std::vector<GeneralizedClarCover> enumerate_generalized_clar_covers(const MolecularGraph& g,
                                                                    int k, int l) {
    if (k < 0 || l < 0) return {};
    CycleSystemContext ctx(g);
    std::vector<GeneralizedClarCover> out;
    if (6LL * k + 10LL * l > g.n()) return out;
    for_each_cycle_system(ctx, k, l,
                          [&](const std::vector<int>& hex_sel, const std::vector<int>& pair_sel,
                              const std::vector<char>& free_vertex) {
                              auto rest = enumerate_perfect_matchings_masked(g.graph, free_vertex);
                              for (const PerfectMatching& m : rest) {
                                  GeneralizedClarCover cover;
                                  for (int i : hex_sel) cover.hexagons.push_back(ctx.hexes[static_cast<std::size_t>(i)]);
                                  cover.pairs = pair_sel;
                                  cover.free_edges = m.edges();
                                  out.push_back(std::move(cover));
                              }
                          });
    return out;
}

BivariatePoly gzz_polynomial(const MolecularGraph& g) {
    CycleSystemContext ctx(g);
    BivariatePoly poly;
    const int max_k = static_cast<int>(ctx.hexes.size());
    const int max_l = static_cast<int>(ctx.pairs.size());
    for (int k = 0; k <= max_k; ++k) {
        for (int l = 0; l <= max_l; ++l) {
            if (6LL * k + 10LL * l > g.n()) break;
            long long count = 0;
            for_each_cycle_system(ctx, k, l,
                                  [&](const std::vector<int>&, const std::vector<int>&,
                                      const std::vector<char>& free_vertex) {
                                      count += count_perfect_matchings_masked(g.graph, free_vertex);
                                  });
            poly.add_term(k, l, count);
        }
    }
    return poly;
}

BivariatePoly zz_polynomial(const MolecularGraph& g) {
    BivariatePoly full = gzz_polynomial(g);
    BivariatePoly slice;
    for (const auto& [exps, coeff] : full.terms())
        if (exps.second == 0) slice.add_term(exps.first, 0, coeff);
    return slice;
}

bool cover_is_valid(const MolecularGraph& g, const GeneralizedClarCover& c, int k, int l) {
    if (static_cast<int>(c.hexagons.size()) != k || static_cast<int>(c.pairs.size()) != l)
        return false;
    std::vector<int> covered(static_cast<std::size_t>(g.n()), 0);
    auto touch = [&](const std::vector<Vertex>& vs) {
        for (Vertex v : vs) ++covered[static_cast<std::size_t>(v)];
    };
    std::vector<FusedPair> pairs = fused_hexagon_pairs(g);
    for (int h : c.hexagons) {
        if (h < 0 || h >= static_cast<int>(g.faces.size()) ||
            !g.faces[static_cast<std::size_t>(h)].is_hexagon())
            return false;
        touch(g.faces[static_cast<std::size_t>(h)].sorted_vertices());
    }
    for (int p : c.pairs) {
        if (p < 0 || p >= static_cast<int>(pairs.size())) return false;
        touch(fused_pair_vertices(g, pairs[static_cast<std::size_t>(p)]));
    }
    for (const Edge& e : c.free_edges) {
        if (!g.graph.has_edge(e.first, e.second)) return false;
        ++covered[static_cast<std::size_t>(e.first)];
        ++covered[static_cast<std::size_t>(e.second)];
    }
    // Spanning partition: every vertex in exactly one component.
    return std::all_of(covered.begin(), covered.end(), [](int c2) { return c2 == 1; });
}

} // namespace clarcube
