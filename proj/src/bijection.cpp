#include "clarcube/bijection.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "clarcube/cube_search.hpp"
#include "clarcube/error.hpp"
#include "clarcube/io.hpp"

namespace clarcube {

std::vector<Vertex> QklEmbedding::vertex_set() const {
    std::vector<Vertex> out(matching_for_code.begin(), matching_for_code.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

// The two alternating edge sets of a cycle given as a vertex sequence.
std::pair<std::vector<Edge>, std::vector<Edge>> alternating_matchings(const std::vector<Vertex>& cycle) {
    std::vector<Edge> even, odd;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        Edge e = make_edge(cycle[i], cycle[(i + 1) % cycle.size()]);
        (i % 2 == 0 ? even : odd).push_back(e);
    }
    std::sort(even.begin(), even.end());
    std::sort(odd.begin(), odd.end());
    return {even, odd};
}

std::vector<Edge> symmetric_difference(const std::vector<Edge>& a, const std::vector<Edge>& b) {
    std::vector<Edge> out;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// Orders the perimeter of a fused pair as a closed vertex walk.
std::vector<Vertex> cycle_order(const std::vector<Edge>& cycle_edges) {
    std::map<Vertex, std::vector<Vertex>> adj;
    for (const Edge& e : cycle_edges) {
        adj[e.first].push_back(e.second);
        adj[e.second].push_back(e.first);
    }
    std::vector<Vertex> order;
    Vertex start = adj.begin()->first;
    Vertex prev = -1, cur = start;
    do {
        order.push_back(cur);
        const auto& nb = adj.at(cur);
        Vertex nxt = (nb[0] == prev) ? nb[1] : nb[0];
        prev = cur;
        cur = nxt;
    } while (cur != start);
    return order;
}

} // namespace

std::vector<std::vector<Edge>> c6_possibilities(const MolecularGraph& g, int face_index) {
    const Face& f = g.faces.at(static_cast<std::size_t>(face_index));
    if (!f.is_hexagon())
        throw Error(ErrorCode::NotAHexagon, "face " + std::to_string(face_index) + " is a pentagon");
    // Boundaries are stored starting at their smallest vertex, so the "even"
    // alternation contains that vertex's edge toward boundary[1].
    auto [even, odd] = alternating_matchings(f.boundary);
    // Possibility 0 pairs the hexagon's smallest vertex with its smaller
    // neighbor on the cycle.
    if (f.boundary[5] < f.boundary[1]) std::swap(even, odd);
    return {even, odd};
}

std::vector<std::vector<Edge>> c10_possibilities(const MolecularGraph& g, const FusedPair& pair) {
    // Possibility 1: the shared edge plus the forced matchings of the two
    // 4-vertex paths left on the perimeter.
    std::vector<Edge> perimeter = fused_pair_cycle_edges(g, pair);
    std::vector<Vertex> order = cycle_order(perimeter);
    Vertex su = pair.shared_edge.first, sv = pair.shared_edge.second;
    std::vector<Edge> middle{pair.shared_edge};
    {
        // Walk the 10-cycle; the shared-edge endpoints split it into two
        // 4-vertex paths, each with a unique perfect matching.
        std::size_t pos_u = static_cast<std::size_t>(
            std::find(order.begin(), order.end(), su) - order.begin());
        std::vector<Vertex> rotated;
        for (std::size_t i = 0; i < order.size(); ++i)
            rotated.push_back(order[(pos_u + i) % order.size()]);
        // rotated[0] = su; sv sits at position 5 (the perimeter distance
        // between the shared edge's endpoints is 5 on the 10-cycle).
        if (rotated[5] != sv) throw std::logic_error("fused pair perimeter is not a 10-cycle");
        for (std::size_t i : {1u, 3u, 6u, 8u})
            middle.push_back(make_edge(rotated[i], rotated[i + 1]));
        std::sort(middle.begin(), middle.end());
    }
    auto [alt_a, alt_b] = alternating_matchings(order);

    // Possibility 0 is the alternation reachable from possibility 1 by
    // flipping the lower-indexed hexagon of the pair.
    const Face& low = g.faces.at(static_cast<std::size_t>(pair.face_a));
    std::vector<Edge> low_edges = low.edges();
    std::vector<Edge> flip_low = symmetric_difference(middle, low_edges);
    if (flip_low == alt_a) return {alt_a, middle, alt_b};
    if (flip_low == alt_b) return {alt_b, middle, alt_a};
    throw std::logic_error("possibility-1 flip did not produce an alternating matching");
}

QklEmbedding clar_cover_to_subgraph(const MolecularGraph& g, const ResonanceGraph& r,
                                    const GeneralizedClarCover& c) {
    const int k = static_cast<int>(c.hexagons.size());
    const int l = static_cast<int>(c.pairs.size());
    std::vector<FusedPair> pairs = fused_hexagon_pairs(g);

    std::vector<std::vector<std::vector<Edge>>> choices; // component -> possibility -> edges
    std::vector<int> sorted_hexes = c.hexagons;
    std::sort(sorted_hexes.begin(), sorted_hexes.end());
    std::vector<int> sorted_pairs = c.pairs;
    std::sort(sorted_pairs.begin(), sorted_pairs.end());
    for (int h : sorted_hexes) choices.push_back(c6_possibilities(g, h));
    for (int p : sorted_pairs)
        choices.push_back(c10_possibilities(g, pairs.at(static_cast<std::size_t>(p))));

    QklEmbedding emb;
    emb.k = k;
    emb.l = l;
    const long long total = QklShape{k, l}.vertex_total();
    emb.matching_for_code.assign(static_cast<std::size_t>(total), -1);

    for (long long code = 0; code < total; ++code) {
        PerfectMatching m;
        m.partner.assign(static_cast<std::size_t>(g.n()), -1);
        auto place = [&](const Edge& e) {
            m.partner[static_cast<std::size_t>(e.first)] = e.second;
            m.partner[static_cast<std::size_t>(e.second)] = e.first;
        };
        long long rest = code;
        for (int i = 0; i < k + l; ++i) {
            int base = i < k ? 2 : 3;
            int digit = static_cast<int>(rest % base);
            rest /= base;
            for (const Edge& e : choices[static_cast<std::size_t>(i)][static_cast<std::size_t>(digit)])
                place(e);
        }
        for (const Edge& e : c.free_edges) place(e);
        auto id = r.matching_id(m);
        if (!id)
            throw Error(ErrorCode::InvalidCover,
                        "component choices do not assemble into a known perfect matching");
        emb.matching_for_code[static_cast<std::size_t>(code)] = *id;
    }
    return emb;
}

namespace {

bool codes_adjacent(long long a, long long b, int k, int l) {
    int diffs = 0;
    for (int i = 0; i < k + l; ++i) {
        int base = i < k ? 2 : 3;
        int da = static_cast<int>(a % base), db = static_cast<int>(b % base);
        a /= base;
        b /= base;
        if (da != db) {
            if (std::abs(da - db) != 1) return false;
            ++diffs;
        }
    }
    return diffs == 1;
}

std::string set_to_string(const std::vector<Vertex>& s) {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out << ',';
        out << s[i];
    }
    out << '}';
    return out.str();
}

} // namespace

BijectionReport verify_bijection(const MolecularGraph& g, const ResonanceGraph& r, int threads) {
    BijectionReport report;
    const int hex_count = static_cast<int>(g.hexagon_faces().size());
    const int pair_count = static_cast<int>(fused_hexagon_pairs(g).size());
    const int res_maxdeg = r.graph().max_degree();

    // A matching can be a sextet on at most every hexagon, so the resonance
    // degree (hence k+l of any convex Q_{k,l}) is bounded by hex_count; this
    // keeps the sweep sound without assuming the theorem being verified.
    for (int k = 0; k <= hex_count; ++k) {
        for (int l = 0;; ++l) {
            bool gz_range = l <= pair_count && 6LL * k + 10LL * l <= g.n();
            bool alpha_range = QklShape{k, l}.vertex_total() <= r.n() &&
                               (k + l == 0 || k + l <= res_maxdeg);
            if (!gz_range && !alpha_range) break;
            std::vector<GeneralizedClarCover> covers =
                gz_range ? enumerate_generalized_clar_covers(g, k, l)
                         : std::vector<GeneralizedClarCover>{};
            std::vector<std::vector<Vertex>> subgraphs =
                alpha_range ? find_convex_qkl(r.graph(), k, l, threads)
                            : std::vector<std::vector<Vertex>>{};
            if (covers.empty() && subgraphs.empty()) continue;

            BijectionEntry entry;
            entry.k = k;
            entry.l = l;
            entry.cover_count = static_cast<long long>(covers.size());
            entry.subgraph_count = static_cast<long long>(subgraphs.size());

            const long long expected_size = QklShape{k, l}.vertex_total();
            std::set<std::vector<Vertex>> image_sets;
            for (const GeneralizedClarCover& c : covers) {
                QklEmbedding emb = clar_cover_to_subgraph(g, r, c);
                std::vector<Vertex> verts = emb.vertex_set();
                if (static_cast<long long>(verts.size()) != expected_size) {
                    entry.images_valid = false;
                    entry.counterexample = "image of cover " + cover_to_json(c) + " has " +
                                           std::to_string(verts.size()) + " matchings, expected " +
                                           std::to_string(expected_size);
                    entry.counterexample_set = verts;
                    break;
                }
                // Coordinate labeling must be an isomorphism onto the induced
                // subgraph: codes at Hamming-style distance one, and only
                // those, map to resonance edges.
                bool iso = true;
                for (long long a = 0; a < expected_size && iso; ++a)
                    for (long long b = a + 1; b < expected_size && iso; ++b) {
                        bool want = codes_adjacent(a, b, k, l);
                        bool have = r.graph().has_edge(emb.matching_for_code[static_cast<std::size_t>(a)],
                                                       emb.matching_for_code[static_cast<std::size_t>(b)]);
                        if (want != have) iso = false;
                    }
                if (!iso) {
                    entry.images_valid = false;
                    entry.counterexample = "labels of cover " + cover_to_json(c) +
                                           " are not an isomorphism onto the induced subgraph " +
                                           set_to_string(verts);
                    entry.counterexample_set = verts;
                    break;
                }
                if (!r.is_convex(verts)) {
                    entry.images_valid = false;
                    entry.counterexample = "image " + set_to_string(verts) + " of cover " +
                                           cover_to_json(c) + " is not convex";
                    entry.counterexample_set = verts;
                    break;
                }
                if (!image_sets.insert(verts).second) {
                    entry.injective = false;
                    entry.counterexample = "cover " + cover_to_json(c) +
                                           " repeats the image " + set_to_string(verts);
                    entry.counterexample_set = verts;
                    break;
                }
            }
            if (entry.images_valid && entry.injective) {
                std::set<std::vector<Vertex>> enumerated(subgraphs.begin(), subgraphs.end());
                if (image_sets != enumerated) {
                    entry.sets_match = false;
                    std::vector<std::vector<Vertex>> missing, extra;
                    std::set_difference(enumerated.begin(), enumerated.end(), image_sets.begin(),
                                        image_sets.end(), std::back_inserter(missing));
                    std::set_difference(image_sets.begin(), image_sets.end(), enumerated.begin(),
                                        enumerated.end(), std::back_inserter(extra));
                    std::ostringstream msg;
                    if (!missing.empty()) {
                        msg << "convex subgraph " << set_to_string(missing.front())
                            << " is not a cover image";
                        entry.counterexample_set = missing.front();
                    }
                    if (!extra.empty()) {
                        if (!missing.empty()) msg << "; ";
                        msg << "cover image " << set_to_string(extra.front())
                            << " was not enumerated as a convex subgraph";
                        if (entry.counterexample_set.empty()) entry.counterexample_set = extra.front();
                    }
                    entry.counterexample = msg.str();
                }
            }
            report.entries.push_back(std::move(entry));
        }
    }
    return report;
}

bool BijectionReport::passed() const {
    return std::all_of(entries.begin(), entries.end(),
                       [](const BijectionEntry& e) { return e.passed(); });
}

std::string BijectionReport::first_failure() const {
    for (const BijectionEntry& e : entries)
        if (!e.passed())
            return "(k=" + std::to_string(e.k) + ",l=" + std::to_string(e.l) + ") " + e.counterexample;
    return "";
}

FourCycleReport verify_four_cycle_lemma(const MolecularGraph& g, const ResonanceGraph& r) {
    FourCycleReport report;
    const SimpleGraph& h = r.graph();
    auto disjoint_hexagons = [&](int ha, int hb) {
        std::vector<Vertex> va = g.faces.at(static_cast<std::size_t>(ha)).sorted_vertices();
        std::vector<Vertex> vb = g.faces.at(static_cast<std::size_t>(hb)).sorted_vertices();
        std::vector<Vertex> common;
        std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(common));
        return common.empty();
    };
    // Each 4-cycle u-v-x-w is enumerated once: u is the smallest vertex and
    // v < w are its two neighbors on the cycle.
    for (Vertex u = 0; u < h.n() && report.passed; ++u) {
        const auto& nbrs = h.neighbors(u);
        for (std::size_t i = 0; i < nbrs.size() && report.passed; ++i) {
            for (std::size_t j = i + 1; j < nbrs.size() && report.passed; ++j) {
                Vertex v = nbrs[i], w = nbrs[j];
                if (v <= u || w <= u) continue;
                for (Vertex x : h.neighbors(v)) {
                    if (x <= u || x == w || !h.has_edge(w, x)) continue;
                    ++report.cycles_checked;
                    int h_uv = r.label(u, v);
                    int h_uw = r.label(u, w);
                    int h_wx = r.label(w, x);
                    int h_vx = r.label(v, x);
                    if (!disjoint_hexagons(h_uv, h_uw) || h_uv != h_wx || h_uw != h_vx) {
                        report.passed = false;
                        report.counterexample =
                            "4-cycle " + std::to_string(u) + "-" + std::to_string(v) + "-" +
                            std::to_string(x) + "-" + std::to_string(w) + " labels (" +
                            std::to_string(h_uv) + "," + std::to_string(h_uw) + "," +
                            std::to_string(h_wx) + "," + std::to_string(h_vx) + ")";
                        break;
                    }
                }
            }
        }
    }
    return report;
}

} // namespace clarcube
