#include "oracles.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

namespace clarcube::oracle {

namespace {

void matchings_rec(const std::vector<Edge>& edges, std::size_t next, std::vector<Vertex>& partner,
                   int uncovered, std::vector<std::vector<Vertex>>& out) {
    if (uncovered == 0) {
        out.push_back(partner);
        return;
    }
    if (next >= edges.size()) return;
    // Include/skip recursion over the edge list in index order.
    auto [u, v] = edges[next];
    if (partner[static_cast<std::size_t>(u)] < 0 && partner[static_cast<std::size_t>(v)] < 0) {
        partner[static_cast<std::size_t>(u)] = v;
        partner[static_cast<std::size_t>(v)] = u;
        matchings_rec(edges, next + 1, partner, uncovered - 2, out);
        partner[static_cast<std::size_t>(u)] = -1;
        partner[static_cast<std::size_t>(v)] = -1;
    }
    matchings_rec(edges, next + 1, partner, uncovered, out);
}

} // namespace

std::vector<std::vector<Vertex>> perfect_matchings(const SimpleGraph& g) {
    std::vector<Edge> edges = g.edges();
    std::vector<Vertex> partner(static_cast<std::size_t>(g.n()), -1);
    std::vector<std::vector<Vertex>> out;
    if (g.n() % 2 == 0) matchings_rec(edges, 0, partner, g.n(), out);
    std::sort(out.begin(), out.end());
    return out;
}

long long count_perfect_matchings(const SimpleGraph& g) {
    const int n = g.n();
    if (n > 64) throw std::invalid_argument("count oracle handles at most 64 vertices");
    if (n % 2 != 0) return 0;
    std::unordered_map<std::uint64_t, long long> memo;
    std::uint64_t full = n == 64 ? ~0ULL : ((1ULL << n) - 1);

    auto rec = [&](auto&& self, std::uint64_t remaining) -> long long {
        if (remaining == 0) return 1;
        auto it = memo.find(remaining);
        if (it != memo.end()) return it->second;
        int v = __builtin_ctzll(remaining);
        long long total = 0;
        for (Vertex w : g.neighbors(v))
            if (remaining & (1ULL << w))
                total += self(self, remaining & ~((1ULL << v) | (1ULL << w)));
        memo.emplace(remaining, total);
        return total;
    };
    return rec(rec, full);
}

std::map<std::pair<int, int>, std::set<std::vector<Edge>>> spanning_covers(const MolecularGraph& g) {
    std::vector<Edge> edges = g.graph.edges();
    const std::size_t m = edges.size();
    if (m > 22) throw std::invalid_argument("spanning-cover oracle handles at most 22 edges");
    const int n = g.n();

    // Admissible cycle components, recomputed here from the face list alone.
    std::set<std::vector<Edge>> hexagon_edge_sets;
    for (const Face& f : g.faces)
        if (f.is_hexagon()) hexagon_edge_sets.insert(f.edges());
    std::set<std::vector<Edge>> pair_edge_sets;
    {
        std::vector<const Face*> hexes;
        for (const Face& f : g.faces)
            if (f.is_hexagon()) hexes.push_back(&f);
        for (std::size_t a = 0; a < hexes.size(); ++a) {
            for (std::size_t b = a + 1; b < hexes.size(); ++b) {
                std::vector<Edge> ea = hexes[a]->edges(), eb = hexes[b]->edges();
                std::vector<Edge> shared;
                std::set_intersection(ea.begin(), ea.end(), eb.begin(), eb.end(),
                                      std::back_inserter(shared));
                std::vector<Vertex> va = hexes[a]->sorted_vertices(), vb = hexes[b]->sorted_vertices();
                std::vector<Vertex> shared_v;
                std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(),
                                      std::back_inserter(shared_v));
                if (shared.size() != 1 || shared_v.size() != 2) continue;
                std::vector<Edge> cycle;
                std::set_union(ea.begin(), ea.end(), eb.begin(), eb.end(), std::back_inserter(cycle));
                cycle.erase(std::remove(cycle.begin(), cycle.end(), shared[0]), cycle.end());
                pair_edge_sets.insert(cycle);
            }
        }
    }

    std::map<std::pair<int, int>, std::set<std::vector<Edge>>> result;
    std::vector<int> degree(static_cast<std::size_t>(n));
    std::vector<int> component(static_cast<std::size_t>(n));

    for (std::uint64_t mask = 0; mask < (1ULL << m); ++mask) {
        std::fill(degree.begin(), degree.end(), 0);
        bool feasible = true;
        for (std::size_t e = 0; e < m && feasible; ++e) {
            if (!(mask & (1ULL << e))) continue;
            if (++degree[static_cast<std::size_t>(edges[e].first)] > 2) feasible = false;
            if (++degree[static_cast<std::size_t>(edges[e].second)] > 2) feasible = false;
        }
        if (!feasible) continue;
        if (std::find(degree.begin(), degree.end(), 0) != degree.end()) continue; // not spanning

        // Label components over selected edges.
        std::fill(component.begin(), component.end(), -1);
        int comp_count = 0;
        for (Vertex v = 0; v < n; ++v) {
            if (component[static_cast<std::size_t>(v)] >= 0) continue;
            int c = comp_count++;
            std::vector<Vertex> stack{v};
            component[static_cast<std::size_t>(v)] = c;
            while (!stack.empty()) {
                Vertex x = stack.back();
                stack.pop_back();
                for (std::size_t e = 0; e < m; ++e) {
                    if (!(mask & (1ULL << e))) continue;
                    Vertex other;
                    if (edges[e].first == x)
                        other = edges[e].second;
                    else if (edges[e].second == x)
                        other = edges[e].first;
                    else
                        continue;
                    if (component[static_cast<std::size_t>(other)] < 0) {
                        component[static_cast<std::size_t>(other)] = c;
                        stack.push_back(other);
                    }
                }
            }
        }

        std::vector<std::vector<Edge>> comp_edges(static_cast<std::size_t>(comp_count));
        for (std::size_t e = 0; e < m; ++e)
            if (mask & (1ULL << e))
                comp_edges[static_cast<std::size_t>(component[static_cast<std::size_t>(edges[e].first)])]
                    .push_back(edges[e]);

        int k = 0, l = 0;
        bool valid = true;
        for (auto& ce : comp_edges) {
            std::sort(ce.begin(), ce.end());
            if (ce.size() == 1) continue; // K2
            if (ce.size() == 6 && hexagon_edge_sets.count(ce)) {
                ++k;
            } else if (ce.size() == 10 && pair_edge_sets.count(ce)) {
                ++l;
            } else {
                valid = false;
                break;
            }
        }
        if (!valid) continue;
        std::vector<Edge> all;
        for (std::size_t e = 0; e < m; ++e)
            if (mask & (1ULL << e)) all.push_back(edges[e]);
        result[{k, l}].insert(all);
    }
    return result;
}

std::vector<std::tuple<int, int, int>> resonance_edges(const MolecularGraph& g,
                                                       const std::vector<PerfectMatching>& ms) {
    std::vector<std::vector<Edge>> hex_edges;
    std::vector<int> hex_faces;
    for (int f = 0; f < static_cast<int>(g.faces.size()); ++f) {
        if (g.faces[static_cast<std::size_t>(f)].is_hexagon()) {
            hex_faces.push_back(f);
            hex_edges.push_back(g.faces[static_cast<std::size_t>(f)].edges());
        }
    }
    std::vector<std::tuple<int, int, int>> out;
    for (std::size_t i = 0; i < ms.size(); ++i) {
        std::vector<Edge> ei = ms[i].edges();
        for (std::size_t j = i + 1; j < ms.size(); ++j) {
            std::vector<Edge> ej = ms[j].edges();
            std::vector<Edge> diff;
            std::set_symmetric_difference(ei.begin(), ei.end(), ej.begin(), ej.end(),
                                          std::back_inserter(diff));
            for (std::size_t h = 0; h < hex_edges.size(); ++h) {
                if (diff == hex_edges[h]) {
                    out.emplace_back(static_cast<int>(i), static_cast<int>(j), hex_faces[h]);
                    break;
                }
            }
        }
    }
    return out;
}

SimpleGraph qkl_reference(int k, int l) {
    int total = 1;
    for (int i = 0; i < k; ++i) total *= 2;
    for (int i = 0; i < l; ++i) total *= 3;
    auto digits = [&](int code) {
        std::vector<int> d;
        for (int i = 0; i < k; ++i) {
            d.push_back(code % 2);
            code /= 2;
        }
        for (int i = 0; i < l; ++i) {
            d.push_back(code % 3);
            code /= 3;
        }
        return d;
    };
    SimpleGraph g(total);
    for (int a = 0; a < total; ++a) {
        for (int b = a + 1; b < total; ++b) {
            auto da = digits(a), db = digits(b);
            int diffs = 0;
            bool ok = true;
            for (std::size_t i = 0; i < da.size(); ++i) {
                if (da[i] != db[i]) {
                    ++diffs;
                    if (std::abs(da[i] - db[i]) != 1) ok = false;
                }
            }
            if (ok && diffs == 1) g.add_edge(a, b);
        }
    }
    g.finalize();
    return g;
}

namespace {

bool isomorphic_to(const SimpleGraph& pattern, const SimpleGraph& host,
                   const std::vector<Vertex>& host_vertices) {
    const int n = pattern.n();
    std::vector<Vertex> map(static_cast<std::size_t>(n), -1);
    std::vector<char> used(host_vertices.size(), 0);

    auto rec = [&](auto&& self, int p) -> bool {
        if (p == n) return true;
        for (std::size_t h = 0; h < host_vertices.size(); ++h) {
            if (used[h]) continue;
            Vertex hv = host_vertices[h];
            bool ok = true;
            for (int q = 0; q < p && ok; ++q) {
                bool want = pattern.has_edge(p, q);
                bool have = host.has_edge(hv, map[static_cast<std::size_t>(q)]);
                if (want != have) ok = false;
            }
            if (!ok) continue;
            map[static_cast<std::size_t>(p)] = hv;
            used[h] = 1;
            if (self(self, p + 1)) return true;
            used[h] = 0;
            map[static_cast<std::size_t>(p)] = -1;
        }
        return false;
    };
    return rec(rec, 0);
}

bool subset_convex(const SimpleGraph& h, const std::vector<std::vector<std::int32_t>>& dist,
                   const std::vector<Vertex>& s) {
    std::vector<char> inside(static_cast<std::size_t>(h.n()), 0);
    for (Vertex v : s) inside[static_cast<std::size_t>(v)] = 1;
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            std::int32_t d = dist[static_cast<std::size_t>(s[i])][static_cast<std::size_t>(s[j])];
            if (d < 0) continue;
            for (Vertex w = 0; w < h.n(); ++w) {
                if (inside[static_cast<std::size_t>(w)]) continue;
                std::int32_t a = dist[static_cast<std::size_t>(s[i])][static_cast<std::size_t>(w)];
                std::int32_t b = dist[static_cast<std::size_t>(w)][static_cast<std::size_t>(s[j])];
                if (a >= 0 && b >= 0 && a + b == d) return false;
            }
        }
    }
    return true;
}

} // namespace

std::vector<std::vector<Vertex>> qkl_subsets(const SimpleGraph& h, int k, int l, bool convex_only) {
    SimpleGraph pattern = qkl_reference(k, l);
    const int size = pattern.n();
    const int n = h.n();
    std::vector<std::vector<Vertex>> out;
    if (size > n) return out;

    std::vector<std::vector<std::int32_t>> dist;
    if (convex_only) {
        dist.reserve(static_cast<std::size_t>(n));
        for (Vertex v = 0; v < n; ++v) dist.push_back(h.bfs_distances(v));
    }

    std::vector<Vertex> subset(static_cast<std::size_t>(size));
    auto rec = [&](auto&& self, int from, int chosen) -> void {
        if (chosen == size) {
            if (!isomorphic_to(pattern, h, subset)) return;
            if (convex_only && !subset_convex(h, dist, subset)) return;
            out.push_back(subset);
            return;
        }
        for (Vertex v = from; v <= n - (size - chosen); ++v) {
            subset[static_cast<std::size_t>(chosen)] = v;
            self(self, v + 1, chosen + 1);
        }
    };
    rec(rec, 0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace clarcube::oracle
