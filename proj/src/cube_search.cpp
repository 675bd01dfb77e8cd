#include "clarcube/cube_search.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>

namespace clarcube {

long long QklShape::vertex_total() const {
    long long total = 1;
    for (int i = 0; i < k; ++i) total *= 2;
    for (int i = 0; i < l; ++i) total *= 3;
    return total;
}

namespace {

// Static description of the Q_{k,l} template: digit strings addressed by a
// mixed-radix code, processed in increasing digit-sum order so that every
// code sees its reduced parents first.
struct QklTemplate {
    int k, l, dim;
    int total;
    std::vector<std::vector<int>> digits;   // code -> digit string
    std::vector<int> weights;               // place value per coordinate
    std::vector<int> order;                 // codes sorted by (digit sum, code)
    std::vector<std::vector<char>> adjacent; // template adjacency matrix

    QklTemplate(int k_, int l_) : k(k_), l(l_), dim(k_ + l_) {
        total = static_cast<int>(QklShape{k, l}.vertex_total());
        weights.assign(static_cast<std::size_t>(dim), 1);
        for (int i = 1; i < dim; ++i)
            weights[static_cast<std::size_t>(i)] =
                weights[static_cast<std::size_t>(i - 1)] * (i - 1 < k ? 2 : 3);
        digits.assign(static_cast<std::size_t>(total), std::vector<int>(static_cast<std::size_t>(dim), 0));
        for (int c = 0; c < total; ++c) {
            int rest = c;
            for (int i = 0; i < dim; ++i) {
                int base = i < k ? 2 : 3;
                digits[static_cast<std::size_t>(c)][static_cast<std::size_t>(i)] = rest % base;
                rest /= base;
            }
        }
        order.resize(static_cast<std::size_t>(total));
        for (int c = 0; c < total; ++c) order[static_cast<std::size_t>(c)] = c;
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            int sa = digit_sum(a), sb = digit_sum(b);
            if (sa != sb) return sa < sb;
            return a < b;
        });
        adjacent.assign(static_cast<std::size_t>(total), std::vector<char>(static_cast<std::size_t>(total), 0));
        for (int a = 0; a < total; ++a)
            for (int b = 0; b < total; ++b) adjacent[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = computed_adjacent(a, b);
    }

    int digit_sum(int c) const {
        int s = 0;
        for (int d : digits[static_cast<std::size_t>(c)]) s += d;
        return s;
    }

    bool computed_adjacent(int a, int b) const {
        int diff_coord = -1;
        for (int i = 0; i < dim; ++i) {
            int da = digits[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)];
            int db = digits[static_cast<std::size_t>(b)][static_cast<std::size_t>(i)];
            if (da != db) {
                if (diff_coord >= 0 || std::abs(da - db) != 1) return false;
                diff_coord = i;
            }
        }
        return diff_coord >= 0;
    }
};

struct QklSearch {
    const SimpleGraph& h;
    const QklTemplate& tpl;
    std::vector<Vertex> image;      // code -> host vertex, -1 unassigned
    std::vector<char> assigned;     // code -> bool
    std::vector<char> used;         // host vertex -> bool
    std::vector<int> assigned_codes;
    std::vector<std::vector<Vertex>> found; // completed sets anchored here

    QklSearch(const SimpleGraph& host, const QklTemplate& t)
        : h(host),
          tpl(t),
          image(static_cast<std::size_t>(t.total), -1),
          assigned(static_cast<std::size_t>(t.total), 0),
          used(static_cast<std::size_t>(host.n()), 0) {}

    bool place(int code, Vertex v) {
        if (used[static_cast<std::size_t>(v)]) return false;
        // Induced isomorphism: adjacency with every placed vertex must match
        // the template exactly.
        for (int c : assigned_codes) {
            bool want = tpl.adjacent[static_cast<std::size_t>(code)][static_cast<std::size_t>(c)];
            if (h.has_edge(v, image[static_cast<std::size_t>(c)]) != want) return false;
        }
        image[static_cast<std::size_t>(code)] = v;
        assigned[static_cast<std::size_t>(code)] = 1;
        used[static_cast<std::size_t>(v)] = 1;
        assigned_codes.push_back(code);
        return true;
    }

    void unplace(int code) {
        used[static_cast<std::size_t>(image[static_cast<std::size_t>(code)])] = 0;
        image[static_cast<std::size_t>(code)] = -1;
        assigned[static_cast<std::size_t>(code)] = 0;
        assigned_codes.pop_back();
    }

    // Fill template codes in digit-sum order starting from position `pos` in
    // tpl.order (anchor and axis units are placed by the caller).
    void extend(std::size_t pos) {
        while (pos < tpl.order.size() && assigned[static_cast<std::size_t>(tpl.order[pos])]) ++pos;
        if (pos == tpl.order.size()) {
            emit();
            return;
        }
        int code = tpl.order[pos];
        const auto& dg = tpl.digits[static_cast<std::size_t>(code)];
        int first = -1, second = -1;
        for (int i = 0; i < tpl.dim && second < 0; ++i) {
            if (dg[static_cast<std::size_t>(i)] > 0) {
                if (first < 0)
                    first = i;
                else
                    second = i;
            }
        }
        int parent = code - tpl.weights[static_cast<std::size_t>(first)];
        Vertex pv = image[static_cast<std::size_t>(parent)];
        if (second >= 0) {
            // Two positive digits: the new vertex completes a 4-cycle over
            // two parents; every common neighbor is a candidate.
            int parent2 = code - tpl.weights[static_cast<std::size_t>(second)];
            Vertex pv2 = image[static_cast<std::size_t>(parent2)];
            for (Vertex cand : h.neighbors(pv)) {
                if (!h.has_edge(cand, pv2)) continue;
                if (place(code, cand)) {
                    extend(pos + 1);
                    unplace(code);
                }
            }
        } else {
            // Next vertex along a P3 axis: any neighbor of the axis unit.
            for (Vertex cand : h.neighbors(pv)) {
                if (place(code, cand)) {
                    extend(pos + 1);
                    unplace(code);
                }
            }
        }
    }

    void emit() {
        // Deduplicate across anchors: the anchor (image of the all-zero
        // string) must be the smallest image over the orbit of that string,
        // i.e. over all strings with P2 digits in {0,1} and P3 digits in
        // {0,2}.
        Vertex anchor = image[0];
        for (int c = 0; c < tpl.total; ++c) {
            bool corner = true;
            for (int i = tpl.k; i < tpl.dim && corner; ++i)
                if (tpl.digits[static_cast<std::size_t>(c)][static_cast<std::size_t>(i)] == 1) corner = false;
            if (corner && image[static_cast<std::size_t>(c)] < anchor) return;
        }
        std::vector<Vertex> set(image.begin(), image.end());
        std::sort(set.begin(), set.end());
        found.push_back(std::move(set));
    }
};

std::vector<std::vector<Vertex>> enumerate_qkl(const SimpleGraph& h, int k, int l,
                                               bool require_convex, int threads) {
    std::vector<std::vector<Vertex>> result;
    const int n = h.n();
    if (k < 0 || l < 0) return result;
    if (k == 0 && l == 0) {
        for (Vertex v = 0; v < n; ++v) result.push_back({v});
        return result;
    }
    QklShape shape{k, l};
    if (shape.vertex_total() > n) return result;
    if (k + l > h.max_degree()) return result;

    const QklTemplate tpl(k, l);
    const int dim = tpl.dim;

    auto run_anchor = [&](Vertex a, QklSearch& search) {
        const auto& nbrs = h.neighbors(a);
        const int deg = static_cast<int>(nbrs.size());
        if (deg < dim) return;
        // Axis direction tuples: ascending within the P2 block and within the
        // P3 block, cutting the k! l! axis permutations.
        std::vector<int> p2_sel, p3_sel;
        std::vector<char> taken(static_cast<std::size_t>(deg), 0);
        std::function<void()> choose_p3 = [&]() {
            if (static_cast<int>(p3_sel.size()) == l) {
                bool ok = search.place(0, a);
                std::vector<int> placed_units;
                for (int i = 0; i < dim && ok; ++i) {
                    int idx = i < k ? p2_sel[static_cast<std::size_t>(i)]
                                    : p3_sel[static_cast<std::size_t>(i - k)];
                    int unit = tpl.weights[static_cast<std::size_t>(i)];
                    if (search.place(unit, nbrs[static_cast<std::size_t>(idx)]))
                        placed_units.push_back(unit);
                    else
                        ok = false;
                }
                if (ok) search.extend(0);
                for (auto it = placed_units.rbegin(); it != placed_units.rend(); ++it)
                    search.unplace(*it);
                if (!search.assigned_codes.empty()) search.unplace(0);
                return;
            }
            int start = p3_sel.empty() ? 0 : p3_sel.back() + 1;
            for (int i = start; i < deg; ++i) {
                if (taken[static_cast<std::size_t>(i)]) continue;
                taken[static_cast<std::size_t>(i)] = 1;
                p3_sel.push_back(i);
                choose_p3();
                p3_sel.pop_back();
                taken[static_cast<std::size_t>(i)] = 0;
            }
        };
        std::function<void()> choose_p2 = [&]() {
            if (static_cast<int>(p2_sel.size()) == k) {
                choose_p3();
                return;
            }
            int start = p2_sel.empty() ? 0 : p2_sel.back() + 1;
            for (int i = start; i < deg; ++i) {
                taken[static_cast<std::size_t>(i)] = 1;
                p2_sel.push_back(i);
                choose_p2();
                p2_sel.pop_back();
                taken[static_cast<std::size_t>(i)] = 0;
            }
        };
        choose_p2();
    };

    const int workers = std::max(1, std::min(threads, n));
    std::vector<std::vector<std::vector<Vertex>>> per_anchor(static_cast<std::size_t>(n));
    if (workers == 1) {
        QklSearch search(h, tpl);
        for (Vertex a = 0; a < n; ++a) {
            run_anchor(a, search);
            per_anchor[static_cast<std::size_t>(a)] = std::move(search.found);
            search.found.clear();
        }
    } else {
        std::atomic<Vertex> next{0};
        auto work = [&]() {
            QklSearch search(h, tpl);
            for (;;) {
                Vertex a = next.fetch_add(1);
                if (a >= n) break;
                run_anchor(a, search);
                per_anchor[static_cast<std::size_t>(a)] = std::move(search.found);
                search.found.clear();
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int t = 0; t < workers; ++t) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    for (auto& bucket : per_anchor)
        for (auto& set : bucket) result.push_back(std::move(set));

    if (require_convex) {
        DistanceCache cache(h);
        std::vector<std::vector<Vertex>> convex;
        convex.reserve(result.size());
        for (auto& set : result)
            if (is_convex_set(h, cache, set)) convex.push_back(std::move(set));
        result = std::move(convex);
    }
    std::sort(result.begin(), result.end());
    return result;
}

} // namespace

std::vector<std::vector<Vertex>> find_convex_qkl(const SimpleGraph& h, int k, int l, int threads) {
    return enumerate_qkl(h, k, l, /*require_convex=*/true, threads);
}

long long count_induced_hypercubes(const SimpleGraph& h, int k, int threads) {
    return static_cast<long long>(enumerate_qkl(h, k, 0, /*require_convex=*/false, threads).size());
}

BivariatePoly gc_polynomial(const SimpleGraph& h, int threads) {
    // Every Q_{k,l} corner has degree k+l and the subgraph has 2^k 3^l
    // vertices, which bounds the exponent ranges.
    BivariatePoly poly;
    const int n = h.n();
    const int maxdeg = h.max_degree();
    for (int k = 0;; ++k) {
        long long pow2 = 1;
        for (int i = 0; i < k; ++i) pow2 *= 2;
        if (pow2 > n || (k > 0 && k > maxdeg)) break;
        for (int l = 0;; ++l) {
            long long size = pow2;
            for (int i = 0; i < l; ++i) size *= 3;
            if (size > n || (k + l > 0 && k + l > maxdeg)) break;
            long long count = static_cast<long long>(find_convex_qkl(h, k, l, threads).size());
            poly.add_term(k, l, count);
        }
    }
    return poly;
}

} // namespace clarcube
