#include "clarcube/verify.hpp"

#include <chrono>

#include <json.hpp>

#include "clarcube/cube_search.hpp"
#include "clarcube/error.hpp"

namespace clarcube {

namespace {

class PhaseTimer {
public:
    explicit PhaseTimer(std::map<std::string, long long>& sink) : sink_(sink) {}

    template <typename Fn>
    auto time(const std::string& phase, Fn&& fn) {
        auto start = std::chrono::steady_clock::now();
        if constexpr (std::is_void_v<decltype(fn())>) {
            fn();
            record(phase, start);
        } else {
            auto result = fn();
            record(phase, start);
            return result;
        }
    }

private:
    void record(const std::string& phase, std::chrono::steady_clock::time_point start) {
        auto elapsed = std::chrono::steady_clock::now() - start;
        sink_[phase] = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    }

    std::map<std::string, long long>& sink_;
};

nlohmann::json poly_terms_json(const BivariatePoly& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [exps, coeff] : p.terms())
        terms.push_back({exps.first, exps.second, coeff});
    return terms;
}

} // namespace

std::string RunReport::to_json() const {
    nlohmann::json j;
    j["family"] = family_name(family);
    j["vertices"] = vertices;
    j["edges"] = edges;
    j["hexagons"] = hexagons;
    j["pentagons"] = pentagons;
    j["matchings"] = matchings;
    j["gzz"] = poly_terms_json(gzz);
    j["gc"] = poly_terms_json(gc);
    j["equal"] = equal;
    j["timings_ms"] = timings_ms;
    if (!all_passed()) {
        nlohmann::json failures = nlohmann::json::array();
        if (!equal)
            failures.push_back({{"check", "polynomial_equality"},
                                {"gzz", gzz.to_string()},
                                {"gc", gc.to_string()}});
        for (const auto& entry : bijection.entries) {
            if (entry.passed()) continue;
            nlohmann::json failure{{"check", "bijection"},
                                   {"k", entry.k},
                                   {"l", entry.l},
                                   {"covers", entry.cover_count},
                                   {"subgraphs", entry.subgraph_count},
                                   {"counterexample", entry.counterexample}};
            if (!entry.counterexample_set.empty())
                failure["subgraph_vertices"] = entry.counterexample_set;
            failures.push_back(failure);
        }
        if (!four_cycle.passed)
            failures.push_back({{"check", "four_cycle_lemma"},
                                {"counterexample", four_cycle.counterexample}});
        j["failures"] = failures;
    }
    return j.dump();
}

RunReport verify_pipeline(const MolecularGraph& g, const VerifyOptions& options) {
    if (g.n() > options.max_vertices)
        throw Error(ErrorCode::BudgetExceeded,
                    "input has " + std::to_string(g.n()) + " vertices, budget is " +
                        std::to_string(options.max_vertices) + " (use --max-vertices)");

    RunReport report;
    report.family = g.family;
    report.vertices = g.n();
    report.edges = static_cast<int>(g.edge_count());
    report.hexagons = static_cast<int>(g.hexagon_faces().size());
    report.pentagons = static_cast<int>(g.pentagon_faces().size());

    PhaseTimer timer(report.timings_ms);
    auto matchings = timer.time("matchings", [&] { return enumerate_perfect_matchings(g); });
    report.matchings = static_cast<long long>(matchings.size());
    if (report.matchings > options.max_resonance_vertices)
        throw Error(ErrorCode::BudgetExceeded,
                    "resonance graph would have " + std::to_string(report.matchings) +
                        " vertices, budget is " + std::to_string(options.max_resonance_vertices) +
                        " (use --max-resonance-vertices)");

    ResonanceGraph r = timer.time("resonance", [&] { return build_resonance_graph(g, matchings); });
    report.gzz = timer.time("gzz", [&] { return gzz_polynomial(g); });
    report.gc = timer.time("gc", [&] { return gc_polynomial(r.graph(), options.threads); });
    report.equal = report.gzz == report.gc;
    report.bijection =
        timer.time("bijection", [&] { return verify_bijection(g, r, options.threads); });
    report.four_cycle = timer.time("four_cycle", [&] { return verify_four_cycle_lemma(g, r); });
    return report;
}

} // namespace clarcube
