#ifndef CLARCUBE_VERIFY_HPP
#define CLARCUBE_VERIFY_HPP

#include <map>
#include <string>

#include "clarcube/bijection.hpp"
#include "clarcube/polynomial.hpp"

namespace clarcube {

struct VerifyOptions {
    int max_vertices = 100000;          // input graph budget
    int max_resonance_vertices = 5000;  // full GC + bijection budget
    int threads = 1;
};

struct RunReport {
    Family family = Family::benzenoid;
    int vertices = 0;
    int edges = 0;
    int hexagons = 0;
    int pentagons = 0;
    long long matchings = 0;
    BivariatePoly gzz;
    BivariatePoly gc;
    bool equal = false;
    BijectionReport bijection;
    FourCycleReport four_cycle;
    std::map<std::string, long long> timings_ms;

    bool all_passed() const {
        return equal && bijection.passed() && four_cycle.passed;
    }
    std::string to_json() const;
};

// Runs the full check: GZZ, GC of the resonance graph, the cover-to-subgraph
// bijection, and the 4-cycle labeling lemma. Throws Error(BudgetExceeded)
// when the input or its resonance graph exceeds the configured budgets.
RunReport verify_pipeline(const MolecularGraph& g, const VerifyOptions& options = {});

} // namespace clarcube

#endif
