#ifndef CLARCUBE_CUBE_SEARCH_HPP
#define CLARCUBE_CUBE_SEARCH_HPP

#include <vector>

#include "clarcube/graph.hpp"
#include "clarcube/polynomial.hpp"

namespace clarcube {

// Q_{k,l} is the Cartesian product of k paths on 2 vertices and l paths on 3
// vertices. Its vertices are (k+l)-digit strings, the first k digits in
// {0,1}, the last l in {0,1,2}; two strings are adjacent iff they differ by
// exactly 1 in exactly one digit.
struct QklShape {
    int k = 0;
    int l = 0;
    long long vertex_total() const;
};

// All vertex sets S (sorted, listed in lexicographic order) whose induced
// subgraph is isomorphic to Q_{k,l} and convex in h. Each set is reported
// once regardless of the 2^k k! 2^l l! automorphisms.
std::vector<std::vector<Vertex>> find_convex_qkl(const SimpleGraph& h, int k, int l,
                                                 int threads = 1);

// Induced (not necessarily convex) k-cube count, for the classic
// cube-polynomial cross-check.
long long count_induced_hypercubes(const SimpleGraph& h, int k, int threads = 1);

// Coefficient (k, l) counts induced convex Q_{k,l} subgraphs of h.
BivariatePoly gc_polynomial(const SimpleGraph& h, int threads = 1);

} // namespace clarcube

#endif
