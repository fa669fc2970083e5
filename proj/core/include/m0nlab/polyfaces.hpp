#ifndef M0NLAB_POLYFACES_HPP
#define M0NLAB_POLYFACES_HPP

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "m0nlab/subset.hpp"
#include "m0nlab/symaction.hpp"

namespace m0nlab {

// Faces of the two nestohedra via the nested-set correspondence;
// all geometry is poset-level (no coordinates).

struct Face {
    NestedSet nested;
    int dim = 0; // n - |nested|
};

Face make_face(NestedSet ns);

// True iff the union of the two element collections is nested for the kind.
bool faces_intersect(const Face& a, const Face& b);

struct WitnessQuadruple {
    Face f1, f2; // minimal kind (chains, so parallels exist)
    Face g1, g2; // maximal kind, same chains
    FailureCase failure;
};

// Quadruples where F1, F2 intersect (union minimal-nested), both are
// chains, but the parallel maximal-kind faces share no common face (the
// union is not totally ordered). Element sizes are kept in 2..n-1, the
// boundary-divisor regime. codim(F_i) = |nested| <= max_codim.
void enumerate_witnesses(int n, int max_codim,
                         const std::function<void(const WitnessQuadruple&)>& visit);

std::vector<WitnessQuadruple> collect_witnesses(int n, int max_codim);

struct CodimCounts {
    long long assoc = 0;  // unordered pairs of chain faces intersecting on the associahedron
    long long both = 0;   // of those, pairs whose permutohedron parallels also intersect
};

// Census over chain-type nested sets with element sizes 2..n-1; row `c`
// counts unordered pairs (including equal pairs) of codim-c faces.
std::map<int, CodimCounts> count_by_codim(int n);

} // namespace m0nlab

#endif
