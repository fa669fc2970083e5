#ifndef M0NLAB_SUBSET_HPP
#define M0NLAB_SUBSET_HPP

#include <bit>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "m0nlab/errors.hpp"

namespace m0nlab {

// Subsets of the marked-point label set {0, 1, ..., n} as bit masks
// (bit i <-> label i, n <= 62). The space has n+1 marked points.
using Mask = std::uint64_t;

inline Mask full_mask(int n) { return (Mask{1} << (n + 1)) - 1; }   // {0,...,n}
inline Mask bracket_mask(int n) { return full_mask(n) & ~Mask{1}; } // {1,...,n}

inline int popcount(Mask m) { return std::popcount(m); }
inline bool contains(Mask m, int label) { return (m >> label) & 1; }
inline bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }
inline bool disjoint(Mask a, Mask b) { return (a & b) == 0; }
inline bool nested(Mask a, Mask b) { return subset_of(a, b) || subset_of(b, a); }

inline Mask complement_in(Mask m, int n) { return full_mask(n) & ~m; }

std::vector<int> mask_to_labels(Mask m);
Mask labels_to_mask(const std::vector<int>& labels, int n);
std::string mask_to_string(Mask m);

// A subset of {0,...,n} together with its ambient marked-point count.
struct IndexSubset {
    Mask bits = 0;
    int n = 0;

    int size() const { return popcount(bits); }
    std::vector<int> members() const { return mask_to_labels(bits); }
    friend auto operator<=>(const IndexSubset&, const IndexSubset&) = default;
};

// Boundary-divisor labels: the split {S, S^c} of {0,...,n} is stored by
// whichever side avoids 0. Requires 2 <= |S| <= n-1 (both sides proper).
Mask canonicalize_divisor(Mask s, int n);

enum class Kind { Minimal, Maximal };

// Minimal: pairwise nested-or-disjoint. Maximal: totally ordered by inclusion.
bool is_nested(const std::vector<Mask>& collection, Kind kind);

// Strictly increasing chain of subsets.
struct SubsetChain {
    std::vector<Mask> links;

    bool valid() const;
    Mask top() const { return links.back(); }
};

// A nested set of the given building-set kind. Elements are subsets of
// {1,...,n} of size >= min_elem (2 by default); the full set [n] is a legal
// member (it indexes the deepest faces) but not a divisor label.
struct NestedSet {
    std::vector<Mask> elems; // sorted ascending as masks
    Kind kind = Kind::Minimal;
    int n = 0;

    NestedSet() = default;
    NestedSet(std::vector<Mask> e, Kind k, int ambient);

    int size() const { return static_cast<int>(elems.size()); }
    bool empty() const { return elems.empty(); }
    friend auto operator<=>(const NestedSet&, const NestedSet&) = default;
};

// Emits every nested set of the given kind with at most max_size elements,
// exactly once, in lexicographic order (by the sorted mask vector). Elements
// range over subsets of [n] with min_elem_size <= |S| <= max_elem_size.
// The empty nested set is always emitted first.
void enumerate_nested_sets(int n, Kind kind, int max_size,
                           const std::function<void(const NestedSet&)>& visit,
                           int min_elem_size = 2, int max_elem_size = -1);

std::vector<NestedSet> collect_nested_sets(int n, Kind kind, int max_size,
                                           int min_elem_size = 2,
                                           int max_elem_size = -1);

} // namespace m0nlab

#endif
