#ifndef M0NLAB_SYMACTION_HPP
#define M0NLAB_SYMACTION_HPP

#include <optional>
#include <string>
#include <vector>

#include "m0nlab/subset.hpp"

namespace m0nlab {

// The transposition (0, m) acting on subsets of {1,...,n}: S is fixed when
// m is absent, and maps to (S^c cup {m}) \ {0} when m is present.

// Throws InvalidDivisorLabel when the image degenerates to a singleton
// (only happens for S = {1..n}); silent dropping would mask bugs.
Mask apply_transposition(int m, Mask s, int n);

// No-throw variant used by exhaustive sweeps (caller controls the regime).
Mask transpose_image(int m, Mask s, int n);

enum class Structure { SingleChain, TwoDisjointChains, ManyDisjointChains, NotNestedMinimal };

struct ActionResult {
    std::vector<std::vector<Mask>> chains; // image, re-sorted by inclusion
    Structure structure = Structure::SingleChain;
    std::optional<int> pivot_index; // first element of the input containing m
};

// Image of pairwise-disjoint chains under (0, m), with structure detection.
ActionResult apply_to_chains(int m, const std::vector<SubsetChain>& chains, int n);

enum class FailureLabel { ChainPartialM, PairDisjointOrPartialM, ThreeOrMoreChains };

struct FailureCase {
    FailureLabel label;
    int witness_m = 0;
    std::string detail;
};

const char* failure_label_name(FailureLabel l);

// Antichain width of a minimal-nested collection = maximum number of
// pairwise-disjoint members = minimum chain cover (Dilworth on forests).
int width(const std::vector<Mask>& collection);

// Splits a minimal-nested collection into its comparability components;
// returns nullopt when some component is not totally ordered.
std::optional<std::vector<std::vector<Mask>>> decompose_chains(const std::vector<Mask>& collection);

// Classifies why the (0, m)-image of N1 cup N2 fails to be a chain, or
// nullopt when it is one. Requires the union minimal-nested with member
// sizes <= n-1 (so no image degenerates).
std::optional<FailureCase> classify_failure(const NestedSet& n1, const NestedSet& n2, int m);

// Smallest m in [n] triggering classify_failure(N, {}, m), if any.
std::optional<int> find_failure_witness(const NestedSet& n);

} // namespace m0nlab

#endif
