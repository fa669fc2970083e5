#ifndef M0NLAB_FCONE_HPP
#define M0NLAB_FCONE_HPP

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "m0nlab/chow.hpp"
#include "m0nlab/numeric.hpp"
#include "m0nlab/subset.hpp"

namespace m0nlab {

// F-curve of a 4-block partition of {0,...,n}; blocks kept sorted by
// minimum element to quotient out the 4!-fold relabeling.
struct FCurve {
    std::array<Mask, 4> blocks{};
    int n = 0;

    friend auto operator<=>(const FCurve&, const FCurve&) = default;
};

std::string to_string(const FCurve& c);

// Every 4-block partition exactly once (restricted-growth order).
void enumerate_fcurves(int n, const std::function<void(const FCurve&)>& visit);
std::vector<FCurve> collect_fcurves(int n);

// D_S . C: +1 if S (or S^c) is a union of two blocks, -1 if it is a single
// block, 0 otherwise. Any subset is accepted; transposition images may
// contain the label 0.
int pairing(Mask s, const FCurve& c);

// The (0, m)-image used on divisor labels here: S^c cup {m}, complement in
// {0,...,n}, keeping 0. Canonicalization happens inside pairing.
Mask transpose_label(int m, Mask s, int n);

struct FNefResult {
    bool f_nef = false;
    std::optional<FCurve> violating;
};

// d is a finite combination of canonical divisor labels.
FNefResult is_f_nef(const std::map<Mask, Int>& d, int n);

// Degree-1 Chow classes pair with F-curves through a boundary-divisor
// representative (psi legs expanded via psi_as_divisors).
std::map<Mask, Int> divisor_map_of(const ChowClass& c);
FNefResult is_f_nef_class(const ChowClass& c);
Int pair_class(const ChowClass& c, const FCurve& curve);

struct ExtranefReport {
    long long checks = 0;
    std::vector<std::string> counterexamples;
};

// Exhaustive sweep over all F-curves, transposition labels m, and divisor
// labels S with m in S: the non-block-{m} vanishing claim, the block-{m}
// sign flip, and the two-stray-element sufficient condition for vanishing.
ExtranefReport verify_extranef(int n, int jobs = 1);

} // namespace m0nlab

#endif
