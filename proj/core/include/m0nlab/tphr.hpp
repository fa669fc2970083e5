#ifndef M0NLAB_TPHR_HPP
#define M0NLAB_TPHR_HPP

#include <optional>
#include <vector>

#include "m0nlab/chow.hpp"
#include "m0nlab/numeric.hpp"

namespace m0nlab {

// Lower-triangular Toeplitz truncation: entry (i, j) = a_{i-j} for i >= j.
struct ToeplitzLT {
    std::vector<Rat> diagonals; // a_0, a_1, ...

    Rat entry(int i, int j) const {
        if (i < j || i - j >= static_cast<int>(diagonals.size())) return Rat(0);
        return diagonals[i - j];
    }
};

struct MinorViolation {
    std::vector<int> rows, cols;
    Rat value;
};

struct TPResult {
    bool totally_positive = true;
    std::optional<MinorViolation> violation; // lexicographically first
};

TPResult is_totally_positive(const ToeplitzLT& m, int size);

Rat det(std::vector<std::vector<Rat>> a);

// signature (positive, negative) of a symmetric rational matrix, by exact
// congruence diagonalization; rank = p + q
std::pair<int, int> signature(std::vector<std::vector<Rat>> q);

// Graded Poincare-duality algebra presented by per-degree bases of Chow
// classes, with integrate as the degree map.
struct GradedAlgebra {
    int n = 0;
    int D = 0; // top degree
    std::vector<std::vector<ChowClass>> bases; // bases[k] spans degree k
};

// Bases extracted from spanning divisor monomials by pairing-rank
// Gaussian elimination (presentation-independent).
GradedAlgebra chow_algebra(int n);

// Q_k(a, b) = deg(a . L^{D-2k} . b) on the degree-k basis.
std::vector<std::vector<Rat>> hr_form(const GradedAlgebra& alg, const ChowClass& L, int k);

// (-1)^k Q_k positive definite on ker(L^{D-2k+1}: A^k -> A^{D-k+1});
// HardLefschetzFailure when Q_k is singular.
bool satisfies_hr(const GradedAlgebra& alg, const ChowClass& L, int k);

struct HRReport {
    bool hard_lefschetz = false;
    bool hr = false;
    int sig_pos = 0;
    int sig_neg = 0; // signature of Q_1 when D >= 2, of Q_0 otherwise
};

// The degree-1 check on the Chow ring: HR at k = 0 and (when D >= 2) k = 1.
HRReport degree1_hr_m0n(int n, const ChowClass& L);

} // namespace m0nlab

#endif
