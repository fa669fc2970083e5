#ifndef M0NLAB_CHOW_HPP
#define M0NLAB_CHOW_HPP

#include <map>
#include <vector>

#include "m0nlab/numeric.hpp"
#include "m0nlab/subset.hpp"

namespace m0nlab {

// Chow ring of the space of n+1 marked points (dimension n-2), generated by
// boundary divisors D_S (canonical labels avoiding 0) and psi-classes.

struct Monomial {
    std::vector<Mask> divs; // canonical labels, sorted, with repetition
    std::vector<int> psis;  // leg labels 0..n, sorted, with repetition

    int degree() const { return static_cast<int>(divs.size() + psis.size()); }
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

struct ChowClass {
    std::map<Monomial, Int> terms;
    int n = 0;

    static ChowClass zero(int n);
    static ChowClass one(int n);
    static ChowClass divisor(Mask s, int n); // canonicalizes
    static ChowClass psi(int leg, int n);

    bool is_zero() const { return terms.empty(); }
    // -1 for mixed/empty, else the common degree
    int homogeneous_degree() const;

    ChowClass& operator+=(const ChowClass& o);
    ChowClass& operator-=(const ChowClass& o);
    ChowClass& operator*=(const Int& k);
    friend ChowClass operator+(ChowClass a, const ChowClass& b) { return a += b; }
    friend ChowClass operator-(ChowClass a, const ChowClass& b) { return a -= b; }
    friend ChowClass operator*(ChowClass a, const Int& k) { return a *= k; }
    friend bool operator==(const ChowClass&, const ChowClass&) = default;
};

// Canonical labels (both avoiding 0) index compatible divisors iff nested
// or disjoint; anything else multiplies to zero.
bool divisors_compatible(Mask a, Mask b);

// (n-2)! / prod a_i! for exponents a_0..a_n summing to n-2.
Int psi_integral(int n, const std::vector<int>& exponents);

// Product with monomial canonicalization; incompatible divisor pairs
// annihilate immediately.
ChowClass multiply(const ChowClass& a, const ChowClass& b);

ChowClass power(const ChowClass& a, int k);

// Degree of a top-degree class, by dual-tree reduction: a square-free
// compatible divisor monomial is the stratum of its dual tree; a repeated
// factor D_S^k restricts to (-psi_x - psi_y)^{k-1} across the edge e_S;
// psi-factors live on the component carrying the leg; stratum integrals
// factor into multinomials per tree vertex.
Int integrate(const ChowClass& c);

// psi_i = sum of D_I over canonical I with i in I and j, k not in I.
ChowClass psi_as_divisors(int i, int j, int k, int n);

// The ring automorphism induced by the transposition (0, m): relabels
// 0 <-> m on divisor labels and psi legs, then canonicalizes.
ChowClass act_on_class(int m, const ChowClass& c);

std::string to_string(const ChowClass& c);

} // namespace m0nlab

#endif
