#ifndef M0NLAB_CBUNDLE_HPP
#define M0NLAB_CBUNDLE_HPP

#include <optional>
#include <string>
#include <vector>

#include "m0nlab/chow.hpp"
#include "m0nlab/fcone.hpp"
#include "m0nlab/lrq.hpp"

namespace m0nlab {

// Divisor/Chern classes of conformal blocks carry rational coefficients
// (integral as classes, not coefficient-wise, because of the linear
// relations); QClass is an integer ChowClass over a positive denominator.
// Integrality is enforced where it is well defined: integrated values.
struct QClass {
    ChowClass num;
    Int den = 1;

    static QClass of(ChowClass c) { return {std::move(c), 1}; }
    bool is_zero() const { return num.is_zero(); }
    void reduce();
};

QClass qadd(const QClass& a, const QClass& b);
QClass qsub(const QClass& a, const QClass& b);
QClass qmul(const QClass& a, const QClass& b);
QClass qscale(const QClass& a, const Rat& k);
QClass qpow(const QClass& a, int k);
// must be an integer; otherwise NonIntegralChernClass
Int integrate_exact(const QClass& c);

struct ConformalBlockSpec {
    LevelAlphabet alphabet;
    std::vector<Partition> weights; // one per leg 0..n

    int n() const { return static_cast<int>(weights.size()) - 1; }
};

// Normalized Casimir over 2(level + N), N = r+1.
Rat casimir_weight(const Partition& lam, const LevelAlphabet& alphabet);

// First Chern class: rk(V) sum_i w(lambda_i) psi_i minus, for each
// boundary divisor D_I, sum over mu of w(mu) rk(lambda_I + mu)
// rk(lambda_{I^c} + mu*).
QClass c1_conformal(const ConformalBlockSpec& spec);

// Newton's identities in exponential form:
// c_m = sum over {m_k : sum k m_k = m} of prod ((-1)^{k-1} p_k / k)^{m_k} / m_k!.
// p[k] is the k-th power sum (p[0] ignored).
QClass chern_from_power_sums(const std::vector<QClass>& p, int m);

// Critical-level shape c_k = c_1^k.
std::vector<QClass> chern_powers_of_c1(const QClass& c1, int top);

struct DegreeSequence {
    std::vector<Int> values;
    std::string provenance;
};

struct LogConcavity {
    bool ok = true;
    std::optional<int> first_violation;
};

LogConcavity is_log_concave(const std::vector<Int>& s);

// s_i = deg(alpha^i beta^{d-i}); both inputs must be degree 1 with F-nef
// certificates, else FNefViolation.
DegreeSequence kt_sequence(const QClass& alpha, const QClass& beta);

// s_i = deg(alpha^{d-i} c_i); cherns[i] is c_i for i = 0..d.
DegreeSequence chern_degree_sequence(const QClass& alpha, const std::vector<QClass>& cherns);

struct TwistPolynomial {
    std::vector<QClass> coeffs;   // coefficient of t^j at index j
    std::vector<Int> normalized;  // deg(coeff_j)/binom(r-(k-j), j), when k = top degree
    LogConcavity verdict;
};

// c_k(E tensor L^t) = sum_l binom(r-l, k-l) t^{k-l} c_1(L)^{k-l} c_l(E).
TwistPolynomial twist_polynomial(const std::vector<QClass>& chern_E, int r,
                                 const QClass& c1_L, int k);

// coefficient i of (A + tB)^d, i.e. binom(d,i) deg(A^{d-i} B^i)
std::vector<Int> volume_polynomial(const QClass& a, const QClass& b);

struct CatalogEntry {
    ConformalBlockSpec spec;
    std::string name;
};

// Fixed desk-scale catalog of conformal-block specs on 4..6-point spaces.
std::vector<CatalogEntry> catalog_specs();

} // namespace m0nlab

#endif
