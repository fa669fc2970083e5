#include "m0nlab/cbundle.hpp"

#include <algorithm>
#include <functional>

namespace m0nlab {

void QClass::reduce() {
    if (den < 0) { den = -den; num *= Int(-1); }
    if (den == 0) throw PreconditionViolation("zero denominator");
    if (num.is_zero()) { den = 1; return; }
    Int g = den;
    for (const auto& [m, c] : num.terms) g = boost::multiprecision::gcd(g, boost::multiprecision::abs(c));
    if (g > 1) {
        den /= g;
        for (auto& [m, c] : num.terms) c /= g;
    }
}

QClass qadd(const QClass& a, const QClass& b) {
    QClass r;
    r.num = a.num * b.den + b.num * a.den;
    r.den = a.den * b.den;
    r.reduce();
    return r;
}

QClass qsub(const QClass& a, const QClass& b) { return qadd(a, qscale(b, Rat(-1))); }

QClass qmul(const QClass& a, const QClass& b) {
    QClass r;
    r.num = multiply(a.num, b.num);
    r.den = a.den * b.den;
    r.reduce();
    return r;
}

QClass qscale(const QClass& a, const Rat& k) {
    QClass r = a;
    r.num *= boost::multiprecision::numerator(k);
    r.den *= boost::multiprecision::denominator(k);
    r.reduce();
    return r;
}

QClass qpow(const QClass& a, int k) {
    QClass r{ChowClass::one(a.num.n), 1};
    for (int i = 0; i < k; ++i) r = qmul(r, a);
    return r;
}

Int integrate_exact(const QClass& c) {
    Int v = integrate(c.num);
    if (v % c.den != 0)
        throw NonIntegralChernClass("integrated value " + v.str() + "/" + c.den.str() +
                                    " is not an integer");
    return v / c.den;
}

Rat casimir_weight(const Partition& lam, const LevelAlphabet& alphabet) {
    const int N = alphabet.r + 1;
    if (!fits_rectangle(lam, alphabet.r, alphabet.ell))
        throw PreconditionViolation("weight does not fit the rectangle");
    Int sum = 0, size = 0;
    for (std::size_t i = 0; i < lam.size(); ++i) {
        sum += Int(lam[i]) * (lam[i] + N + 1 - 2 * (static_cast<int>(i) + 1));
        size += lam[i];
    }
    return Rat(Int(N) * sum - size * size, Int(2) * N * (alphabet.ell + N));
}

QClass c1_conformal(const ConformalBlockSpec& spec) {
    const int n = spec.n();
    const int N = spec.alphabet.r + 1;
    const Int den = Int(2) * N * (spec.alphabet.ell + N);
    auto w_scaled = [&](const Partition& lam) {
        // casimir_weight times den, always an integer
        Int sum = 0, size = 0;
        for (std::size_t i = 0; i < lam.size(); ++i) {
            sum += Int(lam[i]) * (lam[i] + N + 1 - 2 * (static_cast<int>(i) + 1));
            size += lam[i];
        }
        return Int(N) * sum - size * size;
    };

    Int rank = conformal_rank(spec.alphabet, spec.weights);
    QClass c1{ChowClass::zero(n), den};
    if (rank == 0) { c1.den = 1; return c1; }

    for (int i = 0; i <= n; ++i) {
        ChowClass t = ChowClass::psi(i, n);
        t *= rank * w_scaled(spec.weights[i]);
        c1.num += t;
    }
    auto members = spec.alphabet.members();
    Mask bracket = bracket_mask(n);
    for (Mask s = 1; s <= bracket; ++s) {
        if (!subset_of(s, bracket)) continue;
        int sz = popcount(s);
        if (sz < 2 || sz > n - 1) continue;
        std::vector<Partition> left, right;
        for (int l = 0; l <= n; ++l)
            (contains(s, l) ? left : right).push_back(spec.weights[l]);
        Int coef = 0;
        for (const auto& mu : members) {
            Int w = w_scaled(mu);
            if (w == 0) continue;
            auto lw = left, rw = right;
            lw.push_back(mu);
            rw.push_back(contragredient(mu, spec.alphabet.r));
            coef += w * conformal_rank(spec.alphabet, lw) * conformal_rank(spec.alphabet, rw);
        }
        if (coef != 0) {
            ChowClass t = ChowClass::divisor(s, n);
            t *= -coef;
            c1.num += t;
        }
    }
    c1.reduce();
    return c1;
}

QClass chern_from_power_sums(const std::vector<QClass>& p, int m) {
    if (m < 0) throw PreconditionViolation("negative Chern index");
    if (static_cast<int>(p.size()) <= m)
        throw PreconditionViolation("need power sums p_1..p_m");
    const int n = p.size() > 1 ? p[1].num.n : 0;
    QClass total{ChowClass::zero(n), 1};
    if (m == 0) return QClass{ChowClass::one(n), 1};

    // choose multiplicities m_k for k = m down to 1
    std::function<void(int, int, const QClass&, const Rat&)> rec =
        [&](int k, int remaining, const QClass& cls, const Rat& scalar) {
            if (remaining == 0) {
                total = qadd(total, qscale(cls, scalar));
                return;
            }
            if (k == 0) return;
            Rat sc = scalar;
            QClass cl = cls;
            for (int mk = 0; k * mk <= remaining; ++mk) {
                if (mk > 0) {
                    cl = qmul(cl, p[k]);
                    Rat step(k % 2 == 1 ? 1 : -1, Int(k) * mk);
                    sc *= step; // accumulates ((-1)^{k-1}/k)^{mk} / mk!
                }
                rec(k - 1, remaining - k * mk, cl, sc);
            }
        };
    rec(m, m, QClass{ChowClass::one(n), 1}, Rat(1));
    return total;
}

std::vector<QClass> chern_powers_of_c1(const QClass& c1, int top) {
    std::vector<QClass> out;
    for (int k = 0; k <= top; ++k) out.push_back(qpow(c1, k));
    return out;
}

LogConcavity is_log_concave(const std::vector<Int>& s) {
    LogConcavity v;
    for (std::size_t i = 1; i + 1 < s.size(); ++i) {
        if (s[i] * s[i] < s[i - 1] * s[i + 1]) {
            v.ok = false;
            v.first_violation = static_cast<int>(i);
            return v;
        }
    }
    return v;
}

namespace {

void require_f_nef_degree1(const QClass& c, const char* who) {
    int deg = c.num.homogeneous_degree();
    if (!c.num.is_zero() && deg != 1)
        throw DegreeError(std::string(who) + " must be a degree-1 class");
    auto res = is_f_nef_class(c.num);
    if (!res.f_nef)
        throw FNefViolation(std::string(who) + " pairs negatively with F-curve " +
                            to_string(*res.violating));
}

} // namespace

DegreeSequence kt_sequence(const QClass& alpha, const QClass& beta) {
    require_f_nef_degree1(alpha, "alpha");
    require_f_nef_degree1(beta, "beta");
    const int d = alpha.num.n - 2;
    DegreeSequence out;
    out.provenance = "s_i = deg(alpha^i beta^{d-i})";
    for (int i = 0; i <= d; ++i)
        out.values.push_back(integrate_exact(qmul(qpow(alpha, i), qpow(beta, d - i))));
    return out;
}

DegreeSequence chern_degree_sequence(const QClass& alpha, const std::vector<QClass>& cherns) {
    require_f_nef_degree1(alpha, "alpha");
    const int d = alpha.num.n - 2;
    if (static_cast<int>(cherns.size()) <= d)
        throw PreconditionViolation("need Chern classes c_0..c_d");
    DegreeSequence out;
    out.provenance = "s_i = deg(alpha^{d-i} c_i)";
    for (int i = 0; i <= d; ++i)
        out.values.push_back(integrate_exact(qmul(qpow(alpha, d - i), cherns[i])));
    return out;
}

TwistPolynomial twist_polynomial(const std::vector<QClass>& chern_E, int r,
                                 const QClass& c1_L, int k) {
    const int n = c1_L.num.n;
    TwistPolynomial tp;
    for (int j = 0; j <= k; ++j) {
        int l = k - j; // c_l(E) paired with t^j
        QClass cl;
        if (l > r) {
            cl = QClass{ChowClass::zero(n), 1};
        } else {
            if (l >= static_cast<int>(chern_E.size()))
                throw PreconditionViolation("missing Chern class c_" + std::to_string(l));
            cl = chern_E[l];
        }
        Int b = binomial(r - l, j);
        QClass coeff = qscale(qmul(qpow(c1_L, j), cl), Rat(b));
        tp.coeffs.push_back(coeff);
    }
    if (k == n - 2) {
        for (int j = 0; j <= k; ++j) {
            Int b = binomial(r - (k - j), j);
            if (b == 0) {
                tp.normalized.push_back(0);
            } else {
                Int v = integrate_exact(tp.coeffs[j]);
                if (v % b != 0)
                    throw NonIntegralChernClass("twist coefficient not divisible by its binomial");
                tp.normalized.push_back(v / b);
            }
        }
        tp.verdict = is_log_concave(tp.normalized);
    }
    return tp;
}

std::vector<Int> volume_polynomial(const QClass& a, const QClass& b) {
    require_f_nef_degree1(a, "A");
    require_f_nef_degree1(b, "B");
    const int d = a.num.n - 2;
    std::vector<Int> out;
    for (int i = 0; i <= d; ++i)
        out.push_back(binomial(d, i) * integrate_exact(qmul(qpow(a, d - i), qpow(b, i))));
    return out;
}

std::vector<CatalogEntry> catalog_specs() {
    auto mk = [](int r, int ell, std::vector<Partition> w, std::string name) {
        CatalogEntry e;
        e.spec.alphabet = LevelAlphabet{r, ell};
        e.spec.weights = std::move(w);
        e.name = std::move(name);
        return e;
    };
    const Partition e{}, p1{1}, p2{2}, p3{3}, p11{1, 1}, p21{2, 1};
    return {
        mk(1, 1, {p1, p1, p1, p1}, "sl2 l1 (1)^4 on 4pts"),
        mk(1, 1, {p1, p1, p1, p1, e}, "sl2 l1 (1)^4 on 5pts"),
        mk(1, 1, {p1, p1, p1, p1, p1, p1}, "sl2 l1 (1)^6 on 6pts"),
        mk(1, 1, {p1, p1, p1, p1, e, e}, "sl2 l1 (1)^4,0^2 on 6pts"),
        mk(1, 1, {e, e, e, e, e}, "sl2 l1 trivial on 5pts"),
        mk(1, 2, {p2, p2, p1, p1}, "sl2 l2 (2)^2(1)^2 on 4pts"),
        mk(1, 2, {p1, p1, p1, p1}, "sl2 l2 (1)^4 on 4pts"),
        mk(1, 2, {p1, p1, p1, p1, p2}, "sl2 l2 (1)^4(2) on 5pts"),
        mk(1, 2, {p2, p2, p2, p2, e}, "sl2 l2 (2)^4 on 5pts"),
        mk(1, 2, {p1, p1, p2, p2, p2}, "sl2 l2 (1)^2(2)^3 on 5pts"),
        mk(1, 2, {p1, p1, p1, p1, p1, p1}, "sl2 l2 (1)^6 on 6pts"),
        mk(1, 2, {p2, p2, p2, p2, p2, p2}, "sl2 l2 (2)^6 on 6pts"),
        mk(1, 3, {p3, p3, p1, p1}, "sl2 l3 (3)^2(1)^2 on 4pts"),
        mk(1, 3, {p2, p2, p1, p1}, "sl2 l3 (2)^2(1)^2 on 4pts"),
        mk(1, 3, {p1, p1, p2, p2, p2}, "sl2 l3 (1)^2(2)^3 on 5pts"),
        mk(1, 3, {p3, p3, p3, p3, e, e}, "sl2 l3 (3)^4 on 6pts"),
        mk(2, 1, {p1, p1, p11, p11}, "sl3 l1 (1)^2(11)^2 on 4pts"),
        mk(2, 1, {p11, p11, p11, e, e}, "sl3 l1 (11)^3 on 5pts"),
        mk(2, 1, {p1, p1, p1, e, e}, "sl3 l1 (1)^3 on 5pts"),
        mk(2, 1, {p1, p1, p1, p11, p11, p11}, "sl3 l1 (1)^3(11)^3 on 6pts"),
        mk(2, 2, {p21, p21, p11, p1}, "sl3 l2 (21)^2(11)(1) on 4pts"),
        mk(2, 2, {p2, p2, p1, p1, e}, "sl3 l2 (2)^2(1)^2 on 5pts"),
    };
}

} // namespace m0nlab
