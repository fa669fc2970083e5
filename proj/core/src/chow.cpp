#include "m0nlab/chow.hpp"

#include <algorithm>
#include <sstream>

#include "m0nlab/errors.hpp"

namespace m0nlab {

ChowClass ChowClass::zero(int n) {
    ChowClass c;
    c.n = n;
    return c;
}

ChowClass ChowClass::one(int n) {
    ChowClass c;
    c.n = n;
    c.terms[Monomial{}] = 1;
    return c;
}

ChowClass ChowClass::divisor(Mask s, int n) {
    ChowClass c;
    c.n = n;
    Monomial m;
    m.divs.push_back(canonicalize_divisor(s, n));
    c.terms[m] = 1;
    return c;
}

ChowClass ChowClass::psi(int leg, int n) {
    if (leg < 0 || leg > n) throw InvalidLabel("psi leg out of [0, n]");
    ChowClass c;
    c.n = n;
    Monomial m;
    m.psis.push_back(leg);
    c.terms[m] = 1;
    return c;
}

int ChowClass::homogeneous_degree() const {
    int d = -1;
    for (const auto& [m, k] : terms) {
        if (d < 0) d = m.degree();
        else if (d != m.degree()) return -1;
    }
    return d;
}

ChowClass& ChowClass::operator+=(const ChowClass& o) {
    if (n != o.n) throw PreconditionViolation("ambient n mismatch");
    for (const auto& [m, k] : o.terms) {
        auto it = terms.find(m);
        if (it == terms.end()) {
            if (k != 0) terms.emplace(m, k);
        } else {
            it->second += k;
            if (it->second == 0) terms.erase(it);
        }
    }
    return *this;
}

ChowClass& ChowClass::operator-=(const ChowClass& o) {
    ChowClass neg = o;
    neg *= Int(-1);
    return *this += neg;
}

ChowClass& ChowClass::operator*=(const Int& k) {
    if (k == 0) {
        terms.clear();
        return *this;
    }
    for (auto& [m, c] : terms) c *= k;
    return *this;
}

bool divisors_compatible(Mask a, Mask b) { return nested(a, b) || disjoint(a, b); }

Int psi_integral(int n, const std::vector<int>& exponents) {
    if (static_cast<int>(exponents.size()) != n + 1)
        throw DegreeError("need one exponent per leg 0..n");
    int total = 0;
    for (int a : exponents) {
        if (a < 0) throw DegreeError("negative exponent");
        total += a;
    }
    if (total != n - 2) throw DegreeError("psi exponents must sum to n-2");
    Int v = factorial(n - 2);
    for (int a : exponents) v /= factorial(a);
    return v;
}

ChowClass multiply(const ChowClass& a, const ChowClass& b) {
    if (a.n != b.n) throw PreconditionViolation("ambient n mismatch");
    ChowClass out = ChowClass::zero(a.n);
    for (const auto& [ma, ca] : a.terms) {
        for (const auto& [mb, cb] : b.terms) {
            bool dead = false;
            for (Mask x : ma.divs) {
                for (Mask y : mb.divs)
                    if (!divisors_compatible(x, y)) { dead = true; break; }
                if (dead) break;
            }
            if (dead) continue;
            Monomial m;
            m.divs = ma.divs;
            m.divs.insert(m.divs.end(), mb.divs.begin(), mb.divs.end());
            std::sort(m.divs.begin(), m.divs.end());
            m.psis = ma.psis;
            m.psis.insert(m.psis.end(), mb.psis.begin(), mb.psis.end());
            std::sort(m.psis.begin(), m.psis.end());
            auto it = out.terms.find(m);
            if (it == out.terms.end()) out.terms.emplace(m, ca * cb);
            else {
                it->second += ca * cb;
                if (it->second == 0) out.terms.erase(it);
            }
        }
    }
    return out;
}

ChowClass power(const ChowClass& a, int k) {
    ChowClass r = ChowClass::one(a.n);
    for (int i = 0; i < k; ++i) r = multiply(r, a);
    return r;
}

namespace {

// One vertex of the dual tree of a compatible divisor monomial.
struct Vertex {
    Mask label = 0;          // side avoiding 0 (root: full set)
    int parent = -1;
    std::vector<int> children;
    std::vector<int> legs;
    int points = 0;
    int dim = 0;
    int parent_pt = -1;      // point index of the branch toward the parent
    std::vector<int> child_pt; // point index per child (parallel to children)
};

Int integrate_monomial(const Monomial& mono, int n) {
    // distinct labels + multiplicities
    std::vector<Mask> labels;
    std::vector<int> mult;
    for (Mask s : mono.divs) {
        if (!labels.empty() && labels.back() == s) ++mult.back();
        else { labels.push_back(s); mult.push_back(1); }
    }
    const int t = static_cast<int>(labels.size());
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j)
            if (!divisors_compatible(labels[i], labels[j])) return 0;

    std::vector<Vertex> v(t + 1);
    const int root = t;
    v[root].label = full_mask(n);
    for (int i = 0; i < t; ++i) {
        v[i].label = labels[i];
        int best = root;
        for (int j = 0; j < t; ++j) {
            if (j == i) continue;
            if (subset_of(labels[i], labels[j]) && labels[i] != labels[j] &&
                (best == root || subset_of(labels[j], labels[best])))
                best = j;
        }
        v[i].parent = best;
        v[best].children.push_back(i);
    }

    // legs, points, dims
    std::vector<int> leg_vtx(n + 1, root), leg_pt(n + 1, -1);
    for (int i = 0; i <= root; ++i) {
        Mask taken = 0;
        for (int c : v[i].children) taken |= v[c].label;
        Mask own = v[i].label & ~taken;
        v[i].legs = mask_to_labels(own);
        int p = 0;
        for (int l : v[i].legs) { leg_vtx[l] = i; leg_pt[l] = p++; }
        for (std::size_t c = 0; c < v[i].children.size(); ++c) v[i].child_pt.push_back(p++);
        if (i != root) v[i].parent_pt = p++;
        v[i].points = p;
        v[i].dim = p - 3;
        if (v[i].dim < 0) return 0;
    }

    // base psi exponents from the monomial's psi factors
    std::vector<std::vector<int>> base(root + 1);
    for (int i = 0; i <= root; ++i) base[i].assign(v[i].points, 0);
    for (int l : mono.psis) base[leg_vtx[l]][leg_pt[l]] += 1;

    // repeated divisor factors: D_S^k restricts to (-psi_x - psi_y)^{k-1},
    // expanded binomially across the two branch points of edge e_S
    struct Rep { int edge; int k; };
    std::vector<Rep> reps;
    Int sign = 1;
    for (int i = 0; i < t; ++i) {
        if (mult[i] > 1) {
            reps.push_back({i, mult[i]});
            if ((mult[i] - 1) % 2 == 1) sign = -sign;
        }
    }

    std::vector<int> choice(reps.size(), 0);
    Int total = 0;
    for (;;) {
        auto exps = base;
        Int coeff = 1;
        for (std::size_t r = 0; r < reps.size(); ++r) {
            int i = reps[r].edge, k = reps[r].k, a = choice[r];
            exps[i][v[i].parent_pt] += a;
            int par = v[i].parent;
            std::size_t ci = std::find(v[par].children.begin(), v[par].children.end(), i) -
                             v[par].children.begin();
            exps[par][v[par].child_pt[ci]] += k - 1 - a;
            coeff *= binomial(k - 1, a);
        }
        bool ok = true;
        Int prod = coeff;
        for (int i = 0; i <= root && ok; ++i) {
            int s = 0;
            for (int e : exps[i]) s += e;
            if (s != v[i].dim) { ok = false; break; }
            Int f = factorial(v[i].dim);
            for (int e : exps[i]) f /= factorial(e);
            prod *= f;
        }
        if (ok) total += prod;

        std::size_t r = 0;
        while (r < reps.size() && choice[r] == reps[r].k - 1) choice[r++] = 0;
        if (r == reps.size()) break;
        ++choice[r];
    }
    return sign * total;
}

} // namespace

Int integrate(const ChowClass& c) {
    if (c.is_zero()) return 0;
    const int d = c.n - 2;
    for (const auto& [m, k] : c.terms)
        if (m.degree() != d)
            throw DegreeError("integrate needs a homogeneous class of top degree n-2");
    Int total = 0;
    for (const auto& [m, k] : c.terms) total += k * integrate_monomial(m, c.n);
    return total;
}

ChowClass psi_as_divisors(int i, int j, int k, int n) {
    if (i == j || i == k || j == k) throw PreconditionViolation("legs i, j, k must be distinct");
    if (i < 0 || i > n || j < 0 || j > n || k < 0 || k > n)
        throw InvalidLabel("leg out of [0, n]");
    ChowClass out = ChowClass::zero(n);
    Mask full = full_mask(n);
    for (Mask s = 0; s <= full; ++s) {
        if (!contains(s, i) || contains(s, j) || contains(s, k)) continue;
        int sz = popcount(s);
        if (sz < 2 || sz > n - 1) continue;
        out += ChowClass::divisor(s, n);
    }
    return out;
}

namespace {

Mask swap_zero_m(Mask s, int m) {
    bool b0 = contains(s, 0), bm = contains(s, m);
    if (b0 == bm) return s;
    return s ^ (Mask{1} | (Mask{1} << m));
}

} // namespace

ChowClass act_on_class(int m, const ChowClass& c) {
    if (m < 1 || m > c.n) throw InvalidLabel("transposition label m must lie in [1, n]");
    ChowClass out = ChowClass::zero(c.n);
    for (const auto& [mono, coeff] : c.terms) {
        Monomial img;
        for (Mask s : mono.divs)
            img.divs.push_back(canonicalize_divisor(swap_zero_m(s, m), c.n));
        std::sort(img.divs.begin(), img.divs.end());
        for (int l : mono.psis)
            img.psis.push_back(l == 0 ? m : (l == m ? 0 : l));
        std::sort(img.psis.begin(), img.psis.end());
        out.terms[img] += coeff;
        if (out.terms[img] == 0) out.terms.erase(img);
    }
    return out;
}

std::string to_string(const ChowClass& c) {
    if (c.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, k] : c.terms) {
        if (!first) os << " + ";
        first = false;
        os << k;
        for (Mask s : m.divs) os << "*D" << mask_to_string(s);
        for (int l : m.psis) os << "*psi(" << l << ")";
    }
    return os.str();
}

} // namespace m0nlab
