#include "m0nlab/tphr.hpp"

#include <algorithm>
#include <functional>

#include "m0nlab/errors.hpp"
#include "m0nlab/fcone.hpp"

namespace m0nlab {

Rat det(std::vector<std::vector<Rat>> a) {
    const int n = static_cast<int>(a.size());
    Rat d(1);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (a[r][col] != 0) { piv = r; break; }
        if (piv < 0) return Rat(0);
        if (piv != col) {
            std::swap(a[piv], a[col]);
            d = -d;
        }
        d *= a[col][col];
        for (int r = col + 1; r < n; ++r) {
            if (a[r][col] == 0) continue;
            Rat f = a[r][col] / a[col][col];
            for (int c = col; c < n; ++c) a[r][c] -= f * a[col][c];
        }
    }
    return d;
}

namespace {

void subsets_lex(int n, int k, const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> pick;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(pick.size()) == k) {
            visit(pick);
            return;
        }
        for (int i = start; i <= n - (k - static_cast<int>(pick.size())); ++i) {
            pick.push_back(i);
            rec(i + 1);
            pick.pop_back();
        }
    };
    rec(0);
}

} // namespace

TPResult is_totally_positive(const ToeplitzLT& m, int size) {
    if (size > static_cast<int>(m.diagonals.size()))
        throw PreconditionViolation("truncation size exceeds available diagonals");
    TPResult res;
    for (int s = 1; s <= size && res.totally_positive; ++s) {
        subsets_lex(size, s, [&](const std::vector<int>& rows) {
            if (!res.totally_positive) return;
            subsets_lex(size, s, [&](const std::vector<int>& cols) {
                if (!res.totally_positive) return;
                std::vector<std::vector<Rat>> sub(s, std::vector<Rat>(s));
                for (int i = 0; i < s; ++i)
                    for (int j = 0; j < s; ++j) sub[i][j] = m.entry(rows[i], cols[j]);
                Rat d = det(std::move(sub));
                if (d < 0) {
                    res.totally_positive = false;
                    res.violation = MinorViolation{rows, cols, d};
                }
            });
        });
    }
    return res;
}

std::pair<int, int> signature(std::vector<std::vector<Rat>> q) {
    const int n = static_cast<int>(q.size());
    int pos = 0, neg = 0;
    for (int k = 0; k < n; ++k) {
        // want a nonzero pivot on the diagonal at (k, k)
        if (q[k][k] == 0) {
            int good = -1;
            for (int i = k; i < n && good < 0; ++i)
                if (q[i][i] != 0) good = i;
            if (good >= 0 && good != k) {
                std::swap(q[good], q[k]);
                for (int i = k; i < n; ++i) std::swap(q[i][good], q[i][k]);
            } else if (good < 0) {
                int a = -1, b = -1;
                for (int i = k; i < n && a < 0; ++i)
                    for (int j = i + 1; j < n; ++j)
                        if (q[i][j] != 0) { a = i; b = j; break; }
                if (a < 0) break; // all-zero tail
                // congruence: row/col a += row/col b puts 2*q[a][b] on the diagonal
                for (int c = k; c < n; ++c) q[a][c] += q[b][c];
                for (int r = k; r < n; ++r) q[r][a] += q[r][b];
                if (a != k) {
                    std::swap(q[a], q[k]);
                    for (int i = k; i < n; ++i) std::swap(q[i][a], q[i][k]);
                }
            }
            if (q[k][k] == 0) break;
        }
        if (q[k][k] > 0) ++pos; else ++neg;
        // symmetric (congruence) elimination: Schur complement of the pivot
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) q[i][j] -= q[i][k] * q[k][j] / q[k][k];
        for (int i = k + 1; i < n; ++i) q[i][k] = q[k][i] = 0;
    }
    return {pos, neg};
}

namespace {

// compatible divisor monomials of the given degree
std::vector<ChowClass> spanning_monomials(int n, int k) {
    std::vector<Mask> labels;
    Mask bracket = bracket_mask(n);
    for (Mask s = 1; s <= bracket; ++s) {
        if (!subset_of(s, bracket)) continue;
        int sz = popcount(s);
        if (sz >= 2 && sz <= n - 1) labels.push_back(s);
    }
    std::vector<ChowClass> out;
    std::vector<Mask> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (static_cast<int>(cur.size()) == k) {
            ChowClass c = ChowClass::one(n);
            for (Mask s : cur) c = multiply(c, ChowClass::divisor(s, n));
            if (!c.is_zero()) out.push_back(c);
            return;
        }
        for (std::size_t i = start; i < labels.size(); ++i) {
            bool ok = true;
            for (Mask s : cur)
                if (!divisors_compatible(s, labels[i])) { ok = false; break; }
            if (!ok) continue;
            cur.push_back(labels[i]);
            rec(i); // allow repeats
            cur.pop_back();
        }
    };
    if (k == 0) return {ChowClass::one(n)};
    rec(0);
    return out;
}

} // namespace

GradedAlgebra chow_algebra(int n) {
    GradedAlgebra alg;
    alg.n = n;
    alg.D = n - 2;
    alg.bases.resize(alg.D + 1);
    for (int k = 0; k <= alg.D; ++k) {
        auto span_k = spanning_monomials(n, k);
        auto span_c = spanning_monomials(n, alg.D - k);
        // pairing matrix rows = candidates; greedy row-reduction keeps an
        // independent subset as the basis
        std::vector<std::vector<Rat>> reduced;
        for (const auto& cand : span_k) {
            std::vector<Rat> row;
            for (const auto& dual : span_c) row.emplace_back(integrate(multiply(cand, dual)));
            for (const auto& r : reduced) {
                int lead = -1;
                for (std::size_t c = 0; c < r.size(); ++c)
                    if (r[c] != 0) { lead = static_cast<int>(c); break; }
                if (lead >= 0 && row[lead] != 0) {
                    Rat f = row[lead] / r[lead];
                    for (std::size_t c = 0; c < row.size(); ++c) row[c] -= f * r[c];
                }
            }
            bool nonzero = std::any_of(row.begin(), row.end(), [](const Rat& x) { return x != 0; });
            if (nonzero) {
                reduced.push_back(std::move(row));
                alg.bases[k].push_back(cand);
            }
        }
    }
    return alg;
}

std::vector<std::vector<Rat>> hr_form(const GradedAlgebra& alg, const ChowClass& L, int k) {
    if (k < 0 || 2 * k > alg.D) throw PreconditionViolation("need 0 <= 2k <= D");
    ChowClass lp = power(L, alg.D - 2 * k);
    const auto& b = alg.bases[k];
    std::vector<std::vector<Rat>> q(b.size(), std::vector<Rat>(b.size()));
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = i; j < b.size(); ++j) {
            Rat v(integrate(multiply(multiply(b[i], lp), b[j])));
            q[i][j] = v;
            q[j][i] = v;
        }
    return q;
}

namespace {

// basis of ker(L^{D-2k+1}: A^k -> A^{D-k+1}), detected through the pairing
// with A^{k-1}
std::vector<std::vector<Rat>> primitive_kernel(const GradedAlgebra& alg, const ChowClass& L, int k) {
    const auto& b = alg.bases[k];
    if (k == 0) {
        // the target A^{D+1} vanishes, so all of A^0 is primitive
        return {{Rat(1)}};
    }
    const auto& dual = alg.bases[k - 1];
    ChowClass lp = power(L, alg.D - 2 * k + 1);
    // rows: constraints (one per dual element); cols: basis of A^k
    std::vector<std::vector<Rat>> m(dual.size(), std::vector<Rat>(b.size()));
    for (std::size_t r = 0; r < dual.size(); ++r)
        for (std::size_t c = 0; c < b.size(); ++c)
            m[r][c] = Rat(integrate(multiply(multiply(b[c], lp), dual[r])));
    // kernel by Gaussian elimination
    const int rows = static_cast<int>(m.size()), cols = static_cast<int>(b.size());
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c] != 0) { p = i; break; }
        if (p < 0) continue;
        std::swap(m[p], m[r]);
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c] / m[r][c];
            for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<std::vector<Rat>> kernel;
    for (int c = 0; c < cols; ++c) {
        if (std::find(pivot_col.begin(), pivot_col.end(), c) != pivot_col.end()) continue;
        std::vector<Rat> v(cols, Rat(0));
        v[c] = 1;
        for (std::size_t pi = 0; pi < pivot_col.size(); ++pi)
            v[pivot_col[pi]] = -m[pi][c] / m[pi][pivot_col[pi]];
        kernel.push_back(std::move(v));
    }
    return kernel;
}

} // namespace

bool satisfies_hr(const GradedAlgebra& alg, const ChowClass& L, int k) {
    auto q = hr_form(alg, L, k);
    auto [p, m] = signature(q);
    if (p + m < static_cast<int>(q.size()))
        throw HardLefschetzFailure("Q_" + std::to_string(k) + " is singular");
    auto kernel = primitive_kernel(alg, L, k);
    // restrict (-1)^k Q_k to the primitive subspace
    const int dim = static_cast<int>(kernel.size());
    std::vector<std::vector<Rat>> qr(dim, std::vector<Rat>(dim, Rat(0)));
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            Rat v(0);
            for (std::size_t a = 0; a < q.size(); ++a)
                for (std::size_t b = 0; b < q.size(); ++b)
                    v += kernel[i][a] * q[a][b] * kernel[j][b];
            qr[i][j] = (k % 2 == 0) ? v : -v;
        }
    auto [pp, mm] = signature(qr);
    return pp == dim && mm == 0;
}

HRReport degree1_hr_m0n(int n, const ChowClass& L) {
    if (L.is_zero()) throw HardLefschetzFailure("zero Lefschetz element");
    auto nef = is_f_nef_class(L);
    if (!nef.f_nef)
        throw FNefViolation("Lefschetz element pairs negatively with F-curve " +
                            to_string(*nef.violating));
    auto alg = chow_algebra(n);
    HRReport rep;
    bool ok0 = false, ok1 = true;
    try {
        ok0 = satisfies_hr(alg, L, 0);
        if (alg.D >= 2) ok1 = satisfies_hr(alg, L, 1);
        rep.hard_lefschetz = true;
    } catch (const HardLefschetzFailure&) {
        rep.hard_lefschetz = false;
        return rep;
    }
    rep.hr = ok0 && ok1;
    auto q = hr_form(alg, L, alg.D >= 2 ? 1 : 0);
    auto [p, m] = signature(q);
    rep.sig_pos = p;
    rep.sig_neg = m;
    return rep;
}

} // namespace m0nlab
