#include "m0nlab/lrq.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

#include "m0nlab/errors.hpp"

namespace m0nlab {

Partition normalize_partition(std::vector<int> parts) {
    for (int p : parts)
        if (p < 0) throw PreconditionViolation("partition parts must be nonnegative");
    std::sort(parts.begin(), parts.end(), std::greater<>());
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    for (std::size_t i = 0; i + 1 < parts.size(); ++i)
        if (parts[i] < parts[i + 1]) throw PreconditionViolation("not weakly decreasing");
    return parts;
}

int part_size(const Partition& p) {
    int s = 0;
    for (int x : p) s += x;
    return s;
}

bool fits_rectangle(const Partition& p, int rows, int cols) {
    if (static_cast<int>(p.size()) > rows) return false;
    return p.empty() || p[0] <= cols;
}

bool contains_partition(const Partition& outer, const Partition& inner) {
    if (inner.size() > outer.size()) return false;
    for (std::size_t i = 0; i < inner.size(); ++i)
        if (inner[i] > outer[i]) return false;
    return true;
}

Partition rectangle_dual(const Partition& p, int rows, int cols) {
    if (!fits_rectangle(p, rows, cols))
        throw PreconditionViolation("partition does not fit the rectangle");
    Partition d;
    for (int i = rows - 1; i >= 0; --i) {
        int pi = (i < static_cast<int>(p.size())) ? p[i] : 0;
        if (cols - pi > 0) d.push_back(cols - pi);
    }
    return d;
}

Partition contragredient(const Partition& p, int r) {
    std::vector<int> padded(r + 1, 0);
    if (static_cast<int>(p.size()) > r + 1)
        throw PreconditionViolation("weight has more than r+1 rows");
    for (std::size_t i = 0; i < p.size(); ++i) padded[i] = p[i];
    Partition d;
    for (int i = r; i >= 1; --i) d.push_back(padded[0] - padded[i]);
    return normalize_partition(d);
}

Int lr_coeff(const Partition& lam, const Partition& mu, const Partition& nu) {
    if (part_size(lam) + part_size(mu) != part_size(nu)) return 0;
    if (!contains_partition(nu, lam)) return 0;
    if (mu.empty()) return 1;

    const int rows = static_cast<int>(nu.size());
    const int vals = static_cast<int>(mu.size());
    // cells in reverse reading order (rows top-down, right-to-left): this
    // order makes the lattice condition a local check
    struct Cell { int r, c; };
    std::vector<Cell> cells;
    for (int r = 0; r < rows; ++r) {
        int lo = (r < static_cast<int>(lam.size())) ? lam[r] : 0;
        for (int c = nu[r] - 1; c >= lo; --c) cells.push_back({r, c});
    }
    std::vector<std::vector<int>> grid(rows);
    for (int r = 0; r < rows; ++r) grid[r].assign(nu[r], 0);
    std::vector<int> counts(vals, 0);

    Int total = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        if (idx == cells.size()) {
            ++total;
            return;
        }
        auto [r, c] = cells[idx];
        int lam_above = (r > 0 && r - 1 < static_cast<int>(lam.size())) ? lam[r - 1] : 0;
        for (int v = 1; v <= vals; ++v) {
            if (counts[v - 1] >= mu[v - 1]) continue;
            if (v >= 2 && counts[v - 2] <= counts[v - 1]) continue; // lattice
            if (c + 1 < nu[r] && v > grid[r][c + 1]) continue;      // rows weak
            if (r > 0 && c >= lam_above && v <= grid[r - 1][c]) continue; // cols strict
            grid[r][c] = v;
            ++counts[v - 1];
            rec(idx + 1);
            --counts[v - 1];
            grid[r][c] = 0;
        }
    };
    rec(0);
    return total;
}

namespace {

// all nu with rows(nu) <= rows, nu_i <= min(cols, prev), nu contains sigma,
// |nu| = target
void enum_super(const Partition& sigma, int rows, int cols, int target,
                const std::function<void(const Partition&)>& visit) {
    Partition nu;
    std::function<void(int, int, int)> rec = [&](int row, int remaining, int prev) {
        if (remaining == 0) {
            // remaining sigma rows must be exhausted
            if (static_cast<int>(sigma.size()) <= row) visit(nu);
            return;
        }
        if (row >= rows) return;
        int lo = (row < static_cast<int>(sigma.size())) ? sigma[row] : 1;
        int hi = std::min({cols, prev, remaining});
        for (int x = hi; x >= std::max(lo, 1); --x) {
            nu.push_back(x);
            rec(row + 1, remaining - x, x);
            nu.pop_back();
        }
    };
    rec(0, target, cols);
}

std::map<Partition, Int> expand_product(const std::vector<Partition>& lams, int rows, int cols) {
    std::map<Partition, Int> state;
    state[Partition{}] = 1;
    for (const auto& lam : lams) {
        std::map<Partition, Int> next;
        for (const auto& [sigma, coeff] : state) {
            int target = part_size(sigma) + part_size(lam);
            enum_super(sigma, rows, cols, target, [&](const Partition& nu) {
                Int c = lr_coeff(sigma, lam, nu);
                if (c != 0) next[nu] += coeff * c;
            });
        }
        state = std::move(next);
    }
    return state;
}

} // namespace

Int multi_lr(const std::vector<Partition>& lams, int rows, int cols) {
    if (rows <= 0 || cols < 0) return 0;
    int total = 0;
    for (const auto& l : lams) total += part_size(l);
    if (total != rows * cols) return 0;
    if (cols == 0) return 1; // all factors forced empty by the size check
    auto state = expand_product(lams, rows, cols);
    Partition rect(rows, cols);
    auto it = state.find(rect);
    return it == state.end() ? Int(0) : it->second;
}

std::vector<Partition> LevelAlphabet::members() const {
    std::vector<Partition> out;
    Partition cur;
    std::function<void(int, int)> rec = [&](int row, int prev) {
        out.push_back(cur);
        if (row >= r) return;
        for (int x = 1; x <= prev; ++x) {
            cur.push_back(x);
            rec(row + 1, x);
            cur.pop_back();
        }
    };
    rec(0, ell);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Int quantum_lr(const std::vector<Partition>& lams, int k, int N, int d) {
    if (k <= 0 || N <= k || d < 0) return 0;
    int total = 0;
    for (const auto& l : lams) total += part_size(l);
    if (total != k * (N - k) + d * N) return 0;

    // classical expansion constrained to <= k rows, width unbounded
    auto state = expand_product(lams, k, total);

    Partition box;
    for (int i = 0; i < k; ++i) box.push_back(N - k);
    if (N - k == 0) box.clear();

    Int result = 0;
    for (const auto& [nu, coeff] : state) {
        // beta-numbers; reduce N-rim-hooks, largest valid beta first
        std::vector<int> beta(k);
        for (int i = 0; i < k; ++i)
            beta[i] = ((i < static_cast<int>(nu.size())) ? nu[i] : 0) + (k - 1 - i);
        int sign = 1;
        bool dead = false;
        auto over_box = [&]() {
            for (int i = 0; i < k; ++i)
                if (beta[i] - (k - 1 - i) > N - k) return true;
            return false;
        };
        auto sorted_desc = [&]() { std::sort(beta.begin(), beta.end(), std::greater<>()); };
        sorted_desc();
        while (over_box()) {
            int pick = -1;
            for (int i = 0; i < k; ++i) {
                int nb = beta[i] - N;
                if (nb < 0) continue;
                if (std::find(beta.begin(), beta.end(), nb) != beta.end()) continue;
                pick = i;
                break; // betas sorted descending: first hit is the largest
            }
            if (pick < 0) { dead = true; break; }
            int old = beta[pick], nb = old - N;
            int crossed = 0;
            for (int b : beta)
                if (b > nb && b < old) ++crossed;
            int ht = crossed + 1;
            if ((k - ht) % 2 == 1) sign = -sign;
            beta[pick] = nb;
            sorted_desc();
        }
        if (dead) continue;
        Partition mu;
        for (int i = 0; i < k; ++i) {
            int p = beta[i] - (k - 1 - i);
            if (p > 0) mu.push_back(p);
        }
        if (mu == box) result += sign * coeff;
    }
    if (result < 0)
        throw std::runtime_error("quantum LR number came out negative; rim-hook bookkeeping bug");
    return result;
}

Int conformal_rank(const LevelAlphabet& alphabet, const std::vector<Partition>& weights) {
    const int r = alphabet.r, ell = alphabet.ell;
    if (r < 1 || ell < 1) throw PreconditionViolation("need r >= 1 and level >= 1");
    int total = 0;
    for (const auto& w : weights) {
        if (!fits_rectangle(w, r, ell))
            throw PreconditionViolation("weight does not fit the r x level rectangle");
        total += part_size(w);
    }
    if (total % (r + 1) != 0) return 0;
    int s = total / (r + 1) - ell;
    if (s <= 0) {
        if (ell + s < 0) return 0;
        return multi_lr(weights, r + 1, ell + s);
    }
    std::vector<Partition> lams = weights;
    for (int i = 0; i < s; ++i) lams.push_back(Partition{ell});
    return quantum_lr(lams, r + 1, r + 1 + ell, s);
}

Int rank_by_factorization(const LevelAlphabet& alphabet,
                          const std::vector<Partition>& weights,
                          const std::vector<int>& left_legs) {
    std::vector<bool> is_left(weights.size(), false);
    for (int i : left_legs) {
        if (i < 0 || i >= static_cast<int>(weights.size()))
            throw PreconditionViolation("split index out of range");
        is_left[i] = true;
    }
    std::vector<Partition> left, right;
    for (std::size_t i = 0; i < weights.size(); ++i)
        (is_left[i] ? left : right).push_back(weights[i]);
    if (left.empty() || right.empty())
        throw PreconditionViolation("both sides of the split must be nonempty");
    Int total = 0;
    for (const auto& mu : alphabet.members()) {
        auto l = left, r = right;
        l.push_back(mu);
        r.push_back(contragredient(mu, alphabet.r));
        total += conformal_rank(alphabet, l) * conformal_rank(alphabet, r);
    }
    return total;
}

Int verlinde_rank_sl2(int ell, const std::vector<int>& weights) {
    const int q = ell + 2;
    const long double pi = 3.14159265358979323846264338327950288L;
    long double rank = 0;
    int n = static_cast<int>(weights.size());
    for (int b = 0; b <= ell; ++b) {
        long double s0 = std::sqrt(2.0L / q) * std::sin(pi * (b + 1) / q);
        long double term = std::pow(s0, -(n - 2));
        for (int a : weights) {
            if (a < 0 || a > ell) throw PreconditionViolation("sl2 weight out of [0, level]");
            term *= std::sqrt(2.0L / q) * std::sin(pi * (a + 1) * (b + 1) / q);
        }
        rank += term;
    }
    long double rounded = std::round(rank);
    if (std::fabs(rank - rounded) > 1e-6L)
        throw std::runtime_error("Verlinde sum is not within tolerance of an integer");
    return Int(static_cast<long long>(rounded));
}

} // namespace m0nlab
