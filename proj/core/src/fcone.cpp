#include "m0nlab/fcone.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

namespace m0nlab {

std::string to_string(const FCurve& c) {
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < 4; ++i) os << (i ? "|" : "") << mask_to_string(c.blocks[i]);
    os << ']';
    return os.str();
}

void enumerate_fcurves(int n, const std::function<void(const FCurve&)>& visit) {
    if (n < 3) throw PreconditionViolation("F-curves need at least 4 marked points");
    // restricted growth: label 0 goes to block 0; each later label joins an
    // existing block or the next fresh one; yields each partition once with
    // blocks sorted by minimum element
    std::vector<int> assign(n + 1, 0);
    std::function<void(int, int)> rec = [&](int label, int used) {
        if (label > n) {
            if (used != 4) return;
            FCurve c;
            c.n = n;
            for (int l = 0; l <= n; ++l) c.blocks[assign[l]] |= Mask{1} << l;
            visit(c);
            return;
        }
        int cap = std::min(used + 1, 4);
        for (int b = 0; b < cap; ++b) {
            assign[label] = b;
            rec(label + 1, std::max(used, b + 1));
        }
    };
    assign[0] = 0;
    rec(1, 1);
}

std::vector<FCurve> collect_fcurves(int n) {
    std::vector<FCurve> out;
    enumerate_fcurves(n, [&](const FCurve& c) { out.push_back(c); });
    return out;
}

int pairing(Mask s, const FCurve& c) {
    Mask sc = full_mask(c.n) & ~s;
    for (int i = 0; i < 4; ++i) {
        if (s == c.blocks[i] || sc == c.blocks[i]) return -1;
        for (int j = i + 1; j < 4; ++j) {
            Mask u = c.blocks[i] | c.blocks[j];
            if (s == u || sc == u) return 1;
        }
    }
    return 0;
}

Mask transpose_label(int m, Mask s, int n) {
    if (!contains(s, m)) return s;
    return complement_in(s, n) | (Mask{1} << m);
}

FNefResult is_f_nef(const std::map<Mask, Int>& d, int n) {
    FNefResult res;
    res.f_nef = true;
    enumerate_fcurves(n, [&](const FCurve& c) {
        if (!res.f_nef) return;
        Int v = 0;
        for (const auto& [s, k] : d) v += k * pairing(s, c);
        if (v < 0) {
            res.f_nef = false;
            res.violating = c;
        }
    });
    return res;
}

std::map<Mask, Int> divisor_map_of(const ChowClass& c) {
    if (c.homogeneous_degree() > 1)
        throw DegreeError("divisor_map_of needs a degree-1 class");
    std::map<Mask, Int> d;
    for (const auto& [mono, coeff] : c.terms) {
        if (!mono.divs.empty()) {
            d[mono.divs[0]] += coeff;
        } else if (!mono.psis.empty()) {
            int i = mono.psis[0];
            int j = (i != 0) ? 0 : 1;
            int k = (i != 1 && j != 1) ? 1 : 2;
            if (k == i) k = 3;
            ChowClass rep = psi_as_divisors(i, j, k, c.n);
            for (const auto& [m2, c2] : rep.terms) d[m2.divs[0]] += coeff * c2;
        }
    }
    for (auto it = d.begin(); it != d.end();)
        it = (it->second == 0) ? d.erase(it) : std::next(it);
    return d;
}

FNefResult is_f_nef_class(const ChowClass& c) { return is_f_nef(divisor_map_of(c), c.n); }

Int pair_class(const ChowClass& c, const FCurve& curve) {
    Int v = 0;
    for (const auto& [s, k] : divisor_map_of(c)) v += k * pairing(s, curve);
    return v;
}

namespace {

int block_of(const FCurve& c, int label) {
    for (int i = 0; i < 4; ++i)
        if (contains(c.blocks[i], label)) return i;
    return -1;
}

void sweep_curve(const FCurve& c, int n, long long& checks, std::vector<std::string>& bad) {
    Mask full = full_mask(n);
    for (int m = 1; m <= n; ++m) {
        bool m_is_block = false;
        for (int i = 0; i < 4; ++i)
            if (c.blocks[i] == (Mask{1} << m)) m_is_block = true;
        for (Mask s = 0; s <= full; ++s) {
            if (!contains(s, m)) continue;
            int sz = popcount(s);
            if (sz < 2 || sz > n - 1) continue;
            int p = pairing(s, c);
            int pim = pairing(transpose_label(m, s, n), c);
            ++checks;
            auto report = [&](const char* what) {
                std::ostringstream os;
                os << what << ": C=" << to_string(c) << " m=" << m
                   << " S=" << mask_to_string(s) << " pairing " << p << " -> " << pim;
                bad.push_back(os.str());
            };
            if (!m_is_block) {
                if (p != 0 && pim != 0) report("nonblock vanishing");
                // two elements of S whose blocks stick out of (S \ m) u {0}
                Mask core = (s & ~(Mask{1} << m)) | Mask{1};
                int stray = 0;
                for (int x : mask_to_labels(s))
                    if ((c.blocks[block_of(c, x)] & ~core) != 0) ++stray;
                if (stray >= 2 && pim != 0) report("stray-element vanishing");
            } else {
                if (p == 1 && pim != -1) report("flip +1 -> -1");
                if (p == -1 && pim != 1) report("flip -1 -> +1");
            }
        }
    }
}

} // namespace

ExtranefReport verify_extranef(int n, int jobs) {
    if (n > 7) throw PreconditionViolation("verify_extranef is capped at n = 7");
    auto curves = collect_fcurves(n);
    if (jobs < 1) jobs = 1;
    jobs = std::min<std::size_t>(jobs, curves.size());
    std::vector<long long> checks(curves.size(), 0);
    std::vector<std::vector<std::string>> bad(curves.size());
    auto work = [&](std::size_t t) {
        for (std::size_t i = t; i < curves.size(); i += jobs)
            sweep_curve(curves[i], n, checks[i], bad[i]);
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }
    ExtranefReport rep;
    for (std::size_t i = 0; i < curves.size(); ++i) {
        rep.checks += checks[i];
        rep.counterexamples.insert(rep.counterexamples.end(), bad[i].begin(), bad[i].end());
    }
    return rep;
}

} // namespace m0nlab
