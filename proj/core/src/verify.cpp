#include "m0nlab/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <thread>

#include "m0nlab/cbundle.hpp"
#include "m0nlab/chow.hpp"
#include "m0nlab/fcone.hpp"
#include "m0nlab/lrq.hpp"
#include "m0nlab/polyfaces.hpp"
#include "m0nlab/symaction.hpp"
#include "m0nlab/tphr.hpp"

namespace m0nlab {

namespace {

CriterionResult make(int id, std::string name, bool pass, std::string detail) {
    return CriterionResult{id, std::move(name), pass, std::move(detail)};
}

} // namespace

CriterionResult check_intersection_table() {
    // the five-point table, with the distinguished point carrying label 0
    const int n = 4;
    long long checks = 0, bad = 0;
    std::ostringstream why;
    auto expect = [&](const ChowClass& c, long long want, const char* what) {
        ++checks;
        if (integrate(c) != want) {
            ++bad;
            why << what << " ";
        }
    };
    auto D = [&](std::initializer_list<int> l) {
        return ChowClass::divisor(labels_to_mask(std::vector<int>(l), n), n);
    };
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j) expect(power(D({i, j}), 2), -1, "D_ij^2");
    for (int i = 2; i <= 4; ++i) expect(multiply(D({1, i}), D({i, 0})), 0, "D_1i.D_i0");
    for (int i = 2; i <= 4; ++i)
        for (int j = 2; j <= 4; ++j)
            if (i != j) expect(multiply(D({1, i}), D({j, 0})), 1, "D_1i.D_j0");
    for (int i = 2; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j) expect(multiply(D({1, 0}), D({i, j})), 1, "D_10.D_ij");
    for (int i = 0; i <= 4; ++i) expect(power(ChowClass::psi(i, n), 2), 1, "psi_i^2");
    for (int i = 1; i <= 4; ++i)
        expect(multiply(ChowClass::psi(0, n), ChowClass::psi(i, n)), 2, "psi_0.psi_i");
    // multinomial oracle for the mixed psi products (documented discrepancy:
    // the source table lists 1 here; the multinomial rule gives 2)
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j) {
            std::vector<int> e(n + 1, 0);
            e[i] = e[j] = 1;
            ++checks;
            if (integrate(multiply(ChowClass::psi(i, n), ChowClass::psi(j, n))) !=
                psi_integral(n, e))
                ++bad, why << "psi_i.psi_j ";
        }
    std::ostringstream d;
    d << checks << " table entries, " << bad << " mismatches";
    if (bad) d << " (" << why.str() << ")";
    return make(1, "five-point intersection table", bad == 0, d.str());
}

namespace {

std::vector<SubsetChain> all_chains(int n, int maxlen) {
    std::vector<Mask> pool;
    for (Mask s = 1; s <= bracket_mask(n); ++s) {
        if (!subset_of(s, bracket_mask(n))) continue;
        int sz = popcount(s);
        if (sz >= 2 && sz <= n - 1) pool.push_back(s);
    }
    std::vector<SubsetChain> out;
    SubsetChain cur;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (!cur.links.empty()) out.push_back(cur);
        if (static_cast<int>(cur.links.size()) == maxlen) return;
        for (std::size_t i = start; i < pool.size(); ++i) {
            if (!cur.links.empty() &&
                !(subset_of(cur.links.back(), pool[i]) && cur.links.back() != pool[i]))
                continue;
            cur.links.push_back(pool[i]);
            rec(i + 1);
            cur.links.pop_back();
        }
    };
    rec(0);
    return out;
}

// prediction of the chain-action cases: untouched when m is absent;
// otherwise untouched prefix + (other chain extended by the reversed image
// of the pivot suffix)
bool check_one_chain_case(int n, int m, const std::vector<SubsetChain>& input,
                          std::string& why) {
    auto res = apply_to_chains(m, input, n);
    int with_m = -1;
    for (std::size_t c = 0; c < input.size(); ++c)
        if (contains(input[c].top(), m)) with_m = static_cast<int>(c);
    std::vector<std::vector<Mask>> expected;
    if (with_m < 0) {
        for (const auto& ch : input) expected.push_back(ch.links);
    } else {
        const auto& s = input[with_m].links;
        std::size_t pivot = 0;
        while (!contains(s[pivot], m)) ++pivot;
        std::vector<Mask> prefix(s.begin(), s.begin() + pivot);
        std::vector<Mask> merged;
        for (std::size_t c = 0; c < input.size(); ++c)
            if (static_cast<int>(c) != with_m)
                merged.insert(merged.end(), input[c].links.begin(), input[c].links.end());
        for (std::size_t i = s.size(); i-- > pivot;) merged.push_back(transpose_image(m, s[i], n));
        // the merged image must itself be a strictly increasing chain
        for (std::size_t i = 0; i + 1 < merged.size(); ++i)
            if (!(subset_of(merged[i], merged[i + 1]) && merged[i] != merged[i + 1])) {
                why = "merged image is not a chain";
                return false;
            }
        if (!prefix.empty()) expected.push_back(prefix);
        expected.push_back(merged);
    }
    std::sort(expected.begin(), expected.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    Structure want = expected.size() == 1 ? Structure::SingleChain
                    : expected.size() == 2 ? Structure::TwoDisjointChains
                                           : Structure::ManyDisjointChains;
    if (res.structure != want) {
        why = "structure mismatch";
        return false;
    }
    if (res.chains != expected) {
        why = "image decomposition mismatch";
        return false;
    }
    return true;
}

} // namespace

CriterionResult check_chain_action(int level, int jobs) {
    long long checks = 0, bad = 0;
    std::string first_bad;
    for (int n = 3; n <= std::min(level, 7); ++n) {
        auto chains = all_chains(n, 5);
        if (jobs < 1) jobs = 1;
        std::vector<long long> chk(jobs, 0), bd(jobs, 0);
        std::vector<std::string> firsts(jobs);
        auto work = [&](int t) {
            for (std::size_t i = t; i < chains.size(); i += jobs) {
                // the single chain alone
                for (int m = 1; m <= n; ++m) {
                    std::string why;
                    ++chk[t];
                    if (!check_one_chain_case(n, m, {chains[i]}, why)) {
                        ++bd[t];
                        if (firsts[t].empty()) firsts[t] = why;
                    }
                }
                // disjoint pairs with total length <= 5
                for (std::size_t j = i + 1; j < chains.size(); ++j) {
                    if (chains[i].links.size() + chains[j].links.size() > 5) continue;
                    if (!disjoint(chains[i].top(), chains[j].top())) continue;
                    for (int m = 1; m <= n; ++m) {
                        std::string why;
                        ++chk[t];
                        if (!check_one_chain_case(n, m, {chains[i], chains[j]}, why)) {
                            ++bd[t];
                            if (firsts[t].empty()) firsts[t] = why;
                        }
                    }
                }
            }
        };
        if (jobs == 1) {
            work(0);
        } else {
            std::vector<std::thread> pool;
            for (int t = 0; t < jobs; ++t) pool.emplace_back(work, t);
            for (auto& th : pool) th.join();
        }
        for (int t = 0; t < jobs; ++t) {
            checks += chk[t];
            bad += bd[t];
            if (first_bad.empty()) first_bad = firsts[t];
        }
    }
    std::ostringstream d;
    d << checks << " chain/pair actions, " << bad << " mismatches";
    if (bad) d << " (first: " << first_bad << ")";
    return make(2, "chain action cases (exhaustive)", bad == 0, d.str());
}

CriterionResult check_failure_classification(int level) {
    long long checks = 0, bad = 0;
    long long seen_label[3] = {0, 0, 0};
    long long missing_witness = 0;
    std::string note;
    for (int n = 4; n <= std::min(level, 6); ++n) {
        NestedSet empty;
        empty.n = n;
        enumerate_nested_sets(n, Kind::Minimal, 2 * n, [&](const NestedSet& ns) {
            if (ns.empty()) return;
            for (int m = 1; m <= n; ++m) {
                ++checks;
                try {
                    auto fc = classify_failure(ns, empty, m);
                    if (fc) ++seen_label[static_cast<int>(fc->label)];
                } catch (const std::exception&) {
                    ++bad;
                }
            }
            // witness existence for >= 2 disjoint chains of length >= 2
            auto groups = decompose_chains(ns.elems);
            if (groups && groups->size() >= 2) {
                bool all_long = std::all_of(groups->begin(), groups->end(),
                                            [](const auto& g) { return g.size() >= 2; });
                if (all_long && !find_failure_witness(ns)) ++missing_witness;
            }
        }, 2, n - 1);
    }
    // each label needs a certain ambient size to occur at all: a branching
    // chain fits at n >= 4, a disjoint pair needs n >= 5, three chains n >= 6
    const int top = std::min(level, 6);
    bool labels_ok = seen_label[0] > 0 && (top < 5 || seen_label[1] > 0) &&
                     (top < 6 || seen_label[2] > 0);
    bool census_ok = true;
    if (level >= 5) {
        auto table = count_by_codim(5);
        for (const auto& [codim, row] : table)
            if (codim >= 2 && row.assoc - row.both <= 0) census_ok = false;
        note = "; codim census at n=5 checked";
    }
    std::ostringstream d;
    d << checks << " classifications, " << bad << " errors; label hits "
      << seen_label[0] << "/" << seen_label[1] << "/" << seen_label[2]
      << "; missing witnesses " << missing_witness << note;
    return make(3, "failure classification (exhaustive)",
                bad == 0 && labels_ok && missing_witness == 0 && census_ok, d.str());
}

CriterionResult check_fcurve_action(int level, int jobs) {
    long long checks = 0;
    std::vector<std::string> bad;
    for (int n = 4; n <= std::min(level, 6); ++n) {
        auto rep = verify_extranef(n, jobs);
        checks += rep.checks;
        bad.insert(bad.end(), rep.counterexamples.begin(), rep.counterexamples.end());
    }
    std::ostringstream d;
    d << checks << " (curve, m, S) checks, " << bad.size() << " counterexamples";
    if (!bad.empty()) d << " (first: " << bad.front() << ")";
    return make(4, "F-curve pairing under transpositions (exhaustive)", bad.empty(), d.str());
}

namespace {

void enum_partitions_up_to(int max_size, const std::function<void(const Partition&)>& visit) {
    Partition cur;
    std::function<void(int, int)> rec = [&](int remaining, int prev) {
        visit(cur);
        for (int x = std::min(remaining, prev); x >= 1; --x) {
            cur.push_back(x);
            rec(remaining - x, x);
            cur.pop_back();
        }
    };
    rec(max_size, max_size);
}

bool horizontal_strip(const Partition& nu, const Partition& lam) {
    if (!contains_partition(nu, lam)) return false;
    for (std::size_t i = 0; i + 1 < nu.size(); ++i) {
        int l = (i < lam.size()) ? lam[i] : 0;
        if (nu[i + 1] > l) return false;
    }
    return true;
}

} // namespace

CriterionResult check_lr_stack(int level) {
    long long checks = 0, bad = 0;
    std::string first;
    auto flag = [&](const std::string& why) {
        ++bad;
        if (first.empty()) first = why;
    };

    // symmetry and Pieri for |nu| <= 8
    std::vector<Partition> nus;
    enum_partitions_up_to(8, [&](const Partition& p) { nus.push_back(p); });
    std::sort(nus.begin(), nus.end());
    nus.erase(std::unique(nus.begin(), nus.end()), nus.end());
    std::vector<Partition> small = nus;
    for (const auto& nu : nus) {
        for (const auto& lam : small) {
            if (part_size(lam) > part_size(nu) || !contains_partition(nu, lam)) continue;
            int rest = part_size(nu) - part_size(lam);
            for (const auto& mu : small) {
                if (part_size(mu) != rest) continue;
                ++checks;
                Int c = lr_coeff(lam, mu, nu);
                if (c != lr_coeff(mu, lam, nu)) flag("LR symmetry");
                if (mu.size() == 1 || mu.empty()) {
                    Int want = horizontal_strip(nu, lam) ? 1 : 0;
                    if (mu.empty()) want = (lam == nu) ? 1 : 0;
                    if (c != want) flag("Pieri");
                }
            }
        }
    }

    // quantum degree 0 = classical, on small rectangles
    for (int r1 = 1; r1 <= 2; ++r1)
        for (int cols = 1; cols <= 3; ++cols)
            for (const auto& a : small)
                for (const auto& b : small) {
                    if (!fits_rectangle(a, r1 + 1, cols) || !fits_rectangle(b, r1 + 1, cols))
                        continue;
                    int need = (r1 + 1) * cols - part_size(a) - part_size(b);
                    if (need < 0) continue;
                    for (const auto& c : small) {
                        if (part_size(c) != need || !fits_rectangle(c, r1 + 1, cols)) continue;
                        ++checks;
                        if (quantum_lr({a, b, c}, r1 + 1, r1 + 1 + cols, 0) !=
                            multi_lr({a, b, c}, r1 + 1, cols))
                            flag("quantum degree 0");
                    }
                }

    // sl2 dictionary vs the Verlinde oracle, every weight tuple, with the
    // factorization identity on every split
    std::map<std::pair<int, std::vector<int>>, Int> cache;
    auto rank_sl2 = [&](int ell, std::vector<int> w) {
        std::sort(w.begin(), w.end());
        auto key = std::make_pair(ell, w);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        std::vector<Partition> ps;
        for (int a : w)
            if (a > 0) ps.push_back(Partition{a});
            else ps.push_back(Partition{});
        Int r = conformal_rank(LevelAlphabet{1, ell}, ps);
        cache.emplace(key, r);
        return r;
    };
    int max_points = std::min(level + 1, 6);
    for (int ell = 1; ell <= 3; ++ell) {
        for (int pts = 3; pts <= max_points; ++pts) {
            std::vector<int> w(pts, 0);
            for (;;) {
                Int r = rank_sl2(ell, w);
                ++checks;
                if (r != verlinde_rank_sl2(ell, w)) flag("Verlinde mismatch");
                // factorization over every unordered split with both sides >= 1
                for (unsigned split = 1; split + 1 < (1u << pts); split += 2) {
                    // odd masks only: leg 0 stays left, each split once
                    std::vector<int> lw, rw;
                    for (int i = 0; i < pts; ++i)
                        ((split >> i) & 1 ? lw : rw).push_back(w[i]);
                    Int sum = 0;
                    for (int mu = 0; mu <= ell; ++mu) {
                        auto l2 = lw, r2 = rw;
                        l2.push_back(mu);
                        r2.push_back(mu); // sl2 weights are self-dual
                        sum += rank_sl2(ell, l2) * rank_sl2(ell, r2);
                    }
                    ++checks;
                    if (sum != r) flag("factorization");
                }
                int i = pts - 1;
                while (i >= 0 && w[i] == ell) w[i--] = 0;
                if (i < 0) break;
                ++w[i];
            }
        }
    }
    std::ostringstream d;
    d << checks << " LR/rank checks, " << bad << " mismatches";
    if (bad) d << " (first: " << first << ")";
    return make(5, "LR stack vs oracles", bad == 0, d.str());
}

CriterionResult check_log_concavity(int level) {
    long long seqs = 0, bad = 0;
    std::string first;
    auto flag = [&](const std::string& why) {
        ++bad;
        if (first.empty()) first = why;
    };
    auto psi_total = [](int n) {
        ChowClass c = ChowClass::zero(n);
        for (int i = 0; i <= n; ++i) c += ChowClass::psi(i, n);
        return QClass::of(c);
    };
    for (const auto& entry : catalog_specs()) {
        const int n = entry.spec.n();
        if (n > level) continue;
        QClass c1 = c1_conformal(entry.spec);
        if (!c1.is_zero() && !is_f_nef_class(c1.num).f_nef) {
            flag(entry.name + ": c1 not F-nef");
            continue;
        }
        QClass alpha = psi_total(n);
        try {
            auto s1 = kt_sequence(alpha, c1);
            ++seqs;
            if (!is_log_concave(s1.values).ok) flag(entry.name + ": kt(alpha, c1)");
            auto s2 = kt_sequence(c1, alpha);
            ++seqs;
            if (!is_log_concave(s2.values).ok) flag(entry.name + ": kt(c1, alpha)");
            auto s3 = chern_degree_sequence(alpha, chern_powers_of_c1(c1, n - 2));
            ++seqs;
            if (!is_log_concave(s3.values).ok) flag(entry.name + ": chern sequence");
        } catch (const std::exception& e) {
            flag(entry.name + ": " + e.what());
        }
    }
    // twist polynomials of rank-2 split bundles, top-degree normalization
    for (int n = 4; n <= std::min(level, 5); ++n) {
        QClass l1 = psi_total(n);
        ChowClass l2c = ChowClass::psi(0, n);
        l2c += ChowClass::psi(1, n);
        QClass l2 = QClass::of(l2c);
        const int d = n - 2;
        std::vector<QClass> p(d + 1, QClass{ChowClass::zero(n), 1});
        for (int k = 1; k <= d; ++k) p[k] = qadd(qpow(l1, k), qpow(l2, k));
        std::vector<QClass> cherns;
        for (int k = 0; k <= d; ++k) cherns.push_back(chern_from_power_sums(p, k));
        try {
            auto tp = twist_polynomial(cherns, 2, l1, d);
            ++seqs;
            if (!tp.verdict.ok) flag("twist polynomial n=" + std::to_string(n));
        } catch (const std::exception& e) {
            flag(std::string("twist: ") + e.what());
        }
    }
    std::ostringstream d;
    d << seqs << " sequences, " << bad << " violations";
    if (bad) d << " (first: " << first << ")";
    return make(6, "log-concavity over the catalog", bad == 0, d.str());
}

CriterionResult check_toeplitz_hr() {
    long long bad = 0;
    std::string first;
    auto flag = [&](const std::string& why) {
        ++bad;
        if (first.empty()) first = why;
    };
    // exponential (Pascal-type) diagonals are totally positive
    ToeplitzLT pascal;
    Rat f(1);
    for (int k = 0; k < 4; ++k) {
        if (k > 0) f /= k;
        pascal.diagonals.push_back(f);
    }
    if (!is_totally_positive(pascal, 4).totally_positive) flag("Pascal TP");
    // planted negative entry: first violating minor is the 1x1 at a_2
    ToeplitzLT plant;
    plant.diagonals = {Rat(1), Rat(1), Rat(-1)};
    auto res = is_totally_positive(plant, 3);
    if (res.totally_positive) flag("planted negative passed");
    else if (!res.violation || res.violation->rows != std::vector<int>{2} ||
             res.violation->cols != std::vector<int>{0})
        flag("wrong violating minor");
    // degree-1 HR on the five-point Chow ring
    ChowClass L = ChowClass::zero(4);
    for (int i = 0; i <= 4; ++i) L += ChowClass::psi(i, 4);
    auto rep = degree1_hr_m0n(4, L);
    if (!rep.hard_lefschetz) flag("Hard Lefschetz");
    if (!rep.hr) flag("HR verdict");
    if (rep.sig_pos != 1 || rep.sig_neg != 4) flag("signature");
    std::ostringstream d;
    d << "TP examples + HR at n=4 (signature " << rep.sig_pos << "," << rep.sig_neg << "); "
      << bad << " failures";
    if (bad) d << " (first: " << first << ")";
    return make(7, "Toeplitz positivity and Hodge-Riemann", bad == 0, d.str());
}

std::vector<CriterionResult> run_all(int level, int jobs) {
    return {
        check_intersection_table(),
        check_chain_action(level, jobs),
        check_failure_classification(level),
        check_fcurve_action(level, jobs),
        check_lr_stack(level),
        check_log_concavity(level),
        check_toeplitz_hr(),
    };
}

} // namespace m0nlab
