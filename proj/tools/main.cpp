#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "m0nlab/cbundle.hpp"
#include "m0nlab/chow.hpp"
#include "m0nlab/expr.hpp"
#include "m0nlab/fcone.hpp"
#include "m0nlab/lrq.hpp"
#include "m0nlab/polyfaces.hpp"
#include "m0nlab/symaction.hpp"
#include "m0nlab/tphr.hpp"
#include "m0nlab/verify.hpp"

using nlohmann::json;
using namespace m0nlab;

namespace {

int resolve_jobs(int jobs_flag) {
    if (jobs_flag > 0) return jobs_flag;
    if (const char* env = std::getenv("M0NLAB_JOBS")) {
        int j = std::atoi(env);
        if (j > 0) return j;
    }
    return 1;
}

Partition parse_partition(const std::string& text) {
    std::vector<int> parts;
    std::string cur;
    for (char c : text + ",") {
        if (c == ',') {
            if (!cur.empty()) parts.push_back(std::stoi(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    return normalize_partition(parts);
}

std::vector<Partition> parse_weights(const std::string& text) {
    std::vector<Partition> out;
    std::string cur;
    for (char c : text + ";") {
        if (c == ';') {
            out.push_back(cur.empty() || cur == "0" ? Partition{} : parse_partition(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    return out;
}

Rat parse_rat(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rat(Int(text));
    return Rat(Int(text.substr(0, slash)), Int(text.substr(slash + 1)));
}

json subset_json(Mask m) {
    json a = json::array();
    for (int x : mask_to_labels(m)) a.push_back(x);
    return a;
}

std::string chain_str(const NestedSet& ns) {
    std::string out;
    for (Mask s : ns.elems) {
        if (!out.empty()) out += "|";
        out += mask_to_string(s);
    }
    return out;
}

json nested_json(const NestedSet& ns) {
    json a = json::array();
    for (Mask s : ns.elems) a.push_back(subset_json(s));
    return a;
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact combinatorics of the moduli space of stable rational curves"};
    app.require_subcommand(1);
    int jobs_flag = 0;
    app.add_option("--jobs", jobs_flag, "worker threads (env M0NLAB_JOBS)");

    // symaction classify
    auto* sym = app.add_subcommand("symaction", "transposition action on nested sets");
    auto* classify = sym->add_subcommand("classify", "classify a failure case");
    int cl_n = 0, cl_m = 0;
    std::string cl_nested;
    classify->add_option("--n", cl_n, "ambient n (points 0..n)")->required();
    classify->add_option("--m", cl_m, "transposition label")->required();
    classify->add_option("--nested", cl_nested, "JSON array of subsets of {1..n}")->required();

    // polyfaces witnesses / census
    auto* poly = app.add_subcommand("polyfaces", "nestohedron faces");
    auto* wit = poly->add_subcommand("witnesses", "witness quadruples");
    int w_n = 0, w_codim = 2;
    std::string w_format = "json";
    wit->add_option("--n", w_n)->required();
    wit->add_option("--max-codim", w_codim);
    wit->add_option("--format", w_format)->check(CLI::IsMember({"json", "csv"}));
    auto* census = poly->add_subcommand("census", "face-pair counts by codimension");
    int ce_n = 0;
    census->add_option("--n", ce_n)->required();

    // chow integrate
    auto* chow = app.add_subcommand("chow", "Chow ring");
    auto* integ = chow->add_subcommand("integrate", "top-degree integral of an expression");
    int ch_n = 0;
    std::string ch_expr;
    integ->add_option("--n", ch_n)->required();
    integ->add_option("--expr", ch_expr)->required();

    // fcone check
    auto* fc = app.add_subcommand("fcone", "F-curves and the F-nef cone");
    auto* fcheck = fc->add_subcommand("check", "F-nef membership with certificate");
    int fc_n = 0;
    std::string fc_div;
    fcheck->add_option("--n", fc_n)->required();
    fcheck->add_option("--divisor", fc_div, "JSON [{\"set\":[..],\"coeff\":\"k\"}]")->required();

    // lr classical / lr rank
    auto* lr = app.add_subcommand("lr", "Littlewood-Richardson and conformal ranks");
    auto* lrc = lr->add_subcommand("classical", "classical LR coefficient");
    std::string lam_s, mu_s, nu_s;
    lrc->add_option("--lam", lam_s)->required();
    lrc->add_option("--mu", mu_s)->required();
    lrc->add_option("--nu", nu_s)->required();
    auto* lrr = lr->add_subcommand("rank", "conformal-block rank");
    int lr_r = 1, lr_level = 1;
    std::string lr_weights;
    lrr->add_option("--r", lr_r)->required();
    lrr->add_option("--level", lr_level)->required();
    lrr->add_option("--weights", lr_weights, "semicolon-separated partitions")->required();

    // cbundle sequence / twist
    auto* cb = app.add_subcommand("cbundle", "Chern data of conformal blocks");
    auto* seq = cb->add_subcommand("sequence", "Khovanskii-Teissier degree sequence");
    int sq_r = 1, sq_level = 1;
    std::string sq_weights, sq_alpha;
    seq->add_option("--r", sq_r)->required();
    seq->add_option("--level", sq_level)->required();
    seq->add_option("--weights", sq_weights, "one partition per leg 0..n")->required();
    seq->add_option("--alpha", sq_alpha, "degree-1 expression (default: sum of psi)");
    auto* tw = cb->add_subcommand("twist", "twist polynomial of a rank-2 split bundle");
    int tw_n = 0, tw_k = 0;
    std::string tw_l1, tw_l2, tw_by;
    tw->add_option("--n", tw_n)->required();
    tw->add_option("--k", tw_k)->required();
    tw->add_option("--line1", tw_l1, "c1 of the first summand (expression)")->required();
    tw->add_option("--line2", tw_l2, "c1 of the second summand (expression)")->required();
    tw->add_option("--twist-by", tw_by, "c1 of the twisting line bundle")->required();

    // tphr tp / m0n
    auto* tp = app.add_subcommand("tphr", "total positivity and Hodge-Riemann");
    auto* tpt = tp->add_subcommand("tp", "total positivity of a Toeplitz truncation");
    std::string tp_diag;
    int tp_size = 0;
    tpt->add_option("--diagonals", tp_diag, "comma-separated rationals a_0,a_1,...")->required();
    tpt->add_option("--size", tp_size)->required();
    auto* tpm = tp->add_subcommand("m0n", "degree-1 HR on the Chow ring");
    int tpm_n = 0;
    std::string tpm_lef;
    tpm->add_option("--n", tpm_n)->required();
    tpm->add_option("--lefschetz", tpm_lef, "degree-1 expression")->required();

    // verify-all
    auto* ver = app.add_subcommand("verify-all", "run the whole verification suite");
    int ver_n = 4;
    ver->add_option("--n", ver_n, "sweep cap (each check also has a hard cap)");

    // let --jobs (declared on the root) be given after any subcommand
    std::function<void(CLI::App*)> allow_fallthrough = [&](CLI::App* a) {
        a->fallthrough();
        for (auto* sub : a->get_subcommands({})) allow_fallthrough(sub);
    };
    allow_fallthrough(&app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    int jobs = resolve_jobs(jobs_flag);
    try {
        if (*classify) {
            auto arr = json::parse(cl_nested);
            std::vector<Mask> elems;
            for (const auto& sub : arr)
                elems.push_back(labels_to_mask(sub.get<std::vector<int>>(), cl_n));
            NestedSet ns(elems, Kind::Minimal, cl_n);
            NestedSet empty;
            empty.n = cl_n;
            auto fc_res = classify_failure(ns, empty, cl_m);
            if (!fc_res) emit(json(nullptr));
            else
                emit(json{{"label", failure_label_name(fc_res->label)},
                          {"witness_m", fc_res->witness_m},
                          {"detail", fc_res->detail}});
        } else if (*wit) {
            if (w_n > 7) { std::cerr << "witness sweeps are capped at n = 7\n"; return 3; }
            if (w_format == "csv") {
                std::cout << "codim,F1,F2,failure_label,witness_m\n";
                enumerate_witnesses(w_n, w_codim, [&](const WitnessQuadruple& q) {
                    std::cout << q.f1.nested.size() << ","
                              << chain_str(q.f1.nested) << ","
                              << chain_str(q.f2.nested) << ","
                              << (q.failure.witness_m ? failure_label_name(q.failure.label) : "")
                              << "," << q.failure.witness_m << "\n";
                });
            } else {
                json out = json::array();
                enumerate_witnesses(w_n, w_codim, [&](const WitnessQuadruple& q) {
                    json e{{"codim", q.f1.nested.size()},
                           {"F1", nested_json(q.f1.nested)},
                           {"F2", nested_json(q.f2.nested)},
                           {"witness_m", q.failure.witness_m}};
                    e["failure_label"] =
                        q.failure.witness_m ? json(failure_label_name(q.failure.label)) : json(nullptr);
                    out.push_back(e);
                });
                emit(out);
            }
        } else if (*census) {
            if (ce_n > 8) { std::cerr << "census is capped at n = 8\n"; return 3; }
            json out = json::array();
            for (const auto& [codim, row] : count_by_codim(ce_n))
                out.push_back(json{{"codim", codim},
                                   {"associahedron_pairs", row.assoc},
                                   {"permutohedron_pairs", row.both}});
            emit(out);
        } else if (*integ) {
            Int v = integrate(parse_chow_expr(ch_expr, ch_n));
            emit(json{{"value", v.str()}});
        } else if (*fcheck) {
            std::map<Mask, Int> d;
            for (const auto& item : json::parse(fc_div)) {
                Mask s = canonicalize_divisor(
                    labels_to_mask(item.at("set").get<std::vector<int>>(), fc_n), fc_n);
                d[s] += Int(item.at("coeff").get<std::string>());
            }
            auto res = is_f_nef(d, fc_n);
            json out{{"f_nef", res.f_nef}};
            if (res.violating) {
                json blocks = json::array();
                for (Mask b : res.violating->blocks) blocks.push_back(subset_json(b));
                out["violating_curve"] = blocks;
            } else {
                out["violating_curve"] = json(nullptr);
            }
            emit(out);
        } else if (*lrc) {
            emit(json{{"value",
                       lr_coeff(parse_partition(lam_s), parse_partition(mu_s),
                                parse_partition(nu_s))
                           .str()}});
        } else if (*lrr) {
            emit(json{{"value",
                       conformal_rank(LevelAlphabet{lr_r, lr_level}, parse_weights(lr_weights))
                           .str()}});
        } else if (*seq) {
            auto weights = parse_weights(sq_weights);
            int n = static_cast<int>(weights.size()) - 1;
            if (n < 3) { std::cerr << "need at least 4 legs\n"; return 3; }
            ConformalBlockSpec spec{LevelAlphabet{sq_r, sq_level}, weights};
            QClass c1 = c1_conformal(spec);
            ChowClass alpha_c = ChowClass::zero(n);
            if (sq_alpha.empty())
                for (int i = 0; i <= n; ++i) alpha_c += ChowClass::psi(i, n);
            else
                alpha_c = parse_chow_expr(sq_alpha, n);
            auto s = kt_sequence(QClass::of(alpha_c), c1);
            json vals = json::array();
            for (const auto& v : s.values) vals.push_back(v.str());
            emit(json{{"values", vals}, {"log_concave", is_log_concave(s.values).ok}});
        } else if (*tw) {
            QClass l1 = QClass::of(parse_chow_expr(tw_l1, tw_n));
            QClass l2 = QClass::of(parse_chow_expr(tw_l2, tw_n));
            QClass by = QClass::of(parse_chow_expr(tw_by, tw_n));
            std::vector<QClass> p(tw_k + 1, QClass{ChowClass::zero(tw_n), 1});
            for (int k = 1; k <= tw_k; ++k) p[k] = qadd(qpow(l1, k), qpow(l2, k));
            std::vector<QClass> cherns;
            for (int k = 0; k <= tw_k; ++k) cherns.push_back(chern_from_power_sums(p, k));
            auto tpoly = twist_polynomial(cherns, 2, by, tw_k);
            json coeffs = json::array();
            for (const auto& c : tpoly.coeffs) coeffs.push_back(to_string(c.num) +
                                                               (c.den == 1 ? "" : "/" + c.den.str()));
            json norm = json::array();
            for (const auto& v : tpoly.normalized) norm.push_back(v.str());
            emit(json{{"coeffs", coeffs}, {"normalized", norm}, {"log_concave", tpoly.verdict.ok}});
        } else if (*tpt) {
            ToeplitzLT m;
            std::string cur;
            for (char c : tp_diag + ",") {
                if (c == ',') {
                    if (!cur.empty()) m.diagonals.push_back(parse_rat(cur));
                    cur.clear();
                } else cur += c;
            }
            auto res = is_totally_positive(m, tp_size);
            json out{{"totally_positive", res.totally_positive}};
            if (res.violation) {
                out["violation"] = json{{"rows", res.violation->rows},
                                        {"cols", res.violation->cols},
                                        {"value", res.violation->value.str()}};
            } else {
                out["violation"] = json(nullptr);
            }
            emit(out);
        } else if (*tpm) {
            if (tpm_n > 6) { std::cerr << "exact HR linear algebra is capped at n = 6\n"; return 3; }
            auto rep = degree1_hr_m0n(tpm_n, parse_chow_expr(tpm_lef, tpm_n));
            emit(json{{"hard_lefschetz", rep.hard_lefschetz},
                      {"hr", rep.hr},
                      {"signature", json::array({rep.sig_pos, rep.sig_neg})}});
        } else if (*ver) {
            if (ver_n > 7) { std::cerr << "verification sweeps are capped at n = 7\n"; return 3; }
            auto results = run_all(ver_n, jobs);
            bool all = true;
            json crit = json::array();
            for (const auto& r : results) {
                all = all && r.pass;
                crit.push_back(json{{"id", r.id},
                                    {"name", r.name},
                                    {"pass", r.pass},
                                    {"detail", r.detail}});
            }
            emit(json{{"level", ver_n}, {"criteria", crit}, {"all_pass", all}});
            return all ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
