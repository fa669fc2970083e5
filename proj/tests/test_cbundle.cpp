#include <doctest.h>

#include "m0nlab/cbundle.hpp"
#include "m0nlab/errors.hpp"

using namespace m0nlab;

namespace {
ChowClass total_psi(int n) {
    ChowClass l = ChowClass::zero(n);
    for (int i = 0; i <= n; ++i) l += ChowClass::psi(i, n);
    return l;
}
} // namespace

TEST_CASE("QClass arithmetic reduces") {
    const int n = 4;
    QClass a{total_psi(n), 2};
    QClass b = qadd(a, a); // = total_psi
    b.reduce();
    CHECK(b.den == 1);
    CHECK(b.num == total_psi(n));
    QClass third{total_psi(n), 3};
    CHECK(integrate_exact(qpow(third, 2)) == 5); // 45 / 9
}

TEST_CASE("integrate_exact enforces integrality") {
    const int n = 4;
    QClass half{power(total_psi(n), 2), 2};
    // deg L^2 = 45, odd: not divisible by 2
    CHECK_THROWS_AS(integrate_exact(half), NonIntegralChernClass);
    QClass third{power(total_psi(n), 2), 3};
    CHECK(integrate_exact(third) == 15);
}

TEST_CASE("casimir weights") {
    CHECK(casimir_weight({1}, LevelAlphabet{1, 1}) == Rat(1, 4));
    CHECK(casimir_weight({}, LevelAlphabet{1, 1}) == Rat(0));
    CHECK(casimir_weight({2}, LevelAlphabet{1, 2}) == Rat(1, 2));
}

TEST_CASE("c1 of the basic four-point sl2 block") {
    LevelAlphabet alph{1, 1};
    ConformalBlockSpec spec{alph, {{1}, {1}, {1}, {1}}};
    CHECK(conformal_rank(alph, spec.weights) == 1);
    QClass c1 = c1_conformal(spec);
    CHECK_FALSE(c1.is_zero());
    CHECK(integrate_exact(c1) == 1);
}

TEST_CASE("c1 vanishes for rank-zero blocks") {
    LevelAlphabet alph{1, 1};
    ConformalBlockSpec spec{alph, {{1}, {1}, {1}, {}}};
    CHECK(conformal_rank(alph, spec.weights) == 0);
    CHECK(c1_conformal(spec).is_zero());
}

TEST_CASE("Newton recursion reproduces elementary symmetric classes") {
    const int n = 5;
    ChowClass l1 = total_psi(n);
    ChowClass l2 = ChowClass::psi(0, n) + ChowClass::psi(1, n);
    std::vector<QClass> p(4, QClass::of(ChowClass::zero(n)));
    for (int k = 1; k <= 3; ++k)
        p[k] = qadd(QClass::of(power(l1, k)), QClass::of(power(l2, k)));
    CHECK(chern_from_power_sums(p, 0).num == ChowClass::one(n));
    QClass c1 = chern_from_power_sums(p, 1);
    c1.reduce();
    CHECK(c1.den == 1);
    CHECK(c1.num == l1 + l2);
    QClass c2 = chern_from_power_sums(p, 2);
    QClass e2 = QClass::of(multiply(l1, l2));
    CHECK(qsub(c2, e2).is_zero());
    // rank 2: c3 of L1 + L2 vanishes
    CHECK(chern_from_power_sums(p, 3).is_zero());
}

TEST_CASE("log concavity verdicts") {
    CHECK(is_log_concave({1, 2, 3, 2, 1}).ok);
    CHECK(is_log_concave({1, 4, 6, 4, 1}).ok);
    CHECK(is_log_concave({}).ok);
    CHECK(is_log_concave({5}).ok);
    auto bad = is_log_concave({1, 1, 3});
    CHECK_FALSE(bad.ok);
    REQUIRE(bad.first_violation.has_value());
    CHECK(*bad.first_violation == 1);
}

TEST_CASE("kt sequence on F-nef degree-1 classes") {
    const int n = 4;
    QClass l = QClass::of(total_psi(n));
    QClass m = QClass::of(ChowClass::psi(0, n) + ChowClass::psi(1, n) +
                          ChowClass::psi(2, n));
    auto s = kt_sequence(l, m);
    CHECK(s.values.size() == static_cast<std::size_t>(n - 1));
    CHECK(s.values.front() > 0);
    CHECK(is_log_concave(s.values).ok);
    // endpoints are pure powers
    CHECK(s.values.back() == integrate(power(total_psi(n), 2)));
    CHECK(s.values.back() == 45);
}

TEST_CASE("kt sequence rejects non-F-nef input with a certificate") {
    const int n = 4;
    QClass bad = QClass::of(ChowClass::divisor(labels_to_mask({1, 2}, n), n));
    QClass l = QClass::of(total_psi(n));
    CHECK_THROWS_AS(kt_sequence(l, bad), FNefViolation);
}

TEST_CASE("volume polynomial is binomial-weighted") {
    const int n = 4;
    QClass l = QClass::of(total_psi(n));
    auto vol = volume_polynomial(l, l);
    REQUIRE(vol.size() == 3);
    CHECK(vol[0] == 45);
    CHECK(vol[1] == 90); // binom(2,1) * 45
    CHECK(vol[2] == 45);
}

TEST_CASE("twist polynomial of a split rank-2 bundle") {
    const int n = 4, k = n - 2;
    QClass l1 = QClass::of(total_psi(n));
    QClass l2 = QClass::of(ChowClass::psi(0, n) + ChowClass::psi(1, n) +
                           ChowClass::psi(2, n));
    std::vector<QClass> p(k + 1, QClass::of(ChowClass::zero(n)));
    for (int j = 1; j <= k; ++j) p[j] = qadd(qpow(l1, j), qpow(l2, j));
    std::vector<QClass> cherns;
    for (int j = 0; j <= k; ++j) cherns.push_back(chern_from_power_sums(p, j));
    auto tw = twist_polynomial(cherns, 2, l1, k);
    CHECK(tw.coeffs.size() == static_cast<std::size_t>(k + 1));
    CHECK(tw.normalized.size() == static_cast<std::size_t>(k + 1));
    CHECK(tw.verdict.ok);
}

TEST_CASE("catalog has at least twenty runnable specs") {
    auto cat = catalog_specs();
    CHECK(cat.size() >= 20);
    for (const auto& entry : cat) {
        CHECK(entry.spec.n() >= 3);
        CHECK(!entry.name.empty());
        // every catalog spec must at least have computable rank
        Int rk = conformal_rank(entry.spec.alphabet, entry.spec.weights);
        CHECK(rk >= 0);
    }
}
