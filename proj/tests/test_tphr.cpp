#include <doctest.h>

#include "m0nlab/tphr.hpp"

using namespace m0nlab;

TEST_CASE("determinant") {
    CHECK(det({{Rat(2)}}) == Rat(2));
    CHECK(det({{Rat(1), Rat(2)}, {Rat(3), Rat(4)}}) == Rat(-2));
    CHECK(det({{Rat(0), Rat(1)}, {Rat(1), Rat(0)}}) == Rat(-1));
    CHECK(det({{Rat(1), Rat(0), Rat(0)},
               {Rat(0), Rat(0), Rat(1)},
               {Rat(0), Rat(1), Rat(0)}}) == Rat(-1));
}

TEST_CASE("Pascal-type Toeplitz truncation is totally positive") {
    // a_k = 1/k!: the exponential sequence, a classic TP kernel
    ToeplitzLT m;
    m.diagonals = {Rat(1), Rat(1), Rat(1, 2), Rat(1, 6)};
    auto res = is_totally_positive(m, 4);
    CHECK(res.totally_positive);
    CHECK_FALSE(res.violation.has_value());
}

TEST_CASE("planted negative minor is certified") {
    ToeplitzLT m;
    m.diagonals = {Rat(1), Rat(1), Rat(-1)};
    auto res = is_totally_positive(m, 3);
    CHECK_FALSE(res.totally_positive);
    REQUIRE(res.violation.has_value());
    CHECK(res.violation->rows == std::vector<int>{2});
    CHECK(res.violation->cols == std::vector<int>{0});
    CHECK(res.violation->value == Rat(-1));
}

TEST_CASE("signature by exact congruence") {
    CHECK(signature({{Rat(1), Rat(0)}, {Rat(0), Rat(1)}}) == std::pair(2, 0));
    CHECK(signature({{Rat(1), Rat(0)}, {Rat(0), Rat(-1)}}) == std::pair(1, 1));
    CHECK(signature({{Rat(0), Rat(1)}, {Rat(1), Rat(0)}}) == std::pair(1, 1));
    CHECK(signature({{Rat(0), Rat(0)}, {Rat(0), Rat(0)}}) == std::pair(0, 0));
    CHECK(signature({{Rat(2), Rat(1)}, {Rat(1), Rat(2)}}) == std::pair(2, 0));
    // rank-deficient
    CHECK(signature({{Rat(1), Rat(1)}, {Rat(1), Rat(1)}}) == std::pair(1, 0));
}

TEST_CASE("chow_algebra has Poincare-dual ranks") {
    for (int n : {4, 5}) {
        auto alg = chow_algebra(n);
        CHECK(alg.D == n - 2);
        REQUIRE(static_cast<int>(alg.bases.size()) == alg.D + 1);
        CHECK(alg.bases[0].size() == 1);
        CHECK(alg.bases[alg.D].size() == 1);
        for (int k = 0; 2 * k <= alg.D; ++k)
            CHECK(alg.bases[k].size() == alg.bases[alg.D - k].size());
    }
    // five points: rank of A^1 is 5 (Picard number of the five-point space)
    CHECK(chow_algebra(4).bases[1].size() == 5);
}

TEST_CASE("degree-1 Hodge-Riemann at five points") {
    const int n = 4;
    ChowClass l = ChowClass::zero(n);
    for (int i = 0; i <= n; ++i) l += ChowClass::psi(i, n);
    auto rep = degree1_hr_m0n(n, l);
    CHECK(rep.hard_lefschetz);
    CHECK(rep.hr);
    CHECK(rep.sig_pos == 1);
    CHECK(rep.sig_neg == 4);
}

TEST_CASE("hr_form at k = 0 is the degree of L^D") {
    const int n = 4;
    ChowClass l = ChowClass::zero(n);
    for (int i = 0; i <= n; ++i) l += ChowClass::psi(i, n);
    auto alg = chow_algebra(n);
    auto q0 = hr_form(alg, l, 0);
    REQUIRE(q0.size() == 1);
    CHECK(q0[0][0] == Rat(45));
}

TEST_CASE("non-nef Lefschetz candidates are rejected") {
    const int n = 4;
    ChowClass bad = ChowClass::divisor(labels_to_mask({1, 2}, n), n);
    CHECK_THROWS(degree1_hr_m0n(n, bad));
}
