#include <doctest.h>

#include "m0nlab/expr.hpp"

using namespace m0nlab;

TEST_CASE("expression parser builds the expected classes") {
    const int n = 4;
    ChowClass d12 = ChowClass::divisor(labels_to_mask({1, 2}, n), n);
    ChowClass psi0 = ChowClass::psi(0, n);

    CHECK(parse_chow_expr("D{1,2}", n) == d12);
    CHECK(parse_chow_expr("psi(0)", n) == psi0);
    CHECK(parse_chow_expr("D{1,2}^2", n) == power(d12, 2));
    CHECK(parse_chow_expr("D{1,2} + psi(0)", n) == d12 + psi0);
    CHECK(parse_chow_expr("2*D{1,2}", n) == d12 * Int(2));
    CHECK(parse_chow_expr("-D{1,2}", n) == ChowClass::zero(n) - d12);
    CHECK(parse_chow_expr("(D{1,2} + psi(0))^2", n) == power(d12 + psi0, 2));
    CHECK(parse_chow_expr("D{0,3,4}", n) == d12); // canonical relabeling
    CHECK(parse_chow_expr(" D{1,2} * psi(0) ", n) == multiply(d12, psi0));
}

TEST_CASE("parser integrates end to end") {
    const int n = 4;
    CHECK(integrate(parse_chow_expr("D{1,2}^2", n)) == -1);
    CHECK(integrate(parse_chow_expr("D{1,2}^2 + 3*D{1,2}*D{3,4}", n)) == 2);
    CHECK(integrate(parse_chow_expr("psi(0)*psi(1)", n)) == 2);
}

TEST_CASE("parser rejects malformed input") {
    const int n = 4;
    CHECK_THROWS_AS(parse_chow_expr("", n), ExprError);
    CHECK_THROWS_AS(parse_chow_expr("D{1,2", n), ExprError);
    CHECK_THROWS_AS(parse_chow_expr("psi()", n), ExprError);
    CHECK_THROWS_AS(parse_chow_expr("D{1,2} +", n), ExprError);
    CHECK_THROWS_AS(parse_chow_expr("D{1,2}^-1", n), ExprError);
    CHECK_THROWS_AS(parse_chow_expr("foo", n), ExprError);
    CHECK_THROWS(parse_chow_expr("D{1}", n));      // not a divisor label
    CHECK_THROWS(parse_chow_expr("psi(9)", n));    // label out of range
}
