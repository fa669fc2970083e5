#include <doctest.h>

#include "m0nlab/symaction.hpp"

using namespace m0nlab;

namespace {
Mask M(std::initializer_list<int> labels, int n) {
    return labels_to_mask(std::vector<int>(labels), n);
}
} // namespace

TEST_CASE("apply_transposition on divisor labels") {
    // m absent: fixed
    CHECK(apply_transposition(3, M({1, 2}, 4), 4) == M({1, 2}, 4));
    // m present: (S^c cup {m}) minus 0
    CHECK(apply_transposition(1, M({1, 2}, 4), 4) == M({1, 3, 4}, 4));
    CHECK(apply_transposition(2, M({1, 2}, 4), 4) == M({2, 3, 4}, 4));
    // the full bracket degenerates
    CHECK_THROWS_AS(apply_transposition(1, bracket_mask(4), 4), InvalidDivisorLabel);
    CHECK_THROWS_AS(apply_transposition(0, M({1, 2}, 4), 4), InvalidLabel);
    CHECK_THROWS_AS(apply_transposition(5, M({1, 2}, 4), 4), InvalidLabel);
}

TEST_CASE("transposition is an involution where defined") {
    const int n = 5;
    for (int m = 1; m <= n; ++m)
        for (Mask s = 0; s <= bracket_mask(n); ++s) {
            if (!subset_of(s, bracket_mask(n))) continue;
            int sz = popcount(s);
            if (sz < 2 || sz > n - 1) continue;
            Mask t = transpose_image(m, s, n);
            if (contains(s, m)) {
                CHECK(contains(t, m));
                CHECK(transpose_image(m, t, n) == s);
            } else {
                CHECK(t == s);
            }
        }
}

TEST_CASE("width is the maximum antichain size") {
    CHECK(width({M({1, 2}, 6), M({1, 2, 3}, 6)}) == 1);
    CHECK(width({M({1, 2}, 6), M({3, 4}, 6)}) == 2);
    CHECK(width({M({1, 2}, 6), M({3, 4}, 6), M({5, 6}, 6)}) == 3);
    CHECK(width({M({1, 2}, 6), M({3, 4}, 6), M({1, 2, 3, 4}, 6)}) == 2);
}

TEST_CASE("decompose_chains splits comparability components") {
    auto d = decompose_chains({M({1, 2}, 6), M({1, 2, 3}, 6), M({4, 5}, 6)});
    REQUIRE(d.has_value());
    CHECK(d->size() == 2);
    // branching component: not a disjoint union of chains
    CHECK_FALSE(decompose_chains({M({1, 2}, 6), M({3, 4}, 6), M({1, 2, 3, 4}, 6)}).has_value());
}

TEST_CASE("classify_failure examples") {
    const int n = 4;
    NestedSet empty;
    empty.n = n;

    // single chain, m missing from the smaller link: the image splits apart
    NestedSet chain({M({2, 3}, n), M({1, 2, 3}, n)}, Kind::Minimal, n);
    auto f = classify_failure(chain, empty, 1);
    REQUIRE(f.has_value());
    CHECK(f->label == FailureLabel::ChainPartialM);
    CHECK(f->witness_m == 1);

    // totally ordered image: no failure
    CHECK_FALSE(classify_failure(chain, empty, 4).has_value());

    // two disjoint chains
    NestedSet pair({M({1, 2}, 5), M({3, 4}, 5)}, Kind::Minimal, 5);
    NestedSet empty5;
    empty5.n = 5;
    auto g = classify_failure(pair, empty5, 5);
    REQUIRE(g.has_value());
    CHECK(g->label == FailureLabel::PairDisjointOrPartialM);
}

TEST_CASE("classify_failure rejects non-nested unions") {
    NestedSet a({M({1, 2}, 4)}, Kind::Minimal, 4);
    NestedSet b({M({2, 3}, 4)}, Kind::Minimal, 4);
    CHECK_THROWS_AS(classify_failure(a, b, 1), PreconditionViolation);
}

TEST_CASE("find_failure_witness frozen examples") {
    NestedSet chain({M({2, 3}, 4), M({1, 2, 3}, 4)}, Kind::Minimal, 4);
    auto w = find_failure_witness(chain);
    REQUIRE(w.has_value());
    CHECK(*w == 1);

    NestedSet pair({M({1, 2}, 5), M({3, 4}, 5)}, Kind::Minimal, 5);
    auto v = find_failure_witness(pair);
    REQUIRE(v.has_value());
    CHECK(*v == 5);

    // a single divisor label never fails
    NestedSet single({M({1, 2}, 4)}, Kind::Minimal, 4);
    CHECK_FALSE(find_failure_witness(single).has_value());
}
