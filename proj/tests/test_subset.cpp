#include <doctest.h>

#include "m0nlab/subset.hpp"

using namespace m0nlab;

namespace {
Mask M(std::initializer_list<int> labels, int n) {
    return labels_to_mask(std::vector<int>(labels), n);
}
} // namespace

TEST_CASE("mask round trips") {
    CHECK(mask_to_labels(M({1, 3, 4}, 4)) == std::vector<int>{1, 3, 4});
    CHECK(mask_to_string(M({1, 3, 4}, 4)) == "{1,3,4}");
    CHECK(full_mask(3) == 0b1111);
    CHECK(bracket_mask(3) == 0b1110);
    CHECK_THROWS_AS(labels_to_mask({5}, 4), InvalidLabel);
    CHECK_THROWS_AS(labels_to_mask({-1}, 4), InvalidLabel);
}

TEST_CASE("canonicalize_divisor picks the side avoiding 0") {
    CHECK(canonicalize_divisor(M({0, 3, 4}, 4), 4) == M({1, 2}, 4));
    CHECK(canonicalize_divisor(M({1, 2}, 4), 4) == M({1, 2}, 4));
    CHECK_THROWS_AS(canonicalize_divisor(M({1}, 4), 4), InvalidDivisorLabel);
    CHECK_THROWS_AS(canonicalize_divisor(full_mask(4), 4), InvalidDivisorLabel);
}

TEST_CASE("nestedness predicates") {
    std::vector<Mask> pairwise{M({1, 2}, 5), M({3, 4}, 5), M({1, 2, 3, 4}, 5)};
    CHECK(is_nested(pairwise, Kind::Minimal));
    CHECK_FALSE(is_nested(pairwise, Kind::Maximal));
    std::vector<Mask> chain{M({1, 2}, 5), M({1, 2, 3}, 5)};
    CHECK(is_nested(chain, Kind::Maximal));
    std::vector<Mask> crossing{M({1, 2}, 5), M({2, 3}, 5)};
    CHECK_FALSE(is_nested(crossing, Kind::Minimal));
}

TEST_CASE("NestedSet validates and sorts") {
    NestedSet ns({M({1, 2, 3}, 5), M({1, 2}, 5)}, Kind::Minimal, 5);
    CHECK(ns.elems.front() == M({1, 2}, 5));
    CHECK_THROWS(NestedSet({M({1, 2}, 5), M({2, 3}, 5)}, Kind::Minimal, 5));
    CHECK_THROWS(NestedSet({M({1}, 5)}, Kind::Minimal, 5));
}

TEST_CASE("enumerate_nested_sets agrees with a brute-force filter") {
    // independent oracle: filter all collections of size->=2 subsets of [n]
    const int n = 4;
    std::vector<Mask> pool;
    for (Mask s = 0; s <= bracket_mask(n); ++s)
        if (subset_of(s, bracket_mask(n)) && popcount(s) >= 2) pool.push_back(s);

    for (Kind kind : {Kind::Minimal, Kind::Maximal}) {
        long long brute = 0;
        int p = static_cast<int>(pool.size());
        for (long long pick = 0; pick < (1LL << p); ++pick) {
            std::vector<Mask> coll;
            for (int i = 0; i < p; ++i)
                if ((pick >> i) & 1) coll.push_back(pool[i]);
            if (static_cast<int>(coll.size()) <= 3 && is_nested(coll, kind)) ++brute;
        }
        long long count = 0;
        enumerate_nested_sets(n, kind, 3, [&](const NestedSet&) { ++count; });
        CHECK(count == brute);
    }
}

TEST_CASE("enumeration emits the empty set first and respects size bounds") {
    bool first = true;
    enumerate_nested_sets(3, Kind::Minimal, 2, [&](const NestedSet& ns) {
        if (first) {
            CHECK(ns.empty());
            first = false;
        }
        for (Mask s : ns.elems) CHECK(popcount(s) >= 2);
    });
    CHECK_FALSE(first);
}
