#include <doctest.h>

#include "m0nlab/polyfaces.hpp"

using namespace m0nlab;

namespace {
Mask M(std::initializer_list<int> labels, int n) {
    return labels_to_mask(std::vector<int>(labels), n);
}
} // namespace

TEST_CASE("faces_intersect by kind") {
    const int n = 5;
    Face a = make_face(NestedSet({M({1, 2}, n)}, Kind::Minimal, n));
    Face b = make_face(NestedSet({M({3, 4}, n)}, Kind::Minimal, n));
    CHECK(faces_intersect(a, b)); // disjoint is fine on the associahedron side

    Face ga = make_face(NestedSet({M({1, 2}, n)}, Kind::Maximal, n));
    Face gb = make_face(NestedSet({M({3, 4}, n)}, Kind::Maximal, n));
    CHECK_FALSE(faces_intersect(ga, gb)); // not totally ordered

    Face gc = make_face(NestedSet({M({1, 2, 3}, n)}, Kind::Maximal, n));
    CHECK(faces_intersect(ga, gc));
}

TEST_CASE("face dimension is n minus the number of elements") {
    const int n = 5;
    Face f = make_face(NestedSet({M({1, 2}, n), M({1, 2, 3}, n)}, Kind::Minimal, n));
    CHECK(f.dim == n - 2);
}

TEST_CASE("witness quadruples are genuine") {
    for (int n : {4, 5}) {
        auto ws = collect_witnesses(n, 3);
        CHECK(!ws.empty());
        for (const auto& q : ws) {
            CHECK(faces_intersect(q.f1, q.f2));
            CHECK_FALSE(faces_intersect(q.g1, q.g2));
            CHECK(q.f1.nested.size() <= 3);
            // the parallel faces carry the same chains, reinterpreted
            CHECK(q.g1.nested.elems == q.f1.nested.elems);
            CHECK(q.g2.nested.elems == q.f2.nested.elems);
        }
    }
}

TEST_CASE("census is consistent") {
    auto rows = count_by_codim(5);
    REQUIRE(rows.count(0) == 1);
    CHECK(rows[0].assoc == 1);
    CHECK(rows[0].both == 1);
    bool strict_somewhere = false;
    for (const auto& [codim, row] : rows) {
        CHECK(row.both <= row.assoc);
        CHECK(row.assoc >= 0);
        if (codim >= 2 && row.assoc > row.both) strict_somewhere = true;
    }
    CHECK(strict_somewhere);
}
