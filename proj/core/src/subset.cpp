#include "m0nlab/subset.hpp"

#include <algorithm>
#include <sstream>

namespace m0nlab {

std::vector<int> mask_to_labels(Mask m) {
    std::vector<int> out;
    while (m) {
        int b = std::countr_zero(m);
        out.push_back(b);
        m &= m - 1;
    }
    return out;
}

Mask labels_to_mask(const std::vector<int>& labels, int n) {
    Mask m = 0;
    for (int x : labels) {
        if (x < 0 || x > n) throw InvalidLabel("label out of [0, n]: " + std::to_string(x));
        m |= Mask{1} << x;
    }
    return m;
}

std::string mask_to_string(Mask m) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int x : mask_to_labels(m)) {
        if (!first) os << ',';
        os << x;
        first = false;
    }
    os << '}';
    return os.str();
}

Mask canonicalize_divisor(Mask s, int n) {
    if ((s & ~full_mask(n)) != 0) throw InvalidLabel("subset exceeds ambient {0..n}");
    int sz = popcount(s);
    if (sz < 2 || sz > n - 1)
        throw InvalidDivisorLabel("divisor label needs 2 <= |S| <= n-1, got |S|=" +
                                  std::to_string(sz) + " at n=" + std::to_string(n));
    return contains(s, 0) ? complement_in(s, n) : s;
}

bool is_nested(const std::vector<Mask>& collection, Kind kind) {
    for (std::size_t i = 0; i < collection.size(); ++i)
        for (std::size_t j = i + 1; j < collection.size(); ++j) {
            Mask a = collection[i], b = collection[j];
            if (kind == Kind::Minimal) {
                if (!nested(a, b) && !disjoint(a, b)) return false;
            } else {
                if (!nested(a, b)) return false;
            }
        }
    return true;
}

bool SubsetChain::valid() const {
    if (links.empty()) return false;
    for (std::size_t i = 0; i + 1 < links.size(); ++i)
        if (!(subset_of(links[i], links[i + 1]) && links[i] != links[i + 1])) return false;
    return true;
}

NestedSet::NestedSet(std::vector<Mask> e, Kind k, int ambient)
    : elems(std::move(e)), kind(k), n(ambient) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    Mask bracket = bracket_mask(n);
    for (Mask s : elems) {
        if (!subset_of(s, bracket))
            throw InvalidLabel("nested-set members must avoid 0 and fit [n]");
        if (popcount(s) < 2)
            throw InvalidLabel("nested-set members have size >= 2");
    }
    if (!is_nested(elems, kind))
        throw PreconditionViolation("collection is not nested for the requested kind");
}

namespace {

void enumerate_rec(const std::vector<Mask>& pool, std::size_t start, int remaining,
                   Kind kind, std::vector<Mask>& cur, int n,
                   const std::function<void(const NestedSet&)>& visit) {
    if (remaining == 0) return;
    for (std::size_t i = start; i < pool.size(); ++i) {
        Mask cand = pool[i];
        bool ok = true;
        for (Mask s : cur) {
            if (kind == Kind::Minimal) {
                if (!nested(s, cand) && !disjoint(s, cand)) { ok = false; break; }
            } else {
                if (!nested(s, cand)) { ok = false; break; }
            }
        }
        if (!ok) continue;
        cur.push_back(cand);
        NestedSet ns;
        ns.elems = cur;
        std::sort(ns.elems.begin(), ns.elems.end());
        ns.kind = kind;
        ns.n = n;
        visit(ns);
        enumerate_rec(pool, i + 1, remaining - 1, kind, cur, n, visit);
        cur.pop_back();
    }
}

} // namespace

void enumerate_nested_sets(int n, Kind kind, int max_size,
                           const std::function<void(const NestedSet&)>& visit,
                           int min_elem_size, int max_elem_size) {
    if (n < 3) throw PreconditionViolation("enumerate_nested_sets needs n >= 3");
    if (max_elem_size < 0) max_elem_size = n;
    NestedSet empty;
    empty.kind = kind;
    empty.n = n;
    visit(empty);
    if (max_size <= 0) return;

    std::vector<Mask> pool;
    Mask bracket = bracket_mask(n);
    for (Mask s = 1; s <= bracket; ++s) {
        if (!subset_of(s, bracket)) continue;
        int sz = popcount(s);
        if (sz >= min_elem_size && sz <= max_elem_size) pool.push_back(s);
    }
    std::vector<Mask> cur;
    enumerate_rec(pool, 0, max_size, kind, cur, n, visit);
}

std::vector<NestedSet> collect_nested_sets(int n, Kind kind, int max_size,
                                           int min_elem_size, int max_elem_size) {
    std::vector<NestedSet> out;
    enumerate_nested_sets(n, kind, max_size,
                          [&](const NestedSet& ns) { out.push_back(ns); },
                          min_elem_size, max_elem_size);
    return out;
}

} // namespace m0nlab
