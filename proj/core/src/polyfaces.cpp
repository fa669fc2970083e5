#include "m0nlab/polyfaces.hpp"

#include <algorithm>

namespace m0nlab {

Face make_face(NestedSet ns) {
    Face f;
    f.dim = ns.n - ns.size();
    f.nested = std::move(ns);
    return f;
}

bool faces_intersect(const Face& a, const Face& b) {
    if (a.nested.kind != b.nested.kind || a.nested.n != b.nested.n)
        throw PreconditionViolation("faces_intersect needs matching kind and ambient n");
    std::vector<Mask> u = a.nested.elems;
    u.insert(u.end(), b.nested.elems.begin(), b.nested.elems.end());
    std::sort(u.begin(), u.end());
    u.erase(std::unique(u.begin(), u.end()), u.end());
    return is_nested(u, a.nested.kind);
}

namespace {

std::vector<NestedSet> chains_up_to(int n, int max_size) {
    // maximal-kind nested sets with member sizes 2..n-1 are exactly the chains
    return collect_nested_sets(n, Kind::Maximal, max_size, 2, n - 1);
}

NestedSet with_kind(const NestedSet& ns, Kind k) {
    NestedSet out = ns;
    out.kind = k;
    return out;
}

} // namespace

void enumerate_witnesses(int n, int max_codim,
                         const std::function<void(const WitnessQuadruple&)>& visit) {
    if (n < 4) throw PreconditionViolation("enumerate_witnesses needs n >= 4");
    auto chains = chains_up_to(n, max_codim);
    for (std::size_t i = 0; i < chains.size(); ++i) {
        for (std::size_t j = i; j < chains.size(); ++j) {
            std::vector<Mask> u = chains[i].elems;
            u.insert(u.end(), chains[j].elems.begin(), chains[j].elems.end());
            std::sort(u.begin(), u.end());
            u.erase(std::unique(u.begin(), u.end()), u.end());
            if (!is_nested(u, Kind::Minimal)) continue;  // F1, F2 must intersect
            if (is_nested(u, Kind::Maximal)) continue;   // parallels intersect too
            WitnessQuadruple q;
            q.f1 = make_face(with_kind(chains[i], Kind::Minimal));
            q.f2 = make_face(with_kind(chains[j], Kind::Minimal));
            q.g1 = make_face(chains[i]);
            q.g2 = make_face(chains[j]);
            NestedSet un(u, Kind::Minimal, n);
            NestedSet empty;
            empty.n = n;
            q.failure.witness_m = 0;
            for (int m = 1; m <= n; ++m) {
                if (auto fc = classify_failure(un, empty, m)) {
                    q.failure = *fc;
                    break;
                }
            }
            visit(q);
        }
    }
}

std::vector<WitnessQuadruple> collect_witnesses(int n, int max_codim) {
    std::vector<WitnessQuadruple> out;
    enumerate_witnesses(n, max_codim, [&](const WitnessQuadruple& q) { out.push_back(q); });
    return out;
}

std::map<int, CodimCounts> count_by_codim(int n) {
    if (n > 8) throw PreconditionViolation("count_by_codim is capped at n = 8");
    auto chains = chains_up_to(n, n);
    std::map<int, CodimCounts> table;
    // row c counts unordered pairs (including equal) of chain faces of
    // codimension at most c, so rows are cumulative in c; at the top
    // codimension a same-length pair is forced into total order, which is
    // why the per-codim difference there is always zero
    for (std::size_t i = 0; i < chains.size(); ++i) {
        for (std::size_t j = i; j < chains.size(); ++j) {
            std::vector<Mask> u = chains[i].elems;
            u.insert(u.end(), chains[j].elems.begin(), chains[j].elems.end());
            std::sort(u.begin(), u.end());
            u.erase(std::unique(u.begin(), u.end()), u.end());
            auto& row = table[std::max(chains[i].size(), chains[j].size())];
            if (is_nested(u, Kind::Minimal)) {
                row.assoc++;
                if (is_nested(u, Kind::Maximal)) row.both++;
            }
        }
    }
    // accumulate
    CodimCounts running;
    for (auto& [codim, row] : table) {
        running.assoc += row.assoc;
        running.both += row.both;
        row = running;
    }
    return table;
}

} // namespace m0nlab
