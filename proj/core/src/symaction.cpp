#include "m0nlab/symaction.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace m0nlab {

Mask transpose_image(int m, Mask s, int n) {
    if (!contains(s, m)) return s;
    return (complement_in(s, n) | (Mask{1} << m)) & ~Mask{1};
}

Mask apply_transposition(int m, Mask s, int n) {
    if (m < 1 || m > n) throw InvalidLabel("transposition label m must lie in [1, n]");
    if (contains(s, 0) || !subset_of(s, bracket_mask(n)))
        throw InvalidLabel("generator labels are subsets of {1,...,n}");
    Mask img = transpose_image(m, s, n);
    if (popcount(img) < 2)
        throw InvalidDivisorLabel("image " + mask_to_string(img) +
                                  " is a singleton, not a building-set member");
    return img;
}

int width(const std::vector<Mask>& collection) {
    // Dilworth on a forest: the poset of a minimal-nested family is a forest
    // under inclusion, so max antichain = sum over roots of max(1, sum over
    // children).
    const int k = static_cast<int>(collection.size());
    std::vector<int> parent(k, -1);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            if (i == j) continue;
            if (subset_of(collection[i], collection[j]) && collection[i] != collection[j]) {
                if (parent[i] < 0 || subset_of(collection[j], collection[parent[i]]))
                    parent[i] = j;
            }
        }
    }
    std::vector<std::vector<int>> children(k);
    for (int i = 0; i < k; ++i)
        if (parent[i] >= 0) children[parent[i]].push_back(i);
    std::vector<int> f(k, 0);
    // process in decreasing size order so children are done before parents
    std::vector<int> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return popcount(collection[a]) < popcount(collection[b]);
    });
    for (int v : order) {
        int s = 0;
        for (int c : children[v]) s += f[c];
        f[v] = std::max(1, s);
    }
    int w = 0;
    for (int i = 0; i < k; ++i)
        if (parent[i] < 0) w += f[i];
    return w;
}

std::optional<std::vector<std::vector<Mask>>> decompose_chains(const std::vector<Mask>& collection) {
    const int k = static_cast<int>(collection.size());
    std::vector<int> comp(k);
    std::iota(comp.begin(), comp.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (comp[x] != x) x = comp[x] = comp[comp[x]];
        return x;
    };
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (nested(collection[i], collection[j])) comp[find(i)] = find(j);
    std::vector<std::vector<Mask>> groups;
    std::vector<int> root_of;
    for (int i = 0; i < k; ++i) {
        int r = find(i);
        auto it = std::find(root_of.begin(), root_of.end(), r);
        std::size_t g;
        if (it == root_of.end()) {
            root_of.push_back(r);
            groups.emplace_back();
            g = groups.size() - 1;
        } else {
            g = static_cast<std::size_t>(it - root_of.begin());
        }
        groups[g].push_back(collection[i]);
    }
    for (auto& g : groups) {
        std::sort(g.begin(), g.end(), [](Mask a, Mask b) {
            if (popcount(a) != popcount(b)) return popcount(a) < popcount(b);
            return a < b;
        });
        for (std::size_t i = 0; i + 1 < g.size(); ++i)
            if (!subset_of(g[i], g[i + 1]) || g[i] == g[i + 1]) return std::nullopt;
    }
    std::sort(groups.begin(), groups.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return groups;
}

ActionResult apply_to_chains(int m, const std::vector<SubsetChain>& chains, int n) {
    if (m < 1 || m > n) throw InvalidLabel("transposition label m must lie in [1, n]");
    for (const auto& c : chains)
        if (!c.valid()) throw PreconditionViolation("chain links must strictly increase");
    for (std::size_t i = 0; i < chains.size(); ++i)
        for (std::size_t j = i + 1; j < chains.size(); ++j)
            if (!disjoint(chains[i].top(), chains[j].top()))
                throw PreconditionViolation("chains must be pairwise disjoint");

    ActionResult res;
    std::vector<Mask> image;
    int flat = 0;
    for (const auto& c : chains)
        for (Mask s : c.links) {
            if (contains(s, m) && !res.pivot_index) res.pivot_index = flat;
            image.push_back(transpose_image(m, s, n));
            ++flat;
        }
    if (!is_nested(image, Kind::Minimal)) {
        res.structure = Structure::NotNestedMinimal;
        res.chains = {image};
        return res;
    }
    auto groups = decompose_chains(image);
    if (!groups) {
        res.structure = Structure::NotNestedMinimal;
        res.chains = {image};
        return res;
    }
    res.chains = *groups;
    switch (res.chains.size()) {
        case 1: res.structure = Structure::SingleChain; break;
        case 2: res.structure = Structure::TwoDisjointChains; break;
        default: res.structure = Structure::ManyDisjointChains; break;
    }
    return res;
}

const char* failure_label_name(FailureLabel l) {
    switch (l) {
        case FailureLabel::ChainPartialM: return "ChainPartialM";
        case FailureLabel::PairDisjointOrPartialM: return "PairDisjointOrPartialM";
        case FailureLabel::ThreeOrMoreChains: return "ThreeOrMoreChains";
    }
    return "?";
}

std::optional<FailureCase> classify_failure(const NestedSet& n1, const NestedSet& n2, int m) {
    const int n = n1.n ? n1.n : n2.n;
    if (m < 1 || m > n) throw InvalidLabel("transposition label m must lie in [1, n]");
    std::vector<Mask> u = n1.elems;
    u.insert(u.end(), n2.elems.begin(), n2.elems.end());
    std::sort(u.begin(), u.end());
    u.erase(std::unique(u.begin(), u.end()), u.end());
    if (!is_nested(u, Kind::Minimal))
        throw PreconditionViolation("union of the nested sets is not minimal-nested");
    for (Mask s : u)
        if (popcount(s) > n - 1)
            throw PreconditionViolation("member sizes must be <= n-1 for the action");

    std::vector<Mask> image;
    image.reserve(u.size());
    for (Mask s : u) image.push_back(transpose_image(m, s, n));
    if (is_nested(image, Kind::Maximal)) return std::nullopt;

    FailureCase fc;
    fc.witness_m = m;
    int w = width(u);
    if (w == 1) fc.label = FailureLabel::ChainPartialM;
    else if (w == 2) fc.label = FailureLabel::PairDisjointOrPartialM;
    else fc.label = FailureLabel::ThreeOrMoreChains;
    std::ostringstream os;
    os << "union of width " << w << ": image under (0," << m << ") = {";
    for (std::size_t i = 0; i < image.size(); ++i)
        os << (i ? "," : "") << mask_to_string(image[i]);
    os << "} is not a chain";
    fc.detail = os.str();
    return fc;
}

std::optional<int> find_failure_witness(const NestedSet& ns) {
    NestedSet empty;
    empty.kind = ns.kind;
    empty.n = ns.n;
    for (int m = 1; m <= ns.n; ++m)
        if (classify_failure(ns, empty, m)) return m;
    return std::nullopt;
}

} // namespace m0nlab
