#pragma once

// Independent reference computations. Nothing here calls into the library's
// algorithms beyond Tree accessors, so agreement is meaningful.

#include "dendrex/tree.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using dendrex::EdgeId;
using dendrex::EdgeMap;
using dendrex::Tree;

// Every structure-preserving bijection, by trying all permutations.
inline std::vector<EdgeMap> brute_isomorphisms(const Tree& s, const Tree& t) {
    std::vector<EdgeMap> out;
    if (s.edge_count() != t.edge_count()) {
        return out;
    }
    EdgeMap perm(s.edge_count());
    std::iota(perm.begin(), perm.end(), EdgeId{0});
    do {
        bool ok = true;
        for (EdgeId e = 0; e < s.edge_count() && ok; ++e) {
            EdgeId const f = perm[e];
            if (s.has_vertex(e) != t.has_vertex(f)) {
                ok = false;
                break;
            }
            auto sp = s.parent(e);
            auto tp = t.parent(f);
            if (sp.has_value() != tp.has_value() || (sp && perm[*sp] != *tp)) {
                ok = false;
            }
        }
        if (ok) {
            out.push_back(perm);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

inline bool brute_isomorphic(const Tree& s, const Tree& t) { return !brute_isomorphisms(s, t).empty(); }

// Number of shapes with exactly n edges, by the Euler transform of the
// sequence itself: a shape is a leaf, or a vertex over a multiset of shapes.
inline std::vector<std::uint64_t> shape_counts(std::size_t max_edges) {
    std::vector<std::uint64_t> a(max_edges + 1, 0);
    // multisets[k] = number of multisets of shapes with total size k, using
    // shapes of size < current bound; rebuilt each round.
    for (std::size_t n = 1; n <= max_edges; ++n) {
        // Count multisets with total n - 1 from sizes 1..n-1.
        std::vector<std::uint64_t> ms(n, 0);
        ms[0] = 1;
        for (std::size_t size = 1; size < n; ++size) {
            // Each of a[size] shapes may appear any number of times.
            for (std::uint64_t kind = 0; kind < a[size]; ++kind) {
                for (std::size_t total = size; total < n; ++total) {
                    ms[total] += ms[total - size];
                }
            }
        }
        a[n] = ms[n - 1] + (n == 1 ? 1 : 0);
    }
    return a;
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) {
        return 0;
    }
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

// Monotone maps [m] -> [n].
inline std::vector<std::vector<std::size_t>> monotone_maps(std::size_t m, std::size_t n) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur(m + 1, 0);
    while (true) {
        out.push_back(cur);
        std::size_t i = m + 1;
        while (i > 0 && cur[i - 1] == n) {
            --i;
        }
        if (i == 0) {
            break;
        }
        std::size_t const v = cur[i - 1] + 1;
        for (std::size_t j = i - 1; j <= m; ++j) {
            cur[j] = v;
        }
    }
    return out;
}

inline bool surjective(const std::vector<std::size_t>& f, std::size_t n) {
    std::set<std::size_t> img(f.begin(), f.end());
    return img.size() == n + 1;
}

// Horn Λ^k[n] contains f iff its image together with k misses some vertex.
inline bool in_horn(const std::vector<std::size_t>& f, std::size_t n, std::size_t k) {
    std::set<std::size_t> img(f.begin(), f.end());
    img.insert(k);
    return img.size() < n + 1;
}

// Maximal directed paths of the leaf-and-root decorated tree, as edge sets:
// one per top edge (leaf or stump output), running down to the root.
inline std::vector<std::set<EdgeId>> maximal_paths(const Tree& t) {
    std::vector<std::set<EdgeId>> out;
    for (EdgeId e = 0; e < t.edge_count(); ++e) {
        if (t.has_vertex(e) && !t.inputs(e).empty()) {
            continue;
        }
        std::set<EdgeId> path;
        std::optional<EdgeId> cur = e;
        while (cur) {
            path.insert(*cur);
            cur = t.parent(*cur);
        }
        out.push_back(std::move(path));
    }
    return out;
}

inline bool on_common_path(const Tree& t, const std::set<EdgeId>& s) {
    for (const auto& p : maximal_paths(t)) {
        if (std::includes(p.begin(), p.end(), s.begin(), s.end())) {
            return true;
        }
    }
    return false;
}

// Image of target generator x under the hom induced by an edge map:
// the sorted preimage.
inline std::vector<EdgeId> preimage(const EdgeMap& map, EdgeId x) {
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < map.size(); ++e) {
        if (map[e] == x) {
            out.push_back(e);
        }
    }
    return out;
}

}  // namespace oracle
