#ifndef MAGPATH_TESTS_ORACLES_HPP
#define MAGPATH_TESTS_ORACLES_HPP

// Brute-force reference implementations used only by tests. These read the
// graph through mark_at/adjacent and never call the library's search code.

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "magpath/collider_paths.hpp"
#include "magpath/mixed_graph.hpp"

namespace magpath::oracle {

/// Transitive closure of the directed-edge relation (Floyd-Warshall), reflexive.
inline std::vector<std::vector<bool>> ancestor_matrix(const MixedGraph& g) {
    const auto n = g.num_vertices();
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));  // reach[a][b]: a is ancestor of b
    for (vertex_index a = 0; a < n; ++a) {
        reach[a][a] = true;
        for (vertex_index b = 0; b < n; ++b) {
            if (a != b && g.mark_at(a, b) == EdgeMark::Tail && g.mark_at(b, a) == EdgeMark::Arrow) reach[a][b] = true;
        }
    }
    for (vertex_index m = 0; m < n; ++m)
        for (vertex_index a = 0; a < n; ++a)
            for (vertex_index b = 0; b < n; ++b)
                if (reach[a][m] && reach[m][b]) reach[a][b] = true;
    return reach;
}

/// Calls `fn` with every simple path of 1..max_len edges, in both directions,
/// or only those starting at `only_from` when given.
inline void for_each_simple_path(const MixedGraph& g, std::size_t max_len,
                                 const std::function<void(const std::vector<vertex_index>&)>& fn,
                                 std::optional<vertex_index> only_from = std::nullopt) {
    const auto n = g.num_vertices();
    std::vector<vertex_index> path;
    std::vector<bool> used(n, false);
    std::function<void()> grow = [&] {
        if (path.size() - 1 >= max_len) return;
        for (vertex_index u = 0; u < n; ++u) {
            if (used[u] || !g.mark_at(path.back(), u)) continue;
            path.push_back(u);
            used[u] = true;
            fn(path);
            grow();
            used[u] = false;
            path.pop_back();
        }
    };
    for (vertex_index s = 0; s < n; ++s) {
        if (only_from && s != *only_from) continue;
        path = {s};
        used[s] = true;
        grow();
        used[s] = false;
    }
}

inline bool colliders_everywhere(const MixedGraph& g, const std::vector<vertex_index>& p) {
    for (std::size_t i = 1; i + 1 < p.size(); ++i) {
        if (g.mark_at(p[i], p[i - 1]) != EdgeMark::Arrow || g.mark_at(p[i], p[i + 1]) != EdgeMark::Arrow) return false;
    }
    return true;
}

inline bool is_collider_path_raw(const MixedGraph& g, const std::vector<vertex_index>& p) {
    if (p.size() < 2) return false;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        if (!g.mark_at(p[i], p[i + 1])) return false;
    }
    return colliders_everywhere(g, p);
}

/// Minimality by trying all 2^(n-2) endpoint-preserving subsequences.
inline bool exhaustive_is_minimal(const MixedGraph& g, const std::vector<vertex_index>& p) {
    const std::size_t inner = p.size() < 2 ? 0 : p.size() - 2;
    const std::uint64_t full = (std::uint64_t{1} << inner) - 1;
    for (std::uint64_t keep = 0; keep < full; ++keep) {  // excludes keep == full (the path itself)
        std::vector<vertex_index> sub{p.front()};
        for (std::size_t i = 0; i < inner; ++i) {
            if (keep >> i & 1) sub.push_back(p[i + 1]);
        }
        sub.push_back(p.back());
        if (is_collider_path_raw(g, sub)) return false;
    }
    return true;
}

/// All collider paths with at most max_len edges, canonicalised.
inline std::set<CanonicalPath> enumerate_collider_paths_brute(const MixedGraph& g, std::size_t max_len) {
    std::set<CanonicalPath> out;
    for_each_simple_path(g, max_len, [&](const std::vector<vertex_index>& p) {
        if (colliders_everywhere(g, p)) out.insert(canonical_labels(g, p));
    });
    return out;
}

/// enumerate_collider_paths_brute filtered by exhaustive minimality.
inline std::set<CanonicalPath> minimal_collider_paths_brute(const MixedGraph& g) {
    std::set<CanonicalPath> out;
    const auto max_len = g.num_vertices() == 0 ? 0 : g.num_vertices() - 1;
    for_each_simple_path(g, max_len, [&](const std::vector<vertex_index>& p) {
        if (colliders_everywhere(g, p) && exhaustive_is_minimal(g, p)) out.insert(canonical_labels(g, p));
    });
    return out;
}

/// m-separation by listing every simple x-y path and testing each.
inline bool exhaustive_m_separated(const MixedGraph& g, vertex_index x, vertex_index y,
                                   const std::vector<vertex_index>& given) {
    const auto anc = ancestor_matrix(g);
    const auto n = g.num_vertices();
    std::vector<bool> in_given(n, false);
    for (auto z : given) in_given[z] = true;
    auto ancestor_of_given = [&](vertex_index v) {
        for (auto z : given) {
            if (anc[v][z]) return true;
        }
        return false;
    };
    bool connected = false;
    for_each_simple_path(g, n, [&](const std::vector<vertex_index>& p) {
        if (connected || p.front() != x || p.back() != y) return;
        for (std::size_t i = 1; i + 1 < p.size(); ++i) {
            bool collider =
                g.mark_at(p[i], p[i - 1]) == EdgeMark::Arrow && g.mark_at(p[i], p[i + 1]) == EdgeMark::Arrow;
            if (collider ? !ancestor_of_given(p[i]) : in_given[p[i]]) return;
        }
        connected = true;
    }, x);
    return !connected;
}

}  // namespace magpath::oracle

#endif  // MAGPATH_TESTS_ORACLES_HPP
