#ifndef MAGPATH_ANCESTRAL_HPP
#define MAGPATH_ANCESTRAL_HPP

#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <vector>

#include "magpath/combinations.hpp"
#include "magpath/mixed_graph.hpp"

namespace magpath {

/// Membership mask over the vertices of a graph.
using VertexMask = std::vector<bool>;

inline VertexMask ancestor_mask(const MixedGraph& g, std::span<const vertex_index> targets) {
    VertexMask seen(g.num_vertices(), false);
    std::vector<vertex_index> stack;
    for (auto t : targets) {
        g.label(t);
        if (!seen[t]) {
            seen[t] = true;
            stack.push_back(t);
        }
    }
    while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        for (auto u : g.neighbors(v)) {
            if (!seen[u] && g.directed_edge(u, v)) {
                seen[u] = true;
                stack.push_back(u);
            }
        }
    }
    return seen;
}

/// Vertices with a directed path into x, including x itself.
inline std::vector<vertex_index> ancestors(const MixedGraph& g, vertex_index x) {
    auto mask = ancestor_mask(g, std::span<const vertex_index>(&x, 1));
    std::vector<vertex_index> out;
    for (vertex_index v = 0; v < mask.size(); ++v) {
        if (mask[v]) out.push_back(v);
    }
    return out;
}

inline std::vector<vertex_index> spouses(const MixedGraph& g, vertex_index x) {
    std::vector<vertex_index> out;
    for (auto u : g.neighbors(x)) {
        if (g.arrow_at(x, u) && g.arrow_at(u, x)) out.push_back(u);
    }
    return out;
}

inline bool has_directed_cycle(const MixedGraph& g) {
    const auto n = g.num_vertices();
    std::vector<std::size_t> indegree(n, 0);
    for (vertex_index v = 0; v < n; ++v) {
        for (auto u : g.neighbors(v)) {
            if (g.directed_edge(u, v)) ++indegree[v];
        }
    }
    std::vector<vertex_index> ready;
    for (vertex_index v = 0; v < n; ++v) {
        if (indegree[v] == 0) ready.push_back(v);
    }
    std::size_t removed = 0;
    while (!ready.empty()) {
        auto v = ready.back();
        ready.pop_back();
        ++removed;
        for (auto u : g.neighbors(v)) {
            if (g.directed_edge(v, u) && --indegree[u] == 0) ready.push_back(u);
        }
    }
    return removed != n;
}

/// No directed cycle, no almost-directed cycle, and no arrowhead at any
/// vertex that has an incident undirected edge.
inline bool is_ancestral(const MixedGraph& g) {
    if (has_directed_cycle(g)) return false;
    const auto n = g.num_vertices();
    for (vertex_index x = 0; x < n; ++x) {
        bool has_undirected = false;
        bool has_arrowhead = false;
        for (auto y : g.neighbors(x)) {
            bool arrow_x = g.arrow_at(x, y);
            bool arrow_y = g.arrow_at(y, x);
            has_arrowhead = has_arrowhead || arrow_x;
            has_undirected = has_undirected || (!arrow_x && !arrow_y);
            if (arrow_x && arrow_y && x < y) {
                auto an_y = ancestor_mask(g, std::span<const vertex_index>(&y, 1));
                if (an_y[x]) return false;
                auto an_x = ancestor_mask(g, std::span<const vertex_index>(&x, 1));
                if (an_x[y]) return false;
            }
        }
        if (has_undirected && has_arrowhead) return false;
    }
    return true;
}

namespace detail {

inline void check_separation_query(const MixedGraph& g, vertex_index x, vertex_index y,
                                   std::span<const vertex_index> given) {
    g.label(x);
    g.label(y);
    if (x == y) throw graph_error("m-separation query needs two distinct vertices");
    for (auto z : given) {
        g.label(z);
        if (z == x || z == y) throw graph_error("conditioning set must exclude the queried vertices");
    }
}

}  // namespace detail

/// True iff every path between x and y is blocked given `given`: some
/// non-collider lies in the set, or some collider has no descendant in it.
///
/// Searches over (vertex, arrowhead-on-arrival) states; a connecting walk of
/// this kind exists iff a connecting simple path does.
inline bool m_separated(const MixedGraph& g, vertex_index x, vertex_index y, std::span<const vertex_index> given) {
    detail::check_separation_query(g, x, y, given);
    const auto n = g.num_vertices();
    VertexMask in_given(n, false);
    for (auto z : given) in_given[z] = true;
    const auto opens_collider = ancestor_mask(g, given);

    std::vector<bool> visited(2 * n, false);
    std::deque<std::pair<vertex_index, bool>> queue;
    auto push = [&](vertex_index v, bool arrow_in) {
        auto key = 2 * v + (arrow_in ? 1 : 0);
        if (!visited[key]) {
            visited[key] = true;
            queue.emplace_back(v, arrow_in);
        }
    };
    for (auto w : g.neighbors(x)) push(w, g.arrow_at(w, x));
    while (!queue.empty()) {
        auto [v, arrow_in] = queue.front();
        queue.pop_front();
        if (v == y) return false;
        for (auto u : g.neighbors(v)) {
            bool collider = arrow_in && g.arrow_at(v, u);
            bool passes = collider ? opens_collider[v] : !in_given[v];
            if (passes) push(u, g.arrow_at(u, v));
        }
    }
    return true;
}

/// Some set separating x and y, or nullopt if none exists (always nullopt
/// for adjacent pairs). Candidates are tried in order of size, then
/// lexicographically, after two quick guesses, so the result is
/// deterministic.
inline std::optional<std::vector<vertex_index>> find_separating_set(const MixedGraph& g, vertex_index x,
                                                                    vertex_index y) {
    detail::check_separation_query(g, x, y, {});
    if (g.adjacent(x, y)) return std::nullopt;
    std::vector<vertex_index> others;
    for (vertex_index v = 0; v < g.num_vertices(); ++v) {
        if (v != x && v != y) others.push_back(v);
    }
    if (m_separated(g, x, y, {})) return std::vector<vertex_index>{};

    const vertex_index ends[] = {x, y};
    auto an = ancestor_mask(g, ends);
    std::vector<vertex_index> guess;
    for (auto v : others) {
        if (an[v]) guess.push_back(v);
    }
    if (m_separated(g, x, y, guess)) return guess;

    std::optional<std::vector<vertex_index>> found;
    for (std::size_t size = 1; size <= others.size() && !found; ++size) {
        for_each_combination(others.size(), size, [&](std::span<const std::size_t> pick) {
            std::vector<vertex_index> z;
            z.reserve(pick.size());
            for (auto i : pick) z.push_back(others[i]);
            if (m_separated(g, x, y, z)) {
                found = std::move(z);
                return false;
            }
            return true;
        });
    }
    return found;
}

/// Exhaustive maximality check: every non-adjacent pair has a separating set.
/// Exponential in the vertex count. Throws graph_error on non-ancestral input.
inline bool is_maximal(const MixedGraph& g) {
    if (!is_ancestral(g)) throw graph_error("maximality is only defined for ancestral graphs");
    const auto n = g.num_vertices();
    for (vertex_index x = 0; x < n; ++x) {
        for (vertex_index y = x + 1; y < n; ++y) {
            if (!g.adjacent(x, y) && !find_separating_set(g, x, y)) return false;
        }
    }
    return true;
}

/// True iff there is a path between x and y whose internal vertices are all
/// colliders and all ancestors of x or y.
inline bool has_inducing_path(const MixedGraph& g, vertex_index x, vertex_index y) {
    detail::check_separation_query(g, x, y, {});
    const vertex_index ends[] = {x, y};
    const auto an = ancestor_mask(g, ends);
    const auto n = g.num_vertices();
    std::vector<bool> visited(2 * n, false);
    std::vector<std::pair<vertex_index, bool>> stack;
    auto push = [&](vertex_index v, bool arrow_in) {
        auto key = 2 * v + (arrow_in ? 1 : 0);
        if (!visited[key]) {
            visited[key] = true;
            stack.emplace_back(v, arrow_in);
        }
    };
    for (auto w : g.neighbors(x)) push(w, g.arrow_at(w, x));
    while (!stack.empty()) {
        auto [v, arrow_in] = stack.back();
        stack.pop_back();
        if (v == y) return true;
        if (v == x || !arrow_in || !an[v]) continue;
        for (auto u : g.neighbors(v)) {
            if (g.arrow_at(v, u)) push(u, g.arrow_at(u, v));
        }
    }
    return false;
}

/// Polynomial maximality check for ancestral graphs: maximal iff no
/// non-adjacent pair is joined by an inducing path. Agrees with is_maximal.
inline bool is_maximal_fast(const MixedGraph& g) {
    if (!is_ancestral(g)) throw graph_error("maximality is only defined for ancestral graphs");
    const auto n = g.num_vertices();
    for (vertex_index x = 0; x < n; ++x) {
        for (vertex_index y = x + 1; y < n; ++y) {
            if (!g.adjacent(x, y) && has_inducing_path(g, x, y)) return false;
        }
    }
    return true;
}

inline bool is_mag(const MixedGraph& g) { return is_ancestral(g) && is_maximal_fast(g); }

}  // namespace magpath

#endif  // MAGPATH_ANCESTRAL_HPP
