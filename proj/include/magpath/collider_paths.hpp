#ifndef MAGPATH_COLLIDER_PATHS_HPP
#define MAGPATH_COLLIDER_PATHS_HPP

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <limits>
#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "magpath/ancestral.hpp"
#include "magpath/magv1.hpp"
#include "magpath/mixed_graph.hpp"

namespace magpath {

/// A vertex sequence in some graph; whether it is a path is checked by the
/// operations that take it.
using PathSeq = std::vector<vertex_index>;

/// Shortlex order: shorter first, then lexicographic.
struct ShortLex {
    template <typename Seq>
    bool operator()(const Seq& a, const Seq& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
};

/// Endpoint-normalised vertex sequence over labels: first label <= last
/// label, so a path and its reversal compare equal.
struct CanonicalPath {
    std::vector<std::string> verts;

    bool operator==(const CanonicalPath&) const = default;
    bool operator<(const CanonicalPath& o) const { return ShortLex{}(verts, o.verts); }

    std::string to_string() const {
        std::string out;
        for (const auto& v : verts) {
            if (!out.empty()) out += ' ';
            out += v;
        }
        return out;
    }
};

inline bool is_path(const MixedGraph& g, std::span<const vertex_index> p) {
    for (auto v : p) g.label(v);
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = i + 1; j < p.size(); ++j) {
            if (p[i] == p[j]) return false;
        }
    }
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        if (!g.adjacent(p[i], p[i + 1])) return false;
    }
    return true;
}

namespace detail {

inline bool internal_vertices_are_colliders(const MixedGraph& g, std::span<const vertex_index> p) {
    for (std::size_t i = 1; i + 1 < p.size(); ++i) {
        if (!g.arrow_at(p[i], p[i - 1]) || !g.arrow_at(p[i], p[i + 1])) return false;
    }
    return true;
}

}  // namespace detail

/// Every internal vertex has arrowheads on both of its path edges.
/// Throws graph_error if `p` is not a path of `g`.
inline bool is_collider_path(const MixedGraph& g, std::span<const vertex_index> p) {
    if (p.size() < 2 || !is_path(g, p)) throw graph_error("not a path");
    return detail::internal_vertices_are_colliders(g, p);
}

/// A proper, endpoint-preserving subsequence of the collider path `p` that is
/// itself a collider path, or nullopt if `p` is minimal.
///
/// Dynamic program over (index, arrowhead-into-index, skipped-something)
/// states; a transition j -> j' needs v_j, v_j' adjacent and, for interior
/// j, arrowheads at v_j on both the incoming edge and (v_j, v_j').
inline std::optional<PathSeq> minimality_witness(const MixedGraph& g, std::span<const vertex_index> p) {
    if (!is_collider_path(g, p)) throw graph_error("not a collider path");
    const std::size_t n = p.size();
    if (n <= 2) return std::nullopt;

    struct State {
        bool reached = false;
        std::size_t parent = 0;
    };
    // key = j*4 + arrow_in*2 + skipped
    std::vector<State> dp(n * 4);
    auto key = [](std::size_t j, bool arrow_in, bool skipped) { return j * 4 + (arrow_in ? 2 : 0) + (skipped ? 1 : 0); };
    dp[key(0, false, false)].reached = true;

    std::optional<std::size_t> accept;
    for (std::size_t j = 0; j + 1 < n && !accept; ++j) {
        for (int s = 0; s < 4 && !accept; ++s) {
            const bool arrow_in = (s & 2) != 0;
            const bool skipped = (s & 1) != 0;
            const auto from = key(j, arrow_in, skipped);
            if (!dp[from].reached) continue;
            if (j > 0 && !arrow_in) continue;
            for (std::size_t next = j + 1; next < n; ++next) {
                if (!g.adjacent(p[j], p[next])) continue;
                if (j > 0 && !g.arrow_at(p[j], p[next])) continue;
                const auto to = key(next, g.arrow_at(p[next], p[j]), skipped || next > j + 1);
                if (!dp[to].reached) {
                    dp[to].reached = true;
                    dp[to].parent = from;
                }
                if (next == n - 1 && (to & 1)) {
                    accept = to;
                    break;
                }
            }
        }
    }
    if (!accept) return std::nullopt;

    PathSeq witness;
    for (auto k = *accept;; k = dp[k].parent) {
        witness.push_back(p[k / 4]);
        if (k / 4 == 0) break;
    }
    std::reverse(witness.begin(), witness.end());
    return witness;
}

/// No proper endpoint-preserving subsequence is a collider path. Single
/// edges are minimal. Throws graph_error if `p` is not a collider path.
inline bool is_minimal_collider_path(const MixedGraph& g, std::span<const vertex_index> p) {
    return !minimality_witness(g, p).has_value();
}

inline PathSeq canonicalize(std::span<const vertex_index> p) {
    PathSeq out(p.begin(), p.end());
    if (!out.empty() && out.back() < out.front()) std::reverse(out.begin(), out.end());
    return out;
}

inline CanonicalPath canonicalize(std::span<const std::string> labels) {
    CanonicalPath out{{labels.begin(), labels.end()}};
    if (!out.verts.empty() && out.verts.back() < out.verts.front()) {
        std::reverse(out.verts.begin(), out.verts.end());
    }
    return out;
}

inline CanonicalPath canonical_labels(const MixedGraph& g, std::span<const vertex_index> p) {
    auto labels = g.labels_of(p);
    return canonicalize(std::span<const std::string>(labels));
}

struct McpBudget {
    std::size_t max_paths = 5'000'000;
    /// Maximum path length in edges.
    std::size_t max_len = std::numeric_limits<std::size_t>::max();
};

/// Enumeration refused to go past its budget; the partial set is discarded.
class budget_exceeded : public std::runtime_error {
public:
    budget_exceeded(std::string what, std::size_t reached, std::size_t budget)
        : std::runtime_error(std::move(what)), reached_(reached), budget_(budget) {}

    std::size_t reached() const { return reached_; }
    std::size_t budget() const { return budget_; }

private:
    std::size_t reached_;
    std::size_t budget_;
};

/// The minimal collider paths of a graph, canonicalised and shortlex sorted.
struct McpSet {
    std::vector<CanonicalPath> paths;
    std::string graph_fingerprint;

    std::size_t size() const { return paths.size(); }
    bool contains(const CanonicalPath& p) const { return std::binary_search(paths.begin(), paths.end(), p); }
};

/// Every minimal collider path of `g`, found by DFS over collider-path
/// prefixes. Throws budget_exceeded rather than truncating, and graph_error
/// on non-ancestral input.
inline McpSet enumerate_minimal_collider_paths(const MixedGraph& g, const McpBudget& budget = {}) {
    if (!is_ancestral(g)) throw graph_error("minimal collider paths are only enumerated for ancestral graphs");
    std::set<PathSeq, ShortLex> found;
    PathSeq path;
    std::vector<bool> on_path(g.num_vertices(), false);

    auto record = [&] {
        if (path.front() > path.back()) return;  // the reversed walk records it
        if (minimality_witness(g, path)) return;
        found.insert(path);
        if (found.size() > budget.max_paths) {
            throw budget_exceeded("minimal collider path count exceeded budget of " +
                                      std::to_string(budget.max_paths),
                                  found.size(), budget.max_paths);
        }
    };

    auto extend = [&](auto&& self) -> void {
        const auto last = path.back();
        for (auto u : g.neighbors(last)) {
            if (on_path[u]) continue;
            if (path.size() >= 2 && !(g.arrow_at(last, path[path.size() - 2]) && g.arrow_at(last, u))) continue;
            if (path.size() - 1 >= budget.max_len) {
                throw budget_exceeded("collider path longer than budget of " + std::to_string(budget.max_len) +
                                          " edges",
                                      path.size(), budget.max_len);
            }
            path.push_back(u);
            on_path[u] = true;
            record();
            self(self);
            on_path[u] = false;
            path.pop_back();
        }
    };

    for (vertex_index s = 0; s < g.num_vertices(); ++s) {
        path.assign(1, s);
        on_path[s] = true;
        extend(extend);
        on_path[s] = false;
    }

    McpSet out;
    out.graph_fingerprint = graph_fingerprint(g);
    out.paths.reserve(found.size());
    for (const auto& p : found) out.paths.push_back({g.labels_of(p)});
    return out;
}

/// MCPv1 listing: header line, then one path per line in shortlex order.
inline void write_mcpv1(std::ostream& out, const McpSet& set) {
    out << "MCPv1 count=" << set.size() << " graph=" << set.graph_fingerprint << '\n';
    for (const auto& p : set.paths) out << p.to_string() << '\n';
}

}  // namespace magpath

#endif  // MAGPATH_COLLIDER_PATHS_HPP
