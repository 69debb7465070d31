#ifndef MAGPATH_EQUIVALENCE_HPP
#define MAGPATH_EQUIVALENCE_HPP

#include <algorithm>
#include <iterator>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "magpath/ancestral.hpp"
#include "magpath/collider_paths.hpp"
#include "magpath/combinations.hpp"
#include "magpath/mixed_graph.hpp"

namespace magpath {

enum class EquivalenceMethod { Zzl, Oracle };

inline const char* to_string(EquivalenceMethod m) { return m == EquivalenceMethod::Zzl ? "zzl" : "oracle"; }

/// A minimal collider path present in exactly one of the two graphs.
struct PathWitness {
    CanonicalPath path;
    int graph = 1;  // 1 or 2

    bool operator==(const PathWitness&) const = default;
};

/// A separation statement on which the two graphs disagree.
struct SeparationWitness {
    std::string x;
    std::string y;
    std::vector<std::string> given;
    bool separated_in_g1 = false;
    bool separated_in_g2 = false;
};

struct EquivalenceVerdict {
    bool equivalent = true;
    EquivalenceMethod method = EquivalenceMethod::Zzl;
    std::vector<PathWitness> path_witnesses;
    std::optional<SeparationWitness> separation_witness;
};

struct McpDiff {
    McpSet only_in_g1;
    McpSet only_in_g2;
};

namespace detail {

inline void require_same_vertices(const MixedGraph& g1, const MixedGraph& g2) {
    if (g1.labels() != g2.labels()) throw graph_error("graphs are over different vertex sets");
}

inline void require_mag(const MixedGraph& g, const char* which) {
    if (!is_ancestral(g)) throw graph_error(std::string(which) + " is not ancestral");
    if (!is_maximal_fast(g)) throw graph_error(std::string(which) + " is not maximal");
}

inline McpSet set_minus(const McpSet& a, const McpSet& b) {
    McpSet out;
    out.graph_fingerprint = a.graph_fingerprint;
    std::set_difference(a.paths.begin(), a.paths.end(), b.paths.begin(), b.paths.end(),
                        std::back_inserter(out.paths));
    return out;
}

}  // namespace detail

inline McpDiff mcp_diff(const MixedGraph& g1, const MixedGraph& g2, const McpBudget& budget = {}) {
    detail::require_same_vertices(g1, g2);
    detail::require_mag(g1, "first graph");
    detail::require_mag(g2, "second graph");
    auto s1 = enumerate_minimal_collider_paths(g1, budget);
    auto s2 = enumerate_minimal_collider_paths(g2, budget);
    return {detail::set_minus(s1, s2), detail::set_minus(s2, s1)};
}

/// Markov equivalence by comparing minimal collider path sets (vertex
/// sequences only). Witnesses are the symmetric difference.
inline EquivalenceVerdict zzl_equivalent(const MixedGraph& g1, const MixedGraph& g2, const McpBudget& budget = {}) {
    auto diff = mcp_diff(g1, g2, budget);
    EquivalenceVerdict verdict;
    verdict.method = EquivalenceMethod::Zzl;
    for (auto& p : diff.only_in_g1.paths) verdict.path_witnesses.push_back({std::move(p), 1});
    for (auto& p : diff.only_in_g2.paths) verdict.path_witnesses.push_back({std::move(p), 2});
    verdict.equivalent = verdict.path_witnesses.empty();
    return verdict;
}

struct OracleOptions {
    std::size_t max_vertices = 12;
};

/// Markov equivalence by comparing every m-separation statement. Reports the
/// first disagreement in (x, y, |z|, z) order, all lexicographic by label.
inline EquivalenceVerdict oracle_equivalent(const MixedGraph& g1, const MixedGraph& g2,
                                            const OracleOptions& options = {}) {
    detail::require_same_vertices(g1, g2);
    if (g1.num_vertices() > options.max_vertices) {
        throw graph_error("oracle refuses graphs with more than " + std::to_string(options.max_vertices) +
                          " vertices");
    }
    for (const auto* g : {&g1, &g2}) {
        if (!is_ancestral(*g) || !is_maximal(*g)) {
            throw graph_error(std::string(g == &g1 ? "first" : "second") + " graph is not a maximal ancestral graph");
        }
    }

    EquivalenceVerdict verdict;
    verdict.method = EquivalenceMethod::Oracle;
    const auto n = g1.num_vertices();
    for (vertex_index x = 0; x < n && verdict.equivalent; ++x) {
        for (vertex_index y = x + 1; y < n && verdict.equivalent; ++y) {
            std::vector<vertex_index> others;
            for (vertex_index v = 0; v < n; ++v) {
                if (v != x && v != y) others.push_back(v);
            }
            for_each_subset(others.size(), [&](std::span<const std::size_t> pick) {
                std::vector<vertex_index> z;
                for (auto i : pick) z.push_back(others[i]);
                bool s1 = m_separated(g1, x, y, z);
                bool s2 = m_separated(g2, x, y, z);
                if (s1 == s2) return true;
                verdict.equivalent = false;
                verdict.separation_witness = SeparationWitness{g1.label(x), g1.label(y), g1.labels_of(z), s1, s2};
                return false;
            });
        }
    }
    return verdict;
}

/// `equivalent: <bool>`, `method: <m>`, then witness lines.
inline void write_verdict(std::ostream& out, const EquivalenceVerdict& v) {
    out << "equivalent: " << (v.equivalent ? "true" : "false") << '\n';
    out << "method: " << to_string(v.method) << '\n';
    for (int side : {1, 2}) {
        auto count = std::count_if(v.path_witnesses.begin(), v.path_witnesses.end(),
                                   [&](const PathWitness& w) { return w.graph == side; });
        if (count == 0) continue;
        out << "only-in-g" << side << ": " << count << '\n';
        for (const auto& w : v.path_witnesses) {
            if (w.graph == side) out << w.path.to_string() << '\n';
        }
    }
    if (v.separation_witness) {
        const auto& w = *v.separation_witness;
        out << "witness-sep: " << w.x << ' ' << w.y << " {";
        for (std::size_t i = 0; i < w.given.size(); ++i) out << (i ? " " : "") << w.given[i];
        out << "} g1=" << (w.separated_in_g1 ? "true" : "false") << " g2=" << (w.separated_in_g2 ? "true" : "false")
            << '\n';
    }
}

/// Valid MAGs reachable from `g` by one edit: adding an edge, removing one,
/// or changing the marks on one.
inline std::vector<MixedGraph> single_edit_variants(const MixedGraph& g) {
    std::vector<MixedGraph> out;
    auto keep = [&](MixedGraph h) {
        if (is_ancestral(h) && is_maximal_fast(h)) out.push_back(std::move(h));
    };
    const auto n = g.num_vertices();
    for (vertex_index a = 0; a < n; ++a) {
        for (vertex_index b = a + 1; b < n; ++b) {
            const auto& la = g.label(a);
            const auto& lb = g.label(b);
            const Edge kinds[] = {Edge::directed(la, lb), Edge::directed(lb, la), Edge::bidirected(la, lb)};
            if (!g.adjacent(a, b)) {
                for (const auto& e : kinds) keep(g.with_edge(e));
                continue;
            }
            auto removed = g.without_edge(la, lb);
            keep(removed);
            for (const auto& e : kinds) {
                if (!(removed.with_edge(e) == g)) keep(removed.with_edge(e));
            }
        }
    }
    return out;
}

}  // namespace magpath

#endif  // MAGPATH_EQUIVALENCE_HPP
