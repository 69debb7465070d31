#ifndef MAGPATH_RANDOM_MAG_HPP
#define MAGPATH_RANDOM_MAG_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "magpath/ancestral.hpp"
#include "magpath/mixed_graph.hpp"

namespace magpath {

/// Labels v0..v{n-1}, zero padded so label order matches numeric order.
inline std::vector<std::string> numbered_labels(std::size_t n) {
    const auto width = std::to_string(n == 0 ? 0 : n - 1).size();
    std::vector<std::string> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto digits = std::to_string(i);
        out.push_back("v" + std::string(width - digits.size(), '0') + digits);
    }
    return out;
}

/// Random maximal ancestral graph over directed and bidirected edges,
/// deterministic in `seed`.
///
/// Draws a causal order, adds forward directed edges with probability
/// `p_dir` and otherwise bidirected edges with probability `p_bi`, drops
/// bidirected edges that close an almost-directed cycle, then joins
/// non-adjacent pairs that admit no separating set until the graph is maximal.
/// Repair edges never change ancestor relations, so the graph stays ancestral.
inline MixedGraph random_mag(std::uint64_t seed, std::size_t n, double p_dir, double p_bi) {
    if (n == 0) throw graph_error("random_mag needs at least one vertex");
    if (!(p_dir >= 0.0 && p_dir <= 1.0) || !(p_bi >= 0.0 && p_bi <= 1.0)) {
        throw graph_error("edge probabilities must lie in [0, 1]");
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    const auto labels = numbered_labels(n);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::shuffle(order.begin(), order.end(), rng);

    std::vector<Edge> directed;
    std::vector<Edge> bidirected;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto& a = labels[order[i]];
            const auto& b = labels[order[j]];
            if (unit(rng) < p_dir) {
                directed.push_back(Edge::directed(a, b));
            } else if (unit(rng) < p_bi) {
                bidirected.push_back(Edge::bidirected(a, b));
            }
        }
    }

    auto dag = build_graph(labels, directed);
    std::vector<Edge> edges = directed;
    for (const auto& e : bidirected) {
        auto u = dag.index(e.u);
        auto v = dag.index(e.v);
        if (!ancestor_mask(dag, std::span<const vertex_index>(&v, 1))[u] &&
            !ancestor_mask(dag, std::span<const vertex_index>(&u, 1))[v]) {
            edges.push_back(e);
        }
    }

    auto g = build_graph(labels, edges);
    bool repaired = true;
    while (repaired) {
        repaired = false;
        for (vertex_index x = 0; x < n && !repaired; ++x) {
            for (vertex_index y = x + 1; y < n && !repaired; ++y) {
                if (g.adjacent(x, y) || find_separating_set(g, x, y)) continue;
                const bool x_anc = ancestor_mask(g, std::span<const vertex_index>(&y, 1))[x];
                const bool y_anc = ancestor_mask(g, std::span<const vertex_index>(&x, 1))[y];
                if (x_anc) {
                    g = g.with_edge(Edge::directed(g.label(x), g.label(y)));
                } else if (y_anc) {
                    g = g.with_edge(Edge::directed(g.label(y), g.label(x)));
                } else {
                    g = g.with_edge(Edge::bidirected(g.label(x), g.label(y)));
                }
                repaired = true;
            }
        }
    }
    return g;
}

}  // namespace magpath

#endif  // MAGPATH_RANDOM_MAG_HPP
