#ifndef MAGPATH_MIXED_GRAPH_HPP
#define MAGPATH_MIXED_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace magpath {

using vertex_index = std::uint32_t;

enum class EdgeMark : std::uint8_t { Tail, Arrow };

/// An edge between two labelled vertices, with one mark per endpoint.
struct Edge {
    std::string u;
    std::string v;
    EdgeMark mark_at_u = EdgeMark::Tail;
    EdgeMark mark_at_v = EdgeMark::Arrow;

    static Edge directed(std::string from, std::string to) {
        return {std::move(from), std::move(to), EdgeMark::Tail, EdgeMark::Arrow};
    }
    static Edge bidirected(std::string a, std::string b) {
        return {std::move(a), std::move(b), EdgeMark::Arrow, EdgeMark::Arrow};
    }
    static Edge undirected(std::string a, std::string b) {
        return {std::move(a), std::move(b), EdgeMark::Tail, EdgeMark::Tail};
    }

    bool operator==(const Edge&) const = default;
};

/// Thrown by graph queries given labels or indices that are not in the graph,
/// and by build_graph on malformed input.
class graph_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline bool is_valid_label(std::string_view label) {
    if (label.empty()) return false;
    return std::all_of(label.begin(), label.end(), [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
    });
}

/// Immutable simple mixed graph. Vertices are stored in lexicographic label
/// order, so index order and label order coincide.
class MixedGraph {
public:
    MixedGraph() = default;

    std::size_t num_vertices() const { return labels_.size(); }
    std::size_t num_edges() const { return num_edges_; }

    const std::vector<std::string>& labels() const { return labels_; }

    const std::string& label(vertex_index v) const {
        check(v);
        return labels_[v];
    }

    std::optional<vertex_index> find(std::string_view label) const {
        auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
        if (it == labels_.end() || *it != label) return std::nullopt;
        return static_cast<vertex_index>(it - labels_.begin());
    }

    vertex_index index(std::string_view label) const {
        auto v = find(label);
        if (!v) throw graph_error("unknown vertex '" + std::string(label) + "'");
        return *v;
    }

    bool contains(vertex_index v) const { return v < labels_.size(); }

    bool adjacent(vertex_index a, vertex_index b) const {
        check(a);
        check(b);
        return marks_[a * labels_.size() + b] != kNone;
    }

    /// Mark at `at` on the edge joining `at` and `other`; nullopt when not adjacent.
    std::optional<EdgeMark> mark_at(vertex_index at, vertex_index other) const {
        check(at);
        check(other);
        auto m = marks_[other * labels_.size() + at];
        if (m == kNone) return std::nullopt;
        return static_cast<EdgeMark>(m - 1);
    }

    /// True iff `at` and `other` are adjacent with an arrowhead at `at`.
    bool arrow_at(vertex_index at, vertex_index other) const {
        return marks_[other * labels_.size() + at] == kArrow;
    }

    bool directed_edge(vertex_index from, vertex_index to) const {
        auto n = labels_.size();
        return marks_[to * n + from] == kTail && marks_[from * n + to] == kArrow;
    }

    /// Sorted neighbours of v.
    const std::vector<vertex_index>& neighbors(vertex_index v) const {
        check(v);
        return adjacency_[v];
    }

    /// Edges in canonical order: by (smaller label, larger label), smaller endpoint first.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(num_edges_);
        for (vertex_index a = 0; a < labels_.size(); ++a) {
            for (vertex_index b : adjacency_[a]) {
                if (b <= a) continue;
                out.push_back({labels_[a], labels_[b], *mark_at(a, b), *mark_at(b, a)});
            }
        }
        return out;
    }

    std::vector<vertex_index> indices_of(std::span<const std::string> labels) const {
        std::vector<vertex_index> out;
        out.reserve(labels.size());
        for (const auto& l : labels) out.push_back(index(l));
        return out;
    }

    std::vector<vertex_index> indices_of(std::initializer_list<std::string_view> labels) const {
        std::vector<vertex_index> out;
        out.reserve(labels.size());
        for (auto l : labels) out.push_back(index(l));
        return out;
    }

    std::vector<std::string> labels_of(std::span<const vertex_index> verts) const {
        std::vector<std::string> out;
        out.reserve(verts.size());
        for (auto v : verts) out.push_back(label(v));
        return out;
    }

    /// Same graph with `e` added. Throws graph_error if the pair is already adjacent.
    MixedGraph with_edge(const Edge& e) const {
        auto es = edges();
        es.push_back(e);
        return build(labels_, std::move(es));
    }

    /// Same graph with the edge between `a` and `b` removed (no-op if absent).
    MixedGraph without_edge(std::string_view a, std::string_view b) const {
        auto es = edges();
        std::erase_if(es, [&](const Edge& e) { return (e.u == a && e.v == b) || (e.u == b && e.v == a); });
        return build(labels_, std::move(es));
    }

    bool operator==(const MixedGraph& o) const { return labels_ == o.labels_ && marks_ == o.marks_; }

    static MixedGraph build(std::vector<std::string> vertices, std::vector<Edge> edges) {
        MixedGraph g;
        for (const auto& l : vertices) {
            if (!is_valid_label(l)) throw graph_error("invalid vertex label '" + l + "'");
        }
        std::sort(vertices.begin(), vertices.end());
        if (auto dup = std::adjacent_find(vertices.begin(), vertices.end()); dup != vertices.end()) {
            throw graph_error("duplicate vertex '" + *dup + "'");
        }
        g.labels_ = std::move(vertices);
        const auto n = g.labels_.size();
        g.marks_.assign(n * n, kNone);
        g.adjacency_.resize(n);
        for (const auto& e : edges) {
            auto a = g.find(e.u);
            auto b = g.find(e.v);
            if (!a) throw graph_error("edge endpoint '" + e.u + "' is not a declared vertex");
            if (!b) throw graph_error("edge endpoint '" + e.v + "' is not a declared vertex");
            if (*a == *b) throw graph_error("self-loop at '" + e.u + "'");
            if (g.marks_[*a * n + *b] != kNone) {
                throw graph_error("duplicate edge between '" + e.u + "' and '" + e.v + "'");
            }
            // marks_[a*n+b] holds the mark at b on edge {a,b}
            g.marks_[*a * n + *b] = encode(e.mark_at_v);
            g.marks_[*b * n + *a] = encode(e.mark_at_u);
            g.adjacency_[*a].push_back(*b);
            g.adjacency_[*b].push_back(*a);
            ++g.num_edges_;
        }
        for (auto& adj : g.adjacency_) std::sort(adj.begin(), adj.end());
        return g;
    }

private:
    static constexpr std::uint8_t kNone = 0;
    static constexpr std::uint8_t kTail = 1;
    static constexpr std::uint8_t kArrow = 2;

    static std::uint8_t encode(EdgeMark m) { return static_cast<std::uint8_t>(m) + 1; }

    void check(vertex_index v) const {
        if (v >= labels_.size()) throw graph_error("vertex index " + std::to_string(v) + " out of range");
    }

    std::vector<std::string> labels_;
    std::vector<std::uint8_t> marks_;
    std::vector<std::vector<vertex_index>> adjacency_;
    std::size_t num_edges_ = 0;
};

inline MixedGraph build_graph(std::vector<std::string> vertices, std::vector<Edge> edges) {
    return MixedGraph::build(std::move(vertices), std::move(edges));
}

}  // namespace magpath

#endif  // MAGPATH_MIXED_GRAPH_HPP
