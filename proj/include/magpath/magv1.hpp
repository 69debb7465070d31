#ifndef MAGPATH_MAGV1_HPP
#define MAGPATH_MAGV1_HPP

#include <cstdint>
#include <cstdio>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "magpath/mixed_graph.hpp"

namespace magpath {

/// Malformed MAGv1 text, or well-formed text describing an invalid graph.
class parse_error : public std::runtime_error {
public:
    parse_error(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

namespace detail {

inline const char* edge_op(EdgeMark left, EdgeMark right) {
    if (left == EdgeMark::Tail) return right == EdgeMark::Arrow ? "-->" : "---";
    return right == EdgeMark::Arrow ? "<->" : "<--";
}

inline bool parse_edge_op(const std::string& op, EdgeMark& left, EdgeMark& right) {
    if (op == "-->") {
        left = EdgeMark::Tail;
        right = EdgeMark::Arrow;
    } else if (op == "<--") {
        left = EdgeMark::Arrow;
        right = EdgeMark::Tail;
    } else if (op == "<->") {
        left = right = EdgeMark::Arrow;
    } else if (op == "---") {
        left = right = EdgeMark::Tail;
    } else {
        return false;
    }
    return true;
}

inline std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace detail

/// Canonical MAGv1 text: sorted vertices on one line, edges sorted by
/// endpoint pair with the smaller label on the left.
inline std::string serialize_magv1(const MixedGraph& g) {
    std::string out = "MAGv1\nvertices:";
    for (const auto& l : g.labels()) {
        out += ' ';
        out += l;
    }
    out += '\n';
    for (const auto& e : g.edges()) {
        out += "edge: " + e.u + ' ' + detail::edge_op(e.mark_at_u, e.mark_at_v) + ' ' + e.v + '\n';
    }
    return out;
}

inline MixedGraph parse_magv1(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    if (!std::getline(in, line)) throw parse_error(1, "empty input, expected 'MAGv1'");
    ++lineno;
    if (detail::trim(line) != "MAGv1") throw parse_error(1, "expected 'MAGv1' header");

    std::vector<std::string> vertices;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++lineno;
        auto text = detail::trim(line);
        if (text.empty() || text[0] == '#') continue;
        std::istringstream fields(text);
        std::string keyword;
        fields >> keyword;
        if (keyword == "vertices:") {
            std::string label;
            while (fields >> label) {
                if (!is_valid_label(label)) throw parse_error(lineno, "invalid vertex label '" + label + "'");
                vertices.push_back(label);
            }
        } else if (keyword == "edge:") {
            std::string u, op, v, extra;
            if (!(fields >> u >> op >> v) || (fields >> extra)) {
                throw parse_error(lineno, "expected 'edge: <u> <op> <v>'");
            }
            Edge e{u, v};
            if (!detail::parse_edge_op(op, e.mark_at_u, e.mark_at_v)) {
                throw parse_error(lineno, "unknown edge operator '" + op + "'");
            }
            if (!is_valid_label(u) || !is_valid_label(v)) throw parse_error(lineno, "invalid vertex label");
            if (u == v) throw parse_error(lineno, "self-loop at '" + u + "'");
            edges.push_back(std::move(e));
        } else {
            throw parse_error(lineno, "unrecognised line '" + text + "'");
        }
    }
    try {
        return build_graph(std::move(vertices), std::move(edges));
    } catch (const graph_error& err) {
        throw parse_error(lineno, err.what());
    }
}

inline MixedGraph parse_magv1(const std::string& text) {
    std::istringstream in(text);
    return parse_magv1(in);
}

/// 64-bit FNV-1a of the canonical serialization, as 16 hex digits.
inline std::string graph_fingerprint(const MixedGraph& g) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : serialize_magv1(g)) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace magpath

#endif  // MAGPATH_MAGV1_HPP
