#ifndef MAGPATH_COUNTEREXAMPLE_HPP
#define MAGPATH_COUNTEREXAMPLE_HPP

#include <chrono>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "magpath/collider_paths.hpp"
#include "magpath/mixed_graph.hpp"

namespace magpath {

/// Labels of the bipartite bidirected graph G_k: outer vertices x1..xk and
/// one connector v_xi_xj per pair i < j.
class GkSpec {
public:
    explicit GkSpec(std::size_t k) : k_(k) {
        if (k == 0) throw std::invalid_argument("G_k needs k >= 1");
    }

    std::size_t k() const { return k_; }

    static std::string outer_label(std::size_t i) { return "x" + std::to_string(i); }

    static std::string connector_label(std::size_t i, std::size_t j) {
        if (i > j) std::swap(i, j);
        return "v_" + outer_label(i) + "_" + outer_label(j);
    }

    std::vector<std::string> outer_labels() const {
        std::vector<std::string> out;
        for (std::size_t i = 1; i <= k_; ++i) out.push_back(outer_label(i));
        return out;
    }

    std::vector<std::string> connector_labels() const {
        std::vector<std::string> out;
        for (std::size_t i = 1; i <= k_; ++i) {
            for (std::size_t j = i + 1; j <= k_; ++j) out.push_back(connector_label(i, j));
        }
        return out;
    }

    /// 1-based position of an outer label, or 0 if it is not one.
    std::size_t outer_position(const std::string& label) const {
        if (label.size() < 2 || label[0] != 'x' || label[1] == '0') return 0;
        std::size_t i = 0;
        for (std::size_t c = 1; c < label.size(); ++c) {
            if (label[c] < '0' || label[c] > '9') return 0;
            i = i * 10 + static_cast<std::size_t>(label[c] - '0');
            if (i > k_) return 0;
        }
        return i;
    }

private:
    std::size_t k_;
};

inline MixedGraph generate_gk(std::size_t k) {
    GkSpec spec(k);
    auto vertices = spec.outer_labels();
    std::vector<Edge> edges;
    for (std::size_t i = 1; i <= k; ++i) {
        for (std::size_t j = i + 1; j <= k; ++j) {
            auto c = GkSpec::connector_label(i, j);
            vertices.push_back(c);
            edges.push_back(Edge::bidirected(GkSpec::outer_label(i), c));
            edges.push_back(Edge::bidirected(GkSpec::outer_label(j), c));
        }
    }
    return build_graph(std::move(vertices), std::move(edges));
}

/// <a1, v_a1a2, a2, ..., v_a(m-1)am, am> for distinct outer labels a1..am.
inline std::vector<std::string> sequence_to_path(const GkSpec& spec, std::span<const std::string> seq) {
    if (seq.size() < 2) throw std::invalid_argument("sequence needs at least two outer vertices");
    std::vector<std::size_t> pos;
    for (const auto& label : seq) {
        auto p = spec.outer_position(label);
        if (p == 0) throw std::invalid_argument("'" + label + "' is not an outer vertex of G_" + std::to_string(spec.k()));
        if (std::find(pos.begin(), pos.end(), p) != pos.end()) {
            throw std::invalid_argument("repeated vertex '" + label + "' in sequence");
        }
        pos.push_back(p);
    }
    std::vector<std::string> path{GkSpec::outer_label(pos[0])};
    for (std::size_t i = 1; i < pos.size(); ++i) {
        path.push_back(GkSpec::connector_label(pos[i - 1], pos[i]));
        path.push_back(GkSpec::outer_label(pos[i]));
    }
    return path;
}

/// Largest k with k(k+1)/2 <= n.
inline std::uint64_t k_of_n(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("k_of_n needs n >= 1");
    auto k = static_cast<std::uint64_t>(std::sqrt(2.0 * static_cast<double>(n)));
    auto tri = [](std::uint64_t m) -> unsigned __int128 { return static_cast<unsigned __int128>(m) * (m + 1) / 2; };
    while (k > 0 && tri(k) > n) --k;
    while (tri(k + 1) <= n) ++k;
    return k;
}

/// k!, throwing std::overflow_error instead of wrapping.
inline std::uint64_t checked_factorial(std::uint64_t k) {
    std::uint64_t f = 1;
    for (std::uint64_t i = 2; i <= k; ++i) {
        if (__builtin_mul_overflow(f, i, &f)) {
            throw std::overflow_error(std::to_string(k) + "! does not fit in 64 bits");
        }
    }
    return f;
}

/// k!/2, the lower bound on the minimal collider path count of G_k.
inline std::uint64_t mcp_lower_bound(std::uint64_t k) {
    if (k < 2) throw std::invalid_argument("mcp_lower_bound needs k >= 2");
    return checked_factorial(k) / 2;
}

enum class RowStatus { Ok, BudgetExceeded };

inline const char* to_string(RowStatus s) { return s == RowStatus::Ok ? "ok" : "budget_exceeded"; }

struct GrowthRow {
    std::size_t k = 0;
    std::size_t n_vertices = 0;
    std::size_t n_edges = 0;
    /// Exact count when status is Ok; the count reached when the budget tripped.
    std::size_t mcp_count = 0;
    std::uint64_t lower_bound = 0;
    std::chrono::duration<double, std::milli> elapsed{};
    RowStatus status = RowStatus::Ok;
};

struct GrowthReport {
    std::vector<GrowthRow> rows;
    /// True when a row tripped the budget and later k were skipped.
    bool partial = false;
};

/// Enumerates minimal collider paths of G_2..G_kmax. Stops after the first
/// row whose enumeration exceeds the budget.
inline GrowthReport growth_report(std::size_t k_max, const McpBudget& budget = {}) {
    if (k_max < 2) throw std::invalid_argument("growth_report needs k_max >= 2");
    GrowthReport report;
    for (std::size_t k = 2; k <= k_max; ++k) {
        GrowthRow row;
        row.k = k;
        row.lower_bound = mcp_lower_bound(k);
        auto start = std::chrono::steady_clock::now();
        auto g = generate_gk(k);
        row.n_vertices = g.num_vertices();
        row.n_edges = g.num_edges();
        try {
            row.mcp_count = enumerate_minimal_collider_paths(g, budget).size();
        } catch (const budget_exceeded& e) {
            row.mcp_count = e.reached();
            row.status = RowStatus::BudgetExceeded;
        }
        row.elapsed = std::chrono::steady_clock::now() - start;
        report.rows.push_back(row);
        if (row.status != RowStatus::Ok) {
            report.partial = k < k_max;
            break;
        }
    }
    return report;
}

inline void write_growth_csv(std::ostream& out, const GrowthReport& report) {
    out << "k,n_vertices,n_edges,mcp_count,lower_bound,elapsed_ms,status\n";
    for (const auto& r : report.rows) {
        out << r.k << ',' << r.n_vertices << ',' << r.n_edges << ',' << r.mcp_count << ',' << r.lower_bound << ','
            << std::fixed << std::setprecision(3) << r.elapsed.count() << std::defaultfloat << ',' << to_string(r.status)
            << '\n';
    }
}

/// Human-readable table with the k!/2 bound and floor(sqrt(n)) alongside.
inline void write_growth_table(std::ostream& out, const GrowthReport& report) {
    out << std::setw(3) << "k" << std::setw(12) << "n_vertices" << std::setw(10) << "n_edges" << std::setw(14)
        << "mcp_count" << std::setw(12) << "k!/2" << std::setw(14) << "floor(sqrt n)" << std::setw(13) << "elapsed_ms"
        << "  status\n";
    for (const auto& r : report.rows) {
        auto root = static_cast<std::size_t>(std::sqrt(static_cast<double>(r.n_vertices)));
        while (root * root > r.n_vertices) --root;
        while ((root + 1) * (root + 1) <= r.n_vertices) ++root;
        out << std::setw(3) << r.k << std::setw(12) << r.n_vertices << std::setw(10) << r.n_edges << std::setw(14)
            << r.mcp_count << std::setw(12) << r.lower_bound << std::setw(14) << root << std::setw(13) << std::fixed
            << std::setprecision(1) << r.elapsed.count() << std::defaultfloat << "  " << to_string(r.status) << '\n';
    }
    if (report.partial) out << "(partial: budget exceeded, larger k skipped)\n";
}

}  // namespace magpath

#endif  // MAGPATH_COUNTEREXAMPLE_HPP
