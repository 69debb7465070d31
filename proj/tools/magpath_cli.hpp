#ifndef MAGPATH_TOOLS_MAGPATH_CLI_HPP
#define MAGPATH_TOOLS_MAGPATH_CLI_HPP

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "magpath/magpath.hpp"

namespace magpath::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;
inline constexpr int kUsage = 2;
inline constexpr int kBudget = 3;

/// Error that maps to an exit code, with a message for stderr.
struct cli_failure {
    int code;
    std::string message;
};

inline MixedGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw cli_failure{kUsage, "cannot open '" + path + "'"};
    try {
        return parse_magv1(in);
    } catch (const parse_error& e) {
        throw cli_failure{kUsage, path + ": " + e.what()};
    }
}

inline std::size_t default_path_budget() {
    if (const char* env = std::getenv("MAGPATH_BUDGET_PATHS")) {
        try {
            std::size_t used = 0;
            std::string text(env);
            auto value = std::stoull(text, &used);
            if (used == text.size()) return value;
        } catch (const std::exception&) {
        }
        throw cli_failure{kUsage, "MAGPATH_BUDGET_PATHS must be a non-negative integer"};
    }
    return McpBudget{}.max_paths;
}

inline const char* boolstr(bool b) { return b ? "true" : "false"; }

/// Runs one invocation of the command-line tool and returns its exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Maximal ancestral graph toolkit: m-separation, minimal collider paths, Markov equivalence"};
    app.require_subcommand(1, 1);

    std::string file, file2, x, y, given, method = "zzl", out_path, csv_path;
    bool force = false;
    std::size_t budget_paths = 0, budget_len = 0, k = 0, k_max = 7;

    auto* validate = app.add_subcommand("validate", "Check that a MAGv1 graph is ancestral and maximal");
    validate->add_option("file", file, "MAGv1 file")->required();
    validate->add_flag("--force", force, "Run the exhaustive maximality check above 12 vertices");

    auto* msep = app.add_subcommand("msep", "Test m-separation of two vertices given a set");
    msep->add_option("file", file, "MAGv1 file")->required();
    msep->add_option("x", x, "First vertex")->required();
    msep->add_option("y", y, "Second vertex")->required();
    msep->add_option("--given", given, "Comma-separated conditioning set");

    auto* mcp = app.add_subcommand("mcp", "List the minimal collider paths of a graph");
    mcp->add_option("file", file, "MAGv1 file")->required();
    auto* mcp_budget = mcp->add_option("--budget-paths", budget_paths, "Maximum number of paths");
    auto* mcp_len = mcp->add_option("--budget-len", budget_len, "Maximum path length in edges");

    auto* equiv = app.add_subcommand("equiv", "Decide Markov equivalence of two graphs");
    equiv->add_option("file1", file, "First MAGv1 file")->required();
    equiv->add_option("file2", file2, "Second MAGv1 file")->required();
    equiv->add_option("--method", method, "zzl, oracle or both")
        ->check(CLI::IsMember({"zzl", "oracle", "both"}));
    auto* equiv_budget = equiv->add_option("--budget-paths", budget_paths, "Maximum number of paths per graph");

    auto* gen = app.add_subcommand("gen-gk", "Write the bipartite bidirected graph G_k");
    gen->add_option("k", k, "Number of outer vertices")->required()->check(CLI::PositiveNumber);
    gen->add_option("--out", out_path, "Output file (default stdout)");

    auto* bench = app.add_subcommand("bench", "Count minimal collider paths of G_2..G_kmax");
    bench->add_option("--kmax", k_max, "Largest k")->check(CLI::Range(std::size_t{2}, std::size_t{20}));
    auto* bench_budget = bench->add_option("--budget-paths", budget_paths, "Maximum number of paths per graph");
    bench->add_option("--csv", csv_path, "CSV output file ('-' for stdout instead of the table)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        auto path_budget = [&](CLI::Option* opt) {
            McpBudget b;
            b.max_paths = opt->count() ? budget_paths : default_path_budget();
            return b;
        };

        if (validate->parsed()) {
            auto g = load_graph(file);
            if (g.num_vertices() > 12 && !force) {
                throw cli_failure{kUsage, "graph has " + std::to_string(g.num_vertices()) +
                                              " vertices; the exhaustive maximality check needs --force above 12"};
            }
            bool ancestral = is_ancestral(g);
            bool maximal = ancestral && is_maximal(g);
            out << "ancestral: " << boolstr(ancestral) << '\n' << "maximal: " << boolstr(maximal) << '\n';
            return ancestral && maximal ? kOk : kNegative;
        }

        if (msep->parsed()) {
            auto g = load_graph(file);
            std::vector<vertex_index> z;
            std::stringstream list(given);
            for (std::string item; std::getline(list, item, ',');) {
                if (!item.empty()) z.push_back(g.index(item));
            }
            bool sep = m_separated(g, g.index(x), g.index(y), z);
            out << "m-separated: " << boolstr(sep) << '\n';
            return sep ? kOk : kNegative;
        }

        if (mcp->parsed()) {
            auto g = load_graph(file);
            auto budget = path_budget(mcp_budget);
            if (mcp_len->count()) budget.max_len = budget_len;
            auto set = enumerate_minimal_collider_paths(g, budget);
            write_mcpv1(out, set);
            out << "count=" << set.size() << '\n';
            return kOk;
        }

        if (equiv->parsed()) {
            auto g1 = load_graph(file);
            auto g2 = load_graph(file2);
            auto budget = path_budget(equiv_budget);
            bool all_equivalent = true;
            std::vector<bool> verdicts;
            if (method == "zzl" || method == "both") {
                auto v = zzl_equivalent(g1, g2, budget);
                write_verdict(out, v);
                verdicts.push_back(v.equivalent);
            }
            if (method == "oracle" || method == "both") {
                auto v = oracle_equivalent(g1, g2);
                write_verdict(out, v);
                verdicts.push_back(v.equivalent);
            }
            for (bool v : verdicts) all_equivalent = all_equivalent && v;
            if (verdicts.size() == 2) out << "agreement: " << boolstr(verdicts[0] == verdicts[1]) << '\n';
            return all_equivalent ? kOk : kNegative;
        }

        if (gen->parsed()) {
            auto text = serialize_magv1(generate_gk(k));
            if (out_path.empty()) {
                out << text;
            } else {
                std::ofstream f(out_path, std::ios::binary);
                if (!f || !(f << text)) throw cli_failure{kUsage, "cannot write '" + out_path + "'"};
            }
            return kOk;
        }

        if (bench->parsed()) {
            auto report = growth_report(k_max, path_budget(bench_budget));
            if (csv_path == "-") {
                write_growth_csv(out, report);
            } else {
                write_growth_table(out, report);
                if (!csv_path.empty()) {
                    std::ofstream f(csv_path, std::ios::binary);
                    if (!f) throw cli_failure{kUsage, "cannot write '" + csv_path + "'"};
                    write_growth_csv(f, report);
                }
            }
            bool overflow = !report.rows.empty() && report.rows.back().status != RowStatus::Ok;
            if (overflow) err << "budget exceeded at k=" << report.rows.back().k << '\n';
            return overflow ? kBudget : kOk;
        }
    } catch (const cli_failure& f) {
        err << "error: " << f.message << '\n';
        return f.code;
    } catch (const budget_exceeded& e) {
        err << "error: " << e.what() << " (reached " << e.reached() << ", budget " << e.budget() << ")\n";
        return kBudget;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace magpath::cli

#endif  // MAGPATH_TOOLS_MAGPATH_CLI_HPP
