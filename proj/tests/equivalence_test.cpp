#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include "magpath/magpath.hpp"
#include "support/corpus.hpp"

namespace magpath {
namespace {

using Labels = std::vector<std::string>;

MixedGraph chain() { return build_graph({"a", "b", "c"}, {Edge::directed("a", "b"), Edge::directed("b", "c")}); }
MixedGraph fork() { return build_graph({"a", "b", "c"}, {Edge::directed("b", "a"), Edge::directed("b", "c")}); }
MixedGraph collider() { return build_graph({"a", "b", "c"}, {Edge::directed("a", "b"), Edge::directed("c", "b")}); }

TEST(ZzlEquivalent, Examples) {
    auto self = zzl_equivalent(generate_gk(3), generate_gk(3));
    EXPECT_TRUE(self.equivalent);
    EXPECT_TRUE(self.path_witnesses.empty());
    EXPECT_EQ(self.method, EquivalenceMethod::Zzl);

    EXPECT_TRUE(zzl_equivalent(chain(), fork()).equivalent);

    auto v = zzl_equivalent(chain(), collider());
    EXPECT_FALSE(v.equivalent);
    ASSERT_EQ(v.path_witnesses.size(), 1u);
    EXPECT_EQ(v.path_witnesses[0], (PathWitness{{{"a", "b", "c"}}, 2}));
}

TEST(ZzlEquivalent, Errors) {
    auto other = build_graph({"a", "b", "d"}, {Edge::directed("a", "b")});
    EXPECT_THROW(zzl_equivalent(chain(), other), graph_error);
    auto cyclic =
        build_graph({"a", "b", "c"}, {Edge::directed("a", "b"), Edge::directed("b", "c"), Edge::directed("c", "a")});
    EXPECT_THROW(zzl_equivalent(chain(), cyclic), graph_error);
    auto non_maximal = build_graph({"a", "b", "c", "d"}, {Edge::bidirected("a", "b"), Edge::bidirected("b", "c"),
                                                          Edge::bidirected("c", "d"), Edge::directed("b", "d"),
                                                          Edge::directed("c", "a")});
    EXPECT_THROW(zzl_equivalent(non_maximal, non_maximal), graph_error);
    EXPECT_THROW(zzl_equivalent(generate_gk(4), generate_gk(4), {.max_paths = 5}), budget_exceeded);
}

TEST(OracleEquivalent, Examples) {
    EXPECT_TRUE(oracle_equivalent(chain(), chain()).equivalent);
    EXPECT_TRUE(oracle_equivalent(chain(), fork()).equivalent);

    auto v = oracle_equivalent(chain(), collider());
    EXPECT_FALSE(v.equivalent);
    ASSERT_TRUE(v.separation_witness);
    // First disagreement in (x, y, |z|, z) order: a, c given nothing.
    EXPECT_EQ(v.separation_witness->x, "a");
    EXPECT_EQ(v.separation_witness->y, "c");
    EXPECT_TRUE(v.separation_witness->given.empty());
    EXPECT_FALSE(v.separation_witness->separated_in_g1);
    EXPECT_TRUE(v.separation_witness->separated_in_g2);
}

TEST(OracleEquivalent, G2AgainstDirectedCollider) {
    auto g2 = generate_gk(2);
    auto directed = build_graph(g2.labels(), {Edge::directed("x1", "v_x1_x2"), Edge::directed("x2", "v_x1_x2")});
    auto oracle = oracle_equivalent(g2, directed);
    auto zzl = zzl_equivalent(g2, directed);
    EXPECT_EQ(oracle.equivalent, zzl.equivalent);
    EXPECT_TRUE(oracle.equivalent);
}

TEST(OracleEquivalent, Errors) {
    EXPECT_THROW(oracle_equivalent(chain(), build_graph({"a", "b"}, {})), graph_error);
    EXPECT_THROW(oracle_equivalent(generate_gk(5), generate_gk(5)), graph_error);
    EXPECT_TRUE(oracle_equivalent(generate_gk(4), generate_gk(4), {.max_vertices = 10}).equivalent);
}

TEST(McpDiff, Examples) {
    auto same = mcp_diff(chain(), chain());
    EXPECT_EQ(same.only_in_g1.size(), 0u);
    EXPECT_EQ(same.only_in_g2.size(), 0u);

    auto d = mcp_diff(chain(), collider());
    EXPECT_EQ(d.only_in_g1.size(), 0u);
    ASSERT_EQ(d.only_in_g2.size(), 1u);
    EXPECT_EQ(d.only_in_g2.paths[0].verts, (Labels{"a", "b", "c"}));

    auto g3 = generate_gk(3);
    auto cut = g3.without_edge("x1", "v_x1_x2");
    auto diff = mcp_diff(g3, cut);
    EXPECT_TRUE(diff.only_in_g1.contains({{"v_x1_x2", "x1"}}));
    for (const auto& p : diff.only_in_g1.paths) {
        bool uses_edge = false;
        for (std::size_t i = 0; i + 1 < p.verts.size(); ++i) {
            uses_edge = uses_edge || (p.verts[i] == "x1" && p.verts[i + 1] == "v_x1_x2") ||
                        (p.verts[i] == "v_x1_x2" && p.verts[i + 1] == "x1");
        }
        EXPECT_TRUE(uses_edge) << p.to_string();
    }
}

TEST(Verdict, SerializationFormat) {
    std::ostringstream out;
    write_verdict(out, zzl_equivalent(chain(), collider()));
    EXPECT_EQ(out.str(), "equivalent: false\nmethod: zzl\nonly-in-g2: 1\na b c\n");
    std::ostringstream sep;
    write_verdict(sep, oracle_equivalent(chain(), collider()));
    EXPECT_EQ(sep.str(), "equivalent: false\nmethod: oracle\nwitness-sep: a c {} g1=false g2=true\n");
}

TEST(EquivalenceProperties, ReflexiveSymmetricAndWitnessesValid) {
    for (const auto& [g1, g2] : testing::pair_corpus(30, 3)) {
        EXPECT_TRUE(zzl_equivalent(g1, g1).equivalent);
        auto forward = zzl_equivalent(g1, g2);
        auto backward = zzl_equivalent(g2, g1);
        EXPECT_EQ(forward.equivalent, backward.equivalent);
        EXPECT_EQ(forward.equivalent, forward.path_witnesses.empty());
        for (const auto& w : forward.path_witnesses) {
            const auto& mine = w.graph == 1 ? g1 : g2;
            const auto& theirs = w.graph == 1 ? g2 : g1;
            auto p = mine.indices_of(w.path.verts);
            EXPECT_TRUE(is_minimal_collider_path(mine, p));
            auto q = theirs.indices_of(w.path.verts);
            bool in_other = is_path(theirs, q) && is_collider_path(theirs, q) && is_minimal_collider_path(theirs, q);
            EXPECT_FALSE(in_other);
        }
        bool same_skeleton = true;
        for (vertex_index a = 0; a < g1.num_vertices(); ++a)
            for (vertex_index b = 0; b < g1.num_vertices(); ++b)
                if (a != b) same_skeleton = same_skeleton && g1.adjacent(a, b) == g2.adjacent(a, b);
        if (!same_skeleton) { EXPECT_FALSE(forward.equivalent); }
    }
}

TEST(EquivalenceProperties, CriterionAgreesWithOracle) {
    std::size_t equivalent = 0, total = 0;
    for (const auto& [g1, g2] : testing::pair_corpus(40, 4)) {
        auto zzl = zzl_equivalent(g1, g2);
        auto oracle = oracle_equivalent(g1, g2);
        EXPECT_EQ(zzl.equivalent, oracle.equivalent) << serialize_magv1(g1) << "---\n" << serialize_magv1(g2);
        equivalent += oracle.equivalent;
        ++total;
    }
    EXPECT_GT(equivalent, 0u);
    EXPECT_LT(equivalent, total);
}

TEST(SingleEditVariants, AllValidAndDistinct) {
    auto g = chain();
    auto variants = single_edit_variants(g);
    EXPECT_FALSE(variants.empty());
    for (const auto& v : variants) {
        EXPECT_TRUE(is_ancestral(v));
        EXPECT_TRUE(is_maximal(v));
        EXPECT_FALSE(v == g);
    }
}

}  // namespace
}  // namespace magpath
