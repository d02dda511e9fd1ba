#include <gtest/gtest.h>

#include "cag/catalog.hpp"
#include "cag/chordal.hpp"
#include "cag/oracle.hpp"

using namespace cag;

namespace {

Graph complete(int n) {
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph::with_index_labels(n, e);
}

Graph cycle(int n) {
    std::vector<Edge> e;
    for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
    return Graph::with_index_labels(n, e);
}

std::string clique_name(const Graph& g, const Clique& c) {
    std::vector<std::string> ls;
    for (Vertex v : c) ls.push_back(g.label(v));
    std::sort(ls.begin(), ls.end());
    std::string s;
    for (auto& l : ls) s += l;
    return s;
}

std::vector<std::string> clique_names(const Graph& g, const std::vector<Clique>& cs) {
    std::vector<std::string> out;
    for (const auto& c : cs) out.push_back(clique_name(g, c));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST(IsChordal, CycleOfFour) { EXPECT_FALSE(is_chordal(cycle(4))); }

TEST(IsChordal, CompleteGraphAnyOrder) {
    Graph k4 = complete(4);
    auto peo = is_chordal(k4);
    ASSERT_TRUE(peo);
    std::vector<Vertex> order{3, 1, 0, 2};
    EXPECT_TRUE(is_perfect_elimination_order(k4, order));
}

TEST(IsChordal, ExampleGraph) {
    Graph g = example_graph();
    auto peo = is_chordal(g);
    ASSERT_TRUE(peo);
    EXPECT_TRUE(is_perfect_elimination_order(g, *peo));
}

TEST(IsChordal, LongerCyclesAndTrees) {
    EXPECT_FALSE(is_chordal(cycle(5)));
    EXPECT_FALSE(is_chordal(cycle(6)));
    EXPECT_TRUE(is_chordal(cycle(3)));
    EXPECT_TRUE(is_chordal(fig1e_labelled()));
}

TEST(LexBfs, VisitsEveryVertexOnce) {
    Graph g = example_graph();
    auto order = lex_bfs(g);
    std::sort(order.begin(), order.end());
    for (Vertex v = 0; v < g.size(); ++v) EXPECT_EQ(order[v], v);
}

TEST(MaximalCliques, Triangle) {
    Graph k3 = complete(3);
    auto cs = maximal_cliques(k3, *is_chordal(k3));
    ASSERT_EQ(cs.size(), 1u);
    EXPECT_EQ(cs[0], (Clique{0, 1, 2}));
}

TEST(MaximalCliques, PathOnThree) {
    Graph g = parse_graph("a b\nb c");
    EXPECT_EQ(clique_names(g, maximal_cliques(g, *is_chordal(g))), (std::vector<std::string>{"ab", "bc"}));
}

TEST(MaximalCliques, ExampleGraph) {
    Graph g = example_graph();
    auto names = clique_names(g, maximal_cliques(g, *is_chordal(g)));
    std::vector<std::string> want{"co", "hlo", "blo", "hio", "eh", "hij", "ahj", "him", "imp", "dip", "in"};
    std::sort(want.begin(), want.end());
    EXPECT_EQ(names, want);
}

TEST(MaximalCliques, RejectsNonPeo) {
    Graph g = parse_graph("a b\nb c");
    std::vector<Vertex> bad{g.at("b"), g.at("a"), g.at("c")};
    try {
        maximal_cliques(g, bad);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::InvalidPEO);
    }
}

TEST(CliqueTree, PathOnThree) {
    Graph g = parse_graph("a b\nb c");
    CliqueTree t = build_clique_tree(g);
    ASSERT_EQ(t.node_count(), 2);
    EXPECT_EQ(t.edges.size(), 1u);
    EXPECT_TRUE(validate_clique_tree(g, t));
}

TEST(CliqueTree, ExampleGraphValid) {
    Graph g = example_graph();
    CliqueTree t = build_clique_tree(g);
    EXPECT_EQ(t.node_count(), 11);
    EXPECT_TRUE(validate_clique_tree(g, t));
}

TEST(CliqueTree, PinnedExampleTree) {
    Graph g = example_graph();
    auto f = *catalog_entry("fig4")->example;
    CliqueTree t = example_tree(g, f);
    EXPECT_TRUE(validate_clique_tree(g, t));

    // co-hlo replaced by co-in disconnects the cliques holding o.
    CliqueTree broken = t;
    NodeId co = 0, hlo = 1, in = 10;
    broken.replace_edge({co, hlo}, {co, in});
    EXPECT_FALSE(validate_clique_tree(g, broken));
}

TEST(CliqueTree, TwoDisjointEdges) {
    Graph g = parse_graph("0 1\n2 3");
    CliqueTree t = build_clique_tree(g);
    ASSERT_EQ(t.node_count(), 2);
    EXPECT_EQ(t.edges, (std::vector<TreeEdge>{{0, 1}}));
    EXPECT_TRUE(validate_clique_tree(g, t));
}

TEST(CliqueTree, SingleNode) {
    Graph k3 = complete(3);
    CliqueTree t;
    t.cliques = {{0, 1, 2}};
    EXPECT_TRUE(validate_clique_tree(k3, t));
}

TEST(CliqueTree, RejectsNonMaximalOrMissingClique) {
    Graph g = parse_graph("a b\nb c");
    CliqueTree t;
    t.cliques = {{g.at("a"), g.at("b")}};
    EXPECT_FALSE(validate_clique_tree(g, t));
    t.cliques = {{g.at("a")}, {g.at("b"), g.at("c")}};
    t.edges = {{0, 1}};
    EXPECT_FALSE(validate_clique_tree(g, t));
}

TEST(CliqueTree, NotChordal) {
    try {
        build_clique_tree(cycle(4));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::NotChordal);
    }
}

TEST(AlphaCover, Complete) {
    Graph k5 = complete(5);
    auto ac = alpha_and_cover(k5, *is_chordal(k5));
    EXPECT_EQ(ac.independent.size(), 1u);
    ASSERT_EQ(ac.cover.members.size(), 1u);
    EXPECT_EQ(ac.cover.members[0], (Clique{0, 1, 2, 3, 4}));
}

TEST(AlphaCover, Edgeless) {
    Graph g = parse_graph("a\nb\nc\nd");
    auto ac = alpha_and_cover(g, *is_chordal(g));
    EXPECT_EQ(ac.independent.size(), 4u);
    EXPECT_EQ(ac.cover.members.size(), 4u);
    for (const auto& c : ac.cover.members) EXPECT_EQ(c.size(), 1u);
}

TEST(AlphaCover, CounterexampleLeft) {
    Graph g = fig2_left();
    auto ac = alpha_and_cover(g, *is_chordal(g));
    EXPECT_EQ(ac.independent.size(), 5u);
    EXPECT_TRUE(is_independent(g, ac.independent));
    EXPECT_EQ(brute_force_alpha(g), 5);
}

TEST(AlphaCover, CoverIsMaximalAndCovers) {
    Graph g = example_graph();
    auto peo = *is_chordal(g);
    auto ac = alpha_and_cover(g, peo);
    auto cliques = maximal_cliques(g, peo);
    std::vector<char> covered(g.size(), 0);
    ASSERT_EQ(ac.cover.members.size(), ac.independent.size());
    for (std::size_t i = 0; i < ac.cover.members.size(); ++i) {
        const auto& c = ac.cover.members[i];
        EXPECT_NE(std::find(cliques.begin(), cliques.end(), c), cliques.end());
        EXPECT_TRUE(std::binary_search(c.begin(), c.end(), ac.independent[i]));
        for (Vertex v : c) covered[v] = 1;
    }
    EXPECT_TRUE(std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; }));
    EXPECT_EQ(static_cast<int>(ac.independent.size()), brute_force_alpha(g));
}

TEST(AlphaCover, RejectsNonPeo) {
    Graph g = parse_graph("a b\nb c");
    std::vector<Vertex> bad{g.at("b"), g.at("a"), g.at("c")};
    EXPECT_THROW(alpha_and_cover(g, bad), Error);
}

TEST(LeafPrivateVertex, ExampleLeaves) {
    Graph g = example_graph();
    auto f = *catalog_entry("fig4")->example;
    CliqueTree t = example_tree(g, f);
    EXPECT_EQ(g.label(leaf_private_vertex(g, t, 0)), "c");  // co
    EXPECT_EQ(g.label(leaf_private_vertex(g, t, 6)), "a");  // ahj
}

TEST(LeafPrivateVertex, PathOnThree) {
    Graph g = parse_graph("a b\nb c");
    CliqueTree t = build_clique_tree(g);
    NodeId ab = t.cliques[0] == Clique{g.at("a"), g.at("b")} ? 0 : 1;
    EXPECT_EQ(g.label(leaf_private_vertex(g, t, ab)), "a");
}

TEST(LeafPrivateVertex, Errors) {
    Graph g = example_graph();
    auto f = *catalog_entry("fig4")->example;
    CliqueTree t = example_tree(g, f);
    try {
        leaf_private_vertex(g, t, 3);  // hio
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::NotALeaf);
    }
    CliqueTree dup;
    dup.cliques = {{0, 1}, {0, 1}};
    dup.edges = {{0, 1}};
    try {
        leaf_private_vertex(parse_graph("a b"), dup, 0);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::NoPrivateVertex);
    }
}
