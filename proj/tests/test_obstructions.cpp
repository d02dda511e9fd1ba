#include <gtest/gtest.h>

#include "cag/catalog.hpp"
#include "cag/obstructions.hpp"
#include "cag/templates.hpp"

using namespace cag;

namespace {

Graph cycle(int n) {
    std::vector<Edge> e;
    for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
    return Graph::with_index_labels(n, e);
}

Graph path(int n) {
    std::vector<Edge> e;
    for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
    return Graph::with_index_labels(n, e);
}

std::vector<std::string> labels_of(const Graph& g, std::span<const Vertex> vs) {
    std::vector<std::string> out;
    for (Vertex v : vs) out.push_back(g.label(v));
    return out;
}

std::vector<std::string> sorted_labels(const Graph& g, std::span<const Vertex> vs) {
    auto out = labels_of(g, vs);
    std::sort(out.begin(), out.end());
    return out;
}

Graph with_extra_edge(const Graph& g, const std::string& u, const std::string& v) {
    auto edges = g.edges();
    edges.emplace_back(g.at(u), g.at(v));
    return Graph(g.labels(), edges);
}

} // namespace

TEST(Templates, SizesAndParameters) {
    EXPECT_EQ(family_template("Fig1-a", {}).size(), 7);
    EXPECT_EQ(family_template("Fig3-a", {}).size(), 6);
    std::vector<int> one{1}, two{2}, three{3};
    EXPECT_EQ(family_template("Fig1-c", one).size(), 7);
    EXPECT_EQ(family_template("Fig1-c", two).size(), 8);
    EXPECT_EQ(family_template("Fig3-d", two).size(), 7);
    EXPECT_EQ(family_template("Fig3-d", three).size(), 8);
    EXPECT_EQ(family_template("Fig1-e", {}).size(), 7);
    EXPECT_EQ(family_template("Fig1-e", {}).edge_count(), 6);
    EXPECT_THROW(family_template("Fig9", {}), Error);
    EXPECT_THROW(family_template("Fig1-c", {}), Error);
    std::vector<int> bad_d{2, 2};
    EXPECT_THROW(family_template("Fig1-d", bad_d), Error);
}

TEST(Templates, BlockingFamiliesCarryAQuadruple) {
    for (auto e : paper_catalog()) {
        if (!e.expect_bq || !*e.expect_bq) continue;
        auto q = labelled_quad(e);
        auto bq = blocking_quadruple_on(e.graph, q);
        ASSERT_TRUE(bq) << e.name;
        EXPECT_TRUE(validate_blocking_quadruple(e.graph, *bq)) << e.name;
        EXPECT_TRUE(is_chordal(e.graph)) << e.name;
    }
}

TEST(Templates, IntervalFamiliesAreMinimalNonInterval) {
    for (auto e : paper_catalog()) {
        if (e.name.rfind("fig3-", 0) != 0) continue;
        EXPECT_TRUE(is_chordal(e.graph)) << e.name;
        EXPECT_FALSE(is_interval(e.graph)) << e.name;
        for (Vertex v = 0; v < e.graph.size(); ++v) {
            std::vector<Vertex> keep;
            for (Vertex w = 0; w < e.graph.size(); ++w)
                if (w != v) keep.push_back(w);
            EXPECT_TRUE(is_interval(induced_subgraph(e.graph, keep))) << e.name << " minus " << e.graph.label(v);
        }
    }
}

TEST(AvoidWitness, LongClaw) {
    Graph g = fig1e_labelled();
    auto w = avoid_witness(g, {g.at("x7"), g.at("x5")}, {g.at("x6"), g.at("x3")});
    ASSERT_TRUE(w);
    EXPECT_EQ(w->host, 1);
    EXPECT_EQ(labels_of(g, w->path.vertices), (std::vector<std::string>{"x6", "x2", "x3"}));
}

TEST(AvoidWitness, FourCycleOppositePairs) {
    Graph g = cycle(4);
    EXPECT_FALSE(avoid_witness(g, {0, 2}, {1, 3}));
}

TEST(AvoidWitness, TwoDisjointEdges) {
    Graph g = parse_graph("a b\nc d");
    EXPECT_FALSE(avoid_witness(g, {g.at("a"), g.at("c")}, {g.at("b"), g.at("d")}));
    auto w = avoid_witness(g, {g.at("a"), g.at("b")}, {g.at("c"), g.at("d")});
    ASSERT_TRUE(w);
    EXPECT_EQ(w->host, 0);
    EXPECT_EQ(labels_of(g, w->path.vertices), (std::vector<std::string>{"a", "b"}));
}

TEST(BlockingQuadruple, LongClaw) {
    Graph g = fig1e_labelled();
    auto bq = find_blocking_quadruple(g);
    ASSERT_TRUE(bq);
    EXPECT_EQ(sorted_labels(g, bq->quad), (std::vector<std::string>{"x3", "x5", "x6", "x7"}));
    EXPECT_TRUE(validate_blocking_quadruple(g, *bq));
}

TEST(BlockingQuadruple, AbsentCases) {
    std::vector<Edge> k4e{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    EXPECT_FALSE(find_blocking_quadruple(Graph::with_index_labels(4, k4e)));
    EXPECT_FALSE(find_blocking_quadruple(fig2_left()));
    EXPECT_FALSE(find_blocking_quadruple(fig2_right()));
    EXPECT_FALSE(find_blocking_quadruple(example_graph()));
}

TEST(BlockingQuadruple, TamperedWitnessRejected) {
    Graph g = fig1e_labelled();
    auto bq = *find_blocking_quadruple(g);
    auto bad = bq;
    std::swap(bad.quad[0], bad.quad[1]);
    EXPECT_FALSE(validate_blocking_quadruple(g, bad));
    bad = bq;
    bad.witnesses[0].path.vertices.pop_back();
    EXPECT_FALSE(validate_blocking_quadruple(g, bad));
}

TEST(BlockingQuadruple, AllMatchesOracle) {
    for (auto e : paper_catalog()) {
        auto all = all_blocking_quadruples(e.graph);
        EXPECT_EQ(all.empty(), !find_blocking_quadruple(e.graph)) << e.name;
        for (const auto& q : all) EXPECT_TRUE(blocking_quadruple_on(e.graph, q)) << e.name;
    }
}

TEST(AsteroidalTriple, Net) {
    Graph g = family_template("Fig3-a", {});
    auto at = find_asteroidal_triple(g);
    ASSERT_TRUE(at);
    EXPECT_EQ(sorted_labels(g, *at), (std::vector<std::string>{"a", "b", "c"}));
}

TEST(AsteroidalTriple, PathHasNone) { EXPECT_FALSE(find_asteroidal_triple(path(5))); }

TEST(AsteroidalTriple, SixCycleAlternating) {
    Graph g = cycle(6);
    auto at = find_asteroidal_triple(g);
    ASSERT_TRUE(at);
    auto t = *at;
    std::sort(t.begin(), t.end());
    EXPECT_TRUE((t == std::array<Vertex, 3>{0, 2, 4}) || (t == std::array<Vertex, 3>{1, 3, 5}));
}

TEST(IsInterval, Basics) {
    EXPECT_TRUE(is_interval(path(4)));
    EXPECT_FALSE(is_interval(cycle(4)));
    EXPECT_FALSE(is_interval(family_template("Fig3-a", {})));
}

TEST(NearlyFlags, ChordalIsNearlyChordal) {
    for (auto e : paper_catalog()) EXPECT_TRUE(nearly_flags(e.graph).nearly_chordal) << e.name;
}

TEST(NearlyFlags, NetPlusIsolatedVertex) {
    Graph g = family_template("Fig1-a", {});
    auto f = nearly_flags(g);
    EXPECT_TRUE(f.nearly_chordal);
    EXPECT_FALSE(f.nearly_interval);
    ASSERT_TRUE(f.non_interval_at);
    EXPECT_EQ(g.label(*f.non_interval_at), "d");
}

TEST(NearlyFlags, FiveCycle) {
    auto f = nearly_flags(cycle(5));
    EXPECT_TRUE(f.nearly_chordal);
    EXPECT_TRUE(f.nearly_interval);
    EXPECT_FALSE(nearly_flags(parse_graph("z\na b\nb c\nc d\nd a")).nearly_chordal);
}

TEST(ExtractObstruction, LongClaw) {
    Graph g = fig1e_labelled();
    auto bq = *find_blocking_quadruple(g);
    ExtractionTrace tr;
    auto cert = extract_obstruction(g, bq, &tr);
    EXPECT_EQ(cert.family, "Fig1-e");
    EXPECT_EQ(g.label(cert.roles.at("d")), "x3");
    std::vector<Vertex> abc{cert.roles.at("a"), cert.roles.at("b"), cert.roles.at("c")};
    EXPECT_EQ(sorted_labels(g, abc), (std::vector<std::string>{"x5", "x6", "x7"}));
    EXPECT_TRUE(match_family(g, cert));

    // The pendants are interchangeable, so the labelling a=x7, b=x5, c=x6 is
    // an equally valid certificate.
    ObstructionCert pinned = cert;
    pinned.roles.at("a") = g.at("x7");
    pinned.roles.at("b") = g.at("x5");
    pinned.roles.at("c") = g.at("x6");
    EXPECT_TRUE(match_family(g, pinned));
    EXPECT_EQ(tr.route, "path-minimization");
}

TEST(ExtractObstruction, TriangleFamily) {
    Graph g = family_template("Fig1-g", {});
    auto cert = extract_obstruction(g, *find_blocking_quadruple(g));
    EXPECT_EQ(cert.family, "Fig1-g");
    EXPECT_TRUE(match_family(g, cert));
}

TEST(ExtractObstruction, LongPathFamily) {
    std::vector<int> params{3, 1};
    Graph g = family_template("Fig1-d", params);
    auto cert = extract_obstruction(g, *find_blocking_quadruple(g));
    EXPECT_EQ(cert.family, "Fig1-d");
    ASSERT_FALSE(cert.path_params.empty());
    EXPECT_EQ(cert.path_params[0], 3);
    EXPECT_TRUE(match_family(g, cert));
}

TEST(ExtractObstruction, NonNearlyIntervalRoute) {
    Graph g = family_template("Fig1-a", {});
    ExtractionTrace tr;
    auto cert = extract_obstruction(g, *find_blocking_quadruple(g), &tr);
    EXPECT_EQ(tr.route, "non-nearly-interval");
    EXPECT_TRUE(match_family(g, cert));
    auto bq = blocking_quadruple_on(g, {cert.roles.at("a"), cert.roles.at("b"), cert.roles.at("c"), cert.roles.at("d")});
    EXPECT_TRUE(bq);
}

TEST(ExtractObstruction, EveryBlockingEntry) {
    for (auto e : paper_catalog()) {
        if (!e.expect_bq || !*e.expect_bq) continue;
        auto cert = extract_obstruction(e.graph, *find_blocking_quadruple(e.graph));
        EXPECT_TRUE(match_family(e.graph, cert)) << e.name;
        if (!e.family.empty()) {
            EXPECT_EQ(cert.family, e.family) << e.name;
        }
        EXPECT_TRUE(blocking_quadruple_on(
            e.graph, {cert.roles.at("a"), cert.roles.at("b"), cert.roles.at("c"), cert.roles.at("d")}))
            << e.name;
    }
}

TEST(ExtractObstruction, NotNearlyChordal) {
    Graph g = parse_graph("p\nq\nr\ns\na b\nb c\nc d\nd a");
    BlockingQuadruple fake{{g.at("p"), g.at("q"), g.at("r"), g.at("s")}, {}};
    try {
        extract_obstruction(g, fake);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::NotNearlyChordal);
    }
}

TEST(MatchFamily, SymmetricRoles) {
    Graph g = fig1e_labelled();
    auto cert = extract_obstruction(g, *find_blocking_quadruple(g));
    auto swapped = cert;
    std::swap(swapped.roles.at("b"), swapped.roles.at("c"));
    EXPECT_TRUE(match_family(g, swapped));
}

TEST(MatchFamily, ExtraEdgeBreaksMatch) {
    Graph g = fig1e_labelled();
    auto cert = extract_obstruction(g, *find_blocking_quadruple(g));
    EXPECT_FALSE(match_family(with_extra_edge(g, "x7", "x5"), cert));
}

TEST(MatchFamily, UnknownFamily) {
    ObstructionCert cert{"Fig9", {}, {}};
    try {
        match_family(fig1e_labelled(), cert);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::UnknownFamily);
    }
}

TEST(FamilyEmbedding, FindsInducedCopy) {
    Graph g = parse_graph(to_edge_list(fig1e_labelled()) + "x1 y\ny z\n");
    auto cert = find_family_embedding(g, kBqFamilies, 6);
    ASSERT_TRUE(cert);
    EXPECT_TRUE(match_family(g, *cert));
    EXPECT_FALSE(find_family_embedding(path(8), kBqFamilies, 6));
}
