#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "cag/catalog.hpp"
#include "cag/generate.hpp"
#include "cag/oracle.hpp"
#include "cag/serialize.hpp"
#include "cag/suite.hpp"
#include "cag/svg.hpp"

using namespace cag;

TEST(Generate, SingleVertex) {
    for (std::uint64_t seed : {0ULL, 1ULL, 99ULL}) {
        GenParams p;
        p.seed = seed;
        Graph g = random_chordal(p);
        EXPECT_EQ(g.size(), 1);
        EXPECT_EQ(g.edge_count(), 0);
    }
}

TEST(Generate, ChordalAndDeterministic) {
    GenParams p;
    p.n = 6;
    p.seed = 42;
    Graph g = random_chordal(p);
    EXPECT_EQ(g.size(), 6);
    EXPECT_TRUE(is_chordal(g));
    EXPECT_EQ(random_chordal(p), g);
}

TEST(Generate, AlphaCap) {
    GenParams p;
    p.n = 8;
    p.seed = 7;
    p.alpha_max = 3;
    Graph g = random_chordal(p);
    EXPECT_TRUE(is_chordal(g));
    EXPECT_LE(brute_force_alpha(g), 3);
}

TEST(Generate, RejectLimit) {
    GenParams p;
    p.n = 12;
    p.tree_size = 12;
    p.subtree_mean = 1;
    p.alpha_max = 1;
    p.reject_limit = 3;
    try {
        random_chordal(p);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::RejectLimitExceeded);
    }
}

TEST(Generate, ManySeedsStayChordal) {
    for (std::uint64_t s = 0; s < 200; ++s) {
        GenParams p;
        p.n = 3 + static_cast<int>(s % 20);
        p.seed = trial_seed(5, s);
        EXPECT_TRUE(is_chordal(random_chordal(p)));
        EXPECT_TRUE(is_chordal(random_chordal_by_extension(p.n, 0.5, 0.1, p.seed)));
    }
}

TEST(Generate, TrialSeedsIndependentOfOrder) {
    EXPECT_EQ(trial_seed(7, 3), trial_seed(7, 3));
    EXPECT_NE(trial_seed(7, 3), trial_seed(7, 4));
    EXPECT_NE(trial_seed(7, 3), trial_seed(8, 3));
}

TEST(Catalog, Sizes) {
    auto fig4 = *catalog_entry("fig4");
    EXPECT_EQ(fig4.graph.size(), 13);
    EXPECT_EQ(fig4.graph.edge_count(), 20);
    EXPECT_EQ(maximal_cliques(fig4.graph, *is_chordal(fig4.graph)).size(), 11u);
    auto left = *catalog_entry("fig2-left");
    EXPECT_EQ(left.graph.size(), 9);
    EXPECT_EQ(left.graph.edge_count(), 15);
    auto e = *catalog_entry("fig1-e");
    EXPECT_EQ(e.graph.size(), 7);
    EXPECT_EQ(e.graph.edge_count(), 6);
    EXPECT_FALSE(catalog_entry("fig5"));
}

TEST(Catalog, FamiliesAtTwoSizes) {
    std::map<std::string, std::set<int>> sizes;
    for (const auto& e : paper_catalog())
        if (!e.path_params.empty()) sizes[e.family].insert(e.graph.size());
    for (const auto& [family, s] : sizes) EXPECT_EQ(s.size(), 2u) << family;
    EXPECT_EQ(sizes.size(), 4u);
}

TEST(Catalog, FixtureRoundTrips) {
    auto e = *catalog_entry("fig4");
    const auto& f = *e.example;
    CliqueTree t = example_tree(e.graph, f);
    EXPECT_TRUE(validate_clique_tree(e.graph, t));
    EXPECT_TRUE(validate_euler_tour(t, example_tour(f)));
    for (const auto& [label, p] : f.phi_correct) EXPECT_TRUE(detail::contains(t.cliques[example_tour(f).nodes[p]], e.graph.at(label)));
}

TEST(Catalog, DataFilesMatch) {
    for (const auto& e : paper_catalog()) {
        std::ifstream in(std::string(CAG_DATA_DIR) + "/" + e.name + ".txt");
        ASSERT_TRUE(in) << e.name;
        std::stringstream ss;
        ss << in.rdbuf();
        Graph g = parse_graph(ss.str());
        ASSERT_EQ(g.size(), e.graph.size()) << e.name;
        EXPECT_EQ(g.edge_count(), e.graph.edge_count()) << e.name;
        for (auto [u, v] : e.graph.edges()) EXPECT_TRUE(g.adjacent(g.at(e.graph.label(u)), g.at(e.graph.label(v)))) << e.name;
    }
}

TEST(Serialize, RepRoundTrip) {
    Graph g = example_graph();
    ArcRep rep = construct_representation(g);
    Json j = rep_to_json(g, rep);
    EXPECT_EQ(rep_from_json(g, Json::parse(j.dump())), rep);
    EXPECT_EQ(j.dump(), rep_to_json(g, rep_from_json(g, j)).dump());
}

TEST(Serialize, FullVertices) {
    Graph g = parse_graph("u a\nu b");
    ArcRep rep = construct_representation(g);
    Json j = rep_to_json(g, rep);
    EXPECT_EQ(j["full"], Json::array({"u"}));
    EXPECT_EQ(rep_from_json(g, j), rep);
}

TEST(Serialize, MalformedRep) {
    Graph g = parse_graph("a b");
    for (const char* text : {R"([1,2])", R"({"k": 3})", R"({"k": 3, "arcs": {"q": [0, 1]}})",
                             R"({"k": 3, "arcs": {"a": [0]}})", R"({"k": "x", "arcs": {}})"}) {
        try {
            rep_from_json(g, Json::parse(text));
            ADD_FAILURE() << text;
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), Errc::MalformedRep) << text;
        }
    }
}

TEST(Serialize, CertAndModel) {
    Graph g = fig1e_labelled();
    auto cert = extract_obstruction(g, *find_blocking_quadruple(g));
    Json c = cert_to_json(g, cert);
    EXPECT_EQ(c["family"], "Fig1-e");
    EXPECT_EQ(c["roles"]["d"], "x3");

    Graph c4 = parse_graph("a b\nb c\nc d\nd a");
    auto r = brute_force_circular_arc(c4);
    Json m = model_to_json(c4, *r.model);
    EXPECT_EQ(m["order"].size(), 8u);
}

TEST(Svg, Structure) {
    Graph g = example_graph();
    ArcRep rep = construct_representation(g);
    std::string s = render_svg(g, rep);
    EXPECT_EQ(s.rfind("<?xml", 0), 0u);
    EXPECT_NE(s.find("version=\"1.1\""), std::string::npos);
    EXPECT_NE(s.find("</svg>"), std::string::npos);
    auto count = [&](const std::string& needle) {
        std::size_t n = 0;
        for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
        return n;
    };
    EXPECT_EQ(count("<line "), static_cast<std::size_t>(rep.k));
    EXPECT_EQ(count("<path "), rep.arcs.size());
    EXPECT_EQ(render_svg(g, rep), s);
}

TEST(Svg, EscapesLabels) {
    Graph g = parse_graph("a<b c&d");
    std::string s = render_svg(g, construct_representation(g));
    EXPECT_NE(s.find("a&lt;b"), std::string::npos);
    EXPECT_NE(s.find("c&amp;d"), std::string::npos);
}

TEST(Suites, UnknownName) {
    try {
        run_property_suite("nope", 1, 1);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::UnknownSuite);
    }
}

TEST(Suites, SmallRunsPassAndRepeat) {
    for (auto name : {"thm1-equivalence", "thm2-construction", "alpha3-universal"}) {
        auto a = run_property_suite(name, 40, 11);
        auto b = run_property_suite(name, 40, 11);
        EXPECT_TRUE(a.ok()) << a.text();
        EXPECT_EQ(a.trials, 40);
        EXPECT_EQ(a.text(), b.text());
        EXPECT_NE(a.text(), run_property_suite(name, 40, 12).text());
    }
}

TEST(Suites, SoundnessCountsExhaustivePart) {
    auto r = run_property_suite("lemma1-soundness", 5, 3);
    EXPECT_TRUE(r.ok()) << r.text();
    EXPECT_EQ(r.trials, 1024 + 5);
}

TEST(Suites, Fixtures) {
    auto r = run_property_suite("fixtures", 0, 0);
    EXPECT_TRUE(r.ok()) << r.text();
    EXPECT_EQ(r.known.size(), 1u) << r.text();
}

TEST(Suites, ReportText) {
    auto r = detail::make_report("demo", 5);
    r.trials = 2;
    r.passed = 1;
    r.failed = 1;
    r.failures.push_back("trial 1 seed 0x1: broken");
    r.counts["x"] = 3;
    std::string t = r.text();
    EXPECT_NE(t.find("suite: demo\n"), std::string::npos);
    EXPECT_NE(t.find("FAIL trial 1 seed 0x1: broken\n"), std::string::npos);
    EXPECT_NE(t.find("count x: 3\n"), std::string::npos);
    EXPECT_FALSE(r.ok());
}
