#pragma once

// Named fixture graphs: the blocking-quadruple and non-interval families at
// small sizes, the two chordal non-circular-arc graphs without a blocking
// quadruple, and the worked example with its pinned tree, tour and phi tables.

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cag/arcs.hpp"
#include "cag/graph.hpp"
#include "cag/templates.hpp"

namespace cag {

/// Pinned construction data, all keyed by labels. Cliques are named by the
/// concatenation of their sorted member labels ("ahj").
struct ExampleFixture {
    std::vector<std::string> cliques;
    std::vector<std::pair<std::string, std::string>> tree;
    std::vector<std::string> tour;
    std::map<std::string, int> phi_correct;
    std::map<std::string, std::pair<int, int>> lr_correct;
    std::map<std::string, int> phi_incorrect;
    std::map<std::string, std::pair<int, int>> lr_incorrect;
    std::pair<std::string, std::string> failing_edge;
};

struct CatalogEntry {
    std::string name;
    Graph graph;
    std::string family;             // empty unless the entry instantiates a family
    std::vector<int> path_params;
    std::optional<bool> expect_bq;  // on the labeled a, b, c, d when family is set
    std::optional<int> expect_alpha;
    std::optional<ExampleFixture> example;
};

namespace detail {

inline Graph graph_from_pairs(const std::vector<std::pair<const char*, const char*>>& pairs) {
    std::string text;
    for (auto [u, v] : pairs) text += std::string(u) + " " + v + "\n";
    return parse_graph(text);
}

inline ExampleFixture example_fixture() {
    ExampleFixture f;
    f.cliques = {"co", "hlo", "blo", "hio", "eh", "hij", "ahj", "him", "imp", "dip", "in"};
    f.tree = {{"co", "hlo"},  {"hlo", "blo"}, {"hlo", "hio"}, {"hio", "eh"},  {"hio", "hij"},
              {"hij", "ahj"}, {"hio", "him"}, {"him", "imp"}, {"imp", "dip"}, {"him", "in"}};
    f.tour = {"co",  "hlo", "blo", "hlo", "hio", "eh",  "hio", "hij", "ahj", "hij",
              "hio", "him", "imp", "dip", "imp", "him", "in",  "him", "hio", "hlo"};
    f.phi_correct = {{"a", 8}, {"b", 2},  {"c", 0},  {"d", 13}, {"e", 5},  {"h", 6}, {"i", 15},
                     {"j", 8}, {"l", 2},  {"m", 12}, {"n", 16}, {"o", 1},  {"p", 13}};
    f.lr_correct = {{"a", {7, 9}},   {"b", {1, 3}},   {"c", {19, 1}},   {"d", {12, 14}}, {"e", {4, 6}},
                    {"h", {2, 12}},  {"i", {8, 19}},  {"j", {6, 10}},   {"l", {0, 4}},   {"m", {10, 13}},
                    {"n", {15, 17}}, {"o", {17, 5}},  {"p", {11, 15}}};
    f.phi_incorrect = f.phi_correct;
    f.phi_incorrect["h"] = 18;
    f.lr_incorrect = f.lr_correct;
    f.lr_incorrect["h"] = {16, 0};
    f.failing_edge = {"h", "j"};
    return f;
}

inline CatalogEntry family_entry(std::string name, std::string family, std::vector<int> params, std::optional<bool> bq) {
    Graph g = family_template(family, params);
    return CatalogEntry{std::move(name), std::move(g), std::move(family), std::move(params), bq, std::nullopt, std::nullopt};
}

} // namespace detail

inline Graph example_graph() {
    return detail::graph_from_pairs({{"b", "o"}, {"b", "l"}, {"o", "l"}, {"o", "c"}, {"o", "h"}, {"o", "i"}, {"i", "n"},
                                     {"i", "d"}, {"i", "p"}, {"i", "m"}, {"i", "h"}, {"i", "j"}, {"m", "p"}, {"m", "h"},
                                     {"p", "d"}, {"l", "h"}, {"h", "e"}, {"h", "a"}, {"h", "j"}, {"a", "j"}});
}

inline Graph fig2_left() {
    return detail::graph_from_pairs({{"1", "4"}, {"1", "6"}, {"2", "4"}, {"2'", "4"}, {"2'", "1"}, {"3'", "6"}, {"3'", "1"},
                                     {"2", "5"}, {"3", "5"}, {"3", "6"}, {"4", "5"}, {"4", "6"}, {"5", "6"}, {"7", "4"},
                                     {"7", "6"}});
}

inline Graph fig2_right() {
    return detail::graph_from_pairs({{"1", "4"}, {"1", "6"}, {"2", "4"}, {"2", "5"}, {"3", "5"}, {"3", "6"}, {"4", "5"},
                                     {"4", "6"}, {"5", "6"}, {"7", "4"}, {"7", "5"}, {"7", "6"}, {"7", "x"}, {"7", "y"},
                                     {"7", "z"}, {"z", "4"}, {"z", "6"}, {"x", "4"}, {"x", "5"}, {"y", "5"}, {"y", "6"}});
}

/// Long claw labelled x1..x7 with roles a=x7, b=x5, c=x6, d=x3.
inline Graph fig1e_labelled() {
    return detail::graph_from_pairs({{"x1", "x3"}, {"x2", "x3"}, {"x3", "x4"}, {"x1", "x5"}, {"x2", "x6"}, {"x4", "x7"}});
}

/// Pinned clique tree of the worked example; node i is fixture.cliques[i].
inline CliqueTree example_tree(const Graph& g, const ExampleFixture& f) {
    CliqueTree t;
    std::map<std::string, NodeId> id;
    for (const auto& name : f.cliques) {
        Clique c;
        for (char ch : name) c.push_back(g.at(std::string(1, ch)));
        std::sort(c.begin(), c.end());
        id.emplace(name, static_cast<NodeId>(t.cliques.size()));
        t.cliques.push_back(std::move(c));
    }
    for (const auto& [x, y] : f.tree) t.edges.emplace_back(std::min(id.at(x), id.at(y)), std::max(id.at(x), id.at(y)));
    std::sort(t.edges.begin(), t.edges.end());
    return t;
}

inline EulerTour example_tour(const ExampleFixture& f) {
    EulerTour a;
    for (const auto& name : f.tour)
        a.nodes.push_back(static_cast<NodeId>(std::find(f.cliques.begin(), f.cliques.end(), name) - f.cliques.begin()));
    return a;
}

inline PhiMap phi_from_labels(const Graph& g, const std::map<std::string, int>& table) {
    PhiMap phi(g.size(), -1);
    for (const auto& [label, p] : table) phi[g.at(label)] = p;
    return phi;
}

/// Every named fixture, in a fixed order.
inline std::vector<CatalogEntry> paper_catalog() {
    using detail::family_entry;
    std::vector<CatalogEntry> out;
    out.push_back(family_entry("fig1-a", "Fig1-a", {}, true));
    out.push_back(family_entry("fig1-b", "Fig1-b", {}, true));
    out.push_back(family_entry("fig1-c-k1", "Fig1-c", {1}, true));
    out.push_back(family_entry("fig1-c-k2", "Fig1-c", {2}, true));
    out.push_back(family_entry("fig1-d-L2", "Fig1-d", {2, 1}, true));
    out.push_back(family_entry("fig1-d-L3", "Fig1-d", {3, 1}, true));
    out.push_back(CatalogEntry{"fig1-e", fig1e_labelled(), "", {}, true, std::nullopt, std::nullopt});
    out.push_back(family_entry("fig1-f", "Fig1-f", {}, true));
    out.push_back(family_entry("fig1-g", "Fig1-g", {}, true));
    out.push_back(family_entry("fig3-a", "Fig3-a", {}, std::nullopt));
    out.push_back(family_entry("fig3-b", "Fig3-b", {}, std::nullopt));
    out.push_back(family_entry("fig3-c-k1", "Fig3-c", {1}, std::nullopt));
    out.push_back(family_entry("fig3-c-k2", "Fig3-c", {2}, std::nullopt));
    out.push_back(family_entry("fig3-d-L2", "Fig3-d", {2}, std::nullopt));
    out.push_back(family_entry("fig3-d-L3", "Fig3-d", {3}, std::nullopt));
    out.push_back(family_entry("fig3-e", "Fig3-e", {}, std::nullopt));
    out.push_back(CatalogEntry{"fig2-left", fig2_left(), "", {}, false, 5, std::nullopt});
    out.push_back(CatalogEntry{"fig2-right", fig2_right(), "", {}, false, 6, std::nullopt});
    out.push_back(CatalogEntry{"fig4", example_graph(), "", {}, std::nullopt, std::nullopt, detail::example_fixture()});
    return out;
}

/// Catalog entry by name; nullopt when absent.
inline std::optional<CatalogEntry> catalog_entry(const std::string& name) {
    for (auto& e : paper_catalog())
        if (e.name == name) return e;
    return std::nullopt;
}

/// The labelled a, b, c, d of a blocking-quadruple entry, in that order.
inline std::array<Vertex, 4> labelled_quad(const CatalogEntry& e) {
    if (e.name == "fig1-e") {
        const Graph& g = e.graph;
        return {g.at("x7"), g.at("x5"), g.at("x6"), g.at("x3")};
    }
    return {e.graph.at("a"), e.graph.at("b"), e.graph.at("c"), e.graph.at("d")};
}

} // namespace cag
