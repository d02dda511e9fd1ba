#pragma once

// Command-line front end. Exit status: 0 success, 1 negative answer,
// 2 usage or internal error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cag/arcs.hpp"
#include "cag/chordal.hpp"
#include "cag/generate.hpp"
#include "cag/graph.hpp"
#include "cag/obstructions.hpp"
#include "cag/oracle.hpp"
#include "cag/serialize.hpp"
#include "cag/suite.hpp"
#include "cag/svg.hpp"

namespace cag {

namespace detail {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::ParseError, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw Error(Errc::ParseError, "cannot write " + path);
}

inline Graph load_graph(const std::string& path) { return parse_graph(read_file(path)); }

inline std::string join_labels(const Graph& g, std::span<const Vertex> vs) {
    std::string s;
    for (Vertex v : vs) s += (s.empty() ? "" : " ") + g.label(v);
    return s;
}

inline int cmd_check(const std::string& file, bool json, std::ostream& out) {
    Graph g = load_graph(file);
    auto peo = is_chordal(g);
    std::optional<int> alpha;
    if (peo) alpha = static_cast<int>(alpha_and_cover(g, *peo).independent.size());
    else if (g.size() <= 64) alpha = brute_force_alpha(g);
    auto bq = find_blocking_quadruple(g);
    std::optional<ObstructionCert> cert;
    if (peo && bq) cert = extract_obstruction(g, *bq);

    if (json) {
        Json j = {{"chordal", peo.has_value()}};
        j["alpha"] = alpha ? Json(*alpha) : Json();
        j["bq"] = bq ? labels_json(g, bq->quad) : Json();
        j["obstruction"] = cert ? cert_to_json(g, *cert) : Json();
        out << j.dump(2) << "\n";
    } else {
        out << "chordal: " << (peo ? "true" : "false") << "\n";
        out << "alpha: " << (alpha ? std::to_string(*alpha) : "unknown") << "\n";
        out << "bq: " << (bq ? join_labels(g, bq->quad) : "none") << "\n";
        if (cert) out << "obstruction: " << cert_to_json(g, *cert).dump() << "\n";
    }
    return peo && !bq ? 0 : 1;
}

inline int cmd_represent(const std::string& file, const std::string& json_path, const std::string& svg_path,
                         std::ostream& out, std::ostream& err) {
    Graph g = load_graph(file);
    ArcRep rep;
    ConstructionInfo info;
    try {
        rep = construct_representation(g, &info);
    } catch (const Error& e) {
        if (e.code() == Errc::NotChordal || e.code() == Errc::HasBlockingQuadruple || e.code() == Errc::AlphaTooLarge) {
            err << e.what() << "\n";
            return 1;
        }
        throw;
    }
    if (!verify_representation(g, rep).equal) throw Error(Errc::ProofViolation, "constructed arcs do not verify");
    const std::string text = rep_to_json(g, rep).dump(2) + "\n";
    if (!json_path.empty()) write_file(json_path, text);
    if (!svg_path.empty()) write_file(svg_path, render_svg(g, rep));
    if (json_path.empty() && svg_path.empty()) out << text;
    else out << "k: " << rep.k << "\ndispatch: " << info.dispatch << "\n";
    return 0;
}

inline int cmd_verify(const std::string& file, const std::string& rep_path, std::ostream& out) {
    Graph g = load_graph(file);
    Json j;
    try {
        j = Json::parse(read_file(rep_path));
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::MalformedRep, e.what());
    }
    auto report = verify_representation(g, rep_from_json(g, j));
    out << verify_to_json(g, report).dump(2) << "\n";
    return report.equal ? 0 : 1;
}

inline int cmd_oracle(const std::string& file, double seconds, std::ostream& out) {
    Graph g = load_graph(file);
    auto budget = std::chrono::milliseconds(static_cast<long long>(seconds * 1000));
    auto r = brute_force_circular_arc(g, budget);
    Json j = {{"status", status_name(r.status)}, {"nodes", r.nodes}};
    if (r.model) j["model"] = model_to_json(g, *r.model);
    out << j.dump(2) << "\n";
    switch (r.status) {
    case OracleStatus::Yes: return 0;
    case OracleStatus::No: return 1;
    case OracleStatus::Timeout: return 2;
    }
    return 2;
}

inline int cmd_generate(const GenParams& base, int count, std::ostream& out) {
    for (int i = 0; i < count; ++i) {
        GenParams p = base;
        p.seed = trial_seed(base.seed, static_cast<std::uint64_t>(i));
        out << "# graph " << i << "\n" << to_edge_list(random_chordal(p));
    }
    return 0;
}

inline int cmd_obstruct(const std::string& file, std::ostream& out, std::ostream& err) {
    Graph g = load_graph(file);
    if (!is_chordal(g)) {
        err << "graph is not chordal\n";
        return 1;
    }
    auto bq = find_blocking_quadruple(g);
    if (!bq) {
        err << "no blocking quadruple\n";
        return 1;
    }
    out << cert_to_json(g, extract_obstruction(g, *bq)).dump(2) << "\n";
    return 0;
}

inline int cmd_selftest(std::vector<std::string> suites, int trials, std::uint64_t seed, std::ostream& out) {
    if (suites.empty())
        for (auto s : kSuites) suites.emplace_back(s);
    bool ok = true;
    for (const auto& name : suites) {
        auto rep = run_property_suite(name, trials >= 0 ? trials : default_trials(name), seed);
        out << rep.text() << "\n";
        ok = ok && rep.ok();
    }
    return ok ? 0 : 1;
}

} // namespace detail

inline int cli_main(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"Chordal circular-arc graph toolkit", "cag"};
    app.require_subcommand(1);

    std::string file, json_path, svg_path, rep_path;
    bool json = false;
    double timeout = 600;
    GenParams gen;
    int count = 1, trials = -1;
    std::uint64_t seed = 7;
    std::vector<std::string> suites;

    auto* check = app.add_subcommand("check", "chordality, independence number and blocking quadruple");
    check->add_option("file", file, "edge-list file")->required();
    check->add_flag("--json", json, "print JSON");

    auto* represent = app.add_subcommand("represent", "build a circular-arc representation");
    represent->add_option("file", file, "edge-list file")->required();
    represent->add_option("--json", json_path, "write the representation as JSON");
    represent->add_option("--svg", svg_path, "write an SVG drawing");

    auto* verify = app.add_subcommand("verify", "check a representation against a graph");
    verify->add_option("file", file, "edge-list file")->required();
    verify->add_option("--rep", rep_path, "representation JSON")->required();

    auto* oracle = app.add_subcommand("oracle", "exhaustive circular-arc recognition");
    oracle->add_option("file", file, "edge-list file")->required();
    oracle->add_option("--timeout-seconds", timeout, "search budget")->check(CLI::PositiveNumber);

    auto* generate = app.add_subcommand("generate", "random chordal graphs");
    generate->add_option("--n", gen.n, "vertex count")->required()->check(CLI::PositiveNumber);
    generate->add_option("--seed", gen.seed, "seed")->required();
    generate->add_option("--alpha-max", gen.alpha_max, "independence number cap")->check(CLI::PositiveNumber);
    generate->add_option("--count", count, "number of graphs")->check(CLI::PositiveNumber);

    auto* obstruct = app.add_subcommand("obstruct", "forbidden induced subgraph certificate");
    obstruct->add_option("file", file, "edge-list file")->required();

    auto* selftest = app.add_subcommand("selftest", "run the property suites");
    selftest->add_option("--trials", trials, "trials per suite (default: suite default)")->check(CLI::NonNegativeNumber);
    selftest->add_option("--seed", seed, "seed");
    selftest->add_option("--suite", suites, "suite name, repeatable");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*check) return detail::cmd_check(file, json, out);
        if (*represent) return detail::cmd_represent(file, json_path, svg_path, out, err);
        if (*verify) return detail::cmd_verify(file, rep_path, out);
        if (*oracle) return detail::cmd_oracle(file, timeout, out);
        if (*generate) return detail::cmd_generate(gen, count, out);
        if (*obstruct) return detail::cmd_obstruct(file, out, err);
        if (*selftest) return detail::cmd_selftest(suites, trials, seed, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace cag
