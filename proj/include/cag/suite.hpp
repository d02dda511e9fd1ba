#pragma once

// Property suites cross-checking the library against the exhaustive oracles,
// and the fixture suite over the catalog. Reports are plain text and depend
// only on (suite, trials, seed).

#include <array>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "cag/arcs.hpp"
#include "cag/catalog.hpp"
#include "cag/chordal.hpp"
#include "cag/generate.hpp"
#include "cag/obstructions.hpp"
#include "cag/oracle.hpp"
#include "cag/serialize.hpp"

namespace cag {

inline constexpr std::array<std::string_view, 5> kSuites{"thm1-equivalence", "thm2-construction", "lemma1-soundness",
                                                        "alpha3-universal", "fixtures"};

inline int default_trials(std::string_view suite) {
    if (suite == "thm1-equivalence") return 1000;
    if (suite == "lemma1-soundness") return 500;
    if (suite == "fixtures") return 0;
    return 500;
}

struct SuiteReport {
    std::string name;
    std::uint64_t seed = 0;
    int trials = 0;
    int passed = 0;
    int failed = 0;
    std::vector<std::string> failures;  // one line per failing trial
    std::vector<std::string> known;     // documented fixture discrepancies, re-checked each run
    std::map<std::string, long> counts;
    std::uint64_t digest = 0xCBF29CE484222325ULL;

    bool ok() const { return failed == 0; }

    void absorb(std::string_view bytes) {
        for (unsigned char ch : bytes) {
            digest ^= ch;
            digest *= 0x100000001B3ULL;
        }
    }

    std::string text() const {
        char hex[32];
        std::string s = "suite: " + name + "\n";
        s += "seed: " + std::to_string(seed) + "\n";
        s += "trials: " + std::to_string(trials) + "\n";
        s += "passed: " + std::to_string(passed) + "\n";
        s += "failed: " + std::to_string(failed) + "\n";
        s += "known: " + std::to_string(known.size()) + "\n";
        for (const auto& [k, v] : counts) s += "count " + k + ": " + std::to_string(v) + "\n";
        for (const auto& f : failures) s += "FAIL " + f + "\n";
        for (const auto& k : known) s += "KNOWN " + k + "\n";
        std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(digest));
        s += "digest: " + std::string(hex) + "\n";
        return s;
    }
};

namespace detail {

inline SuiteReport make_report(std::string name, std::uint64_t seed) {
    SuiteReport r;
    r.name = std::move(name);
    r.seed = seed;
    return r;
}

// Outcome of one trial: empty on success, otherwise the reason.
using TrialFn = std::function<std::string(int trial, std::uint64_t seed, SuiteReport& rep)>;

inline void run_trials(SuiteReport& rep, int first, int count, const TrialFn& fn) {
    for (int t = first; t < first + count; ++t) {
        std::uint64_t s = trial_seed(rep.seed, static_cast<std::uint64_t>(t));
        std::string why;
        try {
            why = fn(t, s, rep);
        } catch (const std::exception& e) {
            why = std::string("exception: ") + e.what();
        }
        char head[64];
        std::snprintf(head, sizeof head, "trial %d seed 0x%016llx: ", t, static_cast<unsigned long long>(s));
        if (why.empty()) ++rep.passed;
        else {
            ++rep.failed;
            rep.failures.push_back(head + why);
        }
    }
    rep.trials += count;
}

inline int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
inline double uniform_real(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

/// Random chordal graph on n vertices; trials alternate between the subtree
/// model and simplicial extension.
inline Graph mixed_chordal(int n, std::mt19937_64& rng, std::optional<int> alpha_max, bool subtree) {
    if (subtree) {
        GenParams p;
        p.n = n;
        p.tree_size = alpha_max ? uniform(rng, 2, 16) : uniform(rng, 2, 2 * n);
        p.subtree_mean = alpha_max ? uniform_real(rng, 0.25 * p.tree_size, 0.6 * p.tree_size + 1) : uniform_real(rng, 1.0, 3.0);
        p.seed = rng();
        p.alpha_max = alpha_max;
        p.reject_limit = 200;
        return random_chordal(p);
    }
    double extend = alpha_max ? uniform_real(rng, 0.5, 1.0) : uniform_real(rng, 0.2, 0.8);
    double isolate = alpha_max ? 0.0 : uniform_real(rng, 0.0, 0.15);
    for (int attempt = 0; attempt < 200; ++attempt) {
        Graph g = random_chordal_by_extension(n, extend, isolate, rng());
        if (!alpha_max || alpha_and_cover(g, *is_chordal(g)).independent.size() <= static_cast<std::size_t>(*alpha_max))
            return g;
    }
    throw Error(Errc::RejectLimitExceeded, "extension sampler");
}

inline int alpha_of(const Graph& g) { return static_cast<int>(alpha_and_cover(g, *is_chordal(g)).independent.size()); }

/// Chordal graph with alpha <= alpha_max and no blocking quadruple, n in [lo, hi].
inline Graph sample_bq_free(std::mt19937_64& rng, int lo, int hi, int alpha_max) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        int n = uniform(rng, lo, hi);
        Graph g = Graph::with_index_labels(1, {});
        try {
            g = mixed_chordal(n, rng, alpha_max, attempt % 2 == 0);
        } catch (const Error& e) {
            if (e.code() == Errc::RejectLimitExceeded) continue;
            throw;
        }
        if (alpha_of(g) > alpha_max) continue;
        if (find_blocking_quadruple(g)) continue;
        return g;
    }
    throw Error(Errc::RejectLimitExceeded, "no blocking-quadruple-free sample");
}

// Construction plus every check the suites apply to its output.
inline std::string construct_and_check(const Graph& g, SuiteReport& rep) {
    ConstructionInfo info;
    ArcRep arcs = construct_representation(g, &info);
    auto vr = verify_representation(g, arcs);
    if (!vr.equal) return "representation does not verify";
    ++rep.counts["dispatch " + info.dispatch];
    ++rep.counts["alpha " + std::to_string(info.alpha)];
    if (info.swaps > 0) ++rep.counts["with swaps"];
    rep.absorb(rep_to_json(g, arcs).dump());
    return {};
}

inline std::string check_alpha(const Graph& g) {
    auto peo = is_chordal(g);
    auto ac = alpha_and_cover(g, *peo);
    int bf = brute_force_alpha(g);
    if (static_cast<int>(ac.independent.size()) != bf) return "alpha_and_cover disagrees with brute_force_alpha";
    if (ac.cover.members.size() != ac.independent.size()) return "cover size differs from independent set size";
    if (!is_independent(g, ac.independent)) return "greedy set is not independent";
    std::vector<char> seen(g.size(), 0);
    for (const auto& k : ac.cover.members)
        for (Vertex v : k) seen[v] = 1;
    if (std::find(seen.begin(), seen.end(), 0) != seen.end()) return "cover misses a vertex";
    return {};
}

inline SuiteReport thm1_equivalence(int trials, std::uint64_t seed) {
    SuiteReport rep = make_report("thm1-equivalence", seed);
    run_trials(rep, 0, trials, [](int t, std::uint64_t s, SuiteReport& r) -> std::string {
        std::mt19937_64 rng(s);
        Graph g = mixed_chordal(uniform(rng, 4, 12), rng, std::nullopt, t % 2 == 0);
        r.absorb(to_edge_list(g));
        if (auto why = check_alpha(g); !why.empty()) return why;
        auto bq = find_blocking_quadruple(g);
        auto brute = brute_force_obstruction_search(g);
        if (bq.has_value() != brute.has_value())
            return bq ? "blocking quadruple found but no induced family member" : "family member found but no blocking quadruple";
        if (!bq) return {};
        ++r.counts["bq present"];
        if (!validate_blocking_quadruple(g, *bq)) return "blocking quadruple witnesses do not replay";
        ExtractionTrace trace;
        ObstructionCert cert = extract_obstruction(g, *bq, &trace);
        if (!match_family(g, cert)) return "certificate " + cert.family + " does not match its template";
        std::array<Vertex, 4> q{cert.roles.at("a"), cert.roles.at("b"), cert.roles.at("c"), cert.roles.at("d")};
        if (!blocking_quadruple_on(g, q)) return "certificate roles a, b, c, d are not a blocking quadruple";
        ++r.counts["family " + cert.family];
        ++r.counts["route " + trace.route];
        r.absorb(cert_to_json(g, cert).dump());
        return {};
    });
    return rep;
}

inline SuiteReport thm2_construction(int trials, std::uint64_t seed) {
    SuiteReport rep = make_report("thm2-construction", seed);
    run_trials(rep, 0, trials, [](int, std::uint64_t s, SuiteReport& r) -> std::string {
        std::mt19937_64 rng(s);
        Graph g = sample_bq_free(rng, 5, 40, 4);
        r.absorb(to_edge_list(g));
        return construct_and_check(g, r);
    });
    return rep;
}

inline SuiteReport alpha3_universal(int trials, std::uint64_t seed) {
    SuiteReport rep = make_report("alpha3-universal", seed);
    run_trials(rep, 0, trials, [](int t, std::uint64_t s, SuiteReport& r) -> std::string {
        std::mt19937_64 rng(s);
        Graph g = Graph::with_index_labels(1, {});
        for (int attempt = 0;; ++attempt) {
            try {
                g = mixed_chordal(uniform(rng, 1, 30), rng, 3, (t + attempt) % 2 == 0);
                break;
            } catch (const Error& e) {
                if (e.code() != Errc::RejectLimitExceeded || attempt > 100) throw;
            }
        }
        r.absorb(to_edge_list(g));
        int alpha = alpha_of(g);
        if (alpha > 3) return "sampler exceeded alpha 3";
        if (find_blocking_quadruple(g)) return "blocking quadruple in a graph with alpha <= 3";
        if (alpha <= 2) {
            ++r.counts["alpha <= 2"];
            if (!is_interval(g)) return "alpha <= 2 but not an interval graph";
        }
        return construct_and_check(g, r);
    });
    return rep;
}

inline std::string soundness_check(const Graph& g, SuiteReport& r) {
    auto res = brute_force_circular_arc(g, std::chrono::seconds(600));
    if (res.status == OracleStatus::Timeout) return "oracle timed out";
    bool bq = find_blocking_quadruple(g).has_value();
    r.counts[res.status == OracleStatus::Yes ? "circular-arc" : "not circular-arc"]++;
    if (bq) ++r.counts["bq present"];
    if (res.status == OracleStatus::Yes && bq) return "circular-arc graph with a blocking quadruple";
    r.absorb(status_name(res.status));
    if (res.model) r.absorb(model_to_json(g, *res.model).dump());
    // Chordal, alpha <= 4, no blocking quadruple: the oracle must agree it is circular-arc.
    if (!bq && is_chordal(g) && brute_force_alpha(g) <= 4) {
        ++r.counts["chordal alpha<=4 bq-free"];
        if (res.status != OracleStatus::Yes) return "chordal, alpha <= 4, no blocking quadruple, yet not circular-arc";
    }
    return {};
}

inline SuiteReport lemma1_soundness(int trials, std::uint64_t seed) {
    SuiteReport rep = make_report("lemma1-soundness", seed);
    std::vector<Edge> pairs;
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) pairs.emplace_back(u, v);
    for (int mask = 0; mask < 1024; ++mask) {
        std::vector<Edge> es;
        for (int i = 0; i < 10; ++i)
            if (mask >> i & 1) es.push_back(pairs[i]);
        Graph g = Graph::with_index_labels(5, es);
        std::string why;
        try {
            why = soundness_check(g, rep);
        } catch (const std::exception& e) {
            why = std::string("exception: ") + e.what();
        }
        if (why.empty()) ++rep.passed;
        else {
            ++rep.failed;
            rep.failures.push_back("edge mask " + std::to_string(mask) + ": " + why);
        }
    }
    rep.trials = 1024;
    run_trials(rep, 0, trials, [](int, std::uint64_t s, SuiteReport& r) -> std::string {
        std::mt19937_64 rng(s);
        int n = uniform(rng, 6, 7);
        double p = uniform_real(rng, 0.2, 0.8);
        std::vector<Edge> es;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (uniform_real(rng, 0.0, 1.0) < p) es.emplace_back(u, v);
        Graph g = Graph::with_index_labels(n, es);
        r.absorb(to_edge_list(g));
        return soundness_check(g, r);
    });
    return rep;
}

inline bool is_asteroidal_triple(const Graph& g, Vertex a, Vertex b, Vertex c) {
    auto linked = [&](Vertex x, Vertex y, Vertex z) {
        std::array<Vertex, 1> bl{z};
        return try_path_missing(g, x, y, bl).has_value();
    };
    return is_independent(g, std::array<Vertex, 3>{a, b, c}) && linked(a, b, c) && linked(a, c, b) && linked(b, c, a);
}

// Star-condition failures of the pinned worked-example phi. Its arcs verify,
// yet edges o-h, o-i and h-i satisfy none of the four conditions.
inline const std::vector<std::pair<std::string, std::string>>& documented_star_gap() {
    static const std::vector<std::pair<std::string, std::string>> gap{{"o", "h"}, {"o", "i"}, {"h", "i"}};
    return gap;
}

inline SuiteReport fixtures() {
    SuiteReport rep = make_report("fixtures", 0);
    auto check = [&](const std::string& id, const std::function<std::string()>& fn) {
        std::string why;
        try {
            why = fn();
        } catch (const std::exception& e) {
            why = std::string("exception: ") + e.what();
        }
        ++rep.trials;
        if (why.empty()) ++rep.passed;
        else {
            ++rep.failed;
            rep.failures.push_back(id + ": " + why);
        }
    };

    for (const CatalogEntry& e : paper_catalog()) {
        const Graph& g = e.graph;
        rep.absorb(e.name + "\n" + to_edge_list(g));
        if (e.name.starts_with("fig1")) {
            check(e.name + " blocking quadruple", [&]() -> std::string {
                if (!blocking_quadruple_on(g, labelled_quad(e))) return "a, b, c, d are not a blocking quadruple";
                if (!is_chordal(g)) return "not chordal";
                return {};
            });
            check(e.name + " extraction", [&]() -> std::string {
                auto bq = find_blocking_quadruple(g);
                if (!bq) return "no blocking quadruple found";
                auto cert = extract_obstruction(g, *bq);
                if (!match_family(g, cert)) return "certificate does not match";
                rep.absorb(cert_to_json(g, cert).dump());
                return {};
            });
            check(e.name + " not circular-arc", [&]() -> std::string {
                auto r = brute_force_circular_arc(g, std::chrono::seconds(600));
                return r.status == OracleStatus::No ? "" : std::string("oracle answered ") + status_name(r.status);
            });
        } else if (e.name.starts_with("fig3")) {
            check(e.name + " asteroidal triple", [&]() -> std::string {
                if (!is_chordal(g)) return "not chordal";
                if (!is_asteroidal_triple(g, g.at("a"), g.at("b"), g.at("c"))) return "a, b, c are not an asteroidal triple";
                if (is_interval(g)) return "reported interval";
                return {};
            });
        } else if (e.name.starts_with("fig2")) {
            check(e.name + " counterexample", [&]() -> std::string {
                if (!is_chordal(g)) return "not chordal";
                if (find_blocking_quadruple(g)) return "blocking quadruple found";
                int a = brute_force_alpha(g);
                if (a < 5) return "alpha below 5";
                if (e.expect_alpha && a != *e.expect_alpha) return "alpha " + std::to_string(a);
                auto r = brute_force_circular_arc(g, std::chrono::seconds(600));
                if (r.status != OracleStatus::No) return std::string("oracle answered ") + status_name(r.status);
                return {};
            });
        } else if (e.example) {
            const ExampleFixture& f = *e.example;
            check("fig4 shape", [&]() -> std::string {
                if (g.size() != 13 || g.edge_count() != 20) return "wrong size";
                auto cl = maximal_cliques(g, *is_chordal(g));
                if (cl.size() != 11) return "expected 11 maximal cliques";
                CliqueTree t = example_tree(g, f);
                auto sorted = t.cliques;
                std::sort(sorted.begin(), sorted.end());
                if (sorted != cl) return "pinned cliques differ from the maximal cliques";
                if (!validate_clique_tree(g, t)) return "pinned tree is not a clique tree";
                if (!validate_euler_tour(t, example_tour(f))) return "pinned tour is not an Euler tour";
                return {};
            });
            CliqueTree t = example_tree(g, f);
            EulerTour a = example_tour(f);
            auto table = [&](const std::map<std::string, int>& phi_t, const std::map<std::string, std::pair<int, int>>& lr) {
                ArcRep r = arcs_from_phi(g, t, a, phi_from_labels(g, phi_t));
                for (const auto& [label, want] : lr)
                    if (r.arcs.at(g.at(label)) != want) return "row " + label + " differs";
                rep.absorb(rep_to_json(g, r).dump());
                return std::string{};
            };
            check("fig4b table", [&] { return table(f.phi_correct, f.lr_correct); });
            check("fig4b verifies", [&]() -> std::string {
                auto r = arcs_from_phi(g, t, a, phi_from_labels(g, f.phi_correct));
                return verify_representation(g, r).equal ? "" : "representation does not verify";
            });
            // Star conditions for the correct phi: either they pass, or they
            // fail on exactly the documented edges.
            {
                auto sr = check_star_conditions(g, a, t, phi_from_labels(g, f.phi_correct));
                std::vector<std::pair<std::string, std::string>> seen;
                for (const auto& fl : sr.failures) seen.emplace_back(g.label(fl.edge.first), g.label(fl.edge.second));
                auto norm = [](auto v) {
                    for (auto& [x, y] : v)
                        if (x > y) std::swap(x, y);
                    std::sort(v.begin(), v.end());
                    return v;
                };
                if (sr.pass) {
                    ++rep.trials, ++rep.passed;
                } else if (norm(seen) == norm(documented_star_gap())) {
                    ++rep.trials;
                    rep.known.push_back("fig4b star conditions: edges h-i, h-o, i-o satisfy none of the four conditions "
                                        "under the pinned phi, although its arcs verify");
                } else {
                    check("fig4b star conditions", [] { return std::string("unexpected failing edges"); });
                }
            }
            check("fig4c table", [&] { return table(f.phi_incorrect, f.lr_incorrect); });
            check("fig4c star conditions", [&]() -> std::string {
                auto sr = check_star_conditions(g, a, t, phi_from_labels(g, f.phi_incorrect));
                Edge hj{std::min(g.at("h"), g.at("j")), std::max(g.at("h"), g.at("j"))};
                for (const auto& fl : sr.failures)
                    if (fl.edge == hj && fl.verdicts == std::array<bool, 4>{}) return {};
                return "h-j does not fail all four conditions";
            });
            check("fig4c verification", [&]() -> std::string {
                auto r = arcs_from_phi(g, t, a, phi_from_labels(g, f.phi_incorrect));
                auto vr = verify_representation(g, r);
                Edge hj{std::min(g.at("h"), g.at("j")), std::max(g.at("h"), g.at("j"))};
                if (vr.equal) return "incorrect phi verified";
                if (std::find(vr.missing.begin(), vr.missing.end(), hj) == vr.missing.end()) return "h-j not reported missing";
                return {};
            });
            check("fig4 construction", [&]() -> std::string { return construct_and_check(g, rep); });
        }
    }
    return rep;
}

} // namespace detail

/// Runs a named suite. Trials are ignored by "fixtures"; lemma1-soundness
/// always adds the 1024 graphs on five vertices to its random trials.
inline SuiteReport run_property_suite(std::string_view name, int trials, std::uint64_t seed) {
    if (name == "thm1-equivalence") return detail::thm1_equivalence(trials, seed);
    if (name == "thm2-construction") return detail::thm2_construction(trials, seed);
    if (name == "lemma1-soundness") return detail::lemma1_soundness(trials, seed);
    if (name == "alpha3-universal") return detail::alpha3_universal(trials, seed);
    if (name == "fixtures") return detail::fixtures();
    throw Error(Errc::UnknownSuite, std::string(name));
}

} // namespace cag
