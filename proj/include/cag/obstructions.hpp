#pragma once

// Miss/avoid predicates, asteroidal triples, blocking quadruples, and
// extraction of forbidden-subgraph certificates.

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "cag/chordal.hpp"
#include "cag/graph.hpp"
#include "cag/templates.hpp"

namespace cag {

using VertexPair = std::pair<Vertex, Vertex>;

/// Path witnessing that two pairs avoid each other. `host` is 0 when the path
/// joins the first pair (and is missed by the second), 1 otherwise.
struct AvoidWitness {
    Path path;
    int host = 0;
    bool operator==(const AvoidWitness&) const = default;
};

/// Shortest witness that `p1` avoids `p2`, preferring a path between the
/// vertices of `p1`.
inline std::optional<AvoidWitness> avoid_witness(const Graph& g, VertexPair p1, VertexPair p2) {
    std::array<Vertex, 2> b2{p2.first, p2.second};
    if (auto p = try_path_missing(g, p1.first, p1.second, b2)) return AvoidWitness{std::move(*p), 0};
    std::array<Vertex, 2> b1{p1.first, p1.second};
    if (auto p = try_path_missing(g, p2.first, p2.second, b1)) return AvoidWitness{std::move(*p), 1};
    return std::nullopt;
}

/// Four vertices any two of which avoid the other two. witnesses[i] belongs
/// to the i-th pairing: (q0q1|q2q3), (q0q2|q1q3), (q0q3|q1q2).
struct BlockingQuadruple {
    std::array<Vertex, 4> quad{};
    std::array<AvoidWitness, 3> witnesses;
};

inline std::array<std::pair<VertexPair, VertexPair>, 3> pairings(const std::array<Vertex, 4>& q) {
    return {{{{q[0], q[1]}, {q[2], q[3]}}, {{q[0], q[2]}, {q[1], q[3]}}, {{q[0], q[3]}, {q[1], q[2]}}}};
}

/// Blocking quadruple on exactly these four vertices, if they form one.
inline std::optional<BlockingQuadruple> blocking_quadruple_on(const Graph& g, std::array<Vertex, 4> q) {
    if (!is_independent(g, q)) return std::nullopt;
    BlockingQuadruple bq{q, {}};
    auto ps = pairings(q);
    for (int i = 0; i < 3; ++i) {
        auto w = avoid_witness(g, ps[i].first, ps[i].second);
        if (!w) return std::nullopt;
        bq.witnesses[i] = std::move(*w);
    }
    return bq;
}

/// Replays every witness of `bq` against g.
inline bool validate_blocking_quadruple(const Graph& g, const BlockingQuadruple& bq) {
    if (!is_independent(g, bq.quad)) return false;
    auto ps = pairings(bq.quad);
    for (int i = 0; i < 3; ++i) {
        const auto& w = bq.witnesses[i];
        auto [ends, blockers] = w.host == 0 ? ps[i] : std::pair{ps[i].second, ps[i].first};
        if (!is_path(g, w.path)) return false;
        std::pair<Vertex, Vertex> got = std::minmax(w.path.front(), w.path.back());
        std::pair<Vertex, Vertex> want = std::minmax(ends.first, ends.second);
        if (got != want) return false;
        if (!misses(g, blockers.first, w.path) || !misses(g, blockers.second, w.path)) return false;
    }
    return true;
}

/// Connectivity of G - N[x] - N[y] for every non-adjacent pair, computed on
/// demand. Answers "do x, y avoid z, w" in constant time after warm-up.
class AvoidOracle {
public:
    explicit AvoidOracle(const Graph& g) : g_(g), comps_(static_cast<std::size_t>(g.size()) * g.size()) {}

    /// True iff x and y lie in one component of G - N[z] - N[w].
    bool joined_missing(Vertex x, Vertex y, Vertex z, Vertex w) {
        const auto& c = comps(z, w);
        return c[x] >= 0 && c[x] == c[y];
    }

    bool avoid(Vertex x, Vertex y, Vertex z, Vertex w) {
        return joined_missing(x, y, z, w) || joined_missing(z, w, x, y);
    }

    bool is_bq(const std::array<Vertex, 4>& q) {
        return avoid(q[0], q[1], q[2], q[3]) && avoid(q[0], q[2], q[1], q[3]) && avoid(q[0], q[3], q[1], q[2]);
    }

private:
    const std::vector<int>& comps(Vertex z, Vertex w) {
        if (z > w) std::swap(z, w);
        auto& c = comps_[static_cast<std::size_t>(z) * g_.size() + w];
        if (c.empty()) {
            std::array<Vertex, 2> b{z, w};
            c = component_ids(g_, missed_mask(g_, b));
        }
        return c;
    }

    const Graph& g_;
    std::vector<std::vector<int>> comps_;
};

/// Calls `fn` on every independent 4-set in lexicographic order until it
/// returns true.
inline void for_each_independent_quad(const Graph& g, const std::function<bool(const std::array<Vertex, 4>&)>& fn) {
    const int n = g.size();
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) {
            if (g.adjacent(i, j)) continue;
            for (Vertex k = j + 1; k < n; ++k) {
                if (g.adjacent(i, k) || g.adjacent(j, k)) continue;
                for (Vertex l = k + 1; l < n; ++l) {
                    if (g.adjacent(i, l) || g.adjacent(j, l) || g.adjacent(k, l)) continue;
                    if (fn({i, j, k, l})) return;
                }
            }
        }
}

/// Lexicographically first blocking quadruple of g.
inline std::optional<BlockingQuadruple> find_blocking_quadruple(const Graph& g) {
    AvoidOracle oracle(g);
    std::optional<std::array<Vertex, 4>> hit;
    for_each_independent_quad(g, [&](const std::array<Vertex, 4>& q) {
        if (oracle.is_bq(q)) hit = q;
        return hit.has_value();
    });
    if (!hit) return std::nullopt;
    return blocking_quadruple_on(g, *hit);
}

/// Every blocking quadruple of g, lexicographic.
inline std::vector<std::array<Vertex, 4>> all_blocking_quadruples(const Graph& g) {
    AvoidOracle oracle(g);
    std::vector<std::array<Vertex, 4>> out;
    for_each_independent_quad(g, [&](const std::array<Vertex, 4>& q) {
        if (oracle.is_bq(q)) out.push_back(q);
        return false;
    });
    return out;
}

/// Lexicographically first asteroidal triple of g.
inline std::optional<std::array<Vertex, 3>> find_asteroidal_triple(const Graph& g) {
    const int n = g.size();
    std::vector<std::vector<int>> comp(n);
    for (Vertex v = 0; v < n; ++v) {
        std::array<Vertex, 1> b{v};
        comp[v] = component_ids(g, missed_mask(g, b));
    }
    auto linked = [&](Vertex x, Vertex y, Vertex z) { return comp[z][x] >= 0 && comp[z][x] == comp[z][y]; };
    for (Vertex x = 0; x < n; ++x)
        for (Vertex y = x + 1; y < n; ++y) {
            if (g.adjacent(x, y)) continue;
            for (Vertex z = y + 1; z < n; ++z) {
                if (g.adjacent(x, z) || g.adjacent(y, z)) continue;
                if (linked(x, y, z) && linked(x, z, y) && linked(y, z, x)) return std::array<Vertex, 3>{x, y, z};
            }
        }
    return std::nullopt;
}

inline bool is_interval(const Graph& g) { return is_chordal(g) && !find_asteroidal_triple(g); }

struct NearlyFlags {
    bool nearly_chordal = true;
    bool nearly_interval = true;
    std::optional<Vertex> non_interval_at;  // first v with G - N[v] not interval
};

/// Whether G - N[v] is chordal, resp. interval, for every v.
inline NearlyFlags nearly_flags(const Graph& g) {
    NearlyFlags f;
    for (Vertex v = 0; v < g.size(); ++v) {
        std::array<Vertex, 1> b{v};
        Graph rest = induced_subgraph(g, outside_closed_neighborhoods(g, b));
        if (!is_chordal(rest)) {
            f.nearly_chordal = false;
            f.nearly_interval = false;
        } else if (find_asteroidal_triple(rest)) {
            f.nearly_interval = false;
        } else {
            continue;
        }
        if (!f.non_interval_at) f.non_interval_at = v;
    }
    return f;
}

/// Family name, role embedding and path parameters of a forbidden subgraph.
struct ObstructionCert {
    std::string family;
    RoleMap roles;
    std::vector<int> path_params;
    bool operator==(const ObstructionCert&) const = default;
};

/// True iff the role vertices induce exactly the family template. The
/// literal role mapping is tried first; failing that, any isomorphism that
/// keeps a, b, c, d on their certified vertices is accepted.
inline bool match_family(const Graph& g, const ObstructionCert& cert) {
    Graph tmpl = family_template(cert.family, cert.path_params);
    if (static_cast<int>(cert.roles.size()) != tmpl.size()) return false;
    std::vector<Vertex> verts;
    for (Vertex t = 0; t < tmpl.size(); ++t) {
        auto it = cert.roles.find(tmpl.label(t));
        if (it == cert.roles.end() || it->second < 0 || it->second >= g.size()) return false;
        verts.push_back(it->second);
    }
    auto sorted = verts;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;

    bool literal = true;
    for (Vertex t = 0; t < tmpl.size() && literal; ++t)
        for (Vertex u = t + 1; u < tmpl.size() && literal; ++u)
            literal = tmpl.adjacent(t, u) == g.adjacent(verts[t], verts[u]);
    if (literal) return true;

    RoleMap fixed;
    for (const char* r : {"a", "b", "c", "d"})
        if (auto it = cert.roles.find(r); it != cert.roles.end()) fixed.emplace(r, it->second);
    return find_isomorphism(g, verts, tmpl, fixed).has_value();
}

/// First induced copy of a family from `families`, by increasing subset size
/// starting at `min_size`, then family order, then lexicographic subset.
inline std::optional<ObstructionCert> find_family_embedding(const Graph& g, std::span<const std::string_view> families,
                                                            int min_size = 6) {
    const int n = g.size();
    std::vector<int> deg_all(n);
    for (int s = std::max(min_size, 1); s <= n; ++s) {
        for (auto family : families) {
            for (const auto& params : family_params_for_size(family, s)) {
                Graph tmpl = family_template(family, params);
                int max_deg = 0;
                for (Vertex t = 0; t < tmpl.size(); ++t) max_deg = std::max(max_deg, tmpl.degree(t));
                std::vector<Vertex> subset;
                std::optional<RoleMap> found;
                auto rec = [&](auto&& self, Vertex next) -> bool {
                    if (static_cast<int>(subset.size()) == s) {
                        found = find_isomorphism(g, subset, tmpl);
                        return found.has_value();
                    }
                    for (Vertex v = next; v <= n - (s - static_cast<int>(subset.size())); ++v) {
                        int inside = 0;
                        for (Vertex u : subset) inside += g.adjacent(u, v) ? 1 : 0;
                        if (inside > max_deg) continue;
                        subset.push_back(v);
                        if (self(self, v + 1)) return true;
                        subset.pop_back();
                    }
                    return false;
                };
                if (rec(rec, 0)) return ObstructionCert{std::string(family), std::move(*found), params};
            }
        }
    }
    return std::nullopt;
}

/// How extract_obstruction reached its answer.
struct ExtractionTrace {
    std::string route;                  // "non-nearly-interval" or "path-minimization"
    std::optional<Vertex> pivot;        // v with G - N[v] not interval
    std::vector<int> examined_sums;     // |P_b|+|P_c|+|P_d| per candidate, in examination order
    int selected_sum = -1;
    bool used_fallback = false;
};

namespace detail {

struct HubPaths {
    Vertex hub;
    std::array<Vertex, 3> leaves;  // the other three quadruple vertices
    std::array<Path, 3> paths;     // paths[i] joins hub to leaves[i], missed by the other two leaves
    int sum() const { return static_cast<int>(paths[0].size() + paths[1].size() + paths[2].size()); }
};

inline std::vector<HubPaths> hub_candidates(const Graph& g, const std::array<Vertex, 4>& q) {
    std::vector<HubPaths> out;
    for (int h = 0; h < 4; ++h) {
        HubPaths hp;
        hp.hub = q[h];
        int m = 0;
        for (int i = 0; i < 4; ++i)
            if (i != h) hp.leaves[m++] = q[i];
        bool ok = true;
        for (int i = 0; i < 3 && ok; ++i) {
            std::array<Vertex, 2> blockers{hp.leaves[(i + 1) % 3], hp.leaves[(i + 2) % 3]};
            auto p = try_path_missing(g, hp.hub, hp.leaves[i], blockers);
            if (!p) ok = false;
            else hp.paths[i] = std::move(*p);
        }
        if (ok) out.push_back(std::move(hp));
    }
    std::stable_sort(out.begin(), out.end(), [](const HubPaths& x, const HubPaths& y) { return x.sum() < y.sum(); });
    return out;
}

// Reads off the certificate suggested by three minimal paths; match_family
// decides whether the reading is right.
inline std::optional<ObstructionCert> classify(const Graph& g, const HubPaths& hp) {
    const auto& P = hp.paths;
    const auto& L = hp.leaves;
    const Vertex A = hp.hub;
    auto mid = [&](int i) { return P[i].vertices[1]; };

    int longest = -1;
    for (int i = 0; i < 3; ++i)
        if (P[i].size() >= 4 && longest < 0) longest = i;

    if (longest >= 0) {
        const int X = longest;
        const Vertex u = P[X].vertices[P[X].size() - 2];
        int Y = -1;
        for (int j = 0; j < 3 && Y < 0; ++j) {
            if (j == X) continue;
            for (Vertex y : P[j].vertices)
                if (y != A && g.adjacent(u, y)) { Y = j; break; }
        }
        if (Y < 0 || P[Y].size() != 3) return std::nullopt;
        const int Z = 3 - X - Y;
        // Mid path: u, inner part of P_X back to the hub, then inner part of P_Z.
        std::vector<Vertex> path;
        for (int i = static_cast<int>(P[X].size()) - 2; i >= 0; --i) path.push_back(P[X].vertices[i]);
        for (std::size_t i = 1; i + 1 < P[Z].size(); ++i) path.push_back(P[Z].vertices[i]);
        const int len = static_cast<int>(path.size()) - 1;
        const int d_at = static_cast<int>(P[X].size()) - 2;
        ObstructionCert c{"Fig1-d", {}, {len, d_at}};
        c.roles = {{"a", L[Y]}, {"b", L[X]}, {"c", L[Z]}, {"x", mid(Y)}};
        for (int i = 0; i <= len; ++i) c.roles.emplace(i == d_at ? "d" : "p" + std::to_string(i), path[i]);
        return c;
    }

    std::array<Vertex, 3> m{mid(0), mid(1), mid(2)};
    bool e01 = g.adjacent(m[0], m[1]), e02 = g.adjacent(m[0], m[2]), e12 = g.adjacent(m[1], m[2]);
    int edges = e01 + e02 + e12;
    if (edges == 0)
        return ObstructionCert{"Fig1-e", {{"a", L[0]}, {"b", L[1]}, {"c", L[2]}, {"d", A},
                                          {"x4", m[0]}, {"x1", m[1]}, {"x2", m[2]}}, {}};
    if (edges == 3)
        return ObstructionCert{"Fig1-g", {{"a", L[0]}, {"b", L[1]}, {"c", L[2]}, {"d", A},
                                          {"x3", m[0]}, {"x1", m[1]}, {"x2", m[2]}}, {}};
    if (edges == 1) {
        // The two adjacent middles take b and c; the lone one leads to a.
        int lone = e01 ? 2 : (e02 ? 1 : 0);
        int p = (lone + 1) % 3, q = (lone + 2) % 3;
        return ObstructionCert{"Fig1-f", {{"a", L[lone]}, {"b", L[p]}, {"c", L[q]}, {"d", A},
                                          {"x4", m[lone]}, {"x1", m[p]}, {"x2", m[q]}}, {}};
    }
    // Two edges: the middle adjacent to both others is the centre.
    int ctr = !e12 ? 0 : (!e02 ? 1 : 2);
    int p = (ctr + 1) % 3, q = (ctr + 2) % 3;
    return ObstructionCert{"Fig1-d", {{"a", L[ctr]}, {"b", L[p]}, {"c", L[q]}, {"d", A},
                                      {"x", m[ctr]}, {"p0", m[p]}, {"p2", m[q]}}, {2, 1}};
}

inline ObstructionCert lift_interval_cert(const ObstructionCert& inner, Vertex v) {
    ObstructionCert out;
    const std::string& f = inner.family;
    out.roles = inner.roles;
    out.path_params = inner.path_params;
    if (f == "Fig3-a" || f == "Fig3-b" || f == "Fig3-c") {
        out.family = "Fig1-" + f.substr(5);
        out.roles.emplace("d", v);
    } else if (f == "Fig3-e") {
        out.family = "Fig1-e";
        out.roles.emplace("d", out.roles.at("x3"));
        out.roles.erase("x3");
    } else {  // Fig3-d
        out.family = "Fig1-d";
        out.roles.emplace("d", out.roles.at("p1"));
        out.roles.erase("p1");
        out.path_params.push_back(1);
    }
    return out;
}

} // namespace detail

/// Forbidden-subgraph certificate for a nearly chordal graph carrying the
/// blocking quadruple `bq`.
///
/// When some G - N[v] is not interval, an interval obstruction is located
/// inside it and lifted. Otherwise the three paths from one quadruple vertex
/// to the other three are minimised in total length and the resulting
/// configuration is read off; if that candidate does not match, all
/// quadruples of g are tried in order of path length.
inline ObstructionCert extract_obstruction(const Graph& g, const BlockingQuadruple& bq,
                                           ExtractionTrace* trace = nullptr) {
    ExtractionTrace local;
    ExtractionTrace& tr = trace ? *trace : local;
    tr = {};
    auto flags = nearly_flags(g);
    if (!flags.nearly_chordal) throw Error(Errc::NotNearlyChordal, "some G - N[v] has a chordless cycle");

    if (!flags.nearly_interval) {
        tr.route = "non-nearly-interval";
        Vertex v = *flags.non_interval_at;
        tr.pivot = v;
        std::array<Vertex, 1> b{v};
        auto keep = outside_closed_neighborhoods(g, b);
        Graph rest = induced_subgraph(g, keep);
        auto inner = find_family_embedding(rest, kIntervalFamilies, 6);
        if (!inner) throw Error(Errc::NoObstructionFound, "no interval obstruction in G - N[" + g.label(v) + "]");
        for (auto& [role, x] : inner->roles) x = keep[x];
        auto cert = detail::lift_interval_cert(*inner, v);
        if (!match_family(g, cert)) throw Error(Errc::NoObstructionFound, "lifted certificate does not match");
        return cert;
    }

    tr.route = "path-minimization";
    auto attempt = [&](const std::array<Vertex, 4>& q) -> std::optional<ObstructionCert> {
        for (const auto& hp : detail::hub_candidates(g, q)) {
            tr.examined_sums.push_back(hp.sum());
            auto cert = detail::classify(g, hp);
            if (cert && match_family(g, *cert)) {
                tr.selected_sum = hp.sum();
                return cert;
            }
        }
        return std::nullopt;
    };
    if (auto c = attempt(bq.quad)) return *c;

    tr.used_fallback = true;
    std::vector<std::pair<int, detail::HubPaths>> all;
    for (const auto& q : all_blocking_quadruples(g))
        for (auto& hp : detail::hub_candidates(g, q)) all.emplace_back(hp.sum(), std::move(hp));
    std::stable_sort(all.begin(), all.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    for (const auto& [sum, hp] : all) {
        tr.examined_sums.push_back(sum);
        auto cert = detail::classify(g, hp);
        if (cert && match_family(g, *cert)) {
            tr.selected_sum = sum;
            return *cert;
        }
    }
    throw Error(Errc::NoObstructionFound, "no candidate configuration matched a family");
}

} // namespace cag
