#pragma once

// Euler tours of clique trees, the phi-based arc construction, and the full
// case analysis building circular-arc models of chordal graphs with
// independence number at most four.

#include <algorithm>
#include <array>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cag/arc_rep.hpp"
#include "cag/chordal.hpp"
#include "cag/graph.hpp"
#include "cag/obstructions.hpp"

namespace cag {

/// Closed walk A_0, ..., A_{k-1}, A_0 over clique-tree nodes that crosses
/// every tree edge once in each direction.
struct EulerTour {
    std::vector<NodeId> nodes;
    int k() const { return static_cast<int>(nodes.size()); }
    bool operator==(const EulerTour&) const = default;
};

/// phi[u] is a tour index with u in A_{phi[u]}.
using PhiMap = std::vector<int>;

inline bool validate_euler_tour(const CliqueTree& t, const EulerTour& a) {
    const int c = t.node_count();
    if (c == 1) return a.nodes == std::vector<NodeId>{0};
    if (a.k() != 2 * static_cast<int>(t.edges.size())) return false;
    std::map<std::pair<NodeId, NodeId>, int> used;
    for (int i = 0; i < a.k(); ++i) {
        NodeId x = a.nodes[i], y = a.nodes[(i + 1) % a.k()];
        if (x < 0 || x >= c || y < 0 || y >= c) return false;
        TreeEdge e{std::min(x, y), std::max(x, y)};
        if (!std::binary_search(t.edges.begin(), t.edges.end(), e)) return false;
        if (++used[{x, y}] > 1) return false;
    }
    for (NodeId leaf : t.leaves())
        if (std::count(a.nodes.begin(), a.nodes.end(), leaf) != 1) return false;
    return true;
}

namespace detail {

// Depth-first walk from `root`; children[x] gives the visiting order of the
// neighbours of x other than its parent.
inline EulerTour walk(NodeId root, const std::vector<std::vector<NodeId>>& children) {
    EulerTour a;
    auto visit = [&](auto&& self, NodeId x) -> void {
        a.nodes.push_back(x);
        for (NodeId y : children[x]) {
            self(self, y);
            a.nodes.push_back(x);
        }
    };
    visit(visit, root);
    if (a.nodes.size() > 1) a.nodes.pop_back();
    return a;
}

inline std::vector<std::vector<NodeId>> rooted_children(const CliqueTree& t, NodeId root) {
    auto adj = t.adjacency();
    std::vector<std::vector<NodeId>> children(t.node_count());
    std::vector<NodeId> parent(t.node_count(), -2);
    std::vector<NodeId> stack{root};
    parent[root] = -1;
    while (!stack.empty()) {
        NodeId x = stack.back();
        stack.pop_back();
        for (NodeId y : adj[x])
            if (parent[y] == -2) {
                parent[y] = x;
                children[x].push_back(y);
                stack.push_back(y);
            }
    }
    for (auto& ch : children) std::sort(ch.begin(), ch.end());
    return children;
}

inline std::vector<NodeId> min_rotation(const std::vector<NodeId>& s) {
    std::vector<NodeId> best = s;
    for (std::size_t r = 1; r < s.size(); ++r) {
        std::vector<NodeId> cand(s.begin() + r, s.end());
        cand.insert(cand.end(), s.begin(), s.begin() + r);
        if (cand < best) best = std::move(cand);
    }
    return best;
}

} // namespace detail

/// Visits Euler tours of t: depth-first from the lowest-index node of degree
/// at least 3 (node 0 if there is none), trying every child order at such
/// nodes and ascending order elsewhere. Tours equal up to rotation are
/// reported once. Stops when `fn` returns true or after `limit` tours.
inline void for_each_euler_tour(const CliqueTree& t, const std::function<bool(const EulerTour&)>& fn,
                                std::size_t limit = std::numeric_limits<std::size_t>::max()) {
    const int c = t.node_count();
    if (c == 0) return;
    NodeId root = 0;
    for (NodeId x = 0; x < c; ++x)
        if (t.degree(x) >= 3) { root = x; break; }
    auto children = detail::rooted_children(t, root);
    std::vector<NodeId> branching;
    for (NodeId x = 0; x < c; ++x)
        if (t.degree(x) >= 3) branching.push_back(x);

    std::set<std::vector<NodeId>> seen;
    std::size_t emitted = 0;
    bool stop = false;
    auto rec = [&](auto&& self, std::size_t bi) -> void {
        if (stop) return;
        if (bi == branching.size()) {
            EulerTour a = detail::walk(root, children);
            if (!seen.insert(detail::min_rotation(a.nodes)).second) return;
            ++emitted;
            if (fn(a) || emitted >= limit) stop = true;
            return;
        }
        auto& ch = children[branching[bi]];
        std::sort(ch.begin(), ch.end());
        do {
            self(self, bi + 1);
            if (stop) return;
        } while (std::next_permutation(ch.begin(), ch.end()));
        std::sort(ch.begin(), ch.end());
    };
    rec(rec, 0);
}

inline std::vector<EulerTour> enumerate_euler_tours(const CliqueTree& t,
                                                    std::size_t limit = std::numeric_limits<std::size_t>::max()) {
    std::vector<EulerTour> out;
    for_each_euler_tour(t, [&](const EulerTour& a) { out.push_back(a); return false; }, limit);
    return out;
}

/// Tour walking from `start`, entering the branch towards `first` before any
/// other branch; remaining children ascend.
inline EulerTour tour_toward(const CliqueTree& t, NodeId start, NodeId first) {
    auto children = detail::rooted_children(t, start);
    auto path = t.path(start, first);
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        auto& ch = children[path[i]];
        auto it = std::find(ch.begin(), ch.end(), path[i + 1]);
        std::rotate(ch.begin(), it, it + 1);
    }
    return detail::walk(start, children);
}

/// Arc endpoints from phi: l_u is the first index before phi(u) (walking
/// backwards) whose clique misses u, r_u the first such index after it.
inline ArcRep arcs_from_phi(const Graph& g, const CliqueTree& t, const EulerTour& a, const PhiMap& phi) {
    const int k = a.k();
    if (static_cast<int>(phi.size()) != g.size()) throw Error(Errc::MalformedRep, "phi must cover every vertex");
    ArcRep rep;
    rep.k = k;
    for (Vertex u = 0; u < g.size(); ++u) {
        int p = phi[u];
        if (p < 0 || p >= k || !detail::contains(t.cliques[a.nodes[p]], u)) throw Error(Errc::Star0Violation, g.label(u));
        int l = -1, r = -1;
        for (int s = 1; s < k && l < 0; ++s)
            if (!detail::contains(t.cliques[a.nodes[mod(p - s, k)]], u)) l = mod(p - s, k);
        for (int s = 1; s < k && r < 0; ++s)
            if (!detail::contains(t.cliques[a.nodes[mod(p + s, k)]], u)) r = mod(p + s, k);
        if (l < 0) throw Error(Errc::UniversalVertex, g.label(u) + " lies in every clique of the tour");
        rep.arcs.emplace(u, std::pair{l, r});
    }
    return rep;
}

/// Verdicts of the four conditions for one edge (u, v), u < v.
struct StarFailure {
    Edge edge;
    std::array<bool, 4> verdicts{};
};

struct StarReport {
    bool pass = true;
    std::vector<StarFailure> failures;  // edges satisfying none of the four conditions
};

namespace detail {

// True iff p lies strictly inside the clockwise index interval (i, j).
inline bool strictly_between(int p, int i, int j, int k) {
    int dp = mod(p - i, k), dj = mod(j - i, k);
    return dp > 0 && dp < dj;
}

} // namespace detail

/// Evaluates conditions 1-4 for every edge uv: condition 1 (2) asks u (v) to
/// be adjacent to every x with phi(x) strictly inside (phi(u), phi(v));
/// conditions 3 and 4 do the same on the other side.
inline StarReport check_star_conditions(const Graph& g, const EulerTour& a, const CliqueTree& t, const PhiMap& phi) {
    const int k = a.k();
    for (Vertex u = 0; u < g.size(); ++u)
        if (phi[u] < 0 || phi[u] >= k || !detail::contains(t.cliques[a.nodes[phi[u]]], u))
            throw Error(Errc::Star0Violation, g.label(u));
    StarReport rep;
    for (auto [u, v] : g.edges()) {
        int i = phi[u], j = phi[v];
        if (i == j) continue;
        std::array<bool, 4> ok{true, true, true, true};
        for (Vertex x = 0; x < g.size(); ++x) {
            if (detail::strictly_between(phi[x], i, j, k)) {
                ok[0] = ok[0] && g.adjacent(u, x);
                ok[1] = ok[1] && g.adjacent(v, x);
            } else if (detail::strictly_between(phi[x], j, i, k)) {
                ok[2] = ok[2] && g.adjacent(u, x);
                ok[3] = ok[3] && g.adjacent(v, x);
            }
        }
        if (!(ok[0] || ok[1] || ok[2] || ok[3])) {
            rep.pass = false;
            rep.failures.push_back({{u, v}, ok});
        }
    }
    return rep;
}

/// Graph on four vertices where v_i v_j is an edge iff v_i, v_j avoid the
/// other two.
struct AvoidGraphH {
    std::array<Vertex, 4> verts{};
    std::array<std::array<bool, 4>, 4> adj{};

    bool has(int i, int j) const { return adj[i][j]; }
    int edge_count() const {
        int m = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) m += adj[i][j];
        return m;
    }
};

inline AvoidGraphH build_avoid_graph(const Graph& g, std::array<Vertex, 4> v) {
    AvoidGraphH h;
    h.verts = v;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            int o[2], m = 0;
            for (int x = 0; x < 4; ++x)
                if (x != i && x != j) o[m++] = x;
            bool e = avoid_witness(g, {v[i], v[j]}, {v[o[0]], v[o[1]]}).has_value();
            h.adj[i][j] = h.adj[j][i] = e;
        }
    if (h.edge_count() == 6) throw Error(Errc::QuadrupleIsBQ, "the four vertices form a blocking quadruple");
    return h;
}

/// True iff, for every edge v_i v_j of H, the occurrences of q[i] and q[j]
/// are cyclically consecutive among the occurrences of q[0..3] in the tour.
inline bool respects(const EulerTour& a, const std::array<NodeId, 4>& q, const AvoidGraphH& h) {
    std::vector<int> seq;
    for (NodeId x : a.nodes)
        for (int i = 0; i < 4; ++i)
            if (x == q[i]) seq.push_back(i);
    if (seq.size() != 4) return false;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            if (!h.has(i, j)) continue;
            int pi = static_cast<int>(std::find(seq.begin(), seq.end(), i) - seq.begin());
            int pj = static_cast<int>(std::find(seq.begin(), seq.end(), j) - seq.begin());
            int d = mod(pi - pj, 4);
            if (d != 1 && d != 3) return false;
        }
    return true;
}

/// How construct_representation built its answer.
struct ConstructionInfo {
    std::string dispatch;  // complete, path, three-leaves, four-leaves, three-leaves-internal, certificate-search
    int alpha = 0;
    int leaves = 0;
    int swaps = 0;
    CliqueTree tree;  // final clique tree of the graph without universal vertices
    EulerTour tour;
    PhiMap phi;       // indexed like the graph without universal vertices
    std::vector<Vertex> kept;  // original index of each vertex of that graph
};

namespace detail {

inline NodeId node_of(const CliqueTree& t, const Clique& c) {
    for (NodeId x = 0; x < t.node_count(); ++x)
        if (t.cliques[x] == c) return x;
    return -1;
}

inline bool subset_of(const Clique& a, const Clique& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline Clique intersect(const Clique& a, const Clique& b) {
    Clique out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline int first_occurrence(const EulerTour& a, NodeId x) {
    auto it = std::find(a.nodes.begin(), a.nodes.end(), x);
    return it == a.nodes.end() ? -1 : static_cast<int>(it - a.nodes.begin());
}

[[noreturn]] inline void violation(const std::string& what) { throw Error(Errc::ProofViolation, what); }

// phi(u) = unique occurrence of the lowest-ranked clique of `q` containing u.
inline PhiMap phi_by_cover(const Graph& g, const CliqueTree& t, const EulerTour& a, const std::vector<NodeId>& q) {
    PhiMap phi(g.size(), -1);
    for (Vertex u = 0; u < g.size(); ++u)
        for (NodeId x : q)
            if (contains(t.cliques[x], u)) {
                phi[u] = first_occurrence(a, x);
                break;
            }
    return phi;
}

struct Built {
    EulerTour tour;
    PhiMap phi;
};

// Four leaves, all of them cover cliques. Looks for a tour respecting H and
// otherwise re-attaches a branch so that one exists.
inline Built four_leaves(const Graph& g, CliqueTree& t, const std::vector<NodeId>& cover_nodes, ConstructionInfo& info) {
    const int cap = 2 * std::max<int>(1, static_cast<int>(t.edges.size()));
    for (int round = 0; round <= cap; ++round) {
        auto leaves = t.leaves();
        if (leaves.size() != 4) violation("expected four leaves, found " + std::to_string(leaves.size()));
        std::vector<NodeId> q;
        for (NodeId x : cover_nodes)
            if (std::find(leaves.begin(), leaves.end(), x) != leaves.end()) q.push_back(x);
        if (q.size() != 4) violation("a leaf of the clique tree is not in the clique cover");
        std::array<NodeId, 4> qa{q[0], q[1], q[2], q[3]};
        std::array<Vertex, 4> v{};
        for (int i = 0; i < 4; ++i) v[i] = leaf_private_vertex(g, t, qa[i]);
        AvoidGraphH h = build_avoid_graph(g, v);

        std::optional<EulerTour> found;
        for_each_euler_tour(t, [&](const EulerTour& a) {
            if (respects(a, qa, h)) found = a;
            return found.has_value();
        });
        if (found) return {*found, phi_by_cover(g, t, *found, q)};

        std::vector<NodeId> branch;
        for (NodeId x = 0; x < t.node_count(); ++x)
            if (t.degree(x) >= 3) branch.push_back(x);
        if (branch.size() != 2) violation("no tour respects H and the tree has no two branch nodes");
        NodeId c = branch[0], w = branch[1];
        NodeId toward_w = t.path(c, w)[1];
        std::vector<std::pair<NodeId, NodeId>> sides;  // (leaf beyond, neighbour of c)
        const auto adj = t.adjacency();
        for (NodeId y : adj[c]) {
            if (y == toward_w) continue;
            for (NodeId leaf : leaves)
                if (t.path(c, leaf).size() > 1 && t.path(c, leaf)[1] == y) sides.emplace_back(leaf, y);
        }
        std::sort(sides.begin(), sides.end());
        bool swapped = false;
        for (auto [leaf, ci] : sides) {
            if (subset_of(intersect(t.cliques[c], t.cliques[ci]), t.cliques[w])) {
                t.replace_edge({c, ci}, {ci, w});
                swapped = true;
                break;
            }
        }
        if (!swapped) violation("neither branch at the first branch node can be moved");
        if (!validate_clique_tree(g, t)) violation("re-attached tree is not a clique tree");
        ++info.swaps;
    }
    violation("swap limit reached");
}

// Three leaves with one cover clique internal.
inline std::optional<Built> three_leaves_internal(const Graph& g, CliqueTree& t, const std::vector<NodeId>& cover_nodes,
                                                  ConstructionInfo& info) {
    auto leaves = t.leaves();
    std::vector<NodeId> lq;  // leaves in cover order
    NodeId q4 = -1;
    for (NodeId x : cover_nodes) {
        if (std::find(leaves.begin(), leaves.end(), x) != leaves.end()) lq.push_back(x);
        else if (q4 < 0) q4 = x;
        else violation("two cover cliques are internal");
    }
    if (lq.size() != 3 || q4 < 0) violation("a leaf of the clique tree is not in the clique cover");
    NodeId w = -1;
    for (NodeId x = 0; x < t.node_count(); ++x)
        if (t.degree(x) >= 3) w = x;

    std::array<Vertex, 4> v{};
    for (int i = 0; i < 3; ++i) v[i] = leaf_private_vertex(g, t, lq[i]);
    v[3] = -1;
    for (Vertex u : t.cliques[q4]) {
        bool elsewhere = false;
        for (NodeId x : lq) elsewhere = elsewhere || contains(t.cliques[x], u);
        if (!elsewhere) { v[3] = u; break; }
    }
    if (v[3] < 0) violation("internal cover clique has no vertex outside the leaf cliques");
    AvoidGraphH h = build_avoid_graph(g, v);

    int i1 = -1, i2 = -1, i3 = -1;  // positions in lq of Q1, Q2, Q3
    if (q4 == w) {
        info.dispatch = "three-leaves-internal";
        for (auto [x, y] : {std::pair{0, 1}, {0, 2}, {1, 2}})
            if (!h.has(x, y)) { i1 = x, i2 = y; break; }
        if (i1 < 0) violation("H has a triangle");
        i3 = 3 - i1 - i2;
    } else {
        for (int i = 0; i < 3; ++i) {
            auto p = t.path(w, lq[i]);
            if (std::find(p.begin(), p.end(), q4) != p.end()) i2 = i;
        }
        if (i2 < 0) violation("internal cover clique lies on no branch");
        i1 = i2 == 0 ? 1 : 0;
        i3 = 3 - i1 - i2;
        if (h.has(i1, i2) && h.has(i3, i2)) {
            auto p = t.path(q4, lq[i2]);
            NodeId q2p = p[1];
            if (!subset_of(intersect(t.cliques[q4], t.cliques[q2p]), t.cliques[w]))
                violation("branch below the internal cover clique cannot be moved");
            t.replace_edge({q4, q2p}, {w, q2p});
            if (!validate_clique_tree(g, t)) violation("re-attached tree is not a clique tree");
            ++info.swaps;
            return std::nullopt;
        }
        if (h.has(i1, i2)) std::swap(i1, i3);
        info.dispatch = "three-leaves-internal";
    }

    EulerTour a = tour_toward(t, lq[i1], lq[i2]);
    PhiMap phi(g.size(), -1);
    int q4_at = first_occurrence(a, q4);
    for (Vertex u = 0; u < g.size(); ++u) {
        for (NodeId x : lq)
            if (contains(t.cliques[x], u)) {
                phi[u] = first_occurrence(a, x);
                break;
            }
        if (phi[u] < 0) phi[u] = q4_at;
    }
    return Built{a, phi};
}

// Backtracking search for phi on a given tour satisfying all four-condition
// constraints; used where no case analysis applies.
inline std::optional<PhiMap> search_phi(const Graph& g, const CliqueTree& t, const EulerTour& a, long& budget) {
    const int n = g.size(), k = a.k();
    std::vector<std::vector<int>> cand(n);
    for (int p = 0; p < k; ++p)
        for (Vertex u : t.cliques[a.nodes[p]]) cand[u].push_back(p);
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Vertex x, Vertex y) { return cand[x].size() < cand[y].size(); });

    auto edges = g.edges();
    std::vector<std::vector<int>> incident(n);
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
        incident[edges[e].first].push_back(e);
        incident[edges[e].second].push_back(e);
    }
    PhiMap phi(n, -1);
    std::vector<int> mask(edges.size(), 15);
    std::vector<Vertex> assigned;

    auto kill = [&](int e, Vertex x, std::vector<std::pair<int, int>>& trail) {
        auto [u, v] = edges[e];
        int i = phi[u], j = phi[v], m = mask[e];
        if (i == j) return true;
        if (strictly_between(phi[x], i, j, k)) {
            if (!g.adjacent(u, x)) m &= ~1;
            if (!g.adjacent(v, x)) m &= ~2;
        } else if (strictly_between(phi[x], j, i, k)) {
            if (!g.adjacent(u, x)) m &= ~4;
            if (!g.adjacent(v, x)) m &= ~8;
        }
        if (m != mask[e]) {
            trail.emplace_back(e, mask[e]);
            mask[e] = m;
        }
        return m != 0;
    };

    auto rec = [&](auto&& self, std::size_t depth) -> bool {
        if (depth == order.size()) return true;
        Vertex x = order[depth];
        for (int p : cand[x]) {
            if (--budget < 0) return false;
            phi[x] = p;
            std::vector<std::pair<int, int>> trail;
            bool ok = true;
            for (Vertex y : assigned) {
                for (int e : incident[y]) {
                    auto [u, v] = edges[e];
                    Vertex other = u == y ? v : u;
                    if (other == x || phi[other] < 0 || other < y) continue;
                    if (!kill(e, x, trail)) { ok = false; break; }
                }
                if (!ok) break;
            }
            for (int e : incident[x]) {
                if (!ok) break;
                auto [u, v] = edges[e];
                Vertex other = u == x ? v : u;
                if (phi[other] < 0) continue;
                for (Vertex y : assigned)
                    if (y != other && !kill(e, y, trail)) { ok = false; break; }
            }
            if (ok) {
                assigned.push_back(x);
                if (self(self, depth + 1)) return true;
                assigned.pop_back();
            }
            for (auto it = trail.rbegin(); it != trail.rend(); ++it) mask[it->first] = it->second;
            phi[x] = -1;
            if (budget < 0) return false;
        }
        return false;
    };
    if (rec(rec, 0)) return phi;
    return std::nullopt;
}

} // namespace detail

/// Limits for the certificate search used when the independence number
/// exceeds four.
struct SearchLimits {
    std::size_t max_tours = 256;
    long max_steps = 2'000'000;
};

/// Builds a verified circular-arc model of a chordal graph that has no
/// blocking quadruple and independence number at most four. Universal
/// vertices are taken out first and get the full circle. Larger independence
/// numbers fall back to a bounded search for a valid (tour, phi) pair and
/// fail with AlphaTooLarge when none is found.
inline ArcRep construct_representation(const Graph& g, ConstructionInfo* info_out = nullptr,
                                       SearchLimits limits = {}) {
    ConstructionInfo info;
    if (!is_chordal(g)) throw Error(Errc::NotChordal, "graph has a chordless cycle");

    std::vector<Vertex> full;
    for (Vertex v = 0; v < g.size(); ++v)
        if (g.is_universal(v)) full.push_back(v); else info.kept.push_back(v);
    Graph h = induced_subgraph(g, info.kept);

    ArcRep rep;
    rep.full = full;
    if (h.size() == 0) {
        rep.k = 1;
        info.dispatch = "complete";
        if (info_out) *info_out = std::move(info);
        return rep;
    }

    auto peo = is_chordal(h);
    auto ac = alpha_and_cover(h, *peo);
    info.alpha = static_cast<int>(ac.independent.size());
    if (auto bq = find_blocking_quadruple(h)) {
        std::string q;
        for (Vertex x : bq->quad) q += (q.empty() ? "" : " ") + h.label(x);
        throw Error(Errc::HasBlockingQuadruple, q);
    }

    CliqueTree t = build_clique_tree(h);
    std::vector<NodeId> cover_nodes;
    for (const auto& c : ac.cover.members) cover_nodes.push_back(detail::node_of(t, c));
    if (std::find(cover_nodes.begin(), cover_nodes.end(), -1) != cover_nodes.end())
        detail::violation("cover clique is not a node of the clique tree");

    std::optional<detail::Built> built;
    if (info.alpha >= 5) {
        long budget = limits.max_steps;
        for_each_euler_tour(t, [&](const EulerTour& a) {
            if (auto phi = detail::search_phi(h, t, a, budget)) built = detail::Built{a, *phi};
            return built.has_value() || budget < 0;
        }, limits.max_tours);
        if (!built) throw Error(Errc::AlphaTooLarge, std::to_string(info.alpha));
        info.dispatch = "certificate-search";
    }

    for (int guard = 0; !built && guard < 4; ++guard) {
        auto leaves = t.leaves();
        info.leaves = static_cast<int>(leaves.size());
        if (static_cast<int>(leaves.size()) > info.alpha) detail::violation("more leaves than the independence number");
        for (NodeId x : leaves)
            if (std::find(cover_nodes.begin(), cover_nodes.end(), x) == cover_nodes.end())
                detail::violation("a leaf of the clique tree is not in the clique cover");

        if (leaves.size() <= 2) {
            info.dispatch = "path";
            NodeId start = leaves.front();
            auto order = t.path(start, leaves.back());
            EulerTour a{order};
            for (int i = static_cast<int>(order.size()) - 2; i >= 1; --i) a.nodes.push_back(order[i]);
            PhiMap phi(h.size(), -1);
            for (Vertex u = 0; u < h.size(); ++u)
                for (int i = 0; i < static_cast<int>(order.size()) && phi[u] < 0; ++i)
                    if (detail::contains(t.cliques[order[i]], u)) phi[u] = i;
            built = detail::Built{a, phi};
        } else if (leaves.size() == 3 && info.alpha == 3) {
            info.dispatch = "three-leaves";
            EulerTour a = enumerate_euler_tours(t, 1).front();
            built = detail::Built{a, detail::phi_by_cover(h, t, a, cover_nodes)};
        } else if (leaves.size() == 4) {
            if (info.dispatch.empty()) info.dispatch = "four-leaves";
            built = detail::four_leaves(h, t, cover_nodes, info);
        } else if (leaves.size() == 3 && info.alpha == 4) {
            built = detail::three_leaves_internal(h, t, cover_nodes, info);
            if (!built) info.dispatch = "three-to-four-leaves";
        } else {
            detail::violation("unexpected tree shape");
        }
    }
    if (!built) detail::violation("case analysis did not settle");

    auto star = check_star_conditions(h, built->tour, t, built->phi);
    if (!star.pass) detail::violation("phi fails the four conditions on " + std::to_string(star.failures.size()) + " edges");
    ArcRep inner = arcs_from_phi(h, t, built->tour, built->phi);
    rep.k = inner.k;
    for (const auto& [u, lr] : inner.arcs) rep.arcs.emplace(info.kept[u], lr);
    auto check = verify_representation(g, rep);
    if (!check.equal) detail::violation("constructed arcs do not reproduce the graph");

    info.tree = t;
    info.tour = built->tour;
    info.phi = built->phi;
    if (info_out) *info_out = std::move(info);
    return rep;
}

} // namespace cag
