#pragma once

// Chordal-graph preliminaries: recognition, maximal cliques, clique trees,
// maximum independent set and minimum clique cover.

#include <algorithm>
#include <numeric>
#include <optional>
#include <span>
#include <vector>

#include "cag/graph.hpp"

namespace cag {

using Clique = std::vector<Vertex>;  // sorted ascending
using NodeId = int;
using TreeEdge = std::pair<NodeId, NodeId>;

/// Vertex ordering in which every vertex is simplicial among the vertices
/// that come after it.
using EliminationOrder = std::vector<Vertex>;

namespace detail {

inline std::vector<int> positions(int n, std::span<const Vertex> order) {
    std::vector<int> pos(n, -1);
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
    return pos;
}

inline std::size_t intersection_size(const Clique& a, const Clique& b) {
    std::size_t i = 0, j = 0, k = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) ++i;
        else if (b[j] < a[i]) ++j;
        else { ++k; ++i; ++j; }
    }
    return k;
}

inline bool contains(const Clique& c, Vertex v) { return std::binary_search(c.begin(), c.end(), v); }

} // namespace detail

/// Lexicographic breadth-first search; among equal labels the highest index
/// is taken, so the reversed visit order eliminates low indices first.
inline std::vector<Vertex> lex_bfs(const Graph& g) {
    const int n = g.size();
    std::vector<std::vector<int>> label(n);
    std::vector<char> done(n, 0);
    std::vector<Vertex> order;
    order.reserve(n);
    for (int step = 0; step < n; ++step) {
        Vertex best = -1;
        for (Vertex v = n - 1; v >= 0; --v) {
            if (done[v]) continue;
            if (best == -1 || label[v] > label[best]) best = v;
        }
        done[best] = 1;
        order.push_back(best);
        for (Vertex w : g.neighbors(best))
            if (!done[w]) label[w].push_back(n - step);
    }
    return order;
}

/// True iff `order` is a permutation of V(g) and a perfect elimination ordering.
inline bool is_perfect_elimination_order(const Graph& g, std::span<const Vertex> order) {
    const int n = g.size();
    if (static_cast<int>(order.size()) != n) return false;
    std::vector<int> pos(n, -1);
    for (std::size_t i = 0; i < order.size(); ++i) {
        Vertex v = order[i];
        if (v < 0 || v >= n || pos[v] != -1) return false;
        pos[v] = static_cast<int>(i);
    }
    for (Vertex v : order) {
        Vertex parent = -1;
        for (Vertex w : g.neighbors(v))
            if (pos[w] > pos[v] && (parent == -1 || pos[w] < pos[parent])) parent = w;
        if (parent == -1) continue;
        for (Vertex w : g.neighbors(v))
            if (pos[w] > pos[v] && w != parent && !g.adjacent(parent, w)) return false;
    }
    return true;
}

/// Perfect elimination ordering of g, or nullopt when g has a chordless cycle.
inline std::optional<EliminationOrder> is_chordal(const Graph& g) {
    auto order = lex_bfs(g);
    std::reverse(order.begin(), order.end());
    if (!is_perfect_elimination_order(g, order)) return std::nullopt;
    return order;
}

/// All maximal cliques of a chordal graph, each sorted, the list sorted.
inline std::vector<Clique> maximal_cliques(const Graph& g, std::span<const Vertex> peo) {
    if (!is_perfect_elimination_order(g, peo)) throw Error(Errc::InvalidPEO, "ordering is not a PEO");
    const int n = g.size();
    auto pos = detail::positions(n, peo);

    // C_v = {v} + later neighbours. C_v fails to be maximal exactly when some
    // u whose nearest later neighbour is v has |later(u)| = |later(v)| + 1.
    std::vector<int> later(n, 0);
    std::vector<Vertex> parent(n, -1);
    for (Vertex v = 0; v < n; ++v)
        for (Vertex w : g.neighbors(v))
            if (pos[w] > pos[v]) {
                ++later[v];
                if (parent[v] == -1 || pos[w] < pos[parent[v]]) parent[v] = w;
            }
    std::vector<char> absorbed(n, 0);
    for (Vertex u = 0; u < n; ++u)
        if (parent[u] != -1 && later[u] == later[parent[u]] + 1) absorbed[parent[u]] = 1;

    std::vector<Clique> out;
    for (Vertex v = 0; v < n; ++v) {
        if (absorbed[v]) continue;
        Clique c{v};
        for (Vertex w : g.neighbors(v))
            if (pos[w] > pos[v]) c.push_back(w);
        std::sort(c.begin(), c.end());
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Tree on the maximal cliques of a chordal graph such that, for each vertex,
/// the cliques containing it form a subtree.
struct CliqueTree {
    std::vector<Clique> cliques;
    std::vector<TreeEdge> edges;  // (min, max), sorted

    int node_count() const { return static_cast<int>(cliques.size()); }

    std::vector<std::vector<NodeId>> adjacency() const {
        std::vector<std::vector<NodeId>> adj(cliques.size());
        for (auto [a, b] : edges) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
        for (auto& l : adj) std::sort(l.begin(), l.end());
        return adj;
    }

    int degree(NodeId x) const {
        return static_cast<int>(std::count_if(edges.begin(), edges.end(),
                                              [x](const TreeEdge& e) { return e.first == x || e.second == x; }));
    }

    /// Nodes of degree <= 1, ascending.
    std::vector<NodeId> leaves() const {
        std::vector<NodeId> out;
        for (NodeId x = 0; x < node_count(); ++x)
            if (degree(x) <= 1) out.push_back(x);
        return out;
    }

    /// Node sequence of the tree path from `from` to `to`.
    std::vector<NodeId> path(NodeId from, NodeId to) const {
        auto adj = adjacency();
        std::vector<NodeId> parent(cliques.size(), -1);
        std::vector<NodeId> stack{from};
        parent[from] = from;
        while (!stack.empty()) {
            NodeId x = stack.back();
            stack.pop_back();
            for (NodeId y : adj[x])
                if (parent[y] == -1) {
                    parent[y] = x;
                    stack.push_back(y);
                }
        }
        std::vector<NodeId> out;
        if (parent[to] == -1) return out;
        for (NodeId x = to; x != from; x = parent[x]) out.push_back(x);
        out.push_back(from);
        std::reverse(out.begin(), out.end());
        return out;
    }

    void replace_edge(TreeEdge removed, TreeEdge added) {
        auto norm = [](TreeEdge e) { return e.first < e.second ? e : TreeEdge{e.second, e.first}; };
        removed = norm(removed);
        edges.erase(std::remove(edges.begin(), edges.end(), removed), edges.end());
        edges.push_back(norm(added));
        std::sort(edges.begin(), edges.end());
    }

    bool operator==(const CliqueTree&) const = default;
};

/// Clique tree by maximum-weight spanning tree (weight |C ∩ C'|), grown with
/// Prim's algorithm from node 0. Ties go to the lower node index, so the result
/// is deterministic; components of a disconnected graph join through
/// zero-weight edges.
inline CliqueTree build_clique_tree(const Graph& g) {
    auto peo = is_chordal(g);
    if (!peo) throw Error(Errc::NotChordal, "graph has a chordless cycle");
    CliqueTree t;
    t.cliques = maximal_cliques(g, *peo);
    const int c = t.node_count();
    if (c == 0) return t;

    std::vector<char> in_tree(c, 0);
    std::vector<long> best(c, -1);
    std::vector<NodeId> via(c, -1);
    auto absorb = [&](NodeId u) {
        in_tree[u] = 1;
        for (NodeId v = 0; v < c; ++v) {
            if (in_tree[v]) continue;
            long w = static_cast<long>(detail::intersection_size(t.cliques[u], t.cliques[v]));
            if (w > best[v] || (w == best[v] && u < via[v])) {
                best[v] = w;
                via[v] = u;
            }
        }
    };
    absorb(0);
    for (int step = 1; step < c; ++step) {
        NodeId pick = -1;
        for (NodeId v = 0; v < c; ++v)
            if (!in_tree[v] && (pick == -1 || best[v] > best[pick])) pick = v;
        t.edges.emplace_back(std::min(pick, via[pick]), std::max(pick, via[pick]));
        absorb(pick);
    }
    std::sort(t.edges.begin(), t.edges.end());
    return t;
}

/// True iff the nodes of `t` are exactly the maximal cliques of g, its edges
/// form a tree, and each vertex's cliques induce a subtree.
inline bool validate_clique_tree(const Graph& g, const CliqueTree& t) {
    auto peo = is_chordal(g);
    if (!peo) return false;
    auto expected = maximal_cliques(g, *peo);
    auto got = t.cliques;
    for (auto& c : got) std::sort(c.begin(), c.end());
    std::sort(got.begin(), got.end());
    if (got != expected) return false;

    const int c = t.node_count();
    if (static_cast<int>(t.edges.size()) != c - 1) return false;
    std::vector<int> dsu(c);
    std::iota(dsu.begin(), dsu.end(), 0);
    auto find = [&](int x) {
        while (dsu[x] != x) x = dsu[x] = dsu[dsu[x]];
        return x;
    };
    for (auto [a, b] : t.edges) {
        if (a < 0 || b < 0 || a >= c || b >= c || a == b) return false;
        int ra = find(a), rb = find(b);
        if (ra == rb) return false;
        dsu[ra] = rb;
    }
    for (Vertex v = 0; v < g.size(); ++v) {
        int nodes = 0, inner = 0;
        for (const auto& cl : t.cliques) nodes += detail::contains(cl, v) ? 1 : 0;
        for (auto [a, b] : t.edges)
            if (detail::contains(t.cliques[a], v) && detail::contains(t.cliques[b], v)) ++inner;
        if (nodes == 0 || inner != nodes - 1) return false;
    }
    return true;
}

/// Family of maximal cliques whose union is V(g).
struct CliqueCover {
    std::vector<Clique> members;
};

struct AlphaCover {
    std::vector<Vertex> independent;  // independent[i] lies in cover.members[i]
    CliqueCover cover;
};

/// Maximum independent set and a clique cover of the same size, by the greedy
/// sweep along a perfect elimination ordering. Each cover member is extended
/// to a maximal clique by adding the lowest-index compatible vertex first.
inline AlphaCover alpha_and_cover(const Graph& g, std::span<const Vertex> peo) {
    if (!is_perfect_elimination_order(g, peo)) throw Error(Errc::InvalidPEO, "ordering is not a PEO");
    const int n = g.size();
    auto pos = detail::positions(n, peo);
    std::vector<char> covered(n, 0);
    AlphaCover out;
    for (Vertex v : peo) {
        if (covered[v]) continue;
        out.independent.push_back(v);
        Clique k{v};
        covered[v] = 1;
        for (Vertex w : g.neighbors(v)) {
            covered[w] = 1;
            if (pos[w] > pos[v]) k.push_back(w);
        }
        std::sort(k.begin(), k.end());
        for (Vertex w = 0; w < n; ++w) {
            if (detail::contains(k, w)) continue;
            if (std::all_of(k.begin(), k.end(), [&](Vertex x) { return g.adjacent(x, w); }))
                k.insert(std::upper_bound(k.begin(), k.end(), w), w);
        }
        out.cover.members.push_back(std::move(k));
    }
    // Each member holds a distinct vertex of an independent set, so two
    // members can never extend to the same maximal clique.
    for (std::size_t i = 0; i < out.cover.members.size(); ++i)
        for (std::size_t j = i + 1; j < out.cover.members.size(); ++j)
            if (out.cover.members[i] == out.cover.members[j])
                throw Error(Errc::ProofViolation, "clique cover members collided");
    return out;
}

/// Lowest-index vertex lying in the leaf clique and in no other clique of t.
inline Vertex leaf_private_vertex(const Graph& g, const CliqueTree& t, NodeId leaf) {
    if (leaf < 0 || leaf >= t.node_count() || t.degree(leaf) > 1)
        throw Error(Errc::NotALeaf, "node " + std::to_string(leaf));
    for (Vertex u : t.cliques[leaf]) {
        bool elsewhere = false;
        for (NodeId x = 0; x < t.node_count() && !elsewhere; ++x)
            elsewhere = x != leaf && detail::contains(t.cliques[x], u);
        if (!elsewhere) return u;
    }
    (void)g;
    throw Error(Errc::NoPrivateVertex, "leaf node " + std::to_string(leaf));
}

/// Indices of the cliques of t that contain v.
inline std::vector<NodeId> cliques_containing(const CliqueTree& t, Vertex v) {
    std::vector<NodeId> out;
    for (NodeId x = 0; x < t.node_count(); ++x)
        if (detail::contains(t.cliques[x], v)) out.push_back(x);
    return out;
}

} // namespace cag
