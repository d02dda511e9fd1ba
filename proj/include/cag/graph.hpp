#pragma once

// Immutable simple graphs, edge-list parsing, induced subgraphs and
// shortest paths that stay clear of closed neighbourhoods.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cag/error.hpp"

namespace cag {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Undirected simple graph with stable text labels.
///
/// Neighbour lists are sorted ascending, so every traversal that walks them
/// in order is deterministic. Instances are immutable once built.
class Graph {
public:
    Graph() = default;

    /// Builds a graph on `labels.size()` vertices. Duplicate edges are merged.
    Graph(std::vector<std::string> labels, std::span<const Edge> edges)
        : labels_(std::move(labels)), adj_(labels_.size()),
          mat_(labels_.size() * labels_.size(), 0) {
        const int n = size();
        for (int v = 0; v < n; ++v) {
            const auto& l = labels_[v];
            if (l.empty() || std::any_of(l.begin(), l.end(), is_space))
                throw Error(Errc::ParseError, "label must be a non-empty token without whitespace");
            if (!index_.emplace(l, v).second)
                throw Error(Errc::ParseError, "duplicate label '" + l + "'");
        }
        for (auto [u, v] : edges) {
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw Error(Errc::UnknownVertex, "edge endpoint out of range");
            if (u == v) throw Error(Errc::SelfLoop, labels_[u]);
            if (mat_[idx(u, v)]) continue;
            mat_[idx(u, v)] = mat_[idx(v, u)] = 1;
            adj_[u].push_back(v);
            adj_[v].push_back(u);
            ++m_;
        }
        for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
    }

    /// Convenience constructor labelling vertices "0", "1", ...
    static Graph with_index_labels(int n, std::span<const Edge> edges) {
        std::vector<std::string> labels;
        labels.reserve(n);
        for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
        return Graph(std::move(labels), edges);
    }

    int size() const noexcept { return static_cast<int>(labels_.size()); }
    int edge_count() const noexcept { return m_; }

    bool adjacent(Vertex u, Vertex v) const noexcept { return mat_[idx(u, v)] != 0; }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }

    const std::string& label(Vertex v) const { return labels_[v]; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }

    std::optional<Vertex> find(std::string_view label) const {
        auto it = index_.find(std::string(label));
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    Vertex at(std::string_view label) const {
        auto v = find(label);
        if (!v) throw Error(Errc::UnknownVertex, std::string(label));
        return *v;
    }

    /// Edges as (u, v) with u < v, sorted.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(m_);
        for (int u = 0; u < size(); ++u)
            for (int v : adj_[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    bool is_universal(Vertex v) const { return degree(v) == size() - 1; }

    bool operator==(const Graph& o) const { return labels_ == o.labels_ && mat_ == o.mat_; }

private:
    static bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; }
    std::size_t idx(Vertex u, Vertex v) const noexcept {
        return static_cast<std::size_t>(u) * labels_.size() + static_cast<std::size_t>(v);
    }

    std::vector<std::string> labels_;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::uint8_t> mat_;
    std::unordered_map<std::string, Vertex> index_;
    int m_ = 0;
};

/// Simple path; consecutive vertices adjacent, no repeats.
struct Path {
    std::vector<Vertex> vertices;

    std::size_t size() const noexcept { return vertices.size(); }
    Vertex front() const { return vertices.front(); }
    Vertex back() const { return vertices.back(); }
    bool operator==(const Path&) const = default;
};

/// Parses the edge-list text format: one token declares a vertex, two tokens
/// declare an edge, lines starting with '#' are comments. Labels are indexed
/// in first-appearance order.
inline Graph parse_graph(std::string_view text) {
    std::vector<std::string> labels;
    std::unordered_map<std::string, Vertex> index;
    std::vector<Edge> edges;
    auto intern = [&](const std::string& tok) {
        auto [it, fresh] = index.emplace(tok, static_cast<Vertex>(labels.size()));
        if (fresh) labels.push_back(tok);
        return it->second;
    };

    std::size_t lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++lineno;
        if (!line.empty() && line.front() == '#') continue;

        std::istringstream in{std::string(line)};
        std::vector<std::string> toks;
        for (std::string t; in >> t;) toks.push_back(std::move(t));
        if (toks.empty()) continue;
        if (toks.size() > 2)
            throw Error(Errc::ParseError, "line " + std::to_string(lineno) + ": expected one or two labels");
        if (toks.size() == 2 && toks[0] == toks[1]) throw Error(Errc::SelfLoop, toks[0]);
        Vertex u = intern(toks[0]);
        if (toks.size() == 2) edges.emplace_back(u, intern(toks[1]));
    }
    if (labels.empty()) throw Error(Errc::EmptyInput, "no vertices declared");
    return Graph(std::move(labels), edges);
}

/// Serialises `g` in the edge-list format (isolated vertices on their own line).
inline std::string to_edge_list(const Graph& g) {
    std::string out;
    for (Vertex v = 0; v < g.size(); ++v)
        if (g.degree(v) == 0) out += g.label(v) + "\n";
    for (auto [u, v] : g.edges()) out += g.label(u) + " " + g.label(v) + "\n";
    return out;
}

/// Subgraph induced by `s`. Vertex i of the result is the i-th smallest member
/// of `s`; labels are carried over.
inline Graph induced_subgraph(const Graph& g, std::span<const Vertex> s) {
    std::vector<Vertex> keep(s.begin(), s.end());
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    std::vector<int> pos(g.size(), -1);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < keep.size(); ++i) {
        if (keep[i] < 0 || keep[i] >= g.size())
            throw Error(Errc::UnknownVertex, "index " + std::to_string(keep[i]));
        pos[keep[i]] = static_cast<int>(i);
        labels.push_back(g.label(keep[i]));
    }
    std::vector<Edge> edges;
    for (Vertex u : keep)
        for (Vertex v : g.neighbors(u))
            if (u < v && pos[v] >= 0) edges.emplace_back(pos[u], pos[v]);
    return Graph(std::move(labels), edges);
}

/// Vertices of g outside the closed neighbourhoods of `xs`.
inline std::vector<Vertex> outside_closed_neighborhoods(const Graph& g, std::span<const Vertex> xs) {
    std::vector<char> hit(g.size(), 0);
    for (Vertex x : xs) {
        hit[x] = 1;
        for (Vertex y : g.neighbors(x)) hit[y] = 1;
    }
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.size(); ++v)
        if (!hit[v]) out.push_back(v);
    return out;
}

/// BFS shortest s-t path through vertices with `allowed[v]` set, visiting
/// neighbours in ascending order (lowest-index parent wins).
inline std::optional<Path> shortest_path_within(const Graph& g, Vertex s, Vertex t,
                                                const std::vector<char>& allowed) {
    if (!allowed[s] || !allowed[t]) return std::nullopt;
    if (s == t) return Path{{s}};
    std::vector<Vertex> parent(g.size(), -1);
    parent[s] = s;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        for (Vertex w : g.neighbors(u)) {
            if (!allowed[w] || parent[w] != -1) continue;
            parent[w] = u;
            if (w == t) {
                Path p;
                for (Vertex x = t; x != s; x = parent[x]) p.vertices.push_back(x);
                p.vertices.push_back(s);
                std::reverse(p.vertices.begin(), p.vertices.end());
                return p;
            }
            queue.push_back(w);
        }
    }
    return std::nullopt;
}

/// Mask of vertices not in N[x] for any x in `blockers`.
inline std::vector<char> missed_mask(const Graph& g, std::span<const Vertex> blockers) {
    std::vector<char> ok(g.size(), 1);
    for (Vertex x : blockers) {
        ok[x] = 0;
        for (Vertex y : g.neighbors(x)) ok[y] = 0;
    }
    return ok;
}

/// Shortest s-t path missed by every blocker, treating a blocked endpoint as
/// "no path". Hot-loop variant of path_missing.
inline std::optional<Path> try_path_missing(const Graph& g, Vertex s, Vertex t,
                                            std::span<const Vertex> blockers) {
    return shortest_path_within(g, s, t, missed_mask(g, blockers));
}

/// Shortest s-t path all of whose vertices lie outside N[x] for every x in
/// `blockers`. Throws BlockedEndpoint when s or t is itself in such an N[x].
inline std::optional<Path> path_missing(const Graph& g, Vertex s, Vertex t,
                                        std::span<const Vertex> blockers) {
    for (Vertex v : {s, t})
        if (v < 0 || v >= g.size()) throw Error(Errc::UnknownVertex, "index " + std::to_string(v));
    auto ok = missed_mask(g, blockers);
    for (Vertex v : {s, t})
        if (!ok[v]) throw Error(Errc::BlockedEndpoint, g.label(v));
    return shortest_path_within(g, s, t, ok);
}

/// True iff `p` is a path of g (consecutive vertices adjacent, no repeats).
inline bool is_path(const Graph& g, const Path& p) {
    if (p.vertices.empty()) return false;
    std::vector<char> seen(g.size(), 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
        Vertex v = p.vertices[i];
        if (v < 0 || v >= g.size() || seen[v]) return false;
        seen[v] = 1;
        if (i > 0 && !g.adjacent(p.vertices[i - 1], v)) return false;
    }
    return true;
}

/// True iff no vertex of p lies in N[x].
inline bool misses(const Graph& g, Vertex x, const Path& p) {
    return std::none_of(p.vertices.begin(), p.vertices.end(),
                        [&](Vertex v) { return v == x || g.adjacent(x, v); });
}

/// Connected-component id per vertex of the subgraph on `allowed` (-1 outside).
inline std::vector<int> component_ids(const Graph& g, const std::vector<char>& allowed) {
    std::vector<int> comp(g.size(), -1);
    int next = 0;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < g.size(); ++s) {
        if (!allowed[s] || comp[s] != -1) continue;
        comp[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(u))
                if (allowed[w] && comp[w] == -1) {
                    comp[w] = next;
                    stack.push_back(w);
                }
        }
        ++next;
    }
    return comp;
}

/// True iff every pair of vertices in `vs` is non-adjacent.
inline bool is_independent(const Graph& g, std::span<const Vertex> vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (vs[i] == vs[j] || g.adjacent(vs[i], vs[j])) return false;
    return true;
}

} // namespace cag
