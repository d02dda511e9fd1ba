#pragma once

// Circular-arc models over k discrete circle points, and exact checking of a
// model against its target graph.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cag/graph.hpp"

namespace cag {

/// Arc of u runs clockwise over points l+1, ..., r-1 (mod k). Vertices in
/// `full` are represented by the whole circle.
struct ArcRep {
    int k = 0;
    std::map<Vertex, std::pair<int, int>> arcs;
    std::vector<Vertex> full;
    bool operator==(const ArcRep&) const = default;
};

inline int mod(int a, int k) { return ((a % k) + k) % k; }

/// Number of circle points strictly inside (l, r) going clockwise.
inline int arc_length(int l, int r, int k) { return mod(r - l - 1, k); }

/// Points covered by the arc (l, r), in clockwise order.
inline std::vector<int> arc_points(int l, int r, int k) {
    std::vector<int> out;
    for (int i = 1, len = arc_length(l, r, k); i <= len; ++i) out.push_back(mod(l + i, k));
    return out;
}

struct VerifyReport {
    bool equal = false;
    std::vector<Edge> missing;  // edges of g whose arcs are disjoint
    std::vector<Edge> extra;    // intersecting arcs without an edge in g
};

/// Compares the intersection graph of `rep` with g. Two arcs meet iff they
/// share a circle point; full-circle vertices meet everything.
inline VerifyReport verify_representation(const Graph& g, const ArcRep& rep) {
    const int n = g.size();
    std::vector<char> seen(n, 0);
    for (const auto& [v, lr] : rep.arcs) {
        if (v < 0 || v >= n) throw Error(Errc::MalformedRep, "vertex index " + std::to_string(v));
        if (rep.k <= 0 || lr.first < 0 || lr.second < 0 || lr.first >= rep.k || lr.second >= rep.k)
            throw Error(Errc::MalformedRep, "arc of " + g.label(v) + " has an endpoint outside 0.." +
                                                std::to_string(rep.k - 1));
        seen[v] = 1;
    }
    for (Vertex v : rep.full) {
        if (v < 0 || v >= n) throw Error(Errc::MalformedRep, "vertex index " + std::to_string(v));
        if (seen[v]) throw Error(Errc::MalformedRep, g.label(v) + " has both an arc and the full circle");
        seen[v] = 1;
    }
    for (Vertex v = 0; v < n; ++v)
        if (!seen[v]) throw Error(Errc::MalformedRep, g.label(v) + " has no arc");

    std::vector<std::uint8_t> meet(static_cast<std::size_t>(n) * n, 0);
    std::vector<std::vector<Vertex>> at_point(std::max(rep.k, 0));
    for (const auto& [v, lr] : rep.arcs)
        for (int p : arc_points(lr.first, lr.second, rep.k)) at_point[p].push_back(v);
    for (const auto& vs : at_point)
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j)
                meet[vs[i] * n + vs[j]] = meet[vs[j] * n + vs[i]] = 1;
    for (Vertex f : rep.full)
        for (Vertex v = 0; v < n; ++v)
            if (v != f) meet[f * n + v] = meet[v * n + f] = 1;

    VerifyReport out;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            bool e = g.adjacent(u, v), m = meet[u * n + v] != 0;
            if (e && !m) out.missing.emplace_back(u, v);
            if (!e && m) out.extra.emplace_back(u, v);
        }
    out.equal = out.missing.empty() && out.extra.empty();
    return out;
}

} // namespace cag
