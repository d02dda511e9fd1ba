#pragma once

// Forbidden-subgraph families. Each family is a small graph whose vertex
// labels are role names; the roles a, b, c (and d for the blocking-quadruple
// families) are the distinguished vertices.

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cag/graph.hpp"

namespace cag {

/// Families whose a, b, c, d carry a blocking quadruple.
inline constexpr std::array<std::string_view, 7> kBqFamilies{
    "Fig1-a", "Fig1-b", "Fig1-c", "Fig1-d", "Fig1-e", "Fig1-f", "Fig1-g"};

/// Chordal minimal non-interval families; a, b, c form an asteroidal triple.
inline constexpr std::array<std::string_view, 5> kIntervalFamilies{
    "Fig3-a", "Fig3-b", "Fig3-c", "Fig3-d", "Fig3-e"};

inline bool is_known_family(std::string_view f) {
    return std::find(kBqFamilies.begin(), kBqFamilies.end(), f) != kBqFamilies.end() ||
           std::find(kIntervalFamilies.begin(), kIntervalFamilies.end(), f) != kIntervalFamilies.end();
}

/// Number of path parameters a family takes.
inline std::size_t family_param_count(std::string_view f) {
    if (f == "Fig1-c" || f == "Fig3-c" || f == "Fig3-d") return 1;
    if (f == "Fig1-d") return 2;
    return 0;
}

namespace detail {

class TemplateBuilder {
public:
    Vertex add(std::string role) {
        labels_.push_back(std::move(role));
        return static_cast<Vertex>(labels_.size() - 1);
    }
    void join(Vertex u, Vertex v) { edges_.emplace_back(u, v); }
    Graph build() { return Graph(std::move(labels_), edges_); }

private:
    std::vector<std::string> labels_;
    std::vector<Edge> edges_;
};

inline void bad_params(std::string_view f, const std::string& why) {
    throw Error(Errc::UnknownFamily, std::string(f) + ": " + why);
}

// Triangle x1 x2 x3 with pendants b on x1, c on x2, a on x3.
inline Graph net(bool with_d) {
    TemplateBuilder t;
    Vertex a = t.add("a"), b = t.add("b"), c = t.add("c");
    if (with_d) t.add("d");
    Vertex x1 = t.add("x1"), x2 = t.add("x2"), x3 = t.add("x3");
    t.join(x1, x2), t.join(x1, x3), t.join(x2, x3);
    t.join(x1, b), t.join(x2, c), t.join(x3, a);
    return t.build();
}

// Path b p1 p2 p3 c, apex x on all five, a pendant on p2.
inline Graph umbrella(bool with_d) {
    TemplateBuilder t;
    Vertex a = t.add("a"), b = t.add("b"), c = t.add("c");
    if (with_d) t.add("d");
    Vertex x = t.add("x");
    Vertex p1 = t.add("p1"), p2 = t.add("p2"), p3 = t.add("p3");
    t.join(b, p1), t.join(p1, p2), t.join(p2, p3), t.join(p3, c);
    for (Vertex y : {b, p1, p2, p3, c}) t.join(x, y);
    t.join(a, p2);
    return t.build();
}

// Hubs h1 h2 adjacent to each other, to a, and to the whole fan p1..pk;
// b hangs on h1 and p1, c on h2 and pk.
inline Graph fan(int k, bool with_d) {
    TemplateBuilder t;
    Vertex a = t.add("a"), b = t.add("b"), c = t.add("c");
    if (with_d) t.add("d");
    Vertex h1 = t.add("h1"), h2 = t.add("h2");
    std::vector<Vertex> p;
    for (int i = 1; i <= k; ++i) p.push_back(t.add("p" + std::to_string(i)));
    t.join(a, h1), t.join(a, h2), t.join(h1, h2);
    t.join(b, h1), t.join(b, p.front());
    t.join(c, h2), t.join(c, p.back());
    for (int i = 0; i < k; ++i) {
        t.join(p[i], h1), t.join(p[i], h2);
        if (i + 1 < k) t.join(p[i], p[i + 1]);
    }
    return t.build();
}

// Centre x on a and on the whole path p0..pL; b on p0, c on pL. When
// d_at >= 0 the path vertex p_{d_at} carries the role name d.
inline Graph long_fan(int L, int d_at) {
    TemplateBuilder t;
    Vertex a = t.add("a"), b = t.add("b"), c = t.add("c");
    Vertex x = t.add("x");
    std::vector<Vertex> p;
    for (int i = 0; i <= L; ++i) p.push_back(t.add(i == d_at ? "d" : "p" + std::to_string(i)));
    t.join(x, a);
    for (int i = 0; i <= L; ++i) {
        t.join(x, p[i]);
        if (i < L) t.join(p[i], p[i + 1]);
    }
    t.join(b, p.front()), t.join(c, p.back());
    return t.build();
}

// Centre with three legs of length two ending at a, b, c.
inline Graph long_claw(std::string centre) {
    TemplateBuilder t;
    Vertex a = t.add("a"), b = t.add("b"), c = t.add("c");
    Vertex x1 = t.add("x1"), x2 = t.add("x2");
    Vertex z = t.add(std::move(centre));
    Vertex x4 = t.add("x4");
    t.join(z, x1), t.join(z, x2), t.join(z, x4);
    t.join(x1, b), t.join(x2, c), t.join(x4, a);
    return t.build();
}

} // namespace detail

/// Template graph of `family` instantiated at `params`.
inline Graph family_template(std::string_view family, std::span<const int> params) {
    using namespace detail;
    if (!is_known_family(family)) throw Error(Errc::UnknownFamily, std::string(family));
    if (params.size() != family_param_count(family))
        bad_params(family, "expected " + std::to_string(family_param_count(family)) + " path parameters");

    if (family == "Fig1-a" || family == "Fig3-a") return net(family == "Fig1-a");
    if (family == "Fig1-b" || family == "Fig3-b") return umbrella(family == "Fig1-b");
    if (family == "Fig1-c" || family == "Fig3-c") {
        if (params[0] < 1) bad_params(family, "fan length must be at least 1");
        return fan(params[0], family == "Fig1-c");
    }
    if (family == "Fig3-d") {
        if (params[0] < 2) bad_params(family, "path must have at least 2 edges");
        return long_fan(params[0], -1);
    }
    if (family == "Fig1-d") {
        if (params[0] < 2) bad_params(family, "path must have at least 2 edges");
        if (params[1] < 1 || params[1] >= params[0]) bad_params(family, "d must be an inner path vertex");
        return long_fan(params[0], params[1]);
    }
    if (family == "Fig3-e") return long_claw("x3");
    if (family == "Fig1-e") return long_claw("d");

    TemplateBuilder t;
    Vertex a = t.add("a"), b = t.add("b"), c = t.add("c"), d = t.add("d");
    Vertex x1 = t.add("x1"), x2 = t.add("x2");
    if (family == "Fig1-f") {
        Vertex x4 = t.add("x4");
        t.join(x1, x2), t.join(x1, d), t.join(x2, d), t.join(d, x4);
        t.join(x1, b), t.join(x2, c), t.join(x4, a);
    } else {  // Fig1-g
        Vertex x3 = t.add("x3");
        t.join(x1, x2), t.join(x1, x3), t.join(x2, x3);
        t.join(d, x1), t.join(d, x2), t.join(d, x3);
        t.join(x3, a), t.join(x1, b), t.join(x2, c);
    }
    return t.build();
}

/// Parameter vectors instantiating `family` on exactly `size` vertices.
inline std::vector<std::vector<int>> family_params_for_size(std::string_view family, int size) {
    std::vector<std::vector<int>> out;
    if (family == "Fig1-c" && size - 6 >= 1) out.push_back({size - 6});
    else if (family == "Fig3-c" && size - 5 >= 1) out.push_back({size - 5});
    else if (family == "Fig1-d" && size - 5 >= 2) out.push_back({size - 5, 1});
    else if (family == "Fig3-d" && size - 5 >= 2) out.push_back({size - 5});
    else if (family_param_count(family) == 0 && family_template(family, {}).size() == size) out.push_back({});
    return out;
}

/// Role name -> host vertex.
using RoleMap = std::map<std::string, Vertex>;

/// Bijection from template vertices onto `verts` (host vertices) preserving
/// adjacency and non-adjacency, honouring any pre-assigned roles in `fixed`.
inline std::optional<RoleMap> find_isomorphism(const Graph& g, std::span<const Vertex> verts,
                                               const Graph& tmpl, const RoleMap& fixed = {}) {
    const int s = tmpl.size();
    if (static_cast<int>(verts.size()) != s) return std::nullopt;
    std::vector<Vertex> host(verts.begin(), verts.end());
    std::sort(host.begin(), host.end());
    if (std::adjacent_find(host.begin(), host.end()) != host.end()) return std::nullopt;

    std::vector<int> hdeg(s, 0);
    int hedges = 0;
    for (int i = 0; i < s; ++i)
        for (int j = i + 1; j < s; ++j)
            if (g.adjacent(host[i], host[j])) ++hdeg[i], ++hdeg[j], ++hedges;
    if (hedges != tmpl.edge_count()) return std::nullopt;
    {
        std::vector<int> a = hdeg, b;
        for (Vertex t = 0; t < s; ++t) b.push_back(tmpl.degree(t));
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return std::nullopt;
    }

    // Template vertex -> host slot; -1 when unassigned.
    std::vector<int> map(s, -1);
    std::vector<char> used(s, 0);
    for (const auto& [role, hv] : fixed) {
        auto t = tmpl.find(role);
        if (!t) continue;
        auto it = std::lower_bound(host.begin(), host.end(), hv);
        if (it == host.end() || *it != hv) return std::nullopt;
        int slot = static_cast<int>(it - host.begin());
        if (used[slot] || hdeg[slot] != tmpl.degree(*t)) return std::nullopt;
        map[*t] = slot;
        used[slot] = 1;
    }
    for (Vertex t = 0; t < s; ++t)
        for (Vertex u = t + 1; u < s; ++u)
            if (map[t] >= 0 && map[u] >= 0 && tmpl.adjacent(t, u) != g.adjacent(host[map[t]], host[map[u]]))
                return std::nullopt;

    // Assign remaining template vertices in BFS order so each new vertex is
    // usually constrained by an already-placed neighbour.
    std::vector<Vertex> order;
    std::vector<char> queued(s, 0);
    for (Vertex t = 0; t < s; ++t)
        if (map[t] >= 0) queued[t] = 1;
    for (Vertex root = 0; root < s; ++root) {
        if (queued[root]) continue;
        std::size_t head = order.size();
        order.push_back(root);
        queued[root] = 1;
        for (; head < order.size(); ++head)
            for (Vertex w : tmpl.neighbors(order[head]))
                if (!queued[w]) queued[w] = 1, order.push_back(w);
    }

    auto fits = [&](Vertex t, int slot) {
        if (used[slot] || hdeg[slot] != tmpl.degree(t)) return false;
        for (Vertex u = 0; u < s; ++u)
            if (map[u] >= 0 && tmpl.adjacent(t, u) != g.adjacent(host[slot], host[map[u]])) return false;
        return true;
    };
    auto search = [&](auto&& self, std::size_t depth) -> bool {
        if (depth == order.size()) return true;
        Vertex t = order[depth];
        for (int slot = 0; slot < s; ++slot) {
            if (!fits(t, slot)) continue;
            map[t] = slot;
            used[slot] = 1;
            if (self(self, depth + 1)) return true;
            map[t] = -1;
            used[slot] = 0;
        }
        return false;
    };
    if (!search(search, 0)) return std::nullopt;

    RoleMap out;
    for (Vertex t = 0; t < s; ++t) out.emplace(tmpl.label(t), host[map[t]]);
    return out;
}

} // namespace cag
