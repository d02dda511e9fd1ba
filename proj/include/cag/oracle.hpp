#pragma once

// Exhaustive oracles: circular-arc recognition by endpoint-order search,
// independence number by branch and bound, and forbidden-subgraph search.

#include <bit>
#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cag/graph.hpp"
#include "cag/obstructions.hpp"
#include "cag/templates.hpp"

namespace cag {

/// Circular sequence of 2n endpoints read clockwise; each arc runs from its
/// start symbol to its end symbol.
struct OracleModel {
    struct Symbol {
        bool start;
        Vertex v;
        bool operator==(const Symbol&) const = default;
    };
    std::vector<Symbol> order;
    bool operator==(const OracleModel&) const = default;
};

/// Text form of the model: "s:label" / "e:label".
inline std::vector<std::string> model_symbols(const Graph& g, const OracleModel& m) {
    std::vector<std::string> out;
    for (auto s : m.order) out.push_back((s.start ? "s:" : "e:") + g.label(s.v));
    return out;
}

/// Intersection graph of an endpoint model on the vertices of `g`.
inline Graph model_intersection_graph(const Graph& g, const OracleModel& m) {
    const int n = g.size();
    const int len = static_cast<int>(m.order.size());
    std::vector<int> s(n, -1), e(n, -1);
    for (int i = 0; i < len; ++i) (m.order[i].start ? s : e)[m.order[i].v] = i;
    auto covers = [&](Vertex v, int p) {
        return s[v] <= e[v] ? (p >= s[v] && p <= e[v]) : (p >= s[v] || p <= e[v]);
    };
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            // Arcs with distinct endpoints meet iff one contains an endpoint of the other.
            if (covers(u, s[v]) || covers(v, s[u])) edges.emplace_back(u, v);
        }
    return Graph(g.labels(), edges);
}

enum class OracleStatus { Yes, No, Timeout };

inline const char* status_name(OracleStatus s) {
    switch (s) {
    case OracleStatus::Yes: return "yes";
    case OracleStatus::No: return "no";
    case OracleStatus::Timeout: return "timeout";
    }
    return "?";
}

struct OracleResult {
    OracleStatus status = OracleStatus::No;
    std::optional<OracleModel> model;
    long long nodes = 0;
};

namespace detail {

using Mask = std::uint64_t;

class ArcSearch {
public:
    ArcSearch(const Graph& g, std::chrono::steady_clock::time_point deadline)
        : g_(g), n_(g.size()), deadline_(deadline), nbr_(n_, 0), state_(n_, Untouched), met_(n_, 0) {
        for (Vertex v = 0; v < n_; ++v)
            for (Vertex w : g.neighbors(v)) nbr_[v] |= bit(w);
    }

    OracleResult run() {
        OracleResult r;
        if (n_ == 0) {
            r.status = OracleStatus::Yes;
            r.model = OracleModel{};
            return r;
        }
        place_start(0);
        bool found = search(1, true, 0);
        r.nodes = nodes_;
        if (timed_out_) r.status = OracleStatus::Timeout;
        else if (found) {
            r.status = OracleStatus::Yes;
            r.model = OracleModel{order_};
        }
        return r;
    }

private:
    enum State : std::uint8_t { Untouched, Open, WrapHead, Done };

    static Mask bit(Vertex v) { return Mask{1} << v; }

    void meet(Vertex u, Mask others) {
        met_[u] |= others;
        for (Mask m = others; m; m &= m - 1) met_[std::countr_zero(m)] |= bit(u);
    }

    struct Saved {
        std::vector<Mask> met;
        Mask active, touched, forced;
        std::vector<State> state;
    };
    Saved save() const { return {met_, active_, touched_, forced_, state_}; }
    void restore(Saved& s) {
        met_ = std::move(s.met);
        active_ = s.active, touched_ = s.touched, forced_ = s.forced;
        state_ = std::move(s.state);
    }

    // Start of a fresh arc (u untouched) or of the tail of a wrapping arc.
    bool place_start(Vertex u) {
        Mask live = active_ | forced_;
        if ((live & ~nbr_[u]) != 0) return false;
        meet(u, live);
        if (state_[u] == Untouched) {
            state_[u] = Open;
            touched_ |= bit(u);
        } else {
            state_[u] = Done;
        }
        active_ |= bit(u);
        order_.push_back({true, u});
        return true;
    }

    // End of an open arc, or the end of a wrapping arc placed before its start.
    bool place_end(Vertex u) {
        if (state_[u] == Open) {
            Mask unmet = nbr_[u] & ~met_[u];
            if ((unmet & touched_) != 0) return false;
            for (Mask m = unmet & ~forced_; m; m &= m - 1) {
                Vertex w = std::countr_zero(m);
                if ((touched_ & ~nbr_[w]) != 0) return false;
            }
            forced_ |= unmet;
            state_[u] = Done;
            active_ &= ~bit(u);
        } else {
            if ((touched_ & ~nbr_[u]) != 0) return false;
            if (((forced_ & ~bit(u)) & ~nbr_[u]) != 0) return false;
            meet(u, touched_);
            forced_ &= ~bit(u);
            touched_ |= bit(u);
            state_[u] = WrapHead;
        }
        order_.push_back({false, u});
        return true;
    }

    bool search(int pos, bool prev_start, Vertex prev) {
        if ((nodes_++ & 0xFFF) == 0 && std::chrono::steady_clock::now() > deadline_) timed_out_ = true;
        if (timed_out_) return false;
        if (pos == 2 * n_) return true;
        const bool last = pos == 2 * n_ - 1;
        for (int kind = 0; kind < 2; ++kind) {
            bool start = kind == 0;
            if (start && last) continue;
            for (Vertex u = 0; u < n_; ++u) {
                if (start == prev_start && u <= prev) continue;
                State st = state_[u];
                bool allowed = start ? ((st == Untouched && !(forced_ & bit(u))) || st == WrapHead)
                                     : (st == Open || st == Untouched);
                if (!allowed) continue;
                Saved snap = save();
                bool ok = start ? place_start(u) : place_end(u);
                if (ok && search(pos + 1, start, u)) return true;
                if (ok) order_.pop_back();
                restore(snap);
                if (timed_out_) return false;
            }
        }
        return false;
    }

    const Graph& g_;
    int n_;
    std::chrono::steady_clock::time_point deadline_;
    std::vector<Mask> nbr_;
    std::vector<State> state_;
    std::vector<Mask> met_;
    Mask active_ = 0, touched_ = 0, forced_ = 0;
    std::vector<OracleModel::Symbol> order_;
    long long nodes_ = 0;
    bool timed_out_ = false;
};

} // namespace detail

/// Decides whether g is a circular-arc graph by exhaustive search over
/// circular endpoint orders (start of vertex 0 fixed first; runs of equal
/// endpoint kinds in increasing vertex order). Intended for n <= 10.
inline OracleResult brute_force_circular_arc(const Graph& g, std::chrono::milliseconds budget = std::chrono::seconds(600)) {
    if (g.size() > 64) throw std::length_error("circular-arc oracle supports at most 64 vertices");
    detail::ArcSearch s(g, std::chrono::steady_clock::now() + budget);
    auto r = s.run();
    if (r.status == OracleStatus::Yes && !(model_intersection_graph(g, *r.model) == g))
        throw Error(Errc::ProofViolation, "oracle model does not reproduce the graph");
    return r;
}

/// Exact independence number by branch and bound (n <= 64).
inline int brute_force_alpha(const Graph& g) {
    using detail::Mask;
    const int n = g.size();
    if (n > 64) throw std::length_error("independence oracle supports at most 64 vertices");
    std::vector<Mask> closed(n, 0);
    for (Vertex v = 0; v < n; ++v) {
        closed[v] = Mask{1} << v;
        for (Vertex w : g.neighbors(v)) closed[v] |= Mask{1} << w;
    }
    int best = 0;
    auto rec = [&](auto&& self, Mask p, int size) -> void {
        if (size + std::popcount(p) <= best) return;
        if (p == 0) {
            best = size;
            return;
        }
        Vertex low = -1, high = -1;
        int low_d = 65, high_d = -1;
        for (Mask m = p; m; m &= m - 1) {
            Vertex v = std::countr_zero(m);
            int d = std::popcount(closed[v] & p) - 1;
            if (d < low_d) low_d = d, low = v;
            if (d > high_d) high_d = d, high = v;
        }
        if (low_d <= 1) {
            // A vertex of degree at most one lies in some maximum independent set.
            self(self, p & ~closed[low], size + 1);
            return;
        }
        self(self, p & ~closed[high], size + 1);
        self(self, p & ~(Mask{1} << high), size);
    };
    Mask all = n == 64 ? ~Mask{0} : ((Mask{1} << n) - 1);
    rec(rec, all, 0);
    return best;
}

/// First induced copy of a blocking-quadruple family, by increasing size.
inline std::optional<ObstructionCert> brute_force_obstruction_search(const Graph& g) {
    return find_family_embedding(g, kBqFamilies, 6);
}

} // namespace cag
