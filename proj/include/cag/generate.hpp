#pragma once

// Random chordal graphs as intersection graphs of random subtrees of a random
// host tree.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cag/chordal.hpp"
#include "cag/graph.hpp"

namespace cag {

struct GenParams {
    int n = 1;
    int tree_size = 0;          // 0: same as n
    double subtree_mean = 0.0;  // 0: a third of the tree
    std::uint64_t seed = 0;
    std::optional<int> alpha_max;
    int reject_limit = 1000;
};

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Seed of trial `trial` under a run seed; independent of execution order.
inline std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
    return splitmix64(seed ^ splitmix64(trial + 0x632BE59BD9B4E019ULL));
}

namespace detail {

// Uniform labelled tree on m nodes, decoded from a random Pruefer sequence.
inline std::vector<std::vector<int>> random_tree(int m, std::mt19937_64& rng) {
    std::vector<std::vector<int>> tree(m);
    auto join = [&](int x, int y) {
        tree[x].push_back(y);
        tree[y].push_back(x);
    };
    if (m == 2) join(0, 1);
    if (m <= 2) return tree;
    std::vector<int> code(m - 2), degree(m, 1);
    for (int& c : code) {
        c = std::uniform_int_distribution<int>(0, m - 1)(rng);
        ++degree[c];
    }
    std::set<int> leaves;
    for (int x = 0; x < m; ++x)
        if (degree[x] == 1) leaves.insert(x);
    for (int c : code) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        join(leaf, c);
        if (--degree[c] == 1) leaves.insert(c);
    }
    join(*leaves.begin(), *std::next(leaves.begin()));
    return tree;
}

inline Graph sample_subtree_graph(const GenParams& p, std::mt19937_64& rng) {
    const int n = p.n;
    const int m = p.tree_size > 0 ? p.tree_size : n;
    const double mean = p.subtree_mean > 0 ? p.subtree_mean : std::max(1.0, m / 3.0);

    std::vector<std::vector<int>> tree = random_tree(m, rng);

    const int max_size = std::clamp(static_cast<int>(2 * mean - 1 + 0.5), 1, m);
    std::vector<std::vector<char>> member(n, std::vector<char>(m, 0));
    for (int v = 0; v < n; ++v) {
        int size = std::uniform_int_distribution<int>(1, max_size)(rng);
        std::vector<int> nodes{std::uniform_int_distribution<int>(0, m - 1)(rng)};
        member[v][nodes[0]] = 1;
        std::vector<int> frontier;
        while (static_cast<int>(nodes.size()) < size) {
            frontier.clear();
            for (int x : nodes)
                for (int y : tree[x])
                    if (!member[v][y]) frontier.push_back(y);
            std::sort(frontier.begin(), frontier.end());
            frontier.erase(std::unique(frontier.begin(), frontier.end()), frontier.end());
            if (frontier.empty()) break;
            int y = frontier[std::uniform_int_distribution<std::size_t>(0, frontier.size() - 1)(rng)];
            member[v][y] = 1;
            nodes.push_back(y);
        }
    }

    std::vector<std::string> labels;
    for (int v = 0; v < n; ++v) labels.push_back("v" + std::to_string(v));
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            for (int x = 0; x < m; ++x)
                if (member[u][x] && member[v][x]) {
                    edges.emplace_back(u, v);
                    break;
                }
    return Graph(std::move(labels), edges);
}

} // namespace detail

/// Random chordal graph on p.n vertices labelled v0..v{n-1}. With alpha_max
/// set, resamples until the independence number is at most alpha_max.
inline Graph random_chordal(const GenParams& p) {
    if (p.n < 1 || p.tree_size < 0 || p.reject_limit < 1)
        throw Error(Errc::ParseError, "generator counts must be positive");
    std::mt19937_64 rng(splitmix64(p.seed));
    for (int attempt = 0; attempt < p.reject_limit; ++attempt) {
        Graph g = detail::sample_subtree_graph(p, rng);
        auto peo = is_chordal(g);
        if (!peo) throw Error(Errc::ProofViolation, "subtree intersection graph is not chordal");
        if (!p.alpha_max || static_cast<int>(alpha_and_cover(g, *peo).independent.size()) <= *p.alpha_max) return g;
    }
    throw Error(Errc::RejectLimitExceeded, "no sample with alpha <= " + std::to_string(*p.alpha_max) + " after " +
                                               std::to_string(p.reject_limit) + " attempts");
}

/// Random chordal graph grown by simplicial additions: vertex v joins a random
/// clique through a random earlier vertex, each further member kept with
/// probability `extend`; with probability `isolate` v starts a new component.
inline Graph random_chordal_by_extension(int n, double extend, double isolate, std::uint64_t seed) {
    if (n < 1) throw Error(Errc::ParseError, "generator counts must be positive");
    std::mt19937_64 rng(splitmix64(seed));
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) {
        if (coin(rng) < isolate) continue;
        int u = std::uniform_int_distribution<int>(0, v - 1)(rng);
        std::vector<int> clique{u}, cand;
        for (int w = 0; w < v; ++w)
            if (adj[u][w]) cand.push_back(w);
        std::shuffle(cand.begin(), cand.end(), rng);
        for (int w : cand)
            if (coin(rng) < extend && std::all_of(clique.begin(), clique.end(), [&](int x) { return adj[x][w] != 0; }))
                clique.push_back(w);
        for (int x : clique) {
            adj[v][x] = adj[x][v] = 1;
            edges.emplace_back(x, v);
        }
    }
    std::vector<std::string> labels;
    for (int v = 0; v < n; ++v) labels.push_back("v" + std::to_string(v));
    return Graph(std::move(labels), edges);
}

} // namespace cag
