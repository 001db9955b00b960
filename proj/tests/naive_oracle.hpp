#pragma once

// Test-only reference implementation. Shares nothing with the library beyond
// the Graph adjacency lists: its own BFS, multisets as sorted distance lists,
// and plain bitmask enumeration of every non-empty proper subset.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <random>
#include <vector>

#include "mars/graph.hpp"

namespace naive {

using Matrix = std::vector<std::vector<int>>;

inline Matrix bfs_all(const mars::Graph& g) {
    const std::size_t n = g.order();
    Matrix d(n, std::vector<int>(n, -1));
    for (std::size_t s = 0; s < n; ++s) {
        std::queue<std::size_t> q;
        d[s][s] = 0;
        q.push(s);
        while (!q.empty()) {
            auto u = q.front();
            q.pop();
            for (auto v : g.neighbors(mars::Vertex(u)))
                if (d[s][v] < 0) {
                    d[s][v] = d[s][u] + 1;
                    q.push(v);
                }
        }
    }
    return d;
}

inline std::vector<int> members(std::uint64_t mask, std::size_t n) {
    std::vector<int> s;
    for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1) s.push_back(int(i));
    return s;
}

// Smallest class size under "same sorted list of distances to S".
inline std::size_t k_of(const Matrix& d, const std::vector<int>& s) {
    const std::size_t n = d.size();
    std::map<std::vector<int>, std::size_t> classes;
    for (std::size_t v = 0; v < n; ++v) {
        if (std::find(s.begin(), s.end(), int(v)) != s.end()) continue;
        std::vector<int> key;
        for (int x : s) key.push_back(d[v][x]);
        std::sort(key.begin(), key.end());
        ++classes[key];
    }
    std::size_t best = n;
    for (const auto& [_, c] : classes) best = std::min(best, c);
    return best;
}

// Same, but with ordered distance vectors (metric representation).
inline std::size_t vector_k_of(const Matrix& d, const std::vector<int>& s) {
    std::map<std::vector<int>, std::size_t> classes;
    for (std::size_t v = 0; v < d.size(); ++v) {
        if (std::find(s.begin(), s.end(), int(v)) != s.end()) continue;
        std::vector<int> key;
        for (int x : s) key.push_back(d[v][x]);
        ++classes[key];
    }
    std::size_t best = d.size();
    for (const auto& [_, c] : classes) best = std::min(best, c);
    return best;
}

struct Best {
    std::size_t size = 0;
    std::vector<int> witness;  // lexicographically first among smallest
};

// k -> smallest k-MARS, over all 2^n - 2 candidates.
inline std::map<std::size_t, Best> all_msad(const mars::Graph& g) {
    const Matrix d = bfs_all(g);
    const std::size_t n = g.order();
    std::map<std::size_t, Best> out;
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); ++mask) {
        auto s = members(mask, n);
        const std::size_t k = k_of(d, s);
        auto it = out.find(k);
        if (it == out.end() || s.size() < it->second.size ||
            (s.size() == it->second.size && s < it->second.witness))
            out[k] = {s.size(), s};
    }
    return out;
}

inline std::size_t kappa(const mars::Graph& g) { return all_msad(g).rbegin()->first; }

inline std::vector<mars::Vertex> to_set(const std::vector<int>& s) { return {s.begin(), s.end()}; }

// Random connected graph: a random spanning tree plus each other pair with probability p.
inline mars::Graph random_connected(std::size_t n, double p, std::mt19937_64& rng) {
    std::vector<mars::Edge> edges;
    std::vector<mars::Vertex> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = mars::Vertex(i);
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t i = 1; i < n; ++i) {
        std::uniform_int_distribution<std::size_t> pick(0, i - 1);
        edges.emplace_back(order[i], order[pick(rng)]);
    }
    std::bernoulli_distribution coin(p);
    for (mars::Vertex u = 0; u < n; ++u)
        for (mars::Vertex v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return mars::Graph::build(n, edges);
}

inline mars::Graph random_tree(std::size_t n, std::mt19937_64& rng) { return random_connected(n, 0.0, rng); }

}  // namespace naive
