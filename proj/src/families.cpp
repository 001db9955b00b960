#include "mars/families.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <limits>
#include <queue>
#include <random>
#include <vector>

namespace mars {

namespace {

constexpr std::array<std::pair<FamilyKind, std::string_view>, 10> kNames{{
    {FamilyKind::Path, "path"},
    {FamilyKind::Cycle, "cycle"},
    {FamilyKind::CompleteBipartite, "bipartite"},
    {FamilyKind::Wheel, "wheel"},
    {FamilyKind::CompleteBinaryTree, "btree"},
    {FamilyKind::HypercubeQ3, "q3"},
    {FamilyKind::GStar, "gstar"},
    {FamilyKind::Sparse, "sparse"},
    {FamilyKind::Dense, "dense"},
    {FamilyKind::RandomTree, "tree"},
}};

constexpr int kMaxAttempts = 1000;

// Uniform integer in [0, bound) by rejection; independent of the standard
// library's distribution implementation so seeds reproduce across platforms.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    for (;;) {
        std::uint64_t x = rng();
        if (x < limit) return x % bound;
    }
}

std::uint64_t attempt_seed(std::uint64_t seed, int attempt) {
    return seed + std::uint64_t(attempt) * 0x9E3779B97F4A7C15ull;
}

// Calls `make` with derived seeds until it yields a connected graph.
Graph retry_connected(const FamilySpec& spec, const std::function<std::vector<Edge>(std::mt19937_64&)>& make) {
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        std::mt19937_64 rng(attempt_seed(spec.seed, attempt));
        auto edges = make(rng);
        try {
            return Graph::build(spec.order(), edges);
        } catch (const DisconnectedError&) {
        }
    }
    throw InvalidParametersError(spec.describe() + ": no connected instance after " + std::to_string(kMaxAttempts) +
                                 " attempts");
}

std::vector<Edge> sparse_edges(std::size_t n, std::size_t delta, std::mt19937_64& rng) {
    std::vector<Edge> edges;
    std::vector<Vertex> others(n - 1);
    for (Vertex u = 0; u < n; ++u) {
        std::size_t budget = 1 + uniform_below(rng, delta);
        budget = std::min(budget, n - 1);
        for (Vertex v = 0, i = 0; v < n; ++v)
            if (v != u) others[i++] = v;
        // Partial Fisher-Yates: the first `budget` entries become the sample.
        for (std::size_t i = 0; i < budget; ++i) {
            std::size_t j = i + uniform_below(rng, others.size() - i);
            std::swap(others[i], others[j]);
            edges.emplace_back(u, others[i]);
        }
    }
    return edges;
}

std::vector<Edge> dense_edges(std::size_t n, std::size_t delta, std::mt19937_64& rng) {
    std::vector<Edge> all;
    all.reserve(n * (n - 1) / 2);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) all.emplace_back(u, v);
    for (std::size_t i = 0; i < delta; ++i) {
        std::size_t j = i + uniform_below(rng, all.size() - i);
        std::swap(all[i], all[j]);
    }
    all.erase(all.begin(), all.begin() + std::ptrdiff_t(delta));
    return all;
}

std::vector<Edge> pruefer_tree(std::size_t n, std::mt19937_64& rng) {
    if (n == 2) return {{0, 1}};
    std::vector<Vertex> code(n - 2);
    for (auto& x : code) x = Vertex(uniform_below(rng, n));
    std::vector<std::size_t> degree(n, 1);
    for (Vertex x : code) ++degree[x];
    std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
    for (Vertex v = 0; v < n; ++v)
        if (degree[v] == 1) leaves.push(v);
    std::vector<Edge> edges;
    for (Vertex x : code) {
        Vertex leaf = leaves.top();
        leaves.pop();
        edges.emplace_back(leaf, x);
        if (--degree[x] == 1) leaves.push(x);
    }
    Vertex a = leaves.top();
    leaves.pop();
    edges.emplace_back(a, leaves.top());
    return edges;
}

}  // namespace

std::string_view family_name(FamilyKind kind) {
    for (auto [k, name] : kNames)
        if (k == kind) return name;
    return "?";
}

FamilyKind parse_family_name(std::string_view name) {
    for (auto [k, n] : kNames)
        if (n == name) return k;
    throw InvalidParametersError("unknown family '" + std::string(name) + "'");
}

void FamilySpec::validate() const {
    auto fail = [&](const std::string& why) { throw InvalidParametersError(std::string(family_name(kind)) + ": " + why); };
    switch (kind) {
        case FamilyKind::Path:
            if (n < 2) fail("needs n >= 2");
            break;
        case FamilyKind::Cycle:
            if (n < 3) fail("needs n >= 3");
            break;
        case FamilyKind::CompleteBipartite:
            if (r < 1 || t < 1 || r + t < 2) fail("needs r, t >= 1");
            break;
        case FamilyKind::Wheel:
            if (n < 4) fail("needs n >= 4");
            break;
        case FamilyKind::CompleteBinaryTree:
            if (depth < 1) fail("needs depth >= 1");
            if (depth > 14) fail("depth too large");
            break;
        case FamilyKind::HypercubeQ3:
        case FamilyKind::GStar:
            break;
        case FamilyKind::Sparse:
            if (n < 2) fail("needs n >= 2");
            if (delta < 1) fail("needs delta >= 1");
            break;
        case FamilyKind::Dense:
            if (n < 2) fail("needs n >= 2");
            if (delta > n * (n - 1) / 2 - (n - 1)) fail("removing delta edges cannot leave a connected graph");
            break;
        case FamilyKind::RandomTree:
            if (n < 2) fail("needs n >= 2");
            break;
    }
}

std::size_t FamilySpec::order() const {
    switch (kind) {
        case FamilyKind::CompleteBipartite: return r + t;
        case FamilyKind::CompleteBinaryTree: return (std::size_t{1} << (depth + 1)) - 1;
        case FamilyKind::HypercubeQ3: return 8;
        case FamilyKind::GStar: return 10;
        default: return n;
    }
}

std::string FamilySpec::describe() const {
    std::string out(family_name(kind));
    switch (kind) {
        case FamilyKind::CompleteBipartite:
            out += " r=" + std::to_string(r) + " t=" + std::to_string(t);
            break;
        case FamilyKind::CompleteBinaryTree:
            out += " d=" + std::to_string(depth);
            break;
        case FamilyKind::HypercubeQ3:
        case FamilyKind::GStar:
            break;
        case FamilyKind::Sparse:
        case FamilyKind::Dense:
            out += " n=" + std::to_string(n) + " delta=" + std::to_string(delta) + " seed=" + std::to_string(seed);
            break;
        case FamilyKind::RandomTree:
            out += " n=" + std::to_string(n) + " seed=" + std::to_string(seed);
            break;
        default:
            out += " n=" + std::to_string(n);
    }
    return out;
}

Graph generate(const FamilySpec& spec) {
    spec.validate();
    const std::size_t n = spec.order();
    std::vector<Edge> edges;
    switch (spec.kind) {
        case FamilyKind::Path:
            for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
            break;
        case FamilyKind::Cycle:
            for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, Vertex((i + 1) % n));
            break;
        case FamilyKind::CompleteBipartite:
            for (Vertex u = 0; u < spec.r; ++u)
                for (Vertex v = 0; v < spec.t; ++v) edges.emplace_back(u, Vertex(spec.r + v));
            break;
        case FamilyKind::Wheel:
            for (Vertex i = 1; i < n; ++i) {
                edges.emplace_back(0, i);
                edges.emplace_back(i, i + 1 < n ? i + 1 : 1);
            }
            break;
        case FamilyKind::CompleteBinaryTree:
            for (Vertex i = 1; i < n; ++i) edges.emplace_back((i - 1) / 2, i);
            break;
        case FamilyKind::HypercubeQ3:
            for (Vertex u = 0; u < 8; ++u)
                for (Vertex bit = 1; bit < 8; bit <<= 1)
                    if ((u & bit) == 0) edges.emplace_back(u, u | bit);
            break;
        case FamilyKind::GStar:
            for (Vertex i = 1; i <= 4; ++i) {
                edges.emplace_back(0, i);
                edges.emplace_back(5, i + 5);
                edges.emplace_back(i, i + 5);
            }
            break;
        case FamilyKind::Sparse:
            return retry_connected(spec, [&](std::mt19937_64& rng) { return sparse_edges(n, spec.delta, rng); });
        case FamilyKind::Dense:
            return retry_connected(spec, [&](std::mt19937_64& rng) { return dense_edges(n, spec.delta, rng); });
        case FamilyKind::RandomTree:
            return retry_connected(spec, [&](std::mt19937_64& rng) { return pruefer_tree(n, rng); });
    }
    return Graph::build(n, edges);
}

}  // namespace mars
