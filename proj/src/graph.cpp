#include "mars/graph.hpp"

#include <algorithm>
#include <limits>

namespace mars {

namespace {

std::size_t count_components(const std::vector<std::vector<Vertex>>& adj) {
    std::vector<char> seen(adj.size(), 0);
    std::vector<Vertex> stack;
    std::size_t components = 0;
    for (Vertex s = 0; s < adj.size(); ++s) {
        if (seen[s]) continue;
        ++components;
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            for (Vertex w : adj[u]) {
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
    }
    return components;
}

}  // namespace

Graph Graph::build(std::size_t n, std::span<const Edge> edges, BuildNotes* notes) {
    if (n < 2) throw GraphError("a graph needs at least 2 vertices (got " + std::to_string(n) + ")");
    if (n > std::numeric_limits<Distance>::max()) throw GraphError("graph too large");

    std::vector<Edge> normalized;
    normalized.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u >= n) throw IndexOutOfRangeError(u, n);
        if (v >= n) throw IndexOutOfRangeError(v, n);
        if (u == v) throw SelfLoopError(u);
        normalized.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(normalized.begin(), normalized.end());
    auto last = std::unique(normalized.begin(), normalized.end());
    std::size_t duplicates = std::size_t(normalized.end() - last);
    normalized.erase(last, normalized.end());
    if (notes) notes->duplicate_edges = duplicates;

    Graph g;
    g.adjacency_.resize(n);
    for (auto [u, v] : normalized) {
        g.adjacency_[u].push_back(v);
        g.adjacency_[v].push_back(u);
    }
    for (auto& list : g.adjacency_) std::sort(list.begin(), list.end());
    g.edge_count_ = normalized.size();

    std::size_t components = count_components(g.adjacency_);
    if (components != 1) throw DisconnectedError(components);
    return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    const auto& list = adjacency_[u];
    return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < adjacency_.size(); ++u)
        for (Vertex v : adjacency_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

void Graph::set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && labels.size() != order())
        throw GraphError("label map size does not match vertex count");
    labels_ = std::move(labels);
}

DistanceMatrix::DistanceMatrix(const Graph& g) : n_(g.order()), d_(n_ * n_, 0), ecc_(n_, 0) {
    constexpr Distance unseen = std::numeric_limits<Distance>::max();
    std::vector<Vertex> queue(n_);
    for (Vertex s = 0; s < n_; ++s) {
        Distance* row = d_.data() + std::size_t(s) * n_;
        std::fill(row, row + n_, unseen);
        row[s] = 0;
        std::size_t head = 0, tail = 0;
        queue[tail++] = s;
        while (head < tail) {
            Vertex u = queue[head++];
            for (Vertex w : g.neighbors(u)) {
                if (row[w] == unseen) {
                    row[w] = Distance(row[u] + 1);
                    queue[tail++] = w;
                }
            }
        }
        ecc_[s] = *std::max_element(row, row + n_);
    }
    diameter_ = *std::max_element(ecc_.begin(), ecc_.end());
    radius_ = *std::min_element(ecc_.begin(), ecc_.end());
}

std::vector<std::size_t> DistanceMatrix::shell_sizes(Vertex x) const {
    std::vector<std::size_t> shells(std::size_t(ecc_[x]) + 1, 0);
    for (Distance d : row(x)) ++shells[d];
    return shells;
}

bool is_tree(const Graph& g) { return g.size() + 1 == g.order(); }

bool induces_connected_subgraph(const Graph& g, std::span<const Vertex> s) {
    if (s.empty()) return true;
    std::vector<char> in_set(g.order(), 0), seen(g.order(), 0);
    for (Vertex v : s) in_set[v] = 1;
    std::vector<Vertex> stack{s.front()};
    seen[s.front()] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbors(u)) {
            if (in_set[w] && !seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == s.size();
}

}  // namespace mars
