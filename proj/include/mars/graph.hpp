#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mars {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

// Sorted, duplicate-free list of vertex indices.
using VertexSet = std::vector<Vertex>;

class GraphError : public std::runtime_error {
public:
    // `line` is the 1-based input line the error refers to, 0 when not read from text.
    explicit GraphError(const std::string& what, std::size_t line = 0)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class SelfLoopError : public GraphError {
public:
    explicit SelfLoopError(Vertex v, std::size_t line = 0)
        : GraphError("self-loop at vertex " + std::to_string(v), line), vertex(v) {}
    Vertex vertex;
};

class IndexOutOfRangeError : public GraphError {
public:
    IndexOutOfRangeError(Vertex v, std::size_t n, std::size_t line = 0)
        : GraphError("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n), line) {}
};

class DisconnectedError : public GraphError {
public:
    explicit DisconnectedError(std::size_t components)
        : GraphError("graph is disconnected (" + std::to_string(components) + " components)"),
          components(components) {}
    std::size_t components;
};

// Non-fatal findings from graph construction.
struct BuildNotes {
    std::size_t duplicate_edges = 0;
};

/// Simple undirected connected graph on vertices 0..n-1.
///
/// Instances are immutable once built and can be shared read-only between
/// threads.
class Graph {
public:
    /// Validates and normalizes an edge list. Duplicate edges (in either
    /// orientation) are dropped and counted in `notes`.
    static Graph build(std::size_t n, std::span<const Edge> edges, BuildNotes* notes = nullptr);

    std::size_t order() const { return adjacency_.size(); }
    std::size_t size() const { return edge_count_; }

    std::span<const Vertex> neighbors(Vertex u) const { return adjacency_[u]; }
    std::size_t degree(Vertex u) const { return adjacency_[u].size(); }
    bool has_edge(Vertex u, Vertex v) const;

    // Edges with u < v, ordered lexicographically.
    std::vector<Edge> edges() const;

    // Original labels when the graph was read from a labeled file; empty otherwise.
    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> labels);

    // Structural equality; labels are not compared.
    friend bool operator==(const Graph& a, const Graph& b) { return a.adjacency_ == b.adjacency_; }

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::size_t edge_count_ = 0;
    std::vector<std::string> labels_;
};

inline Graph build_graph(std::size_t n, std::span<const Edge> edges, BuildNotes* notes = nullptr) {
    return Graph::build(n, edges, notes);
}

using Distance = std::uint16_t;

/// All-pairs hop distances with eccentricities.
class DistanceMatrix {
public:
    explicit DistanceMatrix(const Graph& g);

    std::size_t order() const { return n_; }
    Distance operator()(Vertex u, Vertex v) const { return d_[std::size_t(u) * n_ + v]; }
    std::span<const Distance> row(Vertex u) const { return {d_.data() + std::size_t(u) * n_, n_}; }

    Distance eccentricity(Vertex u) const { return ecc_[u]; }
    const std::vector<Distance>& eccentricities() const { return ecc_; }
    Distance diameter() const { return diameter_; }
    Distance radius() const { return radius_; }

    // Number of vertices at distance exactly r from x, for r in [0..ecc(x)].
    std::vector<std::size_t> shell_sizes(Vertex x) const;

private:
    std::size_t n_ = 0;
    std::vector<Distance> d_;
    std::vector<Distance> ecc_;
    Distance diameter_ = 0;
    Distance radius_ = 0;
};

inline DistanceMatrix all_pairs_distances(const Graph& g) { return DistanceMatrix(g); }

// True when the graph is connected and has exactly n-1 edges.
bool is_tree(const Graph& g);

// Whether the subgraph induced by `s` is connected. Empty sets count as connected.
bool induces_connected_subgraph(const Graph& g, std::span<const Vertex> s);

}  // namespace mars
