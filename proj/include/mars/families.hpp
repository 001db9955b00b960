#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "mars/graph.hpp"

namespace mars {

class InvalidParametersError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class FamilyKind {
    Path,
    Cycle,
    CompleteBipartite,
    Wheel,
    CompleteBinaryTree,
    HypercubeQ3,
    GStar,
    Sparse,
    Dense,
    RandomTree,
};

std::string_view family_name(FamilyKind kind);
FamilyKind parse_family_name(std::string_view name);

/// Parameters of a generated graph. Only the fields relevant to `kind` are read.
///
/// Vertex conventions:
///   Path/Cycle     0..n-1 in order
///   Bipartite      sides {0..r-1} and {r..r+t-1}
///   Wheel          0 is the center, 1..n-1 the rim cycle (n counts the center)
///   Binary tree    heap order: root 0, children of i are 2i+1 and 2i+2
///   Q3             vertex i is the bit string of i; edges flip one bit
///   G*             centers 0 and 5; 1..4 hang off 0, 6..9 off 5, i ~ i+5
struct FamilySpec {
    FamilyKind kind = FamilyKind::Path;
    std::size_t n = 0;
    std::size_t r = 0;
    std::size_t t = 0;
    std::size_t depth = 0;
    std::size_t delta = 0;
    std::uint64_t seed = 0;

    static FamilySpec path(std::size_t n) { return {FamilyKind::Path, n}; }
    static FamilySpec cycle(std::size_t n) { return {FamilyKind::Cycle, n}; }
    static FamilySpec complete_bipartite(std::size_t r, std::size_t t) {
        return {FamilyKind::CompleteBipartite, 0, r, t};
    }
    static FamilySpec wheel(std::size_t n) { return {FamilyKind::Wheel, n}; }
    static FamilySpec binary_tree(std::size_t depth) { return {FamilyKind::CompleteBinaryTree, 0, 0, 0, depth}; }
    static FamilySpec hypercube_q3() { return {FamilyKind::HypercubeQ3}; }
    static FamilySpec gstar() { return {FamilyKind::GStar}; }
    static FamilySpec sparse(std::size_t n, std::size_t delta, std::uint64_t seed) {
        return {FamilyKind::Sparse, n, 0, 0, 0, delta, seed};
    }
    static FamilySpec dense(std::size_t n, std::size_t delta, std::uint64_t seed) {
        return {FamilyKind::Dense, n, 0, 0, 0, delta, seed};
    }
    static FamilySpec random_tree(std::size_t n, std::uint64_t seed) {
        return {FamilyKind::RandomTree, n, 0, 0, 0, 0, seed};
    }

    // Throws InvalidParametersError when the parameters do not fit the kind.
    void validate() const;
    std::size_t order() const;
    std::string describe() const;
};

/// Deterministic for a fixed spec.
///
/// Sparse: for each vertex u in index order a degree budget is drawn from
/// [1..delta] and that many distinct endpoints from V \ {u}; arcs are then
/// symmetrized and deduplicated. Dense: delta distinct edges are removed from
/// K_n. Random trees are uniform over labeled trees (Pruefer decoding).
/// Random families retry with a derived seed until the result is connected.
Graph generate(const FamilySpec& spec);

// The two vertices of G* that hang the eight others at distances 1 and 2.
inline constexpr Vertex kGStarCenters[2] = {0, 5};

}  // namespace mars
