#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mars/graph.hpp"

namespace mars {

class SetError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class EmptySetError : public SetError {
public:
    EmptySetError() : SetError("vertex set is empty") {}
};

class FullSetError : public SetError {
public:
    FullSetError() : SetError("vertex set contains every vertex") {}
};

class VertexInSetError : public SetError {
public:
    explicit VertexInSetError(Vertex v) : SetError("vertex " + std::to_string(v) + " belongs to the set") {}
};

/// Multiset of distances from a vertex to a set S, as a count vector:
/// counts[r-1] = |{s in S : d(v,s) = r}| for r in 1..diameter.
struct MultisetKey {
    std::vector<std::uint32_t> counts;

    std::size_t total() const;
    friend auto operator<=>(const MultisetKey&, const MultisetKey&) = default;
    friend bool operator==(const MultisetKey&, const MultisetKey&) = default;
};

struct EquivalenceClass {
    MultisetKey key;
    VertexSet members;
};

/// Classes of V \ S under "same multiset representation", ordered by key.
struct ClassPartition {
    VertexSet subject_set;
    std::vector<EquivalenceClass> classes;
    std::size_t k_value = 0;  // smallest class size

    // Index into `classes` of the class holding v, or npos when v is in S.
    std::size_t class_of(Vertex v) const;
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

// Sorts, checks range and uniqueness, and rejects empty or full sets.
VertexSet normalize_proper_set(std::span<const Vertex> s, std::size_t n);

MultisetKey multiset_key(const DistanceMatrix& dm, std::span<const Vertex> s, Vertex v);

ClassPartition partition(const DistanceMatrix& dm, std::span<const Vertex> s);

// k(S): the smallest anonymity-class size over V \ S.
std::size_t k_value(const DistanceMatrix& dm, std::span<const Vertex> s);

// True iff S is a k-MARS, i.e. k(S) == k exactly.
bool is_k_mars(const DistanceMatrix& dm, std::span<const Vertex> s, std::size_t k);

// Ordered distance vector (d(v,s_1),...,d(v,s_l)) for the given ordering of S.
std::vector<Distance> vector_repr(const DistanceMatrix& dm, std::span<const Vertex> ordered_s, Vertex v);

// Smallest class size when vertices are grouped by their distance vector.
std::size_t vector_k(const DistanceMatrix& dm, std::span<const Vertex> ordered_s);

/// Repeated k(S) evaluation without per-call allocation.
///
/// When (|S|+1)^diameter fits in 64 bits the multiset of a vertex is packed
/// into one integer, sum over s of (|S|+1)^(d(v,s)-1), which is injective on
/// count vectors. Larger sets fall back to comparing count vectors. No input
/// validation is performed.
class KEvaluator {
public:
    explicit KEvaluator(const DistanceMatrix& dm);

    std::size_t k_of(std::span<const Vertex> s);

    // Whether sets of cardinality c use packed keys.
    bool packs(std::size_t c) const;

    // Packed weight of distance r for cardinality c; requires packs(c).
    std::span<const std::uint64_t> weights(std::size_t c);

    // Smallest run length in `keys` after sorting them in place.
    static std::size_t min_run(std::span<std::uint64_t> keys);

    const DistanceMatrix& distances() const { return dm_; }

private:
    std::size_t k_generic(std::span<const Vertex> s);

    const DistanceMatrix& dm_;
    std::vector<char> in_set_;
    std::vector<std::uint64_t> keys_;
    std::vector<std::uint64_t> weights_;
    std::size_t weights_for_ = 0;
    std::vector<std::uint32_t> rows_;
    std::vector<std::uint32_t> order_;
};

}  // namespace mars
