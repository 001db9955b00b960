#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "mars/graph.hpp"
#include "mars/subset_scan.hpp"

namespace mars {

class InvalidKError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class SolveStatus { Optimal, InfeasibleProven, OpenWithinBound, BudgetExhausted };

std::string_view to_string(SolveStatus status);

struct SolverOptions {
    // Largest cardinality to enumerate; 0 means n-1.
    std::size_t max_card = 0;
    Budget budget{};
    unsigned threads = 1;
};

/// Result of a msad_k query.
///
/// Optimal: `witness` is the lexicographically first k-MARS of minimum size.
/// InfeasibleProven: no k-MARS exists. Every cardinality up to n-k was
/// enumerated; larger sets leave fewer than k vertices outside and cannot
/// qualify.
/// OpenWithinBound: no k-MARS of size <= explored_bound; larger sizes not tried.
/// BudgetExhausted: as OpenWithinBound, but stopped by the budget.
struct SolveOutcome {
    SolveStatus status = SolveStatus::OpenWithinBound;
    std::size_t k = 0;
    std::optional<std::size_t> value;
    VertexSet witness;
    std::size_t explored_bound = 0;
    std::uint64_t subsets_evaluated = 0;
    double elapsed_seconds = 0;
};

/// Smallest k-MARS by cardinality-ascending enumeration.
SolveOutcome msad(const DistanceMatrix& dm, std::size_t k, const SolverOptions& options = {});

/// msad for several k values in one sweep; every k gets its own outcome.
std::map<std::size_t, SolveOutcome> k_spectrum(const DistanceMatrix& dm, std::span<const std::size_t> ks,
                                               const SolverOptions& options = {});

struct KappaResult {
    std::size_t value = 0;
    // True when no set of any size can do better than `value`.
    bool exact = false;
    VertexSet witness;
    std::size_t explored_bound = 0;
    std::uint64_t subsets_evaluated = 0;
    double elapsed_seconds = 0;
};

/// Largest k such that a k-MARS exists. A universal vertex answers n-1 at
/// once; otherwise layers are scanned while n - |S| can still beat the best.
KappaResult kappa(const DistanceMatrix& dm, const SolverOptions& options = {});

struct SpectrumEntry {
    std::size_t size = 0;
    VertexSet witness;
};

/// (k, ell)-multiset anonymity of a graph: the worst k(S) over attacker sets
/// with 1 <= |S| <= ell.
struct AnonymityProfile {
    std::size_t ell = 0;
    std::size_t level = 0;
    VertexSet worst_witness;
    // k -> smallest witness of a k-MARS seen within the bound.
    std::map<std::size_t, SpectrumEntry> spectrum;
    bool exact = false;
    std::uint64_t subsets_evaluated = 0;
    double elapsed_seconds = 0;
};

AnonymityProfile anonymity_level(const DistanceMatrix& dm, std::size_t ell, const SolverOptions& options = {});

struct WitnessCertificate {
    VertexSet set;
    std::size_t requested_k = 0;
    std::size_t actual_k = 0;
    bool certified = false;  // actual_k == requested_k, hence msad_k <= |set|
};

WitnessCertificate verify_witness(const DistanceMatrix& dm, std::span<const Vertex> s, std::size_t k);

/// Search restricted to rotation-invariant vertex sets of the cycle C_n
/// (vertices 0..n-1 in cyclic order): sets {i : i mod p in B} for each proper
/// divisor p of n and B a subset of Z_p with |B| * n / p == size. Periods are
/// tried in ascending order and B in lexicographic order. Returns the first
/// set with k(S) == k. The graph behind `dm` must be that cycle.
std::optional<VertexSet> find_rotation_symmetric_witness(const DistanceMatrix& dm, std::size_t k,
                                                         std::size_t size);

}  // namespace mars
