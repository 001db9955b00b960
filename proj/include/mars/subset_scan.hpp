#pragma once

#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>

#include "mars/graph.hpp"

namespace mars {

/// Wall-clock and subset-count limits for one solver call.
struct Budget {
    double wall_seconds = 60.0;
    std::uint64_t max_subsets = 100'000'000;
};

/// Shared, thread-safe accounting against a Budget.
class BudgetTracker {
public:
    explicit BudgetTracker(Budget budget);

    // Records `count` more evaluations; returns false once the budget is spent.
    bool charge(std::uint64_t count);
    bool exhausted() const { return exhausted_.load(std::memory_order_relaxed); }
    std::uint64_t evaluated() const { return evaluated_.load(std::memory_order_relaxed); }
    double elapsed_seconds() const;

private:
    Budget budget_;
    std::chrono::steady_clock::time_point start_;
    std::atomic<std::uint64_t> evaluated_{0};
    std::atomic<bool> exhausted_{false};
};

struct LayerHit {
    VertexSet subset;
    // True when every lexicographically smaller subset of the layer was
    // evaluated, so `subset` is the first one in the layer with this k.
    bool first_in_layer = false;
};

struct LayerScan {
    std::size_t cardinality = 0;
    // The layer was settled: either fully evaluated, or every target k was
    // found with first_in_layer set.
    bool settled = false;
    // k(S) -> lexicographically first evaluated subset with that value.
    std::map<std::size_t, LayerHit> hits;
};

/// Evaluates k(S) for the subsets of size `cardinality` in lexicographic order.
///
/// The layer is split into chunks by the first one or two elements; `threads`
/// workers take chunks in order and results are merged by chunk index, so the
/// output does not depend on the thread count (except for how far a spent
/// budget got). With a non-empty `targets` the scan stops once every target k
/// has a first-in-layer hit; with empty `targets` the whole layer is scanned.
LayerScan scan_layer(const DistanceMatrix& dm, std::size_t cardinality, std::span<const std::size_t> targets,
                     unsigned threads, BudgetTracker& budget);

// Thread count from MARS_THREADS or hardware concurrency, at least 1.
unsigned default_thread_count();

}  // namespace mars
