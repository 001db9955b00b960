#include "mars/subset_scan.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <string_view>
#include <thread>
#include <vector>

#include "mars/multiset.hpp"

namespace mars {

BudgetTracker::BudgetTracker(Budget budget) : budget_(budget), start_(std::chrono::steady_clock::now()) {}

bool BudgetTracker::charge(std::uint64_t count) {
    if (exhausted()) return false;
    std::uint64_t total = evaluated_.fetch_add(count, std::memory_order_relaxed) + count;
    if (total > budget_.max_subsets || elapsed_seconds() > budget_.wall_seconds) {
        exhausted_.store(true, std::memory_order_relaxed);
        return false;
    }
    return true;
}

double BudgetTracker::elapsed_seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
}

unsigned default_thread_count() {
    if (const char* env = std::getenv("MARS_THREADS")) {
        std::string_view text(env);
        unsigned value = 0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec == std::errc{} && ptr == text.data() + text.size() && value > 0) return value;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

constexpr std::uint64_t kChargeBatch = 512;

struct Chunk {
    std::array<Vertex, 2> prefix{};
    std::size_t depth = 0;
};

enum class ChunkState : char { Pending, Finished, Aborted, Skipped };

struct ChunkResult {
    ChunkState state = ChunkState::Pending;
    std::map<std::size_t, VertexSet> hits;
};

std::vector<Chunk> make_chunks(std::size_t n, std::size_t c) {
    std::vector<Chunk> chunks;
    std::size_t depth = c >= 3 ? 2 : c - 1;
    if (depth == 0) {
        chunks.push_back({});
    } else if (depth == 1) {
        for (Vertex a = 0; a + c <= n; ++a) chunks.push_back({{a, 0}, 1});
    } else {
        for (Vertex a = 0; a + c <= n; ++a)
            for (Vertex b = a + 1; b + c <= n + 1; ++b) chunks.push_back({{a, b}, 2});
    }
    return chunks;
}

// Per-worker enumeration state; reused across chunks of one layer.
class ChunkRunner {
public:
    ChunkRunner(const DistanceMatrix& dm, std::size_t c)
        : dm_(dm), n_(dm.order()), c_(c), eval_(dm), packed_(eval_.packs(c)), comb_(c) {
        if (packed_) {
            auto w = eval_.weights(c);
            weights_.assign(w.begin(), w.end());
            partial_.assign((c + 1) * n_, 0);
        }
        keys_.reserve(n_);
    }

    // Returns false when the budget ran out or the chunk became irrelevant.
    bool run(const Chunk& chunk, std::size_t index, const std::vector<char>& is_target, std::size_t target_count,
             ChunkResult& out, BudgetTracker& budget, const std::atomic<std::size_t>& cutoff) {
        const std::size_t depth = chunk.depth;
        for (std::size_t i = 0; i < depth; ++i) comb_[i] = chunk.prefix[i];
        for (std::size_t i = depth; i < c_; ++i) comb_[i] = i == 0 ? 0 : comb_[i - 1] + 1;
        refresh(0);

        std::size_t found_targets = 0;
        std::uint64_t pending = 0;
        for (;;) {
            std::size_t k = evaluate();
            ++pending;
            if (target_count == 0 || is_target[k]) {
                auto [it, inserted] = out.hits.try_emplace(k);
                if (inserted) {
                    it->second.assign(comb_.begin(), comb_.end());
                    if (target_count && ++found_targets == target_count) break;
                }
            }
            if (pending == kChargeBatch) {
                pending = 0;
                if (!budget.charge(kChargeBatch)) return false;
                if (index > cutoff.load(std::memory_order_relaxed)) return false;
            }

            std::size_t i = c_;
            while (i > depth && comb_[i - 1] == n_ - c_ + (i - 1)) --i;
            if (i == depth) break;
            --i;
            ++comb_[i];
            for (std::size_t j = i + 1; j < c_; ++j) comb_[j] = comb_[j - 1] + 1;
            refresh(i);
        }
        // The chunk is complete either way; the final charge only keeps the count accurate.
        budget.charge(pending);
        return true;
    }

private:
    // Recomputes partial sums for levels above `from`.
    void refresh(std::size_t from) {
        if (!packed_) return;
        for (std::size_t level = from; level < c_; ++level) {
            const std::uint64_t* src = partial_.data() + level * n_;
            std::uint64_t* dst = partial_.data() + (level + 1) * n_;
            auto row = dm_.row(comb_[level]);
            for (std::size_t v = 0; v < n_; ++v) dst[v] = src[v] + weights_[row[v]];
        }
    }

    std::size_t evaluate() {
        if (!packed_) return eval_.k_of(comb_);
        const std::uint64_t* keys = partial_.data() + c_ * n_;
        keys_.clear();
        std::size_t next = 0;
        for (Vertex v = 0; v < n_; ++v) {
            if (next < c_ && comb_[next] == v) {
                ++next;
                continue;
            }
            keys_.push_back(keys[v]);
        }
        return KEvaluator::min_run(keys_);
    }

    const DistanceMatrix& dm_;
    std::size_t n_, c_;
    KEvaluator eval_;
    bool packed_;
    std::vector<std::uint64_t> weights_;
    std::vector<std::uint64_t> partial_;
    std::vector<std::uint64_t> keys_;
    std::vector<Vertex> comb_;
};

}  // namespace

LayerScan scan_layer(const DistanceMatrix& dm, std::size_t cardinality, std::span<const std::size_t> targets,
                     unsigned threads, BudgetTracker& budget) {
    const std::size_t n = dm.order();
    LayerScan out;
    out.cardinality = cardinality;
    if (cardinality == 0 || cardinality >= n) return out;

    std::vector<char> is_target(n + 1, 0);
    std::size_t target_count = 0;
    for (std::size_t k : targets)
        if (k <= n && !is_target[k]) {
            is_target[k] = 1;
            ++target_count;
        }

    const auto chunks = make_chunks(n, cardinality);
    std::vector<ChunkResult> results(chunks.size());
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> cutoff{std::numeric_limits<std::size_t>::max()};

    std::mutex merge_mutex;
    std::size_t prefix_end = 0;
    std::vector<char> prefix_found(n + 1, 0);
    std::size_t prefix_found_count = 0;

    auto finish_chunk = [&](std::size_t index, bool ok) {
        std::lock_guard lock(merge_mutex);
        results[index].state = ok ? ChunkState::Finished : ChunkState::Aborted;
        if (target_count == 0) return;
        while (prefix_end < chunks.size() && results[prefix_end].state == ChunkState::Finished) {
            for (const auto& [k, subset] : results[prefix_end].hits)
                if (!prefix_found[k]) {
                    prefix_found[k] = 1;
                    ++prefix_found_count;
                }
            if (prefix_found_count == target_count) {
                cutoff.store(prefix_end, std::memory_order_relaxed);
                prefix_end = chunks.size();
                break;
            }
            ++prefix_end;
        }
    };

    auto worker = [&] {
        ChunkRunner runner(dm, cardinality);
        for (;;) {
            std::size_t index = next.fetch_add(1, std::memory_order_relaxed);
            if (index >= chunks.size()) return;
            if (index > cutoff.load(std::memory_order_relaxed)) {
                std::lock_guard lock(merge_mutex);
                results[index].state = ChunkState::Skipped;
                continue;
            }
            if (budget.exhausted()) {
                finish_chunk(index, false);
                continue;
            }
            bool ok = runner.run(chunks[index], index, is_target, target_count, results[index], budget, cutoff);
            finish_chunk(index, ok);
        }
    };

    unsigned workers = std::max(1u, std::min<unsigned>(threads, unsigned(chunks.size())));
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
    }

    const std::size_t limit = std::min(cutoff.load(), chunks.size() - 1);
    bool intact = true;
    for (std::size_t j = 0; j <= limit; ++j) {
        const auto& result = results[j];
        if (result.state == ChunkState::Skipped) {
            intact = false;
            continue;
        }
        for (const auto& [k, subset] : result.hits)
            if (!out.hits.contains(k)) out.hits.emplace(k, LayerHit{subset, intact});
        if (result.state != ChunkState::Finished) intact = false;
    }
    const bool targets_done = target_count != 0 && cutoff.load() != std::numeric_limits<std::size_t>::max();
    out.settled = intact || targets_done;
    return out;
}

}  // namespace mars
