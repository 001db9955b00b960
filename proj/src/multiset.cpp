#include "mars/multiset.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>

namespace mars {

std::size_t MultisetKey::total() const { return std::accumulate(counts.begin(), counts.end(), std::size_t{0}); }

std::size_t ClassPartition::class_of(Vertex v) const {
    for (std::size_t i = 0; i < classes.size(); ++i)
        if (std::binary_search(classes[i].members.begin(), classes[i].members.end(), v)) return i;
    return npos;
}

VertexSet normalize_proper_set(std::span<const Vertex> s, std::size_t n) {
    VertexSet out(s.begin(), s.end());
    std::sort(out.begin(), out.end());
    if (out.empty()) throw EmptySetError();
    if (std::adjacent_find(out.begin(), out.end()) != out.end()) throw SetError("vertex set has duplicates");
    if (out.back() >= n) throw SetError("vertex " + std::to_string(out.back()) + " out of range");
    if (out.size() >= n) throw FullSetError();
    return out;
}

MultisetKey multiset_key(const DistanceMatrix& dm, std::span<const Vertex> s, Vertex v) {
    if (s.empty()) throw EmptySetError();
    MultisetKey key{std::vector<std::uint32_t>(dm.diameter(), 0)};
    for (Vertex x : s) {
        if (x == v) throw VertexInSetError(v);
        ++key.counts[dm(v, x) - 1];
    }
    return key;
}

ClassPartition partition(const DistanceMatrix& dm, std::span<const Vertex> s) {
    ClassPartition out;
    out.subject_set = normalize_proper_set(s, dm.order());
    std::vector<char> in_set(dm.order(), 0);
    for (Vertex x : out.subject_set) in_set[x] = 1;

    std::map<MultisetKey, VertexSet> groups;
    for (Vertex v = 0; v < dm.order(); ++v)
        if (!in_set[v]) groups[multiset_key(dm, out.subject_set, v)].push_back(v);

    out.k_value = std::numeric_limits<std::size_t>::max();
    for (auto& [key, members] : groups) {
        out.k_value = std::min(out.k_value, members.size());
        out.classes.push_back({key, std::move(members)});
    }
    return out;
}

std::size_t k_value(const DistanceMatrix& dm, std::span<const Vertex> s) { return partition(dm, s).k_value; }

bool is_k_mars(const DistanceMatrix& dm, std::span<const Vertex> s, std::size_t k) { return k_value(dm, s) == k; }

std::vector<Distance> vector_repr(const DistanceMatrix& dm, std::span<const Vertex> ordered_s, Vertex v) {
    std::vector<Distance> out;
    out.reserve(ordered_s.size());
    for (Vertex x : ordered_s) out.push_back(dm(v, x));
    return out;
}

std::size_t vector_k(const DistanceMatrix& dm, std::span<const Vertex> ordered_s) {
    normalize_proper_set(ordered_s, dm.order());
    std::vector<char> in_set(dm.order(), 0);
    for (Vertex x : ordered_s) in_set[x] = 1;
    std::map<std::vector<Distance>, std::size_t> groups;
    for (Vertex v = 0; v < dm.order(); ++v)
        if (!in_set[v]) ++groups[vector_repr(dm, ordered_s, v)];
    std::size_t k = std::numeric_limits<std::size_t>::max();
    for (const auto& [repr, size] : groups) k = std::min(k, size);
    return k;
}

KEvaluator::KEvaluator(const DistanceMatrix& dm) : dm_(dm), in_set_(dm.order(), 0) {
    keys_.reserve(dm.order());
}

bool KEvaluator::packs(std::size_t c) const {
    // Requires (c+1)^diameter to fit in 64 bits; keys are always below it.
    constexpr std::uint64_t limit = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t value = 1;
    for (Distance r = 0; r < dm_.diameter(); ++r) {
        if (value > limit / (c + 1)) return false;
        value *= (c + 1);
    }
    return true;
}

std::span<const std::uint64_t> KEvaluator::weights(std::size_t c) {
    if (weights_for_ != c || weights_.empty()) {
        weights_.assign(std::size_t(dm_.diameter()) + 1, 0);
        std::uint64_t w = 1;
        for (std::size_t r = 1; r <= dm_.diameter(); ++r) {
            weights_[r] = w;
            w *= (c + 1);
        }
        weights_for_ = c;
    }
    return weights_;
}

std::size_t KEvaluator::min_run(std::span<std::uint64_t> keys) {
    std::sort(keys.begin(), keys.end());
    std::size_t best = keys.size(), run = 1;
    for (std::size_t i = 1; i < keys.size(); ++i) {
        if (keys[i] == keys[i - 1]) {
            ++run;
        } else {
            best = std::min(best, run);
            run = 1;
        }
    }
    return std::min(best, run);
}

std::size_t KEvaluator::k_of(std::span<const Vertex> s) {
    if (!packs(s.size())) return k_generic(s);
    auto w = weights(s.size());
    for (Vertex x : s) in_set_[x] = 1;
    keys_.clear();
    for (Vertex v = 0; v < dm_.order(); ++v) {
        if (in_set_[v]) continue;
        auto row = dm_.row(v);
        std::uint64_t key = 0;
        for (Vertex x : s) key += w[row[x]];
        keys_.push_back(key);
    }
    for (Vertex x : s) in_set_[x] = 0;
    return min_run(keys_);
}

std::size_t KEvaluator::k_generic(std::span<const Vertex> s) {
    const std::size_t width = dm_.diameter();
    for (Vertex x : s) in_set_[x] = 1;
    rows_.clear();
    order_.clear();
    for (Vertex v = 0; v < dm_.order(); ++v) {
        if (in_set_[v]) continue;
        std::size_t base = rows_.size();
        rows_.resize(base + width, 0);
        for (Vertex x : s) ++rows_[base + dm_(v, x) - 1];
        order_.push_back(std::uint32_t(order_.size()));
    }
    for (Vertex x : s) in_set_[x] = 0;

    auto row_less = [&](std::uint32_t a, std::uint32_t b) {
        return std::lexicographical_compare(rows_.begin() + a * width, rows_.begin() + (a + 1) * width,
                                            rows_.begin() + b * width, rows_.begin() + (b + 1) * width);
    };
    auto row_equal = [&](std::uint32_t a, std::uint32_t b) {
        return std::equal(rows_.begin() + a * width, rows_.begin() + (a + 1) * width, rows_.begin() + b * width);
    };
    std::sort(order_.begin(), order_.end(), row_less);
    std::size_t best = order_.size(), run = 1;
    for (std::size_t i = 1; i < order_.size(); ++i) {
        if (row_equal(order_[i], order_[i - 1])) {
            ++run;
        } else {
            best = std::min(best, run);
            run = 1;
        }
    }
    return std::min(best, run);
}

}  // namespace mars
