#include <algorithm>
#include <stdexcept>
#include <vector>

#include "mars/multiset.hpp"
#include "mars/solver.hpp"

namespace mars {

namespace {

bool is_labeled_cycle(const DistanceMatrix& dm) {
    const std::size_t n = dm.order();
    if (n < 3) return false;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v) {
            std::size_t gap = u > v ? u - v : v - u;
            if (dm(u, v) != std::min(gap, n - gap)) return false;
        }
    return true;
}

}  // namespace

std::optional<VertexSet> find_rotation_symmetric_witness(const DistanceMatrix& dm, std::size_t k,
                                                         std::size_t size) {
    if (!is_labeled_cycle(dm)) throw std::invalid_argument("rotation-symmetric search needs the cycle 0-1-...-(n-1)-0");
    const std::size_t n = dm.order();
    if (size == 0 || size >= n) return std::nullopt;

    KEvaluator evaluator(dm);
    VertexSet s;
    for (std::size_t period = 1; period < n; ++period) {
        if (n % period != 0 || (size * period) % n != 0) continue;
        const std::size_t pattern_size = size * period / n;
        if (pattern_size == 0 || pattern_size >= period) continue;

        // Lexicographic walk over pattern_size-subsets of Z_period.
        std::vector<std::size_t> pattern(pattern_size);
        for (std::size_t i = 0; i < pattern_size; ++i) pattern[i] = i;
        for (;;) {
            s.clear();
            for (std::size_t base = 0; base < n; base += period)
                for (std::size_t offset : pattern) s.push_back(Vertex(base + offset));
            std::sort(s.begin(), s.end());
            if (evaluator.k_of(s) == k) return s;

            std::size_t i = pattern_size;
            while (i > 0 && pattern[i - 1] == period - pattern_size + (i - 1)) --i;
            if (i == 0) break;
            --i;
            ++pattern[i];
            for (std::size_t j = i + 1; j < pattern_size; ++j) pattern[j] = pattern[j - 1] + 1;
        }
    }
    return std::nullopt;
}

}  // namespace mars
