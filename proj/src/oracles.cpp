#include "mars/oracles.hpp"

#include <algorithm>

#include "mars/multiset.hpp"

namespace mars {

std::string_view to_string(ClosedFormResult::Kind kind) {
    switch (kind) {
        case ClosedFormResult::Kind::Exact: return "Exact";
        case ClosedFormResult::Kind::Infeasible: return "Infeasible";
        case ClosedFormResult::Kind::UpperBound: return "UpperBound";
        case ClosedFormResult::Kind::Unknown: return "Unknown";
    }
    return "?";
}

namespace {

std::string num(std::size_t x) { return std::to_string(x); }

bool has_universal_vertex(const Graph& g) {
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) + 1 == g.order()) return true;
    return false;
}

}  // namespace

ClosedFormResult oracle_kappa(const FamilySpec& spec) {
    spec.validate();
    switch (spec.kind) {
        case FamilyKind::Path:
            // P2 is the only connected graph of order 2.
            if (spec.n == 2) return ClosedFormResult::exact(1, "order 2: kappa = n-1 = 1");
            return ClosedFormResult::exact(2, "kappa(P_n) = 2");
        case FamilyKind::CompleteBipartite: {
            const std::size_t r = std::max(spec.r, spec.t), t = std::min(spec.r, spec.t);
            if (t == 1) return ClosedFormResult::exact(r + t - 1, "K_{r,1}: kappa = r+t-1");
            return ClosedFormResult::exact(r + t - 2, "K_{r,t}, t > 1: kappa = r+t-2");
        }
        case FamilyKind::Wheel:
            return ClosedFormResult::exact(spec.n - 1, "wheel: center has degree n-1");
        default:
            break;
    }
    const Graph g = generate(spec);
    if (has_universal_vertex(g))
        return ClosedFormResult::exact(g.order() - 1, "vertex of degree n-1 gives kappa = n-1");
    switch (spec.kind) {
        case FamilyKind::Sparse:
        case FamilyKind::Dense:
        case FamilyKind::RandomTree:
            return ClosedFormResult::unknown("no universal vertex; kappa has no closed form here");
        default:
            throw UnsupportedFamilyError("no kappa oracle for " + spec.describe());
    }
}

ClosedFormResult oracle_msad_complete_bipartite(std::size_t r, std::size_t t, std::size_t k) {
    if (r < t) std::swap(r, t);
    if (t < 1) throw InvalidParametersError("K_{r,t} needs r, t >= 1");
    if (k < 1) throw InvalidParametersError("k must be positive");
    const std::size_t n = r + t;
    if (k > n - 1) throw InvalidParametersError("k must be at most r+t-1 = " + num(n - 1));

    if (t == 1) {
        // Star K_{r,1}: the center alone is an r-MARS. Other k are not covered.
        if (k == r) return ClosedFormResult::exact(1, "star: center is an (n-1)-MARS");
        return ClosedFormResult::unknown("star K_{r,1} with k < r is not covered");
    }
    if (k == 1) return ClosedFormResult::exact(t - 1, "k = 1: all but one vertex of the small side");
    if (k < t) return ClosedFormResult::exact(t - k, "case (i): 1 < k < t gives t-k");
    if (k == t) {
        if (r > t) return ClosedFormResult::exact(1, "case (ii): k = t, r > t gives 1");
        return ClosedFormResult::exact(r, "case (ii): k = t = r gives r");
    }
    if (k <= r) return ClosedFormResult::exact(n - k, "case (iii): t < k <= r gives r+t-k");
    if (k <= n - 2) {
        if (k % 2 == n % 2) return ClosedFormResult::exact(n - k, "case (iv): same parity gives r+t-k");
        return ClosedFormResult::infeasible("case (v): k and r+t of different parity");
    }
    return ClosedFormResult::infeasible("k = r+t-1 exceeds kappa = r+t-2");
}

ClosedFormResult oracle_msad_path(std::size_t n, std::size_t k) {
    if (n < 2) throw InvalidParametersError("path needs n >= 2");
    if (k < 1) throw InvalidParametersError("k must be positive");
    if (n == 2) {
        if (k == 1) return ClosedFormResult::exact(1, "P2: either vertex is a 1-MARS");
        return ClosedFormResult::infeasible("P2: kappa = 1");
    }
    if (k == 1) return ClosedFormResult::exact(1, "msad_1(P_n) = 1");
    if (k == 2) {
        if (n % 2 == 1) return ClosedFormResult::exact(1, "n odd: the middle vertex");
        return ClosedFormResult::exact(2, "n even: the two leaves");
    }
    return ClosedFormResult::infeasible("kappa(P_n) = 2");
}

ClosedFormResult oracle_msad2_tree(const Graph& tree) {
    if (!is_tree(tree)) throw NotATreeError();
    const DistanceMatrix dm(tree);
    if (dm.diameter() < 3) throw DiameterTooSmallError();
    for (Vertex x = 0; x < tree.order(); ++x) {
        const auto shells = dm.shell_sizes(x);
        for (std::size_t i = 1; i < shells.size(); ++i)
            if (shells[i] == 2)
                return ClosedFormResult::exact(1, "vertex " + num(x) + " has exactly two vertices at distance " +
                                                      num(i));
    }
    return ClosedFormResult::exact(2, "no distance shell of size two");
}

ClosedFormResult oracle_binary_tree(std::size_t depth, std::size_t k) {
    if (depth < 1) throw InvalidParametersError("binary tree needs depth >= 1");
    if (k < 1) throw InvalidParametersError("k must be positive");
    const std::size_t n = (std::size_t{1} << (depth + 1)) - 1;
    if (k > n - 1) throw InvalidParametersError("k must be at most n-1 = " + num(n - 1));
    if (depth == 1) return oracle_msad_path(3, k);

    if (k == 1) return ClosedFormResult::exact(1, "a leaf: its parent is the only vertex at distance 1");
    if (k == 2) return ClosedFormResult::exact(1, "k = 2: the root");
    if (k == 3) {
        if (depth == 2) return ClosedFormResult::infeasible("T_2 has no 3-MARS");
        if (depth == 3) return ClosedFormResult::exact(2, "T_3: root and one child");
        return ClosedFormResult::exact(1, "d > 3: one child of the root");
    }
    if ((k & (k - 1)) == 0 && k <= (std::size_t{1} << depth))
        // All vertices within distance log2(k)-1 of the root: 2^0 + ... = k-1 of them.
        return ClosedFormResult::upper_bound(k - 1, "root ball of radius log2(k)-1");
    return ClosedFormResult::unknown("only k <= 3 and powers of two up to 2^d are covered");
}

ClosedFormResult oracle_msad_wheel(std::size_t n, std::size_t k) {
    if (n < 7) throw InvalidParametersError("wheel oracle needs n >= 7");
    if (k < 1 || k > n - 1) throw InvalidParametersError("k must be in [1, " + num(n - 1) + "]");
    if (k == n - 1) return ClosedFormResult::exact(1, "the center is an (n-1)-MARS");
    if (k < 4) return ClosedFormResult::unknown("k <= 3 is not covered");

    if (k % 2 == 0) {
        if (2 * n >= 5 * k + 2) return ClosedFormResult::exact((k + 2) / 2, "even k, n >= (5k+2)/2");
        if (2 * n >= 3 * k + 2) return ClosedFormResult::exact(n - k, "even k, (3k+2)/2 <= n < (5k+2)/2");
        return ClosedFormResult::infeasible("even k, n < (3k+2)/2");
    }
    if (2 * n >= 5 * k + 5) {
        const std::size_t t = (n - 1 - k) % 3;
        return ClosedFormResult::exact(std::min((n - 1 - k) / 3 + t + 1, (3 * k + 3) / 2),
                                       "odd k, n >= (5k+5)/2");
    }
    if (2 * k < n) return ClosedFormResult::exact(n - k, "odd k, 2k < n < (5k+5)/2");
    return ClosedFormResult::infeasible("odd k, n <= 2k");
}

LemmaCheck wheel_center_lemma_check(const DistanceMatrix& dm, std::span<const Vertex> s, std::size_t k) {
    const std::size_t n = dm.order();
    bool wheel = n >= 4;
    for (Vertex v = 1; wheel && v < n; ++v) {
        if (dm(0, v) != 1) wheel = false;
        const Vertex next = v + 1 < n ? v + 1 : 1;
        for (Vertex w = 1; wheel && w < n; ++w) {
            const bool rim_adjacent = w == next || v == (w + 1 < n ? w + 1 : 1);
            if (w != v && (dm(v, w) == 1) != rim_adjacent) wheel = false;
        }
    }
    if (!wheel) throw NotAWheelError();

    const VertexSet set = normalize_proper_set(s, n);
    LemmaCheck check;
    if (n < 7 || k < 4) return check;
    if (std::binary_search(set.begin(), set.end(), Vertex{0})) return check;
    if (!is_k_mars(dm, set, k)) return check;
    check.holds = false;
    check.detail = "a " + num(k) + "-MARS of size " + num(set.size()) + " without the center";
    return check;
}

bool cycle_divisibility_predicate(std::size_t n, std::size_t k) {
    return k > 0 && (n % k == 0 || (2 * n) % k == 0);
}

}  // namespace mars
