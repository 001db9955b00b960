#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "mars/families.hpp"
#include "mars/graph.hpp"

namespace mars {

class UnsupportedFamilyError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NotATreeError : public std::invalid_argument {
public:
    NotATreeError() : std::invalid_argument("graph is not a tree") {}
};

class DiameterTooSmallError : public std::invalid_argument {
public:
    DiameterTooSmallError() : std::invalid_argument("tree diameter must be at least 3") {}
};

class NotAWheelError : public std::invalid_argument {
public:
    NotAWheelError() : std::invalid_argument("graph is not a wheel labeled with center 0 and rim 1..n-1") {}
};

/// Closed-form value of msad_k or kappa for a graph family.
///
/// Infeasible means no k-MARS exists (msad = infinity). Unknown is returned
/// outside the parameter ranges where a closed form is established; it is
/// never a guess. UpperBound values are bounds only.
struct ClosedFormResult {
    enum class Kind { Exact, Infeasible, UpperBound, Unknown };

    Kind kind = Kind::Unknown;
    std::size_t value = 0;
    std::string provenance;

    static ClosedFormResult exact(std::size_t v, std::string why) { return {Kind::Exact, v, std::move(why)}; }
    static ClosedFormResult infeasible(std::string why) { return {Kind::Infeasible, 0, std::move(why)}; }
    static ClosedFormResult upper_bound(std::size_t v, std::string why) {
        return {Kind::UpperBound, v, std::move(why)};
    }
    static ClosedFormResult unknown(std::string why) { return {Kind::Unknown, 0, std::move(why)}; }

    bool is_exact() const { return kind == Kind::Exact; }
    bool is_infeasible() const { return kind == Kind::Infeasible; }
};

std::string_view to_string(ClosedFormResult::Kind kind);

// kappa for paths, complete bipartite graphs, wheels, and any family member
// with a universal vertex. Other families throw UnsupportedFamilyError.
ClosedFormResult oracle_kappa(const FamilySpec& spec);

// msad_k(K_{r,t}); the sides may be given in either order.
ClosedFormResult oracle_msad_complete_bipartite(std::size_t r, std::size_t t, std::size_t k);

ClosedFormResult oracle_msad_path(std::size_t n, std::size_t k);

// msad_2 of a tree with diameter >= 3 via distance-shell sizes: 1 iff some
// vertex x has exactly two vertices at some distance i in [1..ecc(x)].
// The rule overlooks size-1 shells, so it can answer 1 where the true value is
// 2 (P6 is one case); use msad() when the exact value matters.
ClosedFormResult oracle_msad2_tree(const Graph& tree);

// Complete binary tree of height d. Depth 1 is P3 and goes to the path oracle.
ClosedFormResult oracle_binary_tree(std::size_t depth, std::size_t k);

// msad_k(W_{1,n-1}) where n counts the center; covers n >= 7 and k >= 4.
ClosedFormResult oracle_msad_wheel(std::size_t n, std::size_t k);

struct LemmaCheck {
    bool holds = true;
    std::string detail;
};

/// On a wheel with n >= 7, every k-MARS with k >= 4 contains the center 0.
/// Reports a violation for `s` if it is a k-MARS without vertex 0.
LemmaCheck wheel_center_lemma_check(const DistanceMatrix& dm, std::span<const Vertex> s, std::size_t k);

// Whether C_n has some k-MARS is conjectured to follow "k | n or k | 2n".
bool cycle_divisibility_predicate(std::size_t n, std::size_t k);

}  // namespace mars
