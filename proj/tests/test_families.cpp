#include <doctest.h>

#include <iostream>

#include "mars/families.hpp"
#include "mars/multiset.hpp"
#include "mars/oracles.hpp"
#include "mars/solver.hpp"
#include "naive_oracle.hpp"

using namespace mars;

namespace {

using Kind = ClosedFormResult::Kind;

// Checks an exact or infeasible closed form against full enumeration.
void check_against(const ClosedFormResult& cf, const std::map<std::size_t, naive::Best>& ref, std::size_t k) {
    CAPTURE(cf.provenance);
    auto it = ref.find(k);
    if (cf.kind == Kind::Exact) {
        REQUIRE(it != ref.end());
        CHECK(it->second.size == cf.value);
    } else if (cf.kind == Kind::Infeasible) {
        CHECK(it == ref.end());
    } else if (cf.kind == Kind::UpperBound) {
        REQUIRE(it != ref.end());
        CHECK(it->second.size <= cf.value);
    }
}

}  // namespace

TEST_SUITE("families") {

TEST_CASE("generate examples") {
    Graph c40 = generate(FamilySpec::cycle(40));
    CHECK(c40.order() == 40);
    CHECK(c40.size() == 40);
    for (Vertex v = 0; v < 40; ++v) CHECK(c40.degree(v) == 2);

    CHECK(generate(FamilySpec::complete_bipartite(3, 3)).size() == 9);
    CHECK(generate(FamilySpec::dense(50, 40, 1)).size() == 1185);
    CHECK(generate(FamilySpec::dense(50, 45, 1)).size() == 1180);
    CHECK(generate(FamilySpec::binary_tree(4)).order() == 31);

    Graph w = generate(FamilySpec::wheel(9));
    CHECK(w.degree(0) == 8);
    for (Vertex v = 1; v < 9; ++v) CHECK(w.degree(v) == 3);
    CHECK(w.has_edge(8, 1));

    Graph gs = generate(FamilySpec::gstar());
    CHECK(gs.degree(0) == 4);
    CHECK(gs.degree(5) == 4);
}

TEST_CASE("generate: invalid parameters") {
    CHECK_THROWS_AS(generate(FamilySpec::wheel(3)), InvalidParametersError);
    CHECK_THROWS_AS(generate(FamilySpec::binary_tree(0)), InvalidParametersError);
    CHECK_THROWS_AS(generate(FamilySpec::cycle(2)), InvalidParametersError);
    CHECK_THROWS_AS(generate(FamilySpec::dense(5, 7, 1)), InvalidParametersError);
    CHECK_THROWS_AS(parse_family_name("petersen"), InvalidParametersError);
    CHECK(parse_family_name("btree") == FamilyKind::CompleteBinaryTree);
}

TEST_CASE("random families are seed-deterministic") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        CHECK(generate(FamilySpec::sparse(50, 5, seed)) == generate(FamilySpec::sparse(50, 5, seed)));
        CHECK(generate(FamilySpec::dense(50, 45, seed)) == generate(FamilySpec::dense(50, 45, seed)));
        CHECK(generate(FamilySpec::random_tree(30, seed)) == generate(FamilySpec::random_tree(30, seed)));
        CHECK(generate(FamilySpec::dense(20, 30, seed)).size() == 190 - 30);
        CHECK(is_tree(generate(FamilySpec::random_tree(30, seed))));
    }
    CHECK_FALSE(generate(FamilySpec::sparse(50, 5, 1)) == generate(FamilySpec::sparse(50, 5, 2)));
}

TEST_CASE("sparse generator respects the per-vertex draw") {
    Graph g = generate(FamilySpec::sparse(100, 5, 4));
    // Each vertex draws at most delta endpoints; after symmetrization the edge
    // count is at most n * delta.
    CHECK(g.size() <= 100 * 5);
    CHECK(g.size() >= 99);
}

TEST_CASE("oracle_kappa examples") {
    CHECK(oracle_kappa(FamilySpec::complete_bipartite(5, 1)).value == 5);
    CHECK(oracle_kappa(FamilySpec::complete_bipartite(4, 3)).value == 5);
    CHECK(oracle_kappa(FamilySpec::path(9)).value == 2);
    CHECK(oracle_kappa(FamilySpec::wheel(9)).value == 8);
    CHECK_THROWS_AS(oracle_kappa(FamilySpec::cycle(9)), UnsupportedFamilyError);
    CHECK(oracle_kappa(FamilySpec::dense(8, 1, 3)).value == 7);
}

TEST_CASE("oracle_kappa agrees with enumeration") {
    std::vector<FamilySpec> specs;
    for (std::size_t n = 2; n <= 12; ++n) specs.push_back(FamilySpec::path(n));
    for (std::size_t n = 4; n <= 12; ++n) specs.push_back(FamilySpec::wheel(n));
    for (std::size_t r = 1; r <= 6; ++r)
        for (std::size_t t = 1; t <= r && r + t <= 12; ++t)
            if (r + t >= 2) specs.push_back(FamilySpec::complete_bipartite(r, t));
    for (const auto& spec : specs) {
        CAPTURE(spec.describe());
        auto cf = oracle_kappa(spec);
        REQUIRE(cf.is_exact());
        CHECK(naive::kappa(generate(spec)) == cf.value);
    }
}

TEST_CASE("oracle_msad_complete_bipartite examples") {
    CHECK(oracle_msad_complete_bipartite(6, 4, 2).value == 2);
    CHECK(oracle_msad_complete_bipartite(6, 4, 5).value == 5);
    CHECK(oracle_msad_complete_bipartite(5, 4, 6).is_infeasible());
    CHECK(oracle_msad_complete_bipartite(4, 6, 2).value == 2);
    CHECK_THROWS_AS(oracle_msad_complete_bipartite(3, 3, 6), InvalidParametersError);
}

TEST_CASE("oracle_msad_path examples and agreement") {
    CHECK(oracle_msad_path(7, 2).value == 1);
    CHECK(oracle_msad_path(8, 2).value == 2);
    CHECK(oracle_msad_path(8, 3).is_infeasible());
    CHECK_THROWS_AS(oracle_msad_path(1, 1), InvalidParametersError);
    for (std::size_t n = 2; n <= 12; ++n) {
        auto ref = naive::all_msad(generate(FamilySpec::path(n)));
        for (std::size_t k = 1; k < n; ++k) check_against(oracle_msad_path(n, k), ref, k);
    }
}

TEST_CASE("oracle_msad2_tree examples") {
    // Spider: center 0 with legs 0-1-2, 0-3-4, 0-5-6.
    const Edge spider[] = {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}};
    auto s = oracle_msad2_tree(build_graph(7, spider));
    CHECK(s.value == 1);
    CHECK(oracle_msad2_tree(generate(FamilySpec::path(6))).value == 1);
    CHECK_THROWS_AS(oracle_msad2_tree(generate(FamilySpec::complete_bipartite(5, 1))), DiameterTooSmallError);
    CHECK_THROWS_AS(oracle_msad2_tree(generate(FamilySpec::cycle(6))), NotATreeError);
}

TEST_CASE("oracle_binary_tree examples") {
    CHECK(oracle_binary_tree(2, 3).is_infeasible());
    CHECK(oracle_binary_tree(3, 3).value == 2);
    CHECK(oracle_binary_tree(4, 3).value == 1);
    auto b = oracle_binary_tree(4, 4);
    CHECK(b.kind == Kind::UpperBound);
    CHECK(b.value == 3);
    CHECK(oracle_binary_tree(1, 2).value == oracle_msad_path(3, 2).value);
    CHECK(oracle_binary_tree(3, 5).kind == Kind::Unknown);
}

TEST_CASE("oracle_msad_wheel examples") {
    CHECK(oracle_msad_wheel(12, 4).value == 3);
    CHECK(oracle_msad_wheel(9, 4).value == 5);
    CHECK(oracle_msad_wheel(12, 5).value == 7);
    CHECK(oracle_msad_wheel(12, 11).value == 1);
    CHECK(oracle_msad_wheel(12, 2).kind == Kind::Unknown);
    CHECK_THROWS_AS(oracle_msad_wheel(6, 4), InvalidParametersError);
}

TEST_CASE("wheel_center_lemma_check") {
    DistanceMatrix w9(generate(FamilySpec::wheel(9)));
    const Vertex rim[] = {1, 2};
    CHECK(k_value(w9, rim) < 4);
    CHECK(wheel_center_lemma_check(w9, rim, 4).holds);
    auto o = msad(w9, 4);
    REQUIRE(o.status == SolveStatus::Optimal);
    CHECK(o.witness.front() == 0);
    CHECK(wheel_center_lemma_check(w9, o.witness, 4).holds);
    CHECK_THROWS_AS(wheel_center_lemma_check(DistanceMatrix(generate(FamilySpec::cycle(9))), rim, 4), NotAWheelError);

    DistanceMatrix w7(generate(FamilySpec::wheel(7)));
    KEvaluator eval(w7);
    for (std::uint64_t mask = 1; mask + 1 < (1u << 7); ++mask) {
        VertexSet s = naive::to_set(naive::members(mask, 7));
        const std::size_t k = eval.k_of(s);
        if (k >= 4) CHECK(wheel_center_lemma_check(w7, s, k).holds);
    }
}

TEST_CASE("complete bipartite oracle agrees with enumeration") {
    for (std::size_t r = 2; r <= 5; ++r)
        for (std::size_t t = 2; t <= r; ++t) {
            auto ref = naive::all_msad(generate(FamilySpec::complete_bipartite(r, t)));
            for (std::size_t k = 1; k <= r + t - 1; ++k) {
                CAPTURE(r);
                CAPTURE(t);
                CAPTURE(k);
                auto cf = oracle_msad_complete_bipartite(r, t, k);
                REQUIRE(cf.kind != Kind::Unknown);
                check_against(cf, ref, k);
            }
        }
}

TEST_CASE("binary tree bound holds for small depths") {
    for (std::size_t d = 2; d <= 3; ++d) {
        auto ref = naive::all_msad(generate(FamilySpec::binary_tree(d)));
        for (std::size_t k = 2; k <= (std::size_t{1} << d); k *= 2) check_against(oracle_binary_tree(d, k), ref, k);
        check_against(oracle_binary_tree(d, 3), ref, 3);
    }
}

TEST_CASE("cycle divisibility probe (reported, not asserted)") {
    std::size_t discrepancies = 0;
    for (std::size_t n = 4; n <= 14; ++n) {
        auto ref = naive::all_msad(generate(FamilySpec::cycle(n)));
        // The solver's anonymity profile with ell = n-1 lists every achievable k.
        auto profile = anonymity_level(DistanceMatrix(generate(FamilySpec::cycle(n))), n - 1);
        for (std::size_t k = 1; k < n; ++k) {
            CHECK((ref.count(k) == 1) == (profile.spectrum.count(k) == 1));
            if ((ref.count(k) == 1) != cycle_divisibility_predicate(n, k)) {
                ++discrepancies;
                MESSAGE("C_" << n << " k=" << k << ": enumeration " << (ref.count(k) ? "has" : "lacks")
                              << " a k-MARS, divisibility predicate says " << cycle_divisibility_predicate(n, k));
            }
        }
    }
    MESSAGE("cycle divisibility discrepancies for n in 4..14: " << discrepancies);
}

}
