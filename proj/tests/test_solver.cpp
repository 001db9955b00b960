#include <doctest.h>

#include <random>

#include "mars/families.hpp"
#include "mars/multiset.hpp"
#include "mars/solver.hpp"
#include "naive_oracle.hpp"

using namespace mars;

namespace {

std::vector<Graph> small_graphs() {
    std::vector<Graph> out;
    for (std::size_t n = 2; n <= 10; ++n) out.push_back(generate(FamilySpec::path(n)));
    for (std::size_t n = 3; n <= 10; ++n) out.push_back(generate(FamilySpec::cycle(n)));
    for (std::size_t r = 1; r <= 6; ++r)
        for (std::size_t t = 1; t <= r && r + t <= 10; ++t)
            if (r + t >= 2) out.push_back(generate(FamilySpec::complete_bipartite(r, t)));
    for (std::size_t n = 4; n <= 10; ++n) out.push_back(generate(FamilySpec::wheel(n)));
    out.push_back(generate(FamilySpec::binary_tree(1)));
    out.push_back(generate(FamilySpec::binary_tree(2)));
    out.push_back(generate(FamilySpec::hypercube_q3()));
    out.push_back(generate(FamilySpec::gstar()));
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        out.push_back(generate(FamilySpec::sparse(10, 2, seed)));
        out.push_back(generate(FamilySpec::dense(9, 8, seed)));
        out.push_back(generate(FamilySpec::random_tree(10, seed)));
    }
    std::mt19937_64 rng(99);
    for (int i = 0; i < 50; ++i) out.push_back(naive::random_connected(4 + rng() % 7, 0.3, rng));
    return out;
}

SolverOptions with_threads(unsigned threads) {
    SolverOptions o;
    o.threads = threads;
    return o;
}

}  // namespace

TEST_SUITE("solver") {

TEST_CASE("msad: cycle rows") {
    DistanceMatrix c37(generate(FamilySpec::cycle(37)));
    auto a = msad(c37, 1);
    CHECK(a.status == SolveStatus::Optimal);
    CHECK(a.value == 2u);
    auto b = msad(c37, 2);
    CHECK(b.value == 1u);
    CHECK(is_k_mars(c37, b.witness, 2));

    DistanceMatrix c40(generate(FamilySpec::cycle(40)));
    SolverOptions o;
    o.max_card = 5;
    auto c = msad(c40, 3, o);
    CHECK(c.status == SolveStatus::OpenWithinBound);
    CHECK(c.explored_bound == 5);
    CHECK_FALSE(c.value);
}

TEST_CASE("msad: input errors") {
    DistanceMatrix q3(generate(FamilySpec::hypercube_q3()));
    CHECK_THROWS_AS(msad(q3, 0), InvalidKError);
    CHECK_THROWS_AS(msad(q3, 8), InvalidKError);
    SolverOptions o;
    o.max_card = 8;
    CHECK_THROWS(msad(q3, 1, o));
}

TEST_CASE("msad: Q3 has no 7-MARS") {
    DistanceMatrix q3(generate(FamilySpec::hypercube_q3()));
    auto r = msad(q3, 7);
    CHECK(r.status == SolveStatus::InfeasibleProven);
    SolverOptions o;
    o.max_card = 2;
    auto six = msad(q3, 6, o);
    CHECK(six.status == SolveStatus::Optimal);
    CHECK(six.value == 2u);
    CHECK(six.witness == VertexSet{0, 7});
}

TEST_CASE("budget exhaustion never reports Optimal beyond what was proven") {
    DistanceMatrix c40(generate(FamilySpec::cycle(40)));
    SolverOptions o;
    o.budget.max_subsets = 2000;
    auto r = msad(c40, 3, o);
    CHECK(r.status == SolveStatus::BudgetExhausted);
    CHECK_FALSE(r.value);
    CHECK(r.explored_bound <= 2);
    auto k2 = msad(c40, 2, o);
    CHECK(k2.status == SolveStatus::Optimal);
}

TEST_CASE("kappa examples") {
    auto w = kappa(DistanceMatrix(generate(FamilySpec::wheel(9))));
    CHECK(w.value == 8);
    CHECK(w.exact);
    CHECK(w.witness == VertexSet{0});

    auto gs = kappa(DistanceMatrix(generate(FamilySpec::gstar())));
    CHECK(gs.value == 8);
    CHECK(gs.exact);
    CHECK(gs.witness == VertexSet{0, 5});

    auto p5 = kappa(DistanceMatrix(generate(FamilySpec::path(5))));
    CHECK(p5.value == 2);
    CHECK(p5.exact);
    CHECK(p5.witness == VertexSet{2});
}

TEST_CASE("anonymity_level examples") {
    DistanceMatrix q3(generate(FamilySpec::hypercube_q3()));
    auto one = anonymity_level(q3, 1);
    CHECK(one.level == 1);
    CHECK(one.exact);
    CHECK(one.worst_witness == VertexSet{0});
    auto two = anonymity_level(q3, 2);
    CHECK(two.level == 1);
    CHECK(two.spectrum.at(6).size == 2);

    DistanceMatrix k33(generate(FamilySpec::complete_bipartite(3, 3)));
    auto b = anonymity_level(k33, 1);
    CHECK(b.level == 2);
    CHECK(is_k_mars(k33, b.worst_witness, b.level));

    CHECK_THROWS(anonymity_level(q3, 0));
    CHECK_THROWS(anonymity_level(q3, 8));
}

TEST_CASE("k_spectrum examples") {
    DistanceMatrix c37(generate(FamilySpec::cycle(37)));
    const std::size_t ks37[] = {1, 2};
    auto s37 = k_spectrum(c37, ks37);
    CHECK(s37.at(1).value == 2u);
    CHECK(s37.at(2).value == 1u);

    DistanceMatrix c12(generate(FamilySpec::cycle(12)));
    std::vector<std::size_t> all;
    for (std::size_t k = 1; k <= 11; ++k) all.push_back(k);
    auto s12 = k_spectrum(c12, all);
    auto ref = naive::all_msad(generate(FamilySpec::cycle(12)));
    for (std::size_t k = 1; k <= 11; ++k) {
        CAPTURE(k);
        auto it = ref.find(k);
        if (it == ref.end()) {
            CHECK(s12.at(k).status == SolveStatus::InfeasibleProven);
        } else {
            CHECK(s12.at(k).value == it->second.size);
        }
    }
}

TEST_CASE("verify_witness") {
    DistanceMatrix q3(generate(FamilySpec::hypercube_q3()));
    const Vertex good[] = {5, 2}, bad[] = {0, 1};
    auto c = verify_witness(q3, good, 6);
    CHECK(c.certified);
    CHECK(c.set == VertexSet{2, 5});
    auto d = verify_witness(q3, bad, 6);
    CHECK_FALSE(d.certified);
    CHECK(d.actual_k == 2);
}

TEST_CASE("property: msad matches full enumeration (n <= 10)") {
    for (const Graph& g : small_graphs()) {
        DistanceMatrix dm(g);
        auto ref = naive::all_msad(g);
        std::vector<std::size_t> ks;
        for (std::size_t k = 1; k < g.order(); ++k) ks.push_back(k);
        auto got = k_spectrum(dm, ks, with_threads(2));
        for (std::size_t k : ks) {
            CAPTURE(g.order());
            CAPTURE(k);
            const auto& o = got.at(k);
            auto it = ref.find(k);
            if (it == ref.end()) {
                CHECK(o.status == SolveStatus::InfeasibleProven);
            } else {
                REQUIRE(o.status == SolveStatus::Optimal);
                CHECK(*o.value == it->second.size);
                CHECK(o.witness == naive::to_set(it->second.witness));
            }
        }
        auto kap = kappa(dm);
        CHECK(kap.exact);
        CHECK(kap.value == ref.rbegin()->first);
        CHECK(k_value(dm, kap.witness) == kap.value);
    }
}

TEST_CASE("property: results do not depend on the thread count") {
    std::vector<FamilySpec> specs = {FamilySpec::cycle(24), FamilySpec::sparse(22, 3, 5), FamilySpec::binary_tree(3),
                                     FamilySpec::dense(16, 30, 2)};
    for (const auto& spec : specs) {
        DistanceMatrix dm(generate(spec));
        std::vector<std::size_t> ks = {1, 2, 3, 4, 5};
        SolverOptions one = with_threads(1), many = with_threads(8);
        one.max_card = many.max_card = 4;
        auto a = k_spectrum(dm, ks, one);
        auto b = k_spectrum(dm, ks, many);
        for (std::size_t k : ks) {
            CAPTURE(spec.describe());
            CAPTURE(k);
            CHECK(a.at(k).status == b.at(k).status);
            CHECK(a.at(k).value == b.at(k).value);
            CHECK(a.at(k).witness == b.at(k).witness);
        }
        auto p1 = anonymity_level(dm, 3, one);
        auto p8 = anonymity_level(dm, 3, many);
        CHECK(p1.level == p8.level);
        CHECK(p1.worst_witness == p8.worst_witness);
    }
}

TEST_CASE("property: kappa = n-1 iff a universal vertex exists (n <= 10)") {
    for (const Graph& g : small_graphs()) {
        bool universal = false;
        for (Vertex v = 0; v < g.order(); ++v) universal = universal || g.degree(v) + 1 == g.order();
        CHECK((naive::kappa(g) == g.order() - 1) == universal);
    }
}

TEST_CASE("property: trees have kappa >= 2") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 60; ++i) {
        Graph t = naive::random_tree(3 + rng() % 10, rng);
        CHECK(kappa(DistanceMatrix(t)).value >= 2);
    }
}

TEST_CASE("a disconnected 3-MARS in a tree") {
    // Spider with legs 0-1-5, 0-4-3, 0-6-2: the center plus the three leg ends
    // leave 1, 4, 6 with the same multiset {1,1,3,3}.
    const Edge e[] = {{0, 1}, {0, 4}, {0, 6}, {1, 5}, {2, 6}, {3, 4}};
    Graph t = build_graph(7, e);
    DistanceMatrix dm(t);
    const Vertex s[] = {0, 2, 3, 5};
    CHECK(k_value(dm, s) == 3);
    CHECK(naive::k_of(naive::bfs_all(t), {0, 2, 3, 5}) == 3);
    CHECK_FALSE(induces_connected_subgraph(t, s));
}

TEST_CASE("property: no smaller k-MARS exists below an Optimal value") {
    std::vector<FamilySpec> specs = {FamilySpec::cycle(14), FamilySpec::wheel(11), FamilySpec::binary_tree(3)};
    for (const auto& spec : specs) {
        Graph g = generate(spec);
        DistanceMatrix dm(g);
        auto ref = naive::bfs_all(g);
        for (std::size_t k = 1; k < g.order(); ++k) {
            auto o = msad(dm, k);
            if (o.status != SolveStatus::Optimal) continue;
            CHECK(is_k_mars(dm, o.witness, k));
            for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << g.order()); ++mask) {
                auto s = naive::members(mask, g.order());
                if (s.size() < *o.value) CHECK(naive::k_of(ref, s) != k);
            }
        }
    }
}

TEST_CASE("rotation-symmetric search on cycles") {
    DistanceMatrix c12(generate(FamilySpec::cycle(12)));
    auto w = find_rotation_symmetric_witness(c12, 2, 2);
    REQUIRE(w);
    CHECK(*w == VertexSet{0, 6});
    CHECK(k_value(c12, *w) == 2);
    // Every returned witness is a genuine k-MARS of the requested size.
    for (std::size_t k = 1; k < 12; ++k)
        for (std::size_t size = 1; size < 12; ++size)
            if (auto x = find_rotation_symmetric_witness(c12, k, size)) {
                CHECK(x->size() == size);
                CHECK(is_k_mars(c12, *x, k));
            }
    CHECK_THROWS(find_rotation_symmetric_witness(DistanceMatrix(generate(FamilySpec::path(5))), 2, 1));
}

}
