#include "oracles.hpp"

#include <graphent/homomorphisms.hpp>
#include <graphent/random.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace graphent;

namespace {

BigInt big(std::int64_t x) { return BigInt(x); }

Graph k2_plus_k1()
{
    Graph g(3);
    g.add_edge(0, 1);
    return g;
}

}  // namespace

TEST_CASE("hom counts of small pairs", "[hom]")
{
    const Graph p = petersen_graph();
    CHECK(hom_count(complete_graph(2), p) == 30);
    CHECK(hom_count(complete_graph(3), complete_graph(3)) == 6);
    CHECK(hom_count(cycle_graph(4), complete_graph(2)) == 2);
    // closed walks: hom(C_k, g) = sum of k-th powers of eigenvalues
    CHECK(hom_count(cycle_graph(5), p) == 243 + 5 - 4 * 32);
    CHECK(hom_count(cycle_graph(4), complete_bipartite_graph(3, 3)) == 162);
    // hom(g, K_k) is the chromatic polynomial at k
    CHECK(hom_count(cycle_graph(5), complete_graph(3)) == 30);
    CHECK(hom_count(Graph(0), p) == 1);
    CHECK(hom_count(complete_graph(1), Graph(0)) == 0);
}

TEST_CASE("injective, automorphism and copy counts", "[hom]")
{
    const Graph p = petersen_graph();
    CHECK(inj_count(complete_graph(2), complete_graph(3)) == 6);
    CHECK(inj_count(cycle_graph(5), p) == 120);
    CHECK(inj_count(complete_graph(4), p) == 0);
    CHECK(inj_count(complete_graph(4), complete_graph(3)) == 0);
    for (int t = 1; t <= 6; ++t)
        CHECK(aut_count(complete_graph(t)) == factorial(t));
    CHECK(aut_count(cycle_graph(5)) == 10);
    CHECK(aut_count(complete_bipartite_graph(2, 3)) == 12);
    CHECK(aut_count(p) == 120);
    CHECK(copy_count(complete_graph(2), p) == 15);
    CHECK(copy_count(cycle_graph(5), p) == 12);
    CHECK(copy_count(complete_graph(3), complete_graph(4)) == 4);
    CHECK(copy_count_by_images(cycle_graph(5), p) == 12);
}

TEST_CASE("counts agree with full enumeration", "[hom][property]")
{
    Rng rng(61);
    for (int i = 0; i < 100; ++i) {
        const Graph h = random_graph(rng, rng.range(1, 5), rng.unit());
        const Graph g = random_graph(rng, rng.range(1, 7), rng.unit());
        const auto want = oracle::counts(h, g);
        const auto got = hom_counts(h, g);
        CHECK(got.hom == big(want.hom));
        CHECK(got.inj == big(want.inj));
        CHECK(got.aut == big(want.aut));
        CHECK(got.copies == big(want.copies));
        CHECK(got.inj == got.aut * got.copies);
        CHECK(hom_count(h, g, CountMethod::brute_force) == hom_count(h, g, CountMethod::backtracking));
        CHECK(copy_count_by_images(h, g) == got.copies);
    }
}

TEST_CASE("brute force refuses oversized map spaces", "[hom]")
{
    CHECK_THROWS_AS(hom_count(complete_graph(12), complete_graph(10), CountMethod::brute_force), count_error);
}

TEST_CASE("K_{s,t} fast path", "[hom]")
{
    const Graph c4 = cycle_graph(4);
    CHECK(hom_kst_fast(1, 1, petersen_graph()) == 30);
    CHECK(hom_kst_fast(1, 2, c4) == 16);
    CHECK(hom_kst_fast(2, 2, complete_bipartite_graph(3, 3)) == hom_count(cycle_graph(4), complete_bipartite_graph(3, 3)));
    Rng rng(67);
    for (int i = 0; i < 40; ++i) {
        const Graph g = random_graph(rng, rng.range(1, 8), rng.unit());
        const int s = rng.range(1, 3), t = rng.range(1, 3);
        CHECK(hom_kst_fast(s, t, g) == big(oracle::counts(complete_bipartite_graph(s, t), g).hom));
    }
}

TEST_CASE("clique profiles", "[hom][cliques]")
{
    CHECK(clique_profile(complete_graph(4)).counts == std::vector<BigInt>{4, 6, 4, 1});
    const auto p = clique_profile(petersen_graph());
    CHECK(p.at(1) == 10);
    CHECK(p.at(2) == 15);
    for (int l = 3; l <= 10; ++l)
        CHECK(p.at(l) == 0);
    CHECK(clique_profile(cycle_graph(5)).counts == std::vector<BigInt>{5, 5, 0, 0, 0});
    Rng rng(71);
    for (int i = 0; i < 50; ++i) {
        const Graph g = random_graph(rng, rng.range(1, 9), 0.5);
        const auto want = oracle::clique_counts(g);
        const auto got = clique_profile(g);
        for (int l = 1; l <= g.order(); ++l) {
            CHECK(got.at(l) == big(want[l - 1]));
            CHECK(got.at(l) == copy_count(complete_graph(l), g));
        }
    }
}

TEST_CASE("clique count inequality", "[hom][cliques]")
{
    const auto k4 = clique_inequality_check(complete_graph(4), 2, 3);
    CHECK(k4.lhs == 576);
    CHECK(k4.rhs == 1728);
    CHECK(k4.holds);
    const auto k3 = clique_inequality_check(complete_graph(3), 2, 3);
    CHECK(k3.lhs == 36);
    CHECK(k3.rhs == 216);
    const auto free = clique_inequality_check(petersen_graph(), 2, 3);
    CHECK(free.lhs == 0);
    CHECK(free.holds);
    CHECK_THROWS_AS(clique_inequality_check(complete_graph(4), 3, 3), std::invalid_argument);
    CHECK_THROWS_AS(clique_inequality_check(complete_graph(4), 2, 5), std::invalid_argument);
    Rng rng(73);
    for (int i = 0; i < 200; ++i) {
        const Graph g = random_graph(rng, rng.range(3, 9), 0.5);
        for (int s = 2; s < g.order(); ++s)
            for (int t = s + 1; t <= g.order(); ++t)
                CHECK(clique_inequality_check(g, s, t).holds);
    }
}

TEST_CASE("generalized clique check on the stated examples", "[hom][cliques]")
{
    // K_4 with T = K_3 and s = 2 reduces to the clique inequality
    const auto k4 = generalized_clique_check(complete_graph(4), complete_graph(3), 2);
    const auto plain = clique_inequality_check(complete_graph(4), 2, 3);
    CHECK(k4.lhs == plain.lhs);
    CHECK(k4.rhs == plain.rhs);
    CHECK(k4.holds);

    const auto c5 = generalized_clique_check(cycle_graph(5), path_graph(4), 2);
    CHECK(c5.holds);
    CHECK(c5.inj_form_holds);

    // Petersen with T = C5, s = 3: holds, but the maximizing type is K2+K1.
    // Types of C5 on three vertices are P3 and K2+K1. As subgraphs of Petersen
    // there are 30 copies of P3 (10 centres, 3 neighbour pairs each) and
    // 15 * 8 = 120 copies of K2+K1.
    const Graph p = petersen_graph();
    const auto r = generalized_clique_check(p, cycle_graph(5), 3);
    CHECK(r.holds);
    CHECK(r.inj_form_holds);
    CHECK(copy_count(path_graph(3), p) == 30);
    CHECK(copy_count(k2_plus_k1(), p) == 120);
    CHECK(oracle::isomorphic(r.argmax, k2_plus_k1()));
    CHECK_FALSE(oracle::isomorphic(r.argmax, path_graph(3)));
    CHECK(r.lhs == pow_big(factorial(5) * 12, 3));
    CHECK(r.rhs == pow_big(factorial(3) * 120, 5));
}

TEST_CASE("generalized clique check rejects bad input", "[hom][cliques]")
{
    CHECK_THROWS_AS(generalized_clique_check(petersen_graph(), complete_graph(3), 2), std::invalid_argument);
    CHECK_THROWS_AS(generalized_clique_check(cycle_graph(5), path_graph(4), 4), std::invalid_argument);
    CHECK_THROWS_AS(generalized_clique_check(cycle_graph(5), cycle_graph(5), 2), std::invalid_argument);
}

TEST_CASE("generalized clique inequality has counterexamples", "[hom][cliques]")
{
    // A 6-vertex host and a 4-vertex T whose copy count exceeds what the
    // single best 2-vertex type allows.
    const Graph g = parse_graph6("Erto");
    const Graph t = parse_graph6("CU");
    const auto r = generalized_clique_check(g, t, 2);
    CHECK(r.lhs == 1166400);
    CHECK(r.rhs == 810000);
    CHECK_FALSE(r.holds);
    CHECK_FALSE(r.inj_form_holds);
    // the oracle reproduces both sides
    const int tt = t.order();
    const auto m_t = oracle::counts(t, g).copies;
    CHECK(r.lhs == pow_big(factorial(tt) * m_t, 2));
    BigInt best = 0;
    for (const Graph& s : enumerate_induced(t, 2))
        best = std::max(best, pow_big(factorial(2) * oracle::counts(s, g).copies, static_cast<unsigned>(tt)));
    CHECK(r.rhs == best);
}

TEST_CASE("hom upper bound via fractional packings", "[hom][bounds]")
{
    const Graph p = petersen_graph();
    const auto edge = hom_ub_check(complete_graph(2), p);
    CHECK(edge.hom == 30);
    CHECK(edge.bound == Catch::Approx(30.0));
    CHECK(edge.holds);
    const auto c4 = hom_ub_check(cycle_graph(4), complete_bipartite_graph(3, 3));
    CHECK(c4.hom == 162);
    CHECK(c4.bound == Catch::Approx(324.0));
    CHECK(c4.holds);
    CHECK(c4.perfect);
    CHECK(c4.theta_holds);
    const auto c5 = hom_ub_check(cycle_graph(5), p);
    CHECK(c5.alpha_frac == Catch::Approx(2.5));
    CHECK(c5.bound == Catch::Approx(std::pow(30.0, 2.5)));
    CHECK(c5.holds);
    CHECK_THROWS_AS(hom_ub_check(empty_graph(2), p), std::invalid_argument);

    // with the clique LP the bound fails for a triangle: hom(K3,K4) = 24 > 12^1
    const auto tri = hom_ub_check(complete_graph(3), complete_graph(4));
    CHECK(tri.hom == 24);
    CHECK(tri.alpha_frac == Catch::Approx(1.0));
    CHECK_FALSE(tri.holds);
    // the edge LP gives 3/2 and 12^{3/2} > 24
    CHECK(tri.edge_packing == Catch::Approx(1.5));
    CHECK(tri.edge_packing_holds);
}

TEST_CASE("edge-packing bound holds on random pairs", "[hom][bounds][property]")
{
    Rng rng(79);
    for (int i = 0; i < 80; ++i) {
        const Graph t = random_graph_without_isolated(rng, rng.range(2, 5), rng.unit());
        const Graph g = random_graph_without_isolated(rng, rng.range(2, 7), rng.unit());
        const auto r = hom_ub_check(t, g, false);
        CHECK(r.hom == big(oracle::counts(t, g).hom));
        CHECK(r.edge_packing_holds);
    }
}

TEST_CASE("big integer helpers", "[hom]")
{
    CHECK(factorial(0) == 1);
    CHECK(factorial(20) == BigInt("2432902008176640000"));
    CHECK(pow_big(2, 100) == BigInt("1267650600228229401496703205376"));
    CHECK(log2_big(pow_big(2, 100)) == Catch::Approx(100.0));
    CHECK(log2_big(BigInt(1000)) == Catch::Approx(std::log2(1000.0)));
}
