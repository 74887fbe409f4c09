#include "oracles.hpp"

#include <graphent/invariants.hpp>
#include <graphent/random.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace graphent;
using Catch::Approx;

TEST_CASE("invariants of named graphs", "[invariants]")
{
    struct Row {
        Graph g;
        int omega, chi, alpha;
        double alpha_frac;
    };
    const std::vector<Row> rows = {
        {complete_graph(5), 5, 5, 1, 1.0},
        {cycle_graph(5), 2, 3, 2, 2.5},
        {cycle_graph(7), 2, 3, 3, 3.5},
        {path_graph(4), 2, 2, 2, 2.0},
        {complete_bipartite_graph(3, 3), 2, 2, 3, 3.0},
        {petersen_graph(), 2, 3, 4, 5.0},
        {empty_graph(4), 1, 1, 4, 4.0},
    };
    for (const auto& r : rows) {
        CHECK(clique_number(r.g) == r.omega);
        CHECK(chromatic_number(r.g) == r.chi);
        CHECK(independence_number(r.g) == r.alpha);
        CHECK(fractional_independence(r.g) == Approx(r.alpha_frac).margin(1e-9));
    }
    CHECK(chromatic_number(Graph(0)) == 0);
}

TEST_CASE("clique, independence and chromatic numbers agree with enumeration", "[invariants][property]")
{
    Rng rng(17);
    for (int i = 0; i < 120; ++i) {
        const Graph g = random_graph(rng, rng.range(1, 8), rng.unit());
        const auto rec = compute_invariants(g);
        CHECK(rec.omega == oracle::clique_number(g));
        CHECK(rec.alpha == oracle::independence_number(g));
        CHECK(rec.chi == oracle::chromatic_number(g));
        CHECK(rec.edge_count == oracle::edge_count(g));
        CHECK(is_k_colorable(g, rec.chi));
        if (rec.chi > 0)
            CHECK_FALSE(is_k_colorable(g, rec.chi - 1));
        CHECK(greedy_coloring_bound(g) >= rec.chi);
        // the clique LP lies between alpha and the edge LP
        CHECK(rec.alpha <= rec.alpha_frac + 1e-9);
        CHECK(rec.alpha_frac <= fractional_vertex_packing(g) + 1e-9);
        const auto best = maximum_clique(g);
        for (std::size_t a = 0; a < best.size(); ++a)
            for (std::size_t b = a + 1; b < best.size(); ++b)
                CHECK(g.adjacent(best[a], best[b]));
    }
}

TEST_CASE("maximal cliques match enumeration", "[invariants][property]")
{
    Rng rng(23);
    for (int i = 0; i < 60; ++i) {
        const Graph g = random_graph(rng, rng.range(1, 8), rng.unit());
        const auto a = oracle::matrix(g);
        std::set<vertex_set> expected;
        const int n = g.order();
        for (std::uint32_t s = 1; s < (1U << n); ++s) {
            if (!oracle::is_clique(a, s))
                continue;
            bool maximal = true;
            for (int v = 0; v < n && maximal; ++v)
                if (!(s >> v & 1U) && oracle::is_clique(a, s | (1U << v)))
                    maximal = false;
            if (maximal)
                expected.insert(s);
        }
        const auto got = maximal_cliques(g);
        CHECK(std::set<vertex_set>(got.begin(), got.end()) == expected);
        CHECK(got.size() == expected.size());
    }
}

TEST_CASE("fractional vertex packing", "[invariants]")
{
    CHECK(fractional_vertex_packing(complete_graph(3)) == Approx(1.5).margin(1e-9));
    CHECK(fractional_vertex_packing(complete_graph(4)) == Approx(2.0).margin(1e-9));
    CHECK(fractional_vertex_packing(path_graph(3)) == Approx(2.0).margin(1e-9));
    CHECK(fractional_vertex_packing(empty_graph(3)) == Approx(3.0).margin(1e-9));
}

TEST_CASE("perfection on small graphs", "[invariants]")
{
    CHECK(is_perfect(complete_graph(5)));
    CHECK(is_perfect(cycle_graph(4)));
    CHECK(is_perfect(complete_bipartite_graph(2, 3)));
    CHECK_FALSE(is_perfect(cycle_graph(5)));
    CHECK_FALSE(is_perfect(complement(cycle_graph(7))));
    CHECK_FALSE(is_perfect(petersen_graph()));
}

TEST_CASE("chromatic gap checks", "[invariants]")
{
    const auto k5 = chromatic_gap_checks(complete_graph(5));
    CHECK(k5.edges == 10);
    CHECK(k5.edge_bound == Approx(5.0));
    CHECK(k5.edge_bound_tight);
    CHECK(k5.gap == 6);
    CHECK(k5.all_hold());
    const auto c5 = chromatic_gap_checks(cycle_graph(5));
    CHECK_FALSE(c5.brooks_applicable);
    CHECK_FALSE(c5.edge_bound_tight);
    CHECK(c5.all_hold());
    const auto p = chromatic_gap_checks(petersen_graph());
    CHECK(p.brooks_applicable);
    CHECK(p.all_hold());
    CHECK(max_clique_order_for_edges(10) == 5);
    CHECK(max_clique_order_for_edges(9) == 4);
    CHECK(max_clique_order_for_edges(1) == 2);
}

TEST_CASE("chromatic gap holds on random graphs", "[invariants][property]")
{
    Rng rng(29);
    for (int i = 0; i < 100; ++i) {
        const Graph g = random_graph(rng, rng.range(2, 8), rng.unit());
        if (g.edge_count() == 0)
            continue;
        const auto r = chromatic_gap_checks(g);
        CHECK(r.all_hold());
        CHECK(r.edge_bound_tight == (g.edge_count() == binom2(r.chi)));
    }
}
