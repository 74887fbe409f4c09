#include <graphent/optim.hpp>
#include <graphent/random.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <numbers>

using namespace graphent;
using Catch::Approx;

namespace {

SymMatrix path_adjacency(int p)
{
    SymMatrix m(p);
    for (int i = 0; i + 1 < p; ++i) {
        m(i, i + 1) = 1;
        m(i + 1, i) = 1;
    }
    return m;
}

}  // namespace

TEST_CASE("Jacobi eigenvalues of a path match the closed form", "[optim][eigen]")
{
    for (int p = 1; p <= 9; ++p) {
        const auto ev = sym_eigenvalues(path_adjacency(p));
        REQUIRE(ev.size() == static_cast<std::size_t>(p));
        // eigenvalues of P_p are 2 cos(pi k / (p+1)), k = 1..p, descending in k
        for (int k = 1; k <= p; ++k)
            CHECK(ev[k - 1] == Approx(2 * std::cos(std::numbers::pi * k / (p + 1))).margin(1e-10));
    }
}

TEST_CASE("eigen decomposition reconstructs random symmetric matrices", "[optim][eigen][property]")
{
    Rng rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        const int p = rng.range(1, 12);
        SymMatrix m(p);
        for (int i = 0; i < p; ++i)
            for (int j = i; j < p; ++j) {
                const double x = 2 * rng.unit() - 1;
                m(i, j) = x;
                m(j, i) = x;
            }
        const auto d = sym_eigen(m);
        for (std::size_t k = 1; k < d.values.size(); ++k)
            CHECK(d.values[k - 1] >= d.values[k]);
        double trace = 0;
        for (int i = 0; i < p; ++i)
            trace += m(i, i);
        double sum = 0;
        for (double v : d.values)
            sum += v;
        CHECK(sum == Approx(trace).margin(1e-9));
        for (int i = 0; i < p; ++i)
            for (int j = 0; j < p; ++j) {
                double r = 0;
                for (int k = 0; k < p; ++k)
                    r += d.vectors(i, k) * d.values[k] * d.vectors(j, k);
                CHECK(r == Approx(m(i, j)).margin(1e-9));
            }
    }
}

TEST_CASE("asymmetric input is rejected", "[optim]")
{
    const std::vector<double> a = {1, 2, 3, 4};
    CHECK_THROWS_AS(SymMatrix(2, a), std::invalid_argument);
    const std::vector<double> b = {1, 2, 2, 4};
    CHECK_NOTHROW(SymMatrix(2, b));
}

TEST_CASE("simplex solves small textbook LPs", "[optim][lp]")
{
    // max 3x + 5y, x <= 4, 2y <= 12, 3x + 2y <= 18: optimum 36 at (2, 6)
    LpProblem lp{{3, 5}, {{{1, 0}, 4}, {{0, 2}, 12}, {{3, 2}, 18}}};
    const auto sol = lp_maximize(lp);
    CHECK(sol.value == Approx(36).margin(1e-9));
    CHECK(sol.x[0] == Approx(2).margin(1e-9));
    CHECK(sol.x[1] == Approx(6).margin(1e-9));
    // strong duality
    double dual = 0;
    for (std::size_t i = 0; i < lp.constraints.size(); ++i)
        dual += sol.dual[i] * lp.constraints[i].rhs;
    CHECK(dual == Approx(36).margin(1e-9));
}

TEST_CASE("simplex handles negative right-hand sides", "[optim][lp]")
{
    // max x + y, x + y <= 3, -x <= -1 (x >= 1), -y <= -1: optimum 3
    LpProblem lp{{1, 1}, {{{1, 1}, 3}, {{-1, 0}, -1}, {{0, -1}, -1}}};
    CHECK(lp_maximize(lp).value == Approx(3).margin(1e-9));
    // x >= 2 and x <= 1 is infeasible
    LpProblem bad{{1}, {{{1}, 1}, {{-1}, -2}}};
    try {
        lp_maximize(bad);
        FAIL("expected infeasible");
    } catch (const lp_error& e) {
        CHECK(e.kind() == lp_error::Kind::infeasible);
    }
}

TEST_CASE("unbounded LP is reported", "[optim][lp]")
{
    LpProblem lp{{1, 1}, {{{1, -1}, 1}}};
    try {
        lp_maximize(lp);
        FAIL("expected unbounded");
    } catch (const lp_error& e) {
        CHECK(e.kind() == lp_error::Kind::unbounded);
    }
    LpProblem ragged{{1, 1}, {{{1}, 1}}};
    CHECK_THROWS_AS(lp_maximize(ragged), std::invalid_argument);
}

TEST_CASE("LP optimum beats every random feasible point", "[optim][lp][property]")
{
    Rng rng(9);
    for (int trial = 0; trial < 40; ++trial) {
        const int vars = rng.range(1, 5), rows = rng.range(1, 6);
        LpProblem lp;
        for (int j = 0; j < vars; ++j)
            lp.objective.push_back(rng.unit());
        for (int i = 0; i < rows; ++i) {
            LpConstraint c;
            for (int j = 0; j < vars; ++j)
                c.coeffs.push_back(rng.unit() + 0.05);
            c.rhs = 1 + rng.unit();
            lp.constraints.push_back(c);
        }
        const auto sol = lp_maximize(lp);
        for (const auto& c : lp.constraints) {
            double lhs = 0;
            for (int j = 0; j < vars; ++j)
                lhs += c.coeffs[j] * sol.x[j];
            CHECK(lhs <= c.rhs + 1e-9);
        }
        for (int probe = 0; probe < 50; ++probe) {
            std::vector<double> x(vars);
            for (auto& v : x)
                v = rng.unit();
            double scale = 1;
            for (const auto& c : lp.constraints) {
                double lhs = 0;
                for (int j = 0; j < vars; ++j)
                    lhs += c.coeffs[j] * x[j];
                scale = std::min(scale, c.rhs / lhs);
            }
            double val = 0;
            for (int j = 0; j < vars; ++j)
                val += lp.objective[j] * x[j] * scale;
            CHECK(val <= sol.value + 1e-9);
        }
    }
}

TEST_CASE("SDP with no zero pattern has value p", "[optim][sdp]")
{
    // max <J, X> over tr X = 1, X psd: attained by J/p with value p
    for (int p = 1; p <= 5; ++p) {
        SdpProblem prob{p, {}};
        CHECK(sdp_theta(prob) == Approx(p).margin(1e-5));
    }
}

TEST_CASE("SDP with complete zero pattern has value 1", "[optim][sdp]")
{
    SdpProblem prob{4, {}};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            prob.zero_pattern.emplace_back(i, j);
    CHECK(sdp_theta(prob) == Approx(1).margin(1e-5));
}

TEST_CASE("SDP non-convergence raises with the best iterate", "[optim][sdp]")
{
    SdpProblem prob{5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}};
    SdpOptions opt;
    opt.max_iterations = 2;
    CHECK_THROWS_AS(sdp_theta(prob, opt), sdp_error);
    SdpProblem bad{3, {{0, 0}}};
    CHECK_THROWS_AS(solve_sdp(bad), std::invalid_argument);
}

TEST_CASE("guarded ceiling", "[optim]")
{
    CHECK(guarded_ceil(2.5) == 3);
    CHECK(guarded_ceil(2.99995) == 3);
    CHECK(guarded_ceil(3.00005) == 3);
    CHECK(guarded_ceil(3.0002) == 4);
    CHECK(guarded_ceil(2.0) == 2);
    CHECK(guarded_ceil(std::sqrt(5.0)) == 3);
}
