#include "oracles.hpp"

#include <graphent/entropy.hpp>
#include <graphent/random.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace graphent;
using Catch::Approx;

namespace {

/// Entropy of the projection onto `coords`, recomputed from the raw support.
double entropy_of(const JointPmf& pmf, Subset coords)
{
    std::map<std::vector<int>, double> proj;
    for (const auto& [x, p] : pmf.support()) {
        std::vector<int> key;
        for (int i = 0; i < pmf.n(); ++i)
            if (coords >> i & 1U)
                key.push_back(x[i]);
        proj[key] += p;
    }
    std::vector<double> probs;
    for (const auto& [k, p] : proj)
        probs.push_back(p);
    return oracle::entropy_bits(probs);
}

JointPmf copies_of_one_coin(int n)
{
    return JointPmf(std::vector<int>(n, 2), {{std::vector<int>(n, 0), 0.5}, {std::vector<int>(n, 1), 0.5}});
}

}  // namespace

TEST_CASE("entropy of simple distributions", "[entropy]")
{
    CHECK(joint_entropy(uniform_product_pmf({2, 2, 2})) == Approx(3.0).margin(1e-12));
    CHECK(joint_entropy(uniform_product_pmf({3})) == Approx(std::log2(3.0)).margin(1e-12));
    CHECK(joint_entropy(copies_of_one_coin(4)) == Approx(1.0).margin(1e-12));
    const JointPmf biased({2}, {{{0}, 0.25}, {{1}, 0.75}});
    CHECK(joint_entropy(biased) == Approx(-0.25 * std::log2(0.25) - 0.75 * std::log2(0.75)).margin(1e-12));
    const JointPmf point({3, 3}, {{{1, 2}, 1.0}});
    CHECK(joint_entropy(point) == Approx(0.0).margin(1e-15));
}

TEST_CASE("pmf validation", "[entropy]")
{
    CHECK_THROWS_AS(JointPmf({2}, {{{0}, 0.5}}), std::invalid_argument);
    CHECK_THROWS_AS(JointPmf({2}, {{{2}, 1.0}}), std::invalid_argument);
    CHECK_THROWS_AS(JointPmf({2}, {{{0, 1}, 1.0}}), std::invalid_argument);
    CHECK_THROWS_AS(JointPmf({2}, {{{0}, -0.5}, {{1}, 1.5}}), std::invalid_argument);
    CHECK_THROWS_AS(JointPmf({2}, {{{0}, std::nan("")}}), std::invalid_argument);
    CHECK_THROWS_AS(JointPmf({}, {}), std::invalid_argument);
    CHECK_THROWS_AS(JointPmf({0}, {}), std::invalid_argument);
}

TEST_CASE("marginal entropies match independent projection", "[entropy][property]")
{
    Rng rng(41);
    for (int i = 0; i < 100; ++i) {
        const JointPmf pmf = random_pmf(rng, rng.range(1, 5), 3);
        const Subset s = rng.uniform(ground_set(pmf.n()) + 1);
        CHECK(marginal_entropy(pmf, s) == Approx(entropy_of(pmf, s)).margin(1e-12));
    }
}

TEST_CASE("cover families", "[entropy]")
{
    const auto loo = CoverFamily::leave_one_out(4);
    CHECK(loo.k == 3);
    CHECK(loo.min_coverage() == 3);
    CHECK_NOTHROW(loo.validate());
    CoverFamily weak{3, {subset_of({0, 1}), subset_of({1, 2})}, 2};
    CHECK_THROWS_AS(weak.validate(), std::invalid_argument);
    CoverFamily outside{2, {subset_of({0, 2})}, 1};
    CHECK_THROWS_AS(outside.validate(), std::invalid_argument);
}

TEST_CASE("Shearer holds on random pmfs and covers", "[entropy][property]")
{
    Rng rng(43);
    for (int i = 0; i < 300; ++i) {
        const int n = rng.range(1, 6);
        const JointPmf pmf = random_pmf(rng, n, 3);
        const CoverFamily cover = random_cover(rng, n);
        const auto r = shearer_check(pmf, cover);
        double rhs = 0;
        for (Subset s : cover.subsets)
            rhs += entropy_of(pmf, s);
        CHECK(r.lhs == Approx(cover.k * entropy_of(pmf, ground_set(n))).margin(1e-12));
        CHECK(r.rhs == Approx(rhs).margin(1e-12));
        CHECK(r.holds);
        CHECK(r.lhs <= r.rhs + 1e-9);
    }
}

TEST_CASE("Shearer and subadditivity are tight for independent coordinates", "[entropy]")
{
    const JointPmf pmf = uniform_product_pmf({2, 3, 2, 3});
    const auto sub = shearer_check(pmf, CoverFamily::singletons(4));
    CHECK(std::abs(sub.lhs - sub.rhs) <= 1e-9);
    const auto loo = shearer_check(pmf, CoverFamily::leave_one_out(4));
    CHECK(std::abs(loo.lhs - loo.rhs) <= 1e-9);
}

TEST_CASE("Han's inequality and its equality cases", "[entropy]")
{
    Rng rng(47);
    for (int i = 0; i < 200; ++i) {
        const JointPmf pmf = random_pmf(rng, rng.range(2, 6), 3);
        const auto r = han_check(pmf);
        CHECK(r.lower_holds);
        CHECK(r.upper_holds);
    }
    // independent coordinates: the leave-one-out sum equals (n-1) H
    const auto ind = han_check(uniform_product_pmf({2, 2, 3}));
    CHECK(std::abs(ind.lower - ind.middle) <= 1e-9);
    // identical coordinates: every leave-one-out marginal carries all of H
    const auto same = han_check(copies_of_one_coin(4));
    CHECK(std::abs(same.middle - same.upper) <= 1e-9);
    CHECK_THROWS_AS(han_check(uniform_product_pmf({2})), std::invalid_argument);
}

TEST_CASE("trace of a set family", "[entropy]")
{
    const std::vector<Subset> fam = {subset_of({0, 1}), subset_of({1, 2}), subset_of({0, 2}), subset_of({0})};
    const auto t = trace(fam, subset_of({0, 1}));
    CHECK(t == std::vector<Subset>{subset_of({0}), subset_of({1}), subset_of({0, 1})});
}

TEST_CASE("combinatorial Shearer on random families", "[entropy][property]")
{
    Rng rng(53);
    for (int i = 0; i < 200; ++i) {
        const int n = rng.range(1, 6);
        std::vector<Subset> fam;
        const int size = rng.range(1, 20);
        for (int j = 0; j < size; ++j)
            fam.push_back(rng.uniform(ground_set(n) + 1));
        const CoverFamily cover = random_cover(rng, n);
        const auto r = combinatorial_shearer_check(fam, cover);
        const std::set<Subset> distinct(fam.begin(), fam.end());
        CHECK(r.lhs == distinct.size());
        double log_rhs = 0;
        for (Subset s : cover.subsets) {
            std::set<Subset> tr;
            for (Subset a : distinct)
                tr.insert(a & s);
            log_rhs += std::log2(static_cast<double>(tr.size()));
        }
        CHECK(r.log2_rhs == Approx(log_rhs / cover.k).margin(1e-12));
        CHECK(r.holds);
    }
}

TEST_CASE("combinatorial Shearer is tight for the power set", "[entropy]")
{
    std::vector<Subset> all;
    for (Subset s = 0; s <= ground_set(4); ++s)
        all.push_back(s);
    const auto r = combinatorial_shearer_check(all, CoverFamily::leave_one_out(4));
    CHECK(std::abs(r.log2_lhs - r.log2_rhs) <= 1e-9);
}

TEST_CASE("probabilistic Shearer", "[entropy][property]")
{
    Rng rng(59);
    for (int i = 0; i < 200; ++i) {
        const int n = rng.range(1, 6);
        const JointPmf pmf = random_pmf(rng, n, 3);
        const auto d = random_subset_distribution(rng, n);
        const auto r = probabilistic_shearer_check(pmf, d);
        CHECK(r.holds);
    }
    // S = [n] with probability one and theta = 1 is an equality
    const JointPmf pmf = random_pmf(rng, 4, 3);
    const SubsetDistribution full{4, {{ground_set(4), 1.0}}, 1.0};
    const auto eq = probabilistic_shearer_check(pmf, full);
    CHECK(std::abs(eq.lhs - eq.rhs) <= 1e-9);
    // uniform s-subsets of independent coordinates: E H(X_S) = (s/t) H
    const auto unif = SubsetDistribution::uniform_of_size(5, 2);
    CHECK(unif.theta == Approx(0.4));
    const auto ind = probabilistic_shearer_check(uniform_product_pmf({3, 3, 3, 3, 3}), unif);
    CHECK(std::abs(ind.lhs - ind.rhs) <= 1e-9);
    const SubsetDistribution too_high{2, {{subset_of({0}), 1.0}}, 0.5};
    CHECK_THROWS_AS(too_high.validate(), std::invalid_argument);
}
