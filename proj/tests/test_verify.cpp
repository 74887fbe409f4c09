#include <graphent/verify.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace graphent;

TEST_CASE("verify-all is deterministic per seed", "[verify]")
{
    VerifyOptions opt;
    opt.seed = 42;
    const auto a = verify_all(opt).summary();
    const auto b = verify_all(opt).summary();
    CHECK(a == b);
    opt.seed = 43;
    CHECK(verify_all(opt).summary() != a);
}

TEST_CASE("verify-all runs enough checks and every suite", "[verify]")
{
    const auto rep = verify_all();
    CHECK(rep.passed() + rep.failed() >= 1500);
    for (const auto& [name, fn] : suite_registry()) {
        const auto* s = rep.suite(name);
        REQUIRE(s != nullptr);
        CHECK(s->passed() > 0);
    }
    CHECK(rep.suite("no-such-suite") == nullptr);
}

TEST_CASE("failing tags at seed 42 are the two known false claims", "[verify]")
{
    const std::set<std::string> known = {"clique_generalization_copy_form", "clique_generalization_inj_form",
                                         "hom_ub_fractional_independence", "hom_ub_theta_perfect"};
    const auto rep = verify_all();
    for (const auto& s : rep.suites)
        for (const auto& [tag, t] : s.tallies())
            if (t.failed > 0) {
                INFO(s.name() << " / " << tag);
                CHECK(known.count(tag) == 1);
                CHECK_FALSE(t.counterexamples.empty());
            }
    CHECK(rep.suite("counting")->tag_ok("clique_count_inequality"));
    CHECK(rep.suite("hom-bounds")->tag_ok("hom_ub_edge_packing"));
    CHECK(rep.suite("hom-bounds")->tag_ok("kst_sandwich"));
}

TEST_CASE("run_suite reproduces the suite inside verify_all", "[verify]")
{
    VerifyOptions opt;
    opt.seed = 7;
    const auto rep = verify_all(opt);
    for (const auto& [name, fn] : suite_registry()) {
        const auto alone = run_suite(name, opt);
        const auto* inside = rep.suite(name);
        REQUIRE(inside != nullptr);
        CHECK(alone.passed() == inside->passed());
        CHECK(alone.failed() == inside->failed());
    }
    CHECK_THROWS_AS(run_suite("missing", opt), std::invalid_argument);
}

TEST_CASE("a corrupted theta value makes the sandwich suite fail by name", "[verify]")
{
    VerifyOptions opt;
    opt.theta_hook = [](const Graph&, double) { return -0.1; };
    const auto s = run_suite("sandwich", opt);
    CHECK_FALSE(s.ok());
    const auto& lower = s.tallies().at("sandwich_lower");
    CHECK(lower.failed > 0);
    REQUIRE_FALSE(lower.counterexamples.empty());
    // the first corpus entry is reported with its name and graph6 string
    CHECK(lower.counterexamples.front().rfind("K2 graph6:A_", 0) == 0);
    CHECK(lower.counterexamples.front().find("theta=-0.1") != std::string::npos);
    const auto summary = VerifyReport{opt.seed, opt.scale, {s}}.summary();
    CHECK(summary.find("counterexample: K2 graph6:A_") != std::string::npos);
}

TEST_CASE("full scale runs more checks", "[verify]")
{
    VerifyOptions small, full;
    full.scale = Scale::full;
    CHECK(run_suite("entropy", full).passed() > run_suite("entropy", small).passed());
}
