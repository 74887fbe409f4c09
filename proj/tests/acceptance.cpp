// Acceptance run: one PASS/FAIL line per criterion, seed 42, small scale.
//
// Two criteria contain claims that are false as stated and fail on honest
// computation. They are listed in `known_unattainable` with the reason; the
// exit status ignores a failure only when every failing tag of that criterion
// is one of the listed tags and every other tag of the criterion passed.

#include <graphent/verify.hpp>

#include <chrono>
#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <vector>

using namespace graphent;

namespace {

struct Criterion {
    std::string id;
    std::string title;
    std::vector<std::string> suites;
    double time_limit_s;
};

struct KnownFailure {
    std::set<std::string> tags;
    std::string reason;
};

const std::map<std::string, KnownFailure> known_unattainable = {
    {"AC6",
     {{"clique_generalization_copy_form", "clique_generalization_inj_form"},
      "the max-over-induced-types generalization of the clique inequality is false: the entropy step bounds "
      "E_S H(X_S) by a max over induced types where a sum is needed"}},
    {"AC7",
     {{"hom_ub_fractional_independence", "hom_ub_theta_perfect"},
      "hom(t,g) <= (2|E(g)|)^{a*} is false with the clique-constraint LP once t has a triangle "
      "(hom(K3,K4) = 24 > 12); the bound with the edge-constraint packing passes as hom_ub_edge_packing"}},
};

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point start)
{
    return std::chrono::duration<double>(clock_type::now() - start).count();
}

}  // namespace

int main()
{
    VerifyOptions opt;
    opt.seed = 42;

    const std::vector<Criterion> criteria = {
        {"AC1", "sandwich: omega <= theta(complement) <= chi, ceil(theta) <= chi", {"sandwich"}, 60},
        {"AC2", "theta numerics: C5, Petersen, srg closed form and spectra", {"theta-numerics"}, 600},
        {"AC3", "family bound exponents ordered and integer-exact", {"family-bounds"}, 600},
        {"AC4", "exact maximum intersecting families", {"extremal-families"}, 300},
        {"AC5", "partition pipeline counts for 2 <= t <= n <= 12", {"partitions"}, 600},
        {"AC6", "counting identities and clique inequalities", {"counting"}, 600},
        {"AC7", "hom-count upper bound and K_{s,t} sandwich", {"hom-bounds"}, 600},
        {"AC8", "entropy inequalities and equality cases", {"entropy"}, 600},
        {"AC9", "Sidorenko ratio comparison grid", {"sidorenko"}, 600},
    };

    int unexpected = 0;
    std::int64_t total_checks = 0;
    for (const auto& c : criteria) {
        const auto start = clock_type::now();
        std::set<std::string> failing;
        std::int64_t passed = 0, failed = 0;
        std::vector<std::string> examples;
        for (const auto& name : c.suites) {
            const auto suite = run_suite(name, opt);
            passed += suite.passed();
            failed += suite.failed();
            for (const auto& [tag, t] : suite.tallies()) {
                if (t.failed)
                    failing.insert(tag);
                if (t.failed && !t.counterexamples.empty())
                    examples.push_back(tag + ": " + t.counterexamples.front());
            }
        }
        const double elapsed = seconds_since(start);
        total_checks += passed + failed;
        const bool in_time = elapsed < c.time_limit_s;
        const bool pass = failing.empty() && in_time && passed > 0;
        std::printf("%s %s  %s  (%lld passed, %lld failed, %.2fs)\n", pass ? "PASS" : "FAIL", c.id.c_str(),
                    c.title.c_str(), static_cast<long long>(passed), static_cast<long long>(failed), elapsed);
        if (!in_time)
            std::printf("     over the %.0fs limit\n", c.time_limit_s);
        for (const auto& e : examples)
            std::printf("     %s\n", e.c_str());
        if (pass)
            continue;
        auto known = known_unattainable.find(c.id);
        bool explained = known != known_unattainable.end() && in_time;
        if (explained)
            for (const auto& tag : failing)
                explained = explained && known->second.tags.count(tag) > 0;
        if (explained) {
            std::printf("     known unattainable: %s\n", known->second.reason.c_str());
        } else {
            ++unexpected;
        }
    }

    {
        const auto start = clock_type::now();
        const std::string first = verify_all(opt).summary();
        const double one_run = seconds_since(start);
        const std::string second = verify_all(opt).summary();
        const bool identical = first == second;
        const bool in_time = one_run < 600;
        std::printf("%s AC10  verify-all deterministic for a fixed seed and within time  (%s, %.2fs per run)\n",
                    identical && in_time ? "PASS" : "FAIL", identical ? "byte-identical" : "summaries differ",
                    one_run);
        if (!(identical && in_time))
            ++unexpected;
    }

    std::printf("checks run: %lld\n", static_cast<long long>(total_checks));
    std::printf("%s\n", unexpected == 0 ? "acceptance: no unexplained failures" : "acceptance: unexplained failures");
    return unexpected == 0 ? 0 : 1;
}
