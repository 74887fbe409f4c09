#pragma once

#include <graphent/bounds.hpp>
#include <graphent/entropy.hpp>
#include <graphent/families.hpp>
#include <graphent/graph.hpp>
#include <graphent/homomorphisms.hpp>
#include <graphent/invariants.hpp>
#include <graphent/random.hpp>
#include <graphent/theta.hpp>

#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace graphent {

struct NamedGraph {
    std::string name;
    Graph graph;
};

/// K_2..K_6, C_5, C_7, P_4, K_{2,3}, K_{3,3}, Petersen.
inline std::vector<NamedGraph> standard_corpus()
{
    std::vector<NamedGraph> out;
    for (int t = 2; t <= 6; ++t)
        out.push_back({"K" + std::to_string(t), complete_graph(t)});
    out.push_back({"C5", cycle_graph(5)});
    out.push_back({"C7", cycle_graph(7)});
    out.push_back({"P4", path_graph(4)});
    out.push_back({"K2,3", complete_bipartite_graph(2, 3)});
    out.push_back({"K3,3", complete_bipartite_graph(3, 3)});
    out.push_back({"petersen", petersen_graph()});
    return out;
}

inline std::string describe(const Graph& g) { return "graph6:" + encode_graph6(g); }

struct Tally {
    std::int64_t passed = 0;
    std::int64_t failed = 0;
    std::vector<std::string> counterexamples;  // first few, verbatim
};

inline constexpr std::size_t kept_counterexamples = 5;

/// Pass/fail counts per check tag for one suite.
class SuiteResult {
public:
    explicit SuiteResult(std::string name = {}) : name_(std::move(name)) {}

    const std::string& name() const { return name_; }

    bool check(const std::string& tag, bool ok, const std::function<std::string()>& instance)
    {
        auto& t = tallies_[tag];
        if (ok) {
            ++t.passed;
        } else {
            ++t.failed;
            if (t.counterexamples.size() < kept_counterexamples)
                t.counterexamples.push_back(instance());
        }
        return ok;
    }

    void note(std::string text) { notes_.push_back(std::move(text)); }

    const std::map<std::string, Tally>& tallies() const { return tallies_; }
    const std::vector<std::string>& notes() const { return notes_; }

    std::int64_t passed() const
    {
        std::int64_t n = 0;
        for (const auto& [tag, t] : tallies_)
            n += t.passed;
        return n;
    }

    std::int64_t failed() const
    {
        std::int64_t n = 0;
        for (const auto& [tag, t] : tallies_)
            n += t.failed;
        return n;
    }

    bool ok() const { return failed() == 0; }

    bool tag_ok(const std::string& tag) const
    {
        auto it = tallies_.find(tag);
        return it != tallies_.end() && it->second.failed == 0 && it->second.passed > 0;
    }

private:
    std::string name_;
    std::map<std::string, Tally> tallies_;
    std::vector<std::string> notes_;
};

enum class Scale { small, full };

struct VerifyOptions {
    std::uint64_t seed = 42;
    Scale scale = Scale::small;
    /// Replaces each computed theta of a complement (fault injection in tests).
    std::function<double(const Graph& h, double computed)> theta_hook;
};

namespace detail {

inline int scaled(const VerifyOptions& opt, int small_count) { return opt.scale == Scale::full ? 4 * small_count : small_count; }

inline double theta_value(const VerifyOptions& opt, const Graph& h)
{
    const double v = theta_of_complement(h).sdp_value;
    return opt.theta_hook ? opt.theta_hook(h, v) : v;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Suites

/// omega <= theta(complement) <= chi and ceil(theta) <= chi on the corpus and random graphs.
inline SuiteResult sandwich_suite(Rng& rng, const VerifyOptions& opt)
{
    SuiteResult r("sandwich");
    auto graphs = standard_corpus();
    const int randoms = detail::scaled(opt, 50);
    for (int i = 0; i < randoms; ++i) {
        const int n = rng.range(2, 8);
        graphs.push_back({"random#" + std::to_string(i), random_graph(rng, n, 0.2 + 0.6 * rng.unit())});
    }
    for (const auto& [name, h] : graphs) {
        const int omega = clique_number(h);
        const int chi = chromatic_number(h);
        const double theta = detail::theta_value(opt, h);
        const auto inst = [&, name = name, h = h] {
            std::ostringstream os;
            os << name << " " << describe(h) << " omega=" << omega << " theta=" << theta << " chi=" << chi;
            return os.str();
        };
        r.check("sandwich_lower", omega <= theta + 1e-4, inst);
        r.check("sandwich_upper", theta <= chi + 1e-4, inst);
        r.check("theta_ceiling_le_chromatic", guarded_ceil(theta) <= chi, inst);
        if (h.edge_count() > 0)
            r.check("spectral_admissible", spectral_lower_bound(h) <= theta + 1e-4, inst);
    }
    return r;
}

/// Closed-form theta values and srg spectra.
inline SuiteResult theta_numerics_suite(Rng&, const VerifyOptions& opt)
{
    SuiteResult r("theta-numerics");
    const struct {
        std::string name;
        Graph g;
        SrgParams params;
        double expected;
    } cases[] = {
        {"C5", cycle_graph(5), {5, 2, 0, 1}, std::sqrt(5.0)},
        {"petersen", petersen_graph(), {10, 3, 0, 1}, 2.5},
    };
    for (const auto& c : cases) {
        const double theta = detail::theta_value(opt, c.g);
        const double closed = theta_srg_closed_form(c.params);
        const auto inst = [&] {
            std::ostringstream os;
            os.precision(12);
            os << c.name << " srg(" << c.params.to_string() << ") sdp=" << theta << " closed=" << closed;
            return os.str();
        };
        r.check("theta_sdp_value", std::abs(theta - c.expected) <= 1e-4, inst);
        r.check("theta_srg_closed_form", std::abs(closed - c.expected) <= 1e-10, inst);
        r.check("theta_srg_matches_sdp", std::abs(theta - closed) <= 1e-4, inst);
        const auto detected = detect_srg(c.g);
        r.check("srg_detected", detected && *detected == c.params, inst);

        const auto spec = srg_eigen(c.params);
        const auto ev = sym_eigenvalues(adjacency_matrix(c.g));
        int near_r1 = 0, near_r2 = 0;
        for (double x : ev) {
            near_r1 += std::abs(x - spec.r1) <= 1e-8;
            near_r2 += std::abs(x - spec.r2) <= 1e-8;
        }
        const auto spec_inst = [&] {
            std::ostringstream os;
            os.precision(12);
            os << c.name << " r1=" << spec.r1 << " m1=" << spec.m1 << " r2=" << spec.r2 << " m2=" << spec.m2
               << " numeric counts " << near_r1 << "," << near_r2;
            return os.str();
        };
        r.check("srg_spectrum", std::abs(ev.front() - c.params.d) <= 1e-8 && near_r1 == std::lround(spec.m1) &&
                                    near_r2 == std::lround(spec.m2) && std::abs(spec.m1 - std::round(spec.m1)) <= 1e-8 &&
                                    std::abs(spec.m2 - std::round(spec.m2)) <= 1e-8,
                spec_inst);
        r.check("srg_multiplicity_sum", std::abs(1 + spec.m1 + spec.m2 - c.params.p) <= 1e-8, spec_inst);
    }
    return r;
}

/// LB <= chi-UB <= theta-UB <= trivial exponent for corpus h and |V(h)| <= n <= 10.
inline SuiteResult family_bounds_suite(Rng&, const VerifyOptions& opt)
{
    SuiteResult r("family-bounds");
    for (const auto& [name, h] : standard_corpus()) {
        const int chi = chromatic_number(h);
        const double theta = detail::theta_value(opt, h);
        const long long theta_ceiled = guarded_ceil(theta);
        std::optional<long long> regular_ceiled;
        if (h.is_regular())
            regular_ceiled = regular_or_srg_exponent(h, h.order()).ceiled;
        const bool is_clique = h.is_complete();
        for (int n = h.order(); n <= 10; ++n) {
            const auto lb = intersecting_lb_exponent(h, n);
            const auto ub = intersecting_ub_exponent(h, n);
            const Exponent2 ub_theta{binom2(n) - (theta_ceiled - 1)};
            const auto triv = trivial_ub_exponent(n);
            const auto inst = [&, name = name] {
                std::ostringstream os;
                os << "h=" << name << " n=" << n << " lb=" << lb.e << " ub_chi=" << ub.e << " ub_theta=" << ub_theta.e
                   << " trivial=" << triv.e;
                return os.str();
            };
            r.check("lb_le_ub_chromatic", lb <= ub, inst);
            r.check("ub_chromatic_le_ub_theta", ub <= ub_theta, inst);
            r.check("ub_theta_le_trivial", ub_theta <= triv, inst);
            r.check("ub_chromatic_formula", ub.e == binom2(n) - (chi - 1), inst);
            if (is_clique)
                r.check("ub_complete_graph", ub.e == binom2(n) - (h.order() - 1) && ub_theta == ub, inst);
            if (regular_ceiled)
                r.check("ub_regular_le_ub_theta_relaxation", binom2(n) - *regular_ceiled >= ub_theta.e, inst);
        }
    }
    return r;
}

/// Exact maxima of intersecting families at n <= 4 and the n = 5 heuristic.
inline SuiteResult extremal_families_suite(Rng&, const VerifyOptions&)
{
    SuiteResult r("extremal-families");
    const struct {
        int n;
        std::string hname;
        Graph h;
        std::int64_t expected;
    } cases[] = {
        {3, "K2", complete_graph(2), 4},
        {4, "K2", complete_graph(2), 32},
        {4, "K3", complete_graph(3), 8},
    };
    for (const auto& c : cases) {
        const auto res = max_family_size(c.n, c.h);
        const auto ub = intersecting_ub_exponent(c.h, c.n);
        const auto canon = canonical_family(c.n, c.h);
        const auto inst = [&] {
            return "n=" + std::to_string(c.n) + " h=" + c.hname + " max=" + std::to_string(res.size) +
                   " expected=" + std::to_string(c.expected) + " ub=" + ub.to_string();
        };
        r.check("max_family_exact", res.exhaustive && res.size == c.expected, inst);
        r.check("max_family_le_ub", res.size <= (std::int64_t{1} << ub.e), inst);
        r.check("max_family_ge_canonical", res.size >= static_cast<std::int64_t>(canon.members.size()), inst);
        r.check("witness_intersecting", is_intersecting_family(res.witness), inst);
        r.check("canonical_intersecting", is_intersecting_family(canon), inst);
        if (c.n <= 3) {
            const auto distinct = max_family_size(c.n, c.h, true);
            r.check("distinct_pairs_reading", distinct.size == std::max<std::int64_t>(res.size, 1), inst);
            r.note("n=" + std::to_string(c.n) + " h=" + c.hname + ": max " + std::to_string(res.size) +
                   " (pairs with self), " + std::to_string(distinct.size) + " (distinct pairs only)");
        }
        const auto demo = trace_intersecting_demo(c.n, c.h);
        r.check("trace_chain", demo.chain_holds && demo.traces_intersecting && demo.traces_within_half, inst);
    }
    const auto heur = max_family_size(5, complete_graph(3));
    r.check("heuristic_n5_witness", is_intersecting_family(heur.witness) && heur.size >= 128 &&
                                        heur.size <= (std::int64_t{1} << intersecting_ub_exponent(complete_graph(3), 5).e),
            [&] { return "n=5 h=K3 heuristic size " + std::to_string(heur.size); });
    r.note("n=5 h=K3 greedy up-set search (not exhaustive): " + std::to_string(heur.size));
    return r;
}

/// Almost-equipartition counts for 2 <= t <= n <= 12.
inline SuiteResult partition_suite(Rng&, const VerifyOptions&)
{
    SuiteResult r("partitions");
    for (int n = 2; n <= 12; ++n)
        for (int t = 2; t <= n; ++t) {
            const auto inst = [&] { return "n=" + std::to_string(n) + " t=" + std::to_string(t); };
            try {
                const auto f = partition_family(n, t);
                r.check("partition_m_formula", f.m == f.m_formula, inst);
                r.check("partition_m_le_share", f.m * (t - 1) <= binom2(n), inst);
                r.check("partition_double_count", f.m * f.size == binom2(n) * f.k && f.k >= 1, inst);
                r.check("partition_uniform_cover", f.uniform_coverage, inst);
            } catch (const std::logic_error& e) {
                r.check("partition_internal", false, [&] { return inst() + " " + e.what(); });
            }
        }
    return r;
}

/// inj = aut * copies, agreement of the hom counters, and the clique-count inequalities.
inline SuiteResult counting_suite(Rng& rng, const VerifyOptions& opt)
{
    SuiteResult r("counting");
    const int pairs = detail::scaled(opt, 100);
    for (int i = 0; i < pairs; ++i) {
        const Graph h = random_graph(rng, rng.range(1, 5), 0.5);
        const Graph g = random_graph(rng, rng.range(1, 8), 0.5);
        const BigInt inj = inj_count(h, g);
        const BigInt aut = aut_count(h);
        const BigInt copies = copy_count_by_images(h, g);
        const BigInt brute = hom_count(h, g, CountMethod::brute_force);
        const BigInt back = hom_count(h, g, CountMethod::backtracking);
        const auto inst = [&] {
            return "h=" + describe(h) + " g=" + describe(g) + " inj=" + inj.str() + " aut=" + aut.str() +
                   " copies=" + copies.str() + " hom_brute=" + brute.str() + " hom_backtrack=" + back.str();
        };
        r.check("inj_eq_aut_times_copies", inj == aut * copies, inst);
        r.check("hom_brute_eq_backtracking", brute == back, inst);
        r.check("hom_ge_inj", back >= inj, inst);
    }
    const int kst_graphs = detail::scaled(opt, 30);
    for (int i = 0; i < kst_graphs; ++i) {
        const Graph g = random_graph(rng, rng.range(1, 8), 0.5);
        for (int s = 1; s <= 3; ++s)
            for (int t = 1; t <= 3; ++t) {
                const Graph k = complete_bipartite_graph(s, t);
                const BigInt fast = hom_kst_fast(s, t, g);
                const BigInt brute = hom_count(k, g, CountMethod::brute_force);
                const BigInt back = hom_count(k, g, CountMethod::backtracking);
                r.check("hom_kst_fast_path", fast == brute && brute == back, [&] {
                    return "s=" + std::to_string(s) + " t=" + std::to_string(t) + " g=" + describe(g) +
                           " fast=" + fast.str() + " brute=" + brute.str() + " backtrack=" + back.str();
                });
            }
    }
    const int clique_graphs = detail::scaled(opt, 200);
    for (int i = 0; i < clique_graphs; ++i) {
        const Graph g = random_graph(rng, rng.range(3, 9), 0.5);
        for (int s = 2; s < g.order(); ++s)
            for (int t = s + 1; t <= g.order(); ++t) {
                const auto c = clique_inequality_check(g, s, t);
                r.check("clique_count_inequality", c.holds, [&] {
                    return "g=" + describe(g) + " s=" + std::to_string(s) + " t=" + std::to_string(t) +
                           " lhs=" + c.lhs.str() + " rhs=" + c.rhs.str();
                });
            }
    }
    const int gen_instances = detail::scaled(opt, 200);
    for (int i = 0; i < gen_instances; ++i) {
        const int n = rng.range(3, 8);
        const Graph g = random_graph(rng, n, 0.5);
        const int t = rng.range(2, std::min(5, n - 1));
        std::vector<int> verts(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v)
            verts[v] = v;
        rng.shuffle(verts);
        vertex_set chosen = 0;
        for (int j = 0; j < t; ++j)
            chosen |= bit(verts[j]);
        const Graph t_sub = g.induced(chosen);
        const int s = rng.range(1, t - 1);
        const auto c = generalized_clique_check(g, t_sub, s);
        const auto inst = [&] {
            return "g=" + describe(g) + " T=" + describe(t_sub) + " s=" + std::to_string(s) + " lhs=" + c.lhs.str() +
                   " rhs=" + c.rhs.str() + " argmax_S=" + describe(c.argmax);
        };
        r.check("clique_generalization_copy_form", c.holds, inst);
        r.check("clique_generalization_inj_form", c.inj_form_holds, inst);
        r.check("clique_generalization_forms_agree", c.holds == c.inj_form_holds && c.lhs == c.inj_lhs && c.rhs == c.inj_rhs,
                inst);
    }
    return r;
}

/// hom(t, g) <= (2|E(g)|)^{alpha*(t)}, and the K_{s,t} sandwich over bipartite hosts.
inline SuiteResult hom_bounds_suite(Rng& rng, const VerifyOptions& opt)
{
    SuiteResult r("hom-bounds");
    const int pairs = detail::scaled(opt, 100);
    for (int i = 0; i < pairs; ++i) {
        const Graph t = random_graph_without_isolated(rng, rng.range(2, 5), 0.5);
        const Graph g = random_graph_without_isolated(rng, rng.range(2, 7), 0.5);
        const auto c = hom_ub_check(t, g);
        const auto inst = [&] {
            std::ostringstream os;
            os.precision(12);
            os << "t=" << describe(t) << " g=" << describe(g) << " hom=" << c.hom.str() << " alpha*=" << c.alpha_frac
               << " bound=" << c.bound;
            if (c.theta)
                os << " theta=" << *c.theta;
            return os.str();
        };
        r.check("hom_ub_fractional_independence", c.holds, inst);
        r.check("hom_ub_edge_packing", c.edge_packing_holds, inst);
        if (c.perfect)
            r.check("hom_ub_theta_perfect", c.theta_holds, inst);
    }
    const int hosts = detail::scaled(opt, 50);
    for (int i = 0; i < hosts; ++i) {
        const int n1 = rng.range(1, 4), n2 = rng.range(1, 4);
        const Graph g = random_bipartite_without_isolated(rng, n1, n2, 0.5);
        const double alpha = static_cast<double>(g.edge_count()) / (n1 * n2);
        for (int s = 1; s <= 3; ++s)
            for (int t = 1; t <= 3; ++t) {
                const auto b = kst_hom_bounds(s, t, n1, n2, alpha);
                const BigInt hom = hom_count(complete_bipartite_graph(s, t), g);
                const double lh = log2_big(hom);
                r.check("kst_sandwich", b.log2_lb2 <= lh + 1e-9 && lh <= b.log2_ub + 1e-9, [&] {
                    std::ostringstream os;
                    os.precision(12);
                    os << "s=" << s << " t=" << t << " n1=" << n1 << " n2=" << n2 << " g=" << describe(g)
                       << " lb2=" << b.lb2 << " hom=" << hom.str() << " ub=" << b.ub;
                    return os.str();
                });
            }
    }
    return r;
}

/// Shearer (three forms), Han, and their equality cases.
inline SuiteResult entropy_suite(Rng& rng, const VerifyOptions& opt)
{
    SuiteResult r("entropy");
    const int count = detail::scaled(opt, 500);
    auto pmf_text = [](const JointPmf& p) {
        std::ostringstream os;
        os.precision(17);
        os << "pmf{sizes=";
        for (int a : p.alphabet_sizes())
            os << a << ",";
        os << " support=";
        for (const auto& [x, q] : p.support()) {
            os << "(";
            for (int v : x)
                os << v;
            os << ":" << q << ")";
        }
        os << "}";
        return os.str();
    };
    auto subsets_text = [](const std::vector<Subset>& v) {
        std::string s = "[";
        for (auto x : v)
            s += std::to_string(x) + ",";
        return s + "]";
    };
    for (int i = 0; i < count; ++i) {
        const int n = rng.range(1, 6);
        const auto pmf = random_pmf(rng, n, 3);
        const auto cover = random_cover(rng, n);
        const auto c = shearer_check(pmf, cover);
        r.check("shearer", c.holds && c.rhs - c.lhs >= -1e-9, [&] {
            return pmf_text(pmf) + " cover=" + subsets_text(cover.subsets) + " k=" + std::to_string(cover.k);
        });
    }
    for (int i = 0; i < count; ++i) {
        const int n = rng.range(1, 6);
        std::vector<Subset> family;
        const int members = rng.range(1, 1 << std::min(n, 5));
        for (int j = 0; j < members; ++j)
            family.push_back(rng.uniform(std::uint64_t{1} << n));
        const auto cover = random_cover(rng, n);
        const auto c = combinatorial_shearer_check(family, cover);
        r.check("combinatorial_shearer", c.holds, [&] {
            return "family=" + subsets_text(family) + " cover=" + subsets_text(cover.subsets) + " k=" + std::to_string(cover.k);
        });
    }
    for (int i = 0; i < count; ++i) {
        const int n = rng.range(1, 6);
        const auto pmf = random_pmf(rng, n, 3);
        const auto sd = random_subset_distribution(rng, n);
        const auto c = probabilistic_shearer_check(pmf, sd);
        r.check("probabilistic_shearer", c.holds, [&] {
            std::ostringstream os;
            os.precision(17);
            os << pmf_text(pmf) << " theta=" << sd.theta << " subsets=";
            for (auto [s, q] : sd.mass)
                os << s << ":" << q << ",";
            return os.str();
        });
    }
    for (int i = 0; i < count; ++i) {
        const int n = rng.range(2, 6);
        const auto pmf = random_pmf(rng, n, 3);
        const auto c = han_check(pmf);
        r.check("han", c.lower_holds && c.upper_holds, [&] { return pmf_text(pmf); });
    }
    // equality cases
    for (int n = 2; n <= 6; ++n) {
        const auto bits = uniform_product_pmf(std::vector<int>(static_cast<std::size_t>(n), 2));
        const auto loo = shearer_check(bits, CoverFamily::leave_one_out(n));
        r.check("shearer_equality_independent", std::abs(loo.lhs - loo.rhs) <= 1e-9,
                [&] { return "iid bits n=" + std::to_string(n); });
        const auto sub = shearer_check(bits, CoverFamily::singletons(n));
        r.check("subadditivity_equality_independent", std::abs(sub.lhs - sub.rhs) <= 1e-9,
                [&] { return "iid bits n=" + std::to_string(n); });
        const auto han = han_check(bits);
        r.check("han_lower_equality_independent", std::abs(han.lower - han.middle) <= 1e-9,
                [&] { return "iid bits n=" + std::to_string(n); });
        std::vector<std::pair<JointPmf::Outcome, double>> diag;
        for (int a = 0; a < 3; ++a)
            diag.emplace_back(JointPmf::Outcome(static_cast<std::size_t>(n), a), 1.0 / 3.0);
        diag.back().second = 1.0 - 2.0 / 3.0;
        const JointPmf same(std::vector<int>(static_cast<std::size_t>(n), 3), diag);
        const auto hs = han_check(same);
        r.check("han_upper_equality_dependent", std::abs(hs.middle - hs.upper) <= 1e-9,
                [&] { return "identical coordinates n=" + std::to_string(n); });
        std::vector<Subset> power;
        for (Subset m = 0; m < (Subset{1} << n); ++m)
            power.push_back(m);
        const auto cs = combinatorial_shearer_check(power, CoverFamily::singletons(n));
        r.check("combinatorial_equality_power_set", std::abs(cs.log2_lhs - cs.log2_rhs) <= 1e-9,
                [&] { return "power set n=" + std::to_string(n); });
        const SubsetDistribution full{n, {{ground_set(n), 1.0}}, 1.0};
        const auto ps = probabilistic_shearer_check(bits, full);
        r.check("probabilistic_equality_full_set", std::abs(ps.lhs - ps.rhs) <= 1e-9,
                [&] { return "full set n=" + std::to_string(n); });
        const auto uni = SubsetDistribution::uniform_of_size(n, 1);
        const auto pu = probabilistic_shearer_check(bits, uni);
        r.check("probabilistic_uniform_size_s", pu.holds, [&] { return "uniform singletons n=" + std::to_string(n); });
    }
    return r;
}

/// Ratio of the two K_{s,t} lower bounds on the grid s, t <= 5 and delta in {1, 1.5, 2, 5}.
inline SuiteResult sidorenko_suite(Rng&, const VerifyOptions&)
{
    SuiteResult r("sidorenko");
    const int n1 = 2;
    const int n2_values[] = {2, 3, 4, 10};
    const double alphas[] = {1.0, 0.5};
    for (int s = 1; s <= 5; ++s)
        for (int t = 1; t <= 5; ++t)
            for (int n2 : n2_values)
                for (double alpha : alphas) {
                    const auto c = sidorenko_comparison(s, t, n1, n2, alpha);
                    const auto inst = [&] {
                        std::ostringstream os;
                        os.precision(15);
                        os << "s=" << s << " t=" << t << " n1=" << n1 << " n2=" << n2 << " alpha=" << alpha
                           << " ratio=" << c.ratio_direct << " delta_form=" << c.ratio_delta << " floor=" << c.floor_bound
                           << " case=" << to_string(c.case_id);
                        return os.str();
                    };
                    r.check("sidorenko_ratio_forms", c.forms_agree, inst);
                    r.check("sidorenko_ratio_floor", c.floor_holds, inst);
                    r.check(std::string("sidorenko_case_") + to_string(c.case_id), c.case_holds, inst);
                }
    return r;
}

// ---------------------------------------------------------------------------

struct VerifyReport {
    std::uint64_t seed = 0;
    Scale scale = Scale::small;
    std::vector<SuiteResult> suites;

    std::int64_t passed() const
    {
        std::int64_t n = 0;
        for (const auto& s : suites)
            n += s.passed();
        return n;
    }

    std::int64_t failed() const
    {
        std::int64_t n = 0;
        for (const auto& s : suites)
            n += s.failed();
        return n;
    }

    bool ok() const { return failed() == 0; }

    const SuiteResult* suite(const std::string& name) const
    {
        for (const auto& s : suites)
            if (s.name() == name)
                return &s;
        return nullptr;
    }

    /// Deterministic text: no timings, tags in sorted order.
    std::string summary() const
    {
        std::ostringstream os;
        os << "verify-all seed=" << seed << " scale=" << (scale == Scale::full ? "full" : "small") << "\n";
        for (const auto& s : suites) {
            os << "[" << s.name() << "] passed=" << s.passed() << " failed=" << s.failed() << "\n";
            for (const auto& [tag, t] : s.tallies()) {
                os << "  " << tag << ": " << t.passed << " passed, " << t.failed << " failed\n";
                for (const auto& ce : t.counterexamples)
                    os << "    counterexample: " << ce << "\n";
            }
            for (const auto& note : s.notes())
                os << "  note: " << note << "\n";
        }
        os << "total: " << passed() << " passed, " << failed() << " failed\n";
        return os.str();
    }
};

using SuiteFn = SuiteResult (*)(Rng&, const VerifyOptions&);

inline const std::vector<std::pair<std::string, SuiteFn>>& suite_registry()
{
    static const std::vector<std::pair<std::string, SuiteFn>> reg = {
        {"sandwich", &sandwich_suite},
        {"theta-numerics", &theta_numerics_suite},
        {"family-bounds", &family_bounds_suite},
        {"extremal-families", &extremal_families_suite},
        {"partitions", &partition_suite},
        {"counting", &counting_suite},
        {"hom-bounds", &hom_bounds_suite},
        {"entropy", &entropy_suite},
        {"sidorenko", &sidorenko_suite},
    };
    return reg;
}

/// Runs one suite by name with the same stream verify_all would give it.
inline SuiteResult run_suite(const std::string& name, const VerifyOptions& opt)
{
    Rng root(opt.seed);
    for (const auto& [n, fn] : suite_registry()) {
        Rng stream = root.split();
        if (n == name)
            return fn(stream, opt);
    }
    throw std::invalid_argument("unknown suite " + name);
}

inline VerifyReport verify_all(const VerifyOptions& opt = {})
{
    VerifyReport rep;
    rep.seed = opt.seed;
    rep.scale = opt.scale;
    Rng root(opt.seed);
    for (const auto& [name, fn] : suite_registry()) {
        Rng stream = root.split();
        rep.suites.push_back(fn(stream, opt));
    }
    return rep;
}

}  // namespace graphent
