#include <graphent/bounds.hpp>
#include <graphent/entropy.hpp>
#include <graphent/families.hpp>
#include <graphent/graph.hpp>
#include <graphent/homomorphisms.hpp>
#include <graphent/invariants.hpp>
#include <graphent/io.hpp>
#include <graphent/theta.hpp>
#include <graphent/verify.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using json = nlohmann::ordered_json;
using namespace graphent;

namespace {

enum Exit { ok = 0, violation = 1, input_error = 2, no_convergence = 3 };

/// Ordered report of tagged quantities; printed as JSON or as an aligned table.
class Report {
public:
    Report(std::string verb, std::uint64_t seed) : verb_(std::move(verb)), seed_(seed) {}

    void input(const std::string& key, json value) { inputs_[key] = std::move(value); }

    void value(const std::string& name, json v, const std::string& tag)
    {
        results_.push_back({name, std::move(v), tag});
    }

    void exponent(const std::string& name, std::int64_t e, const std::string& tag)
    {
        results_.push_back({name, json{{"exponent2", e}}, tag});
    }

    void lines(const std::string& name, std::vector<std::string> text) { blocks_.emplace_back(name, std::move(text)); }

    void print(bool as_json, std::ostream& os) const
    {
        if (as_json) {
            json j;
            j["verb"] = verb_;
            j["seed"] = seed_;
            j["input"] = inputs_;
            json res = json::object();
            for (const auto& r : results_) {
                json cell = r.value.is_object() ? r.value : json{{"value", r.value}};
                cell["tag"] = r.tag;
                res[r.name] = cell;
            }
            j["results"] = res;
            for (const auto& [name, text] : blocks_)
                j[name] = text;
            os << j.dump(2) << "\n";
            return;
        }
        os << verb_ << " (seed " << seed_ << ")\n";
        for (const auto& [k, v] : inputs_.items())
            os << "  " << k << " = " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
        std::size_t width = 0;
        for (const auto& r : results_)
            width = std::max(width, r.name.size());
        for (const auto& r : results_) {
            std::string shown;
            if (r.value.is_object() && r.value.contains("exponent2"))
                shown = "2^" + r.value["exponent2"].dump();
            else if (r.value.is_string())
                shown = r.value.get<std::string>();
            else
                shown = r.value.dump();
            os << "  " << std::left << std::setw(static_cast<int>(width)) << r.name << "  " << shown << "  [" << r.tag
               << "]\n";
        }
        for (const auto& [name, text] : blocks_) {
            os << "  " << name << ":\n";
            for (const auto& line : text)
                os << "    " << line << "\n";
        }
    }

private:
    struct Entry {
        std::string name;
        json value;
        std::string tag;
    };
    std::string verb_;
    std::uint64_t seed_;
    json inputs_ = json::object();
    std::vector<Entry> results_;
    std::vector<std::pair<std::string, std::vector<std::string>>> blocks_;
};

json big(const BigInt& x)
{
    if (x <= std::numeric_limits<std::int64_t>::max())
        return x.convert_to<std::int64_t>();
    return x.str();
}

std::string read_text(const std::string& path)
{
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

/// Named spec, then a readable file or "-", then inline graph6.
Graph resolve_graph(const std::string& arg)
{
    if (arg.empty())
        throw std::invalid_argument("missing graph argument");
    try {
        return standard_graph(parse_graph_spec(arg));
    } catch (const std::invalid_argument&) {
    }
    if (arg == "-" || std::filesystem::is_regular_file(arg))
        return parse_graph_text(read_text(arg));
    try {
        return parse_graph6(arg);
    } catch (const parse_error& e) {
        throw parse_error("'" + arg + "' is not a graph name, a readable file, or graph6 (" + e.what() + ")");
    }
}

struct Options {
    std::string graph, h, pmf, cover, file, scale = "small";
    int n = -1, s = -1, t = -1, n1 = -1, n2 = -1, k = -1;
    double alpha = -1;
    std::uint64_t seed = 42;
    bool json = false, distinct_pairs = false, witness = false;
};

int run_invariants(const Options& o, Report& rep)
{
    const Graph g = resolve_graph(o.graph);
    rep.input("graph", encode_graph6(g));
    const auto inv = compute_invariants(g);
    rep.value("vertices", g.order(), "graph_order");
    rep.value("edges", inv.edge_count, "edge_count");
    rep.value("clique_number", inv.omega, "clique_number");
    rep.value("chromatic_number", inv.chi, "chromatic_number");
    rep.value("independence_number", inv.alpha, "independence_number");
    rep.value("fractional_independence", inv.alpha_frac, "fractional_independence_lp");
    rep.value("max_degree", inv.max_degree, "max_degree");
    bool holds = inv.omega <= inv.chi && inv.alpha <= inv.alpha_frac + 1e-9 && inv.chi <= inv.max_degree + 1;
    if (inv.edge_count > 0) {
        const auto gap = chromatic_gap_checks(g);
        rep.value("greedy_bound_holds", gap.greedy_holds, "chromatic_greedy_bound");
        rep.value("edge_bound", gap.edge_bound, "chromatic_edge_bound");
        rep.value("edge_bound_holds", gap.edge_bound_holds, "chromatic_edge_bound");
        rep.value("edge_bound_tight_iff_complete", gap.edge_bound_tight_iff_complete, "chromatic_edge_bound_equality");
        rep.value("gap", gap.gap, "chromatic_gap");
        if (gap.gap_applicable) {
            rep.value("gap_lower_bound", gap.gap_lower_bound, "chromatic_gap_lower_bound");
            rep.value("gap_holds", gap.gap_holds, "chromatic_gap_lower_bound");
        }
        if (gap.brooks_applicable)
            rep.value("brooks_holds", gap.brooks_holds, "brooks");
        holds = holds && gap.all_hold();
    }
    return holds ? ok : violation;
}

int run_theta(const Options& o, Report& rep)
{
    const Graph h = resolve_graph(o.graph);
    rep.input("graph", encode_graph6(h));
    const auto th = theta_of_complement(h);
    const int omega = clique_number(h), chi = chromatic_number(h);
    rep.value("theta_complement", th.sdp_value, "theta_sdp");
    rep.value("ceiled", th.ceiled, "theta_ceiling_guarded");
    rep.value("spectral_lower_bound", th.spectral_lb, "theta_spectral_admissible");
    if (th.srg) {
        rep.value("srg", th.srg->to_string(), "srg_detected");
        rep.value("srg_closed_form", *th.srg_closed_form, "theta_srg_closed_form");
        const auto spec = srg_eigen(*th.srg);
        rep.value("srg_eigenvalues", json::array({spec.r1, spec.r2}), "srg_eigenvalues");
        rep.value("srg_multiplicities", json::array({spec.m1, spec.m2}), "srg_multiplicities");
    }
    rep.value("clique_number", omega, "sandwich");
    rep.value("chromatic_number", chi, "sandwich");
    rep.value("iterations", th.iterations, "sdp_admm");
    rep.value("residual", th.residual, "sdp_admm");
    const bool holds = omega <= th.sdp_value + 1e-4 && th.sdp_value <= chi + 1e-4 && th.ceiled <= chi &&
                       th.spectral_lb <= th.sdp_value + 1e-4 &&
                       (!th.srg_closed_form || std::abs(*th.srg_closed_form - th.sdp_value) <= 1e-4);
    rep.value("sandwich_holds", holds, "sandwich");
    return holds ? ok : violation;
}

int run_bounds(const Options& o, Report& rep)
{
    if (o.s > 0 && o.t > 0 && o.n1 > 0 && o.n2 > 0) {
        const double alpha = o.alpha > 0 ? o.alpha : 1.0;
        rep.input("s", o.s);
        rep.input("t", o.t);
        rep.input("n1", o.n1);
        rep.input("n2", o.n2);
        rep.input("alpha", alpha);
        const auto b = kst_hom_bounds(o.s, o.t, o.n1, o.n2, alpha);
        const auto c = sidorenko_comparison(o.s, o.t, o.n1, o.n2, alpha);
        rep.value("edges", b.edges, "kst_edge_count");
        rep.value("lb2", b.lb2, "kst_hom_lower");
        rep.value("ub", b.ub, "kst_hom_upper");
        rep.value("log2_lb2", b.log2_lb2, "kst_hom_lower");
        rep.value("log2_ub", b.log2_ub, "kst_hom_upper");
        rep.value("lb1_sidorenko", c.lb1, "sidorenko_lower");
        rep.value("ratio", c.ratio_direct, "sidorenko_ratio");
        rep.value("ratio_delta_form", c.ratio_delta, "sidorenko_ratio_delta_form");
        rep.value("floor_bound", c.floor_bound, "sidorenko_ratio_floor");
        rep.value("case", to_string(c.case_id), "sidorenko_cases");
        const bool holds = c.forms_agree && c.floor_holds && c.case_holds && b.log2_lb2 <= b.log2_ub + 1e-9;
        rep.value("checks_hold", holds, "sidorenko_cases");
        return holds ? ok : violation;
    }
    const Graph h = resolve_graph(o.h);
    const int n = o.n > 0 ? o.n : h.order();
    rep.input("h", encode_graph6(h));
    rep.input("n", n);
    const auto report = intersecting_bound_report(h, n);
    for (const auto& e : report.entries) {
        if (e.exponent2)
            rep.exponent(e.quantity, *e.exponent2, e.tag);
        else
            rep.value(e.quantity, *e.real, e.tag);
    }
    rep.value("ordered", report.ordered, "intersecting_bound_order");
    if (n == h.order())
        rep.value("note", "n = |V(h)|: LB <= UB is reported, not asserted", "intersecting_lb_canonical");
    return report.ordered ? ok : violation;
}

int run_homcount(const Options& o, Report& rep)
{
    const Graph g = resolve_graph(o.graph);
    rep.input("graph", encode_graph6(g));
    Graph t;
    const bool kst = o.h.empty() && o.s > 0 && o.t > 0;
    if (kst)
        t = complete_bipartite_graph(o.s, o.t);
    else
        t = resolve_graph(o.h);
    rep.input("h", encode_graph6(t));
    const auto c = hom_counts(t, g);
    rep.value("hom", big(c.hom), "hom_count");
    rep.value("inj", big(c.inj), "inj_count");
    rep.value("aut", big(c.aut), "aut_count");
    rep.value("copies", big(c.copies), "copy_count");
    bool holds = c.inj == c.aut * c.copies && c.hom >= c.inj;
    if (kst) {
        const BigInt fast = hom_kst_fast(o.s, o.t, g);
        rep.value("hom_kst_fast", big(fast), "hom_kst_fast");
        holds = holds && fast == c.hom;
    }
    if (!t.has_isolated_vertex() && !g.has_isolated_vertex() && g.edge_count() > 0) {
        const auto ub = hom_ub_check(t, g);
        rep.value("fractional_independence", ub.alpha_frac, "fractional_independence_lp");
        rep.value("hom_upper_bound", ub.bound, "hom_ub_fractional_independence");
        rep.value("hom_upper_bound_holds", ub.holds, "hom_ub_fractional_independence");
        rep.value("edge_packing", ub.edge_packing, "hom_ub_edge_packing");
        rep.value("edge_packing_bound_holds", ub.edge_packing_holds, "hom_ub_edge_packing");
        if (ub.theta) {
            rep.value("theta", *ub.theta, "hom_ub_theta_perfect");
            rep.value("theta_bound_holds", ub.theta_holds, "hom_ub_theta_perfect");
        }
        holds = holds && ub.holds && ub.theta_holds;
    }
    return holds ? ok : violation;
}

int run_cliques(const Options& o, Report& rep)
{
    const Graph g = resolve_graph(o.graph);
    rep.input("graph", encode_graph6(g));
    const auto prof = clique_profile(g);
    json counts = json::array();
    for (const auto& c : prof.counts)
        counts.push_back(big(c));
    rep.value("clique_profile", counts, "clique_profile");
    const auto best = maximum_clique(g);
    rep.value("maximum_clique", best, "clique_number");
    bool holds = true;
    if (!o.h.empty()) {
        const Graph t_sub = resolve_graph(o.h);
        if (o.s < 1)
            throw std::invalid_argument("--s is required with --h");
        rep.input("h", encode_graph6(t_sub));
        rep.input("s", o.s);
        const auto c = generalized_clique_check(g, t_sub, o.s);
        rep.value("lhs", big(c.lhs), "clique_generalization_copy_form");
        rep.value("rhs", big(c.rhs), "clique_generalization_copy_form");
        rep.value("argmax_S", encode_graph6(c.argmax), "clique_generalization_copy_form");
        rep.value("holds", c.holds, "clique_generalization_copy_form");
        rep.value("inj_form_holds", c.inj_form_holds, "clique_generalization_inj_form");
        holds = c.holds && c.inj_form_holds;
    } else if (o.s > 0 && o.t > 0) {
        rep.input("s", o.s);
        rep.input("t", o.t);
        const auto c = clique_inequality_check(g, o.s, o.t);
        rep.value("lhs", big(c.lhs), "clique_count_inequality");
        rep.value("rhs", big(c.rhs), "clique_count_inequality");
        rep.value("holds", c.holds, "clique_count_inequality");
        holds = c.holds;
    }
    return holds ? ok : violation;
}

/// {"alphabet": [2, 2], "support": [{"x": [0, 0], "p": 0.5}, ...]}
JointPmf parse_pmf_json(const std::string& text)
{
    const json j = json::parse(text);
    std::vector<int> sizes = j.at("alphabet").get<std::vector<int>>();
    std::vector<std::pair<JointPmf::Outcome, double>> support;
    for (const auto& e : j.at("support"))
        support.emplace_back(e.at("x").get<std::vector<int>>(), e.at("p").get<double>());
    return JointPmf(std::move(sizes), support);
}

CoverFamily parse_cover(const std::string& text, int n, int k)
{
    // "0,1;1,2;0,2"
    CoverFamily c{n, {}, 1};
    std::stringstream groups(text);
    std::string group;
    while (std::getline(groups, group, ';')) {
        Subset s = 0;
        std::stringstream items(group);
        std::string item;
        while (std::getline(items, item, ',')) {
            if (item.empty())
                continue;
            std::size_t used = 0;
            const int i = std::stoi(item, &used);
            if (used != item.size() || i < 0 || i >= n)
                throw std::invalid_argument("bad cover element '" + item + "'");
            s |= Subset{1} << i;
        }
        c.subsets.push_back(s);
    }
    c.k = k > 0 ? k : c.min_coverage();
    c.validate();
    return c;
}

int run_entropy(const Options& o, Report& rep)
{
    if (o.pmf.empty()) {
        VerifyOptions vo;
        vo.seed = o.seed;
        const auto suite = run_suite("entropy", vo);
        for (const auto& [tag, t] : suite.tallies()) {
            rep.value(tag + "_passed", t.passed, tag);
            rep.value(tag + "_failed", t.failed, tag);
        }
        return suite.ok() ? ok : violation;
    }
    const JointPmf pmf = parse_pmf_json(read_text(o.pmf));
    rep.input("pmf", o.pmf);
    rep.value("joint_entropy", joint_entropy(pmf), "entropy");
    const auto sub = shearer_check(pmf, CoverFamily::singletons(pmf.n()));
    rep.value("subadditivity_lhs", sub.lhs, "shearer_subadditivity");
    rep.value("subadditivity_rhs", sub.rhs, "shearer_subadditivity");
    bool holds = sub.holds;
    if (pmf.n() >= 2) {
        const auto han = han_check(pmf);
        rep.value("han_lower", han.lower, "han");
        rep.value("han_middle", han.middle, "han");
        rep.value("han_upper", han.upper, "han");
        rep.value("han_holds", han.lower_holds && han.upper_holds, "han");
        holds = holds && han.lower_holds && han.upper_holds;
    }
    if (!o.cover.empty()) {
        const auto cover = parse_cover(o.cover, pmf.n(), o.k);
        rep.input("cover", o.cover);
        const auto sh = shearer_check(pmf, cover);
        rep.value("shearer_k", cover.k, "shearer");
        rep.value("shearer_lhs", sh.lhs, "shearer");
        rep.value("shearer_rhs", sh.rhs, "shearer");
        rep.value("shearer_holds", sh.holds, "shearer");
        holds = holds && sh.holds;
    }
    return holds ? ok : violation;
}

int run_family_max(const Options& o, Report& rep)
{
    const Graph h = resolve_graph(o.h);
    if (o.n < 1)
        throw std::invalid_argument("--n is required");
    rep.input("h", encode_graph6(h));
    rep.input("n", o.n);
    const auto res = max_family_size(o.n, h, o.distinct_pairs);
    rep.value("size", res.size, "max_intersecting_family");
    rep.value("exhaustive", res.exhaustive, "max_intersecting_family");
    rep.value("method", res.method, "max_intersecting_family");
    rep.value("distinct_pairs", res.distinct_pairs, "max_intersecting_family");
    const auto ub = intersecting_ub_exponent(h, o.n);
    rep.exponent("ub_chromatic", ub.e, "intersecting_ub_chromatic");
    const bool within = ub.e >= 63 || res.size <= (std::int64_t{1} << ub.e);
    const bool intersecting = is_intersecting_family(res.witness, o.distinct_pairs);
    rep.value("within_ub", within, "intersecting_ub_chromatic");
    rep.value("witness_intersecting", intersecting, "intersecting_family");
    if (o.witness) {
        std::vector<std::string> lines;
        for (const auto& m : res.witness.members)
            lines.push_back(encode_graph6(m.to_graph()));
        rep.lines("witness_graph6", lines);
    }
    return within && intersecting ? ok : violation;
}

int run_family_verify(const Options& o, Report& rep)
{
    const Graph h = resolve_graph(o.h);
    rep.input("h", encode_graph6(h));
    FamilyRecord fam;
    if (!o.file.empty()) {
        fam = parse_family_text(read_text(o.file), h);
        rep.input("file", o.file);
    } else {
        if (o.n < 1)
            throw std::invalid_argument("--n or --file is required");
        fam = canonical_family(o.n, h);
        rep.input("family", "canonical");
    }
    rep.input("n", fam.n);
    rep.value("members", static_cast<std::int64_t>(fam.members.size()), "intersecting_family");
    const bool inter = is_intersecting_family(fam, o.distinct_pairs);
    rep.value("intersecting", inter, "intersecting_family");
    if (fam.n >= h.order() && h.edge_count() > 0) {
        const auto ub = intersecting_ub_exponent(h, fam.n);
        rep.exponent("ub_chromatic", ub.e, "intersecting_ub_chromatic");
        const bool within = ub.e >= 63 || static_cast<std::int64_t>(fam.members.size()) <= (std::int64_t{1} << ub.e);
        rep.value("within_ub", within, "intersecting_ub_chromatic");
        if (inter && !within)
            return violation;
    }
    return inter ? ok : violation;
}

int run_verify_all(const Options& o, bool as_json)
{
    VerifyOptions vo;
    vo.seed = o.seed;
    if (o.scale == "full")
        vo.scale = Scale::full;
    else if (o.scale != "small")
        throw std::invalid_argument("--scale must be small or full");
    const auto rep = verify_all(vo);
    if (as_json) {
        json j;
        j["verb"] = "verify-all";
        j["seed"] = o.seed;
        j["scale"] = o.scale;
        json suites = json::array();
        for (const auto& s : rep.suites) {
            json tags = json::object();
            for (const auto& [tag, t] : s.tallies())
                tags[tag] = {{"passed", t.passed}, {"failed", t.failed}, {"counterexamples", t.counterexamples}};
            suites.push_back({{"suite", s.name()}, {"passed", s.passed()}, {"failed", s.failed()}, {"tags", tags},
                              {"notes", s.notes()}});
        }
        j["suites"] = suites;
        j["passed"] = rep.passed();
        j["failed"] = rep.failed();
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << rep.summary();
    }
    return rep.ok() ? ok : violation;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"graphent: graph invariants, entropy inequalities and homomorphism-count bounds"};
    app.set_help_flag("--help", "print help and exit");
    app.require_subcommand(1);
    Options o;
    auto common = [&](CLI::App* sub) {
        sub->add_flag("--json", o.json, "emit JSON");
        sub->add_option("--seed", o.seed, "RNG seed");
    };
    auto* inv = app.add_subcommand("invariants", "clique, chromatic, independence numbers and chromatic-gap checks");
    inv->add_option("--graph", o.graph, "graph: name (K3, C5, Kst:2,3, petersen), graph6, or file")->required();
    common(inv);
    auto* th = app.add_subcommand("theta", "Lovasz theta of the complement of a graph");
    th->add_option("--graph", o.graph, "graph")->required();
    common(th);
    auto* bd = app.add_subcommand("bounds", "intersecting-family exponents, or K_{s,t} bounds with --s --t --n1 --n2");
    bd->add_option("--h", o.h, "target graph h");
    bd->add_option("--n", o.n, "host vertex count");
    bd->add_option("--s", o.s, "K_{s,t} part size s");
    bd->add_option("--t", o.t, "K_{s,t} part size t");
    bd->add_option("--n1", o.n1, "bipartite host part size");
    bd->add_option("--n2", o.n2, "bipartite host part size");
    bd->add_option("--alpha", o.alpha, "edge density in (0,1]");
    common(bd);
    auto* hc = app.add_subcommand("homcount", "hom, inj, aut and copy counts of h (or K_{s,t}) in a graph");
    hc->add_option("--graph", o.graph, "host graph")->required();
    hc->add_option("--h", o.h, "pattern graph");
    hc->add_option("--s", o.s, "K_{s,t} part size s");
    hc->add_option("--t", o.t, "K_{s,t} part size t");
    common(hc);
    auto* cq = app.add_subcommand("cliques", "clique profile and clique-count inequalities");
    cq->add_option("--graph", o.graph, "graph")->required();
    cq->add_option("--h", o.h, "induced pattern T for the generalized inequality");
    cq->add_option("--s", o.s, "smaller order s");
    cq->add_option("--t", o.t, "larger order t");
    common(cq);
    auto* en = app.add_subcommand("entropy-check", "Shearer and Han checks on a JSON pmf, or the seeded entropy suite");
    en->add_option("--pmf", o.pmf, "JSON pmf file or - for stdin");
    en->add_option("--cover", o.cover, "cover subsets as '0,1;1,2;0,2'");
    en->add_option("--k", o.k, "claimed cover multiplicity (default: realised minimum)");
    common(en);
    auto* fm = app.add_subcommand("family-max", "maximum h-intersecting family on [n]");
    fm->add_option("--n", o.n, "vertex count")->required();
    fm->add_option("--h", o.h, "target graph")->required();
    fm->add_flag("--distinct-pairs", o.distinct_pairs, "only require distinct pairs to intersect in h");
    fm->add_flag("--witness", o.witness, "list the witness family as graph6 lines");
    common(fm);
    auto* fv = app.add_subcommand("family-verify", "check that a family (graph6 lines) is h-intersecting");
    fv->add_option("--h", o.h, "target graph")->required();
    fv->add_option("--n", o.n, "vertex count for the canonical family when no file is given");
    fv->add_option("--file", o.file, "graph6 lines, one member per line, or -");
    fv->add_flag("--distinct-pairs", o.distinct_pairs, "only require distinct pairs to intersect in h");
    common(fv);
    auto* va = app.add_subcommand("verify-all", "run every verification suite");
    va->add_option("--scale", o.scale, "small or full");
    common(va);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return input_error;
    }

    auto* sub = app.get_subcommands().front();
    const std::string verb = sub->get_name();
    try {
        if (verb == "verify-all")
            return run_verify_all(o, o.json);
        Report rep(verb, o.seed);
        int code = ok;
        if (verb == "invariants")
            code = run_invariants(o, rep);
        else if (verb == "theta")
            code = run_theta(o, rep);
        else if (verb == "bounds")
            code = run_bounds(o, rep);
        else if (verb == "homcount")
            code = run_homcount(o, rep);
        else if (verb == "cliques")
            code = run_cliques(o, rep);
        else if (verb == "entropy-check")
            code = run_entropy(o, rep);
        else if (verb == "family-max")
            code = run_family_max(o, rep);
        else if (verb == "family-verify")
            code = run_family_verify(o, rep);
        rep.print(o.json, std::cout);
        return code;
    } catch (const sdp_error& e) {
        std::cerr << "error: " << e.what() << " (best value " << e.best_value << ", residual " << e.residual << ")\n";
        return no_convergence;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return input_error;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return input_error;
    }
}
