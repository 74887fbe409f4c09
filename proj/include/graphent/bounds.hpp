#pragma once

#include <graphent/graph.hpp>
#include <graphent/invariants.hpp>
#include <graphent/optim.hpp>
#include <graphent/theta.hpp>

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace graphent {

/// The quantity 2^e, kept as its exponent.
struct Exponent2 {
    std::int64_t e = 0;

    std::string to_string() const { return "2^" + std::to_string(e); }
    friend auto operator<=>(const Exponent2&, const Exponent2&) = default;
};

namespace detail {

inline void require_host_size(const Graph& h, int n)
{
    if (n < h.order())
        throw std::invalid_argument("n must be at least |V(h)| = " + std::to_string(h.order()));
}

inline void require_nonempty(const Graph& h)
{
    if (h.edge_count() == 0)
        throw std::invalid_argument("h must have at least one edge");
}

}  // namespace detail

/// C(n,2) - (chi(h) - 1).
inline Exponent2 intersecting_ub_exponent(const Graph& h, int n)
{
    detail::require_nonempty(h);
    detail::require_host_size(h, n);
    return {binom2(n) - (chromatic_number(h) - 1)};
}

/// C(n,2) - (ceil(theta of the complement) - 1), ceiling taken with the integer guard.
inline Exponent2 intersecting_ub_exponent_theta(const Graph& h, int n, const SdpOptions& opt = {})
{
    detail::require_nonempty(h);
    detail::require_host_size(h, n);
    return {binom2(n) - (theta_of_complement(h, opt).ceiled - 1)};
}

struct RegularExponent {
    Exponent2 exponent;
    double ratio = 0;                  // d / |lambda_min|
    long long ceiled = 0;
    std::optional<SrgParams> srg;
    std::optional<long long> srg_ceiled;
};

/// C(n,2) - ceil(d / |lambda_min(h)|) for d-regular h, plus the closed form when h is a connected srg.
inline RegularExponent regular_or_srg_exponent(const Graph& h, int n)
{
    detail::require_nonempty(h);
    detail::require_host_size(h, n);
    if (!h.is_regular())
        throw std::invalid_argument("h must be regular");
    const int d = h.degree(0);
    const auto ev = sym_eigenvalues(adjacency_matrix(h));
    RegularExponent r;
    r.ratio = d / std::abs(ev.back());
    r.ceiled = guarded_ceil(r.ratio);
    if (auto s = detect_srg(h); s && s->connected()) {
        r.srg = s;
        const double lm = s->lam - s->mu;
        r.srg_ceiled = guarded_ceil(2.0 * s->d / (std::sqrt(lm * lm + 4.0 * (s->d - s->mu)) - s->lam + s->mu));
        if (*r.srg_ceiled != r.ceiled)
            throw std::logic_error("spectral and srg ceilings disagree for (" + s->to_string() + ")");
    }
    r.exponent = {binom2(n) - r.ceiled};
    return r;
}

/// Size of the family of all graphs on [n] containing a fixed copy of h: C(n,2) - |E(h)|.
inline Exponent2 intersecting_lb_exponent(const Graph& h, int n)
{
    detail::require_host_size(h, n);
    return {binom2(n) - h.edge_count()};
}

inline Exponent2 trivial_ub_exponent(int n) { return {binom2(n) - 1}; }

// ---------------------------------------------------------------------------
// Almost-equipartitions of [n] into t - 1 parts

struct PartitionFamily {
    int n = 0;
    int t = 0;
    std::vector<std::vector<int>> partitions;  // part label of each vertex
    std::int64_t m = 0;                        // within-part pairs, per partition
    std::int64_t m_formula = 0;
    std::int64_t size = 0;
    std::int64_t k = 0;                        // partitions covering each pair
    bool uniform_coverage = false;

    int parts() const { return t - 1; }

    /// Within-part pairs as a mask over EdgeUniverse(n); needs C(n,2) <= 64.
    std::uint64_t edge_mask(std::size_t index) const
    {
        if (binom2(n) > 64)
            throw std::invalid_argument("edge masks need C(n,2) <= 64");
        const auto& label = partitions.at(index);
        std::uint64_t mask = 0;
        int e = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v, ++e)
                if (label[u] == label[v])
                    mask |= std::uint64_t{1} << e;
        return mask;
    }
};

/// Case formula: j parts of size ceil(n/(t-1)) and the rest of size floor(n/(t-1)).
inline std::int64_t equipartition_pairs(int n, int t)
{
    const int q = t - 1;
    const int r = n / q, j = n % q;
    return static_cast<std::int64_t>(q - j) * binom2(r) + static_cast<std::int64_t>(j) * binom2(r + 1);
}

inline PartitionFamily partition_family(int n, int t)
{
    if (t < 2)
        throw std::invalid_argument("partition family needs t >= 2");
    if (t > n)
        throw std::invalid_argument("partition family needs t <= n");
    if (n > 14)
        throw std::invalid_argument("partition enumeration limited to n <= 14");
    PartitionFamily f;
    f.n = n;
    f.t = t;
    const int q = t - 1;
    const int lo = n / q, hi = (n + q - 1) / q;

    std::vector<int> label(static_cast<std::size_t>(n), -1);
    std::vector<int> sizes;
    auto place = [&](auto&& self, int v) -> void {
        if (v == n) {
            if (static_cast<int>(sizes.size()) != q)
                return;
            for (int s : sizes)
                if (s < lo || s > hi)
                    return;
            f.partitions.push_back(label);
            return;
        }
        // unplaced vertices must still be able to open the missing parts
        if (n - v < q - static_cast<int>(sizes.size()))
            return;
        for (std::size_t p = 0; p < sizes.size(); ++p) {
            if (sizes[p] == hi)
                continue;
            label[v] = static_cast<int>(p);
            ++sizes[p];
            self(self, v + 1);
            --sizes[p];
        }
        if (static_cast<int>(sizes.size()) < q) {
            label[v] = static_cast<int>(sizes.size());
            sizes.push_back(1);
            self(self, v + 1);
            sizes.pop_back();
        }
        label[v] = -1;
    };
    place(place, 0);

    f.size = static_cast<std::int64_t>(f.partitions.size());
    f.m_formula = equipartition_pairs(n, t);
    std::vector<std::int64_t> cover(static_cast<std::size_t>(binom2(n)), 0);
    bool first = true;
    for (const auto& lab : f.partitions) {
        std::int64_t within = 0;
        int e = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v, ++e)
                if (lab[u] == lab[v]) {
                    ++within;
                    ++cover[static_cast<std::size_t>(e)];
                }
        if (first)
            f.m = within;
        else if (within != f.m)
            throw std::logic_error("within-part pair count differs between partitions");
        first = false;
    }
    if (f.m != f.m_formula)
        throw std::logic_error("enumerated m differs from the case formula");
    if (f.m * q > binom2(n))
        throw std::logic_error("m exceeds C(n,2)/(t-1)");
    f.uniform_coverage = !cover.empty() || n < 2;
    for (auto c : cover)
        if (c != cover.front())
            f.uniform_coverage = false;
    f.k = cover.empty() ? 0 : cover.front();
    if (!f.uniform_coverage)
        throw std::logic_error("partitions do not cover the pairs uniformly");
    if (f.m * f.size != binom2(n) * f.k)
        throw std::logic_error("double count m |F| = C(n,2) k fails");
    return f;
}

// ---------------------------------------------------------------------------
// Homomorphism counts from complete bipartite graphs into bipartite hosts

struct KstBounds {
    int s = 0, t = 0, n1 = 0, n2 = 0;
    double alpha = 0;
    std::int64_t edges = 0;
    double lb2 = 0, ub = 0;
    double log2_lb2 = 0, log2_ub = 0;
    double lb1_sidorenko = 0, log2_lb1 = 0;
    double ratio = 0;  // lb2 / lb1
};

namespace detail {

inline std::int64_t integral_edges(int n1, int n2, double alpha)
{
    if (n1 < 1 || n2 < 1)
        throw std::invalid_argument("part sizes must be positive");
    if (!(alpha > 0 && alpha <= 1))
        throw std::invalid_argument("alpha must lie in (0, 1]");
    const double e = alpha * n1 * n2;
    const double r = std::round(e);
    if (std::abs(e - r) > 1e-9 * std::max(1.0, e))
        throw std::invalid_argument("alpha * n1 * n2 must be an integer edge count");
    return static_cast<std::int64_t>(r);
}

}  // namespace detail

inline KstBounds kst_hom_bounds(int s, int t, int n1, int n2, double alpha)
{
    if (s < 1 || t < 1)
        throw std::invalid_argument("s and t must be positive");
    KstBounds b;
    b.s = s;
    b.t = t;
    b.n1 = n1;
    b.n2 = n2;
    b.edges = detail::integral_edges(n1, n2, alpha);
    b.alpha = static_cast<double>(b.edges) / (static_cast<double>(n1) * n2);
    const double a = b.alpha;
    const double prod = static_cast<double>(n1) * n2;
    const int hi = std::max(s, t);
    b.log2_lb2 = s * t * std::log2(a) - std::abs(s - t) * std::log2(std::min(n1, n2)) + hi * std::log2(prod);
    b.log2_ub = hi * std::log2(2.0 * a * prod);
    b.lb2 = std::pow(a, s * t) * std::pow(std::min(n1, n2), -std::abs(s - t)) * std::pow(prod, hi);
    b.ub = std::pow(2.0 * a * prod, hi);
    b.log2_lb1 = s * t * std::log2(2.0 * a) + (s + t - 2 * s * t) * std::log2(n1 + n2) + s * t * std::log2(prod);
    b.lb1_sidorenko = std::pow(2.0 * a, s * t) * std::pow(static_cast<double>(n1 + n2), s + t - 2 * s * t) *
                      std::pow(prod, s * t);
    b.ratio = b.lb2 / b.lb1_sidorenko;
    return b;
}

enum class SidorenkoCase { star, two_two, general };

inline const char* to_string(SidorenkoCase c)
{
    switch (c) {
    case SidorenkoCase::star:
        return "star";
    case SidorenkoCase::two_two:
        return "two-two";
    case SidorenkoCase::general:
        break;
    }
    return "general";
}

struct SidorenkoComparison {
    double lb1 = 0;
    double lb2 = 0;
    double ratio_direct = 0;
    double ratio_delta = 0;
    double delta = 1;
    double floor_bound = 0;        // 2^{st - (s + t)}
    SidorenkoCase case_id = SidorenkoCase::general;
    bool forms_agree = false;      // 1e-9 relative
    bool floor_holds = false;
    bool case_holds = false;       // the conclusion listed for case_id
};

inline SidorenkoComparison sidorenko_comparison(int s, int t, int n1, int n2, double alpha)
{
    const auto b = kst_hom_bounds(s, t, n1, n2, alpha);
    SidorenkoComparison c;
    c.lb1 = b.lb1_sidorenko;
    c.lb2 = b.lb2;
    c.ratio_direct = b.ratio;
    const int sp = std::max(s, t), tp = std::min(s, t);
    c.delta = static_cast<double>(std::max(n1, n2)) / std::min(n1, n2);
    const double d = c.delta;
    c.ratio_delta = std::pow(2.0, -sp) * std::pow((1 + d) * (1 + d) / (2 * d), sp * (tp - 1)) * std::pow(1 + d, sp - tp);
    c.forms_agree = std::abs(c.ratio_direct - c.ratio_delta) <= 1e-9 * std::max(std::abs(c.ratio_delta), 1e-300);
    c.floor_bound = std::exp2(s * t - (s + t));
    const double tol = 1e-12;
    c.floor_holds = c.ratio_direct >= c.floor_bound * (1 - tol);
    if (s == 1 || t == 1) {
        c.case_id = SidorenkoCase::star;
        c.case_holds = c.ratio_direct >= 0.5 * (1 - tol);
    } else if (s == 2 && t == 2) {
        c.case_id = SidorenkoCase::two_two;
        c.case_holds = c.ratio_direct >= 1 - tol && (d == 1 || c.ratio_direct > 1);
    } else {
        c.case_id = SidorenkoCase::general;
        c.case_holds = c.ratio_direct >= 2 * (1 - tol);
    }
    return c;
}

// ---------------------------------------------------------------------------
// Named bound values for reporting

struct BoundEntry {
    std::string quantity;
    std::optional<std::int64_t> exponent2;
    std::optional<double> real;
    std::string tag;
};

struct BoundReport {
    std::vector<BoundEntry> entries;
    bool ordered = false;   // LB <= chi-UB <= theta-UB <= trivial
    bool lb_le_ub = false;
};

inline BoundReport intersecting_bound_report(const Graph& h, int n, const SdpOptions& opt = {})
{
    BoundReport r;
    const auto ub = intersecting_ub_exponent(h, n);
    const auto th = theta_of_complement(h, opt);
    const Exponent2 ub_theta{binom2(n) - (th.ceiled - 1)};
    const auto lb = intersecting_lb_exponent(h, n);
    const auto triv = trivial_ub_exponent(n);
    r.entries.push_back({"ub_chromatic", ub.e, std::nullopt, "intersecting_ub_chromatic"});
    r.entries.push_back({"ub_theta", ub_theta.e, std::nullopt, "intersecting_ub_theta"});
    r.entries.push_back({"theta_complement", std::nullopt, th.sdp_value, "theta_sdp"});
    r.entries.push_back({"lb_canonical", lb.e, std::nullopt, "intersecting_lb_canonical"});
    r.entries.push_back({"trivial_ub", triv.e, std::nullopt, "intersecting_ub_trivial"});
    if (h.is_regular()) {
        const auto reg = regular_or_srg_exponent(h, n);
        r.entries.push_back({"ub_regular", reg.exponent.e, std::nullopt, "intersecting_ub_regular"});
        r.entries.push_back({"spectral_ratio", std::nullopt, reg.ratio, "regular_spectral_ratio"});
        if (reg.srg)
            r.entries.push_back({"ub_srg_ceiling", std::nullopt, static_cast<double>(*reg.srg_ceiled), "srg_ceiling"});
    }
    r.lb_le_ub = lb <= ub;
    r.ordered = lb <= ub && ub <= ub_theta && ub_theta <= triv;
    return r;
}

}  // namespace graphent
