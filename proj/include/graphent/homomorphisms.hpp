#pragma once

#include <graphent/graph.hpp>
#include <graphent/invariants.hpp>
#include <graphent/theta.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace graphent {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt factorial(int k)
{
    BigInt f = 1;
    for (int i = 2; i <= k; ++i)
        f *= i;
    return f;
}

inline BigInt pow_big(const BigInt& base, unsigned exp) { return boost::multiprecision::pow(base, exp); }

/// log2 of a nonnegative BigInt; -inf for zero.
inline double log2_big(const BigInt& x)
{
    if (x <= 0)
        return -INFINITY;
    const unsigned msb = boost::multiprecision::msb(x);
    if (msb < 52)
        return std::log2(x.convert_to<double>());
    const unsigned shift = msb - 52;
    return std::log2(static_cast<BigInt>(x >> shift).convert_to<double>()) + shift;
}

class count_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr double brute_force_map_limit = 1e8;

namespace detail {

inline double map_space(const Graph& t, const Graph& g)
{
    return std::pow(static_cast<double>(g.order()), t.order());
}

}  // namespace detail

/// Counts every map V(t) -> V(g) one at a time and tests each edge.
inline BigInt hom_count_brute_force(const Graph& t, const Graph& g)
{
    if (detail::map_space(t, g) > brute_force_map_limit)
        throw count_error("brute-force hom count limited to |V(g)|^|V(t)| <= 1e8");
    const int k = t.order(), n = g.order();
    if (k == 0)
        return 1;
    if (n == 0)
        return 0;
    const auto edges = t.edges();
    std::vector<int> image(static_cast<std::size_t>(k), 0);
    std::uint64_t total = 0;
    while (true) {
        bool ok = true;
        for (auto [u, v] : edges)
            if (!g.adjacent(image[u], image[v])) {
                ok = false;
                break;
            }
        total += ok;
        int pos = 0;
        while (pos < k && ++image[pos] == n)
            image[pos++] = 0;
        if (pos == k)
            break;
    }
    return total;
}

inline BigInt hom_count_backtracking(const Graph& t, const Graph& g)
{
    // counts are held in a machine word during the search
    if (std::log2(static_cast<double>(std::max(g.order(), 1))) * t.order() >= 63.0)
        throw count_error("hom count exceeds the 2^63 search range");
    return detail::MapSearch(t, g, MapKind::homomorphism).count();
}

enum class CountMethod { automatic, brute_force, backtracking };

inline BigInt hom_count(const Graph& t, const Graph& g, CountMethod method = CountMethod::automatic)
{
    switch (method) {
    case CountMethod::brute_force:
        return hom_count_brute_force(t, g);
    case CountMethod::backtracking:
    case CountMethod::automatic:
        break;
    }
    return hom_count_backtracking(t, g);
}

inline BigInt inj_count(const Graph& t, const Graph& g)
{
    if (t.order() > g.order())
        return 0;
    if (std::log2(static_cast<double>(std::max(g.order(), 1))) * t.order() >= 63.0)
        throw count_error("injective count exceeds the 2^63 search range");
    return detail::MapSearch(t, g, MapKind::injective).count();
}

/// Permutations of V(h) preserving adjacency and non-adjacency.
inline BigInt aut_count(const Graph& h)
{
    if (h.order() > 20)
        throw count_error("automorphism count limited to 20 vertices");
    return detail::MapSearch(h, h, MapKind::induced_injective).count();
}

/// Not-necessarily-induced copies of h in g: inj / aut.
inline BigInt copy_count(const Graph& h, const Graph& g)
{
    const BigInt inj = inj_count(h, g);
    const BigInt aut = aut_count(h);
    if (inj % aut != 0)
        throw std::logic_error("inj(h,g) is not a multiple of aut(h)");
    return inj / aut;
}

/// Copies of h in g counted as distinct image subgraphs (vertex set plus edge
/// set) of the injective maps; independent of the automorphism count.
inline BigInt copy_count_by_images(const Graph& h, const Graph& g)
{
    if (h.order() > g.order())
        return 0;
    const EdgeUniverse u(g.order());
    std::set<std::pair<vertex_set, std::vector<std::size_t>>> images;
    std::vector<std::pair<int, int>> h_edges = h.edges();
    detail::MapSearch(h, g, MapKind::injective).enumerate([&](std::span<const int> image) {
        vertex_set verts = 0;
        for (int w : image)
            verts |= bit(w);
        std::vector<std::size_t> edges;
        edges.reserve(h_edges.size());
        for (auto [a, b] : h_edges)
            edges.push_back(u.index(image[a], image[b]));
        std::sort(edges.begin(), edges.end());
        images.emplace(verts, std::move(edges));
        return true;
    });
    return images.size();
}

struct HomCounts {
    BigInt hom;
    BigInt inj;
    BigInt aut;
    BigInt copies;
};

inline HomCounts hom_counts(const Graph& h, const Graph& g)
{
    HomCounts c;
    c.hom = hom_count(h, g);
    c.inj = inj_count(h, g);
    c.aut = aut_count(h);
    c.copies = copy_count(h, g);
    return c;
}

/// counts[l-1] = number of l-cliques for l = 1..n.
struct CliqueProfile {
    std::vector<BigInt> counts;

    BigInt at(int l) const
    {
        if (l < 1 || l > static_cast<int>(counts.size()))
            return 0;
        return counts[static_cast<std::size_t>(l - 1)];
    }
};

inline CliqueProfile clique_profile(const Graph& g)
{
    CliqueProfile p;
    p.counts.assign(static_cast<std::size_t>(g.order()), 0);
    std::vector<std::uint64_t> raw(static_cast<std::size_t>(g.order()), 0);
    // extend cliques only by higher-labelled common neighbours
    auto grow = [&](auto&& self, int size, vertex_set cand) -> void {
        while (cand) {
            const int v = lowest(cand);
            cand &= cand - 1;
            ++raw[static_cast<std::size_t>(size)];
            self(self, size + 1, cand & g.neighbors(v));
        }
    };
    grow(grow, 0, g.vertices());
    for (std::size_t i = 0; i < raw.size(); ++i)
        p.counts[i] = raw[i];
    return p;
}

struct CountInequality {
    BigInt lhs;
    BigInt rhs;
    bool holds = false;
};

/// (t! m_t)^s <= (s! m_s)^t.
inline CountInequality clique_inequality_check(const Graph& g, int s, int t)
{
    if (!(2 <= s && s < t && t <= g.order()))
        throw std::invalid_argument("clique inequality needs 2 <= s < t <= n");
    const auto prof = clique_profile(g);
    CountInequality r;
    r.lhs = pow_big(factorial(t) * prof.at(t), static_cast<unsigned>(s));
    r.rhs = pow_big(factorial(s) * prof.at(s), static_cast<unsigned>(t));
    r.holds = r.lhs <= r.rhs;
    return r;
}

struct GeneralizedCliqueCheck {
    BigInt lhs;                 // (t! m(T,G))^s
    BigInt rhs;                 // max_S (s! m(S,G))^t
    bool holds = false;
    Graph argmax;               // S attaining rhs (first in enumeration order on ties)
    std::vector<Graph> candidates;
    std::vector<BigInt> candidate_terms;
    BigInt inj_lhs;             // (t!/aut(T) inj(T,G))^s
    BigInt inj_rhs;             // max_S (s!/aut(S) inj(S,G))^t
    bool inj_form_holds = false;
};

/// Copy-count inequality over the s-vertex induced subgraphs of t_sub, with
/// copies counted as not-necessarily-induced occurrences; the inj/aut form is
/// evaluated from independent counts and must give the same verdict.
inline GeneralizedCliqueCheck generalized_clique_check(const Graph& g, const Graph& t_sub, int s)
{
    const int t = t_sub.order();
    if (!(1 <= s && s < t && t < g.order()))
        throw std::invalid_argument("generalized clique check needs s < |V(T)| < |V(G)|");
    if (!is_induced_subgraph(t_sub, g))
        throw std::invalid_argument("T is not an induced subgraph of G");
    GeneralizedCliqueCheck r;
    const BigInt t_fact = factorial(t), s_fact = factorial(s);
    r.lhs = pow_big(t_fact * copy_count(t_sub, g), static_cast<unsigned>(s));
    const BigInt aut_t = aut_count(t_sub);
    r.inj_lhs = pow_big(t_fact * inj_count(t_sub, g) / aut_t, static_cast<unsigned>(s));
    r.candidates = enumerate_induced(t_sub, s);
    bool first = true;
    for (const auto& cand : r.candidates) {
        const BigInt term = pow_big(s_fact * copy_count(cand, g), static_cast<unsigned>(t));
        const BigInt aut_s = aut_count(cand);
        const BigInt inj_term = pow_big(s_fact * inj_count(cand, g) / aut_s, static_cast<unsigned>(t));
        r.candidate_terms.push_back(term);
        if (first || term > r.rhs) {
            r.rhs = term;
            r.argmax = cand;
        }
        if (first || inj_term > r.inj_rhs)
            r.inj_rhs = inj_term;
        first = false;
    }
    r.holds = r.lhs <= r.rhs;
    r.inj_form_holds = r.inj_lhs <= r.inj_rhs;
    return r;
}

/// hom(K_{s,t}, g) = sum over ordered s-tuples of |common neighbourhood|^t.
inline BigInt hom_kst_fast(int s, int t, const Graph& g)
{
    if (s < 1 || t < 1)
        throw std::invalid_argument("part sizes must be positive");
    const int n = g.order();
    if (n == 0)
        return 0;
    // histogram of common-neighbourhood sizes over ordered s-tuples
    std::vector<BigInt> hist(static_cast<std::size_t>(n + 1), 0);
    auto walk = [&](auto&& self, int depth, vertex_set common) -> void {
        if (depth == s) {
            hist[static_cast<std::size_t>(popcount(common))] += 1;
            return;
        }
        for (int v = 0; v < n; ++v)
            self(self, depth + 1, common & g.neighbors(v));
    };
    if (std::pow(static_cast<double>(n), s) > 1e8)
        throw count_error("K_{s,t} fast path limited to n^s <= 1e8 tuples");
    walk(walk, 0, g.vertices());
    BigInt total = 0;
    for (int c = 1; c <= n; ++c)
        if (hist[static_cast<std::size_t>(c)] != 0)
            total += hist[static_cast<std::size_t>(c)] * pow_big(BigInt(c), static_cast<unsigned>(t));
    return total;
}

struct HomBoundCheck {
    BigInt hom;
    double alpha_frac = 0;
    double bound = 0;            // (2|E(g)|)^{alpha*}
    double log2_bound = 0;
    bool holds = false;
    bool perfect = false;
    std::optional<double> theta;  // theta(t) when t is perfect
    std::optional<double> theta_bound;
    bool theta_holds = true;
    double edge_packing = 0;      // LP with one row per edge
    bool edge_packing_holds = false;
};

/// hom(t, g) <= (2|E(g)|)^{alpha*(t)}; both graphs must lack isolated vertices.
inline HomBoundCheck hom_ub_check(const Graph& t, const Graph& g, bool check_theta = true)
{
    if (t.has_isolated_vertex() || g.has_isolated_vertex())
        throw std::invalid_argument("hom upper bound needs graphs without isolated vertices");
    HomBoundCheck r;
    r.hom = hom_count(t, g);
    r.alpha_frac = fractional_independence(t);
    const double base = 2.0 * static_cast<double>(g.edge_count());
    r.log2_bound = r.alpha_frac * std::log2(base);
    r.bound = std::pow(base, r.alpha_frac);
    const double slack = std::log2(1.0 + 1e-9);
    r.holds = log2_big(r.hom) <= r.log2_bound + slack;
    r.edge_packing = fractional_vertex_packing(t);
    r.edge_packing_holds = log2_big(r.hom) <= r.edge_packing * std::log2(base) + slack;
    if (check_theta && t.order() <= 12) {
        r.perfect = is_perfect(t);
        if (r.perfect) {
            r.theta = lovasz_theta(t);
            r.theta_bound = std::pow(base, *r.theta);
            // theta(t) = alpha*(t) for perfect t up to solver accuracy
            r.theta_holds = log2_big(r.hom) <= (*r.theta + 1e-5) * std::log2(base) + slack &&
                            std::abs(*r.theta - r.alpha_frac) <= 1e-4;
        }
    }
    return r;
}

}  // namespace graphent
