#pragma once

#include <graphent/detail/max_clique.hpp>
#include <graphent/graph.hpp>
#include <graphent/optim.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace graphent {

namespace detail {

inline std::vector<WideSet> wide_adjacency(const Graph& g)
{
    std::vector<WideSet> adj(static_cast<std::size_t>(g.order()), WideSet(g.order()));
    for (int v = 0; v < g.order(); ++v)
        for_each_vertex(g.neighbors(v), [&](int w) { adj[v].set(w); });
    return adj;
}

}  // namespace detail

inline std::vector<int> maximum_clique(const Graph& g)
{
    return detail::MaxCliqueSearch(detail::wide_adjacency(g)).run();
}

inline int clique_number(const Graph& g) { return static_cast<int>(maximum_clique(g).size()); }

inline int independence_number(const Graph& g) { return clique_number(complement(g)); }

/// Colors in vertex order with the smallest free color; returns the color count.
inline int greedy_coloring_bound(const Graph& g)
{
    std::vector<int> color(static_cast<std::size_t>(g.order()), -1);
    int used = 0;
    for (int v = 0; v < g.order(); ++v) {
        std::uint64_t taken = 0;
        for_each_vertex(g.neighbors(v), [&](int w) {
            if (color[w] >= 0)
                taken |= std::uint64_t{1} << color[w];
        });
        color[v] = std::countr_one(taken);
        used = std::max(used, color[v] + 1);
    }
    return used;
}

namespace detail {

/// DSATUR-ordered backtracking test for a proper k-coloring.
class Colorer {
public:
    Colorer(const Graph& g, int k) : g_(g), k_(k), color_(static_cast<std::size_t>(g.order()), -1) {}

    bool solve() { return place(0); }

private:
    int pick() const
    {
        int best = -1, best_sat = -1, best_deg = -1;
        for (int v = 0; v < g_.order(); ++v) {
            if (color_[v] >= 0)
                continue;
            std::uint64_t seen = 0;
            int uncolored_deg = 0;
            for_each_vertex(g_.neighbors(v), [&](int w) {
                if (color_[w] >= 0)
                    seen |= std::uint64_t{1} << color_[w];
                else
                    ++uncolored_deg;
            });
            const int sat = std::popcount(seen);
            if (sat > best_sat || (sat == best_sat && uncolored_deg > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = uncolored_deg;
            }
        }
        return best;
    }

    bool place(int colored)
    {
        if (colored == g_.order())
            return true;
        const int v = pick();
        std::uint64_t taken = 0;
        int max_used = -1;
        for (int c : color_)
            max_used = std::max(max_used, c);
        for_each_vertex(g_.neighbors(v), [&](int w) {
            if (color_[w] >= 0)
                taken |= std::uint64_t{1} << color_[w];
        });
        // colors above max_used+1 are symmetric to max_used+1
        const int limit = std::min(k_, max_used + 2);
        for (int c = 0; c < limit; ++c) {
            if (taken & (std::uint64_t{1} << c))
                continue;
            color_[v] = c;
            if (place(colored + 1))
                return true;
        }
        color_[v] = -1;
        return false;
    }

    const Graph& g_;
    int k_;
    std::vector<int> color_;
};

}  // namespace detail

inline bool is_k_colorable(const Graph& g, int k)
{
    if (g.order() == 0)
        return true;
    if (k <= 0)
        return false;
    return detail::Colorer(g, k).solve();
}

/// Exact chromatic number, searching k upward from the clique number.
inline int chromatic_number(const Graph& g)
{
    if (g.order() == 0)
        return 0;
    const int lower = clique_number(g);
    const int upper = greedy_coloring_bound(g);
    for (int k = lower; k < upper; ++k)
        if (is_k_colorable(g, k))
            return k;
    return upper;
}

/// Maximal cliques by Bron–Kerbosch with Tomita pivoting.
inline std::vector<vertex_set> maximal_cliques(const Graph& g)
{
    std::vector<vertex_set> out;
    auto rec = [&](auto&& self, vertex_set r, vertex_set p, vertex_set x) -> void {
        if (!p && !x) {
            out.push_back(r);
            return;
        }
        int pivot = -1, best = -1;
        for_each_vertex(p | x, [&](int u) {
            const int c = popcount(p & g.neighbors(u));
            if (c > best) {
                best = c;
                pivot = u;
            }
        });
        vertex_set todo = p & ~g.neighbors(pivot);
        while (todo) {
            const int v = lowest(todo);
            todo &= todo - 1;
            self(self, r | bit(v), p & g.neighbors(v), x & g.neighbors(v));
            p &= ~bit(v);
            x |= bit(v);
        }
    };
    if (g.order() > 0)
        rec(rec, 0, g.vertices(), 0);
    std::sort(out.begin(), out.end());
    return out;
}

/// Packing LP of the fractional independence number: one <= 1 row per
/// maximal clique (every clique row is dominated by a maximal one).
inline LpProblem clique_packing_lp(const Graph& g)
{
    LpProblem lp;
    lp.objective.assign(static_cast<std::size_t>(g.order()), 1.0);
    for (auto clique : maximal_cliques(g)) {
        LpConstraint row{std::vector<double>(static_cast<std::size_t>(g.order()), 0.0), 1.0};
        for_each_vertex(clique, [&](int v) { row.coeffs[v] = 1.0; });
        lp.constraints.push_back(std::move(row));
    }
    return lp;
}

inline double fractional_independence(const Graph& g)
{
    if (g.order() == 0)
        return 0.0;
    return lp_maximize(clique_packing_lp(g)).value;
}

/// Vertex-packing LP with one x_u + x_v <= 1 row per edge (fractional edge
/// cover number by duality when there are no isolated vertices).
inline double fractional_vertex_packing(const Graph& g)
{
    if (g.order() == 0)
        return 0.0;
    LpProblem lp;
    lp.objective.assign(static_cast<std::size_t>(g.order()), 1.0);
    for (auto [u, v] : g.edges()) {
        LpConstraint row{std::vector<double>(static_cast<std::size_t>(g.order()), 0.0), 1.0};
        row.coeffs[u] = row.coeffs[v] = 1.0;
        lp.constraints.push_back(std::move(row));
    }
    // isolated vertices are capped at 1 so the LP stays bounded
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 0) {
            LpConstraint row{std::vector<double>(static_cast<std::size_t>(g.order()), 0.0), 1.0};
            row.coeffs[v] = 1.0;
            lp.constraints.push_back(std::move(row));
        }
    return lp_maximize(lp).value;
}

/// Perfect iff every induced subgraph has clique number equal to chromatic
/// number; exhaustive, intended for n <= 12.
inline bool is_perfect(const Graph& g)
{
    if (g.order() > 16)
        throw std::invalid_argument("is_perfect is exhaustive; n <= 16 only");
    const vertex_set all = g.vertices();
    for (vertex_set s = 1; s <= all && s != 0; ++s) {
        Graph sub = g.induced(s);
        if (clique_number(sub) != chromatic_number(sub))
            return false;
        if (s == all)
            break;
    }
    return true;
}

struct InvariantRecord {
    int omega = 0;
    int chi = 0;
    int alpha = 0;
    double alpha_frac = 0;
    int max_degree = 0;
    std::int64_t edge_count = 0;
};

inline InvariantRecord compute_invariants(const Graph& g)
{
    InvariantRecord r;
    r.omega = clique_number(g);
    r.chi = chromatic_number(g);
    r.alpha = independence_number(g);
    r.alpha_frac = fractional_independence(g);
    r.max_degree = g.max_degree();
    r.edge_count = g.edge_count();
    return r;
}

// ---------------------------------------------------------------------------
// Chromatic-number versus edge-count comparisons

/// Largest k with k(k-1)/2 <= m.
inline std::int64_t max_clique_order_for_edges(std::int64_t m)
{
    std::int64_t k = static_cast<std::int64_t>(std::floor((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(m))) / 2.0));
    while (binom2(k + 1) <= m)
        ++k;
    while (k > 0 && binom2(k) > m)
        --k;
    return k;
}

struct ChromaticGapReport {
    std::int64_t edges = 0;
    int chi = 0;
    int max_degree = 0;
    bool greedy_holds = false;          // chi <= Delta + 1
    double edge_bound = 0;              // (1 + sqrt(1 + 8m)) / 2
    bool edge_bound_holds = false;
    bool edge_bound_tight = false;
    bool edge_bound_tight_iff_complete = false;
    std::int64_t gap = 0;               // m - (chi - 1)
    bool gap_applicable = false;        // m >= 2
    std::int64_t gap_lower_bound = 0;   // ceil(m - (sqrt(8m+1) - 1)/2)
    bool gap_holds = true;
    bool brooks_applicable = false;     // connected, not complete, not an odd cycle
    bool brooks_holds = true;           // chi <= Delta

    bool all_hold() const
    {
        return greedy_holds && edge_bound_holds && edge_bound_tight_iff_complete && gap_holds && brooks_holds;
    }
};

inline bool is_odd_cycle(const Graph& g)
{
    return g.order() >= 3 && g.order() % 2 == 1 && g.is_connected() && g.is_regular() && g.order() > 0 &&
           g.degree(0) == 2;
}

inline ChromaticGapReport chromatic_gap_checks(const Graph& h)
{
    const std::int64_t m = h.edge_count();
    if (m == 0)
        throw std::invalid_argument("chromatic gap checks need a graph with at least one edge");
    ChromaticGapReport r;
    r.edges = m;
    r.chi = chromatic_number(h);
    r.max_degree = h.max_degree();
    r.greedy_holds = r.chi <= r.max_degree + 1;
    r.edge_bound = 0.5 * (1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(m)));
    // integer form: chi <= largest k with C(k,2) <= m, equality exactly for K_chi
    const std::int64_t kmax = max_clique_order_for_edges(m);
    r.edge_bound_holds = r.chi <= kmax;
    r.edge_bound_tight = binom2(r.chi) == m;
    // equality in the real bound: C(chi, 2) = m; among graphs without isolated
    // vertices this forces completeness
    vertex_set touched = 0;
    for (int v = 0; v < h.order(); ++v)
        if (h.degree(v) > 0)
            touched |= bit(v);
    const Graph core = h.induced(touched);
    r.edge_bound_tight_iff_complete = r.edge_bound_tight == core.is_complete();
    r.gap = m - (r.chi - 1);
    r.gap_applicable = m >= 2;
    if (r.gap_applicable) {
        r.gap_lower_bound = m - (kmax - 1);
        r.gap_holds = r.gap >= r.gap_lower_bound && r.gap_lower_bound >= 1;
    }
    r.brooks_applicable = h.is_connected() && !h.is_complete() && !is_odd_cycle(h);
    if (r.brooks_applicable)
        r.brooks_holds = r.chi <= r.max_degree;
    return r;
}

}  // namespace graphent
