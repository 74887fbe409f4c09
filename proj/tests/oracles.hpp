#pragma once

// Brute-force reference implementations for the tests. They only read
// order() and adjacent() and enumerate everything, so they share no search
// code with the library.

#include <graphent/graph.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using graphent::Graph;

inline std::vector<std::vector<bool>> matrix(const Graph& g)
{
    const int n = g.order();
    std::vector<std::vector<bool>> a(n, std::vector<bool>(n, false));
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            a[u][v] = u != v && g.adjacent(u, v);
    return a;
}

inline int edge_count(const Graph& g)
{
    const auto a = matrix(g);
    int m = 0;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            m += a[u][v];
    return m;
}

inline bool is_clique(const std::vector<std::vector<bool>>& a, std::uint32_t subset)
{
    const int n = static_cast<int>(a.size());
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if ((subset >> u & 1U) && (subset >> v & 1U) && !a[u][v])
                return false;
    return true;
}

inline int clique_number(const Graph& g)
{
    const auto a = matrix(g);
    int best = 0;
    for (std::uint32_t s = 0; s < (1U << g.order()); ++s)
        if (is_clique(a, s))
            best = std::max(best, std::popcount(s));
    return best;
}

inline int independence_number(const Graph& g)
{
    const auto a = matrix(g);
    const int n = g.order();
    int best = 0;
    for (std::uint32_t s = 0; s < (1U << n); ++s) {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n && ok; ++v)
                if ((s >> u & 1U) && (s >> v & 1U) && a[u][v])
                    ok = false;
        if (ok)
            best = std::max(best, std::popcount(s));
    }
    return best;
}

/// Number of proper colorings with k colors, by full enumeration.
inline std::int64_t proper_colorings(const Graph& g, int k)
{
    const auto a = matrix(g);
    const int n = g.order();
    if (n == 0)
        return 1;
    if (k == 0)
        return 0;
    std::vector<int> c(n, 0);
    std::int64_t count = 0;
    while (true) {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n && ok; ++v)
                if (a[u][v] && c[u] == c[v])
                    ok = false;
        count += ok;
        int i = 0;
        while (i < n && ++c[i] == k)
            c[i++] = 0;
        if (i == n)
            break;
    }
    return count;
}

inline int chromatic_number(const Graph& g)
{
    if (g.order() == 0)
        return 0;
    for (int k = 1;; ++k)
        if (proper_colorings(g, k) > 0)
            return k;
}

/// Calls visit(map) for every map [k] -> [n].
template <class F>
void for_each_map(int k, int n, F&& visit)
{
    if (k == 0) {
        visit(std::vector<int>{});
        return;
    }
    if (n == 0)
        return;
    std::vector<int> f(k, 0);
    while (true) {
        visit(f);
        int i = 0;
        while (i < k && ++f[i] == n)
            f[i++] = 0;
        if (i == k)
            return;
    }
}

struct Counts {
    std::int64_t hom = 0;
    std::int64_t inj = 0;
    std::int64_t aut = 0;
    std::int64_t copies = 0;
};

inline bool preserves_edges(const std::vector<std::vector<bool>>& t, const std::vector<std::vector<bool>>& g,
                            const std::vector<int>& f)
{
    for (std::size_t u = 0; u < f.size(); ++u)
        for (std::size_t v = u + 1; v < f.size(); ++v)
            if (t[u][v] && !g[f[u]][f[v]])
                return false;
    return true;
}

inline bool injective(const std::vector<int>& f)
{
    std::set<int> seen(f.begin(), f.end());
    return seen.size() == f.size();
}

/// hom, inj, aut(h) and copies (distinct image edge sets) by enumeration.
inline Counts counts(const Graph& h, const Graph& g)
{
    const auto a = matrix(h), b = matrix(g);
    Counts c;
    std::set<std::set<std::pair<int, int>>> images;
    for_each_map(h.order(), g.order(), [&](const std::vector<int>& f) {
        if (!preserves_edges(a, b, f))
            return;
        ++c.hom;
        if (!injective(f))
            return;
        ++c.inj;
        std::set<std::pair<int, int>> image;
        for (int u = 0; u < h.order(); ++u)
            for (int v = u + 1; v < h.order(); ++v)
                if (a[u][v])
                    image.insert(std::minmax(f[u], f[v]));
        // isolated vertices of h also pin vertices of the copy
        std::set<std::pair<int, int>> tagged = image;
        for (int u = 0; u < h.order(); ++u)
            tagged.insert({f[u], f[u]});
        images.insert(tagged);
    });
    std::vector<int> perm(h.order());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool same = true;
        for (int u = 0; u < h.order() && same; ++u)
            for (int v = 0; v < h.order() && same; ++v)
                if (a[u][v] != a[perm[u]][perm[v]])
                    same = false;
        c.aut += same;
    } while (std::next_permutation(perm.begin(), perm.end()));
    c.copies = static_cast<std::int64_t>(images.size());
    return c;
}

inline bool contains_subgraph(const Graph& h, const Graph& g)
{
    if (h.order() > g.order())
        return false;
    const auto a = matrix(h), b = matrix(g);
    bool found = false;
    for_each_map(h.order(), g.order(), [&](const std::vector<int>& f) {
        if (!found && injective(f) && preserves_edges(a, b, f))
            found = true;
    });
    return found;
}

inline bool isomorphic(const Graph& x, const Graph& y)
{
    if (x.order() != y.order())
        return false;
    const auto a = matrix(x), b = matrix(y);
    std::vector<int> perm(x.order());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool same = true;
        for (int u = 0; u < x.order() && same; ++u)
            for (int v = 0; v < x.order() && same; ++v)
                if (a[u][v] != b[perm[u]][perm[v]])
                    same = false;
        if (same)
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

/// Number of l-vertex cliques for l = 1..n.
inline std::vector<std::int64_t> clique_counts(const Graph& g)
{
    const auto a = matrix(g);
    std::vector<std::int64_t> out(g.order(), 0);
    for (std::uint32_t s = 1; s < (1U << g.order()); ++s)
        if (is_clique(a, s))
            ++out[std::popcount(s) - 1];
    return out;
}

/// Shannon entropy in bits of a probability vector.
inline double entropy_bits(const std::vector<double>& p)
{
    double h = 0;
    for (double q : p)
        if (q > 0)
            h -= q * std::log2(q);
    return h;
}

}  // namespace oracle
