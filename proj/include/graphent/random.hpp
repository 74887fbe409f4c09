#pragma once

#include <graphent/entropy.hpp>
#include <graphent/graph.hpp>

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace graphent {

/// SplitMix64. Every draw is computed here from raw 64-bit outputs, so
/// sequences are identical across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next()
    {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Independent stream derived from this one.
    Rng split() { return Rng(next() ^ 0x6a09e667f3bcc909ULL); }

    /// Uniform in [0, bound) by rejection.
    std::uint64_t uniform(std::uint64_t bound)
    {
        if (bound == 0)
            throw std::invalid_argument("uniform bound must be positive");
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % bound;
    }

    int range(int lo, int hi) { return lo + static_cast<int>(uniform(static_cast<std::uint64_t>(hi - lo + 1))); }

    /// Uniform in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return unit() < p; }

    template <class T>
    void shuffle(std::vector<T>& v)
    {
        for (std::size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[uniform(i)]);
    }

private:
    std::uint64_t state_;
};

inline Graph random_graph(Rng& rng, int n, double p)
{
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.bernoulli(p))
                g.add_edge(u, v);
    return g;
}

/// Random graph whose isolated vertices are patched by one edge each.
inline Graph random_graph_without_isolated(Rng& rng, int n, double p)
{
    if (n < 2)
        throw std::invalid_argument("need at least two vertices");
    Graph g = random_graph(rng, n, p);
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 0) {
            int w = rng.range(0, n - 2);
            if (w >= v)
                ++w;
            g.add_edge(v, w);
        }
    return g;
}

/// Bipartite graph with parts 0..n1-1 and n1..n1+n2-1 and no isolated vertex.
inline Graph random_bipartite_without_isolated(Rng& rng, int n1, int n2, double p)
{
    Graph g(n1 + n2);
    for (int a = 0; a < n1; ++a)
        for (int b = 0; b < n2; ++b)
            if (rng.bernoulli(p))
                g.add_edge(a, n1 + b);
    for (int a = 0; a < n1; ++a)
        if (g.degree(a) == 0)
            g.add_edge(a, n1 + rng.range(0, n2 - 1));
    for (int b = 0; b < n2; ++b)
        if (g.degree(n1 + b) == 0)
            g.add_edge(rng.range(0, n1 - 1), n1 + b);
    return g;
}

/// Random pmf over a product alphabet; a random fraction of outcomes gets mass.
inline JointPmf random_pmf(Rng& rng, int n, int max_alphabet)
{
    std::vector<int> sizes(static_cast<std::size_t>(n));
    std::size_t outcomes = 1;
    for (auto& a : sizes) {
        a = rng.range(1, max_alphabet);
        outcomes *= static_cast<std::size_t>(a);
    }
    const double keep = 0.2 + 0.8 * rng.unit();
    std::vector<std::pair<JointPmf::Outcome, double>> support;
    double total = 0;
    for (std::size_t idx = 0; idx < outcomes; ++idx) {
        if (!rng.bernoulli(keep) && !(idx + 1 == outcomes && support.empty()))
            continue;
        JointPmf::Outcome x(static_cast<std::size_t>(n));
        std::size_t rest = idx;
        for (int i = 0; i < n; ++i) {
            x[i] = static_cast<int>(rest % static_cast<std::size_t>(sizes[i]));
            rest /= static_cast<std::size_t>(sizes[i]);
        }
        const double w = rng.unit() + 1e-3;
        support.emplace_back(std::move(x), w);
        total += w;
    }
    for (auto& [x, w] : support)
        w /= total;
    // absorb rounding so the total is 1 to within a few ulps
    double sum = 0;
    for (std::size_t i = 0; i + 1 < support.size(); ++i)
        sum += support[i].second;
    support.back().second = 1.0 - sum;
    return JointPmf(std::move(sizes), support);
}

/// Product of independent uniform coordinates.
inline JointPmf uniform_product_pmf(std::vector<int> sizes)
{
    std::size_t outcomes = 1;
    for (int a : sizes)
        outcomes *= static_cast<std::size_t>(a);
    std::vector<std::pair<JointPmf::Outcome, double>> support;
    for (std::size_t idx = 0; idx < outcomes; ++idx) {
        JointPmf::Outcome x(sizes.size());
        std::size_t rest = idx;
        for (std::size_t i = 0; i < sizes.size(); ++i) {
            x[i] = static_cast<int>(rest % static_cast<std::size_t>(sizes[i]));
            rest /= static_cast<std::size_t>(sizes[i]);
        }
        support.emplace_back(std::move(x), 1.0 / static_cast<double>(outcomes));
    }
    return JointPmf(std::move(sizes), support);
}

/// Random cover of [n]; k is the realised minimum coverage.
inline CoverFamily random_cover(Rng& rng, int n)
{
    CoverFamily c{n, {}, 1};
    const int count = rng.range(1, 2 * n);
    for (int j = 0; j < count; ++j)
        c.subsets.push_back(rng.uniform(std::uint64_t{1} << n));
    // patch uncovered elements
    for (int i = 0; i < n; ++i)
        if (c.coverage(i) == 0)
            c.subsets[rng.uniform(c.subsets.size())] |= Subset{1} << i;
    c.k = c.min_coverage();
    return c;
}

inline SubsetDistribution random_subset_distribution(Rng& rng, int n)
{
    SubsetDistribution d{n, {}, 0};
    const int count = rng.range(1, 2 * n);
    double total = 0;
    for (int j = 0; j < count; ++j) {
        const double w = rng.unit() + 1e-3;
        d.mass.emplace_back(rng.uniform(std::uint64_t{1} << n), w);
        total += w;
    }
    for (int i = 0; i < n; ++i) {
        const bool covered = std::any_of(d.mass.begin(), d.mass.end(), [&](const auto& e) { return (e.first >> i) & 1U; });
        if (!covered)
            d.mass[rng.uniform(d.mass.size())].first |= Subset{1} << i;
    }
    for (auto& [s, w] : d.mass)
        w /= total;
    double sum = 0;
    for (std::size_t i = 0; i + 1 < d.mass.size(); ++i)
        sum += d.mass[i].second;
    d.mass.back().second = 1.0 - sum;
    d.theta = d.min_inclusion();
    return d;
}

}  // namespace graphent
