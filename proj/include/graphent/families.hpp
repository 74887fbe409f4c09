#pragma once

#include <graphent/bounds.hpp>
#include <graphent/detail/max_clique.hpp>
#include <graphent/entropy.hpp>
#include <graphent/graph.hpp>
#include <graphent/invariants.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace graphent {

/// A graph on [n] identified with its edge set over EdgeUniverse(n).
struct LabeledGraphId {
    int n = 0;
    std::uint64_t mask = 0;

    Graph to_graph() const
    {
        const EdgeUniverse u(n);
        Graph g(n);
        for (std::size_t i = 0; i < u.size(); ++i)
            if ((mask >> i) & 1U)
                g.add_edge(u[i].first, u[i].second);
        return g;
    }

    static LabeledGraphId of(const Graph& g)
    {
        const EdgeUniverse u(g.order());
        if (u.size() > 64)
            throw std::invalid_argument("labeled graph ids need C(n,2) <= 64");
        LabeledGraphId id{g.order(), 0};
        for (auto [a, b] : g.edges())
            id.mask |= std::uint64_t{1} << u.index(a, b);
        return id;
    }

    friend bool operator==(const LabeledGraphId&, const LabeledGraphId&) = default;
    friend auto operator<=>(const LabeledGraphId&, const LabeledGraphId&) = default;
};

struct FamilyRecord {
    int n = 0;
    std::vector<LabeledGraphId> members;
    Graph target_h;
};

namespace detail {

inline void require_universe(int n, std::int64_t limit)
{
    if (n < 1)
        throw std::invalid_argument("n must be positive");
    if (binom2(n) > limit)
        throw std::invalid_argument("C(n,2) = " + std::to_string(binom2(n)) + " exceeds the supported " +
                                    std::to_string(limit));
}

/// Memoised "does the graph with this edge mask contain h".
class ContainsCache {
public:
    ContainsCache(int n, const Graph& h) : n_(n), h_(h) {}

    bool operator()(std::uint64_t mask)
    {
        auto it = memo_.find(mask);
        if (it != memo_.end())
            return it->second;
        const bool r = is_subgraph(h_, LabeledGraphId{n_, mask}.to_graph());
        memo_.emplace(mask, r);
        return r;
    }

private:
    int n_;
    Graph h_;
    std::unordered_map<std::uint64_t, bool> memo_;
};

}  // namespace detail

/// Every graph on [n] containing the copy of h placed by `embedding`
/// (embedding[v] is the host vertex of h's vertex v; identity when empty).
inline FamilyRecord canonical_family(int n, const Graph& h, std::vector<int> embedding = {})
{
    detail::require_universe(n, 24);
    if (embedding.empty()) {
        embedding.resize(static_cast<std::size_t>(h.order()));
        std::iota(embedding.begin(), embedding.end(), 0);
    }
    if (static_cast<int>(embedding.size()) != h.order())
        throw std::invalid_argument("embedding must place every vertex of h");
    vertex_set used = 0;
    for (int v : embedding) {
        if (v < 0 || v >= n || (used & bit(v)))
            throw std::invalid_argument("embedding must be injective into [n]");
        used |= bit(v);
    }
    const EdgeUniverse u(n);
    std::uint64_t fixed = 0;
    for (auto [a, b] : h.edges())
        fixed |= std::uint64_t{1} << u.index(embedding[a], embedding[b]);
    const std::uint64_t free = ((std::uint64_t{1} << u.size()) - 1) & ~fixed;
    FamilyRecord fam{n, {}, h};
    // all submasks of the free pairs, in increasing order
    std::uint64_t sub = 0;
    do {
        fam.members.push_back({n, fixed | sub});
        sub = (sub - free) & free;
    } while (sub != 0);
    std::sort(fam.members.begin(), fam.members.end());
    const auto expected = std::uint64_t{1} << (u.size() - static_cast<std::size_t>(h.edge_count()));
    if (fam.members.size() != expected)
        throw std::logic_error("canonical family has the wrong size");
    return fam;
}

/// Every pair of members, a member with itself included unless `distinct_pairs`,
/// intersects in a graph containing target_h.
inline bool is_intersecting_family(const FamilyRecord& fam, bool distinct_pairs = false)
{
    if (fam.members.size() > 1000)
        throw std::invalid_argument("all-pairs check limited to 1000 members");
    detail::ContainsCache contains(fam.n, fam.target_h);
    for (std::size_t i = 0; i < fam.members.size(); ++i) {
        if (fam.members[i].n != fam.n)
            throw std::invalid_argument("member on a different vertex set");
        for (std::size_t j = distinct_pairs ? i + 1 : i; j < fam.members.size(); ++j)
            if (!contains(fam.members[i].mask & fam.members[j].mask))
                return false;
    }
    return true;
}

/// Vertices: labeled graphs on [n] (only h-containing ones unless `distinct_pairs`);
/// edges: pairs whose intersection contains h.
struct CompatibilityGraph {
    std::vector<std::uint64_t> masks;
    std::vector<detail::WideSet> adj;
    std::int64_t edge_count = 0;
};

inline CompatibilityGraph compatibility_graph(int n, const Graph& h, bool distinct_pairs = false)
{
    detail::require_universe(n, 10);
    detail::ContainsCache contains(n, h);
    CompatibilityGraph cg;
    const std::uint64_t total = std::uint64_t{1} << binom2(n);
    for (std::uint64_t mask = 0; mask < total; ++mask)
        if (distinct_pairs || contains(mask))
            cg.masks.push_back(mask);
    const int v = static_cast<int>(cg.masks.size());
    cg.adj.assign(static_cast<std::size_t>(v), detail::WideSet(v));
    for (int a = 0; a < v; ++a)
        for (int b = a + 1; b < v; ++b)
            if (contains(cg.masks[a] & cg.masks[b])) {
                cg.adj[a].set(b);
                cg.adj[b].set(a);
                ++cg.edge_count;
            }
    return cg;
}

struct MaxFamilyResult {
    std::int64_t size = 0;
    FamilyRecord witness;
    bool exhaustive = false;
    bool distinct_pairs = false;
    std::string method;
};

namespace detail {

/// Labeled graphs on [n] ordered by edge count descending, then by mask.
inline std::vector<std::uint64_t> masks_by_density(int n)
{
    std::vector<std::uint64_t> masks(std::size_t{1} << binom2(n));
    std::iota(masks.begin(), masks.end(), std::uint64_t{0});
    std::stable_sort(masks.begin(), masks.end(),
                     [](std::uint64_t a, std::uint64_t b) { return std::popcount(a) > std::popcount(b); });
    return masks;
}

/// Greedy up-set style search: seed members are kept, then graphs are tried
/// densest first and added when compatible with every current member.
inline std::vector<std::uint64_t> greedy_family(int n, const Graph& h, std::vector<std::uint64_t> seed)
{
    ContainsCache contains(n, h);
    std::vector<std::uint64_t> fam = std::move(seed);
    std::vector<bool> in(std::size_t{1} << binom2(n), false);
    for (auto m : fam)
        in[m] = true;
    for (auto cand : masks_by_density(n)) {
        if (in[cand] || !contains(cand))
            continue;
        if (std::all_of(fam.begin(), fam.end(), [&](std::uint64_t m) { return contains(m & cand); })) {
            fam.push_back(cand);
            in[cand] = true;
        }
    }
    std::sort(fam.begin(), fam.end());
    return fam;
}

}  // namespace detail

/// Largest h-intersecting family on [n]. Exact for n <= 4 via maximum clique in
/// the compatibility graph; n = 5 with h = K_3 runs a greedy up-set search whose
/// result is only a lower-bound certificate.
inline MaxFamilyResult max_family_size(int n, const Graph& h, bool distinct_pairs = false)
{
    if (h.edge_count() == 0)
        throw std::invalid_argument("h must have at least one edge");
    if (n < h.order())
        throw std::invalid_argument("n must be at least |V(h)|");
    MaxFamilyResult r;
    r.distinct_pairs = distinct_pairs;
    r.witness.n = n;
    r.witness.target_h = h;
    if (n <= 4) {
        const auto cg = compatibility_graph(n, h, distinct_pairs);
        detail::MaxCliqueSearch search(cg.adj);
        const auto clique = search.run();
        for (int idx : clique)
            r.witness.members.push_back({n, cg.masks[idx]});
        // under the distinct-pairs reading a lone graph is always a family
        if (r.witness.members.empty() && !cg.masks.empty())
            r.witness.members.push_back({n, cg.masks.front()});
        std::sort(r.witness.members.begin(), r.witness.members.end());
        r.size = static_cast<std::int64_t>(r.witness.members.size());
        r.exhaustive = true;
        r.method = "compatibility-clique";
        return r;
    }
    if (n == 5 && are_isomorphic(h, complete_graph(3))) {
        std::vector<std::uint64_t> seed;
        for (const auto& m : canonical_family(n, h).members)
            seed.push_back(m.mask);
        auto seeded = detail::greedy_family(n, h, seed);
        auto dense = detail::greedy_family(n, h, {});
        const auto& best = dense.size() > seeded.size() ? dense : seeded;
        for (auto m : best)
            r.witness.members.push_back({n, m});
        r.size = static_cast<std::int64_t>(best.size());
        r.exhaustive = false;
        r.method = "greedy-up-set (heuristic, not exhaustive)";
        return r;
    }
    throw std::invalid_argument("max family search supports n <= 4, or n = 5 with h = K3");
}

struct TraceDemoReport {
    int n = 0;
    int chi = 0;
    std::int64_t family_size = 0;        // |M|
    std::int64_t parts_family_size = 0;  // |F|
    std::int64_t m = 0;
    std::int64_t k = 0;
    std::vector<std::int64_t> trace_sizes;
    bool traces_intersecting = false;
    bool traces_within_half = false;     // |trace_S(M)| <= 2^{m-1}
    double log2_shearer = 0;             // (1/k) sum log2 |trace_S|
    double log2_half_power = 0;          // (m-1) |F| / k
    double log2_edge_form = 0;           // C(n,2) (1 - 1/m)
    std::int64_t chromatic_exponent = 0; // C(n,2) - (chi - 1)
    bool chain_holds = false;
};

inline TraceDemoReport trace_intersecting_demo(int n, const Graph& h)
{
    if (n > 4)
        throw std::invalid_argument("trace demo supports n <= 4");
    TraceDemoReport r;
    r.n = n;
    r.chi = chromatic_number(h);
    if (r.chi < 2)
        throw std::invalid_argument("trace demo needs chi(h) >= 2");
    const auto parts = partition_family(n, r.chi);
    const auto fam = canonical_family(n, h);
    std::vector<Subset> members;
    for (const auto& g : fam.members)
        members.push_back(g.mask);
    CoverFamily cover{static_cast<int>(binom2(n)), {}, static_cast<int>(parts.k)};
    for (std::size_t i = 0; i < parts.partitions.size(); ++i)
        cover.subsets.push_back(parts.edge_mask(i));
    r.family_size = static_cast<std::int64_t>(members.size());
    r.parts_family_size = parts.size;
    r.m = parts.m;
    r.k = parts.k;
    r.traces_intersecting = true;
    r.traces_within_half = true;
    for (Subset s : cover.subsets) {
        const auto tr = trace(members, s);
        r.trace_sizes.push_back(static_cast<std::int64_t>(tr.size()));
        for (Subset a : tr)
            for (Subset b : tr)
                if ((a & b) == 0)
                    r.traces_intersecting = false;
        if (static_cast<std::int64_t>(tr.size()) > (std::int64_t{1} << (parts.m - 1)))
            r.traces_within_half = false;
    }
    const auto shearer = combinatorial_shearer_check(members, cover);
    r.log2_shearer = shearer.log2_rhs;
    r.log2_half_power = static_cast<double>((parts.m - 1) * parts.size) / static_cast<double>(parts.k);
    r.log2_edge_form = static_cast<double>(binom2(n)) * (1.0 - 1.0 / static_cast<double>(parts.m));
    r.chromatic_exponent = binom2(n) - (r.chi - 1);
    const double tol = 1e-9;
    r.chain_holds = shearer.holds && r.log2_shearer <= r.log2_half_power + tol &&
                    std::abs(r.log2_half_power - r.log2_edge_form) <= tol &&
                    r.log2_edge_form <= static_cast<double>(r.chromatic_exponent) + tol &&
                    std::log2(static_cast<double>(r.family_size)) <= r.log2_shearer + tol;
    return r;
}

/// One graph6 line per member.
inline std::string family_graph6_lines(const FamilyRecord& fam)
{
    std::string out;
    for (const auto& m : fam.members)
        out += encode_graph6(m.to_graph()) + "\n";
    return out;
}

}  // namespace graphent
