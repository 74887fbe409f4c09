#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace graphent {

using vertex_set = std::uint64_t;

inline constexpr int max_vertices = 64;
inline constexpr int max_graph6_vertices = 62;

class graph_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class parse_error : public graph_error {
public:
    using graph_error::graph_error;
};

inline vertex_set bit(int v) { return vertex_set{1} << v; }

inline vertex_set full_set(int n)
{
    return n >= 64 ? ~vertex_set{0} : (vertex_set{1} << n) - 1;
}

inline int popcount(vertex_set s) { return std::popcount(s); }

inline int lowest(vertex_set s) { return std::countr_zero(s); }

template <class F>
void for_each_vertex(vertex_set s, F&& f)
{
    while (s) {
        f(lowest(s));
        s &= s - 1;
    }
}

inline std::int64_t binom2(std::int64_t n) { return n * (n - 1) / 2; }

/// Finite simple undirected graph on vertices 0..n-1 with bitset rows.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), 0)
    {
        if (n < 0 || n > max_vertices)
            throw graph_error("vertex count must lie in [0, 64]");
    }

    static Graph from_edges(int n, std::span<const std::pair<int, int>> edges)
    {
        Graph g(n);
        for (auto [u, v] : edges)
            g.add_edge(u, v);
        return g;
    }

    static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges)
    {
        return from_edges(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
    }

    void add_edge(int u, int v)
    {
        check_vertex(u);
        check_vertex(v);
        if (u == v)
            throw graph_error("self-loop at vertex " + std::to_string(u));
        adj_[u] |= bit(v);
        adj_[v] |= bit(u);
    }

    int order() const { return n_; }
    vertex_set vertices() const { return full_set(n_); }
    vertex_set neighbors(int v) const { return adj_[v]; }
    bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1U; }
    int degree(int v) const { return popcount(adj_[v]); }

    int max_degree() const
    {
        int d = 0;
        for (int v = 0; v < n_; ++v)
            d = std::max(d, degree(v));
        return d;
    }

    std::int64_t edge_count() const
    {
        std::int64_t twice = 0;
        for (auto row : adj_)
            twice += popcount(row);
        return twice / 2;
    }

    bool empty_of_edges() const { return edge_count() == 0; }

    std::vector<std::pair<int, int>> edges() const
    {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u)
            for_each_vertex(adj_[u] & ~full_set(u + 1), [&](int v) { out.emplace_back(u, v); });
        return out;
    }

    std::vector<int> degree_sequence() const
    {
        std::vector<int> d(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v)
            d[v] = degree(v);
        std::sort(d.begin(), d.end(), std::greater<>());
        return d;
    }

    bool has_isolated_vertex() const
    {
        return std::any_of(adj_.begin(), adj_.end(), [](vertex_set r) { return r == 0; });
    }

    bool is_regular() const
    {
        for (int v = 1; v < n_; ++v)
            if (degree(v) != degree(0))
                return false;
        return true;
    }

    bool is_complete() const { return edge_count() == binom2(n_); }

    bool is_connected() const
    {
        if (n_ == 0)
            return true;
        vertex_set seen = 1, frontier = 1;
        while (frontier) {
            vertex_set next = 0;
            for_each_vertex(frontier, [&](int v) { next |= adj_[v]; });
            frontier = next & ~seen;
            seen |= next;
        }
        return seen == vertices();
    }

    /// Subgraph induced by the vertices of `s`, relabeled in increasing order.
    Graph induced(vertex_set s) const
    {
        std::vector<int> keep;
        for_each_vertex(s & vertices(), [&](int v) { keep.push_back(v); });
        return induced(keep);
    }

    Graph induced(std::span<const int> keep) const
    {
        Graph h(static_cast<int>(keep.size()));
        for (std::size_t i = 0; i < keep.size(); ++i)
            for (std::size_t j = i + 1; j < keep.size(); ++j)
                if (adjacent(keep[i], keep[j]))
                    h.add_edge(static_cast<int>(i), static_cast<int>(j));
        return h;
    }

    /// Vertex v of *this becomes vertex perm[v] of the result.
    Graph relabeled(std::span<const int> perm) const
    {
        if (static_cast<int>(perm.size()) != n_)
            throw graph_error("permutation size mismatch");
        Graph h(n_);
        for (auto [u, v] : edges())
            h.add_edge(perm[u], perm[v]);
        return h;
    }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void check_vertex(int v) const
    {
        if (v < 0 || v >= n_)
            throw graph_error("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n_));
    }

    int n_ = 0;
    std::vector<vertex_set> adj_;
};

inline Graph complement(const Graph& g)
{
    Graph c(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v))
                c.add_edge(u, v);
    return c;
}

inline Graph disjoint_union(const Graph& a, const Graph& b)
{
    Graph g(a.order() + b.order());
    for (auto [u, v] : a.edges())
        g.add_edge(u, v);
    for (auto [u, v] : b.edges())
        g.add_edge(a.order() + u, a.order() + v);
    return g;
}

/// Unordered pairs of [n] in lexicographic order; pair index i is edge bit i.
class EdgeUniverse {
public:
    explicit EdgeUniverse(int n) : n_(n)
    {
        if (n < 0 || n > max_vertices)
            throw graph_error("edge universe size out of range");
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                pairs_.emplace_back(u, v);
    }

    int order() const { return n_; }
    std::size_t size() const { return pairs_.size(); }
    const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
    std::pair<int, int> operator[](std::size_t i) const { return pairs_[i]; }

    std::size_t index(int u, int v) const
    {
        if (u > v)
            std::swap(u, v);
        if (u < 0 || v >= n_ || u == v)
            throw graph_error("not an edge of K_n");
        // rows before u hold (n-1) + (n-2) + ... + (n-u) pairs
        const auto uu = static_cast<std::size_t>(u);
        const auto nn = static_cast<std::size_t>(n_);
        return uu * nn - uu * (uu + 1) / 2 + static_cast<std::size_t>(v - u - 1);
    }

private:
    int n_;
    std::vector<std::pair<int, int>> pairs_;
};

// ---------------------------------------------------------------------------
// Named graphs

struct GraphSpec {
    enum class Kind { complete, complete_bipartite, cycle, path, petersen, empty };
    Kind kind = Kind::complete;
    int a = 1;
    int b = 0;

    static GraphSpec complete(int t) { return {Kind::complete, t, 0}; }
    static GraphSpec complete_bipartite(int s, int t) { return {Kind::complete_bipartite, s, t}; }
    static GraphSpec cycle(int n) { return {Kind::cycle, n, 0}; }
    static GraphSpec path(int n) { return {Kind::path, n, 0}; }
    static GraphSpec petersen() { return {Kind::petersen, 10, 0}; }
    static GraphSpec empty(int n) { return {Kind::empty, n, 0}; }

    void validate() const
    {
        auto positive = [](int x) { return x >= 1 && x <= max_vertices; };
        switch (kind) {
        case Kind::complete_bipartite:
            if (!positive(a) || !positive(b) || a + b > max_vertices)
                throw graph_error("complete bipartite parts must be positive");
            break;
        case Kind::cycle:
            if (a < 3 || a > max_vertices)
                throw graph_error("cycle requires n >= 3");
            break;
        case Kind::petersen:
            break;
        default:
            if (!positive(a))
                throw graph_error("graph order must be positive");
        }
    }

    std::string name() const
    {
        switch (kind) {
        case Kind::complete: return "K" + std::to_string(a);
        case Kind::complete_bipartite: return "Kst:" + std::to_string(a) + "," + std::to_string(b);
        case Kind::cycle: return "C" + std::to_string(a);
        case Kind::path: return "P" + std::to_string(a);
        case Kind::petersen: return "petersen";
        case Kind::empty: return "E" + std::to_string(a);
        }
        return "?";
    }
};

inline Graph standard_graph(const GraphSpec& spec)
{
    spec.validate();
    using K = GraphSpec::Kind;
    switch (spec.kind) {
    case K::complete: {
        Graph g(spec.a);
        for (int u = 0; u < spec.a; ++u)
            for (int v = u + 1; v < spec.a; ++v)
                g.add_edge(u, v);
        return g;
    }
    case K::complete_bipartite: {
        Graph g(spec.a + spec.b);
        for (int u = 0; u < spec.a; ++u)
            for (int v = 0; v < spec.b; ++v)
                g.add_edge(u, spec.a + v);
        return g;
    }
    case K::cycle: {
        Graph g(spec.a);
        for (int v = 0; v < spec.a; ++v)
            g.add_edge(v, (v + 1) % spec.a);
        return g;
    }
    case K::path: {
        Graph g(spec.a);
        for (int v = 0; v + 1 < spec.a; ++v)
            g.add_edge(v, v + 1);
        return g;
    }
    case K::petersen: {
        // outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5
        Graph g(10);
        for (int i = 0; i < 5; ++i) {
            g.add_edge(i, (i + 1) % 5);
            g.add_edge(5 + i, 5 + (i + 2) % 5);
            g.add_edge(i, 5 + i);
        }
        return g;
    }
    case K::empty:
        return Graph(spec.a);
    }
    throw graph_error("unknown graph kind");
}

inline Graph complete_graph(int t) { return standard_graph(GraphSpec::complete(t)); }
inline Graph complete_bipartite_graph(int s, int t) { return standard_graph(GraphSpec::complete_bipartite(s, t)); }
inline Graph cycle_graph(int n) { return standard_graph(GraphSpec::cycle(n)); }
inline Graph path_graph(int n) { return standard_graph(GraphSpec::path(n)); }
inline Graph petersen_graph() { return standard_graph(GraphSpec::petersen()); }
inline Graph empty_graph(int n) { return standard_graph(GraphSpec::empty(n)); }

/// Accepts K3, C5, P4, E4, petersen, Kst:2,3 (also K2,3).
inline GraphSpec parse_graph_spec(std::string_view text)
{
    auto number = [&](std::string_view s) {
        if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
            throw parse_error("bad graph name '" + std::string(text) + "'");
        return std::stoi(std::string(s));
    };
    std::string lower(text);
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "petersen")
        return GraphSpec::petersen();
    std::string_view s = lower;
    GraphSpec spec;
    if (s.starts_with("kst:")) {
        auto rest = s.substr(4);
        auto comma = rest.find(',');
        if (comma == std::string_view::npos)
            throw parse_error("Kst needs two part sizes");
        spec = GraphSpec::complete_bipartite(number(rest.substr(0, comma)), number(rest.substr(comma + 1)));
    } else if (s.size() >= 2 && s[0] == 'k') {
        auto rest = s.substr(1);
        auto comma = rest.find(',');
        if (comma != std::string_view::npos)
            spec = GraphSpec::complete_bipartite(number(rest.substr(0, comma)), number(rest.substr(comma + 1)));
        else
            spec = GraphSpec::complete(number(rest));
    } else if (s.size() >= 2 && s[0] == 'c') {
        spec = GraphSpec::cycle(number(s.substr(1)));
    } else if (s.size() >= 2 && s[0] == 'p') {
        spec = GraphSpec::path(number(s.substr(1)));
    } else if (s.size() >= 2 && s[0] == 'e') {
        spec = GraphSpec::empty(number(s.substr(1)));
    } else {
        throw parse_error("unknown graph name '" + std::string(text) + "'");
    }
    try {
        spec.validate();
    } catch (const graph_error& e) {
        throw parse_error(e.what());
    }
    return spec;
}

// ---------------------------------------------------------------------------
// graph6 (short form) and edge lists

inline std::string encode_graph6(const Graph& g)
{
    const int n = g.order();
    if (n > max_graph6_vertices)
        throw graph_error("graph6 short form supports n <= 62");
    std::string out(1, static_cast<char>(n + 63));
    int acc = 0, nbits = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0)
        out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

inline Graph parse_graph6(std::string_view text)
{
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);
    if (text.starts_with(">>graph6<<"))
        text.remove_prefix(10);
    if (text.empty())
        throw parse_error("graph6: empty input");
    const int header = static_cast<unsigned char>(text[0]);
    if (header < 63 || header > 63 + max_graph6_vertices)
        throw parse_error("graph6: malformed header byte");
    const int n = header - 63;
    const std::int64_t bits = binom2(n);
    const std::size_t want = static_cast<std::size_t>((bits + 5) / 6);
    if (text.size() - 1 != want)
        throw parse_error("graph6: length mismatch for n=" + std::to_string(n) + " (expected " +
                          std::to_string(want) + " data bytes, got " + std::to_string(text.size() - 1) + ")");
    std::vector<int> stream;
    stream.reserve(want * 6);
    for (std::size_t i = 1; i < text.size(); ++i) {
        const int c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126)
            throw parse_error("graph6: byte out of range");
        for (int k = 5; k >= 0; --k)
            stream.push_back(((c - 63) >> k) & 1);
    }
    for (std::size_t i = static_cast<std::size_t>(bits); i < stream.size(); ++i)
        if (stream[i])
            throw parse_error("graph6: trailing padding bits are nonzero");
    Graph g(n);
    std::size_t pos = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (stream[pos++])
                g.add_edge(u, v);
    return g;
}

inline Graph parse_edge_list(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string line;
    std::optional<Graph> g;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a))
            continue;
        auto where = " on line " + std::to_string(lineno);
        auto to_int = [&](const std::string& tok) {
            std::size_t used = 0;
            int value = 0;
            try {
                value = std::stoi(tok, &used);
            } catch (const std::exception&) {
                throw parse_error("edge list: unparsable token '" + tok + "'" + where);
            }
            if (used != tok.size())
                throw parse_error("edge list: unparsable token '" + tok + "'" + where);
            return value;
        };
        if (!(ls >> b) || (ls >> extra))
            throw parse_error("edge list: expected two tokens" + where);
        if (!g) {
            if (a != "n")
                throw parse_error("edge list: first line must be 'n <count>'");
            const int n = to_int(b);
            if (n < 0 || n > max_vertices)
                throw parse_error("edge list: vertex count out of range");
            g.emplace(n);
            continue;
        }
        const int u = to_int(a), v = to_int(b);
        if (u == v)
            throw parse_error("edge list: self-loop at vertex " + std::to_string(u) + where);
        if (u < 0 || v < 0 || u >= g->order() || v >= g->order())
            throw parse_error("edge list: vertex index out of range" + where);
        g->add_edge(u, v);
    }
    if (!g)
        throw parse_error("edge list: missing 'n <count>' header");
    return *g;
}

inline std::string to_edge_list(const Graph& g)
{
    std::string out = "n " + std::to_string(g.order()) + "\n";
    for (auto [u, v] : g.edges())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

// ---------------------------------------------------------------------------
// Vertex-map search shared by containment, isomorphism and counting.

enum class MapKind {
    homomorphism,       // edges to edges
    injective,          // injective, edges to edges
    induced_injective,  // injective, edges to edges and non-edges to non-edges
};

namespace detail {

/// Orders pattern vertices so each one after the first of its component has
/// an earlier neighbor; ties go to higher degree.
inline std::vector<int> search_order(const Graph& h)
{
    const int n = h.order();
    std::vector<int> order;
    vertex_set placed = 0;
    while (static_cast<int>(order.size()) < n) {
        int best = -1, best_key = -1;
        for (int v = 0; v < n; ++v) {
            if (placed & bit(v))
                continue;
            const int key = popcount(h.neighbors(v) & placed) * 128 + h.degree(v);
            if (key > best_key) {
                best_key = key;
                best = v;
            }
        }
        order.push_back(best);
        placed |= bit(best);
    }
    return order;
}

class MapSearch {
public:
    MapSearch(const Graph& h, const Graph& g, MapKind kind, std::span<const vertex_set> allowed = {})
        : h_(h), g_(g), kind_(kind), order_(search_order(h)), image_(static_cast<std::size_t>(h.order()), -1)
    {
        allowed_.assign(static_cast<std::size_t>(h.order()), g.vertices());
        for (std::size_t i = 0; i < allowed.size() && i < allowed_.size(); ++i)
            allowed_[i] &= allowed[i];
    }

    /// Calls visit(image) for every admissible map; visit returns false to stop.
    template <class Visit>
    bool enumerate(Visit&& visit)
    {
        return step(0, 0, visit);
    }

    /// Number of admissible maps (machine word; callers guard the scale).
    std::uint64_t count() { return count_from(0, 0); }

private:
    vertex_set candidates(int depth, vertex_set used) const
    {
        const int v = order_[depth];
        vertex_set c = allowed_[v];
        if (kind_ != MapKind::homomorphism)
            c &= ~used;
        for (int i = 0; i < depth; ++i) {
            const int u = order_[i];
            const int img = image_[u];
            if (h_.adjacent(u, v))
                c &= g_.neighbors(img);
            else if (kind_ == MapKind::induced_injective)
                c &= ~g_.neighbors(img);
        }
        return c;
    }

    template <class Visit>
    bool step(int depth, vertex_set used, Visit& visit)
    {
        if (depth == h_.order())
            return visit(std::span<const int>(image_));
        vertex_set c = candidates(depth, used);
        const int v = order_[depth];
        while (c) {
            const int w = lowest(c);
            c &= c - 1;
            image_[v] = w;
            if (!step(depth + 1, used | bit(w), visit))
                return false;
        }
        image_[v] = -1;
        return true;
    }

    std::uint64_t count_from(int depth, vertex_set used)
    {
        if (depth == h_.order())
            return 1;
        vertex_set c = candidates(depth, used);
        if (depth + 1 == h_.order())
            return static_cast<std::uint64_t>(popcount(c));
        std::uint64_t total = 0;
        const int v = order_[depth];
        while (c) {
            const int w = lowest(c);
            c &= c - 1;
            image_[v] = w;
            total += count_from(depth + 1, used | bit(w));
        }
        image_[v] = -1;
        return total;
    }

    const Graph& h_;
    const Graph& g_;
    MapKind kind_;
    std::vector<int> order_;
    std::vector<int> image_;
    std::vector<vertex_set> allowed_;
};

}  // namespace detail

/// Not-necessarily-induced containment: some injective map sends E(h) into E(g).
inline bool is_subgraph(const Graph& h, const Graph& g)
{
    if (h.order() > g.order() || h.edge_count() > g.edge_count())
        return false;
    std::vector<vertex_set> allowed(static_cast<std::size_t>(h.order()), 0);
    for (int v = 0; v < h.order(); ++v)
        for (int w = 0; w < g.order(); ++w)
            if (g.degree(w) >= h.degree(v))
                allowed[v] |= bit(w);
    bool found = false;
    detail::MapSearch(h, g, MapKind::injective, allowed).enumerate([&](std::span<const int>) {
        found = true;
        return false;
    });
    return found;
}

/// Induced containment: h is isomorphic to some induced subgraph of g.
inline bool is_induced_subgraph(const Graph& h, const Graph& g)
{
    if (h.order() > g.order())
        return false;
    bool found = false;
    detail::MapSearch(h, g, MapKind::induced_injective).enumerate([&](std::span<const int>) {
        found = true;
        return false;
    });
    return found;
}

inline std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b)
{
    if (a.order() != b.order() || a.edge_count() != b.edge_count() || a.degree_sequence() != b.degree_sequence())
        return std::nullopt;
    std::vector<vertex_set> allowed(static_cast<std::size_t>(a.order()), 0);
    for (int v = 0; v < a.order(); ++v) {
        // refine by (degree, sorted neighbor degrees)
        auto signature = [](const Graph& g, int x) {
            std::vector<int> s;
            for_each_vertex(g.neighbors(x), [&](int y) { s.push_back(g.degree(y)); });
            std::sort(s.begin(), s.end());
            return s;
        };
        const auto sv = signature(a, v);
        for (int w = 0; w < b.order(); ++w)
            if (a.degree(v) == b.degree(w) && signature(b, w) == sv)
                allowed[v] |= bit(w);
        if (!allowed[v])
            return std::nullopt;
    }
    std::optional<std::vector<int>> result;
    detail::MapSearch(a, b, MapKind::induced_injective, allowed).enumerate([&](std::span<const int> image) {
        result.emplace(image.begin(), image.end());
        return false;
    });
    return result;
}

inline bool are_isomorphic(const Graph& a, const Graph& b) { return find_isomorphism(a, b).has_value(); }

/// Pairwise non-isomorphic induced subgraphs of t on s vertices, in first-seen
/// order over s-subsets enumerated in colexicographic bitmask order.
inline std::vector<Graph> enumerate_induced(const Graph& t, int s)
{
    if (s < 1 || s > t.order())
        throw graph_error("enumerate_induced requires 1 <= s <= |V(t)|");
    std::vector<Graph> classes;
    const int n = t.order();
    // Gosper's hack over s-subsets of [n]
    vertex_set subset = full_set(s);
    const vertex_set limit = full_set(n);
    while (true) {
        Graph sub = t.induced(subset);
        if (std::none_of(classes.begin(), classes.end(), [&](const Graph& c) { return are_isomorphic(c, sub); }))
            classes.push_back(std::move(sub));
        if (s == n)
            break;
        const vertex_set c = subset & (~subset + 1);
        const vertex_set r = subset + c;
        if (r == 0 || (r & ~limit))
            break;
        subset = (((r ^ subset) >> 2) / c) | r;
        if (subset & ~limit)
            break;
    }
    return classes;
}

}  // namespace graphent
