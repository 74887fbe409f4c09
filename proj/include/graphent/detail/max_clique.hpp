#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

namespace graphent::detail {

/// Bitset of fixed word count used for graphs above 64 vertices.
class WideSet {
public:
    WideSet() = default;
    explicit WideSet(int n) : n_(n), w_(static_cast<std::size_t>((n + 63) / 64), 0) {}

    int universe() const { return n_; }
    void set(int i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1U; }

    bool any() const
    {
        return std::any_of(w_.begin(), w_.end(), [](std::uint64_t x) { return x != 0; });
    }

    int count() const
    {
        int c = 0;
        for (auto x : w_)
            c += std::popcount(x);
        return c;
    }

    int first() const
    {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k])
                return static_cast<int>(k * 64) + std::countr_zero(w_[k]);
        return -1;
    }

    WideSet& operator&=(const WideSet& o)
    {
        for (std::size_t k = 0; k < w_.size(); ++k)
            w_[k] &= o.w_[k];
        return *this;
    }

    template <class F>
    void for_each(F&& f) const
    {
        for (std::size_t k = 0; k < w_.size(); ++k) {
            auto x = w_[k];
            while (x) {
                f(static_cast<int>(k * 64) + std::countr_zero(x));
                x &= x - 1;
            }
        }
    }

    static WideSet full(int n)
    {
        WideSet s(n);
        for (int i = 0; i < n; ++i)
            s.set(i);
        return s;
    }

private:
    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

/// Branch and bound maximum clique with greedy-coloring bounds (MCQ style).
/// Vertices are processed in a fixed degree order, so the witness is
/// deterministic for a given adjacency.
class MaxCliqueSearch {
public:
    explicit MaxCliqueSearch(std::vector<WideSet> adj) : adj_(std::move(adj)), n_(static_cast<int>(adj_.size())) {}

    std::vector<int> run(long long node_limit = -1)
    {
        node_limit_ = node_limit;
        nodes_ = 0;
        best_.clear();
        std::vector<int> current;
        WideSet all = WideSet::full(n_);
        expand(current, all);
        std::sort(best_.begin(), best_.end());
        return best_;
    }

    bool exhausted_budget() const { return node_limit_ >= 0 && nodes_ > node_limit_; }

private:
    void color_sort(const WideSet& cand, std::vector<int>& order, std::vector<int>& bounds) const
    {
        // vertices sorted by degree descending, then greedy color classes
        std::vector<int> verts;
        cand.for_each([&](int v) { verts.push_back(v); });
        std::stable_sort(verts.begin(), verts.end(), [&](int a, int b) { return degree_in(a, cand) > degree_in(b, cand); });
        std::vector<std::vector<int>> classes;
        for (int v : verts) {
            bool placed = false;
            for (auto& cls : classes) {
                if (std::none_of(cls.begin(), cls.end(), [&](int u) { return adj_[u].test(v); })) {
                    cls.push_back(v);
                    placed = true;
                    break;
                }
            }
            if (!placed)
                classes.push_back({v});
        }
        order.clear();
        bounds.clear();
        for (std::size_t c = 0; c < classes.size(); ++c)
            for (int v : classes[c]) {
                order.push_back(v);
                bounds.push_back(static_cast<int>(c) + 1);
            }
    }

    int degree_in(int v, const WideSet& cand) const
    {
        WideSet s = adj_[v];
        s &= cand;
        return s.count();
    }

    void expand(std::vector<int>& current, WideSet cand)
    {
        ++nodes_;
        if (exhausted_budget())
            return;
        std::vector<int> order, bounds;
        color_sort(cand, order, bounds);
        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            if (static_cast<int>(current.size()) + bounds[i] <= static_cast<int>(best_.size()))
                return;
            const int v = order[i];
            current.push_back(v);
            WideSet next = cand;
            next &= adj_[v];
            if (next.any())
                expand(current, next);
            else if (current.size() > best_.size())
                best_ = current;
            current.pop_back();
            cand.reset(v);
            if (exhausted_budget())
                return;
        }
    }

    std::vector<WideSet> adj_;
    int n_;
    std::vector<int> best_;
    long long node_limit_ = -1;
    long long nodes_ = 0;
};

}  // namespace graphent::detail
