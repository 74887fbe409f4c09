#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace graphent {

/// Subset of a ground set {0..63} as a bitmask.
using Subset = std::uint64_t;

inline Subset subset_of(std::initializer_list<int> items)
{
    Subset s = 0;
    for (int i : items)
        s |= Subset{1} << i;
    return s;
}

inline Subset ground_set(int n) { return n >= 64 ? ~Subset{0} : (Subset{1} << n) - 1; }

/// Finite joint distribution of n discrete coordinates.
class JointPmf {
public:
    using Outcome = std::vector<int>;

    JointPmf(std::vector<int> alphabet_sizes, const std::vector<std::pair<Outcome, double>>& support)
        : alphabet_(std::move(alphabet_sizes))
    {
        if (alphabet_.empty() || alphabet_.size() > 64)
            throw std::invalid_argument("pmf needs between 1 and 64 coordinates");
        for (int a : alphabet_)
            if (a < 1)
                throw std::invalid_argument("alphabet sizes must be positive");
        double total = 0;
        for (const auto& [x, p] : support) {
            if (x.size() != alphabet_.size())
                throw std::invalid_argument("outcome arity differs from coordinate count");
            for (std::size_t i = 0; i < x.size(); ++i)
                if (x[i] < 0 || x[i] >= alphabet_[i])
                    throw std::invalid_argument("outcome symbol outside its alphabet");
            if (!(p >= 0) || !std::isfinite(p))
                throw std::invalid_argument("probabilities must be finite and nonnegative");
            if (p > 0)
                mass_[x] += p;
            total += p;
        }
        if (std::abs(total - 1.0) > 1e-12)
            throw std::invalid_argument("probabilities must sum to 1");
    }

    int n() const { return static_cast<int>(alphabet_.size()); }
    const std::vector<int>& alphabet_sizes() const { return alphabet_; }
    const std::map<Outcome, double>& support() const { return mass_; }

    /// Marginal on the coordinates of `coords`, keyed by the projected tuple.
    std::map<Outcome, double> marginal(Subset coords) const
    {
        std::map<Outcome, double> out;
        for (const auto& [x, p] : mass_) {
            Outcome y;
            for (int i = 0; i < n(); ++i)
                if ((coords >> i) & 1U)
                    y.push_back(x[i]);
            out[y] += p;
        }
        return out;
    }

private:
    std::vector<int> alphabet_;
    std::map<Outcome, double> mass_;
};

/// Shannon entropy in bits of the marginal on `coords`; empty coords give 0.
inline double marginal_entropy(const JointPmf& pmf, Subset coords)
{
    if (coords & ~ground_set(pmf.n()))
        throw std::invalid_argument("coordinates outside the pmf");
    if (coords == 0)
        return 0.0;
    double h = 0;
    for (const auto& [y, p] : pmf.marginal(coords))
        if (p > 0)
            h -= p * std::log2(p);
    return std::max(h, 0.0);
}

inline double joint_entropy(const JointPmf& pmf) { return marginal_entropy(pmf, ground_set(pmf.n())); }

/// Multiset of subsets of [n] covering every element at least k times.
struct CoverFamily {
    int n = 0;
    std::vector<Subset> subsets;
    int k = 1;

    int coverage(int i) const
    {
        return static_cast<int>(std::count_if(subsets.begin(), subsets.end(), [&](Subset s) { return (s >> i) & 1U; }));
    }

    int min_coverage() const
    {
        int c = n == 0 ? 0 : coverage(0);
        for (int i = 1; i < n; ++i)
            c = std::min(c, coverage(i));
        return c;
    }

    void validate() const
    {
        if (k < 1)
            throw std::invalid_argument("cover multiplicity k must be at least 1");
        for (Subset s : subsets)
            if (s & ~ground_set(n))
                throw std::invalid_argument("cover subset leaves the ground set");
        if (n > 0 && min_coverage() < k)
            throw std::invalid_argument("cover family covers some element fewer than k times");
    }

    static CoverFamily singletons(int n)
    {
        CoverFamily c{n, {}, 1};
        for (int i = 0; i < n; ++i)
            c.subsets.push_back(Subset{1} << i);
        return c;
    }

    static CoverFamily leave_one_out(int n)
    {
        CoverFamily c{n, {}, n - 1};
        for (int i = 0; i < n; ++i)
            c.subsets.push_back(ground_set(n) & ~(Subset{1} << i));
        return c;
    }
};

struct InequalityCheck {
    double lhs = 0;
    double rhs = 0;
    bool holds = false;
};

inline constexpr double entropy_tolerance = 1e-9;

/// k H(X^n) <= sum_j H(X_{S_j}).
inline InequalityCheck shearer_check(const JointPmf& pmf, const CoverFamily& cover)
{
    if (cover.n != pmf.n())
        throw std::invalid_argument("cover ground set differs from pmf arity");
    cover.validate();
    InequalityCheck r;
    r.lhs = cover.k * joint_entropy(pmf);
    for (Subset s : cover.subsets)
        r.rhs += marginal_entropy(pmf, s);
    r.holds = r.lhs <= r.rhs + entropy_tolerance;
    return r;
}

struct HanCheck {
    double lower = 0;   // (n-1) H(X^n)
    double middle = 0;  // sum over leave-one-out marginals
    double upper = 0;   // n H(X^n)
    bool lower_holds = false;
    bool upper_holds = false;
};

inline HanCheck han_check(const JointPmf& pmf)
{
    const int n = pmf.n();
    if (n < 2)
        throw std::invalid_argument("Han's inequality needs n >= 2");
    const double h = joint_entropy(pmf);
    HanCheck r;
    r.lower = (n - 1) * h;
    r.upper = n * h;
    for (int l = 0; l < n; ++l)
        r.middle += marginal_entropy(pmf, ground_set(n) & ~(Subset{1} << l));
    r.lower_holds = r.lower <= r.middle + entropy_tolerance;
    r.upper_holds = r.middle <= r.upper + entropy_tolerance;
    return r;
}

/// { A & s : A in family }, deduplicated and sorted.
inline std::vector<Subset> trace(std::span<const Subset> family, Subset s)
{
    std::set<Subset> out;
    for (Subset a : family)
        out.insert(a & s);
    return {out.begin(), out.end()};
}

struct CombinatorialShearerCheck {
    std::uint64_t lhs = 0;   // |family|
    double rhs = 0;          // prod |trace_S|^(1/k)
    double log2_lhs = 0;
    double log2_rhs = 0;
    bool holds = false;
};

inline CombinatorialShearerCheck combinatorial_shearer_check(std::span<const Subset> family, const CoverFamily& cover)
{
    cover.validate();
    std::set<Subset> distinct(family.begin(), family.end());
    std::vector<Subset> members(distinct.begin(), distinct.end());
    CombinatorialShearerCheck r;
    r.lhs = members.size();
    r.log2_lhs = members.empty() ? -INFINITY : std::log2(static_cast<double>(members.size()));
    for (Subset s : cover.subsets)
        r.log2_rhs += std::log2(static_cast<double>(trace(members, s).size()));
    r.log2_rhs /= cover.k;
    r.rhs = std::exp2(r.log2_rhs);
    r.holds = members.empty() || r.log2_lhs <= r.log2_rhs + entropy_tolerance;
    return r;
}

/// Distribution of a random subset of [n] and the claimed inclusion floor theta.
struct SubsetDistribution {
    int n = 0;
    std::vector<std::pair<Subset, double>> mass;
    double theta = 0;

    double inclusion(int i) const
    {
        double p = 0;
        for (auto [s, q] : mass)
            if ((s >> i) & 1U)
                p += q;
        return p;
    }

    double min_inclusion() const
    {
        double p = 1.0;
        for (int i = 0; i < n; ++i)
            p = std::min(p, inclusion(i));
        return p;
    }

    void validate() const
    {
        double total = 0;
        for (auto [s, q] : mass) {
            if (s & ~ground_set(n))
                throw std::invalid_argument("random subset leaves the ground set");
            if (!(q >= 0))
                throw std::invalid_argument("subset probabilities must be nonnegative");
            total += q;
        }
        if (std::abs(total - 1.0) > 1e-12)
            throw std::invalid_argument("subset probabilities must sum to 1");
        if (!(theta > 0))
            throw std::invalid_argument("theta must be positive");
        for (int i = 0; i < n; ++i)
            if (inclusion(i) < theta - 1e-12)
                throw std::invalid_argument("P(i in S) < theta for element " + std::to_string(i));
    }

    /// Uniform over all size-s subsets of [t]; inclusion probability s/t.
    static SubsetDistribution uniform_of_size(int t, int s)
    {
        SubsetDistribution d{t, {}, static_cast<double>(s) / t};
        std::vector<Subset> picks;
        for (Subset m = 0; m <= ground_set(t); ++m) {
            if (std::popcount(m) == s)
                picks.push_back(m);
            if (m == ground_set(t))
                break;
        }
        for (Subset m : picks)
            d.mass.emplace_back(m, 1.0 / static_cast<double>(picks.size()));
        return d;
    }
};

/// E_S[H(X_S)] >= theta H(X^n): lhs is the expectation, rhs is theta H.
inline InequalityCheck probabilistic_shearer_check(const JointPmf& pmf, const SubsetDistribution& sdist)
{
    if (sdist.n != pmf.n())
        throw std::invalid_argument("subset distribution ground set differs from pmf arity");
    sdist.validate();
    InequalityCheck r;
    for (auto [s, q] : sdist.mass)
        if (q > 0)
            r.lhs += q * marginal_entropy(pmf, s);
    r.rhs = sdist.theta * joint_entropy(pmf);
    r.holds = r.lhs >= r.rhs - entropy_tolerance;
    return r;
}

}  // namespace graphent
