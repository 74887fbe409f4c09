#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace graphent {

/// Dense symmetric matrix, row-major.
class SymMatrix {
public:
    SymMatrix() = default;
    explicit SymMatrix(int p, double fill = 0.0) : p_(p), a_(static_cast<std::size_t>(p) * p, fill)
    {
        if (p < 0)
            throw std::invalid_argument("matrix dimension must be nonnegative");
    }

    /// Validates symmetry of a full row-major block.
    SymMatrix(int p, std::span<const double> row_major, double tol = 1e-12) : SymMatrix(p)
    {
        if (row_major.size() != a_.size())
            throw std::invalid_argument("matrix data size mismatch");
        std::copy(row_major.begin(), row_major.end(), a_.begin());
        for (int i = 0; i < p; ++i)
            for (int j = i + 1; j < p; ++j)
                if (std::abs((*this)(i, j) - (*this)(j, i)) > tol)
                    throw std::invalid_argument("matrix is not symmetric at (" + std::to_string(i) + "," +
                                                std::to_string(j) + ")");
    }

    static SymMatrix identity(int p)
    {
        SymMatrix m(p);
        for (int i = 0; i < p; ++i)
            m(i, i) = 1.0;
        return m;
    }

    int dim() const { return p_; }
    double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * p_ + j]; }
    double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * p_ + j]; }
    std::span<const double> data() const { return a_; }
    std::span<double> data() { return a_; }

    double trace() const
    {
        double s = 0;
        for (int i = 0; i < p_; ++i)
            s += (*this)(i, i);
        return s;
    }

    double sum() const
    {
        double s = 0;
        for (double x : a_)
            s += x;
        return s;
    }

    double frobenius() const
    {
        double s = 0;
        for (double x : a_)
            s += x * x;
        return std::sqrt(s);
    }

    /// Sets both (i,j) and (j,i).
    void set(int i, int j, double v)
    {
        (*this)(i, j) = v;
        (*this)(j, i) = v;
    }

private:
    int p_ = 0;
    std::vector<double> a_;
};

inline double frobenius_distance(const SymMatrix& a, const SymMatrix& b)
{
    double s = 0;
    auto x = a.data(), y = b.data();
    for (std::size_t i = 0; i < x.size(); ++i)
        s += (x[i] - y[i]) * (x[i] - y[i]);
    return std::sqrt(s);
}

struct EigenDecomposition {
    std::vector<double> values;  // descending
    SymMatrix vectors;           // column k is the eigenvector of values[k]
};

/// Cyclic Jacobi rotations until the off-diagonal Frobenius norm drops below
/// 1e-12 (scaled by the matrix norm when that exceeds 1).
inline EigenDecomposition sym_eigen(const SymMatrix& m)
{
    const int p = m.dim();
    if (p < 1)
        throw std::invalid_argument("sym_eigen requires p >= 1");
    for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j)
            if (std::abs(m(i, j) - m(j, i)) > 1e-12)
                throw std::invalid_argument("sym_eigen: matrix is not symmetric");
    SymMatrix a = m;
    SymMatrix v = SymMatrix::identity(p);
    const double tol = 1e-12 * std::max(1.0, m.frobenius());
    auto off = [&] {
        double s = 0;
        for (int i = 0; i < p; ++i)
            for (int j = 0; j < p; ++j)
                if (i != j)
                    s += a(i, j) * a(i, j);
        return std::sqrt(s);
    };
    for (int sweep = 0; sweep < 100 && off() >= tol; ++sweep) {
        for (int i = 0; i < p; ++i) {
            for (int j = i + 1; j < p; ++j) {
                const double aij = a(i, j);
                if (aij == 0.0)
                    continue;
                const double theta = (a(j, j) - a(i, i)) / (2.0 * aij);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < p; ++k) {
                    const double aki = a(k, i), akj = a(k, j);
                    a(k, i) = c * aki - s * akj;
                    a(k, j) = s * aki + c * akj;
                }
                for (int k = 0; k < p; ++k) {
                    const double aik = a(i, k), ajk = a(j, k);
                    a(i, k) = c * aik - s * ajk;
                    a(j, k) = s * aik + c * ajk;
                }
                for (int k = 0; k < p; ++k) {
                    const double vki = v(k, i), vkj = v(k, j);
                    v(k, i) = c * vki - s * vkj;
                    v(k, j) = s * vki + c * vkj;
                }
            }
        }
    }
    std::vector<int> idx(static_cast<std::size_t>(p));
    for (int i = 0; i < p; ++i)
        idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(), [&](int x, int y) { return a(x, x) > a(y, y); });
    EigenDecomposition out{std::vector<double>(static_cast<std::size_t>(p)), SymMatrix(p)};
    for (int k = 0; k < p; ++k) {
        out.values[k] = a(idx[k], idx[k]);
        for (int r = 0; r < p; ++r)
            out.vectors(r, k) = v(r, idx[k]);
    }
    return out;
}

inline std::vector<double> sym_eigenvalues(const SymMatrix& m) { return sym_eigen(m).values; }

// ---------------------------------------------------------------------------
// Linear programming: maximize c.x subject to A x <= b, x >= 0

struct LpConstraint {
    std::vector<double> coeffs;
    double rhs = 0;
};

struct LpProblem {
    std::vector<double> objective;
    std::vector<LpConstraint> constraints;

    void validate() const
    {
        for (const auto& row : constraints) {
            if (row.coeffs.size() != objective.size())
                throw std::invalid_argument("LP constraint width differs from objective");
            if (!std::isfinite(row.rhs))
                throw std::invalid_argument("LP right-hand side must be finite");
        }
    }
};

struct LpSolution {
    double value = 0;
    std::vector<double> x;
    std::vector<double> dual;  // one multiplier per constraint
    int pivots = 0;
};

class lp_error : public std::runtime_error {
public:
    enum class Kind { infeasible, unbounded };
    lp_error(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

namespace detail {

/// Dense tableau simplex using Bland's rule.
class Tableau {
public:
    Tableau(int rows, int cols) : rows_(rows), cols_(cols), t_(static_cast<std::size_t>(rows + 1) * (cols + 1), 0.0) {}

    double& at(int r, int c) { return t_[static_cast<std::size_t>(r) * (cols_ + 1) + c]; }
    double& rhs(int r) { return at(r, cols_); }
    double& cost(int c) { return at(rows_, c); }  // reduced cost row, maximize

    std::vector<int> basis;
    int pivots = 0;

    void pivot(int r, int c)
    {
        const double pv = at(r, c);
        for (int j = 0; j <= cols_; ++j)
            at(r, j) /= pv;
        for (int i = 0; i <= rows_; ++i) {
            if (i == r)
                continue;
            const double f = at(i, c);
            if (f == 0.0)
                continue;
            for (int j = 0; j <= cols_; ++j)
                at(i, j) -= f * at(r, j);
        }
        basis[r] = c;
        ++pivots;
    }

    /// Returns false when the objective is unbounded over the allowed columns.
    bool optimize(int allowed_cols, double eps)
    {
        while (true) {
            int enter = -1;
            for (int j = 0; j < allowed_cols; ++j)
                if (cost(j) > eps) {
                    enter = j;
                    break;
                }
            if (enter < 0)
                return true;
            int leave = -1;
            double best = std::numeric_limits<double>::infinity();
            for (int i = 0; i < rows_; ++i) {
                if (at(i, enter) > eps) {
                    const double ratio = rhs(i) / at(i, enter);
                    if (ratio < best - eps || (std::abs(ratio - best) <= eps && basis[i] < basis[leave])) {
                        best = ratio;
                        leave = i;
                    }
                }
            }
            if (leave < 0)
                return false;
            pivot(leave, enter);
        }
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

private:
    int rows_, cols_;
    std::vector<double> t_;
};

}  // namespace detail

/// Two-phase dense simplex with Bland's rule. Dual multipliers are read off
/// the slack reduced costs.
inline LpSolution lp_maximize(const LpProblem& prob)
{
    prob.validate();
    constexpr double eps = 1e-11;
    const int n = static_cast<int>(prob.objective.size());
    const int m = static_cast<int>(prob.constraints.size());
    std::vector<int> flipped;
    for (int i = 0; i < m; ++i)
        if (prob.constraints[i].rhs < 0)
            flipped.push_back(i);
    const int na = static_cast<int>(flipped.size());
    // columns: x (n), slack (m), artificial (na)
    detail::Tableau tab(m, n + m + na);
    tab.basis.assign(static_cast<std::size_t>(m), -1);
    int art = 0;
    for (int i = 0; i < m; ++i) {
        const auto& row = prob.constraints[i];
        const double sign = row.rhs < 0 ? -1.0 : 1.0;
        for (int j = 0; j < n; ++j)
            tab.at(i, j) = sign * row.coeffs[j];
        tab.at(i, n + i) = sign;
        tab.rhs(i) = sign * row.rhs;
        if (row.rhs < 0) {
            tab.at(i, n + m + art) = 1.0;
            tab.basis[i] = n + m + art;
            ++art;
        } else {
            tab.basis[i] = n + i;
        }
    }
    if (na > 0) {
        // phase 1: maximize -(sum of artificials)
        for (int i = 0; i < m; ++i)
            if (tab.basis[i] >= n + m)
                for (int j = 0; j <= n + m + na; ++j)
                    if (j < n + m || j == n + m + na)
                        tab.cost(j) += tab.at(i, j);
        tab.optimize(n + m + na, eps);
        if (tab.cost(n + m + na) > 1e-9)  // remaining artificial mass
            throw lp_error(lp_error::Kind::infeasible, "LP is infeasible");
        for (int i = 0; i < m; ++i) {
            if (tab.basis[i] < n + m)
                continue;
            for (int j = 0; j < n + m; ++j)
                if (std::abs(tab.at(i, j)) > 1e-9) {
                    tab.pivot(i, j);
                    break;
                }
        }
        for (int j = 0; j <= n + m + na; ++j)
            tab.cost(j) = 0.0;
        for (int i = 0; i < m; ++i)
            for (int j = n + m; j < n + m + na; ++j)
                tab.at(i, j) = 0.0;
    }
    // phase 2 reduced costs: c_j - c_B B^-1 A_j, objective value kept negated in rhs slot
    for (int j = 0; j < n; ++j)
        tab.cost(j) = prob.objective[j];
    tab.cost(n + m + na) = 0.0;
    for (int i = 0; i < m; ++i) {
        const int b = tab.basis[i];
        const double cb = b < n ? prob.objective[b] : 0.0;
        if (cb == 0.0)
            continue;
        for (int j = 0; j <= n + m + na; ++j)
            tab.cost(j) -= cb * tab.at(i, j);
    }
    if (!tab.optimize(n + m, eps))
        throw lp_error(lp_error::Kind::unbounded, "LP is unbounded");
    LpSolution sol;
    sol.x.assign(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < m; ++i)
        if (tab.basis[i] < n)
            sol.x[tab.basis[i]] = tab.rhs(i);
    sol.value = 0;
    for (int j = 0; j < n; ++j)
        sol.value += prob.objective[j] * sol.x[j];
    sol.dual.assign(static_cast<std::size_t>(m), 0.0);
    for (int i = 0; i < m; ++i)
        sol.dual[i] = -tab.cost(n + i);
    sol.pivots = tab.pivots;
    return sol;
}

// ---------------------------------------------------------------------------
// Theta-type SDP: maximize <J,B> over PSD B with tr B = 1 and B_ij = 0 on a pattern.

struct SdpProblem {
    int p = 0;
    std::vector<std::pair<int, int>> zero_pattern;  // off-diagonal pairs, i < j

    void validate() const
    {
        if (p < 1)
            throw std::invalid_argument("SDP dimension must be positive");
        for (auto [i, j] : zero_pattern)
            if (i == j || i < 0 || j < 0 || i >= p || j >= p)
                throw std::invalid_argument("SDP zero pattern holds an invalid pair");
    }
};

struct SdpOptions {
    int max_iterations = 200000;
    double tolerance = 1e-8;  // Frobenius change between successive iterates
    double rho = 1.0;
    double relaxation = 1.6;
};

struct SdpResult {
    double value = 0;
    double residual = 0;  // ||X - Z||_F at exit
    int iterations = 0;
    bool converged = false;
    SymMatrix solution;
};

class sdp_error : public std::runtime_error {
public:
    sdp_error(const std::string& what, double best, double residual)
        : std::runtime_error(what), best_value(best), residual(residual)
    {
    }
    double best_value;
    double residual;
};

/// Euclidean projection onto the PSD cone by eigenvalue clipping.
inline SymMatrix project_psd(const SymMatrix& m)
{
    const auto eig = sym_eigen(m);
    const int p = m.dim();
    SymMatrix out(p);
    for (int k = 0; k < p; ++k) {
        const double lam = eig.values[k];
        if (lam <= 0)
            continue;
        for (int i = 0; i < p; ++i) {
            const double vi = lam * eig.vectors(i, k);
            for (int j = 0; j < p; ++j)
                out(i, j) += vi * eig.vectors(j, k);
        }
    }
    for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j) {
            const double avg = 0.5 * (out(i, j) + out(j, i));
            out.set(i, j, avg);
        }
    return out;
}

/// ADMM splitting between the affine set {tr B = 1, B_ij = 0 on pattern}
/// and the PSD cone.
inline SdpResult solve_sdp(const SdpProblem& prob, const SdpOptions& opt = {})
{
    prob.validate();
    const int p = prob.p;
    auto project_affine = [&](SymMatrix m) {
        for (auto [i, j] : prob.zero_pattern)
            m.set(i, j, 0.0);
        const double shift = (1.0 - m.trace()) / p;
        for (int i = 0; i < p; ++i)
            m(i, i) += shift;
        return m;
    };
    SymMatrix z(p, 0.0);
    for (int i = 0; i < p; ++i)
        z(i, i) = 1.0 / p;
    SymMatrix u(p, 0.0);
    SymMatrix x = z;
    double sigma = opt.rho;
    SdpResult res;
    for (int it = 1; it <= opt.max_iterations; ++it) {
        SymMatrix target(p);
        for (int i = 0; i < p; ++i)
            for (int j = 0; j < p; ++j)
                target(i, j) = z(i, j) - u(i, j) + 1.0 / sigma;
        x = project_affine(std::move(target));
        SymMatrix relaxed(p), shifted(p);
        for (int i = 0; i < p; ++i)
            for (int j = 0; j < p; ++j) {
                relaxed(i, j) = opt.relaxation * x(i, j) + (1.0 - opt.relaxation) * z(i, j);
                shifted(i, j) = relaxed(i, j) + u(i, j);
            }
        SymMatrix z_next = project_psd(shifted);
        const double dz = frobenius_distance(z_next, z);
        const double r = frobenius_distance(x, z_next);
        for (int i = 0; i < p; ++i)
            for (int j = 0; j < p; ++j)
                u(i, j) += relaxed(i, j) - z_next(i, j);
        z = std::move(z_next);
        res.iterations = it;
        res.residual = r;
        if (dz < opt.tolerance && r < opt.tolerance) {
            res.converged = true;
            break;
        }
        // residual balancing; u is the scaled dual, so it rescales with sigma
        if (it % 10 == 0) {
            double factor = 1.0;
            if (r > 10.0 * sigma * dz)
                factor = 2.0;
            else if (sigma * dz > 10.0 * r)
                factor = 0.5;
            if (factor != 1.0) {
                sigma *= factor;
                for (int i = 0; i < p; ++i)
                    for (int j = 0; j < p; ++j)
                        u(i, j) /= factor;
            }
        }
    }
    // the PSD iterate is feasible up to the residual; report its objective
    res.value = z.sum();
    res.solution = z;
    return res;
}

inline double sdp_theta(const SdpProblem& prob, const SdpOptions& opt = {})
{
    auto res = solve_sdp(prob, opt);
    if (!res.converged)
        throw sdp_error("SDP did not converge within " + std::to_string(opt.max_iterations) + " iterations",
                        res.value, res.residual);
    return res.value;
}

/// Ceiling that snaps values within `guard` of an integer onto that integer.
inline long long guarded_ceil(double x, double guard = 1e-4)
{
    const double r = std::round(x);
    if (std::abs(x - r) <= guard)
        return static_cast<long long>(r);
    return static_cast<long long>(std::ceil(x));
}

}  // namespace graphent
