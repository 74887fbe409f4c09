#pragma once

#include <graphent/graph.hpp>
#include <graphent/optim.hpp>

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

namespace graphent {

/// Parameters (p, d, lambda, mu) of a strongly regular graph.
struct SrgParams {
    int p = 0;
    int d = 0;
    int lam = 0;
    int mu = 0;

    bool feasible() const
    {
        return p >= 3 && d > 0 && d < p - 1 && lam >= 0 && mu >= 0 && (p - d - 1) * mu == d * (d - lam - 1);
    }

    bool connected() const { return mu > 0; }

    void require_connected_feasible() const
    {
        if (!feasible())
            throw std::invalid_argument("infeasible srg parameters (" + to_string() + ")");
        if (!connected())
            throw std::invalid_argument("srg parameters describe a disconnected graph (mu = 0)");
    }

    std::string to_string() const
    {
        return std::to_string(p) + "," + std::to_string(d) + "," + std::to_string(lam) + "," + std::to_string(mu);
    }

    friend bool operator==(const SrgParams&, const SrgParams&) = default;
};

struct SrgSpectrum {
    double r1 = 0;  // larger restricted eigenvalue
    double m1 = 0;
    double r2 = 0;  // smallest eigenvalue
    double m2 = 0;
};

/// Restricted eigenvalues and their multiplicities. The multiplicity
/// formula uses p - 1 in the role of the vertex count minus one; both trace
/// identities are checked.
inline SrgSpectrum srg_eigen(const SrgParams& s)
{
    s.require_connected_feasible();
    const double lm = s.lam - s.mu;
    const double disc = std::sqrt(lm * lm + 4.0 * (s.d - s.mu));
    SrgSpectrum out;
    out.r1 = 0.5 * (lm + disc);
    out.r2 = 0.5 * (lm - disc);
    const double skew = (2.0 * s.d + (s.p - 1) * lm) / disc;
    out.m1 = 0.5 * ((s.p - 1) - skew);
    out.m2 = 0.5 * ((s.p - 1) + skew);
    if (std::abs(1.0 + out.m1 + out.m2 - s.p) > 1e-8 || std::abs(s.d + out.m1 * out.r1 + out.m2 * out.r2) > 1e-8)
        throw std::logic_error("srg multiplicities violate the trace identities for (" + s.to_string() + ")");
    return out;
}

/// Theta of the complement of a connected srg: 1 - d / r2, cross-checked
/// against the expanded radical form.
inline double theta_srg_closed_form(const SrgParams& s)
{
    const auto spec = srg_eigen(s);
    const double via_eigenvalue = 1.0 - s.d / spec.r2;
    const double lm = s.lam - s.mu;
    const double via_radical = 1.0 + 2.0 * s.d / (std::sqrt(lm * lm + 4.0 * (s.d - s.mu)) - s.lam + s.mu);
    if (std::abs(via_eigenvalue - via_radical) > 1e-10)
        throw std::logic_error("srg closed forms disagree");
    return via_radical;
}

inline std::optional<SrgParams> detect_srg(const Graph& g)
{
    const int p = g.order();
    if (p < 3 || !g.is_regular())
        return std::nullopt;
    const int d = g.degree(0);
    if (d == 0 || d == p - 1)
        return std::nullopt;
    int lam = -1, mu = -1;
    for (int u = 0; u < p; ++u) {
        for (int v = u + 1; v < p; ++v) {
            const int common = popcount(g.neighbors(u) & g.neighbors(v));
            int& slot = g.adjacent(u, v) ? lam : mu;
            if (slot < 0)
                slot = common;
            else if (slot != common)
                return std::nullopt;
        }
    }
    return SrgParams{p, d, lam < 0 ? 0 : lam, mu < 0 ? 0 : mu};
}

inline SymMatrix adjacency_matrix(const Graph& g)
{
    SymMatrix a(g.order());
    for (auto [u, v] : g.edges())
        a.set(u, v, 1.0);
    return a;
}

/// 1 + lambda_max(A) / |lambda_min(A)|: the adjacency matrix is an admissible
/// point of the eigenvalue-ratio characterisation of theta of the complement.
inline double spectral_lower_bound(const Graph& h)
{
    if (h.edge_count() == 0)
        throw std::invalid_argument("spectral bound needs at least one edge");
    const auto ev = sym_eigenvalues(adjacency_matrix(h));
    return 1.0 + ev.front() / std::abs(ev.back());
}

/// Zero pattern of the theta SDP for the complement of h: the non-adjacent pairs of h.
inline SdpProblem theta_complement_problem(const Graph& h)
{
    SdpProblem prob;
    prob.p = h.order();
    for (int u = 0; u < h.order(); ++u)
        for (int v = u + 1; v < h.order(); ++v)
            if (!h.adjacent(u, v))
                prob.zero_pattern.emplace_back(u, v);
    return prob;
}

struct ThetaReport {
    double sdp_value = 0;
    double spectral_lb = 0;  // only meaningful when h has an edge
    std::optional<double> srg_closed_form;
    std::optional<SrgParams> srg;
    long long ceiled = 0;
    int iterations = 0;
    double residual = 0;
};

inline ThetaReport theta_of_complement(const Graph& h, const SdpOptions& opt = {})
{
    if (h.order() < 1)
        throw std::invalid_argument("theta needs at least one vertex");
    if (h.order() > 40)
        throw std::invalid_argument("theta SDP is limited to 40 vertices");
    ThetaReport r;
    const auto res = solve_sdp(theta_complement_problem(h), opt);
    if (!res.converged)
        throw sdp_error("theta SDP did not converge", res.value, res.residual);
    r.sdp_value = res.value;
    r.iterations = res.iterations;
    r.residual = res.residual;
    r.ceiled = guarded_ceil(r.sdp_value);
    r.spectral_lb = h.edge_count() > 0 ? spectral_lower_bound(h) : 1.0;
    if (auto s = detect_srg(h); s && s->connected()) {
        r.srg = s;
        r.srg_closed_form = theta_srg_closed_form(*s);
    }
    return r;
}

/// Lovász theta of g itself (the complement route applied to the complement).
inline double lovasz_theta(const Graph& g, const SdpOptions& opt = {})
{
    return theta_of_complement(complement(g), opt).sdp_value;
}

}  // namespace graphent
