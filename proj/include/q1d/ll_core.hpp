#ifndef Q1D_LL_CORE_HPP
#define Q1D_LL_CORE_HPP

#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "q1d/common.hpp"

namespace q1d::ll {

/// One point of the homogeneous gas energy curve. Conventions follow the
/// Hamiltonian -sum d^2 + g sum delta: energy per particle = rho^2 e(t)
/// with t = g/rho, e(t) ~ t/2 for t << 1 and e(t) -> pi^2/3 for t -> inf.
struct LLPoint {
    double t = 0.0;
    double e = 0.0;
    double e_prime = 0.0;
};

/// Ground-state energy coefficient e(t) and its derivative from the
/// Lieb-Liniger integral equation (Fredholm second kind, Lorentzian kernel),
/// solved by Gauss-Legendre Nystrom quadrature with `quad_order` nodes and
/// Newton continuation in the kernel parameter to hit the requested t.
/// e'(t) comes from differentiating the quasimomentum distribution with
/// respect to the kernel parameter, not from finite differences.
LLPoint solve_ll_point(double t, int quad_order = 64);

/// Tabulated e(t): solver values at log-spaced knots, C0-matched asymptotic
/// tails outside [t_lo, t_hi], monotone cubic interpolation between knots.
struct LLEnergyTable {
    std::vector<double> knots;    // sorted, positive
    std::vector<double> e;        // e(t) at knots
    std::vector<double> e_prime;  // e'(t) at knots
    double t_lo = 1e-2;
    double t_hi = 1e3;
    int quad_order = 64;
    double weak_c2 = 0.0;    // t/2 - (4/3pi)(t/2)^{3/2} + weak_c2 (t/2)^2
    double strong_c3 = 0.0;  // (pi^2/3)(1 - 8/t + 48/t^2 + strong_c3/t^3)

    static LLEnergyTable build(double t_lo = 1e-2, double t_hi = 1e3,
                               int knots_per_decade = 40, int quad_order = 64);

    LLPoint eval(double t) const;  // total on t >= 0

    /// Throws invariant_error if monotonicity / bounds / concavity /
    /// te(1/t) <= 1/2 / convexity of t^3 e(1/t) fail on the knots.
    void validate() const;

    nlohmann::json to_json() const;
    static LLEnergyTable from_json(const nlohmann::json& j);  // validates
};

/// Local energy density rho^3 e(g/rho), continuously extended by 0 at rho=0.
double energy_density(double rho, double g, const LLEnergyTable& table);

/// d/drho [rho^3 e(g/rho)] = 3 rho^2 e(t) - g rho e'(t), extended by 0 at rho=0.
double energy_density_deriv(double rho, double g, const LLEnergyTable& table);

}  // namespace q1d::ll

#endif
