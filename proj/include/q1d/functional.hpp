#ifndef Q1D_FUNCTIONAL_HPP
#define Q1D_FUNCTIONAL_HPP

#include <functional>
#include <utility>

#include "q1d/grid.hpp"
#include "q1d/ll_core.hpp"
#include "q1d/params.hpp"

namespace q1d::functional {

struct EnergyBreakdown {
    double kinetic = 0.0;
    double potential = 0.0;
    double interaction = 0.0;
    double total = 0.0;

    void validate() const {
        if (kinetic < -1e-12 || potential < -1e-12 || interaction < -1e-12)
            throw invariant_error("EnergyBreakdown: negative term");
        double sum = kinetic + potential + interaction;
        if (std::abs(total - sum) > 1e-9 * std::max(1.0, std::abs(sum)))
            throw invariant_error("EnergyBreakdown: total != sum of terms");
    }
};

struct MinimizeOptions {
    double tol = 1e-8;       // constrained residual, relative
    int max_iter = 100000;
    enum class Init { gaussian, uniform } init = Init::gaussian;
};

/// Interaction energy density and its derivative in rho.
struct Interaction {
    std::function<double(double)> f;
    std::function<double(double)> fp;
};

/// Minimize int( |d sqrt(rho)|^2 + V rho + f(rho) ) with trapezoid mass N,
/// by preconditioned projected gradient flow on psi = sqrt(rho) with
/// renormalization and energy backtracking. dirichlet_walls pins psi = 0 at
/// both grid ends (hard-wall box).
std::pair<DensityProfile, EnergyBreakdown> minimize_with_gradient(
    double N, const std::function<double(double)>& V, const Interaction& inter,
    const Grid1D& grid, bool dirichlet_walls, const MinimizeOptions& opts = {});

/// Minimize int( V rho + f(rho) ) over rho >= 0 with trapezoid mass N
/// (no gradient term), by projected descent on the mass simplex.
struct FlatMinimizerResult {
    DensityProfile rho;
    double energy = 0.0;
    double mu = 0.0;  // multiplier of the mass constraint on the support
};
FlatMinimizerResult minimize_no_gradient(double N, const std::function<double(double)>& V,
                                         const Interaction& inter, const Grid1D& grid,
                                         const MinimizeOptions& opts = {});

/// The general 1D density functional: gradient + trap + rho^3 e(g/rho).
std::pair<DensityProfile, EnergyBreakdown> minimize_general(
    double N, const TrapSpec& trap, double g, const ll::LLEnergyTable& table,
    const Grid1D& grid, const MinimizeOptions& opts = {});

/// Domain sized from the regime support estimates (TF / LL widths) with a
/// safety factor of 3; hard-wall traps get exactly [-L, L].
Grid1D auto_grid(double N, const TrapSpec& trap, double g, int n_points = 4097);

/// Mean 1D density: (1/N) int rho^2.
double mean_density(const DensityProfile& rho);

struct LongitudinalMode {
    double e_par = 0.0;             // ground energy of -d^2/dz^2 + V(z)
    DensityProfile rho_par;         // |ground state|^2, unit mass
    double refinement_shift = 0.0;  // eigenvalue change under grid doubling
};

/// Lowest eigenpair of the canonical longitudinal operator -d^2/dz^2 + V(z)
/// (box of half-width 1 for hard walls) by finite differences, Richardson
/// extrapolated over grid and doubled grid.
LongitudinalMode longitudinal_ground_state(const TrapSpec& trap, const Grid1D& grid,
                                           double refine_tol = 1e-4);

/// Dimensionless smallness checks behind the 1D description.
struct ValidityRecord {
    double e0_rhobar_r2 = 0.0;  // e0(rhobar) r^2 vs the transverse gap
    double a_over_r = 0.0;
    double r_over_L = 0.0;
    double diluteness = 0.0;  // a^2 g rhobar ~ a^3 rho3d
    bool gap_ok = false, a_r_ok = false, r_L_ok = false;
    double threshold = 1e-2;
    bool all_ok() const { return gap_ok && a_r_ok && r_L_ok; }
};
ValidityRecord validity_check(const GasParams& params, double g, const DensityProfile& rho,
                              const ll::LLEnergyTable& table, double threshold = 1e-2);

/// Pointwise chemical potential -(sqrt rho)'' / sqrt(rho) + V + f'(rho) on the
/// region rho > level*max(rho); returns (mean, max relative deviation).
std::pair<double, double> euler_lagrange_residual(const DensityProfile& rho,
                                                  const std::function<double(double)>& V,
                                                  const std::function<double(double)>& fp,
                                                  double level = 1e-6);

}  // namespace q1d::functional

#endif
