#ifndef Q1D_PARAMS_HPP
#define Q1D_PARAMS_HPP

#include <string>

#include "q1d/common.hpp"

namespace q1d {

/// Longitudinal trap V_L(z) = |z/L|^s / L^2. s == hard_wall means a box of
/// half-width L with Dirichlet walls.
struct TrapSpec {
    double s = 2.0;
    double L = 1.0;

    bool is_hard_wall() const { return std::isinf(s); }

    // canonical potential V(z) = |z|^s (box half-width 1 for hard walls)
    double V(double z) const {
        if (is_hard_wall()) return 0.0;
        return std::pow(std::abs(z), s);
    }
    // scaled potential V_L(z)
    double V_scaled(double z) const {
        if (is_hard_wall()) return 0.0;
        return V(z / L) / (L * L);
    }

    void validate() const {
        if (!(L > 0)) throw std::invalid_argument("TrapSpec: L must be positive");
        if (!(s > 0)) throw std::invalid_argument("TrapSpec: s must be positive");
    }
};

enum class TransverseKind { harmonic, hard_wall_disk };

inline std::string to_string(TransverseKind k) {
    return k == TransverseKind::harmonic ? "harmonic" : "hard-wall-disk";
}

/// The physical inputs: particle number, trap lengths, scattering length,
/// longitudinal exponent and transverse trap type.
struct GasParams {
    double N = 1.0;
    double L = 1.0;
    double r = 1e-2;
    double a = 1e-5;
    double s = 2.0;
    TransverseKind transverse = TransverseKind::harmonic;

    TrapSpec trap() const { return {s, L}; }

    void validate() const {
        if (!(N >= 1)) throw std::invalid_argument("GasParams: N must be >= 1");
        if (!(L > 0) || !(r > 0)) throw std::invalid_argument("GasParams: lengths must be positive");
        if (!(a >= 0)) throw std::invalid_argument("GasParams: a must be >= 0");
        if (!(s > 0)) throw std::invalid_argument("GasParams: s must be positive");
    }
    // regime formulas assume a << r; callers surface this as a warning
    bool scattering_length_ok() const { return a < r; }
};

}  // namespace q1d

#endif
