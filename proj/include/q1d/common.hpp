#ifndef Q1D_COMMON_HPP
#define Q1D_COMMON_HPP

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace q1d {

// Units everywhere: hbar = 1, 2m = 1. Lengths carry one common unit,
// energies are 1/length^2.

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double pi2_3 = pi * pi / 3.0;  // Girardeau-Tonks energy coefficient

// Hard-wall sentinel for the longitudinal trap exponent s.
inline constexpr double hard_wall = std::numeric_limits<double>::infinity();

struct solver_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Domain cannot hold the minimizer (mass leaking at the edges).
struct domain_too_small : solver_error {
    using solver_error::solver_error;
};

struct invariant_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline double sqr(double x) { return x * x; }
inline double cube(double x) { return x * x * x; }

// Trapezoid rule on a uniform grid.
inline double trapezoid(const std::vector<double>& f, double h) {
    if (f.size() < 2) return 0.0;
    double s = 0.5 * (f.front() + f.back());
    for (std::size_t i = 1; i + 1 < f.size(); ++i) s += f[i];
    return s * h;
}

}  // namespace q1d

#endif
