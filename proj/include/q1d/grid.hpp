#ifndef Q1D_GRID_HPP
#define Q1D_GRID_HPP

#include <ostream>
#include <istream>

#include "q1d/common.hpp"

namespace q1d {

/// Uniform 1D grid including both endpoints.
struct Grid1D {
    double z_min = -1.0;
    double z_max = 1.0;
    int n_points = 65;

    Grid1D() = default;
    Grid1D(double a, double b, int n) : z_min(a), z_max(b), n_points(n) {
        if (!(b > a)) throw std::invalid_argument("Grid1D: z_max must exceed z_min");
        if (n < 64) throw std::invalid_argument("Grid1D: need at least 64 points");
    }

    double h() const { return (z_max - z_min) / (n_points - 1); }
    double z(int i) const { return z_min + i * h(); }

    Grid1D refined() const { return Grid1D(z_min, z_max, 2 * (n_points - 1) + 1); }
};

/// Nonnegative density on a grid with a fixed trapezoid mass.
struct DensityProfile {
    Grid1D grid;
    std::vector<double> values;
    double mass = 0.0;  // target N

    double integral() const { return trapezoid(values, grid.h()); }
    double max_value() const {
        double m = 0.0;
        for (double v : values) m = std::max(m, v);
        return m;
    }

    // mass and positivity checks; edge decay only for unconfined (soft) traps
    void validate(bool check_edge_decay = true) const {
        if ((int)values.size() != grid.n_points)
            throw invariant_error("DensityProfile: size mismatch");
        for (double v : values)
            if (!(v >= 0.0)) throw invariant_error("DensityProfile: negative value");
        double m = integral();
        if (std::abs(m - mass) > 1e-10 * std::max(1.0, std::abs(mass)))
            throw invariant_error("DensityProfile: mass off target");
        if (check_edge_decay) {
            double mx = max_value();
            if (values.front() > 1e-8 * mx || values.back() > 1e-8 * mx)
                throw invariant_error("DensityProfile: no decay at domain edges");
        }
    }

    void write_csv(std::ostream& os) const {
        os << "z,rho\n";
        char buf[64];
        for (int i = 0; i < grid.n_points; ++i) {
            std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", grid.z(i), values[i]);
            os << buf;
        }
    }
};

}  // namespace q1d

#endif
