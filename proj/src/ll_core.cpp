// Homogeneous Lieb-Liniger ground state energy density.
//
// Internally the solver works in the canonical convention
// H = -sum d^2 + 2c sum delta with gamma = c/rho; the map to the g-convention
// used throughout this project is c = g/2, i.e. e(t) = e_LL(t/2). This is
// fixed uniquely by the weak-coupling slope e(t) ~ t/2.

#include "q1d/ll_core.hpp"

#include <algorithm>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

namespace q1d::ll {

namespace {

struct QuadRule {
    std::vector<double> x, w;
};

// Gauss-Legendre nodes/weights on [-1,1] by Newton on the recurrence.
QuadRule gauss_legendre(int n) {
    QuadRule q;
    q.x.resize(n);
    q.w.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        q.x[i] = -x;
        q.x[n - 1 - i] = x;
        double w = 2.0 / ((1.0 - x * x) * pp * pp);
        q.w[i] = w;
        q.w[n - 1 - i] = w;
    }
    return q;
}

struct CurvePoint {
    double gamma, dgamma;  // gamma(lambda) and d gamma / d lambda
    double e, de;          // e_LL(gamma(lambda)) and d e / d lambda
};

// Solve the Lieb-Liniger integral equation at kernel parameter lambda = c/K:
//   f(x) - (1/pi) int_{-1}^{1} lambda/(lambda^2+(x-y)^2) f(y) dy = 1/(2 pi)
// gamma = lambda/I0, e = I2/I0^3 with I0 = int f, I2 = int x^2 f.
// The lambda-derivatives reuse the LU factorization with a second RHS.
CurvePoint solve_lambda(double lam, const QuadRule& q) {
    const int n = (int)q.x.size();
    Eigen::MatrixXd A(n, n);
    Eigen::MatrixXd K(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double d2 = sqr(q.x[i] - q.x[j]);
            double denom = lam * lam + d2;
            K(i, j) = lam / (pi * denom);
            A(i, j) = (i == j ? 1.0 : 0.0) - K(i, j) * q.w[j];
        }
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(A);
    Eigen::VectorXd f = lu.solve(Eigen::VectorXd::Constant(n, 1.0 / (2 * pi)));

    // dK/dlambda applied to f as the RHS for df/dlambda
    Eigen::VectorXd rhs(n);
    for (int i = 0; i < n; ++i) {
        double s = 0.0;
        for (int j = 0; j < n; ++j) {
            double d2 = sqr(q.x[i] - q.x[j]);
            double denom = lam * lam + d2;
            s += q.w[j] * (d2 - lam * lam) / (pi * denom * denom) * f[j];
        }
        rhs[i] = s;
    }
    Eigen::VectorXd df = lu.solve(rhs);

    double I0 = 0, I2 = 0, dI0 = 0, dI2 = 0;
    for (int i = 0; i < n; ++i) {
        I0 += q.w[i] * f[i];
        I2 += q.w[i] * sqr(q.x[i]) * f[i];
        dI0 += q.w[i] * df[i];
        dI2 += q.w[i] * sqr(q.x[i]) * df[i];
    }
    CurvePoint p;
    p.gamma = lam / I0;
    p.dgamma = 1.0 / I0 - lam * dI0 / (I0 * I0);
    p.e = I2 / cube(I0);
    p.de = dI2 / cube(I0) - 3.0 * I2 * dI0 / (cube(I0) * I0);
    return p;
}

// e_LL(gamma) and derivative by inverting gamma(lambda); Newton in log lambda
// with a bisection safeguard. lam_hint warm-starts table construction.
struct LLResult {
    double e, e_prime, lam;
};

LLResult solve_gamma(double gamma, int quad_order, double lam_hint = 0.0) {
    const QuadRule q = gauss_legendre(quad_order);
    double lam = lam_hint > 0 ? lam_hint : std::sqrt(gamma) / 2 + gamma / pi;

    // resolution guard: the Lorentzian kernel needs node spacing << lambda
    if (lam * quad_order < 6.0)
        throw solver_error("solve_ll_point: quad_order too small for this coupling");

    double lo = 0.0, hi = 0.0;  // bracket in lambda once sign is known
    CurvePoint p = solve_lambda(lam, q);
    for (int it = 0;; ++it) {
        if (it > 200) throw solver_error("solve_ll_point: continuation failed to converge");
        double rel = (p.gamma - gamma) / gamma;
        if (std::abs(rel) < 1e-13) break;
        if (p.gamma < gamma) lo = std::max(lo, lam);
        else hi = (hi == 0.0) ? lam : std::min(hi, lam);
        // Newton step in log lambda
        double step = -(p.gamma - gamma) / (p.dgamma * lam);
        step = std::clamp(step, -1.5, 1.5);
        double lam_new = lam * std::exp(step);
        if (lo > 0 && hi > 0 && (lam_new <= lo || lam_new >= hi))
            lam_new = std::sqrt(lo * hi);
        lam = lam_new;
        p = solve_lambda(lam, q);
    }
    return {p.e, p.de / p.dgamma, lam};
}

// node count needed for ~1e-9 kernel resolution at small lambda
int auto_order(double gamma, int base) {
    double lam_est = std::sqrt(gamma) / 2 + gamma / pi;
    int need = (int)std::ceil(14.0 / lam_est);
    return std::clamp(std::max(base, need), base, 4096);
}

double weak_tail(double t, double c2) {
    double u = 0.5 * t;
    return u - (4.0 / (3.0 * pi)) * u * std::sqrt(u) + c2 * u * u;
}

double weak_tail_deriv(double t, double c2) {
    double u = 0.5 * t;
    return 0.5 - (1.0 / pi) * std::sqrt(u) + c2 * u;
}

double strong_tail(double t, double c3) {
    double it = 1.0 / t;
    return pi2_3 * (1.0 - 8.0 * it + 48.0 * it * it + c3 * it * it * it);
}

double strong_tail_deriv(double t, double c3) {
    double it = 1.0 / t;
    return pi2_3 * (8.0 - 96.0 * it - 3.0 * c3 * it * it) * it * it;
}

}  // namespace

LLPoint solve_ll_point(double t, int quad_order) {
    if (!(t >= 0.0) || !std::isfinite(t))
        throw std::invalid_argument("solve_ll_point: t must be finite and >= 0");
    if (quad_order < 16)
        throw std::invalid_argument("solve_ll_point: quad_order must be >= 16");
    if (t == 0.0) return {0.0, 0.0, 0.5};
    LLResult r = solve_gamma(0.5 * t, quad_order);
    return {t, r.e, 0.5 * r.e_prime};
}

LLEnergyTable LLEnergyTable::build(double t_lo, double t_hi, int knots_per_decade,
                                   int quad_order) {
    if (!(t_lo > 0) || !(t_hi > t_lo)) throw std::invalid_argument("LLEnergyTable: bad range");
    if (knots_per_decade < 4) throw std::invalid_argument("LLEnergyTable: too few knots");
    LLEnergyTable tab;
    tab.t_lo = t_lo;
    tab.t_hi = t_hi;
    tab.quad_order = quad_order;

    int n_knots = (int)std::round(std::log10(t_hi / t_lo) * knots_per_decade) + 1;
    double lam_hint = 0.0;
    for (int i = 0; i < n_knots; ++i) {
        double t = t_lo * std::pow(t_hi / t_lo, (double)i / (n_knots - 1));
        double gamma = 0.5 * t;
        LLResult r = solve_gamma(gamma, auto_order(gamma, quad_order), lam_hint);
        lam_hint = r.lam;
        tab.knots.push_back(t);
        tab.e.push_back(r.e);
        tab.e_prime.push_back(0.5 * r.e_prime);
    }

    // pin the next tail coefficient at each switch point so eval() is C0 there
    {
        double u = 0.5 * t_lo;
        tab.weak_c2 = (tab.e.front() - u + (4.0 / (3.0 * pi)) * u * std::sqrt(u)) / (u * u);
        double it = 1.0 / t_hi;
        tab.strong_c3 = (tab.e.back() / pi2_3 - 1.0 + 8.0 * it - 48.0 * it * it) / cube(it);
    }
    tab.validate();
    return tab;
}

LLPoint LLEnergyTable::eval(double t) const {
    if (!(t >= 0.0)) throw std::invalid_argument("LLEnergyTable::eval: t must be >= 0");
    if (t <= t_lo) {
        if (t == 0.0) return {0.0, 0.0, 0.5};
        return {t, weak_tail(t, weak_c2), weak_tail_deriv(t, weak_c2)};
    }
    if (t >= t_hi) {
        if (std::isinf(t)) return {t, pi2_3, 0.0};
        return {t, strong_tail(t, strong_c3), strong_tail_deriv(t, strong_c3)};
    }
    // cubic Hermite in x = ln t, slopes m = t e'(t), Fritsch-Carlson clamped
    double x = std::log(t);
    auto it = std::upper_bound(knots.begin(), knots.end(), t);
    int i = std::clamp((int)(it - knots.begin()) - 1, 0, (int)knots.size() - 2);
    double x0 = std::log(knots[i]), x1 = std::log(knots[i + 1]);
    double hx = x1 - x0;
    double sec = (e[i + 1] - e[i]) / hx;
    double m0 = std::clamp(knots[i] * e_prime[i], 0.0, 3.0 * sec);
    double m1 = std::clamp(knots[i + 1] * e_prime[i + 1], 0.0, 3.0 * sec);
    double s = (x - x0) / hx;
    double h00 = (1 + 2 * s) * sqr(1 - s), h10 = s * sqr(1 - s);
    double h01 = s * s * (3 - 2 * s), h11 = s * s * (s - 1);
    double val = h00 * e[i] + hx * h10 * m0 + h01 * e[i + 1] + hx * h11 * m1;
    double d00 = 6 * s * (s - 1), d10 = (1 - s) * (1 - 3 * s);
    double d01 = -d00, d11 = s * (3 * s - 2);
    double dval_dx = (d00 * e[i] + d01 * e[i + 1]) / hx + d10 * m0 + d11 * m1;
    return {t, val, dval_dx / t};
}

void LLEnergyTable::validate() const {
    const std::size_t n = knots.size();
    if (n < 4 || e.size() != n || e_prime.size() != n)
        throw invariant_error("LLEnergyTable: inconsistent sizes");
    if (!(t_lo > 0) || !(t_hi > t_lo)) throw invariant_error("LLEnergyTable: bad switch points");
    for (std::size_t i = 0; i < n; ++i) {
        if (!(knots[i] > 0)) throw invariant_error("LLEnergyTable: knots must be positive");
        if (i > 0 && !(knots[i] > knots[i - 1]))
            throw invariant_error("LLEnergyTable: knots must be sorted");
        if (!(e[i] >= 0) || !(e[i] < pi2_3))
            throw invariant_error("LLEnergyTable: e out of [0, pi^2/3)");
        if (!(e_prime[i] >= 0)) throw invariant_error("LLEnergyTable: e' negative");
        if (i > 0 && !(e[i] > e[i - 1]))
            throw invariant_error("LLEnergyTable: e not strictly increasing");
    }
    const double tol = 1e-9;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        // concavity of e(t) on the knots
        double d1 = (e[i] - e[i - 1]) / (knots[i] - knots[i - 1]);
        double d2 = (e[i + 1] - e[i]) / (knots[i + 1] - knots[i]);
        if (d2 - d1 > tol) throw invariant_error("LLEnergyTable: e not concave");
        // convexity of u^3 e(1/u) on the reciprocal knots
        auto cv = [&](std::size_t k) { return cube(1.0 / knots[k]) * e[k]; };
        double u0 = 1.0 / knots[i + 1], u1 = 1.0 / knots[i], u2 = 1.0 / knots[i - 1];
        double c1 = (cv(i) - cv(i + 1)) / (u1 - u0);
        double c2 = (cv(i - 1) - cv(i)) / (u2 - u1);
        if (c2 - c1 < -tol) throw invariant_error("LLEnergyTable: t^3 e(1/t) not convex");
    }
    for (std::size_t i = 0; i < n; ++i) {
        double t = knots[i];
        if (t * eval(1.0 / t).e > 0.5 + 1e-9)
            throw invariant_error("LLEnergyTable: t e(1/t) exceeds 1/2");
    }
}

nlohmann::json LLEnergyTable::to_json() const {
    nlohmann::json j;
    j["version"] = 1;
    j["knots"] = knots;
    j["e"] = e;
    j["e_prime"] = e_prime;
    j["t_lo"] = t_lo;
    j["t_hi"] = t_hi;
    j["quad_order"] = quad_order;
    j["weak_c2"] = weak_c2;
    j["strong_c3"] = strong_c3;
    return j;
}

LLEnergyTable LLEnergyTable::from_json(const nlohmann::json& j) {
    if (!j.contains("version") || j["version"].get<int>() != 1)
        throw invariant_error("LLEnergyTable: unsupported file version");
    LLEnergyTable tab;
    tab.knots = j.at("knots").get<std::vector<double>>();
    tab.e = j.at("e").get<std::vector<double>>();
    tab.e_prime = j.at("e_prime").get<std::vector<double>>();
    tab.t_lo = j.at("t_lo").get<double>();
    tab.t_hi = j.at("t_hi").get<double>();
    tab.quad_order = j.at("quad_order").get<int>();
    tab.weak_c2 = j.at("weak_c2").get<double>();
    tab.strong_c3 = j.at("strong_c3").get<double>();
    tab.validate();
    return tab;
}

double energy_density(double rho, double g, const LLEnergyTable& table) {
    if (!(rho >= 0) || !(g >= 0)) throw std::invalid_argument("energy_density: rho, g >= 0");
    if (rho == 0.0) return 0.0;
    if (g == 0.0) return 0.0;
    return cube(rho) * table.eval(g / rho).e;
}

double energy_density_deriv(double rho, double g, const LLEnergyTable& table) {
    if (!(rho >= 0) || !(g >= 0)) throw std::invalid_argument("energy_density_deriv: rho, g >= 0");
    if (rho == 0.0 || g == 0.0) return 0.0;
    LLPoint p = table.eval(g / rho);
    return 3.0 * sqr(rho) * p.e - g * rho * p.e_prime;
}

}  // namespace q1d::ll
