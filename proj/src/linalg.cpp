#include "q1d/linalg.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace q1d::linalg {

std::vector<double> solve_tridiag(std::vector<double> diag,
                                  const std::vector<double>& lower,
                                  const std::vector<double>& upper,
                                  std::vector<double> rhs) {
    const std::size_t n = diag.size();
    if (lower.size() + 1 != n || upper.size() + 1 != n || rhs.size() != n)
        throw std::invalid_argument("solve_tridiag: band sizes");
    for (std::size_t i = 1; i < n; ++i) {
        double m = lower[i - 1] / diag[i - 1];
        diag[i] -= m * upper[i - 1];
        rhs[i] -= m * rhs[i - 1];
    }
    rhs[n - 1] /= diag[n - 1];
    for (std::size_t i = n - 1; i-- > 0;)
        rhs[i] = (rhs[i] - upper[i] * rhs[i + 1]) / diag[i];
    return rhs;
}

namespace {

// number of eigenvalues strictly below x (Sturm count via LDL^T signs)
int sturm_count(const std::vector<double>& d, const std::vector<double>& e, double x) {
    int count = 0;
    double q = d[0] - x;
    if (q < 0) ++count;
    for (std::size_t i = 1; i < d.size(); ++i) {
        double denom = (q == 0.0) ? 1e-300 : q;
        q = d[i] - x - e[i - 1] * e[i - 1] / denom;
        if (q < 0) ++count;
    }
    return count;
}

}  // namespace

std::vector<double> tridiag_smallest_eigenvalues(const std::vector<double>& diag,
                                                 const std::vector<double>& off,
                                                 int k, double tol) {
    const std::size_t n = diag.size();
    if (off.size() + 1 != n) throw std::invalid_argument("tridiag eig: band sizes");
    // Gershgorin bounds
    double lo = diag[0], hi = diag[0];
    for (std::size_t i = 0; i < n; ++i) {
        double r = 0.0;
        if (i > 0) r += std::abs(off[i - 1]);
        if (i + 1 < n) r += std::abs(off[i]);
        lo = std::min(lo, diag[i] - r);
        hi = std::max(hi, diag[i] + r);
    }
    std::vector<double> eigs;
    double scale = std::max({std::abs(lo), std::abs(hi), 1.0});
    for (int j = 0; j < k; ++j) {
        double a = lo, b = hi;
        while (b - a > tol * scale) {
            double mid = 0.5 * (a + b);
            if (sturm_count(diag, off, mid) >= j + 1) b = mid;
            else a = mid;
        }
        eigs.push_back(0.5 * (a + b));
    }
    return eigs;
}

std::vector<double> tridiag_eigenvector(const std::vector<double>& diag,
                                        const std::vector<double>& off,
                                        double eigenvalue) {
    const std::size_t n = diag.size();
    double scale = 0.0;
    for (double v : diag) scale = std::max(scale, std::abs(v));
    double shift = eigenvalue - 1e-12 * std::max(scale, 1.0);
    std::vector<double> v(n, 1.0 / std::sqrt((double)n));
    std::vector<double> d(n), l(n - 1), u(n - 1);
    for (int pass = 0; pass < 4; ++pass) {
        for (std::size_t i = 0; i < n; ++i) d[i] = diag[i] - shift;
        for (std::size_t i = 0; i + 1 < n; ++i) l[i] = u[i] = off[i];
        // plain LU without pivoting can hit a tiny pivot; nudge the shift and retry
        bool ok = true;
        {
            std::vector<double> dd = d, rhs = v;
            for (std::size_t i = 1; i < n; ++i) {
                if (std::abs(dd[i - 1]) < 1e-300) { ok = false; break; }
                double m = l[i - 1] / dd[i - 1];
                dd[i] -= m * u[i - 1];
                rhs[i] -= m * rhs[i - 1];
            }
            if (ok) {
                if (std::abs(dd[n - 1]) < 1e-300) ok = false;
                else {
                    rhs[n - 1] /= dd[n - 1];
                    for (std::size_t i = n - 1; i-- > 0;)
                        rhs[i] = (rhs[i] - u[i] * rhs[i + 1]) / dd[i];
                    v = rhs;
                }
            }
        }
        if (!ok) { shift -= 1e-9 * std::max(scale, 1.0); continue; }
        double nrm = 0.0;
        for (double x : v) nrm += x * x;
        nrm = std::sqrt(nrm);
        for (double& x : v) x /= nrm;
    }
    // fix overall sign: make the largest component positive
    std::size_t imax = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (std::abs(v[i]) > std::abs(v[imax])) imax = i;
    if (v[imax] < 0)
        for (double& x : v) x = -x;
    return v;
}

double lanczos_lowest(const std::function<void(const std::vector<double>&, std::vector<double>&)>& apply,
                      std::size_t dim, int max_iter, double tol, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    std::vector<double> v(dim), v_prev(dim, 0.0), w(dim);
    for (double& x : v) x = gauss(rng);
    double nrm = 0.0;
    for (double x : v) nrm += x * x;
    nrm = std::sqrt(nrm);
    for (double& x : v) x /= nrm;

    std::vector<double> alpha, beta;
    double last = 0.0;
    for (int j = 0; j < max_iter; ++j) {
        apply(v, w);
        double a = 0.0;
        for (std::size_t i = 0; i < dim; ++i) a += v[i] * w[i];
        alpha.push_back(a);
        for (std::size_t i = 0; i < dim; ++i)
            w[i] -= a * v[i] + (j > 0 ? beta[j - 1] * v_prev[i] : 0.0);
        double b = 0.0;
        for (double x : w) b += x * x;
        b = std::sqrt(b);
        if (j >= 8 || b < 1e-14) {
            double ritz = tridiag_smallest_eigenvalues(alpha, beta, 1)[0];
            if (b < 1e-14) return ritz;
            if (j >= 12 && std::abs(ritz - last) < tol * std::max(1.0, std::abs(ritz)) && j % 4 == 0)
                return ritz;
            last = ritz;
        }
        beta.push_back(b);
        v_prev.swap(v);
        for (std::size_t i = 0; i < dim; ++i) v[i] = w[i] / b;
    }
    return tridiag_smallest_eigenvalues(alpha, {beta.begin(), beta.end() - 1}, 1)[0];
}

}  // namespace q1d::linalg
