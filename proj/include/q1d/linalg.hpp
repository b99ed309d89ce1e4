#ifndef Q1D_LINALG_HPP
#define Q1D_LINALG_HPP

#include <functional>
#include <vector>

namespace q1d::linalg {

/// Solve a tridiagonal system in place. diag/lower/upper are the bands,
/// lower[i] couples row i+1 to i, upper[i] couples row i to i+1.
std::vector<double> solve_tridiag(std::vector<double> diag,
                                  const std::vector<double>& lower,
                                  const std::vector<double>& upper,
                                  std::vector<double> rhs);

/// k smallest eigenvalues of a symmetric tridiagonal matrix (Sturm bisection).
std::vector<double> tridiag_smallest_eigenvalues(const std::vector<double>& diag,
                                                 const std::vector<double>& off,
                                                 int k, double tol = 1e-13);

/// Eigenvector for a known eigenvalue of a symmetric tridiagonal matrix
/// (inverse iteration). Returned vector has unit Euclidean norm.
std::vector<double> tridiag_eigenvector(const std::vector<double>& diag,
                                        const std::vector<double>& off,
                                        double eigenvalue);

/// Lowest eigenvalue of a large symmetric operator given as a mat-vec,
/// by Lanczos without reorthogonalization.
double lanczos_lowest(const std::function<void(const std::vector<double>&, std::vector<double>&)>& apply,
                      std::size_t dim, int max_iter = 600, double tol = 1e-11,
                      unsigned seed = 7);

}  // namespace q1d::linalg

#endif
