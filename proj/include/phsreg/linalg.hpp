#pragma once

#include <Eigen/Dense>

namespace phsreg {

/// Solves the Sylvester equation A X + X B = C (Bartels-Stewart on the
/// complex Schur forms of A and B). Throws if the spectra of A and -B
/// are not separated.
Eigen::MatrixXd solve_sylvester(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B,
                                const Eigen::MatrixXd& C);

/// Solves the continuous Lyapunov equation A^T X + X A = -Q and returns
/// the symmetrized solution.
Eigen::MatrixXd solve_lyapunov(const Eigen::MatrixXd& A, const Eigen::MatrixXd& Q);

/// Rank from singular values with threshold tol * sigma_max.
int numerical_rank(const Eigen::MatrixXd& M, double tol = 1e-10);
int numerical_rank(const Eigen::MatrixXcd& M, double tol = 1e-10);

/// Orthonormal basis of ker(M) as columns (right singular vectors of the
/// numerically zero singular values). A matrix with zero rows has the
/// full space as kernel.
Eigen::MatrixXd kernel_basis(const Eigen::MatrixXd& M, int cols, double tol = 1e-10);

/// Smallest eigenvalue of the symmetric part (M + M^T)/2.
double min_symmetric_eigenvalue(const Eigen::MatrixXd& M);
/// Largest eigenvalue of the symmetric part.
double max_symmetric_eigenvalue(const Eigen::MatrixXd& M);
/// Smallest eigenvalue of the Hermitian part (M + M^*)/2.
double min_hermitian_eigenvalue(const Eigen::MatrixXcd& M);

/// max over eigenvalues of the real part.
double spectral_abscissa(const Eigen::MatrixXd& A);

/// Solves (lambda I - A) X = RHS with a conditioning guard; throws
/// ResolventSingularError when the factorization is unreliable.
Eigen::MatrixXcd resolvent_solve(const Eigen::MatrixXd& A, std::complex<double> lambda,
                                 const Eigen::MatrixXcd& rhs);

}  // namespace phsreg
