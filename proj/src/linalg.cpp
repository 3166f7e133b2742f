#include "phsreg/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "phsreg/errors.hpp"

namespace phsreg {

Eigen::MatrixXd solve_sylvester(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B,
                                const Eigen::MatrixXd& C) {
  const Eigen::Index m = A.rows();
  const Eigen::Index n = B.rows();
  if (A.cols() != m || B.cols() != n || C.rows() != m || C.cols() != n)
    throw DimensionError("sylvester", "inconsistent operand dimensions");

  Eigen::ComplexSchur<Eigen::MatrixXd> schurA(A, true);
  Eigen::ComplexSchur<Eigen::MatrixXd> schurB(B, true);
  if (schurA.info() != Eigen::Success || schurB.info() != Eigen::Success)
    throw Error("sylvester: Schur decomposition failed");

  const Eigen::MatrixXcd& Ta = schurA.matrixT();
  const Eigen::MatrixXcd& Tb = schurB.matrixT();
  const Eigen::MatrixXcd& U = schurA.matrixU();
  const Eigen::MatrixXcd& V = schurB.matrixU();

  Eigen::MatrixXcd F = U.adjoint() * C * V;
  Eigen::MatrixXcd Y(m, n);

  const double scale = Ta.norm() + Tb.norm() + 1.0;
  for (Eigen::Index j = 0; j < n; ++j) {
    Eigen::VectorXcd rhs = F.col(j);
    if (j > 0) rhs.noalias() -= Y.leftCols(j) * Tb.topRows(j).col(j);
    Eigen::MatrixXcd Tshift = Ta;
    Tshift.diagonal().array() += Tb(j, j);
    for (Eigen::Index i = 0; i < m; ++i) {
      if (std::abs(Tshift(i, i)) < 1e-14 * scale)
        throw Error("sylvester: spectra of A and -B not separated, no unique solution");
    }
    Y.col(j) = Tshift.triangularView<Eigen::Upper>().solve(rhs);
  }

  return (U * Y * V.adjoint()).real();
}

Eigen::MatrixXd solve_lyapunov(const Eigen::MatrixXd& A, const Eigen::MatrixXd& Q) {
  Eigen::MatrixXd X = solve_sylvester(A.transpose(), A, -Q);
  return 0.5 * (X + X.transpose());
}

namespace {

template <typename Matrix>
int rank_impl(const Matrix& M, double tol) {
  if (M.rows() == 0 || M.cols() == 0) return 0;
  Eigen::JacobiSVD<Matrix> svd(M);
  const auto& sv = svd.singularValues();
  const double cutoff = tol * sv(0);
  int r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff) ++r;
  return r;
}

}  // namespace

int numerical_rank(const Eigen::MatrixXd& M, double tol) { return rank_impl(M, tol); }
int numerical_rank(const Eigen::MatrixXcd& M, double tol) { return rank_impl(M, tol); }

Eigen::MatrixXd kernel_basis(const Eigen::MatrixXd& M, int cols, double tol) {
  if (M.rows() == 0) return Eigen::MatrixXd::Identity(cols, cols);
  if (M.cols() != cols) throw DimensionError("kernel_basis", "column count mismatch");
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cutoff = sv.size() > 0 ? tol * sv(0) : 0.0;
  int r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff) ++r;
  return svd.matrixV().rightCols(cols - r);
}

double min_symmetric_eigenvalue(const Eigen::MatrixXd& M) {
  if (M.rows() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (M + M.transpose()),
                                                    Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

double max_symmetric_eigenvalue(const Eigen::MatrixXd& M) {
  if (M.rows() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (M + M.transpose()),
                                                    Eigen::EigenvaluesOnly);
  return es.eigenvalues().maxCoeff();
}

double min_hermitian_eigenvalue(const Eigen::MatrixXcd& M) {
  if (M.rows() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (M + M.adjoint()),
                                                     Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

double spectral_abscissa(const Eigen::MatrixXd& A) {
  if (A.rows() != A.cols()) throw DimensionError("A", "spectral_abscissa needs a square matrix");
  if (!A.allFinite()) throw Error("spectral_abscissa: matrix has non-finite entries");
  if (A.rows() == 0) return -std::numeric_limits<double>::infinity();
  Eigen::EigenSolver<Eigen::MatrixXd> es(A, false);
  if (es.info() != Eigen::Success) throw Error("spectral_abscissa: eigenvalue iteration failed");
  return es.eigenvalues().real().maxCoeff();
}

Eigen::MatrixXcd resolvent_solve(const Eigen::MatrixXd& A, std::complex<double> lambda,
                                 const Eigen::MatrixXcd& rhs) {
  const Eigen::Index n = A.rows();
  Eigen::MatrixXcd shifted = -A.cast<std::complex<double>>();
  shifted.diagonal().array() += lambda;
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(shifted);
  const double rc = lu.rcond();
  if (!(rc > 1e-14)) throw ResolventSingularError(lambda, rc);
  if (rhs.rows() != n) throw DimensionError("rhs", "resolvent_solve right-hand side rows");
  return lu.solve(rhs);
}

}  // namespace phsreg
