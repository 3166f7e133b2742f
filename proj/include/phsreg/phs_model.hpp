#pragma once

#include <Eigen/Dense>
#include <string>
#include <utility>
#include <vector>

namespace phsreg {

/// Matrix-valued coefficient on [a,b]: either constant or piecewise
/// constant on a breakpoint grid (values[i] applies on [grid[i], grid[i+1])).
class CoefficientField {
 public:
  CoefficientField() = default;
  static CoefficientField constant(Eigen::MatrixXd value);
  static CoefficientField piecewise(std::vector<double> grid, std::vector<Eigen::MatrixXd> values);

  bool empty() const { return values_.empty(); }
  bool is_constant() const { return grid_.empty() && !values_.empty(); }
  Eigen::Index rows() const { return values_.empty() ? 0 : values_.front().rows(); }
  Eigen::Index cols() const { return values_.empty() ? 0 : values_.front().cols(); }
  const std::vector<Eigen::MatrixXd>& samples() const { return values_; }
  const std::vector<double>& grid() const { return grid_; }

  /// Value at z (constant fields ignore z).
  const Eigen::MatrixXd& operator()(double z) const;

 private:
  std::vector<double> grid_;
  std::vector<Eigen::MatrixXd> values_;
};

/// Continuous model data: first/second order PHS on [a,b] with boundary
/// inputs selected by W1, homogeneous/disturbance boundary rows W2 and
/// output rows Wtilde.
struct PhsModel {
  std::string name;
  int n = 0;      // state dimension per spatial point
  int order = 1;  // N, 1 or 2
  Eigen::MatrixXd P2, P1, P0, G0;
  CoefficientField H;
  CoefficientField Bd;  // optional distributed disturbance profile (n x nd1)
  Eigen::MatrixXd W1, W2, Wtilde;
  double a = 0.0;
  double b = 1.0;

  int p() const { return static_cast<int>(W1.rows()); }
  int nd1() const { return static_cast<int>(Bd.cols()); }
  int nd3() const { return static_cast<int>(W2.rows()); }
  int trace_dim() const { return 2 * n * order; }
};

/// Maps boundary traces of Hx to the port variables (f, e) of the model.
struct BoundaryPortMap {
  Eigen::MatrixXd Q;
  Eigen::MatrixXd Rext;   // (1/sqrt(2)) [[Q, -Q], [I, I]]
  Eigen::MatrixXd Sigma;  // [[0, I], [I, 0]]
  int trace_dim = 0;
};

struct ConstraintCheck {
  std::string name;
  double residual = 0.0;
  bool passed = false;
};

struct AssumptionReport {
  std::vector<ConstraintCheck> checks;
  int rank_W = -1;
  double wsw_norm = 0.0;
  double wsw_min_eig = 0.0;
  double kernel_form_min_eig = 0.0;
  bool passed = false;
  double tol = 0.0;

  const ConstraintCheck* find(const std::string& name) const;
};

/// Checks the symmetry/definiteness/invertibility constraints on the
/// model matrices. Dimension mismatches throw DimensionError; constraint
/// violations are reported, not thrown.
AssumptionReport validate_structure(const PhsModel& model, double tol = 1e-10);

/// Builds Q (per order), Rext and Sigma.
BoundaryPortMap build_port_map(const PhsModel& model);

/// Applies Rext to the stacked boundary trace of Hx (values at b,
/// [derivatives at b if order 2], values at a, [derivatives at a]) and
/// splits the result into (f, e).
std::pair<Eigen::VectorXd, Eigen::VectorXd> boundary_port_values(const BoundaryPortMap& map,
                                                                 const Eigen::VectorXd& trace);

/// Rank and passivity conditions on (W1, W2, Wtilde): full-rank W with
/// W Sigma W^T >= 0, and the kernel-restricted form
/// W1^T Wtilde + Wtilde^T W1 - Sigma >= 0 on ker(W2).
AssumptionReport check_assumption_W(const PhsModel& model, double tol = 1e-10);

}  // namespace phsreg
