#include "phsreg/phs_model.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "phsreg/errors.hpp"
#include "phsreg/linalg.hpp"

namespace phsreg {

CoefficientField CoefficientField::constant(Eigen::MatrixXd value) {
  CoefficientField f;
  f.values_.push_back(std::move(value));
  return f;
}

CoefficientField CoefficientField::piecewise(std::vector<double> grid,
                                             std::vector<Eigen::MatrixXd> values) {
  if (values.empty()) throw DimensionError("values", "piecewise field needs at least one sample");
  if (grid.size() != values.size() + 1)
    throw DimensionError("grid", "breakpoint count must be sample count + 1");
  if (!std::is_sorted(grid.begin(), grid.end()))
    throw DimensionError("grid", "breakpoints must be sorted");
  for (size_t i = 1; i < values.size(); ++i)
    if (values[i].rows() != values[0].rows() || values[i].cols() != values[0].cols())
      throw DimensionError("values", "samples must share dimensions");
  CoefficientField f;
  f.grid_ = std::move(grid);
  f.values_ = std::move(values);
  return f;
}

const Eigen::MatrixXd& CoefficientField::operator()(double z) const {
  if (values_.empty()) throw Error("coefficient field is empty");
  if (is_constant()) return values_.front();
  auto it = std::upper_bound(grid_.begin(), grid_.end(), z);
  if (it == grid_.begin()) return values_.front();
  size_t idx = static_cast<size_t>(it - grid_.begin()) - 1;
  if (idx >= values_.size()) idx = values_.size() - 1;
  return values_[idx];
}

const ConstraintCheck* AssumptionReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

void require_square(const Eigen::MatrixXd& M, int n, const char* field) {
  if (M.rows() != n || M.cols() != n)
    throw DimensionError(field, "expected " + std::to_string(n) + "x" + std::to_string(n) +
                                    ", got " + std::to_string(M.rows()) + "x" +
                                    std::to_string(M.cols()));
}

double relative_scale(const Eigen::MatrixXd& M) { return std::max(1.0, M.norm()); }

}  // namespace

AssumptionReport validate_structure(const PhsModel& model, double tol) {
  if (model.n < 1) throw DimensionError("n", "state dimension must be positive");
  if (model.order != 1 && model.order != 2) throw DimensionError("order", "order must be 1 or 2");
  if (!(model.a < model.b)) throw DimensionError("interval", "requires a < b");
  const int n = model.n;
  require_square(model.P2, n, "P2");
  require_square(model.P1, n, "P1");
  require_square(model.P0, n, "P0");
  require_square(model.G0, n, "G0");
  if (model.H.empty()) throw DimensionError("H", "energy density is required");
  if (model.H.rows() != n || model.H.cols() != n)
    throw DimensionError("H", "samples must be " + std::to_string(n) + "x" + std::to_string(n));
  if (!model.Bd.empty() && model.Bd.rows() != n)
    throw DimensionError("Bd", "profile must have n rows");

  const int td = model.trace_dim();
  const int nN = n * model.order;
  if (model.W1.cols() != td) throw DimensionError("W1", "expected 2nN columns");
  if (model.W1.rows() < 1) throw DimensionError("W1", "at least one control row required");
  if (model.W1.rows() > nN) throw DimensionError("W1", "more control rows than nN");
  if (model.W2.rows() > 0 && model.W2.cols() != td)
    throw DimensionError("W2", "expected 2nN columns");
  if (model.W2.rows() != nN - model.W1.rows())
    throw DimensionError("W2", "row count must be nN - m");
  if (model.Wtilde.cols() != td) throw DimensionError("Wtilde", "expected 2nN columns");
  if (model.Wtilde.rows() != model.W1.rows())
    throw DimensionError("Wtilde", "output row count must match W1 (p inputs = p outputs)");

  AssumptionReport report;
  report.tol = tol;
  auto add = [&](const std::string& name, double residual, bool ok) {
    report.checks.push_back({name, residual, ok});
  };

  double r = (model.P2 + model.P2.transpose()).norm() / relative_scale(model.P2);
  add("P2 skew-symmetric", r, r <= tol);
  r = (model.P1 - model.P1.transpose()).norm() / relative_scale(model.P1);
  add("P1 symmetric", r, r <= tol);
  r = (model.P0 + model.P0.transpose()).norm() / relative_scale(model.P0);
  add("P0 skew-symmetric", r, r <= tol);
  r = (model.G0 - model.G0.transpose()).norm() / relative_scale(model.G0);
  add("G0 symmetric", r, r <= tol);
  double g0_min = min_symmetric_eigenvalue(model.G0);
  add("G0 positive semidefinite", std::max(0.0, -g0_min) / relative_scale(model.G0),
      g0_min >= -tol * relative_scale(model.G0));

  if (model.order == 1) {
    r = model.P2.norm() / relative_scale(model.P1);
    add("P2 zero (order 1)", r, r <= tol);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(model.P1);
    double ratio = svd.singularValues()(0) > 0
                       ? svd.singularValues().minCoeff() / svd.singularValues()(0)
                       : 0.0;
    add("P1 invertible (order 1)", ratio, ratio > tol);
  } else {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(model.P2);
    double ratio = svd.singularValues()(0) > 0
                       ? svd.singularValues().minCoeff() / svd.singularValues()(0)
                       : 0.0;
    add("P2 invertible (order 2)", ratio, ratio > tol);
  }

  double h_sym = 0.0;
  double kappa = std::numeric_limits<double>::infinity();
  double h_scale = 1.0;
  for (const auto& Hs : model.H.samples()) {
    h_sym = std::max(h_sym, (Hs - Hs.transpose()).norm() / relative_scale(Hs));
    kappa = std::min(kappa, min_symmetric_eigenvalue(Hs));
    h_scale = std::max(h_scale, Hs.norm());
  }
  add("H symmetric", h_sym, h_sym <= tol);
  // kappa is an absolute lower bound;测 only against numerical zero of H's scale.
  add("H uniformly positive (kappa > 0)", kappa, kappa > 1e-13 * h_scale);

  report.passed = std::all_of(report.checks.begin(), report.checks.end(),
                              [](const ConstraintCheck& c) { return c.passed; });
  return report;
}

BoundaryPortMap build_port_map(const PhsModel& model) {
  const int n = model.n;
  const double tol = 1e-10;
  Eigen::MatrixXd Q;
  if (model.order == 1) {
    if (model.P2.norm() > tol * relative_scale(model.P1))
      throw Error("build_port_map: order 1 requires P2 = 0");
    Q = model.P1;
  } else if (model.order == 2) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(model.P2);
    if (svd.singularValues().minCoeff() <= tol * svd.singularValues()(0))
      throw Error("build_port_map: order 2 requires invertible P2");
    Q.setZero(2 * n, 2 * n);
    Q.topLeftCorner(n, n) = model.P1;
    Q.topRightCorner(n, n) = model.P2;
    Q.bottomLeftCorner(n, n) = -model.P2;
  } else {
    throw DimensionError("order", "order must be 1 or 2");
  }

  const int nN = n * model.order;
  BoundaryPortMap map;
  map.trace_dim = 2 * nN;
  map.Q = Q;
  map.Rext.setZero(2 * nN, 2 * nN);
  const double s = 1.0 / std::sqrt(2.0);
  map.Rext.topLeftCorner(nN, nN) = s * Q;
  map.Rext.topRightCorner(nN, nN) = -s * Q;
  map.Rext.bottomLeftCorner(nN, nN) = s * Eigen::MatrixXd::Identity(nN, nN);
  map.Rext.bottomRightCorner(nN, nN) = s * Eigen::MatrixXd::Identity(nN, nN);
  map.Sigma.setZero(2 * nN, 2 * nN);
  map.Sigma.topRightCorner(nN, nN) = Eigen::MatrixXd::Identity(nN, nN);
  map.Sigma.bottomLeftCorner(nN, nN) = Eigen::MatrixXd::Identity(nN, nN);
  return map;
}

std::pair<Eigen::VectorXd, Eigen::VectorXd> boundary_port_values(const BoundaryPortMap& map,
                                                                 const Eigen::VectorXd& trace) {
  if (trace.size() != map.trace_dim)
    throw DimensionError("trace", "expected length " + std::to_string(map.trace_dim) + ", got " +
                                      std::to_string(trace.size()));
  Eigen::VectorXd v = map.Rext * trace;
  const int half = map.trace_dim / 2;
  return {v.head(half), v.tail(half)};
}

AssumptionReport check_assumption_W(const PhsModel& model, double tol) {
  const int nN = model.n * model.order;
  const int td = 2 * nN;
  if (model.W1.cols() != td || model.Wtilde.cols() != td ||
      (model.W2.rows() > 0 && model.W2.cols() != td))
    throw DimensionError("W1/W2/Wtilde", "expected 2nN columns");
  if (model.W1.rows() + model.W2.rows() != nN)
    throw DimensionError("W1/W2", "stacked W must have nN rows");

  Eigen::MatrixXd W(nN, td);
  W.topRows(model.W1.rows()) = model.W1;
  if (model.W2.rows() > 0) W.bottomRows(model.W2.rows()) = model.W2;

  Eigen::MatrixXd Sigma = Eigen::MatrixXd::Zero(td, td);
  Sigma.topRightCorner(nN, nN) = Eigen::MatrixXd::Identity(nN, nN);
  Sigma.bottomLeftCorner(nN, nN) = Eigen::MatrixXd::Identity(nN, nN);

  AssumptionReport report;
  report.tol = tol;

  report.rank_W = numerical_rank(W, tol);
  const bool full_rank = report.rank_W == nN;
  report.checks.push_back({"W full rank", static_cast<double>(nN - report.rank_W), full_rank});

  Eigen::MatrixXd wsw = W * Sigma * W.transpose();
  report.wsw_norm = wsw.norm();
  report.wsw_min_eig = min_symmetric_eigenvalue(wsw);
  const bool wsw_ok = report.wsw_min_eig >= -tol;
  report.checks.push_back({"W Sigma W^T positive semidefinite", std::max(0.0, -report.wsw_min_eig),
                           wsw_ok});

  Eigen::MatrixXd Z = kernel_basis(model.W2, td, tol);
  Eigen::MatrixXd form =
      model.W1.transpose() * model.Wtilde + model.Wtilde.transpose() * model.W1 - Sigma;
  Eigen::MatrixXd restricted = Z.transpose() * form * Z;
  report.kernel_form_min_eig = min_symmetric_eigenvalue(restricted);
  const bool kernel_ok = report.kernel_form_min_eig >= -tol;
  report.checks.push_back({"passivity form on ker(W2) positive semidefinite",
                           std::max(0.0, -report.kernel_form_min_eig), kernel_ok});

  report.passed = full_rank && wsw_ok && kernel_ok;
  return report;
}

}  // namespace phsreg
