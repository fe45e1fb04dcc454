#pragma once

#include <Eigen/Dense>
#include <functional>

#include "qpb/errors.hpp"

namespace qpb {

// Discretization of the half-line integral representations. The default
// transform substitutes lambda = e^s and then maps s through a sinh, giving
// double-exponential decay of the transformed integrand; the rational map
// lambda = v/(1-v) is kept as a slowly-converging alternative.
struct QuadratureSpec {
  enum class Transform { TanhSinh, RationalMap };

  int nodes = 400;
  Transform transform = Transform::TanhSinh;
  double abs_tol = 1e-8;

  void validate() const {
    if (nodes < 16) throw ConfigError("QuadratureSpec: nodes must be >= 16");
    if (!(abs_tol > 0.0)) {
      throw ConfigError("QuadratureSpec: abs_tol must be positive");
    }
  }
};

struct ScalarQuadratureResult {
  double value = 0.0;
  double est_error = 0.0;
  int nodes_used = 0;
  bool converged = false;
};

// Integral over (0, infinity) of f(lambda) d lambda. The integrand is
// supplied as fhat(t) = e^t * f(e^t) with t = log lambda, which the caller
// must evaluate stably for large |t|. decay_zero and decay_inf are the
// exponential decay rates of fhat as t -> -inf / +inf; they size the
// truncation window. Nodes double until the successive-level difference
// drops below abs_tol or a 4x cap is reached.
ScalarQuadratureResult integrate_half_line(
    const std::function<double(double)>& fhat, double decay_zero,
    double decay_inf, const QuadratureSpec& spec);

struct TableQuadratureResult {
  Eigen::MatrixXd table;
  double est_error = 0.0;
  int nodes_used = 0;
  bool converged = false;
};

// T_ij = Integral over (0, infinity) of lambda^p / ((a_i + lambda)(a_j +
// lambda)) d lambda for a positive eigenvalue vector a and -1 < p < 1. This
// is the shared kernel of the power, log_q and exp_q differential
// representations once the direction is rotated into the eigenbasis.
TableQuadratureResult resolvent_pair_table(const Eigen::VectorXd& eigs,
                                           double p,
                                           const QuadratureSpec& spec);

}  // namespace qpb
