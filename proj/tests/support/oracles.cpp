#include "support/oracles.hpp"

#include <cmath>

#include "qpb/deformed.hpp"

namespace qpb::testing {

HermitianMatrix finite_difference_frechet(const HermitianMatrix& x,
                                          const HermitianMatrix& h,
                                          const ScalarFunction& f,
                                          double eps) {
  HermitianMatrix plus = apply_spectral(
      HermitianMatrix(x.raw() + eps * h.raw()), f);
  HermitianMatrix minus = apply_spectral(
      HermitianMatrix(x.raw() - eps * h.raw()), f);
  return HermitianMatrix((plus.raw() - minus.raw()) / (2.0 * eps));
}

double rel_frob(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return (a - b).norm() / (1.0 + std::max(a.norm(), b.norm()));
}

double rel_frob(const HermitianMatrix& a, const HermitianMatrix& b) {
  return rel_frob(a.raw(), b.raw());
}

double diagonal_case_iii_slack(const std::vector<double>& a_diag,
                               const std::vector<double>& b_diag, double q,
                               double r) {
  auto expq = [q](double t) {
    return std::pow(t * (q - 1.0) + 1.0, 1.0 / (q - 1.0));
  };
  auto logr = [r](double t) {
    return (std::pow(t, r - 1.0) - 1.0) / (r - 1.0);
  };
  double tr_a = 0.0, tr_ab = 0.0, tr_pow_b = 0.0;
  for (std::size_t i = 0; i < a_diag.size(); ++i) {
    tr_a += expq(a_diag[i]);
    tr_ab += expq(a_diag[i] + b_diag[i]);
    tr_pow_b += std::pow(expq(a_diag[i]), 2.0 - q) * b_diag[i];
  }
  const double lhs = logr(tr_ab) - logr(tr_a);
  const double rhs = std::pow(tr_a, r - 2.0) * tr_pow_b;
  return lhs - rhs;
}

double hermiticity_defect(const Eigen::MatrixXcd& m) {
  return (m - m.adjoint().eval()).norm();
}

}  // namespace qpb::testing
