#include "qpb/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <sstream>

namespace qpb {

SpectralDecomposition SpectralDecomposition::compute(const HermitianMatrix& a) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(a.raw());
  if (es.info() != Eigen::Success) {
    throw AccuracyError("eigendecomposition failed to converge", 1.0);
  }
  return SpectralDecomposition{es.eigenvalues(), es.eigenvectors()};
}

Eigen::MatrixXcd SpectralDecomposition::reconstruct() const {
  return eigenvectors * eigenvalues.asDiagonal() * eigenvectors.adjoint();
}

ScalarFunction ScalarFunction::power(double p) {
  const bool whole = p >= 0.0 && p == std::floor(p);
  ScalarFunction f;
  f.value = [p](double t) { return std::pow(t, p); };
  f.deriv = [p](double t) { return p * std::pow(t, p - 1.0); };
  // t^p with nonnegative integer p is entire; otherwise stick to t > 0.
  f.in_domain = [whole, p](double t) {
    if (whole) return true;
    return t > 0.0;
  };
  std::ostringstream name;
  name << "t^" << p;
  f.name = name.str();
  return f;
}

ScalarFunction ScalarFunction::log_q(double q) {
  ScalarFunction f;
  f.value = [q](double t) { return log_q_scalar(t, q); };
  f.deriv = [q](double t) { return log_q_derivative(t, q); };
  f.in_domain = [](double t) { return t > 0.0; };
  std::ostringstream name;
  name << "log_" << q;
  f.name = name.str();
  return f;
}

ScalarFunction ScalarFunction::exp_q(double q) {
  const DomainConstraint c = DomainConstraint::for_q(q);
  ScalarFunction f;
  f.value = [q](double t) { return exp_q_scalar(t, q); };
  f.deriv = [q](double t) { return exp_q_derivative(t, q); };
  f.in_domain = [c](double t) { return c.admits(t); };
  std::ostringstream name;
  name << "exp_" << q;
  f.name = name.str();
  return f;
}

ScalarFunction ScalarFunction::log_classical() {
  ScalarFunction f;
  f.value = [](double t) { return std::log(t); };
  f.deriv = [](double t) { return 1.0 / t; };
  f.in_domain = [](double t) { return t > 0.0; };
  f.name = "log";
  return f;
}

ScalarFunction ScalarFunction::exp_classical() {
  ScalarFunction f;
  f.value = [](double t) { return std::exp(t); };
  f.deriv = [](double t) { return std::exp(t); };
  f.in_domain = [](double) { return true; };
  f.name = "exp";
  return f;
}

HermitianMatrix apply_spectral(const SpectralDecomposition& sd,
                               const ScalarFunction& f) {
  Eigen::VectorXd mapped(sd.eigenvalues.size());
  for (Eigen::Index i = 0; i < sd.eigenvalues.size(); ++i) {
    const double lam = sd.eigenvalues(i);
    if (f.in_domain && !f.in_domain(lam)) {
      std::ostringstream msg;
      msg << "eigenvalue " << lam << " lies outside the domain of " << f.name;
      throw DomainError(msg.str());
    }
    mapped(i) = f.value(lam);
  }
  Eigen::MatrixXcd out = sd.eigenvectors * mapped.asDiagonal() *
                         sd.eigenvectors.adjoint();
  return HermitianMatrix(std::move(out));
}

HermitianMatrix apply_spectral(const HermitianMatrix& a,
                               const ScalarFunction& f) {
  return apply_spectral(SpectralDecomposition::compute(a), f);
}

HermitianMatrix exp_q_matrix(const HermitianMatrix& a, double q) {
  require_domain(a, DomainConstraint::for_q(q), "exp_q argument");
  return apply_spectral(a, ScalarFunction::exp_q(q));
}

HermitianMatrix log_q_matrix(const HermitianMatrix& a, double q) {
  return apply_spectral(a, ScalarFunction::log_q(q));
}

HermitianMatrix matrix_power(const HermitianMatrix& a, double p) {
  return apply_spectral(a, ScalarFunction::power(p));
}

HermitianMatrix matrix_power(const SpectralDecomposition& sd, double p) {
  return apply_spectral(sd, ScalarFunction::power(p));
}

DomainCheckResult check_domain(const HermitianMatrix& a,
                               const DomainConstraint& c) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(a.raw(),
                                                     Eigen::EigenvaluesOnly);
  DomainCheckResult r;
  r.min_eigenvalue = es.eigenvalues().minCoeff();
  r.max_eigenvalue = es.eigenvalues().maxCoeff();
  switch (c.side) {
    case DomainConstraint::Side::BoundedAbove:
      r.ok = r.max_eigenvalue < c.bound - c.margin;
      break;
    case DomainConstraint::Side::BoundedBelow:
      r.ok = r.min_eigenvalue > c.bound + c.margin;
      break;
    case DomainConstraint::Side::Unconstrained:
      r.ok = true;
      break;
  }
  return r;
}

void require_domain(const HermitianMatrix& a, const DomainConstraint& c,
                    const std::string& operand_name) {
  DomainCheckResult r = check_domain(a, c);
  if (!r.ok) {
    std::ostringstream msg;
    const double worst = c.side == DomainConstraint::Side::BoundedAbove
                             ? r.max_eigenvalue
                             : r.min_eigenvalue;
    msg << operand_name << " violates " << c.describe()
        << "; worst eigenvalue " << worst;
    throw DomainError(msg.str());
  }
}

bool is_positive_definite(const HermitianMatrix& a, double floor) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(a.raw(),
                                                     Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff() > floor;
}

}  // namespace qpb
