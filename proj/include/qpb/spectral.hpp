#pragma once

#include <Eigen/Dense>
#include <functional>
#include <string>

#include "qpb/deformed.hpp"
#include "qpb/hermitian_matrix.hpp"

namespace qpb {

// Eigenvalues (ascending) plus an orthonormal eigenbasis.
struct SpectralDecomposition {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXcd eigenvectors;

  static SpectralDecomposition compute(const HermitianMatrix& a);

  Eigen::MatrixXcd reconstruct() const;
  double min_eigenvalue() const { return eigenvalues.minCoeff(); }
  double max_eigenvalue() const { return eigenvalues.maxCoeff(); }
};

// A real scalar function bundled with its derivative and domain, the unit of
// currency for spectral calculus and divided differences.
struct ScalarFunction {
  std::function<double(double)> value;
  std::function<double(double)> deriv;
  std::function<bool(double)> in_domain;
  std::string name;

  static ScalarFunction power(double p);
  static ScalarFunction log_q(double q);
  static ScalarFunction exp_q(double q);
  static ScalarFunction log_classical();
  static ScalarFunction exp_classical();
};

// U diag(f(lambda_i)) U*; commutes with unitary conjugation.
HermitianMatrix apply_spectral(const HermitianMatrix& a,
                               const ScalarFunction& f);
HermitianMatrix apply_spectral(const SpectralDecomposition& sd,
                               const ScalarFunction& f);

HermitianMatrix exp_q_matrix(const HermitianMatrix& a, double q);
HermitianMatrix log_q_matrix(const HermitianMatrix& a, double q);

// Matrix power of a positive definite matrix. Integer exponents >= 0 are
// admissible for any Hermitian input.
HermitianMatrix matrix_power(const HermitianMatrix& a, double p);
HermitianMatrix matrix_power(const SpectralDecomposition& sd, double p);

struct DomainCheckResult {
  bool ok = false;
  double min_eigenvalue = 0.0;
  double max_eigenvalue = 0.0;
};

// True iff every eigenvalue clears the constraint's bound with its margin;
// reports the spectrum edges either way.
DomainCheckResult check_domain(const HermitianMatrix& a,
                               const DomainConstraint& c);

// Throw a DomainError naming the worst eigenvalue unless check_domain passes.
void require_domain(const HermitianMatrix& a, const DomainConstraint& c,
                    const std::string& operand_name);

bool is_positive_definite(const HermitianMatrix& a, double floor = 0.0);

}  // namespace qpb
