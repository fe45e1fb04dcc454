#pragma once

// Test-only oracles, kept independent of the code paths they check.

#include <vector>

#include "qpb/frechet.hpp"
#include "qpb/hermitian_matrix.hpp"
#include "qpb/spectral.hpp"

namespace qpb::testing {

// Central finite difference (f(x + eps h) - f(x - eps h)) / (2 eps).
HermitianMatrix finite_difference_frechet(const HermitianMatrix& x,
                                          const HermitianMatrix& h,
                                          const ScalarFunction& f,
                                          double eps = 1e-5);

// Frobenius distance scaled by the larger norm with a unit floor.
double rel_frob(const HermitianMatrix& a, const HermitianMatrix& b);
double rel_frob(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

// Case-iii slack for diagonal A, B computed with plain scalar loops.
double diagonal_case_iii_slack(const std::vector<double>& a_diag,
                               const std::vector<double>& b_diag, double q,
                               double r);

// Asymmetry of a matrix: ||M - M*||_F.
double hermiticity_defect(const Eigen::MatrixXcd& m);

}  // namespace qpb::testing
