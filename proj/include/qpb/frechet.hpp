#pragma once

#include "qpb/hermitian_matrix.hpp"
#include "qpb/quadrature.hpp"
#include "qpb/spectral.hpp"

namespace qpb {

enum class FrechetMethod { DividedDifference, Quadrature, ClosedForm };

std::string frechet_method_name(FrechetMethod m);

struct FrechetResult {
  HermitianMatrix value;
  FrechetMethod method = FrechetMethod::DividedDifference;
  double est_error = 0.0;
};

// First-divided-difference (Daleckii-Krein) formula in the eigenbasis of x:
// (Df(x)h)_ij = f[l_i, l_j] htilde_ij, with f[l, l] = f'(l). Exact up to
// roundoff; serves as the independent reference for every integral
// representation below. Near-degenerate eigenvalue pairs use f' at the
// midpoint to avoid cancellation.
FrechetResult dfrechet_divided_difference(const HermitianMatrix& x,
                                          const HermitianMatrix& h,
                                          const ScalarFunction& f);

// D(x^p)h for positive definite x by quadrature of the half-line resolvent
// representations: the sin(p pi)/pi kernel for p in (-1,0) u (0,1), and the
// manifestly self-adjoint product recursion for p in (1,2).
FrechetResult dfrechet_power_integral(const HermitianMatrix& x,
                                      const HermitianMatrix& h, double p,
                                      const QuadratureSpec& spec);

// D log_q(x)h for positive definite x and q > 1. For 1 < q < 2 this is the
// direct integral representation; q = 2 is exact (log_2 is affine); for
// 2 < q < 3 it reduces to (q-1)^{-1} D(x^{q-1})h; q >= 3 falls back to
// divided differences.
enum class LogQRoute { Auto, Integral, PowerReduction };
FrechetResult dfrechet_log_q(const HermitianMatrix& x,
                             const HermitianMatrix& h, double q,
                             const QuadratureSpec& spec,
                             LogQRoute route = LogQRoute::Auto);

// D exp_q(x)h via the shift to w = (q-1)x + 1 > 0 and
// D exp_q(x)h = (q-1) D(w^{1/(q-1)})h, dispatched on q:
//   q < 0            exponent in (-1,0), resolvent quadrature
//   q = 0            exact: (1-x)^{-1} h (1-x)^{-1}
//   q = 3/2          exact: (xh+hx)/4 + h
//   3/2 < q < 2      exponent in (1,2), product recursion + quadrature
//   q = 2            exact: h
//   q > 2            exponent in (0,1), resolvent quadrature
// q in (0,1) u (1,3/2) has no integral representation and is served by the
// divided-difference method, visible in the method tag; q = 1 is the
// classical exponential, also via divided differences.
FrechetResult dfrechet_exp_q(const HermitianMatrix& x,
                             const HermitianMatrix& h, double q,
                             const QuadratureSpec& spec);

}  // namespace qpb
