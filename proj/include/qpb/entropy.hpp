#pragma once

#include <vector>

#include "qpb/hermitian_matrix.hpp"

namespace qpb {

// Pair of strictly positive, trace-one states.
struct DensityPair {
  HermitianMatrix rho;
  HermitianMatrix sigma;

  DensityPair(HermitianMatrix rho_in, HermitianMatrix sigma_in);
};

// D_p(X|Y) = Tr(X - X^p Y^{1-p})/(1-p) for p in [0,1), Umegaki at p = 1.
// Both equivalent forms (difference quotient and the deformed-log form) are
// evaluated and must agree to 1e-10.
double tsallis_relative_entropy(const HermitianMatrix& x,
                                const HermitianMatrix& y, double p);

struct TsallisForms {
  double difference_quotient;
  double deformed_log;
};
TsallisForms tsallis_relative_entropy_forms(const HermitianMatrix& x,
                                            const HermitianMatrix& y,
                                            double p);

// U(X|Y) = Tr X (log X - log Y).
double umegaki_relative_entropy(const HermitianMatrix& x,
                                const HermitianMatrix& y);

// Tr rho^{1-p} sigma^p for states and p in [0,1]; never exceeds 1.
double state_overlap_bound(const DensityPair& pair, double p);

// Scalar lower bound (Tr X - (Tr X)^p (Tr Y)^{1-p})/(1-p) <= D_q(X|Y) for
// 0 < q <= 1 and p <= q; at p = 1 the limit Tr X log(Tr X / Tr Y).
double tsallis_lower_bound(const HermitianMatrix& x, const HermitianMatrix& y,
                           double q, double p);

struct BestBound {
  double p = 0.0;
  double bound = 0.0;
};

// Grid argmax of tsallis_lower_bound; ties resolve to the smallest p.
BestBound best_lower_bound(const HermitianMatrix& x, const HermitianMatrix& y,
                           double q, const std::vector<double>& grid);

}  // namespace qpb
