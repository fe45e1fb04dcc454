#include "qpb/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qpb/deformed.hpp"
#include "qpb/spectral.hpp"

namespace qpb {

namespace {

constexpr double kStateTraceTol = 1e-10;
constexpr double kStateEigenFloor = 1e-12;

void require_pd(const HermitianMatrix& m, const char* who) {
  if (!is_positive_definite(m)) {
    throw DomainError(std::string(who) + " requires positive definite input");
  }
}

double trace_product(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return (a * b).trace().real();
}

}  // namespace

DensityPair::DensityPair(HermitianMatrix rho_in, HermitianMatrix sigma_in)
    : rho(std::move(rho_in)), sigma(std::move(sigma_in)) {
  for (const HermitianMatrix* m : {&rho, &sigma}) {
    if (std::abs(m->trace() - 1.0) > kStateTraceTol) {
      std::ostringstream msg;
      msg << "state trace must be 1 within " << kStateTraceTol << ", got "
          << m->trace();
      throw DomainError(msg.str());
    }
    if (!is_positive_definite(*m, kStateEigenFloor)) {
      throw DomainError("state eigenvalues must exceed the positivity floor");
    }
  }
  if (rho.dim() != sigma.dim()) {
    throw DomainError("states must share a dimension");
  }
}

TsallisForms tsallis_relative_entropy_forms(const HermitianMatrix& x,
                                            const HermitianMatrix& y,
                                            double p) {
  require_pd(x, "tsallis_relative_entropy");
  require_pd(y, "tsallis_relative_entropy");
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ParameterError("tsallis_relative_entropy requires p in [0, 1]");
  }
  if (std::abs(1.0 - p) < kClassicalSwitch) {
    const double u = umegaki_relative_entropy(x, y);
    return TsallisForms{u, u};
  }
  HermitianMatrix xp = matrix_power(x, p);
  HermitianMatrix y1p = matrix_power(y, 1.0 - p);
  const double quotient =
      (x.trace() - trace_product(xp.raw(), y1p.raw())) / (1.0 - p);

  const double q = 2.0 - p;
  HermitianMatrix logs = log_q_matrix(x, q) - log_q_matrix(y, q);
  const double deformed = trace_product(xp.raw(), logs.raw());

  // Both forms divide by (1 - p); their floating-point error grows like
  // eps/(1 - p) as p -> 1, so the agreement guard must track conditioning.
  const double conditioning =
      8.0 * 2.22e-16 *
      (std::abs(x.trace()) + std::abs(trace_product(xp.raw(), y1p.raw()))) /
      (1.0 - p);
  const double gap = std::abs(quotient - deformed);
  if (gap > 1e-10 * (1.0 + std::abs(quotient) + std::abs(deformed)) +
                conditioning) {
    std::ostringstream msg;
    msg << "the two Tsallis forms disagree by " << gap;
    throw AccuracyError(msg.str(), gap);
  }
  return TsallisForms{quotient, deformed};
}

double tsallis_relative_entropy(const HermitianMatrix& x,
                                const HermitianMatrix& y, double p) {
  return tsallis_relative_entropy_forms(x, y, p).difference_quotient;
}

double umegaki_relative_entropy(const HermitianMatrix& x,
                                const HermitianMatrix& y) {
  require_pd(x, "umegaki_relative_entropy");
  require_pd(y, "umegaki_relative_entropy");
  HermitianMatrix logs = apply_spectral(x, ScalarFunction::log_classical()) -
                         apply_spectral(y, ScalarFunction::log_classical());
  return trace_product(x.raw(), logs.raw());
}

double state_overlap_bound(const DensityPair& pair, double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ParameterError("state_overlap_bound requires p in [0, 1]");
  }
  HermitianMatrix rho_pow = matrix_power(pair.rho, 1.0 - p);
  HermitianMatrix sigma_pow = matrix_power(pair.sigma, p);
  const double value = trace_product(rho_pow.raw(), sigma_pow.raw());
  if (value > 1.0 + 1e-10) {
    std::ostringstream msg;
    msg << "state overlap " << value << " exceeds 1";
    throw AccuracyError(msg.str(), value - 1.0);
  }
  return value;
}

double tsallis_lower_bound(const HermitianMatrix& x, const HermitianMatrix& y,
                           double q, double p) {
  if (!(q > 0.0 && q <= 1.0)) {
    throw ParameterError("tsallis_lower_bound requires q in (0, 1]");
  }
  if (!(p <= q + 1e-12)) {
    throw ParameterError("tsallis_lower_bound requires p <= q");
  }
  require_pd(x, "tsallis_lower_bound");
  require_pd(y, "tsallis_lower_bound");
  const double c = x.trace();
  const double d = y.trace();
  // (c - c^p d^{1-p})/(1-p) = -c expm1((1-p) log(d/c))/(1-p); the expm1 form
  // is exact at Tr X = Tr Y (every p gives 0) and stable near p = 1.
  const double t = std::log(d) - std::log(c);
  if (std::abs(1.0 - p) < kClassicalSwitch) {
    return -c * t;
  }
  return -c * std::expm1((1.0 - p) * t) / (1.0 - p);
}

BestBound best_lower_bound(const HermitianMatrix& x, const HermitianMatrix& y,
                           double q, const std::vector<double>& grid) {
  if (grid.empty()) {
    throw ParameterError("best_lower_bound requires a nonempty grid");
  }
  std::vector<double> sorted = grid;
  std::sort(sorted.begin(), sorted.end());
  BestBound best;
  bool have = false;
  for (double p : sorted) {
    const double bound = tsallis_lower_bound(x, y, q, p);
    if (!have || bound > best.bound) {
      best = BestBound{p, bound};
      have = true;
    }
  }
  return best;
}

}  // namespace qpb
