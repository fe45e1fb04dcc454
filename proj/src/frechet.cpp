#include "qpb/frechet.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace qpb {

namespace {

constexpr double kParamEps = 1e-12;

Eigen::MatrixXcd to_eigenbasis(const SpectralDecomposition& sd,
                               const Eigen::MatrixXcd& m) {
  return sd.eigenvectors.adjoint() * m * sd.eigenvectors;
}

Eigen::MatrixXcd from_eigenbasis(const SpectralDecomposition& sd,
                                 const Eigen::MatrixXcd& m) {
  return sd.eigenvectors * m * sd.eigenvectors.adjoint();
}

// D(x^p)h in the (-1,0) u (0,1) windows, given the decomposition of x.
// The eigenvalue vector need not be ascending (callers shift spectra).
FrechetResult power_window_core(const SpectralDecomposition& sd,
                                const Eigen::MatrixXcd& h_raw, double p,
                                const QuadratureSpec& spec) {
  TableQuadratureResult tab = resolvent_pair_table(sd.eigenvalues, p, spec);
  const double pref = std::sin(p * std::numbers::pi) / std::numbers::pi;
  if (!tab.converged) {
    std::ostringstream msg;
    msg << "power-integral quadrature did not reach abs_tol " << spec.abs_tol
        << " after node cap " << tab.nodes_used << " (estimated error "
        << tab.est_error << ")";
    throw AccuracyError(msg.str(), std::abs(pref) * tab.est_error);
  }
  Eigen::MatrixXcd htilde = to_eigenbasis(sd, h_raw);
  Eigen::MatrixXcd out = from_eigenbasis(
      sd, (pref * tab.table).cwiseProduct(htilde).eval());
  return FrechetResult{HermitianMatrix(std::move(out)),
                       FrechetMethod::Quadrature,
                       std::abs(pref) * tab.est_error * h_raw.norm()};
}

// D(x^p)h for p in (1,2) via the manifestly self-adjoint product recursion:
// D(x^p)h = (h x^{p-1} + x^{p-1} h)/2 + D(x^{p-1}) (xh + hx)/2.
FrechetResult power_recursion_core(const SpectralDecomposition& sd,
                                   const Eigen::MatrixXcd& h_raw, double p,
                                   const QuadratureSpec& spec) {
  Eigen::VectorXd powered(sd.eigenvalues.size());
  for (Eigen::Index i = 0; i < powered.size(); ++i) {
    powered(i) = std::pow(sd.eigenvalues(i), p - 1.0);
  }
  Eigen::MatrixXcd xpow = sd.eigenvectors * powered.asDiagonal() *
                          sd.eigenvectors.adjoint();
  Eigen::MatrixXcd x = sd.reconstruct();
  Eigen::MatrixXcd inner_dir = 0.5 * (x * h_raw + h_raw * x);
  FrechetResult inner = power_window_core(sd, inner_dir, p - 1.0, spec);
  Eigen::MatrixXcd out = 0.5 * (h_raw * xpow + xpow * h_raw) +
                         inner.value.raw();
  return FrechetResult{HermitianMatrix(std::move(out)),
                       FrechetMethod::Quadrature, inner.est_error};
}

FrechetResult power_core(const SpectralDecomposition& sd,
                         const Eigen::MatrixXcd& h_raw, double p,
                         const QuadratureSpec& spec) {
  if ((p > -1.0 && p < 0.0) || (p > 0.0 && p < 1.0)) {
    return power_window_core(sd, h_raw, p, spec);
  }
  if (p > 1.0 && p < 2.0) {
    return power_recursion_core(sd, h_raw, p, spec);
  }
  std::ostringstream msg;
  msg << "unsupported exponent p = " << p
      << "; integral representations cover (-1,0), (0,1) and (1,2)";
  throw ParameterError(msg.str());
}

}  // namespace

std::string frechet_method_name(FrechetMethod m) {
  switch (m) {
    case FrechetMethod::DividedDifference:
      return "divided-difference";
    case FrechetMethod::Quadrature:
      return "quadrature";
    case FrechetMethod::ClosedForm:
      return "closed-form";
  }
  return "?";
}

FrechetResult dfrechet_divided_difference(const HermitianMatrix& x,
                                          const HermitianMatrix& h,
                                          const ScalarFunction& f) {
  SpectralDecomposition sd = SpectralDecomposition::compute(x);
  const Eigen::Index d = sd.eigenvalues.size();
  Eigen::VectorXd fv(d);
  for (Eigen::Index i = 0; i < d; ++i) {
    const double lam = sd.eigenvalues(i);
    if (f.in_domain && !f.in_domain(lam)) {
      std::ostringstream msg;
      msg << "eigenvalue " << lam << " lies outside the domain of " << f.name;
      throw DomainError(msg.str());
    }
    fv(i) = f.value(lam);
  }
  Eigen::MatrixXd dd(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j <= i; ++j) {
      const double li = sd.eigenvalues(i), lj = sd.eigenvalues(j);
      double v;
      if (std::abs(li - lj) < 1e-7 * (1.0 + std::abs(li))) {
        v = f.deriv(0.5 * (li + lj));
      } else {
        v = (fv(i) - fv(j)) / (li - lj);
      }
      dd(i, j) = v;
      dd(j, i) = v;
    }
  }
  Eigen::MatrixXcd htilde = to_eigenbasis(sd, h.raw());
  Eigen::MatrixXcd out =
      from_eigenbasis(sd, dd.cwiseProduct(htilde).eval());
  return FrechetResult{HermitianMatrix(std::move(out)),
                       FrechetMethod::DividedDifference, 0.0};
}

FrechetResult dfrechet_power_integral(const HermitianMatrix& x,
                                      const HermitianMatrix& h, double p,
                                      const QuadratureSpec& spec) {
  if (!is_positive_definite(x)) {
    throw DomainError("dfrechet_power_integral requires positive definite x");
  }
  SpectralDecomposition sd = SpectralDecomposition::compute(x);
  return power_core(sd, h.raw(), p, spec);
}

FrechetResult dfrechet_log_q(const HermitianMatrix& x,
                             const HermitianMatrix& h, double q,
                             const QuadratureSpec& spec, LogQRoute route) {
  if (!(q > 1.0)) {
    throw ParameterError("dfrechet_log_q requires q > 1");
  }
  if (!is_positive_definite(x)) {
    throw DomainError("dfrechet_log_q requires positive definite x");
  }
  if (std::abs(q - 2.0) < kParamEps) {
    // log_2 x = x - 1.
    return FrechetResult{h, FrechetMethod::ClosedForm, 0.0};
  }
  SpectralDecomposition sd = SpectralDecomposition::compute(x);
  const bool integral_window = q > 1.0 && q < 2.0;
  if (route == LogQRoute::Integral && !integral_window) {
    throw ParameterError(
        "the direct integral representation of D log_q needs 1 < q < 2");
  }
  if (integral_window && route != LogQRoute::PowerReduction) {
    // Prefactor sin((q-1)pi)/((q-1)pi) over the same resolvent kernel.
    TableQuadratureResult tab =
        resolvent_pair_table(sd.eigenvalues, q - 1.0, spec);
    const double pref =
        std::sin((q - 1.0) * std::numbers::pi) /
        ((q - 1.0) * std::numbers::pi);
    if (!tab.converged) {
      throw AccuracyError("D log_q quadrature did not converge",
                          std::abs(pref) * tab.est_error);
    }
    Eigen::MatrixXcd htilde = to_eigenbasis(sd, h.raw());
    Eigen::MatrixXcd out = from_eigenbasis(
        sd, (pref * tab.table).cwiseProduct(htilde).eval());
    return FrechetResult{HermitianMatrix(std::move(out)),
                         FrechetMethod::Quadrature,
                         std::abs(pref) * tab.est_error * h.frobenius_norm()};
  }
  if (q < 3.0) {
    // D log_q(x)h = (q-1)^{-1} D(x^{q-1})h; for 2 < q < 3 the exponent sits
    // in the recursion window.
    FrechetResult powered = power_core(sd, h.raw(), q - 1.0, spec);
    return FrechetResult{powered.value.scaled(1.0 / (q - 1.0)),
                         powered.method, powered.est_error / (q - 1.0)};
  }
  return dfrechet_divided_difference(x, h, ScalarFunction::log_q(q));
}

FrechetResult dfrechet_exp_q(const HermitianMatrix& x,
                             const HermitianMatrix& h, double q,
                             const QuadratureSpec& spec) {
  require_domain(x, DomainConstraint::for_q(q), "dfrechet_exp_q argument");
  if (std::abs(q - 1.0) < kClassicalSwitch) {
    return dfrechet_divided_difference(x, h, ScalarFunction::exp_classical());
  }
  if (std::abs(q - 2.0) < kParamEps) {
    // exp_2 x = x + 1.
    return FrechetResult{h, FrechetMethod::ClosedForm, 0.0};
  }
  if (std::abs(q - 1.5) < kParamEps) {
    // exp_{3/2} x = (x/2 + 1)^2.
    Eigen::MatrixXcd out =
        0.25 * (x.raw() * h.raw() + h.raw() * x.raw()) + h.raw();
    return FrechetResult{HermitianMatrix(std::move(out)),
                         FrechetMethod::ClosedForm, 0.0};
  }
  if (std::abs(q) < kParamEps) {
    // exp_0 x = (1 - x)^{-1}; differential is the resolvent sandwich.
    SpectralDecomposition sd = SpectralDecomposition::compute(x);
    Eigen::VectorXd inv(sd.eigenvalues.size());
    for (Eigen::Index i = 0; i < inv.size(); ++i) {
      inv(i) = 1.0 / (1.0 - sd.eigenvalues(i));
    }
    Eigen::MatrixXcd res = sd.eigenvectors * inv.asDiagonal() *
                           sd.eigenvectors.adjoint();
    Eigen::MatrixXcd out = res * h.raw() * res;
    return FrechetResult{HermitianMatrix(std::move(out)),
                         FrechetMethod::ClosedForm, 0.0};
  }
  const bool covered = q < 0.0 || (q > 1.5 && q < 2.0) || q > 2.0;
  if (!covered) {
    // q in (0,1) or (1,3/2): no integral representation; divided
    // differences, tagged as such rather than silently.
    return dfrechet_divided_difference(x, h, ScalarFunction::exp_q(q));
  }
  // Shift: w = (q-1)x + 1 is positive definite on the admissible domain and
  // shares the eigenbasis of x; D exp_q(x)h = (q-1) D(w^{1/(q-1)})h.
  SpectralDecomposition sd = SpectralDecomposition::compute(x);
  SpectralDecomposition shifted{
      ((q - 1.0) * sd.eigenvalues.array() + 1.0).matrix(), sd.eigenvectors};
  FrechetResult inner = power_core(shifted, h.raw(), 1.0 / (q - 1.0), spec);
  return FrechetResult{inner.value.scaled(q - 1.0), inner.method,
                       std::abs(q - 1.0) * inner.est_error};
}

}  // namespace qpb
