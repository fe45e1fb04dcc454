#include "qpb/trace_functionals.hpp"

#include <cmath>
#include <sstream>

#include "qpb/ensemble.hpp"
#include "qpb/spectral.hpp"

namespace qpb {

namespace {

double real_trace_product(const Eigen::MatrixXcd& m,
                          const Eigen::MatrixXcd& n) {
  return (m * n).trace().real();
}

// Sum of exp_q over the spectrum; the trace of exp_q(A) without forming the
// matrix.
double trace_exp_q(const HermitianMatrix& a, double q) {
  SpectralDecomposition sd = SpectralDecomposition::compute(a);
  double sum = 0.0;
  for (Eigen::Index i = 0; i < sd.eigenvalues.size(); ++i) {
    sum += exp_q_scalar(sd.eigenvalues(i), q);
  }
  return sum;
}

}  // namespace

PositiveFunctional PositiveFunctional::trace() { return PositiveFunctional{}; }

PositiveFunctional PositiveFunctional::conjugated(Eigen::MatrixXcd c) {
  PositiveFunctional f;
  f.conjugator_ = std::move(c);
  return f;
}

double PositiveFunctional::operator()(const HermitianMatrix& x) const {
  if (!conjugator_) return x.trace();
  const Eigen::MatrixXcd& c = *conjugator_;
  return (c.adjoint() * x.raw() * c).trace().real();
}

double inequality_tolerance(double lhs, double rhs) {
  return 1e-8 * (1.0 + std::abs(lhs) + std::abs(rhs));
}

double G_func(const HermitianMatrix& a, double q, double r) {
  require_domain(a, DomainConstraint::for_q(q), "G argument");
  return log_q_scalar(trace_exp_q(a, q), r);
}

double F_func(const HermitianMatrix& a, const Eigen::MatrixXcd& b, double q,
              double r) {
  require_domain(a, DomainConstraint::for_q(q), "F argument");
  HermitianMatrix e = apply_spectral(a, ScalarFunction::exp_q(q));
  const double inner = (b.adjoint() * e.raw() * b).trace().real();
  if (!(inner > 0.0)) {
    std::ostringstream msg;
    msg << "F requires Tr B* exp_q(A) B > 0, got " << inner;
    throw DomainError(msg.str());
  }
  return log_q_scalar(inner, r);
}

InequalityReport main_theorem_slack(TheoremCase c, const HermitianMatrix& a,
                                    const HermitianMatrix& b, double q,
                                    double r, const PositiveFunctional& phi,
                                    const QuadratureSpec& spec) {
  if (!regime_matches(c, q, r)) {
    std::ostringstream msg;
    msg << "(q, r) = (" << q << ", " << r << ") is outside the regime of case "
        << case_label(c);
    throw ParameterError(msg.str());
  }
  if (case_requires_trace(c) && !phi.is_trace()) {
    throw ParameterError("case " + case_label(c) +
                         " is stated for the trace functional only");
  }
  const DomainConstraint constraint = case_constraint(c, q);
  require_domain(a, constraint, "A");
  require_domain(a + b, constraint, "A+B");

  SpectralDecomposition sd_a = SpectralDecomposition::compute(a);
  HermitianMatrix exp_a = apply_spectral(sd_a, ScalarFunction::exp_q(q));
  HermitianMatrix exp_ab = apply_spectral(a + b, ScalarFunction::exp_q(q));

  const double phi_a = phi(exp_a);
  const double phi_ab = phi(exp_ab);
  const double lhs = log_q_scalar(phi_ab, r) - log_q_scalar(phi_a, r);

  double rhs;
  if (case_requires_trace(c)) {
    // Trace form: (Tr exp_q A)^{r-2} Tr (exp_q A)^{2-q} B.
    Eigen::VectorXd powered(sd_a.eigenvalues.size());
    for (Eigen::Index i = 0; i < powered.size(); ++i) {
      powered(i) =
          std::pow(exp_q_scalar(sd_a.eigenvalues(i), q), 2.0 - q);
    }
    Eigen::MatrixXcd exp_pow = sd_a.eigenvectors * powered.asDiagonal() *
                               sd_a.eigenvectors.adjoint();
    rhs = std::pow(phi_a, r - 2.0) * real_trace_product(exp_pow, b.raw());
  } else {
    FrechetResult diff = dfrechet_exp_q(a, b, q, spec);
    rhs = std::pow(phi_a, r - 2.0) * phi(diff.value);
  }

  InequalityReport rep;
  rep.name = "main." + case_label(c);
  rep.case_label = case_label(c);
  rep.q = q;
  rep.r = r;
  rep.dim = static_cast<int>(a.dim());
  rep.lhs = lhs;
  rep.rhs = rhs;
  rep.slack = case_is_upper_bound(c) ? rhs - lhs : lhs - rhs;
  rep.tol = inequality_tolerance(lhs, rhs);
  rep.holds = rep.slack >= -rep.tol;
  return rep;
}

double furuichi_case_iii_slack(const HermitianMatrix& a,
                               const HermitianMatrix& b, double q) {
  // r = q specialization recomputed from scratch with plain powers.
  const double ta = trace_exp_q(a, q);
  const double tab = trace_exp_q(a + b, q);
  const double lhs =
      (std::pow(tab, q - 1.0) - std::pow(ta, q - 1.0)) / (q - 1.0);
  SpectralDecomposition sd = SpectralDecomposition::compute(a);
  Eigen::VectorXd powered(sd.eigenvalues.size());
  for (Eigen::Index i = 0; i < powered.size(); ++i) {
    powered(i) = std::pow(exp_q_scalar(sd.eigenvalues(i), q), 2.0 - q);
  }
  Eigen::MatrixXcd exp_pow =
      sd.eigenvectors * powered.asDiagonal() * sd.eigenvectors.adjoint();
  const double rhs =
      std::pow(ta, q - 2.0) * real_trace_product(exp_pow, b.raw());
  return lhs - rhs;
}

double classical_pb_slack(const HermitianMatrix& a, const HermitianMatrix& b) {
  SpectralDecomposition sd = SpectralDecomposition::compute(a);
  HermitianMatrix exp_a = apply_spectral(sd, ScalarFunction::exp_classical());
  const double ta = exp_a.trace();
  const double tab =
      apply_spectral(a + b, ScalarFunction::exp_classical()).trace();
  const double lhs = std::log(tab) - std::log(ta);
  const double rhs = real_trace_product(exp_a.raw(), b.raw()) / ta;
  return lhs - rhs;
}

InequalityReport variant_pb_slack(VariantDirection dir,
                                  const HermitianMatrix& a,
                                  const HermitianMatrix& b, double p,
                                  double r) {
  const bool convex_regime = p >= 1.0 && r > 0.0 && r <= p;
  const bool concave_regime =
      (p > 0.0 && p <= 1.0 && r >= p) || (p < 0.0 && r <= p);
  if (dir == VariantDirection::Convex && !convex_regime) {
    throw ParameterError(
        "variant convex direction requires p >= 1 and 0 < r <= p");
  }
  if (dir == VariantDirection::Concave && !concave_regime) {
    throw ParameterError(
        "variant concave direction requires 0 < p <= 1, r >= p or p < 0, "
        "r <= p");
  }
  if (!is_positive_definite(a) || !is_positive_definite(b)) {
    throw DomainError("variant inequality requires positive definite A, B");
  }
  SpectralDecomposition sd_a = SpectralDecomposition::compute(a);
  double tr_ap = 0.0;
  for (Eigen::Index i = 0; i < sd_a.eigenvalues.size(); ++i) {
    tr_ap += std::pow(sd_a.eigenvalues(i), p);
  }
  SpectralDecomposition sd_ab = SpectralDecomposition::compute(a + b);
  double tr_abp = 0.0;
  for (Eigen::Index i = 0; i < sd_ab.eigenvalues.size(); ++i) {
    tr_abp += std::pow(sd_ab.eigenvalues(i), p);
  }
  const double lhs = std::pow(tr_abp, 1.0 / r) - std::pow(tr_ap, 1.0 / r);

  Eigen::VectorXd powered(sd_a.eigenvalues.size());
  for (Eigen::Index i = 0; i < powered.size(); ++i) {
    powered(i) = std::pow(sd_a.eigenvalues(i), p - 1.0);
  }
  Eigen::MatrixXcd a_pow = sd_a.eigenvectors * powered.asDiagonal() *
                           sd_a.eigenvectors.adjoint();
  const double rhs = (p / r) * std::pow(tr_ap, (1.0 - r) / r) *
                     real_trace_product(a_pow, b.raw());

  InequalityReport rep;
  const bool convex = dir == VariantDirection::Convex;
  rep.name = convex ? "variant.convex" : "variant.concave";
  rep.case_label = convex ? "convex" : "concave";
  rep.q = p;
  rep.r = r;
  rep.dim = static_cast<int>(a.dim());
  rep.lhs = lhs;
  rep.rhs = rhs;
  rep.slack = convex ? lhs - rhs : rhs - lhs;
  rep.tol = inequality_tolerance(lhs, rhs);
  rep.holds = rep.slack >= -rep.tol;
  return rep;
}

std::string ConvexityTarget::name() const {
  switch (kind) {
    case Kind::TracePower:
      return "trace-power";
    case Kind::TracePowerConjugated:
      return "trace-power-conj";
    case Kind::G:
      return "G";
    case Kind::F:
      return "F";
  }
  return "?";
}

CurvatureClaim classify_curvature(const ConvexityTarget& t) {
  const double p = t.first;
  const double q = t.first;
  const double r = t.r;
  switch (t.kind) {
    case ConvexityTarget::Kind::TracePower:
      if (p < 0.0 && r <= p) return CurvatureClaim::Concave;
      if (p < 0.0 && r > 0.0) return CurvatureClaim::Convex;
      if (p > 0.0 && p <= 1.0 && r >= p) return CurvatureClaim::Concave;
      if (p >= 1.0 && r > 0.0 && r <= p) return CurvatureClaim::Convex;
      if (p > 0.0 && p <= 1.0 && r < 0.0) return CurvatureClaim::Convex;
      return CurvatureClaim::Unclassified;
    case ConvexityTarget::Kind::TracePowerConjugated:
      if (p >= -1.0 && p < 0.0 && r <= p) return CurvatureClaim::Concave;
      if (p >= -1.0 && p < 0.0 && r > 0.0) return CurvatureClaim::Convex;
      if (p > 0.0 && p <= 1.0 && r >= p) return CurvatureClaim::Concave;
      if (p >= 1.0 && p <= 2.0 && r > 0.0 && r <= p) {
        return CurvatureClaim::Convex;
      }
      if (p > 0.0 && p <= 1.0 && r < 0.0) return CurvatureClaim::Convex;
      return CurvatureClaim::Unclassified;
    case ConvexityTarget::Kind::G:
      if (q < 1.0 && r >= q) return CurvatureClaim::Convex;
      if (q > 1.0 && q <= 2.0 && r >= q) return CurvatureClaim::Convex;
      if (q >= 2.0 && r <= q) return CurvatureClaim::Concave;
      return CurvatureClaim::Unclassified;
    case ConvexityTarget::Kind::F:
      if (q <= 0.0 && r >= q) return CurvatureClaim::Convex;
      if (q >= 1.5 && q <= 2.0 && r >= q) return CurvatureClaim::Convex;
      if (q >= 2.0 && r <= q) return CurvatureClaim::Concave;
      return CurvatureClaim::Unclassified;
  }
  return CurvatureClaim::Unclassified;
}

ProbeSampleResult convexity_probe_sample(const ConvexityTarget& t, int dim,
                                         std::uint64_t seed,
                                         std::int64_t trial) {
  const bool trace_power =
      t.kind == ConvexityTarget::Kind::TracePower ||
      t.kind == ConvexityTarget::Kind::TracePowerConjugated;
  const bool conjugated =
      t.kind == ConvexityTarget::Kind::TracePowerConjugated ||
      t.kind == ConvexityTarget::Kind::F;

  SplitStream sx(seed, static_cast<std::uint64_t>(trial),
                 StreamPurpose::ProbeX);
  SplitStream sy(seed, static_cast<std::uint64_t>(trial),
                 StreamPurpose::ProbeY);
  SplitStream sc(seed, static_cast<std::uint64_t>(trial),
                 StreamPurpose::Conjugator);

  HermitianMatrix x = HermitianMatrix::zero(dim);
  HermitianMatrix y = HermitianMatrix::zero(dim);
  if (trace_power) {
    x = random_pd(dim, 0.05, 2.05, sx);
    y = random_pd(dim, 0.05, 2.05, sy);
  } else {
    EnsembleSpec es;
    es.constraint = DomainConstraint::for_q(t.first);
    x = generate(es, dim, sx);
    y = generate(es, dim, sy);
  }
  Eigen::MatrixXcd b = conjugated ? random_matrix(dim, sc)
                                  : Eigen::MatrixXcd::Identity(dim, dim);

  auto eval = [&](const HermitianMatrix& m) {
    switch (t.kind) {
      case ConvexityTarget::Kind::TracePower: {
        SpectralDecomposition sd = SpectralDecomposition::compute(m);
        double s = 0.0;
        for (Eigen::Index i = 0; i < sd.eigenvalues.size(); ++i) {
          s += std::pow(sd.eigenvalues(i), t.first);
        }
        return std::pow(s, 1.0 / t.r);
      }
      case ConvexityTarget::Kind::TracePowerConjugated: {
        HermitianMatrix mp = matrix_power(m, t.first);
        double s = (b.adjoint() * mp.raw() * b).trace().real();
        return std::pow(s, 1.0 / t.r);
      }
      case ConvexityTarget::Kind::G:
        return G_func(m, t.first, t.r);
      case ConvexityTarget::Kind::F:
        return F_func(m, b, t.first, t.r);
    }
    return 0.0;
  };

  ProbeSampleResult s;
  const double fx = eval(x);
  const double fy = eval(y);
  s.f_mid = eval(HermitianMatrix(0.5 * (x.raw() + y.raw())));
  s.f_avg = 0.5 * (fx + fy);
  s.scale = 1.0 + std::abs(fx) + std::abs(fy);
  s.convexity_deficit = (s.f_mid - s.f_avg) / s.scale;
  return s;
}

ProbeReport convexity_probe(const ConvexityTarget& t, int dim, int samples,
                            std::uint64_t seed, double rel_tol) {
  ProbeReport rep;
  rep.target = t;
  rep.claim = classify_curvature(t);
  rep.dim = dim;
  rep.samples = samples;
  rep.seed = seed;
  rep.worst_violation = -1e300;

  for (int trial = 0; trial < samples; ++trial) {
    const ProbeSampleResult s = convexity_probe_sample(t, dim, seed, trial);
    double violation = 0.0;
    switch (rep.claim) {
      case CurvatureClaim::Convex:
        violation = s.convexity_deficit;
        break;
      case CurvatureClaim::Concave:
        violation = -s.convexity_deficit;
        break;
      case CurvatureClaim::Unclassified:
        violation = std::abs(s.convexity_deficit);
        break;
    }
    if (rep.claim != CurvatureClaim::Unclassified && violation > rel_tol) {
      ++rep.genuine_violations;
    }
    rep.worst_convexity_deficit =
        std::max(rep.worst_convexity_deficit, s.convexity_deficit);
    rep.worst_concavity_deficit =
        std::max(rep.worst_concavity_deficit, -s.convexity_deficit);
    if (violation > rep.worst_violation) {
      rep.worst_violation = violation;
      rep.worst_trial = trial;
    }
  }
  return rep;
}

}  // namespace qpb
