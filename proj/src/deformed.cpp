#include "qpb/deformed.hpp"

#include <cmath>
#include <sstream>

namespace qpb {

double log_q_scalar(double x, double q) {
  if (!(x > 0.0)) {
    std::ostringstream msg;
    msg << "log_q requires a positive argument, got x = " << x;
    throw DomainError(msg.str());
  }
  if (std::abs(q - 1.0) < kClassicalSwitch) return std::log(x);
  return std::expm1((q - 1.0) * std::log(x)) / (q - 1.0);
}

double exp_q_scalar(double x, double q) {
  if (std::abs(q - 1.0) < kClassicalSwitch) return std::exp(x);
  const double base = x * (q - 1.0) + 1.0;
  if (!(base > 0.0)) {
    std::ostringstream msg;
    msg << "exp_q argument out of domain: x = " << x << " violates x "
        << (q > 1.0 ? ">" : "<") << " " << -1.0 / (q - 1.0) << " for q = "
        << q;
    throw DomainError(msg.str());
  }
  return std::pow(base, 1.0 / (q - 1.0));
}

double log_q_derivative(double x, double q) {
  if (!(x > 0.0)) {
    throw DomainError("log_q derivative requires a positive argument");
  }
  return std::pow(x, q - 2.0);
}

double exp_q_derivative(double x, double q) {
  return std::pow(exp_q_scalar(x, q), 2.0 - q);
}

DomainConstraint DomainConstraint::for_q(double q) {
  double bound = std::abs(q - 1.0) < kClassicalSwitch ? 0.0 : -1.0 / (q - 1.0);
  return for_q(q, 1e-8 * (1.0 + std::abs(bound)));
}

DomainConstraint DomainConstraint::for_q(double q, double margin) {
  DomainConstraint c;
  c.q = q;
  c.margin = margin;
  if (std::abs(q - 1.0) < kClassicalSwitch) {
    c.side = Side::Unconstrained;
    c.bound = 0.0;
  } else {
    c.bound = -1.0 / (q - 1.0);
    c.side = q < 1.0 ? Side::BoundedAbove : Side::BoundedBelow;
  }
  return c;
}

bool DomainConstraint::admits(double eigenvalue) const {
  switch (side) {
    case Side::BoundedAbove:
      return eigenvalue < bound - margin;
    case Side::BoundedBelow:
      return eigenvalue > bound + margin;
    case Side::Unconstrained:
      return true;
  }
  return false;
}

double DomainConstraint::effective_bound() const {
  switch (side) {
    case Side::BoundedAbove:
      return bound - margin;
    case Side::BoundedBelow:
      return bound + margin;
    case Side::Unconstrained:
      return 0.0;
  }
  return 0.0;
}

std::string DomainConstraint::describe() const {
  std::ostringstream msg;
  switch (side) {
    case Side::BoundedAbove:
      msg << "spectrum bounded above by " << bound << " (margin " << margin
          << ")";
      break;
    case Side::BoundedBelow:
      msg << "spectrum bounded below by " << bound << " (margin " << margin
          << ")";
      break;
    case Side::Unconstrained:
      msg << "unconstrained (q = 1)";
      break;
  }
  return msg.str();
}

bool regime_matches(TheoremCase c, double q, double r) {
  switch (c) {
    case TheoremCase::I:
      return q < 1.0 && r >= q;
    case TheoremCase::II:
      return q <= 0.0 && r >= q;
    case TheoremCase::III:
      return q > 1.0 && q <= 2.0 && r >= q;
    case TheoremCase::IV:
      return q >= 1.5 && q <= 2.0 && r >= q;
    case TheoremCase::V:
      return q >= 2.0 && r <= q;
  }
  return false;
}

DeformParams DeformParams::classify(double q, double r) {
  DeformParams p;
  p.q = q;
  p.r = r;
  p.regime = Regime::Unclassified;
  if (regime_matches(TheoremCase::I, q, r)) {
    p.regime = Regime::MainI;
  } else if (regime_matches(TheoremCase::II, q, r)) {
    p.regime = Regime::MainII;
  } else if (regime_matches(TheoremCase::III, q, r)) {
    p.regime = Regime::MainIII;
  } else if (regime_matches(TheoremCase::IV, q, r)) {
    p.regime = Regime::MainIV;
  } else if (regime_matches(TheoremCase::V, q, r)) {
    p.regime = Regime::MainV;
  }
  return p;
}

std::string case_label(TheoremCase c) {
  switch (c) {
    case TheoremCase::I:
      return "i";
    case TheoremCase::II:
      return "ii";
    case TheoremCase::III:
      return "iii";
    case TheoremCase::IV:
      return "iv";
    case TheoremCase::V:
      return "v";
  }
  return "?";
}

TheoremCase case_from_label(const std::string& label) {
  if (label == "i" || label == "I") return TheoremCase::I;
  if (label == "ii" || label == "II") return TheoremCase::II;
  if (label == "iii" || label == "III") return TheoremCase::III;
  if (label == "iv" || label == "IV") return TheoremCase::IV;
  if (label == "v" || label == "V") return TheoremCase::V;
  throw ConfigError("unknown theorem case: " + label +
                    " (expected one of i, ii, iii, iv, v)");
}

bool case_is_upper_bound(TheoremCase c) { return c == TheoremCase::V; }

bool case_requires_trace(TheoremCase c) {
  return c == TheoremCase::I || c == TheoremCase::III;
}

DomainConstraint case_constraint(TheoremCase c, double q) {
  // Cases i/ii require q < 1 (bounded above); iii/iv/v require q > 1
  // (bounded below). for_q() derives the side from q itself.
  (void)c;
  return DomainConstraint::for_q(q);
}

}  // namespace qpb
