#pragma once

#include <string>

#include "qpb/errors.hpp"

namespace qpb {

// Below this distance from q = 1 the deformed formulas switch to the
// classical exp/log branch; the power form loses precision catastrophically
// as q -> 1.
inline constexpr double kClassicalSwitch = 1e-8;

// log_q x = (x^{q-1} - 1)/(q - 1) for q != 1, log x at q = 1. Defined for
// x > 0.
double log_q_scalar(double x, double q);

// exp_q x = (x(q-1) + 1)^{1/(q-1)} for q != 1, exp x at q = 1. The argument
// must satisfy x > -1/(q-1) for q > 1 and x < -1/(q-1) for q < 1.
double exp_q_scalar(double x, double q);

// d/dx log_q x = x^{q-2};  d/dx exp_q x = exp_q(x)^{2-q}.
double log_q_derivative(double x, double q);
double exp_q_derivative(double x, double q);

// Spectral admissibility window for exp_q: eigenvalues bounded above by
// -1/(q-1) for q < 1, below for q > 1, unconstrained at q = 1. The margin
// keeps downstream powers 1/(q-1) away from a nonpositive base.
struct DomainConstraint {
  enum class Side { BoundedAbove, BoundedBelow, Unconstrained };

  double q = 1.0;
  Side side = Side::Unconstrained;
  double bound = 0.0;
  double margin = 0.0;

  static DomainConstraint for_q(double q);
  static DomainConstraint for_q(double q, double margin);

  bool admits(double eigenvalue) const;
  // The bound shifted inward by the margin; eigenvalues must clear this.
  double effective_bound() const;
  std::string describe() const;
};

enum class Regime { MainI, MainII, MainIII, MainIV, MainV, Unclassified };

enum class TheoremCase { I, II, III, IV, V };

// (q, r) plus the regime tag identifying which theorem clause applies.
// Overlapping regimes are resolved by the operation being called, not here;
// classify() reports the first matching clause in order I..V.
struct DeformParams {
  double q = 1.0;
  double r = 1.0;
  Regime regime = Regime::Unclassified;

  static DeformParams classify(double q, double r);
};

bool regime_matches(TheoremCase c, double q, double r);
std::string case_label(TheoremCase c);
TheoremCase case_from_label(const std::string& label);

// Inequality direction per case: I-IV claim lhs >= rhs, V claims lhs <= rhs.
bool case_is_upper_bound(TheoremCase c);

// Cases i and iii are stated for the trace only; ii/iv/v admit any positive
// functional.
bool case_requires_trace(TheoremCase c);

// Which side of the bound the case's hypotheses live on.
DomainConstraint case_constraint(TheoremCase c, double q);

}  // namespace qpb
