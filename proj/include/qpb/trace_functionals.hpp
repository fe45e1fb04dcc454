#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "qpb/deformed.hpp"
#include "qpb/frechet.hpp"
#include "qpb/hermitian_matrix.hpp"
#include "qpb/quadrature.hpp"
#include "qpb/rng.hpp"

namespace qpb {

// X -> Tr X, or X -> Tr C* X C for a fixed conjugator C. Nonnegative on
// positive semidefinite inputs.
class PositiveFunctional {
 public:
  static PositiveFunctional trace();
  static PositiveFunctional conjugated(Eigen::MatrixXcd c);

  double operator()(const HermitianMatrix& x) const;
  bool is_trace() const { return !conjugator_.has_value(); }

 private:
  PositiveFunctional() = default;
  std::optional<Eigen::MatrixXcd> conjugator_;
};

// Per-trial record of one verified inequality. slack is signed so that
// slack >= 0 means the inequality holds; holds allows the relative
// tolerance.
struct InequalityReport {
  std::string name;
  std::string case_label;
  double q = 0.0;
  double r = 0.0;
  int dim = 0;
  std::uint64_t seed = 0;
  std::int64_t trial = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  bool holds = false;
  double tol = 0.0;
  std::string error;  // set when the trial could not be evaluated
};

double inequality_tolerance(double lhs, double rhs);

// G(A) = log_r Tr exp_q(A).
double G_func(const HermitianMatrix& a, double q, double r);

// F(A) = log_r Tr B* exp_q(A) B; reduces to G at B = 1.
double F_func(const HermitianMatrix& a, const Eigen::MatrixXcd& b, double q,
              double r);

// Slack of the main inequality family. Cases i/iii are the trace forms with
// rhs (Tr exp_q A)^{r-2} Tr (exp_q A)^{2-q} B; cases ii/iv/v use
// phi(exp_q A)^{r-2} phi(D exp_q(A) B). Cases i-iv claim lhs >= rhs, case v
// claims lhs <= rhs; slack is oriented so that >= 0 always means "holds".
InequalityReport main_theorem_slack(TheoremCase c, const HermitianMatrix& a,
                                    const HermitianMatrix& b, double q,
                                    double r, const PositiveFunctional& phi,
                                    const QuadratureSpec& spec);

// Independent recomputation of case iii at r = q, kept as a separate code
// path for the specialization cross-check.
double furuichi_case_iii_slack(const HermitianMatrix& a,
                               const HermitianMatrix& b, double q);

// Slack of the classical inequality (q = r = 1 limit):
// log Tr e^{A+B} - log Tr e^A >= Tr(e^A B)/Tr e^A.
double classical_pb_slack(const HermitianMatrix& a, const HermitianMatrix& b);

enum class VariantDirection { Convex, Concave };

// Slack of the power-trace variant: lhs = (Tr(A+B)^p)^{1/r} - (Tr A^p)^{1/r}
// against rhs = (p/r)(Tr A^p)^{(1-r)/r} Tr A^{p-1}B, claimed >= for the
// convex regime (p >= 1, 0 < r <= p) and <= for the concave regimes
// (0 < p <= 1, r >= p) and (p < 0, r <= p).
InequalityReport variant_pb_slack(VariantDirection dir,
                                  const HermitianMatrix& a,
                                  const HermitianMatrix& b, double p,
                                  double r);

// Convexity probing ------------------------------------------------------

struct ConvexityTarget {
  enum class Kind { TracePower, TracePowerConjugated, G, F };
  Kind kind = Kind::TracePower;
  double first = 1.0;  // p for the trace-power targets, q for G/F
  double r = 1.0;

  std::string name() const;
};

enum class CurvatureClaim { Convex, Concave, Unclassified };

// Classification straight from the regime tables of the two trace-power
// propositions and the two deformed trace-function theorems. Overlapping
// rows (boundary parameters where the map is affine) resolve to the first
// match.
CurvatureClaim classify_curvature(const ConvexityTarget& t);

struct ProbeReport {
  ConvexityTarget target;
  CurvatureClaim claim = CurvatureClaim::Unclassified;
  int dim = 0;
  int samples = 0;
  std::uint64_t seed = 0;
  int genuine_violations = 0;
  // Normalized signed violation of the claimed direction (positive =
  // violated); for unclassified targets both directions are recorded.
  double worst_violation = 0.0;
  std::int64_t worst_trial = -1;
  double worst_convexity_deficit = 0.0;
  double worst_concavity_deficit = 0.0;
};

// One midpoint draw, replayable from (seed, trial). convexity_deficit is
// (f(mid) - (f(X)+f(Y))/2)/scale: positive values contradict convexity,
// negative values contradict concavity.
struct ProbeSampleResult {
  double f_mid = 0.0;
  double f_avg = 0.0;
  double scale = 1.0;
  double convexity_deficit = 0.0;
};
ProbeSampleResult convexity_probe_sample(const ConvexityTarget& t, int dim,
                                         std::uint64_t seed,
                                         std::int64_t trial);

// Draw `samples` admissible pairs (X, Y) and compare f((X+Y)/2) against
// (f(X)+f(Y))/2 in the claimed direction. A genuine violation (beyond
// rel_tol, relatively scaled) falsifies the claim; probing can only falsify,
// never certify. Unclassified targets are probed anyway and reported as
// exploratory.
ProbeReport convexity_probe(const ConvexityTarget& t, int dim, int samples,
                            std::uint64_t seed, double rel_tol = 1e-7);

}  // namespace qpb
