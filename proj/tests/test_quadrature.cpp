#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qpb/deformed.hpp"
#include "qpb/quadrature.hpp"

using namespace qpb;

namespace {

// Stable fhat(t) = lambda * f(lambda) for f = lambda^{a} / (s + lambda)^2.
auto power_resolvent2(double a, double s) {
  return [a, s](double t) {
    double ls = t > 30.0 ? t + std::log1p(s * std::exp(-t))
               : t < -30.0
                   ? std::log(s) + std::log1p(std::exp(t) / s)
                   : std::log(s + std::exp(t));
    const double v = (a + 1.0) * t - 2.0 * ls;
    return v > -700.0 ? std::exp(v) : 0.0;
  };
}

}  // namespace

TEST_CASE("classical integral: t^{q-2} recovered to 1e-7") {
  QuadratureSpec spec;
  for (double q : {1.2, 1.5, 1.8}) {
    for (double t : {0.5, 1.0, 2.0}) {
      const double pref = std::sin((q - 1.0) * std::numbers::pi) /
                          ((q - 1.0) * std::numbers::pi);
      ScalarQuadratureResult r = integrate_half_line(
          power_resolvent2(q - 1.0, t), q, 2.0 - q, spec);
      CHECK(r.converged);
      CHECK(std::abs(pref * r.value - std::pow(t, q - 2.0)) <= 1e-7);
    }
  }
}

TEST_CASE("deformed-log integral representation to 1e-7") {
  QuadratureSpec spec;
  for (double q : {1.2, 1.5, 1.8}) {
    for (double t : {0.5, 1.0, 2.0}) {
      // fhat for (t-1)/(t+lambda) * lambda^{q-1}/(1+lambda), times lambda.
      auto fhat = [q, t](double u) {
        auto logsum = [](double s, double uu) {
          if (uu > 30.0) return uu + std::log1p(s * std::exp(-uu));
          if (uu < -30.0) return std::log(s) + std::log1p(std::exp(uu) / s);
          return std::log(s + std::exp(uu));
        };
        const double v = q * u - logsum(t, u) - logsum(1.0, u);
        return v > -700.0 ? (t - 1.0) * std::exp(v) : 0.0;
      };
      const double pref = std::sin((q - 1.0) * std::numbers::pi) /
                          ((q - 1.0) * std::numbers::pi);
      ScalarQuadratureResult r =
          integrate_half_line(fhat, q, 2.0 - q, spec);
      CHECK(r.converged);
      CHECK(std::abs(pref * r.value - log_q_scalar(t, q)) <= 1e-7);
    }
  }
}

TEST_CASE("resolvent pair table matches divided differences of t^p") {
  QuadratureSpec spec;
  Eigen::VectorXd eigs(3);
  eigs << 0.2, 1.0, 3.5;
  for (double p : {-0.9, -0.5, -0.1, 0.1, 0.5, 0.9}) {
    TableQuadratureResult tab = resolvent_pair_table(eigs, p, spec);
    CHECK(tab.converged);
    const double pref = std::sin(p * std::numbers::pi) / std::numbers::pi;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        const double li = eigs(i), lj = eigs(j);
        const double want =
            i == j ? p * std::pow(li, p - 1.0)
                   : (std::pow(li, p) - std::pow(lj, p)) / (li - lj);
        CHECK(std::abs(pref * tab.table(i, j) - want) <=
              1e-10 * (1.0 + std::abs(want)));
      }
    }
  }
}

TEST_CASE("node doubling reports the final level") {
  QuadratureSpec spec;
  spec.nodes = 64;
  Eigen::VectorXd eigs(2);
  eigs << 0.5, 2.0;
  TableQuadratureResult tab = resolvent_pair_table(eigs, 0.5, spec);
  CHECK(tab.nodes_used >= 128);
  CHECK(tab.nodes_used <= 256);
}

TEST_CASE("rational map converges slowly and reports non-convergence") {
  Eigen::VectorXd eigs(2);
  eigs << 0.5, 2.0;

  QuadratureSpec loose;
  loose.transform = QuadratureSpec::Transform::RationalMap;
  loose.nodes = 4096;
  loose.abs_tol = 5e-3;
  TableQuadratureResult tab = resolvent_pair_table(eigs, 0.5, loose);
  const double pref = std::sin(0.5 * std::numbers::pi) / std::numbers::pi;
  const double want = 0.5 * std::pow(0.5, -0.5);
  CHECK(std::abs(pref * tab.table(0, 0) - want) <= 0.05 * want);

  QuadratureSpec tight;
  tight.transform = QuadratureSpec::Transform::RationalMap;
  tight.abs_tol = 1e-10;
  TableQuadratureResult bad = resolvent_pair_table(eigs, 0.5, tight);
  CHECK_FALSE(bad.converged);
  CHECK(bad.est_error > tight.abs_tol);
}

TEST_CASE("spec validation") {
  QuadratureSpec spec;
  spec.nodes = 8;
  CHECK_THROWS_AS(spec.validate(), ConfigError);
  spec.nodes = 400;
  spec.abs_tol = 0.0;
  CHECK_THROWS_AS(spec.validate(), ConfigError);
  Eigen::VectorXd eigs(1);
  eigs << 1.0;
  CHECK_THROWS_AS(resolvent_pair_table(eigs, 1.5, QuadratureSpec{}),
                  ParameterError);
  eigs << -1.0;
  CHECK_THROWS_AS(resolvent_pair_table(eigs, 0.5, QuadratureSpec{}),
                  DomainError);
}
