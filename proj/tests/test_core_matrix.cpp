#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include <nlohmann/json.hpp>

#include "qpb/deformed.hpp"
#include "qpb/ensemble.hpp"
#include "qpb/hermitian_matrix.hpp"
#include "qpb/spectral.hpp"
#include "support/oracles.hpp"

using namespace qpb;
using qpb::testing::rel_frob;

namespace {

const std::vector<double> kQGrid = {-2.0, -1.0, -0.5, 0.0, 0.3,
                                    0.7,  1.3,  1.5,  2.0, 3.0};

}  // namespace

TEST_CASE("log_q scalar values") {
  CHECK(log_q_scalar(1.0, 0.3) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(log_q_scalar(3.0, 2.0) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(log_q_scalar(2.0, 0.0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(log_q_scalar(std::exp(1.0), 1.0) == doctest::Approx(1.0));
  CHECK_THROWS_AS(log_q_scalar(0.0, 1.5), DomainError);
  CHECK_THROWS_AS(log_q_scalar(-2.0, 0.5), DomainError);
}

TEST_CASE("exp_q scalar values") {
  CHECK(exp_q_scalar(0.0, 1.7) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(exp_q_scalar(0.5, 2.0) == doctest::Approx(1.5).epsilon(1e-14));
  CHECK(exp_q_scalar(-1.0, 1.5) == doctest::Approx(0.25).epsilon(1e-14));
  // The domain error names the bound -1/(q-1).
  try {
    exp_q_scalar(-3.0, 1.5);
    FAIL("expected a domain error");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("-2") != std::string::npos);
  }
  CHECK_THROWS_AS(exp_q_scalar(5.0, 0.5), DomainError);
}

TEST_CASE("scalar round trip exp_q(log_q x) = x") {
  for (double q : kQGrid) {
    for (double x : {0.05, 0.5, 1.0, 2.0, 7.5}) {
      const double back = exp_q_scalar(log_q_scalar(x, q), q);
      CHECK(std::abs(back - x) <= 1e-12 * x);
    }
  }
}

TEST_CASE("classical limit at q = 1 +- 1e-6") {
  for (double q : {1.0 - 1e-6, 1.0 + 1e-6}) {
    for (double x : {-2.0, -0.5, 0.0, 0.5, 2.0}) {
      const double ex = std::exp(x);
      CHECK(std::abs(exp_q_scalar(x, q) - ex) <= 1e-4 * (1.0 + ex));
    }
  }
}

TEST_CASE("difference identity log_q x - log_q y") {
  for (double q : kQGrid) {
    if (std::abs(q - 1.0) < 1e-6) continue;
    for (auto [x, y] : {std::pair{2.0, 3.0}, {0.1, 5.0}, {1.0, 1.5}}) {
      const double lhs = log_q_scalar(x, q) - log_q_scalar(y, q);
      const double rhs =
          (std::pow(x, q - 1.0) - std::pow(y, q - 1.0)) / (q - 1.0);
      CHECK(std::abs(lhs - rhs) <=
            1e-14 * (1.0 + std::abs(lhs) + std::abs(rhs)));
    }
  }
}

TEST_CASE("derivative identities by central differences") {
  const double step = 1e-6;
  for (double q : kQGrid) {
    for (double x : {0.5, 1.0, 2.0}) {
      const double dlog =
          (log_q_scalar(x + step, q) - log_q_scalar(x - step, q)) /
          (2.0 * step);
      CHECK(std::abs(dlog - log_q_derivative(x, q)) <=
            1e-6 * (1.0 + std::abs(dlog)));
    }
    const DomainConstraint c = DomainConstraint::for_q(q);
    for (double x : {-0.4, 0.0, 0.4}) {
      if (!c.admits(x - step) || !c.admits(x + step)) continue;
      const double dexp =
          (exp_q_scalar(x + step, q) - exp_q_scalar(x - step, q)) /
          (2.0 * step);
      CHECK(std::abs(dexp - exp_q_derivative(x, q)) <=
            1e-6 * (1.0 + std::abs(dexp)));
    }
  }
}

TEST_CASE("HermitianMatrix symmetrizes small asymmetry, rejects gross") {
  Eigen::MatrixXcd m(2, 2);
  m << 1.0, std::complex<double>(0.5, 0.25 + 1e-14),
      std::complex<double>(0.5, -0.25), 2.0;
  HermitianMatrix a(m);
  CHECK(qpb::testing::hermiticity_defect(a.raw()) == 0.0);

  m(0, 1) = std::complex<double>(0.9, 0.25);
  try {
    HermitianMatrix bad(m);
    FAIL("expected rejection");
  } catch (const DomainError& e) {
    const std::string what = e.what();
    CHECK(what.find("(0,1)") != std::string::npos);
  }
  CHECK_THROWS_AS(HermitianMatrix(Eigen::MatrixXcd::Zero(0, 0)), DomainError);
  CHECK_THROWS_AS(HermitianMatrix(Eigen::MatrixXcd::Zero(2, 3)), DomainError);
}

TEST_CASE("matrix JSON format round trip and validation") {
  SplitStream s(11, 0, StreamPurpose::MatrixA);
  HermitianMatrix a = random_pd(3, 0.1, 2.0, s);
  HermitianMatrix back = HermitianMatrix::from_json(a.to_json());
  CHECK(rel_frob(a, back) <= 1e-15);

  // "im" is optional.
  nlohmann::json j = {{"dim", 2}, {"re", {{1.0, 0.5}, {0.5, 2.0}}}};
  HermitianMatrix real_only = HermitianMatrix::from_json(j);
  CHECK(real_only.raw()(0, 1).real() == doctest::Approx(0.5));

  // Non-Hermitian input is rejected with the worst pair named.
  nlohmann::json bad = {{"dim", 2}, {"re", {{1.0, 0.9}, {0.5, 2.0}}}};
  try {
    HermitianMatrix::from_json(bad);
    FAIL("expected rejection");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("(0,1)") != std::string::npos);
  }
  CHECK_THROWS_AS(HermitianMatrix::from_json(nlohmann::json{{"dim", 2}}),
                  ConfigError);
}

TEST_CASE("spectral decomposition invariants") {
  for (int dim : {1, 2, 4, 8}) {
    SplitStream s(23, static_cast<std::uint64_t>(dim),
                  StreamPurpose::MatrixA);
    HermitianMatrix a = generate_direction(EnsembleKind::GaussianHermitian,
                                           dim, 2.0, s);
    SpectralDecomposition sd = SpectralDecomposition::compute(a);
    CHECK((sd.reconstruct() - a.raw()).norm() <= 1e-10 * dim);
    CHECK((sd.eigenvectors.adjoint() * sd.eigenvectors -
           Eigen::MatrixXcd::Identity(dim, dim))
              .norm() <= 1e-10);
    for (Eigen::Index i = 1; i < sd.eigenvalues.size(); ++i) {
      CHECK(sd.eigenvalues(i - 1) <= sd.eigenvalues(i));
    }
  }
}

TEST_CASE("apply_spectral examples") {
  HermitianMatrix d = HermitianMatrix::diagonal(Eigen::Vector2d(1.0, 4.0));
  HermitianMatrix root = apply_spectral(d, ScalarFunction::power(0.5));
  CHECK(root.raw()(0, 0).real() == doctest::Approx(1.0));
  CHECK(root.raw()(1, 1).real() == doctest::Approx(2.0));

  // f(identity) = f(1) * identity.
  HermitianMatrix eye = HermitianMatrix::identity(3);
  HermitianMatrix mapped = apply_spectral(eye, ScalarFunction::exp_q(1.3));
  CHECK(rel_frob(mapped, eye.scaled(exp_q_scalar(1.0, 1.3))) <= 1e-14);

  // t^2 against the direct product oracle.
  SplitStream s(5, 0, StreamPurpose::MatrixA);
  HermitianMatrix a = random_pd(3, 0.0, 2.0, s);
  HermitianMatrix squared = apply_spectral(a, ScalarFunction::power(2.0));
  CHECK((squared.raw() - a.raw() * a.raw()).norm() <= 1e-10);
}

TEST_CASE("apply_spectral unitary covariance") {
  for (int trial = 0; trial < 25; ++trial) {
    SplitStream sa(31, static_cast<std::uint64_t>(trial),
                   StreamPurpose::MatrixA);
    SplitStream su(31, static_cast<std::uint64_t>(trial),
                   StreamPurpose::Conjugator);
    HermitianMatrix a = random_pd(4, 0.2, 3.0, sa);
    Eigen::MatrixXcd v = random_unitary(4, su);
    ScalarFunction f = ScalarFunction::power(0.5);
    HermitianMatrix lhs =
        apply_spectral(HermitianMatrix(v * a.raw() * v.adjoint()), f);
    Eigen::MatrixXcd rhs = v * apply_spectral(a, f).raw() * v.adjoint();
    CHECK((lhs.raw() - rhs).norm() <= 1e-9);
  }
}

TEST_CASE("apply_spectral reports the offending eigenvalue") {
  HermitianMatrix d = HermitianMatrix::diagonal(Eigen::Vector2d(-3.0, 1.0));
  try {
    apply_spectral(d, ScalarFunction::log_q(1.5));
    FAIL("expected a domain error");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("-3") != std::string::npos);
  }
}

TEST_CASE("exp_q_matrix and log_q_matrix") {
  CHECK(rel_frob(exp_q_matrix(HermitianMatrix::zero(3), 1.3),
                 HermitianMatrix::identity(3)) <= 1e-14);

  HermitianMatrix d = HermitianMatrix::diagonal(Eigen::Vector2d(-1.0, 0.0));
  HermitianMatrix e = exp_q_matrix(d, 1.5);
  CHECK(e.raw()(0, 0).real() == doctest::Approx(0.25));
  CHECK(e.raw()(1, 1).real() == doctest::Approx(1.0));

  SplitStream s(7, 0, StreamPurpose::MatrixA);
  HermitianMatrix x = random_pd(4, 0.05, 2.0, s);
  CHECK(rel_frob(exp_q_matrix(log_q_matrix(x, 0.5), 0.5), x) <= 1e-9);
  CHECK(is_positive_definite(exp_q_matrix(log_q_matrix(x, 0.5), 0.5)));

  CHECK_THROWS_AS(exp_q_matrix(HermitianMatrix::diagonal(
                                   Eigen::Vector2d(-3.0, 0.0)),
                               1.5),
                  DomainError);
}

TEST_CASE("matrix round trip across the q grid") {
  for (double q : kQGrid) {
    for (int dim : {2, 4}) {
      SplitStream s(13, static_cast<std::uint64_t>(dim * 100 + 7),
                    StreamPurpose::MatrixA);
      HermitianMatrix x = random_pd(dim, 0.05, 2.0, s);
      HermitianMatrix back = exp_q_matrix(log_q_matrix(x, q), q);
      CHECK((back.raw() - x.raw()).norm() <= 1e-9);
    }
  }
}

TEST_CASE("classical limit holds spectrally") {
  SplitStream s(17, 0, StreamPurpose::MatrixA);
  HermitianMatrix a = generate_direction(EnsembleKind::GaussianHermitian, 3,
                                         1.0, s);
  HermitianMatrix classical = apply_spectral(a,
                                             ScalarFunction::exp_classical());
  for (double q : {1.0 - 1e-6, 1.0 + 1e-6}) {
    HermitianMatrix deformed = exp_q_matrix(a, q);
    CHECK((deformed.raw() - classical.raw()).norm() <=
          1e-4 * (1.0 + classical.frobenius_norm()));
  }
}

TEST_CASE("check_domain") {
  DomainConstraint below = DomainConstraint::for_q(2.0);
  CHECK(below.bound == doctest::Approx(-1.0));
  DomainCheckResult r = check_domain(
      HermitianMatrix::diagonal(Eigen::Vector2d(1.0, 2.0)), below);
  CHECK(r.ok);
  CHECK(r.min_eigenvalue == doctest::Approx(1.0));
  CHECK(r.max_eigenvalue == doctest::Approx(2.0));

  DomainConstraint mid = DomainConstraint::for_q(1.5);
  Eigen::VectorXd one(1);
  one << -3.0;
  r = check_domain(HermitianMatrix::diagonal(one), mid);
  CHECK_FALSE(r.ok);
  CHECK(r.min_eigenvalue == doctest::Approx(-3.0));

  // Generator postcondition: ensemble output passes its own constraint.
  for (double q : {-1.0, 0.5, 1.5, 3.0}) {
    EnsembleSpec spec;
    spec.constraint = DomainConstraint::for_q(q);
    SplitStream s(3, static_cast<std::uint64_t>(q * 10 + 100),
                  StreamPurpose::MatrixA);
    HermitianMatrix m = generate(spec, 4, s);
    CHECK(check_domain(m, spec.constraint).ok);
  }
}

TEST_CASE("DeformParams regime classification") {
  CHECK(DeformParams::classify(0.5, 1.0).regime == Regime::MainI);
  CHECK(DeformParams::classify(-1.0, 0.0).regime == Regime::MainI);
  CHECK(DeformParams::classify(1.5, 2.0).regime == Regime::MainIII);
  CHECK(DeformParams::classify(2.5, 1.0).regime == Regime::MainV);
  CHECK(DeformParams::classify(1.2, 0.5).regime == Regime::Unclassified);
  CHECK(regime_matches(TheoremCase::IV, 1.75, 2.0));
  CHECK_FALSE(regime_matches(TheoremCase::IV, 1.2, 2.0));
  CHECK(regime_matches(TheoremCase::II, -2.0, 3.0));
  CHECK_FALSE(regime_matches(TheoremCase::II, 0.5, 3.0));
}
