#include "qpb/harness.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qpb/ensemble.hpp"
#include "qpb/entropy.hpp"
#include "qpb/frechet.hpp"
#include "qpb/report_io.hpp"
#include "qpb/spectral.hpp"

namespace qpb {

namespace {

constexpr double kPairWidth = 2.0;
constexpr double kPairOffset = 0.05;
constexpr double kPerturbationNorm = 0.5;

double rel_frob_dist(const HermitianMatrix& a, const HermitianMatrix& b) {
  const double diff = (a.raw() - b.raw()).norm();
  return diff / (1.0 + std::max(a.frobenius_norm(), b.frobenius_norm()));
}

struct FrechetWindow {
  const char* name;
  enum Kind { Power, LogQ, ExpQ } kind;
  double param;
};

const std::vector<FrechetWindow>& frechet_windows() {
  static const std::vector<FrechetWindow> w = {
      {"eq9", FrechetWindow::Power, 0.25},
      {"eq9", FrechetWindow::Power, 0.5},
      {"eq9", FrechetWindow::Power, 0.75},
      {"eq10", FrechetWindow::Power, -0.75},
      {"eq10", FrechetWindow::Power, -0.5},
      {"eq10", FrechetWindow::Power, -0.25},
      {"eq11", FrechetWindow::Power, 1.25},
      {"eq11", FrechetWindow::Power, 1.5},
      {"eq11", FrechetWindow::Power, 1.75},
      {"eq14", FrechetWindow::LogQ, 1.2},
      {"eq14", FrechetWindow::LogQ, 1.5},
      {"eq14", FrechetWindow::LogQ, 1.8},
      {"exp.case1", FrechetWindow::ExpQ, -1.5},
      {"exp.case1", FrechetWindow::ExpQ, -0.5},
      {"exp.case2", FrechetWindow::ExpQ, 1.5},
      {"exp.case3", FrechetWindow::ExpQ, 1.7},
      {"exp.case3", FrechetWindow::ExpQ, 1.9},
      {"exp.case4", FrechetWindow::ExpQ, 2.0},
      {"exp.case5", FrechetWindow::ExpQ, 2.5},
      {"exp.case5", FrechetWindow::ExpQ, 3.5},
  };
  return w;
}

const std::vector<double>& lemma_p_grid() {
  static const std::vector<double> g = [] {
    std::vector<double> v;
    for (int i = 0; i <= 20; ++i) v.push_back(i / 20.0);
    return v;
  }();
  return g;
}

ConvexityTarget::Kind convexity_kind(const std::string& name) {
  if (name == "G") return ConvexityTarget::Kind::G;
  if (name == "F") return ConvexityTarget::Kind::F;
  if (name == "trace-power") return ConvexityTarget::Kind::TracePower;
  if (name == "trace-power-conj") {
    return ConvexityTarget::Kind::TracePowerConjugated;
  }
  throw ConfigError("unknown convexity target: " + name +
                    " (expected G, F, trace-power or trace-power-conj)");
}

std::string regime_table() {
  return "regimes: i: q<1, r>=q | ii: q<=0, r>=q | iii: 1<q<=2, r>=q | "
         "iv: 3/2<=q<=2, r>=q | v: q>=2, r<=q";
}

// --- per-command workers -------------------------------------------------

InequalityReport main_worker(const RunConfig& cfg, const WorkItem& it) {
  const double q = it.p1, r = it.p2;
  HermitianMatrix a = HermitianMatrix::zero(1);
  HermitianMatrix b = HermitianMatrix::zero(1);
  if (cfg.matrix_a) {
    a = *cfg.matrix_a;
    b = *cfg.matrix_b;
  } else {
    SplitStream sa(cfg.seed, it.trial, StreamPurpose::MatrixA);
    SplitStream sb(cfg.seed, it.trial, StreamPurpose::MatrixB);
    AdmissiblePair pair = generate_admissible_pair(
        DomainConstraint::for_q(q), it.dim, kPairWidth, kPairOffset,
        kPerturbationNorm, sa, sb);
    a = std::move(pair.a);
    b = std::move(pair.b);
  }
  PositiveFunctional phi = PositiveFunctional::trace();
  if (!case_requires_trace(cfg.main_case)) {
    SplitStream sc(cfg.seed, it.trial, StreamPurpose::Conjugator);
    phi = PositiveFunctional::conjugated(random_matrix(a.dim(), sc));
  }
  return main_theorem_slack(cfg.main_case, a, b, q, r, phi, cfg.quadrature);
}

InequalityReport variant_worker(const RunConfig& cfg, const WorkItem& it) {
  HermitianMatrix a = HermitianMatrix::zero(1);
  HermitianMatrix b = HermitianMatrix::zero(1);
  if (cfg.matrix_a) {
    a = *cfg.matrix_a;
    b = *cfg.matrix_b;
  } else {
    SplitStream sa(cfg.seed, it.trial, StreamPurpose::MatrixA);
    SplitStream sb(cfg.seed, it.trial, StreamPurpose::MatrixB);
    a = random_pd(it.dim, 0.05, 2.05, sa);
    b = random_pd(it.dim, 0.05, 1.05, sb);
  }
  return variant_pb_slack(cfg.direction, a, b, it.p1, it.p2);
}

InequalityReport convexity_worker(const RunConfig& cfg, const WorkItem& it) {
  ConvexityTarget target;
  target.kind = convexity_kind(cfg.convexity_target);
  target.first = it.p1;
  target.r = it.p2;
  const CurvatureClaim claim = classify_curvature(target);
  ProbeSampleResult s =
      convexity_probe_sample(target, it.dim, cfg.seed, it.trial);

  InequalityReport rep;
  rep.name = "convexity." + target.name();
  rep.q = it.p1;
  rep.r = it.p2;
  rep.dim = it.dim;
  rep.lhs = s.f_mid;
  rep.rhs = s.f_avg;
  rep.tol = 1e-7 * s.scale;
  switch (claim) {
    case CurvatureClaim::Convex:
      rep.case_label = "convex";
      rep.slack = s.f_avg - s.f_mid;
      rep.holds = rep.slack >= -rep.tol;
      break;
    case CurvatureClaim::Concave:
      rep.case_label = "concave";
      rep.slack = s.f_mid - s.f_avg;
      rep.holds = rep.slack >= -rep.tol;
      break;
    case CurvatureClaim::Unclassified:
      rep.case_label = "exploratory";
      rep.slack = s.f_avg - s.f_mid;
      rep.holds = true;
      break;
  }
  return rep;
}

InequalityReport entropy_worker(const RunConfig& cfg, const WorkItem& it) {
  InequalityReport rep;
  rep.dim = it.dim;
  if (cfg.entropy_suite == "lemma") {
    SplitStream sr(cfg.seed, it.trial, StreamPurpose::StateRho);
    SplitStream ss(cfg.seed, it.trial, StreamPurpose::StateSigma);
    DensityPair pair(random_state(it.dim, sr), random_state(it.dim, ss));
    const double p = lemma_p_grid()[static_cast<std::size_t>(it.aux)];
    const double overlap = state_overlap_bound(pair, p);
    rep.name = "entropy.lemma";
    rep.case_label = "lemma";
    rep.q = p;
    rep.lhs = overlap;
    rep.rhs = 1.0;
    rep.slack = 1.0 - overlap;
    rep.tol = 1e-10;
    rep.holds = rep.slack >= -rep.tol;
    return rep;
  }
  SplitStream sx(cfg.seed, it.trial, StreamPurpose::MatrixA);
  SplitStream sy(cfg.seed, it.trial, StreamPurpose::MatrixB);
  HermitianMatrix x = random_pd(it.dim, 0.05, 2.05, sx);
  HermitianMatrix y = random_pd(it.dim, 0.05, 2.05, sy);
  if (cfg.entropy_suite == "bound") {
    const double q = it.p1, p = it.p2;
    const double dq = tsallis_relative_entropy(x, y, q);
    const double bound = tsallis_lower_bound(x, y, q, p);
    rep.name = "entropy.bound";
    rep.case_label = "bound";
    rep.q = q;
    rep.r = p;
    rep.lhs = dq;
    rep.rhs = bound;
    rep.slack = dq - bound;
    rep.tol = inequality_tolerance(dq, bound);
    rep.holds = rep.slack >= -rep.tol;
    return rep;
  }
  // limits: |D_p - U| must shrink as p -> 1.
  const double u = umegaki_relative_entropy(x, y);
  const double e1 = std::abs(tsallis_relative_entropy(x, y, 0.9) - u);
  const double e2 = std::abs(tsallis_relative_entropy(x, y, 0.99) - u);
  const double e3 = std::abs(tsallis_relative_entropy(x, y, 0.999) - u);
  rep.name = "entropy.limits";
  rep.case_label = "limits";
  rep.q = 0.999;
  rep.lhs = e1;
  rep.rhs = e3;
  rep.slack = std::min(e1 - e2, e2 - e3);
  rep.tol = 1e-12 * (1.0 + e1);
  rep.holds = rep.slack >= -rep.tol;
  return rep;
}

InequalityReport frechet_worker(const RunConfig& cfg, const WorkItem& it) {
  const FrechetWindow& win =
      frechet_windows()[static_cast<std::size_t>(it.aux)];
  SplitStream sx(cfg.seed, it.trial, StreamPurpose::MatrixA);
  SplitStream sh(cfg.seed, it.trial, StreamPurpose::Direction);

  HermitianMatrix x = HermitianMatrix::zero(1);
  if (win.kind == FrechetWindow::ExpQ) {
    EnsembleSpec es;
    es.constraint = DomainConstraint::for_q(win.param);
    x = generate(es, it.dim, sx);
  } else {
    x = random_pd(it.dim, 0.1, 3.1, sx);
  }
  HermitianMatrix h = generate_direction(EnsembleKind::GaussianHermitian,
                                         it.dim, 1.0, sh);

  auto by_quadrature = [&]() {
    switch (win.kind) {
      case FrechetWindow::Power:
        return dfrechet_power_integral(x, h, win.param, cfg.quadrature);
      case FrechetWindow::LogQ:
        return dfrechet_log_q(x, h, win.param, cfg.quadrature);
      case FrechetWindow::ExpQ:
        return dfrechet_exp_q(x, h, win.param, cfg.quadrature);
    }
    throw ParameterError("bad window");
  };
  auto scalar_fn = [&]() {
    switch (win.kind) {
      case FrechetWindow::Power:
        return ScalarFunction::power(win.param);
      case FrechetWindow::LogQ:
        return ScalarFunction::log_q(win.param);
      case FrechetWindow::ExpQ:
        return ScalarFunction::exp_q(win.param);
    }
    throw ParameterError("bad window");
  };

  InequalityReport rep;
  rep.name = std::string("frechet.") + win.name;
  rep.q = win.param;
  rep.dim = it.dim;

  if (cfg.frechet_method == "both") {
    FrechetResult dd = dfrechet_divided_difference(x, h, scalar_fn());
    FrechetResult qd = by_quadrature();
    const double dist = rel_frob_dist(dd.value, qd.value);
    const double target = std::max(1e-6, 10.0 * cfg.quadrature.abs_tol);
    rep.case_label = "dd-vs-quad";
    rep.lhs = dist;
    rep.rhs = target;
    rep.slack = target - dist;
    rep.holds = rep.slack >= 0.0;
    return rep;
  }

  // Single-method run: check the derivative trace identity
  // Tr Df(x)h = Tr f'(x)h, which holds for every window.
  FrechetResult result = cfg.frechet_method == "dd"
                             ? dfrechet_divided_difference(x, h, scalar_fn())
                             : by_quadrature();
  ScalarFunction f = scalar_fn();
  SpectralDecomposition sd = SpectralDecomposition::compute(x);
  Eigen::VectorXd dv(sd.eigenvalues.size());
  for (Eigen::Index i = 0; i < dv.size(); ++i) {
    dv(i) = f.deriv(sd.eigenvalues(i));
  }
  Eigen::MatrixXcd fprime =
      sd.eigenvectors * dv.asDiagonal() * sd.eigenvectors.adjoint();
  const double expected = (fprime * h.raw()).trace().real();
  const double residual = std::abs(result.value.trace() - expected);
  rep.case_label = std::string("trace-identity-") + cfg.frechet_method;
  rep.lhs = residual;
  rep.rhs = 1e-8 * (1.0 + std::abs(expected));
  rep.slack = rep.rhs - rep.lhs;
  rep.holds = rep.slack >= 0.0;
  return rep;
}

}  // namespace

void RunConfig::validate() const {
  if (trials < 1) throw ConfigError("trials must be >= 1");
  if (dims.empty()) throw ConfigError("dims must be nonempty");
  for (int d : dims) {
    if (d < 1) throw ConfigError("dims must all be >= 1");
  }
  if (jobs < 0) throw ConfigError("jobs must be >= 0");
  quadrature.validate();
  if (command == Command::VerifyMain) {
    for (const auto& [q, r] : grid) {
      if (!regime_matches(main_case, q, r)) {
        std::ostringstream msg;
        msg << "(q, r) = (" << q << ", " << r
            << ") is outside the regime of case " << case_label(main_case)
            << "; " << regime_table();
        throw ConfigError(msg.str());
      }
    }
  }
  if (command == Command::VerifyVariant) {
    for (const auto& [p, r] : grid) {
      const bool convex_ok = p >= 1.0 && r > 0.0 && r <= p;
      const bool concave_ok =
          (p > 0.0 && p <= 1.0 && r >= p) || (p < 0.0 && r <= p);
      if (direction == VariantDirection::Convex ? !convex_ok : !concave_ok) {
        std::ostringstream msg;
        msg << "(p, r) = (" << p << ", " << r
            << ") is outside the variant regime; convex: p>=1, 0<r<=p; "
               "concave: 0<p<=1, r>=p or p<0, r<=p";
        throw ConfigError(msg.str());
      }
    }
  }
  if (command == Command::VerifyConvexity) {
    convexity_kind(convexity_target);
  }
  if (command == Command::VerifyEntropy) {
    if (entropy_suite != "lemma" && entropy_suite != "bound" &&
        entropy_suite != "limits") {
      throw ConfigError("unknown entropy suite: " + entropy_suite +
                        " (expected lemma, bound or limits)");
    }
    for (const auto& [q, p] : grid) {
      if (entropy_suite == "bound" && !(q > 0.0 && q <= 1.0 && p <= q)) {
        throw ConfigError("entropy bound grid requires 0 < q <= 1, p <= q");
      }
    }
  }
  if (command == Command::FrechetCheck) {
    if (frechet_method != "dd" && frechet_method != "quad" &&
        frechet_method != "both") {
      throw ConfigError("unknown frechet method: " + frechet_method +
                        " (expected dd, quad or both)");
    }
  }
  if (matrix_a.has_value() != matrix_b.has_value()) {
    throw ConfigError("single-instance mode needs both --matrix-a and "
                      "--matrix-b");
  }
  if (matrix_a) {
    if (command != Command::VerifyMain && command != Command::VerifyVariant) {
      throw ConfigError("--matrix-a/--matrix-b apply to verify main and "
                        "verify variant only");
    }
    if (matrix_a->dim() != matrix_b->dim()) {
      throw ConfigError("matrix-a and matrix-b must share a dimension");
    }
    if (grid.empty()) {
      throw ConfigError("single-instance mode needs explicit --q/--r");
    }
  }
}

std::vector<std::pair<double, double>> default_grid(const RunConfig& config) {
  std::vector<std::pair<double, double>> g;
  auto push_r = [&](double q, std::initializer_list<double> rs) {
    for (double r : rs) g.emplace_back(q, r);
  };
  switch (config.command) {
    case Command::VerifyMain:
      switch (config.main_case) {
        case TheoremCase::I:
          for (double q : {-2.0, -1.0, -0.5, 0.0, 0.5}) {
            push_r(q, {q, q + 0.5, 1.5, 3.0});
          }
          break;
        case TheoremCase::II:
          for (double q : {-2.0, -1.0, -0.5, 0.0}) {
            push_r(q, {q, q + 0.5, 1.5, 3.0});
          }
          break;
        case TheoremCase::III:
          for (double q : {1.2, 1.5, 2.0}) push_r(q, {q, q + 0.5, 3.0});
          break;
        case TheoremCase::IV:
          for (double q : {1.5, 1.75, 2.0}) push_r(q, {q, q + 0.5, 3.0});
          break;
        case TheoremCase::V:
          for (double q : {2.0, 2.5, 3.0}) push_r(q, {q, q - 0.5, 1.0, 0.5});
          break;
      }
      break;
    case Command::VerifyVariant:
      if (config.direction == VariantDirection::Convex) {
        g = {{1.0, 1.0}, {1.5, 1.0}, {1.5, 1.5}, {2.0, 1.0},
             {2.0, 2.0}, {3.0, 1.5}, {3.0, 3.0}};
      } else {
        g = {{0.3, 0.3},   {0.3, 1.0},   {0.5, 0.5},  {0.5, 2.0},
             {1.0, 1.0},   {1.0, 3.0},   {-0.5, -0.5}, {-0.5, -1.0},
             {-1.0, -1.0}, {-1.0, -2.0}};
      }
      break;
    case Command::VerifyConvexity:
      if (config.convexity_target == "trace-power") {
        g = {{-0.5, -0.5}, {-0.5, -1.0}, {-1.0, -2.0},  // row i
             {-0.5, 0.5},  {-1.0, 1.0},                 // row ii
             {0.5, 0.5},   {0.5, 1.0},   {1.0, 2.0},    // row iii
             {1.0, 1.0},   {2.0, 1.0},   {2.0, 2.0},   {3.0, 2.0},  // row iv
             {0.5, -1.0},  {1.0, -0.5}};                // row v
      } else if (config.convexity_target == "trace-power-conj") {
        g = {{-0.5, -0.5}, {-0.5, -1.0}, {-1.0, -1.0},  // row i
             {-0.5, 1.0},  {-1.0, 0.5},                 // row ii
             {0.5, 1.0},   {1.0, 1.0},                  // row iii
             {1.5, 1.0},   {2.0, 2.0},   {2.0, 0.5},    // row iv
             {0.5, -1.0},  {1.0, -2.0}};                // row v
      } else if (config.convexity_target == "G") {
        g = {{0.5, 0.5}, {0.5, 1.5}, {-1.0, -0.5}, {-1.0, 1.0},
             {0.0, 3.0},                                   // row i
             {1.5, 1.5}, {1.5, 3.0}, {2.0, 2.0},           // row ii
             {2.0, 1.0}, {2.5, 2.5}, {3.0, 1.5}};          // row iii
      } else {
        g = {{0.0, 0.5},  {-1.0, -0.5}, {-1.0, 1.5}, {-2.0, 0.0},  // row i
             {1.5, 1.5},  {1.75, 2.0},  {2.0, 3.0},                // row ii
             {2.0, 1.5},  {2.5, 1.0},   {3.0, 3.0},                // row iii
             {0.5, 1.0},  {1.2, 2.0}};  // exploratory gap 0 < q < 3/2
      }
      break;
    case Command::VerifyEntropy:
      if (config.entropy_suite == "bound") {
        for (double q : {0.2, 0.5, 0.8, 1.0}) {
          for (double dp : {0.0, 0.2, 0.5, 1.0}) g.emplace_back(q, q - dp);
        }
      } else {
        g = {{0.0, 0.0}};
      }
      break;
    case Command::FrechetCheck:
      g = {{0.0, 0.0}};
      break;
  }
  return g;
}

void print_grids(std::ostream& out) {
  auto dump = [&](const char* title, RunConfig cfg) {
    out << title << ":";
    for (const auto& [a, b] : default_grid(cfg)) {
      out << " (" << a << "," << b << ")";
    }
    out << "\n";
  };
  RunConfig cfg;
  cfg.command = Command::VerifyMain;
  for (TheoremCase c : {TheoremCase::I, TheoremCase::II, TheoremCase::III,
                        TheoremCase::IV, TheoremCase::V}) {
    cfg.main_case = c;
    dump(("main case " + case_label(c) + " (q,r)").c_str(), cfg);
  }
  cfg = RunConfig{};
  cfg.command = Command::VerifyVariant;
  cfg.direction = VariantDirection::Convex;
  dump("variant convex (p,r)", cfg);
  cfg.direction = VariantDirection::Concave;
  dump("variant concave (p,r)", cfg);
  cfg = RunConfig{};
  cfg.command = Command::VerifyConvexity;
  for (const char* t : {"trace-power", "trace-power-conj", "G", "F"}) {
    cfg.convexity_target = t;
    dump((std::string("convexity ") + t +
          (std::string(t) == "G" || std::string(t) == "F" ? " (q,r)"
                                                          : " (p,r)"))
             .c_str(),
         cfg);
  }
  cfg = RunConfig{};
  cfg.command = Command::VerifyEntropy;
  cfg.entropy_suite = "bound";
  dump("entropy bound (q,p)", cfg);
  out << "entropy lemma p-grid: 21 points on [0,1]\n";
  out << "frechet windows:";
  for (const auto& w : frechet_windows()) {
    out << " " << w.name << "@" << w.param;
  }
  out << "\n";
}

std::vector<WorkItem> plan_items(const RunConfig& config) {
  std::vector<std::pair<double, double>> grid =
      config.grid.empty() ? default_grid(config) : config.grid;
  std::vector<WorkItem> items;

  if (config.matrix_a) {
    for (const auto& [a, b] : grid) {
      items.push_back(WorkItem{a, b, static_cast<int>(config.matrix_a->dim()),
                               0, -1});
    }
    return items;
  }

  const bool lemma = config.command == Command::VerifyEntropy &&
                     config.entropy_suite == "lemma";
  const bool frechet = config.command == Command::FrechetCheck;

  for (const auto& [a, b] : grid) {
    for (int dim : config.dims) {
      for (std::int64_t trial = 0; trial < config.trials; ++trial) {
        if (lemma) {
          for (int pi = 0; pi < static_cast<int>(lemma_p_grid().size());
               ++pi) {
            items.push_back(WorkItem{a, b, dim, trial, pi});
          }
        } else if (frechet) {
          for (int wi = 0; wi < static_cast<int>(frechet_windows().size());
               ++wi) {
            items.push_back(WorkItem{a, b, dim, trial, wi});
          }
        } else {
          items.push_back(WorkItem{a, b, dim, trial, -1});
        }
      }
    }
  }
  return items;
}

InequalityReport evaluate_item(const RunConfig& config, const WorkItem& item) {
  InequalityReport rep;
  try {
    switch (config.command) {
      case Command::VerifyMain:
        rep = main_worker(config, item);
        break;
      case Command::VerifyVariant:
        rep = variant_worker(config, item);
        break;
      case Command::VerifyConvexity:
        rep = convexity_worker(config, item);
        break;
      case Command::VerifyEntropy:
        rep = entropy_worker(config, item);
        break;
      case Command::FrechetCheck:
        rep = frechet_worker(config, item);
        break;
    }
  } catch (const AccuracyError& e) {
    rep.name = "error";
    rep.case_label = "accuracy";
    rep.q = item.p1;
    rep.r = item.p2;
    rep.dim = item.dim;
    rep.holds = false;
    rep.error = std::string("accuracy: ") + e.what();
  } catch (const std::exception& e) {
    rep.name = "error";
    rep.case_label = "exception";
    rep.q = item.p1;
    rep.r = item.p2;
    rep.dim = item.dim;
    rep.holds = false;
    rep.error = e.what();
  }
  rep.seed = config.seed;
  rep.trial = item.trial;
  return rep;
}

std::vector<InequalityReport> run_suite(const RunConfig& config) {
  config.validate();
  const std::vector<WorkItem> items = plan_items(config);
  std::vector<InequalityReport> reports(items.size());

  int jobs = config.jobs;
#ifdef _OPENMP
  if (jobs == 0) jobs = omp_get_max_threads();
#else
  jobs = 1;
#endif

  if (jobs == 1) {
    // Serial reference path: kept deliberately plain; the parallel loop
    // below must produce identical output.
    for (std::size_t i = 0; i < items.size(); ++i) {
      reports[i] = evaluate_item(config, items[i]);
    }
    return reports;
  }

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16) num_threads(jobs)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(items.size()); ++i) {
    reports[static_cast<std::size_t>(i)] =
        evaluate_item(config, items[static_cast<std::size_t>(i)]);
  }
#endif
  return reports;
}

RunSummary summarize(const std::vector<InequalityReport>& reports) {
  RunSummary s;
  s.lines = reports.size();
  for (const auto& rep : reports) {
    if (!rep.error.empty()) {
      ++s.errors;
      continue;
    }
    if (!rep.holds) ++s.violations;
    if (!s.have_worst || rep.slack < s.worst_slack) {
      s.worst_slack = rep.slack;
      s.worst = rep;
      s.have_worst = true;
    }
  }
  return s;
}

int run_and_report(const RunConfig& config, const std::string& command_line,
                   std::ostream& report_out, std::ostream& summary_out,
                   bool header_timestamp) {
  const std::vector<InequalityReport> reports = run_suite(config);
  if (config.format == ReportFormat::JsonLines) {
    write_jsonl_header(report_out, command_line, config.seed,
                       config.grid_name, header_timestamp);
    for (const auto& rep : reports) write_report_jsonl(report_out, rep);
  } else {
    write_csv_header(report_out);
    for (const auto& rep : reports) write_report_csv(report_out, rep);
  }

  const RunSummary s = summarize(reports);
  summary_out << "suite: " << command_line << "\n"
              << "lines: " << s.lines << "  violations: " << s.violations
              << "  accuracy-errors: " << s.errors << "\n";
  if (s.have_worst) {
    summary_out << "worst slack: " << format_double(s.worst_slack) << " ("
                << s.worst.name << " q=" << format_double(s.worst.q)
                << " r=" << format_double(s.worst.r) << " dim=" << s.worst.dim
                << " seed=" << s.worst.seed << " trial=" << s.worst.trial
                << ")\n";
  }
  if (s.violations > 0) {
    summary_out << "replay the worst violation with --seed " << s.worst.seed
                << " and trial " << s.worst.trial << "\n";
  }
  if (config.command == Command::VerifyConvexity) {
    summary_out << "note: midpoint probing can only falsify a convexity "
                   "claim, never certify it\n";
  }
  summary_out << "result: " << (s.pass() ? "PASS" : "FAIL") << "\n";
  return s.pass() ? 0 : 1;
}

}  // namespace qpb
