#include "qpb/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace qpb {

namespace {

// Truncation half-width for the sinh map: the weaker of the two decay rates
// must reach e^-45 at the window edge.
double sinh_window(double decay_zero, double decay_inf) {
  const double weakest = std::min(decay_zero, decay_inf);
  const double reach = 45.0 / std::max(weakest, 1e-3);
  return std::max(std::asinh(reach), 3.6);
}

template <typename Accumulate>
void for_each_node(QuadratureSpec::Transform transform, int n, double window,
                   Accumulate&& acc) {
  if (transform == QuadratureSpec::Transform::TanhSinh) {
    const double h = 2.0 * window / n;
    for (int k = 0; k < n; ++k) {
      const double u = -window + (k + 0.5) * h;
      const double t = std::sinh(u);
      const double w = h * std::cosh(u);
      acc(t, w);
    }
  } else {
    // lambda = v/(1-v) on (0,1), midpoint rule. Weight relative to
    // fhat(t) = lambda * f(lambda): dv/(1-v)^2 / lambda = dv/(v(1-v)).
    const double h = 1.0 / n;
    for (int k = 0; k < n; ++k) {
      const double v = (k + 0.5) * h;
      const double t = std::log(v) - std::log1p(-v);
      const double w = h / (v * (1.0 - v));
      acc(t, w);
    }
  }
}

}  // namespace

ScalarQuadratureResult integrate_half_line(
    const std::function<double(double)>& fhat, double decay_zero,
    double decay_inf, const QuadratureSpec& spec) {
  spec.validate();
  const double window = sinh_window(decay_zero, decay_inf);

  auto level = [&](int n) {
    double sum = 0.0;
    for_each_node(spec.transform, n, window,
                  [&](double t, double w) { sum += w * fhat(t); });
    return sum;
  };

  ScalarQuadratureResult out;
  int n = spec.nodes;
  double prev = level(n);
  for (int pass = 0; pass < 2; ++pass) {
    n *= 2;
    const double cur = level(n);
    out.value = cur;
    out.est_error = std::abs(cur - prev);
    out.nodes_used = n;
    if (out.est_error <= spec.abs_tol) {
      out.converged = true;
      return out;
    }
    prev = cur;
  }
  out.converged = out.est_error <= spec.abs_tol;
  return out;
}

TableQuadratureResult resolvent_pair_table(const Eigen::VectorXd& eigs,
                                           double p,
                                           const QuadratureSpec& spec) {
  spec.validate();
  if (!(p > -1.0 && p < 1.0)) {
    throw ParameterError("resolvent_pair_table requires -1 < p < 1");
  }
  if (!(eigs.minCoeff() > 0.0)) {
    throw DomainError("resolvent_pair_table requires positive eigenvalues");
  }
  const Eigen::Index d = eigs.size();
  // Transformed integrand decays like e^{(p+1)t} at -inf and e^{(p-1)t} at
  // +inf.
  const double window = sinh_window(p + 1.0, 1.0 - p);

  Eigen::VectorXd log_eigs(d);
  for (Eigen::Index i = 0; i < d; ++i) log_eigs(i) = std::log(eigs(i));

  auto level = [&](int n) {
    Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(d, d);
    Eigen::VectorXd v(d);
    for_each_node(spec.transform, n, window, [&](double t, double w) {
      if (std::abs(t) <= 30.0) {
        const double lam = std::exp(t);
        const double c = w * std::exp((p + 1.0) * t);
        for (Eigen::Index i = 0; i < d; ++i) v(i) = 1.0 / (eigs(i) + lam);
        sum.selfadjointView<Eigen::Lower>().rankUpdate(v, c);
      } else {
        // log-space branch: contribution_ij = w * exp((p+1)t - L_i - L_j)
        // with L_i = log(eigs_i + e^t).
        const double half = 0.5 * ((p + 1.0) * t + std::log(w));
        bool any = false;
        for (Eigen::Index i = 0; i < d; ++i) {
          double li = t > 0.0 ? t + std::log1p(eigs(i) * std::exp(-t))
                              : log_eigs(i) + std::log1p(std::exp(t) / eigs(i));
          const double e = half - li;
          v(i) = e > -350.0 ? std::exp(e) : 0.0;
          any = any || v(i) != 0.0;
        }
        if (any) sum.selfadjointView<Eigen::Lower>().rankUpdate(v, 1.0);
      }
    });
    return Eigen::MatrixXd(sum.selfadjointView<Eigen::Lower>());
  };

  TableQuadratureResult out;
  int n = spec.nodes;
  Eigen::MatrixXd prev = level(n);
  for (int pass = 0; pass < 2; ++pass) {
    n *= 2;
    Eigen::MatrixXd cur = level(n);
    out.est_error = (cur - prev).cwiseAbs().maxCoeff();
    out.table = std::move(cur);
    out.nodes_used = n;
    if (out.est_error <= spec.abs_tol) {
      out.converged = true;
      return out;
    }
    prev = out.table;
  }
  out.converged = out.est_error <= spec.abs_tol;
  return out;
}

}  // namespace qpb
