#include "nsq/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "nsq/errors.hpp"

namespace nsq {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

// Grid-then-golden-section minimizer over eta in [lo, hi]. The 0.005 grid
// localizes the basin (every curve here is smooth and unimodal near its
// optimum); golden section then tightens eta to 1e-4.
struct ScanMinimum {
  double eta;
  double value;
};

ScanMinimum minimize_on_grid(const std::function<double(double)>& f,
                             double lo, double hi, double step,
                             double eta_tol) {
  int best_i = 0;
  double best_v = std::numeric_limits<double>::infinity();
  const int count = static_cast<int>(std::floor((hi - lo) / step + 0.5)) + 1;
  for (int i = 0; i < count; ++i) {
    const double v = f(lo + i * step);
    if (v < best_v) {
      best_v = v;
      best_i = i;
    }
  }
  double a = lo + (best_i > 0 ? (best_i - 1) * step : 0.0);
  double b = std::min(lo + (best_i + 1) * step, hi);

  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > eta_tol) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    }
  }
  const double eta = 0.5 * (a + b);
  return {eta, f(eta)};
}

}  // namespace

double phase_error(const NPhotonState& state, const JOperatorSet& ops) {
  const double j1_mean = expectation(ops.j1, state);
  if (std::abs(j1_mean) < 1e-12)
    throw numeric_error(
        "estimator slope <j1> vanishes; phase error undefined here");
  return variance(ops.j2, state) / (j1_mean * j1_mean);
}

double q_enhancement(int n_total, double delta_phi_sq) {
  if (n_total < 2)
    throw std::invalid_argument("enhancement exponent needs n_total >= 2");
  if (!(delta_phi_sq > 0.0))
    throw std::invalid_argument("delta_phi_sq must be > 0");
  return std::log(1.0 / (n_total * delta_phi_sq)) / std::log(n_total);
}

double cramer_rao(const NPhotonState& state, const JOperatorSet& ops) {
  const double dj3_sq = variance(ops.j3, state);
  // A j3 eigenvector never yields an exact 0 in floats, only roundoff of
  // order (N*eps)^2. Anything under this scale-aware floor is zero at
  // working precision and the bound is undefined there.
  const double n = ops.n_total;
  if (dj3_sq <= 1e-18 * std::max(1.0, n * n))
    throw numeric_error("generator variance vanishes; no phase information");
  return 1.0 / (4.0 * dj3_sq);
}

SensitivityReport sensitivity_report(const NPhotonState& state,
                                     const JOperatorSet& ops, double eta) {
  SensitivityReport report;
  report.n_total = ops.n_total;
  report.eta = eta;
  report.j1_mean = expectation(ops.j1, state);
  report.dj2_sq = variance(ops.j2, state);
  report.dj3_sq = variance(ops.j3, state);
  report.delta_phi_sq = phase_error(state, ops);
  report.q = (ops.n_total >= 2)
                 ? q_enhancement(ops.n_total, report.delta_phi_sq)
                 : kNan;
  report.crb = cramer_rao(state, ops);
  report.squeeze_ratio = std::sqrt(report.dj2_sq / report.dj3_sq);
  report.mean_pair_photons = mean_pair_photons(state, ops);
  return report;
}

SqueezingPredictions squeezing_predictions(int n_total, double eta) {
  if (n_total < 1) throw std::invalid_argument("n_total must be >= 1");
  if (!(eta >= 0.0)) throw std::invalid_argument("eta must be >= 0");

  SqueezingPredictions pred;
  pred.pair_photon_bound = std::sqrt(0.5 * n_total);
  pred.phase_error_floor = std::pow(2.0 * n_total, -1.5);
  pred.approximation_valid = 1.0 - eta > 1.0 / std::sqrt(2.0 * n_total);
  if (eta < 1.0) {
    pred.predicted_squeeze_ratio = (1.0 - eta) / (1.0 + eta);
    pred.predicted_pair_photons = eta * eta / (1.0 - eta * eta);
  } else {
    // Past eta = 1 the small-admixture picture has no prediction to
    // offer; only the bounds remain meaningful.
    pred.predicted_squeeze_ratio = kNan;
    pred.predicted_pair_photons = kNan;
    pred.approximation_valid = false;
  }
  return pred;
}

double weak_limit_q(int n_total, double eta) {
  if (n_total < 2)
    throw std::invalid_argument("enhancement exponent needs n_total >= 2");
  if (!(eta >= 0.0)) throw std::invalid_argument("eta must be >= 0");
  return 2.0 * (n_total - 1) / std::log(n_total) * eta / n_total;
}

EtaOptimum min_phase_error(int n_total) {
  const JOperatorSet ops = build_operators(n_total);
  const auto objective = [&](double eta) {
    return phase_error(eta_state(n_total, eta), ops);
  };
  const ScanMinimum m = minimize_on_grid(objective, 0.0, 1.5, 0.005, 1e-4);
  return {m.eta, m.value};
}

EtaOptimum max_q(int n_total) {
  if (n_total < 2)
    throw std::invalid_argument("enhancement exponent needs n_total >= 2");
  const JOperatorSet ops = build_operators(n_total);
  const auto objective = [&](double eta) {
    return -q_enhancement(n_total, phase_error(eta_state(n_total, eta), ops));
  };
  const ScanMinimum m = minimize_on_grid(objective, 0.0, 1.5, 0.005, 1e-4);
  return {m.eta, -m.value};
}

}  // namespace nsq
