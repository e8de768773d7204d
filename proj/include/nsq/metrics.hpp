#pragma once

#include "nsq/etastate.hpp"

namespace nsq {

// Phase sensitivity of the j2 estimator at the phi = 0 operating point:
//   delta_phi^2 = Var(j2) / <j1>^2.
// Throws nsq::numeric_error when <j1> vanishes (slope-free estimator).
double phase_error(const NPhotonState& state, const JOperatorSet& ops);

// Enhancement exponent q with N delta_phi^2 = N^{1-2q}:
//   q = ln(1 / (N delta_phi^2)) / (2 ln N) ... written out:
//   q = ln(1 / (N delta_phi^2)) / ln(N^2). q = 0 is the shot-noise line,
//   q = 1/2 the Heisenberg line. Undefined at N = 1.
double q_enhancement(int n_total, double delta_phi_sq);

// Cramer-Rao floor for phase estimation with generator j3:
//   1 / (4 Var(j3)). Throws nsq::numeric_error when Var(j3) = 0.
double cramer_rao(const NPhotonState& state, const JOperatorSet& ops);

// Everything the sensitivity tables need, computed in one pass.
// q is NaN at n_total = 1 (the exponent has no meaning there).
struct SensitivityReport {
  int n_total = 0;
  double eta = 0.0;  // NaN when the state did not come from the eta family
  double j1_mean = 0.0;
  double dj2_sq = 0.0;
  double dj3_sq = 0.0;
  double delta_phi_sq = 0.0;
  double q = 0.0;
  double crb = 0.0;
  double squeeze_ratio = 0.0;  // sqrt(Var j2 / Var j3)
  double mean_pair_photons = 0.0;
};
SensitivityReport sensitivity_report(const NPhotonState& state,
                                     const JOperatorSet& ops, double eta);

// Small-admixture quadrature predictions and their validity window.
// The predictions blow up at eta = 1 and are reported as NaN from there
// on; the two bounds hold for every eta and are always filled in.
struct SqueezingPredictions {
  double predicted_squeeze_ratio = 0.0;  // (1 - eta) / (1 + eta)
  double predicted_pair_photons = 0.0;   // eta^2 / (1 - eta^2)
  bool approximation_valid = false;      // 1 - eta > 1 / sqrt(2N)
  double pair_photon_bound = 0.0;        // sqrt(N / 2)
  double phase_error_floor = 0.0;        // (2N)^{-3/2}
};
SqueezingPredictions squeezing_predictions(int n_total, double eta);

// First-order enhancement exponent for weak admixture:
//   q ~ (2 (N - 1) / ln N) (eta / N) ... valid for eta << 1.
double weak_limit_q(int n_total, double eta);

// Scan-plus-golden-section optimum over eta in [0, 1.5].
struct EtaOptimum {
  double eta = 0.0;
  double value = 0.0;
};
EtaOptimum min_phase_error(int n_total);
EtaOptimum max_q(int n_total);

}  // namespace nsq
