#pragma once

#include <vector>

#include "nsq/metrics.hpp"

namespace nsq {

// One eta grid point; field order matches the CSV column order.
struct EtaScanRow {
  double eta = 0.0;
  double j1_mean = 0.0;
  double dj2_sq = 0.0;
  double dj3_sq = 0.0;
  double delta_phi_sq = 0.0;
  double q = 0.0;
  double crb = 0.0;
  double squeeze_ratio = 0.0;
  double mean_pair_photons = 0.0;
  double c_n_sq = 0.0;
  double ratio_sq_pair = 0.0;  // gamma -> 0 exact limit, +inf at eta = 0
};

// Output statistics at one interferometer phase.
struct PhaseScanRow {
  double phi = 0.0;
  Eigen::VectorXd probabilities;  // j2 outcomes m = -N/2 .. N/2 ascending
  double mean_j2 = 0.0;           // <cos(phi) j2 + sin(phi) j1>
};

// One (N, eta) cell of the generation-odds / sensitivity table.
struct Table1Entry {
  int n_total = 0;
  double eta = 0.0;
  double ratio_sq_pair = 0.0;
  double n_delta_phi_sq = 0.0;
};

// Inclusive [lo, hi] grid with the given step; the endpoint is kept when
// it lands within half a step. Throws std::invalid_argument on a
// non-positive step or an empty range.
std::vector<double> linear_grid(double lo, double hi, double step);

// bins equally spaced phases covering [0, 2pi).
std::vector<double> default_phase_grid(int bins = 20);

// Row per eta. Rows are independent and may be computed on several
// threads, but the returned order is the grid order and the numbers are
// identical either way.
std::vector<EtaScanRow> eta_scan(int n_total,
                                 const std::vector<double>& eta_grid);

std::vector<PhaseScanRow> phase_scan(int n_total, double eta,
                                     const std::vector<double>& phi_grid);

// Generation-odds table: for every n in n_values and eta in etas, the
// gamma -> 0 channel ratio and N delta_phi^2. n is the outer loop.
std::vector<Table1Entry> table1(
    const std::vector<double>& etas = {1.0 / 3.0, 0.5, 1.0},
    const std::vector<int>& n_values = {3, 4, 5, 6, 7, 8});

// Single fully-populated row, shared by the scan and the CLI report path.
EtaScanRow eta_row(int n_total, double eta, const JOperatorSet& ops);

}  // namespace nsq
