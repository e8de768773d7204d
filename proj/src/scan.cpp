#include "nsq/scan.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace nsq {

namespace {

// Static partition over row indices. Rows are pure functions of their
// index writing disjoint slots, so the result is identical to the serial
// loop regardless of thread count.
void for_each_index(int count, const std::function<void(int)>& body) {
  const unsigned hw = std::thread::hardware_concurrency();
  const int workers =
      (count >= 64 && hw > 1) ? static_cast<int>(std::min<unsigned>(hw, 8)) : 1;
  if (workers == 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (int i = w; i < count; i += workers) body(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace

std::vector<double> linear_grid(double lo, double hi, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("grid step must be > 0");
  if (hi < lo) throw std::invalid_argument("grid range is empty");
  const int count = static_cast<int>(std::floor((hi - lo) / step + 0.5)) + 1;
  std::vector<double> grid;
  grid.reserve(count);
  for (int i = 0; i < count; ++i) {
    const double v = lo + i * step;
    if (v > hi + 0.5 * step) break;
    grid.push_back(v);
  }
  return grid;
}

std::vector<double> default_phase_grid(int bins) {
  if (bins < 1) throw std::invalid_argument("phase grid needs >= 1 bin");
  std::vector<double> grid(bins);
  for (int j = 0; j < bins; ++j)
    grid[j] = 2.0 * std::numbers::pi * j / bins;
  return grid;
}

EtaScanRow eta_row(int n_total, double eta, const JOperatorSet& ops) {
  const NPhotonState state = eta_state(n_total, eta);
  const SensitivityReport rep = sensitivity_report(state, ops, eta);
  EtaScanRow row;
  row.eta = eta;
  row.j1_mean = rep.j1_mean;
  row.dj2_sq = rep.dj2_sq;
  row.dj3_sq = rep.dj3_sq;
  row.delta_phi_sq = rep.delta_phi_sq;
  row.q = rep.q;
  row.crb = rep.crb;
  row.squeeze_ratio = rep.squeeze_ratio;
  row.mean_pair_photons = rep.mean_pair_photons;
  row.c_n_sq = normalization_c_sq(n_total, eta);
  row.ratio_sq_pair = (eta > 0.0)
                          ? ratio_sq_pair(n_total, eta).exact_limit
                          : std::numeric_limits<double>::infinity();
  return row;
}

std::vector<EtaScanRow> eta_scan(int n_total,
                                 const std::vector<double>& eta_grid) {
  const JOperatorSet ops = build_operators(n_total);
  std::vector<EtaScanRow> rows(eta_grid.size());
  for_each_index(static_cast<int>(eta_grid.size()), [&](int i) {
    rows[i] = eta_row(n_total, eta_grid[i], ops);
  });
  return rows;
}

std::vector<PhaseScanRow> phase_scan(int n_total, double eta,
                                     const std::vector<double>& phi_grid) {
  const JOperatorSet ops = build_operators(n_total);
  const NPhotonState state = eta_state(n_total, eta);
  std::vector<PhaseScanRow> rows(phi_grid.size());
  for_each_index(static_cast<int>(phi_grid.size()), [&](int i) {
    PhaseScanRow& row = rows[i];
    row.phi = phi_grid[i];
    row.probabilities = output_distribution(ops, state, row.phi);
    row.mean_j2 = expectation(rotated_j2(ops, row.phi), state);
  });
  return rows;
}

std::vector<Table1Entry> table1(const std::vector<double>& etas,
                                const std::vector<int>& n_values) {
  std::vector<Table1Entry> entries;
  entries.reserve(etas.size() * n_values.size());
  for (int n : n_values) {
    const JOperatorSet ops = build_operators(n);
    for (double eta : etas) {
      Table1Entry entry;
      entry.n_total = n;
      entry.eta = eta;
      entry.ratio_sq_pair = ratio_sq_pair(n, eta).exact_limit;
      entry.n_delta_phi_sq = n * phase_error(eta_state(n, eta), ops);
      entries.push_back(entry);
    }
  }
  return entries;
}

}  // namespace nsq
