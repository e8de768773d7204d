#include <doctest.h>

#include <cmath>
#include <numbers>

#include "nsq/scan.hpp"

using namespace nsq;

TEST_CASE("linear grid covers the range inclusively") {
  const std::vector<double> grid = linear_grid(0.0, 1.5, 0.005);
  REQUIRE(grid.size() == 301);
  CHECK(grid.front() == 0.0);
  CHECK(grid.back() == doctest::Approx(1.5).epsilon(1e-12));
  for (size_t i = 1; i < grid.size(); ++i)
    CHECK(grid[i] - grid[i - 1] == doctest::Approx(0.005).epsilon(1e-9));

  const std::vector<double> single = linear_grid(0.2, 0.2, 0.1);
  REQUIRE(single.size() == 1);
  CHECK(single[0] == 0.2);

  CHECK_THROWS_AS(linear_grid(0.0, 1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(linear_grid(1.0, 0.0, 0.1), std::invalid_argument);
}

TEST_CASE("default phase grid spans one period in equal bins") {
  const std::vector<double> grid = default_phase_grid();
  REQUIRE(grid.size() == 20);
  CHECK(grid[0] == 0.0);
  CHECK(grid[1] == doctest::Approx(std::numbers::pi / 10.0).epsilon(1e-15));
  CHECK(grid.back() < 2.0 * std::numbers::pi);
  CHECK_THROWS_AS(default_phase_grid(0), std::invalid_argument);
}

TEST_CASE("eta scan rows carry the full metric set") {
  const std::vector<EtaScanRow> rows = eta_scan(8, {0.0, 0.427, 0.85});
  REQUIRE(rows.size() == 3);

  CHECK(rows[0].eta == 0.0);
  CHECK(rows[0].delta_phi_sq == doctest::Approx(0.125).epsilon(1e-13));
  CHECK(rows[0].q == doctest::Approx(0.0));
  CHECK(std::isinf(rows[0].ratio_sq_pair));
  CHECK(rows[0].c_n_sq == 1.0);

  CHECK(rows[1].c_n_sq == doctest::Approx(0.921634756099993).epsilon(1e-12));
  CHECK(rows[2].delta_phi_sq ==
        doctest::Approx(0.0432938880093799).epsilon(1e-10));
  CHECK(rows[2].mean_pair_photons ==
        doctest::Approx(0.717943233865078).epsilon(1e-12));

  // row factory and scan agree exactly
  const JOperatorSet ops = build_operators(8);
  const EtaScanRow lone = eta_row(8, 0.427, ops);
  CHECK(lone.delta_phi_sq == rows[1].delta_phi_sq);
  CHECK(lone.ratio_sq_pair == rows[1].ratio_sq_pair);
}

TEST_CASE("eta scan is deterministic") {
  const std::vector<double> grid = linear_grid(0.0, 1.0, 0.01);
  const std::vector<EtaScanRow> a = eta_scan(6, grid);
  const std::vector<EtaScanRow> b = eta_scan(6, grid);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].eta == b[i].eta);
    CHECK(a[i].delta_phi_sq == b[i].delta_phi_sq);
    CHECK(a[i].q == b[i].q);
    CHECK(a[i].ratio_sq_pair == b[i].ratio_sq_pair);
  }
}

TEST_CASE("grid refinement moves the scanned minimum by less than a step") {
  const auto argmin = [](const std::vector<EtaScanRow>& rows) {
    size_t best = 0;
    for (size_t i = 1; i < rows.size(); ++i)
      if (rows[i].delta_phi_sq < rows[best].delta_phi_sq) best = i;
    return rows[best].eta;
  };
  const double coarse = argmin(eta_scan(8, linear_grid(0.0, 1.5, 0.01)));
  const double fine = argmin(eta_scan(8, linear_grid(0.0, 1.5, 0.005)));
  CHECK(std::abs(coarse - fine) < 0.01);
}

TEST_CASE("phase scan reproduces the rotated-mean identity") {
  const std::vector<PhaseScanRow> rows =
      phase_scan(8, 0.85, default_phase_grid());
  REQUIRE(rows.size() == 20);
  CHECK(rows[0].phi == 0.0);

  const JOperatorSet ops = build_operators(8);
  const double j1_mean = 3.28205676613492;
  for (const PhaseScanRow& row : rows) {
    REQUIRE(row.probabilities.size() == 9);
    CHECK(row.probabilities.sum() == doctest::Approx(1.0).epsilon(1e-10));
    // first moment against the quadrature mean
    double first = 0.0;
    for (int i = 0; i < 9; ++i)
      first += (-4.0 + i) * row.probabilities[i];
    CHECK(std::abs(first - row.mean_j2) < 1e-10);
    // even-only amplitudes make <j2> vanish, so the mean is sin(phi)<j1>
    CHECK(row.mean_j2 ==
          doctest::Approx(std::sin(row.phi) * j1_mean).epsilon(1e-9));
  }
}

TEST_CASE("phase scan at the dark quadrature keeps the parity zeros") {
  const std::vector<PhaseScanRow> rows =
      phase_scan(8, 0.85, {std::numbers::pi / 2.0});
  REQUIRE(rows.size() == 1);
  const Eigen::VectorXd& p = rows[0].probabilities;
  // interior odd-m outcomes are forbidden: the rotated state keeps the
  // pair structure, leaving zeros between the populated outcomes
  for (int i = 1; i < 8; i += 2) CHECK(p[i] < 1e-12);
  CHECK(p[8] == doctest::Approx(0.7114269251119552).epsilon(1e-9));
  // a non-edge local minimum sits well below its neighbours
  bool found_dip = false;
  for (int i = 1; i < 8; ++i)
    if (p[i] < 0.5 * p[i - 1] && p[i] < 0.5 * p[i + 1]) found_dip = true;
  CHECK(found_dip);
}

TEST_CASE("table of generation odds and sensitivities") {
  const std::vector<Table1Entry> table = table1();
  REQUIRE(table.size() == 18);
  // n runs outermost, eta innermost
  CHECK(table[0].n_total == 3);
  CHECK(table[0].eta == doctest::Approx(1.0 / 3.0));
  CHECK(table[2].eta == doctest::Approx(1.0));
  CHECK(table[17].n_total == 8);

  CHECK(table[0].ratio_sq_pair == doctest::Approx(126.0).epsilon(1e-12));
  CHECK(table[0].n_delta_phi_sq == doctest::Approx(0.6825).epsilon(1e-12));
  // N=4, eta=1 entry is rational too
  CHECK(table[5].ratio_sq_pair ==
        doctest::Approx(361.0 / 24.0).epsilon(1e-12));

  for (const Table1Entry& e : table) {
    CHECK(e.ratio_sq_pair > 1.0);
    CHECK(e.n_delta_phi_sq > 0.3);
    CHECK(e.n_delta_phi_sq < 1.0);
  }
}

TEST_CASE("table accepts custom axes") {
  const std::vector<Table1Entry> table = table1({0.85}, {8});
  REQUIRE(table.size() == 1);
  CHECK(table[0].n_total == 8);
  CHECK(table[0].n_delta_phi_sq ==
        doctest::Approx(8.0 * 0.0432938880093799).epsilon(1e-9));
}
