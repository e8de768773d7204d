#include "nsq/schwinger.hpp"

#include <cmath>
#include <stdexcept>

#include "nsq/errors.hpp"

namespace nsq {

namespace {

using std::complex;
const complex<double> kI{0.0, 1.0};

void check_state(const Eigen::MatrixXcd& op, const NPhotonState& state) {
  if (state.amps.size() != op.rows())
    throw std::invalid_argument("state dimension disagrees with operator");
}

}  // namespace

JOperatorSet build_operators(int n_total) {
  if (n_total < 1) throw std::invalid_argument("n_total must be >= 1");
  if (n_total > kSectorCeiling)
    throw std::invalid_argument("n_total exceeds sector ceiling of 200");

  const int dim = n_total + 1;
  JOperatorSet ops;
  ops.n_total = n_total;
  ops.j1 = Eigen::MatrixXcd::Zero(dim, dim);
  ops.j2 = Eigen::MatrixXcd::Zero(dim, dim);
  ops.j3 = Eigen::MatrixXcd::Zero(dim, dim);
  ops.pair_number = Eigen::MatrixXcd::Zero(dim, dim);

  const double half_n = 0.5 * n_total;
  for (int k = 0; k < dim; ++k) {
    ops.j1(k, k) = half_n - k;
    ops.pair_number(k, k) = k;
  }
  // a'b lowers k by one; both ladder products carry sqrt((N-k)(k+1))
  // between neighbours k and k+1.
  for (int k = 0; k + 1 < dim; ++k) {
    const double t = 0.5 * std::sqrt(static_cast<double>(n_total - k) *
                                     (k + 1));
    ops.j2(k, k + 1) = t;
    ops.j2(k + 1, k) = t;
    ops.j3(k, k + 1) = -kI * t;
    ops.j3(k + 1, k) = kI * t;
  }
  return ops;
}

double expectation(const Eigen::MatrixXcd& op, const NPhotonState& state) {
  check_state(op, state);
  const complex<double> value = state.amps.dot(op * state.amps);
  if (std::abs(value.imag()) > 1e-9 * (1.0 + std::abs(value.real())))
    throw std::invalid_argument(
        "expectation has a substantial imaginary part; operator not Hermitian");
  return value.real();
}

double variance(const Eigen::MatrixXcd& op, const NPhotonState& state) {
  check_state(op, state);
  const double mean = expectation(op, state);
  const Eigen::VectorXcd centered = op * state.amps - mean * state.amps;
  return centered.squaredNorm();
}

Eigen::MatrixXcd rotated_j2(const JOperatorSet& ops, double phi) {
  return std::cos(phi) * ops.j2 + std::sin(phi) * ops.j1;
}

SpectralDecomposition spectral_decomposition(const Eigen::MatrixXcd& hermitian,
                                             bool snap_to_half_integers) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hermitian);
  if (solver.info() != Eigen::Success)
    throw numeric_error("eigendecomposition failed to converge");

  SpectralDecomposition dec;
  dec.eigenvalues = solver.eigenvalues();
  dec.eigenvectors = solver.eigenvectors();
  if (snap_to_half_integers) {
    for (int i = 0; i < dec.eigenvalues.size(); ++i) {
      const double snapped = 0.5 * std::round(2.0 * dec.eigenvalues[i]);
      if (std::abs(snapped - dec.eigenvalues[i]) <= 1e-8)
        dec.eigenvalues[i] = snapped;
    }
  }
  return dec;
}

NPhotonState rotate_state(const JOperatorSet& ops, const NPhotonState& state,
                          double phi) {
  check_state(ops.j3, state);
  const SpectralDecomposition dec = spectral_decomposition(ops.j3, true);
  // exp(-i phi j3) through the eigenbasis; exactly unitary up to roundoff.
  const Eigen::VectorXcd in_eigen = dec.eigenvectors.adjoint() * state.amps;
  Eigen::VectorXcd phased(in_eigen.size());
  for (int i = 0; i < in_eigen.size(); ++i)
    phased[i] = std::polar(1.0, -phi * dec.eigenvalues[i]) * in_eigen[i];

  NPhotonState rotated;
  rotated.n_total = state.n_total;
  rotated.amps = dec.eigenvectors * phased;
  return rotated;
}

Eigen::VectorXd output_distribution(const JOperatorSet& ops,
                                    const NPhotonState& state, double phi) {
  const NPhotonState rotated = rotate_state(ops, state, phi);
  const SpectralDecomposition dec = spectral_decomposition(ops.j2, true);
  Eigen::VectorXd probs(dec.eigenvalues.size());
  for (int i = 0; i < dec.eigenvalues.size(); ++i)
    probs[i] = std::norm(dec.eigenvectors.col(i).dot(rotated.amps));
  return probs;
}

}  // namespace nsq
