#pragma once

#include <Eigen/Dense>

#include "nsq/fock.hpp"

namespace nsq {

// Dense (N+1)^2 matrices stay cheap well past this; the cap mostly guards
// against accidental huge sector requests.
inline constexpr int kSectorCeiling = 200;

// Angular-momentum picture of the fixed-N two-mode sector (spin j = N/2):
//   j1 = (a'a - b'b)/2          population imbalance
//   j2 = (a'b + a b')/2         beam-splitter quadrature
//   j3 = -(i/2)(a'b - a b')     the phase generator used throughout
//   pair_number = b'b = (N/2) I - j1
// Basis: |N-k; k>, k ascending. All four matrices are Hermitian.
struct JOperatorSet {
  int n_total = 0;
  Eigen::MatrixXcd j1;
  Eigen::MatrixXcd j2;
  Eigen::MatrixXcd j3;
  Eigen::MatrixXcd pair_number;
};

// Eigen-decomposition of a Hermitian operator, eigenvalues ascending,
// eigenvector columns in matching order.
struct SpectralDecomposition {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXcd eigenvectors;
};

// Build the sector operators for 1 <= n_total <= kSectorCeiling.
JOperatorSet build_operators(int n_total);

// <state| op |state> for Hermitian op; the imaginary part must be noise
// and is checked, a substantial one means op was not Hermitian.
double expectation(const Eigen::MatrixXcd& op, const NPhotonState& state);

// Variance computed as ||(op - <op>) psi||^2, which cannot go negative.
double variance(const Eigen::MatrixXcd& op, const NPhotonState& state);

// Interferometer output quadrature cos(phi) j2 + sin(phi) j1.
Eigen::MatrixXcd rotated_j2(const JOperatorSet& ops, double phi);

// exp(-i phi j3) |state>. The global-phase convention of the input is
// left alone; rotation is exactly unitary through the eigenbasis of j3.
NPhotonState rotate_state(const JOperatorSet& ops, const NPhotonState& state,
                          double phi);

// Probabilities of the j2 outcomes m = -N/2 .. N/2 (ascending) after the
// phase rotation: p_m(phi) = |<m| exp(-i phi j3) |state>|^2.
Eigen::VectorXd output_distribution(const JOperatorSet& ops,
                                    const NPhotonState& state, double phi);

// Hermitian eigendecomposition; with snap_to_half_integers the eigenvalues
// are rounded to the nearest multiple of 1/2 when within 1e-8, which all
// sector operators here satisfy.
SpectralDecomposition spectral_decomposition(const Eigen::MatrixXcd& hermitian,
                                             bool snap_to_half_integers = false);

}  // namespace nsq
