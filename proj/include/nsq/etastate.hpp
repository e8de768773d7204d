#pragma once

#include "nsq/fock.hpp"
#include "nsq/schwinger.hpp"

namespace nsq {

// The interferometrically squeezed N-photon family is indexed by
//   eta = N gamma / alpha^2,
// the pair/coherent admixture strength. Amplitudes carry powers of
// eta / 2N, so eta must stay below 2N; eta > 1 is legal but the
// quadrature-squeezing approximations stop applying there.
void validate_eta(int n_total, double eta);

// eta from the physical source parameters. alpha > 0, gamma in [0, 1).
double eta_from_inputs(double alpha, double gamma, int n_total);

// The N-photon sector state with pair admixture eta:
//   amps[2k] proportional to (-1)^k (1/k!) sqrt((2k)! N!/(N-2k)!) (eta/2N)^k,
// odd entries zero, normalized, amps[0] > 0. Evaluated in log space.
NPhotonState eta_state(int n_total, double eta);

// Squared normalization constant |C_N|^2 = 1 / sum_k t_k^2 of the series
// above; equivalently the weight of the k = 0 component.
double normalization_c_sq(int n_total, double eta);

// How well the state solves its defining sideband balance
//   (1 + D) j2 |psi> = -i (1 - D) j3 |psi>,  D = eta (N - b'b) / N.
// Returns ||LHS - RHS|| / max(||LHS||, 1). The floor matters: at points
// where both sides vanish identically (N = 2, eta = 2) a bare ||LHS||
// denominator turns roundoff into 1.0.
double defining_relation_residual(const NPhotonState& state, double eta,
                                  const JOperatorSet& ops);

// <b'b> on the sector state.
double mean_pair_photons(const NPhotonState& state, const JOperatorSet& ops);

// Large-N estimate eta^2 / (1 - eta^2); domain error at eta >= 1.
double approx_mean_pair_photons(double eta);

// Probability that the coherent (x) squeezed source emits exactly N photons
// through the interference channel:
//   sqrt(1 - gamma^2) e^{-alpha^2} (alpha^{2N} / N!) / |C_N|^2.
double generation_probability_sq(double alpha, double gamma, int n_total);

// Interference-channel vs pure-pair-channel N-photon odds, in the
// gamma -> 0 limit where the ratio depends on eta alone.
struct PairRatio {
  double exact_limit;  // (N / eta)^N / (N! |C_N|^2)
  double stirling;     // (1 / sqrt(2 pi N)) (e / eta)^N / |C_N|^2
};
PairRatio ratio_sq_pair(int n_total, double eta);

// One-stop bundle for a concrete (alpha, gamma) source.
struct GenerationStats {
  double c_n_sq = 0.0;          // |C_N|^2, in (0, 1]
  double p_sq = 0.0;            // interference channel
  double p_pair = 0.0;          // pure pair channel
  double ratio = 0.0;           // p_sq / p_pair, +inf when gamma == 0
  double ratio_stirling = 0.0;  // same quantity, Stirling form
};
GenerationStats generation_stats(double alpha, double gamma, int n_total);

// Overlap-style proximity to (|N;0> + |0;N>)/sqrt(2) in the mode basis,
// (|amps[0]| + |amps[N]|)^2 / 2. This is 1/2 at eta = 0 and decreases;
// mode-basis amplitudes never concentrate on the two edge kets.
double noon_fidelity(const NPhotonState& state);

// Same proximity measured against the extremal j3 eigenvectors, i.e. in
// the 50/50-split path basis where large-eta states actually pile up on
// the two edges. This is the number that approaches 1 near eta = 2.
double path_noon_fidelity(const NPhotonState& state, const JOperatorSet& ops);

}  // namespace nsq
