#pragma once

#include <Eigen/Dense>
#include <complex>

namespace nsq {

// Hard cap on single-mode truncation; amplitudes at n = 512 are far below
// double precision for any coherent/squeezed input this tool accepts.
inline constexpr int kModeCutoffCeiling = 512;

// Photon-number expansion of one mode, truncated at n_max.
// amps[n] multiplies |n>. Truncation may lose norm; squaredNorm() <= 1.
struct ModeAmplitudes {
  int n_max = 0;
  Eigen::VectorXcd amps;

  double norm_sq() const { return amps.squaredNorm(); }
};

// Pure state of the two-mode sector with exactly n_total photons.
// amps[k] multiplies |n_total - k; k>, k = photon number in mode b.
// Factory routines keep the norm at 1 and the global phase fixed so that
// amps[0] is real and >= 0 whenever it is nonzero.
struct NPhotonState {
  int n_total = 0;
  Eigen::VectorXcd amps;
};

// Result of projecting a two-mode product state onto the n_total sector.
struct PostSelection {
  NPhotonState state;
  double probability = 0.0;
};

// |alpha|^2-mean coherent state coefficients alpha^n / sqrt(n!) times
// exp(-|alpha|^2 / 2), evaluated in log space so large n stays finite.
ModeAmplitudes coherent_amplitudes(std::complex<double> alpha, int n_max);

// Squeezed vacuum with real squeezing parameter gamma in [0, 1):
// amps[2k] = (1 - gamma^2)^{1/4} (-gamma)^k sqrt((2k)!) / (2^k k!),
// odd entries zero. The alternating sign is physical and must survive
// any downstream interference arithmetic.
ModeAmplitudes squeezed_vacuum_amplitudes(double gamma, int n_max);

// Truncation heuristic: generous tail above the coherent mean, never
// below the sector being post-selected. Clamped to kModeCutoffCeiling.
int default_mode_cutoff(double alpha_sq, int n_total);

// Project a (coherent in a) x (squeezed in b) style product onto the
// n_total-photon sector and renormalize. probability is the norm^2 of
// the projected piece. Throws nsq::numeric_error if the sector is empty.
PostSelection post_select_n(const ModeAmplitudes& mode_a,
                            const ModeAmplitudes& mode_b, int n_total);

// Probability that a parametric pair source alone yields n_photons
// photons: (1 - gamma^2) gamma^n. Odd n is kept verbatim even though a
// two-mode squeezer only populates even numbers; callers comparing
// generation channels rely on this exact form.
double pair_generation_probability(double gamma, int n_photons);

}  // namespace nsq
