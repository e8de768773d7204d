#include "nsq/fock.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nsq/errors.hpp"

namespace nsq {

namespace {

double log_factorial(int n) { return std::lgamma(static_cast<double>(n) + 1.0); }

void check_cutoff(int n_max) {
  if (n_max < 0) throw std::invalid_argument("mode cutoff must be >= 0");
  if (n_max > kModeCutoffCeiling)
    throw std::invalid_argument("mode cutoff exceeds ceiling of 512");
}

}  // namespace

ModeAmplitudes coherent_amplitudes(std::complex<double> alpha, int n_max) {
  check_cutoff(n_max);
  ModeAmplitudes mode;
  mode.n_max = n_max;
  mode.amps = Eigen::VectorXcd::Zero(n_max + 1);

  const double r = std::abs(alpha);
  if (r == 0.0) {
    mode.amps[0] = 1.0;
    return mode;
  }
  const double theta = std::arg(alpha);
  const double log_r = std::log(r);
  // c_n = exp(-r^2/2) r^n e^{i n theta} / sqrt(n!), assembled in log space
  // so n in the hundreds cannot overflow the factorial.
  for (int n = 0; n <= n_max; ++n) {
    const double log_mag = -0.5 * r * r + n * log_r - 0.5 * log_factorial(n);
    mode.amps[n] = std::polar(std::exp(log_mag), n * theta);
  }
  return mode;
}

ModeAmplitudes squeezed_vacuum_amplitudes(double gamma, int n_max) {
  check_cutoff(n_max);
  if (!(gamma >= 0.0 && gamma < 1.0))
    throw std::invalid_argument("squeezing parameter must lie in [0, 1)");

  ModeAmplitudes mode;
  mode.n_max = n_max;
  mode.amps = Eigen::VectorXcd::Zero(n_max + 1);
  mode.amps[0] = std::pow(1.0 - gamma * gamma, 0.25);
  if (gamma == 0.0) return mode;

  const double log_gamma = std::log(gamma);
  const double log_head = 0.25 * std::log(1.0 - gamma * gamma);
  // amps[2k] = (1-g^2)^{1/4} (-g)^k sqrt((2k)!) / (2^k k!); the sign
  // alternation is what interferes against the coherent admixture.
  for (int k = 1; 2 * k <= n_max; ++k) {
    const double log_mag = log_head + k * log_gamma +
                           0.5 * log_factorial(2 * k) -
                           k * std::log(2.0) - log_factorial(k);
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    mode.amps[2 * k] = sign * std::exp(log_mag);
  }
  return mode;
}

int default_mode_cutoff(double alpha_sq, int n_total) {
  if (alpha_sq < 0.0) throw std::invalid_argument("alpha_sq must be >= 0");
  const int from_mean = static_cast<int>(std::ceil(4.0 * alpha_sq + 30.0));
  return std::min(std::max(from_mean, n_total + 10), kModeCutoffCeiling);
}

PostSelection post_select_n(const ModeAmplitudes& mode_a,
                            const ModeAmplitudes& mode_b, int n_total) {
  if (n_total < 1) throw std::invalid_argument("n_total must be >= 1");
  if (mode_a.amps.size() != mode_a.n_max + 1 ||
      mode_b.amps.size() != mode_b.n_max + 1)
    throw std::invalid_argument("mode amplitude length disagrees with n_max");
  if (mode_a.n_max < n_total || mode_b.n_max < n_total)
    throw std::invalid_argument(
        "mode cutoffs must reach the post-selected sector");

  Eigen::VectorXcd sector(n_total + 1);
  for (int k = 0; k <= n_total; ++k)
    sector[k] = mode_a.amps[n_total - k] * mode_b.amps[k];

  const double prob = sector.squaredNorm();
  if (prob <= 0.0)
    throw numeric_error("post-selected sector carries zero weight");

  PostSelection result;
  result.probability = prob;
  result.state.n_total = n_total;
  // Fix the global phase so the first nonvanishing component (preferring
  // k = 0) is real positive; downstream sign checks depend on it.
  int pivot = 0;
  while (pivot <= n_total && std::abs(sector[pivot]) == 0.0) ++pivot;
  const std::complex<double> phase =
      sector[pivot] / std::abs(sector[pivot]);
  result.state.amps = (sector / phase) / std::sqrt(prob);
  return result;
}

double pair_generation_probability(double gamma, int n_photons) {
  if (n_photons < 2)
    throw std::invalid_argument("pair channel needs n_photons >= 2");
  if (!(gamma >= 0.0 && gamma < 1.0))
    throw std::invalid_argument("squeezing parameter must lie in [0, 1)");
  return (1.0 - gamma * gamma) * std::pow(gamma, n_photons);
}

}  // namespace nsq
