#include <cmath>
#include <numbers>
#include <numeric>

#include "qregsim/algorithms.hpp"
#include "qregsim/config.hpp"

namespace qreg {

double WalkDistribution::at(long position) const {
  const long offset = position + static_cast<long>(steps);
  if (offset < 0 || offset >= static_cast<long>(probabilities.size())) return 0.0;
  return probabilities[static_cast<std::size_t>(offset)];
}

double WalkDistribution::total() const {
  return std::accumulate(probabilities.begin(), probabilities.end(), 0.0);
}

double WalkDistribution::mean() const {
  double m = 0.0;
  for (std::size_t i = 0; i < probabilities.size(); ++i) {
    m += (static_cast<double>(i) - steps) * probabilities[i];
  }
  return m;
}

double WalkDistribution::stddev() const {
  const double m = mean();
  double var = 0.0;
  for (std::size_t i = 0; i < probabilities.size(); ++i) {
    const double d = static_cast<double>(i) - steps - m;
    var += d * d * probabilities[i];
  }
  return std::sqrt(var);
}

Coin symmetric_coin() {
  const double h = std::numbers::sqrt2 / 2.0;
  return {Amplitude{h, 0.0}, Amplitude{0.0, h}};
}

WalkDistribution quantum_walk_line(unsigned steps, const Coin& coin_init) {
  for (const auto& c : coin_init) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw std::invalid_argument("coin amplitudes must be finite");
    }
  }
  const double norm2 = std::norm(coin_init[0]) + std::norm(coin_init[1]);
  if (std::abs(norm2 - 1.0) > kNormTolerance) throw NormError(norm2);

  const GateMatrix coin = matrix_of(Gate::hadamard());
  const std::size_t width = 2 * static_cast<std::size_t>(steps) + 1;
  // Amplitudes of |position> ⊗ |coin>, position p stored at p + steps.
  std::vector<Amplitude> down(width), up(width), next_down(width), next_up(width);
  down[steps] = coin_init[0];
  up[steps] = coin_init[1];

  for (unsigned t = 0; t < steps; ++t) {
    std::fill(next_down.begin(), next_down.end(), Amplitude{});
    std::fill(next_up.begin(), next_up.end(), Amplitude{});
    for (std::size_t p = 0; p < width; ++p) {
      if (down[p] == Amplitude{} && up[p] == Amplitude{}) continue;
      const Amplitude c0 = coin(0, 0) * down[p] + coin(0, 1) * up[p];
      const Amplitude c1 = coin(1, 0) * down[p] + coin(1, 1) * up[p];
      // Reachable positions after t < steps moves never touch the edges.
      next_down[p - 1] += c0;
      next_up[p + 1] += c1;
    }
    std::swap(down, next_down);
    std::swap(up, next_up);
  }

  WalkDistribution dist{steps, std::vector<double>(width)};
  for (std::size_t p = 0; p < width; ++p) dist.probabilities[p] = std::norm(down[p]) + std::norm(up[p]);
  return dist;
}

WalkDistribution classical_walk_line(unsigned steps) {
  const std::size_t width = 2 * static_cast<std::size_t>(steps) + 1;
  WalkDistribution dist{steps, std::vector<double>(width, 0.0)};
  // P(position 2k - t) = C(t, k) / 2^t, in log space to avoid overflow.
  const double n = steps;
  for (unsigned k = 0; k <= steps; ++k) {
    const double log_p = std::lgamma(n + 1) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1) -
                         n * std::numbers::ln2;
    dist.probabilities[2 * static_cast<std::size_t>(k)] = std::exp(log_p);
  }
  return dist;
}

}  // namespace qreg
