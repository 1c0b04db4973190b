#include <bit>
#include <cmath>
#include <numeric>

#include "qregsim/algorithms.hpp"
#include "qregsim/config.hpp"
#include "qregsim/measurement.hpp"

namespace qreg {

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  if (mod == 0 || mod > (std::uint64_t{1} << 32)) {
    throw std::invalid_argument("modulus must be in [1, 2^32]");
  }
  std::uint64_t result = 1 % mod;
  std::uint64_t b = base % mod;
  while (exp > 0) {
    if (exp & 1U) result = result * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return result;
}

ShorLayout shor_layout(std::uint64_t modulus) {
  if (modulus < 2) throw std::invalid_argument("modulus must be at least 2");
  if (modulus > (std::uint64_t{1} << 31)) {
    throw CapacityError(64, max_qubits());
  }
  const std::uint64_t square = modulus * modulus;
  ShorLayout layout;
  layout.counting_qubits = static_cast<unsigned>(std::bit_width(square - 1));
  layout.value_qubits = static_cast<unsigned>(std::bit_width(modulus - 1));
  return layout;
}

QuantumState shor_entangled_state(std::uint64_t a, std::uint64_t modulus) {
  const ShorLayout layout = shor_layout(modulus);
  check_qubit_count(layout.total());
  const std::uint64_t count = std::uint64_t{1} << layout.counting_qubits;
  const double amp = 1.0 / std::sqrt(static_cast<double>(count));

  std::vector<Amplitude> amps(std::size_t{1} << layout.total());
  std::uint64_t value = 1 % modulus;
  for (std::uint64_t x = 0; x < count; ++x) {
    amps[(x << layout.value_qubits) | value] = amp;
    value = value * a % modulus;
  }
  return QuantumState::from_amplitudes(layout.total(), std::move(amps));
}

std::vector<std::uint64_t> convergent_denominators(std::uint64_t num, std::uint64_t den,
                                                   std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  if (den == 0) return out;
  // k_{-2} = 1, k_{-1} = 0; k_i = a_i k_{i-1} + k_{i-2}
  std::uint64_t prev2 = 1, prev1 = 0;
  std::uint64_t n = num, d = den;
  while (d != 0) {
    const std::uint64_t q = n / d;
    if (prev1 != 0 && q > (bound - prev2) / prev1) break;
    const std::uint64_t k = q * prev1 + prev2;
    if (k >= bound) break;
    out.push_back(k);
    prev2 = prev1;
    prev1 = k;
    const std::uint64_t r = n % d;
    n = d;
    d = r;
  }
  return out;
}

namespace {

// Smallest divisor r of `candidate` with a^r = 1, given a^candidate = 1.
std::uint64_t reduce_to_order(std::uint64_t a, std::uint64_t modulus, std::uint64_t candidate) {
  std::uint64_t order = candidate;
  std::uint64_t rest = candidate;
  for (std::uint64_t p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    while (order % p == 0 && mod_pow(a, order / p, modulus) == 1) order /= p;
  }
  if (rest > 1 && order % rest == 0 && mod_pow(a, order / rest, modulus) == 1) order /= rest;
  return order;
}

}  // namespace

PeriodResult shor_period(std::uint64_t a, std::uint64_t modulus, RandomSource& rng) {
  if (modulus < 3) throw std::invalid_argument("modulus must be at least 3");
  if (a < 2 || a >= modulus) {
    throw std::invalid_argument("base must satisfy 2 <= a < N, got a=" + std::to_string(a));
  }
  if (std::gcd(a, modulus) != 1) {
    throw std::invalid_argument("gcd(" + std::to_string(a) + ", " + std::to_string(modulus) +
                                ") != 1");
  }
  const ShorLayout layout = shor_layout(modulus);
  const QuantumState entangled = shor_entangled_state(a, modulus);

  std::vector<Qubit> value_reg(layout.value_qubits);
  for (Qubit q = 0; q < layout.value_qubits; ++q) value_reg[q] = q;
  std::vector<Qubit> counting_reg(layout.counting_qubits);
  for (Qubit i = 0; i < layout.counting_qubits; ++i) counting_reg[i] = layout.value_qubits + i;
  const auto transform = inverse_qft_circuit(counting_reg);
  const std::uint64_t scale = std::uint64_t{1} << layout.counting_qubits;

  for (unsigned sample = 1; sample <= kShorSampleRetries; ++sample) {
    const MeasurementOutcome collapsed = measure_qubits(entangled, value_reg, rng);
    const QuantumState spectrum = apply_all(collapsed.post_state, transform);
    const MeasurementOutcome read = measure_qubits(spectrum, counting_reg, rng);
    std::uint64_t y = 0;
    for (Qubit i = 0; i < layout.counting_qubits; ++i) {
      y |= static_cast<std::uint64_t>(read.measured_bits.at(counting_reg[i])) << i;
    }
    if (y == 0) continue;
    for (std::uint64_t den : convergent_denominators(y, scale, modulus)) {
      if (den == 0) continue;
      // A convergent s/r with gcd(s, r) > 1 yields a divisor of r; try multiples.
      for (std::uint64_t r = den; r < modulus; r += den) {
        if (mod_pow(a, r, modulus) == 1) return {reduce_to_order(a, modulus, r), sample};
      }
    }
  }
  throw RetryExhausted("period finding for a=" + std::to_string(a) + " mod " +
                       std::to_string(modulus) + " failed after " +
                       std::to_string(kShorSampleRetries) + " samples");
}

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_prime_power(std::uint64_t n) {
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    return n == 1;
  }
  return true;
}

FactorResult make_factors(std::uint64_t modulus, std::uint64_t factor, std::uint64_t base,
                          std::optional<std::uint64_t> period, unsigned attempts) {
  std::uint64_t p = factor, q = modulus / factor;
  if (p > q) std::swap(p, q);
  return FactorResult{p, q, base, period, attempts};
}

}  // namespace

FactorResult shor_factor(std::uint64_t modulus, RandomSource& rng) {
  if (modulus < 3 || modulus % 2 == 0) {
    throw std::invalid_argument("N must be an odd composite, got " + std::to_string(modulus));
  }
  if (is_prime(modulus)) throw std::invalid_argument(std::to_string(modulus) + " is prime");
  if (is_prime_power(modulus)) {
    throw std::invalid_argument(std::to_string(modulus) + " is a prime power");
  }
  check_qubit_count(shor_layout(modulus).total());

  for (unsigned attempt = 1; attempt <= kShorFactorRetries; ++attempt) {
    const std::uint64_t a = 2 + rng.below(modulus - 2);
    if (const std::uint64_t g = std::gcd(a, modulus); g > 1) {
      return make_factors(modulus, g, a, std::nullopt, attempt);
    }
    std::uint64_t r = 0;
    try {
      r = shor_period(a, modulus, rng).period;
    } catch (const RetryExhausted&) {
      continue;
    }
    if (r % 2 != 0) continue;
    const std::uint64_t half = mod_pow(a, r / 2, modulus);
    if (half == modulus - 1) continue;
    for (std::uint64_t candidate : {std::gcd(half + modulus - 1, modulus), std::gcd(half + 1, modulus)}) {
      if (candidate > 1 && candidate < modulus) {
        return make_factors(modulus, candidate, a, r, attempt);
      }
    }
  }
  throw RetryExhausted("factoring " + std::to_string(modulus) + " failed after " +
                       std::to_string(kShorFactorRetries) + " choices of a");
}

}  // namespace qreg
