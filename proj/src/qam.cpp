#include <bit>
#include <cmath>
#include <limits>
#include <unordered_set>

#include "qregsim/algorithms.hpp"
#include "qregsim/config.hpp"
#include "qregsim/measurement.hpp"

namespace qreg {

PatternMemory qam_store(std::span<const std::string> patterns) {
  if (patterns.empty()) throw std::invalid_argument("cannot store an empty pattern set");
  const auto n = static_cast<unsigned>(patterns.front().size());
  check_qubit_count(n);

  std::vector<BasisIndex> indices;
  std::unordered_set<BasisIndex> seen;
  for (const auto& p : patterns) {
    if (p.size() != n) {
      throw std::invalid_argument("pattern '" + p + "' has length " + std::to_string(p.size()) +
                                  ", expected " + std::to_string(n));
    }
    const BasisIndex index = from_bitstring(p);
    if (!seen.insert(index).second) throw std::invalid_argument("duplicate pattern '" + p + "'");
    indices.push_back(index);
  }

  const double amp = 1.0 / std::sqrt(static_cast<double>(indices.size()));
  std::vector<Amplitude> amps(std::size_t{1} << n);
  for (BasisIndex index : indices) amps[index] = amp;
  QuantumState state = QuantumState::from_amplitudes(n, std::move(amps));
  return PatternMemory{n, std::move(indices), std::move(state)};
}

NoMatchError::NoMatchError(unsigned radius, unsigned min_distance)
    : std::invalid_argument("no stored pattern within Hamming distance " + std::to_string(radius) +
                            "; nearest is at distance " + std::to_string(min_distance)),
      min_distance_(min_distance) {}

QamQuery qam_matches(const PatternMemory& mem, std::string_view query, unsigned radius) {
  if (query.size() != mem.pattern_length) {
    throw std::invalid_argument("query has length " + std::to_string(query.size()) +
                                ", memory holds " + std::to_string(mem.pattern_length) +
                                "-bit patterns");
  }
  const BasisIndex key = from_bitstring(query);
  unsigned nearest = std::numeric_limits<unsigned>::max();
  std::uint64_t count = 0;
  for (BasisIndex p : mem.patterns) {
    const auto d = static_cast<unsigned>(std::popcount(p ^ key));
    nearest = std::min(nearest, d);
    if (d <= radius) ++count;
  }
  if (count == 0) throw NoMatchError(radius, nearest);

  // Only stored indices are marked, so M equals the classical count.
  std::vector<bool> stored(std::size_t{1} << mem.pattern_length);
  for (BasisIndex p : mem.patterns) stored[p] = true;
  auto marked = [stored = std::move(stored), key, radius](BasisIndex i) {
    return stored[i] && static_cast<unsigned>(std::popcount(i ^ key)) <= radius;
  };
  return QamQuery{std::move(marked), count};
}

Amplified qam_amplify(const PatternMemory& mem, std::string_view query, unsigned radius) {
  const QamQuery q = qam_matches(mem, query, radius);
  return amplify(mem.state, q.marked,
                 static_cast<double>(q.marked_count) / static_cast<double>(mem.patterns.size()));
}

QamResult qam_query(const PatternMemory& mem, std::string_view query, unsigned radius,
                    RandomSource& rng) {
  const std::uint64_t marked_count = qam_matches(mem, query, radius).marked_count;
  const Amplified amplified = qam_amplify(mem, query, radius);
  const BasisIndex index = measure_all(amplified.state, rng).first;
  return QamResult{to_bitstring(index, mem.pattern_length), index, amplified.iterations,
                   amplified.predicted_success, marked_count};
}

}  // namespace qreg
