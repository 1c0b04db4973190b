#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "qregsim/algorithms.hpp"
#include "qregsim/circuit.hpp"

namespace qreg {

enum class ReportFormat { Text, Json };

ReportFormat parse_report_format(std::string_view name);

/// Text: "# key value" header lines, then one "BITSTRING COUNT PROB" line per
/// outcome sorted by descending count (ties by ascending index). Bit strings
/// are most significant qubit first.
/// Json: {"shots", "seed", "width", "counts": {bitstring: count}}.
std::string format_run(const RunResult& result, ReportFormat format);

std::string format_qrng(const QrngResult& result, std::uint64_t seed, ReportFormat format);

std::string format_grover(const GroverResult& result, unsigned num_qubits,
                          std::uint64_t marked_count, std::uint64_t seed, ReportFormat format);

std::string format_factor(std::uint64_t modulus, const FactorResult& result, std::uint64_t seed,
                          ReportFormat format);

/// Position/probability columns for the quantum walk, with both standard
/// deviations in the footer.
std::string format_walk(const WalkDistribution& quantum, const WalkDistribution& classical,
                        ReportFormat format);

std::string format_qam(const QamResult& result, std::string_view query, unsigned radius,
                       std::uint64_t seed, ReportFormat format);

struct QftDemo {
  unsigned num_qubits = 0;
  std::uint64_t period = 0;
  /// Nonzero output probabilities after the transform, by index.
  std::vector<std::pair<BasisIndex, double>> spectrum;
  RunResult samples;
};

std::string format_qft_demo(const QftDemo& demo, ReportFormat format);

}  // namespace qreg
