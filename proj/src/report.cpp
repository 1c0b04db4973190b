#include "qregsim/report.hpp"

#include <algorithm>
#include <cmath>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

namespace qreg {

using nlohmann::json;

namespace {

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

std::ostringstream text_stream() {
  std::ostringstream os;
  os.precision(10);
  return os;
}

}  // namespace

ReportFormat parse_report_format(std::string_view name) {
  if (name == "text") return ReportFormat::Text;
  if (name == "json") return ReportFormat::Json;
  throw std::invalid_argument("unknown report format '" + std::string(name) +
                              "' (expected text or json)");
}

std::string format_run(const RunResult& result, ReportFormat format) {
  if (format == ReportFormat::Json) {
    json counts = json::object();
    for (const auto& [index, count] : result.counts) counts[to_bitstring(index, result.width)] = count;
    return dump({{"shots", result.shots}, {"seed", result.seed}, {"width", result.width},
                 {"counts", std::move(counts)}});
  }
  std::vector<std::pair<BasisIndex, std::uint64_t>> rows(result.counts.begin(), result.counts.end());
  std::stable_sort(rows.begin(), rows.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  std::ostringstream os;
  os << "# shots " << result.shots << "\n# seed " << result.seed << '\n';
  for (const auto& [index, count] : rows) {
    os << to_bitstring(index, result.width) << ' ' << count << ' '
       << static_cast<double>(count) / static_cast<double>(result.shots) << '\n';
  }
  return os.str();
}

std::string format_qrng(const QrngResult& result, std::uint64_t seed, ReportFormat format) {
  if (format == ReportFormat::Json) {
    return dump({{"bits", result.bits}, {"value", result.value}, {"seed", seed},
                 {"chunk", result.chunk}, {"rounds", result.rounds}});
  }
  std::ostringstream os;
  os << "# bits " << result.bits << "\n# chunk " << result.chunk << "\n# rounds " << result.rounds
     << "\n# seed " << seed << '\n'
     << result.value << '\n';
  return os.str();
}

std::string format_grover(const GroverResult& result, unsigned num_qubits,
                          std::uint64_t marked_count, std::uint64_t seed, ReportFormat format) {
  if (format == ReportFormat::Json) {
    return dump({{"qubits", num_qubits},
                 {"marked", marked_count},
                 {"seed", seed},
                 {"index", result.index},
                 {"bits", to_bitstring(result.index, num_qubits)},
                 {"iterations", result.iterations},
                 {"predicted_success", result.predicted_success},
                 {"found", result.found}});
  }
  auto os = text_stream();
  os << "# qubits " << num_qubits << "\n# marked " << marked_count << "\n# seed " << seed
     << "\n# iterations " << result.iterations << "\n# predicted_success "
     << result.predicted_success << '\n'
     << to_bitstring(result.index, num_qubits) << ' ' << result.index << ' '
     << (result.found ? "marked" : "unmarked") << '\n';
  return os.str();
}

std::string format_factor(std::uint64_t modulus, const FactorResult& result, std::uint64_t seed,
                          ReportFormat format) {
  if (format == ReportFormat::Json) {
    json doc = {{"n", modulus}, {"p", result.p},       {"q", result.q},
                {"a", result.base}, {"seed", seed}, {"attempts", result.attempts}};
    doc["period"] = result.period ? json(*result.period) : json(nullptr);
    return dump(doc);
  }
  std::ostringstream os;
  os << modulus << " = " << result.p << " × " << result.q << '\n'
     << "# seed " << seed << "\n# a " << result.base << "\n# period ";
  if (result.period) {
    os << *result.period;
  } else {
    os << "none (gcd(a, N) > 1)";
  }
  os << "\n# attempts " << result.attempts << '\n';
  return os.str();
}

std::string format_walk(const WalkDistribution& quantum, const WalkDistribution& classical,
                        ReportFormat format) {
  const long t = quantum.steps;
  if (format == ReportFormat::Json) {
    json positions = json::array();
    json q = json::array();
    json c = json::array();
    for (long p = -t; p <= t; ++p) {
      positions.push_back(p);
      q.push_back(quantum.at(p));
      c.push_back(classical.at(p));
    }
    return dump({{"steps", quantum.steps},
                 {"positions", std::move(positions)},
                 {"quantum", std::move(q)},
                 {"classical", std::move(c)},
                 {"sigma_quantum", quantum.stddev()},
                 {"sigma_classical", classical.stddev()}});
  }
  auto os = text_stream();
  os << "# steps " << quantum.steps << '\n';
  for (long p = -t; p <= t; p += 2) os << p << ' ' << quantum.at(p) << '\n';
  os << "# sigma_quantum " << quantum.stddev() << "\n# sigma_classical " << classical.stddev()
     << '\n';
  return os.str();
}

std::string format_qam(const QamResult& result, std::string_view query, unsigned radius,
                       std::uint64_t seed, ReportFormat format) {
  if (format == ReportFormat::Json) {
    return dump({{"query", std::string(query)},
                 {"radius", radius},
                 {"seed", seed},
                 {"pattern", result.pattern},
                 {"marked", result.marked_count},
                 {"iterations", result.iterations},
                 {"predicted_success", result.predicted_success}});
  }
  auto os = text_stream();
  os << "# query " << query << "\n# radius " << radius << "\n# seed " << seed << "\n# marked "
     << result.marked_count << "\n# iterations " << result.iterations
     << "\n# predicted_success " << result.predicted_success << '\n'
     << result.pattern << '\n';
  return os.str();
}

std::string format_qft_demo(const QftDemo& demo, ReportFormat format) {
  if (format == ReportFormat::Json) {
    json spectrum = json::object();
    for (const auto& [index, p] : demo.spectrum) spectrum[to_bitstring(index, demo.num_qubits)] = p;
    json counts = json::object();
    for (const auto& [index, count] : demo.samples.counts) {
      counts[to_bitstring(index, demo.samples.width)] = count;
    }
    return dump({{"qubits", demo.num_qubits},
                 {"period", demo.period},
                 {"spectrum", std::move(spectrum)},
                 {"shots", demo.samples.shots},
                 {"seed", demo.samples.seed},
                 {"counts", std::move(counts)}});
  }
  auto os = text_stream();
  os << "# qubits " << demo.num_qubits << "\n# period " << demo.period << "\n# spectrum\n";
  for (const auto& [index, p] : demo.spectrum) {
    os << to_bitstring(index, demo.num_qubits) << ' ' << p << '\n';
  }
  os << "# samples\n" << format_run(demo.samples, ReportFormat::Text);
  return os.str();
}

}  // namespace qreg
