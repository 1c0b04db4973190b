#include "qregsim/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cerrno>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "qregsim/algorithms.hpp"
#include "qregsim/circuit.hpp"
#include "qregsim/config.hpp"
#include "qregsim/report.hpp"

namespace qreg::cli {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::uint64_t fresh_seed() {
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

void apply_env_cap() {
  const char* env = std::getenv("QREGSIM_MAX_QUBITS");
  if (env == nullptr) return;
  unsigned value = 0;
  const char* end = env + std::strlen(env);
  auto [ptr, ec] = std::from_chars(env, end, value);
  if (ec != std::errc{} || ptr != end || value == 0 || value > kAbsoluteMaxQubits) {
    throw UsageError("QREGSIM_MAX_QUBITS must be an integer in [1, " +
                     std::to_string(kAbsoluteMaxQubits) + "], got '" + env + "'");
  }
  set_max_qubits(value);
}

std::string read_file(const std::string& path, const char* what) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error(std::string("cannot open ") + what + " '" + path +
                             "': " + std::strerror(errno));
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> read_patterns(const std::string& path) {
  std::istringstream in(read_file(path, "patterns file"));
  std::vector<std::string> patterns;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    patterns.push_back(line.substr(first, last - first + 1));
  }
  if (patterns.empty()) throw std::runtime_error("patterns file '" + path + "' holds no patterns");
  return patterns;
}

struct Options {
  std::string format = "text";
  std::uint64_t seed = 0;
  bool seed_given = false;

  // run
  std::string circuit_file;
  std::uint64_t shots = 1024;
  // qrng
  unsigned bits = 8;
  unsigned chunk = 1;
  // grover / qft-demo
  unsigned qubits = 3;
  std::vector<BasisIndex> targets{0};
  std::uint64_t period = 2;
  // shor
  std::uint64_t modulus = 15;
  // walk
  unsigned steps = 100;
  // qam
  std::string patterns_file;
  std::string query;
  unsigned radius = 0;
};

int dispatch(const std::string& command, const Options& opt, std::ostream& out) {
  const ReportFormat format = parse_report_format(opt.format);
  const std::uint64_t seed = opt.seed_given ? opt.seed : fresh_seed();
  RandomSource rng(seed);

  if (command == "run") {
    const Circuit c = parse_circuit(read_file(opt.circuit_file, "circuit file"));
    out << format_run(run(c, opt.shots, seed), format);
  } else if (command == "qrng") {
    out << format_qrng(qrng(opt.bits, opt.chunk, rng), seed, format);
  } else if (command == "grover") {
    if (opt.qubits == 0 || opt.qubits > max_qubits()) {
      throw UsageError("--qubits must be in [1, " + std::to_string(max_qubits()) + "]");
    }
    const std::set<BasisIndex> marked(opt.targets.begin(), opt.targets.end());
    for (BasisIndex t : marked) {
      if (t >= (BasisIndex{1} << opt.qubits)) {
        throw UsageError("--target " + std::to_string(t) + " out of range for " +
                         std::to_string(opt.qubits) + " qubits");
      }
    }
    const Oracle oracle{opt.qubits, [&marked](BasisIndex i) { return marked.contains(i); }};
    const GroverResult r = grover_search(oracle, marked.size(), rng);
    out << format_grover(r, opt.qubits, marked.size(), seed, format);
  } else if (command == "qft-demo") {
    if (opt.qubits == 0 || opt.qubits > max_qubits()) {
      throw UsageError("--qubits must be in [1, " + std::to_string(max_qubits()) + "]");
    }
    const std::uint64_t dim = std::uint64_t{1} << opt.qubits;
    if (opt.period == 0 || opt.period >= dim) {
      throw UsageError("--period must be in [1, " + std::to_string(dim - 1) + "]");
    }
    std::vector<Amplitude> amps(dim);
    for (std::uint64_t x = 0; x < dim; x += opt.period) amps[x] = 1.0;
    const QuantumState input =
        QuantumState::from_amplitudes(opt.qubits, std::move(amps), Normalization::Renormalize);
    const QuantumState output = qft(input);

    QftDemo demo{opt.qubits, opt.period, {}, {}};
    for (BasisIndex i = 0; i < dim; ++i) {
      if (output.probability(i) > 1e-12) demo.spectrum.emplace_back(i, output.probability(i));
    }
    std::vector<Qubit> order;
    for (Qubit q = opt.qubits; q-- > 0;) order.push_back(q);
    demo.samples = sample(output, order, opt.shots, seed);
    out << format_qft_demo(demo, format);
  } else if (command == "shor") {
    out << format_factor(opt.modulus, shor_factor(opt.modulus, rng), seed, format);
  } else if (command == "walk") {
    out << format_walk(quantum_walk_line(opt.steps), classical_walk_line(opt.steps), format);
  } else if (command == "qam") {
    const PatternMemory mem = qam_store(read_patterns(opt.patterns_file));
    out << format_qam(qam_query(mem, opt.query, opt.radius, rng), opt.query, opt.radius, seed,
                      format);
  } else {
    throw UsageError("unknown subcommand '" + command + "'");
  }
  return kExitOk;
}

}  // namespace

int execute(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"State-vector quantum register simulator", "qregsim"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  auto add_common = [&opt](CLI::App* sub) {
    sub->add_option("--seed", opt.seed, "RNG seed (default: random, always reported)");
    sub->add_option("--format", opt.format, "Report format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
  };

  auto* run_cmd = app.add_subcommand("run", "Execute a circuit file and print the histogram");
  run_cmd->add_option("file", opt.circuit_file, "Circuit file")->required();
  run_cmd->add_option("--shots", opt.shots, "Number of shots")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_common(run_cmd);

  auto* qrng_cmd = app.add_subcommand("qrng", "Random integer from measured Hadamard registers");
  qrng_cmd->add_option("--bits", opt.bits, "Bits in the result (1-64)")
      ->check(CLI::Range(1U, 64U))
      ->capture_default_str();
  qrng_cmd->add_option("--chunk", opt.chunk, "Qubits per round")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_common(qrng_cmd);

  auto* grover_cmd = app.add_subcommand("grover", "Grover search for marked indices");
  grover_cmd->add_option("--qubits", opt.qubits, "Register size")->capture_default_str();
  grover_cmd->add_option("--target", opt.targets, "Marked indices (comma separated)")
      ->delimiter(',')
      ->capture_default_str();
  add_common(grover_cmd);

  auto* qft_cmd = app.add_subcommand("qft-demo", "QFT of a periodic input state");
  qft_cmd->add_option("--qubits", opt.qubits, "Register size")->capture_default_str();
  qft_cmd->add_option("--period", opt.period, "Input period")->capture_default_str();
  qft_cmd->add_option("--shots", opt.shots, "Samples of the output")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_common(qft_cmd);

  auto* shor_cmd = app.add_subcommand("shor", "Factor N with simulated period finding");
  shor_cmd->add_option("n", opt.modulus, "Odd composite, not a prime power")->required();
  add_common(shor_cmd);

  auto* walk_cmd = app.add_subcommand("walk", "Hadamard walk on the line vs classical walk");
  walk_cmd->add_option("--steps", opt.steps, "Number of steps")->capture_default_str();
  add_common(walk_cmd);

  auto* qam_cmd = app.add_subcommand("qam", "Associative memory recall");
  qam_cmd->add_option("--patterns-file", opt.patterns_file, "One bit string per line")
      ->required();
  qam_cmd->add_option("--query", opt.query, "Query bit string")->required();
  qam_cmd->add_option("--radius", opt.radius, "Hamming radius")->capture_default_str();
  add_common(qam_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  for (const auto* opt_ptr : chosen->get_options()) {
    if (opt_ptr->get_name() == "--seed" && opt_ptr->count() > 0) opt.seed_given = true;
  }

  try {
    apply_env_cap();
    return dispatch(chosen->get_name(), opt, out);
  } catch (const UsageError& e) {
    err << "qregsim: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "qregsim: " << e.what() << '\n';
    return kExitRuntime;
  }
}

}  // namespace qreg::cli
