#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <sys/wait.h>

#include "qregsim/cli.hpp"
#include "qregsim/report.hpp"

using namespace qreg;
namespace fs = std::filesystem;

namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::execute(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path write_temp(const std::string& name, const std::string& content) {
  const fs::path path = fs::temp_directory_path() / ("qregsim_test_" + name);
  std::ofstream(path) << content;
  return path;
}

std::vector<std::string> data_lines(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line[0] != '#') lines.push_back(line);
  }
  return lines;
}

}  // namespace

TEST(Cli, RunBellOnlyCorrelatedOutcomes) {
  const auto bell = write_temp("bell.qc", "qubits 2\nh 1\ncnot 1 0\nmeasure all\n");
  const auto r = invoke({"run", bell.string(), "--shots", "100000", "--seed", "7"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("# seed 7"), std::string::npos);
  const auto lines = data_lines(r.out);
  ASSERT_EQ(lines.size(), 2u);
  for (const auto& line : lines) EXPECT_TRUE(line.rfind("00 ", 0) == 0 || line.rfind("11 ", 0) == 0);

  // Same seed, same report.
  EXPECT_EQ(invoke({"run", bell.string(), "--shots", "100000", "--seed", "7"}).out, r.out);
}

TEST(Cli, RunJsonRoundTripsCounts) {
  const auto bell = write_temp("bell_json.qc", "qubits 2\nh 1\ncnot 1 0\n");
  const auto r = invoke({"run", bell.string(), "--shots", "1000", "--seed", "3", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["shots"], 1000);
  EXPECT_EQ(doc["seed"], 3);
  EXPECT_EQ(doc["counts"]["00"].get<int>() + doc["counts"]["11"].get<int>(), 1000);

  const RunResult direct = run(parse_circuit("qubits 2\nh 1\ncnot 1 0\n"), 1000, 3);
  EXPECT_EQ(doc["counts"]["00"].get<std::uint64_t>(), direct.counts.at(0));
}

TEST(Cli, ShorFifteen) {
  const auto r = invoke({"shor", "15", "--seed", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "15 = 3 × 5");
}

TEST(Cli, QrngReproducible) {
  const auto a = invoke({"qrng", "--bits", "8", "--chunk", "1", "--seed", "9"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, invoke({"qrng", "--bits", "8", "--chunk", "1", "--seed", "9"}).out);
  const auto lines = data_lines(a.out);
  ASSERT_EQ(lines.size(), 1u);
  const long value = std::stol(lines[0]);
  EXPECT_GE(value, 0);
  EXPECT_LE(value, 255);
  EXPECT_NE(a.out.find("# rounds 8"), std::string::npos);

  const auto j = invoke({"qrng", "--bits", "8", "--chunk", "1", "--seed", "9", "--format", "json"});
  const auto doc = nlohmann::json::parse(j.out);
  EXPECT_EQ(doc["bits"], 8);
  EXPECT_EQ(doc["seed"], 9);
  EXPECT_EQ(doc["value"], value);
}

TEST(Cli, DefaultSeedIsReported) {
  const auto r = invoke({"qrng", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  const auto seed = doc["seed"].get<std::uint64_t>();
  const auto again = invoke({"qrng", "--format", "json", "--seed", std::to_string(seed)});
  EXPECT_EQ(nlohmann::json::parse(again.out)["value"], doc["value"]);
}

TEST(Cli, Grover) {
  const auto r = invoke({"grover", "--qubits", "3", "--target", "5", "--seed", "2", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["iterations"], 2);
  EXPECT_NEAR(doc["predicted_success"].get<double>(), 0.9453125, 1e-12);
  const auto multi = invoke({"grover", "--qubits", "4", "--target", "1,2,3,4", "--seed", "2"});
  EXPECT_EQ(multi.code, 0) << multi.err;
  EXPECT_NE(multi.out.find("# marked 4"), std::string::npos);
}

TEST(Cli, WalkFooter) {
  const auto r = invoke({"walk", "--steps", "100"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("# sigma_quantum "), std::string::npos);
  EXPECT_NE(r.out.find("# sigma_classical 10\n"), std::string::npos);
  const auto lines = data_lines(r.out);
  EXPECT_EQ(lines.size(), 101u);
  EXPECT_EQ(lines.front().substr(0, 5), "-100 ");
}

TEST(Cli, QftDemo) {
  const auto r = invoke({"qft-demo", "--qubits", "3", "--period", "2", "--seed", "4", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  ASSERT_EQ(doc["spectrum"].size(), 2u);
  EXPECT_NEAR(doc["spectrum"]["000"].get<double>(), 0.5, 1e-12);
  EXPECT_NEAR(doc["spectrum"]["100"].get<double>(), 0.5, 1e-12);
}

TEST(Cli, QamFromPatternsFile) {
  const auto file = write_temp("patterns.txt", "# three patterns\n00000\n10000\n\n11111  # all ones\n");
  const auto r = invoke({"qam", "--patterns-file", file.string(), "--query", "11110", "--radius", "1",
                         "--seed", "5", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["marked"], 1);
  EXPECT_NEAR(doc["predicted_success"].get<double>(), 25.0 / 27.0, 1e-12);
  const auto pattern = doc["pattern"].get<std::string>();
  EXPECT_TRUE(pattern == "00000" || pattern == "10000" || pattern == "11111");

  const auto miss = invoke({"qam", "--patterns-file", file.string(), "--query", "01010", "--radius", "0"});
  EXPECT_EQ(miss.code, cli::kExitRuntime);
  EXPECT_NE(miss.err.find("nearest is at distance"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(invoke({}).code, cli::kExitUsage);
  EXPECT_EQ(invoke({"teleport"}).code, cli::kExitUsage);
  EXPECT_EQ(invoke({"qrng", "--bits", "0"}).code, cli::kExitUsage);
  EXPECT_EQ(invoke({"qrng", "--format", "xml"}).code, cli::kExitUsage);
  EXPECT_EQ(invoke({"grover", "--qubits", "2", "--target", "9"}).code, cli::kExitUsage);
  EXPECT_EQ(invoke({"shor", "9"}).code, cli::kExitRuntime);
  EXPECT_EQ(invoke({"--help"}).code, cli::kExitOk);

  const auto missing = invoke({"run", "/nonexistent/circuit.qc"});
  EXPECT_EQ(missing.code, cli::kExitRuntime);
  EXPECT_NE(missing.err.find("/nonexistent/circuit.qc"), std::string::npos);
  EXPECT_EQ(std::count(missing.err.begin(), missing.err.end(), '\n'), 1);

  const auto bad = write_temp("bad.qc", "qubits 2\nh 5\n");
  const auto parse = invoke({"run", bad.string()});
  EXPECT_EQ(parse.code, cli::kExitRuntime);
  EXPECT_NE(parse.err.find("line 2: qubit 5 out of range"), std::string::npos);
}

TEST(Cli, EnvironmentCapOverride) {
  const std::string exe = QREGSIM_CLI_PATH;
  const std::string quiet = " >/dev/null 2>&1";
  auto status = [](const std::string& cmd) {
    const int raw = std::system(cmd.c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  EXPECT_EQ(status(exe + " qrng --chunk 5 --seed 1" + quiet), 0);
  EXPECT_EQ(status("QREGSIM_MAX_QUBITS=4 " + exe + " qrng --chunk 5 --seed 1" + quiet), 2);
  EXPECT_EQ(status("QREGSIM_MAX_QUBITS=abc " + exe + " qrng --seed 1" + quiet), 1);
}

TEST(Report, HistogramOrdering) {
  RunResult r{10, 4, 2, {{0, 2}, {1, 5}, {3, 3}}};
  EXPECT_EQ(format_run(r, ReportFormat::Text), "# shots 10\n# seed 4\n01 5 0.5\n11 3 0.3\n00 2 0.2\n");
}

TEST(Report, BellStyleLine) {
  RunResult r{100000, 7, 2, {{0, 50012}, {3, 49988}}};
  const auto lines = data_lines(format_run(r, ReportFormat::Text));
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_EQ(lines[0], "00 50012 0.50012");
  EXPECT_EQ(lines[1], "11 49988 0.49988");
}

TEST(Report, FormatNames) {
  EXPECT_EQ(parse_report_format("json"), ReportFormat::Json);
  EXPECT_THROW(parse_report_format("yaml"), std::invalid_argument);
}
