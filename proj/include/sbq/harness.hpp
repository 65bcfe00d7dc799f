#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "sbq/config.hpp"
#include "sbq/experiment.hpp"

namespace sbq::harness {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kParseError = 2,
  kCapabilityError = 3,
  kConvergenceError = 4,
};

struct RunOptions {
  std::filesystem::path out_dir = ".";
  bool reproducible = false;
  std::optional<std::uint64_t> seed;
  std::optional<double> tol;  // replaces every check threshold
  bool emit_gnuplot = false;
};

struct Check {
  std::string experiment;
  std::string name;
  double measured = 0.0;
  std::string relation;  // "<", "<=", ">", "=="
  double expected = 0.0;
  bool pass = false;
};

struct ExperimentOutput {
  ExperimentResult table;
  std::vector<Check> checks;
  std::vector<std::string> notes;
};

struct RunOutcome {
  int exit_code = kOk;
  std::string error;
  std::vector<Check> checks;
  std::vector<std::filesystem::path> files;
};

struct ExperimentInfo {
  std::string name;
  std::string description;
  std::string theorem;
};

const std::vector<ExperimentInfo>& list_experiments();
std::string format_catalogue();

// %.17g
std::string format_double(double v);
// %.6g, for thresholds in human-readable output
std::string format_short(double v);
void write_csv(const ExperimentResult& table, std::ostream& out);

ExperimentOutput run_experiment(const config::ExperimentConfig& cfg, const RunOptions& opts);

RunOutcome run_config(const config::ConfigFile& file, const RunOptions& opts);
RunOutcome run_file(const std::string& path, const RunOptions& opts);
RunOutcome run_text(const std::string& text, const RunOptions& opts);

}  // namespace sbq::harness
