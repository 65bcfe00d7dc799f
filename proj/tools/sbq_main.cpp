#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "sbq/harness.hpp"

int main(int argc, char** argv) {
  CLI::App app{"sbq: Segal-Bargmann transform experiments on compact quotients"};
  app.require_subcommand(1);
  app.set_version_flag("--version", SBQ_VERSION);

  std::string config_path;
  sbq::harness::RunOptions opts;
  std::string out_dir = ".";
  std::uint64_t seed = 0;
  double tol = 0.0;

  auto* run = app.add_subcommand("run", "Run every experiment section of a config file");
  run->add_option("config", config_path, "Config file")->required();
  run->add_option("--out", out_dir, "Output directory for CSV files and summary.txt");
  auto* seed_opt = run->add_option("--seed", seed, "Override the seed of every experiment");
  auto* tol_opt = run->add_option("--tol", tol, "Override every check threshold")->check(CLI::PositiveNumber);
  run->add_flag("--reproducible", opts.reproducible, "Omit the timestamp metadata line");
  run->add_flag("--emit-gnuplot", opts.emit_gnuplot, "Write a gnuplot script next to each CSV");

  auto* list = app.add_subcommand("list", "List the available experiments");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : sbq::harness::kParseError;
  }

  if (list->parsed()) {
    std::cout << sbq::harness::format_catalogue();
    return 0;
  }

  opts.out_dir = out_dir;
  if (*seed_opt) opts.seed = seed;
  if (*tol_opt) opts.tol = tol;
  const auto outcome = sbq::harness::run_file(config_path, opts);
  for (const auto& c : outcome.checks)
    std::cout << (c.pass ? "PASS " : "FAIL ") << c.experiment << ": " << c.name << " = "
              << sbq::harness::format_double(c.measured) << " (expected " << c.relation << " "
              << sbq::harness::format_short(c.expected) << ")\n";
  if (!outcome.error.empty()) std::cerr << "sbq: " << outcome.error << "\n";
  return outcome.exit_code;
}
