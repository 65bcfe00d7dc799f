#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sbq/errors.hpp"

namespace sbq::config {

// Malformed or invalid configuration; line and column are 1-based.
class ConfigError : public Error {
 public:
  ConfigError(int line, int column, const std::string& message)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

struct Value {
  std::string text;
  int line = 0;
  int column = 0;  // column of the value text
};

// One [section]: an experiment plus its keys, with globals merged in underneath.
struct ExperimentConfig {
  std::string experiment;
  int line = 0;
  std::map<std::string, Value> values;

  bool has(const std::string& key) const { return values.count(key) != 0; }
  std::string get_string(const std::string& key, const std::string& fallback) const;
  double get_double(const std::string& key, double fallback) const;
  long get_int(const std::string& key, long fallback) const;
  std::uint64_t get_u64(const std::string& key, std::uint64_t fallback) const;
  std::vector<double> get_doubles(const std::string& key, const std::vector<double>& fallback) const;
  // Throws ConfigError at the value's position.
  [[noreturn]] void fail(const std::string& key, const std::string& message) const;
};

struct ConfigFile {
  std::vector<ExperimentConfig> experiments;
};

const std::vector<std::string>& experiment_names();
const std::vector<std::string>& known_keys();

// Keys before the first section are globals; each section names an experiment.
ConfigFile parse(const std::string& text);
ConfigFile parse_file(const std::string& path);

}  // namespace sbq::config
