#include "sbq/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace sbq::config {

namespace {

std::size_t first_non_space(const std::string& s, std::size_t from = 0) {
  while (from < s.size() && std::isspace(static_cast<unsigned char>(s[from]))) ++from;
  return from;
}

std::string trim_right(std::string s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  return s;
}

bool valid_key(const std::string& k) {
  return !k.empty() && std::all_of(k.begin(), k.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
  });
}

double parse_double_at(const ExperimentConfig& cfg, const std::string& key, const std::string& text) {
  double out = 0.0;
  const char* b = text.data();
  const char* e = b + text.size();
  auto [ptr, ec] = std::from_chars(b, e, out);
  if (ec != std::errc() || ptr != e) cfg.fail(key, "'" + text + "' is not a number");
  return out;
}

}  // namespace

const std::vector<std::string>& experiment_names() {
  static const std::vector<std::string> names = {"multiplier-curve", "invert-l2",  "invert-pointwise", "isometry",
                                                 "surjectivity",     "lemma5",     "holo-change",      "path-agreement"};
  return names;
}

const std::vector<std::string>& known_keys() {
  static const std::vector<std::string> keys = {
      // shared
      "t", "seed", "quad_rel_tol", "check_tol", "r_min", "r_max", "r_steps",
      // model
      "model", "n_modes", "n_modes_per_axis", "d", "rho_sq", "weyl_const", "low_spectrum", "jitter", "sup_constant",
      "analyticity_radius", "grid_points",
      // functions and probes
      "active_modes", "probes", "sobolev_order", "radii",
      // multiplier-curve
      "kind", "lambdas",
      // lemma5
      "psi_kind", "k", "phase", "profile", "profile_scale", "radius", "nodes", "mc_samples",
      // holo-change
      "pairs", "profile_variance"};
  return keys;
}

void ExperimentConfig::fail(const std::string& key, const std::string& message) const {
  auto it = values.find(key);
  if (it == values.end()) throw ConfigError(line, 1, "[" + experiment + "] " + key + ": " + message);
  throw ConfigError(it->second.line, it->second.column, key + ": " + message);
}

std::string ExperimentConfig::get_string(const std::string& key, const std::string& fallback) const {
  auto it = values.find(key);
  return it == values.end() ? fallback : it->second.text;
}

double ExperimentConfig::get_double(const std::string& key, double fallback) const {
  auto it = values.find(key);
  if (it == values.end()) return fallback;
  return parse_double_at(*this, key, it->second.text);
}

long ExperimentConfig::get_int(const std::string& key, long fallback) const {
  auto it = values.find(key);
  if (it == values.end()) return fallback;
  const std::string& s = it->second.text;
  long out = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (ec != std::errc() || ptr != s.data() + s.size()) fail(key, "'" + s + "' is not an integer");
  return out;
}

std::uint64_t ExperimentConfig::get_u64(const std::string& key, std::uint64_t fallback) const {
  auto it = values.find(key);
  if (it == values.end()) return fallback;
  const std::string& s = it->second.text;
  std::uint64_t out = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (ec != std::errc() || ptr != s.data() + s.size()) fail(key, "'" + s + "' is not an unsigned integer");
  return out;
}

std::vector<double> ExperimentConfig::get_doubles(const std::string& key, const std::vector<double>& fallback) const {
  auto it = values.find(key);
  if (it == values.end()) return fallback;
  std::vector<double> out;
  std::stringstream ss(it->second.text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const std::size_t b = first_non_space(item);
    item = trim_right(item.substr(b));
    if (item.empty()) fail(key, "empty list entry");
    out.push_back(parse_double_at(*this, key, item));
  }
  return out;
}

ConfigFile parse(const std::string& text) {
  const auto& names = experiment_names();
  const auto& keys = known_keys();
  std::map<std::string, Value> globals;
  ConfigFile file;
  ExperimentConfig* current = nullptr;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::string line = raw.substr(0, raw.find_first_of("#;"));
    const std::size_t start = first_non_space(line);
    line = trim_right(line);
    if (start >= line.size()) continue;
    const int col = static_cast<int>(start) + 1;

    if (line[start] == '[') {
      const std::size_t close = line.find(']', start);
      if (close == std::string::npos) throw ConfigError(lineno, col, "unterminated section header");
      if (first_non_space(line, close + 1) != line.size())
        throw ConfigError(lineno, static_cast<int>(close) + 2, "unexpected text after section header");
      const std::size_t nb = first_non_space(line, start + 1);
      const std::string name = trim_right(line.substr(nb, close - nb));
      if (std::find(names.begin(), names.end(), name) == names.end())
        throw ConfigError(lineno, static_cast<int>(nb) + 1, "unknown experiment '" + name + "'");
      for (const auto& e : file.experiments)
        if (e.experiment == name) throw ConfigError(lineno, static_cast<int>(nb) + 1, "duplicate section '" + name + "'");
      file.experiments.push_back({name, lineno, {}});
      current = &file.experiments.back();
      continue;
    }

    const std::size_t eq = line.find('=', start);
    if (eq == std::string::npos) throw ConfigError(lineno, col, "expected 'key = value'");
    const std::string key = trim_right(line.substr(start, eq - start));
    if (!valid_key(key)) throw ConfigError(lineno, col, "invalid key '" + key + "'");
    if (std::find(keys.begin(), keys.end(), key) == keys.end())
      throw ConfigError(lineno, col, "unknown key '" + key + "'");
    const std::size_t vb = first_non_space(line, eq + 1);
    if (vb >= line.size()) throw ConfigError(lineno, static_cast<int>(eq) + 2, "missing value for '" + key + "'");
    Value v{line.substr(vb), lineno, static_cast<int>(vb) + 1};
    auto& target = current ? current->values : globals;
    if (!target.emplace(key, v).second) throw ConfigError(lineno, col, "duplicate key '" + key + "'");
  }
  if (file.experiments.empty()) throw ConfigError(std::max(lineno, 1), 1, "no experiment sections");
  for (auto& e : file.experiments)
    for (const auto& [k, v] : globals) e.values.emplace(k, v);
  return file;
}

ConfigFile parse_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(0, 0, "cannot open config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

}  // namespace sbq::config
