#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace sbq {

/// A tagged numeric table plus metadata, ready for CSV emission.
struct ExperimentResult {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::vector<std::pair<std::string, std::string>> metadata;

  void add_row(std::vector<double> row);
  void add_metadata(std::string key, std::string value);
  std::size_t column_index(const std::string& column) const;
  std::vector<double> column(const std::string& column) const;
};

/// Geometric grid of `steps` radii from r_min to r_max inclusive.
std::vector<double> geometric_grid(double r_min, double r_max, int steps);

/// True when values[i+1] <= values[i] + slack for every i >= start.
bool nonincreasing_from(const std::vector<double>& values, std::size_t start, double slack);

/// First index after which the sequence never increases by more than `slack`.
std::size_t monotone_tail_start(const std::vector<double>& values, double slack);

}  // namespace sbq
