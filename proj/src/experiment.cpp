#include "sbq/experiment.hpp"

#include <cmath>

#include "sbq/errors.hpp"

namespace sbq {

void ExperimentResult::add_row(std::vector<double> row) {
  if (row.size() != columns.size())
    throw DomainError("row has " + std::to_string(row.size()) + " entries, table has " +
                      std::to_string(columns.size()) + " columns");
  rows.push_back(std::move(row));
}

void ExperimentResult::add_metadata(std::string key, std::string value) {
  metadata.emplace_back(std::move(key), std::move(value));
}

std::size_t ExperimentResult::column_index(const std::string& c) const {
  for (std::size_t i = 0; i < columns.size(); ++i)
    if (columns[i] == c) return i;
  throw DomainError("no column named '" + c + "'");
}

std::vector<double> ExperimentResult::column(const std::string& c) const {
  const std::size_t k = column_index(c);
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(r[k]);
  return out;
}

std::vector<double> geometric_grid(double r_min, double r_max, int steps) {
  if (!(r_min > 0.0) || !(r_max >= r_min)) throw DomainError("grid needs 0 < r_min <= r_max");
  if (steps < 1) throw DomainError("grid needs at least one step");
  if (steps == 1) return {r_max};
  std::vector<double> grid(static_cast<std::size_t>(steps));
  const double ratio = std::log(r_max / r_min) / (steps - 1);
  for (int i = 0; i < steps; ++i) grid[static_cast<std::size_t>(i)] = r_min * std::exp(ratio * i);
  grid.front() = r_min;
  grid.back() = r_max;
  return grid;
}

bool nonincreasing_from(const std::vector<double>& values, std::size_t start, double slack) {
  for (std::size_t i = start; i + 1 < values.size(); ++i)
    if (values[i + 1] > values[i] + slack) return false;
  return true;
}

std::size_t monotone_tail_start(const std::vector<double>& values, double slack) {
  std::size_t start = 0;
  for (std::size_t i = 0; i + 1 < values.size(); ++i)
    if (values[i + 1] > values[i] + slack) start = i + 1;
  return start;
}

}  // namespace sbq
