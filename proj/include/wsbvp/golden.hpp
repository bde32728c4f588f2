#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "wsbvp/benchmarks.hpp"

namespace wsbvp {

/// Reads a fixture with header `grid_point,method,value,source_table`.
inline std::vector<GoldenRow> load_golden_csv(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open golden table " + path.string());
  std::string line;
  if (!std::getline(in, line) || line.rfind("grid_point,method,value,source_table", 0) != 0)
    throw std::runtime_error("unexpected header in " + path.string());

  std::vector<GoldenRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string grid, method, value, table;
    if (!std::getline(ss, grid, ',') || !std::getline(ss, method, ',') || !std::getline(ss, value, ',') ||
        !std::getline(ss, table))
      throw std::runtime_error("malformed row in " + path.string() + ": " + line);
    GoldenRow r{std::stod(grid), method, std::stod(value), table};
    if (r.grid_point < 0.0 || r.grid_point > 1.0)
      throw std::runtime_error("golden grid point outside [0, 1] in " + path.string());
    rows.push_back(std::move(r));
  }
  return rows;
}

/// Fills `golden_rows` from `<dir>/<golden_table>.csv` when the case has a table.
inline void attach_golden(BenchmarkCase &bc, const std::filesystem::path &dir) {
  if (bc.golden_table.empty()) return;
  bc.golden_rows = load_golden_csv(dir / (bc.golden_table + ".csv"));
}

} // namespace wsbvp
