#pragma once

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "enumerator.hpp"

namespace musen::cli {

// One result per line, indices ascending and 1-based: "MUS 1 3". Callers must
// skip empty nodes (e.g. the empty correction set of a satisfiable input):
// every emitted line carries at least one index.
inline std::string result_line(const char* kind, const Node& node) {
  std::ostringstream out;
  out << kind;
  for (int ci : node.members()) out << ' ' << ci;
  return out.str();
}

inline const char* kind_name(ResultKind kind) {
  return kind == ResultKind::mus ? "MUS" : "MSS";
}

inline constexpr const char* kStatsHeader =
    "instance,algorithm,strategy,shrink_factor,grow_factor,seed,wall_ms,"
    "checks,map_solves,n_mus,n_mss,completed";

struct StatsRow {
  std::string instance;
  std::string algorithm;
  std::string strategy = "-";       // "-" where the field does not apply
  std::string shrink_factor = "-";
  std::string grow_factor = "-";
  uint64_t seed = 0;
  double wall_ms = 0.0;
  uint64_t checks = 0;
  uint64_t map_solves = 0;
  std::size_t n_mus = 0;
  std::size_t n_mss = 0;
  bool completed = false;
};

inline std::string format_stats_row(const StatsRow& row) {
  std::ostringstream out;
  out << row.instance << ',' << row.algorithm << ',' << row.strategy << ','
      << row.shrink_factor << ',' << row.grow_factor << ',' << row.seed << ','
      << row.wall_ms << ',' << row.checks << ',' << row.map_solves << ','
      << row.n_mus << ',' << row.n_mss << ',' << (row.completed ? 1 : 0);
  return out.str();
}

// Appends a row to the CSV at path, writing the header first when the file
// is new or empty.
inline bool append_stats_row(const std::string& path, const StatsRow& row) {
  namespace fs = std::filesystem;
  std::error_code ec;
  const bool fresh = !fs::exists(path, ec) || fs::file_size(path, ec) == 0;
  std::ofstream out(path, std::ios::app);
  if (!out) {
    std::cerr << "error: cannot open stats file '" << path << "'\n";
    return false;
  }
  if (fresh) out << kStatsHeader << '\n';
  out << format_stats_row(row) << '\n';
  return true;
}

inline std::string format_double(double v) {
  std::ostringstream out;
  out << v;
  return out.str();
}

}  // namespace musen::cli
