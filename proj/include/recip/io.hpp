#pragma once

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "recip/efficiency.hpp"
#include "recip/error.hpp"
#include "recip/matrix.hpp"

#include "json.hpp"

namespace recip {

/// 17 significant digits: reading the text back yields the same double.
inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

inline double parse_cell(std::string_view cell, std::size_t row, std::size_t col) {
  cell = trim(cell);
  if (!cell.empty() && cell.front() == '+') cell.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
  if (cell.empty() || ec != std::errc() || ptr != cell.data() + cell.size()) {
    throw InputError("parse error at row " + std::to_string(row) + ", column " +
                     std::to_string(col) + ": '" + std::string(cell) + "'");
  }
  return v;
}

}  // namespace detail

/// Comma-separated decimal rows, no header. Blank lines are skipped.
inline std::vector<std::vector<double>> read_csv(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::trim(line).empty()) continue;
    std::vector<double> row;
    std::size_t col = 0, start = 0;
    const std::string_view sv(line);
    for (std::size_t i = 0; i <= sv.size(); ++i) {
      if (i == sv.size() || sv[i] == ',') {
        row.push_back(detail::parse_cell(sv.substr(start, i - start), line_no, ++col));
        start = i + 1;
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

inline ReciprocalMatrix read_matrix(std::istream& in, ReciprocityMode mode,
                                    double tol = 1e-12) {
  const auto rows = read_csv(in);
  if (rows.empty()) throw InputError("matrix file is empty");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) {
      throw InputError("row " + std::to_string(i + 1) + " has " +
                       std::to_string(rows[i].size()) + " columns, expected " +
                       std::to_string(rows.size()));
    }
  }
  return make_reciprocal(rows, mode, tol);
}

inline ReciprocalMatrix load_matrix(const std::string& path, ReciprocityMode mode,
                                    double tol = 1e-12) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return read_matrix(in, mode, tol);
}

/// A single row or a single column.
inline PositiveVector read_vector(std::istream& in) {
  const auto rows = read_csv(in);
  if (rows.size() == 1) return PositiveVector(rows.front());
  std::vector<double> v;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != 1) {
      throw InputError("vector file must be a single row or column (row " +
                       std::to_string(i + 1) + ")");
    }
    v.push_back(rows[i][0]);
  }
  return PositiveVector(std::move(v));
}

inline PositiveVector load_vector(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return read_vector(in);
}

inline void write_matrix(std::ostream& out, const ReciprocalMatrix& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (j) out << ',';
      out << format_double(a(i, j));
    }
    out << '\n';
  }
}

inline void save_matrix(const std::string& path, const ReciprocalMatrix& a) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  write_matrix(out, a);
}

inline void write_vector(std::ostream& out, const PositiveVector& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ',';
    out << format_double(v[i]);
  }
  out << '\n';
}

// ---------------------------------------------------------------------------
// JSON (1-based vertex indices throughout)

inline nlohmann::json one_based(const std::vector<std::size_t>& vertices) {
  auto j = nlohmann::json::array();
  for (auto v : vertices) j.push_back(v + 1);
  return j;
}

inline nlohmann::json to_json(const PositiveVector& v) {
  return nlohmann::json(std::vector<double>(v.begin(), v.end()));
}

inline nlohmann::json to_json(const EfficiencyReport& r) {
  nlohmann::json j;
  j["efficient"] = r.efficient;
  j["perron_value"] = r.perron_value ? nlohmann::json(*r.perron_value) : nlohmann::json();
  j["perron_vector"] = to_json(r.vector);
  auto edges = nlohmann::json::array();
  for (const auto& [a, b] : r.edges) edges.push_back({a + 1, b + 1});
  j["edges"] = std::move(edges);
  j["scc_count"] = r.scc_count;
  j["sources"] = one_based(r.sources);
  j["sinks"] = one_based(r.sinks);
  j["hamiltonian"] = r.hamiltonian ? one_based(*r.hamiltonian) : nlohmann::json();
  j["certificate"] = r.certificate ? to_json(*r.certificate) : nlohmann::json();
  j["eps_rel"] = r.eps_rel;
  return j;
}

inline void save_report(const std::string& path, const EfficiencyReport& r) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << to_json(r).dump(2) << '\n';
}

}  // namespace recip
