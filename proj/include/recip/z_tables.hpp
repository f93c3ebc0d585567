#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "recip/digraph.hpp"
#include "recip/error.hpp"
#include "recip/z_family.hpp"

namespace recip {

// Structural certificates for Z_n(x,y,z,a), n >= 5, keyed by the ordering
// of 1, x, y, z, a. Vertices are written over {1, 2, 3, n-1, n}; vertex 3
// stands for the whole middle block.

enum class TableKind {
  hamiltonian_cycle,        // efficient: one Hamiltonian cycle
  two_cycles,               // efficient: union of two cycles
  cycle_extra_edge,         // efficient: cycle + edge into it from the rest
  cycle_two_extra_edges,    // efficient: cycle + two edges
  sink_cycle_extra_edge,    // inefficient candidates with one extra edge
  sink_cycle_two_extra_edges,
  sink_cycle_missing_vertex,
};

inline bool predicts_efficiency(TableKind k) {
  return k == TableKind::hamiltonian_cycle || k == TableKind::two_cycles ||
         k == TableKind::cycle_extra_edge || k == TableKind::cycle_two_extra_edges;
}

inline std::string to_string(TableKind k) {
  switch (k) {
    case TableKind::hamiltonian_cycle: return "hamiltonian-cycle";
    case TableKind::two_cycles: return "two-cycles";
    case TableKind::cycle_extra_edge: return "cycle+edge";
    case TableKind::cycle_two_extra_edges: return "cycle+2edges";
    case TableKind::sink_cycle_extra_edge: return "sink:cycle+edge";
    case TableKind::sink_cycle_two_extra_edges: return "sink:cycle+2edges";
    case TableKind::sink_cycle_missing_vertex: return "sink:cycle-missing-vertex";
  }
  return "?";
}

struct TableRow {
  TableKind kind;
  int index;                         // 1-based position within its table
  std::string_view relation;         // e.g. "x<=1<=a<=y,z"
  std::vector<std::string_view> cycles;  // e.g. "1,n,2,3,n-1,1"
  std::vector<std::string_view> extra_edges;  // e.g. "2,3"
  std::string_view special_vertex;   // possible source / sink, "" if none
};

namespace detail {

inline double relation_value(std::string_view sym, const ZParams& p) {
  if (sym == "1") return 1.0;
  if (sym == "x") return p.x;
  if (sym == "y") return p.y;
  if (sym == "z") return p.z;
  if (sym == "a") return p.a;
  throw InputError("unknown relation symbol '" + std::string(sym) + "'");
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

}  // namespace detail

/// Evaluates a chain such as "x<=1<=a<=y,z" or "z,y<1<a,x". A comma group is
/// unordered internally; consecutive groups compare max(left) against
/// min(right).
inline bool relation_holds(std::string_view relation, const ZParams& p) {
  struct Group {
    double lo, hi;
  };
  std::vector<Group> groups;
  std::vector<bool> strict;
  std::size_t pos = 0;
  auto read_group = [&]() {
    const std::size_t start = pos;
    while (pos < relation.size() && relation[pos] != '<') ++pos;
    Group g{1e308, -1e308};
    for (auto sym : detail::split(relation.substr(start, pos - start), ',')) {
      const double v = detail::relation_value(sym, p);
      g.lo = std::min(g.lo, v);
      g.hi = std::max(g.hi, v);
    }
    groups.push_back(g);
  };
  read_group();
  while (pos < relation.size()) {
    ++pos;  // '<'
    const bool eq = pos < relation.size() && relation[pos] == '=';
    if (eq) ++pos;
    strict.push_back(!eq);
    read_group();
  }
  for (std::size_t k = 0; k + 1 < groups.size(); ++k) {
    const double l = groups[k].hi, r = groups[k + 1].lo;
    if (strict[k] ? !(l < r) : !(l <= r)) return false;
  }
  return true;
}

/// Maps "1", "2", "3", "n-1", "n" to a 0-based vertex of Z_n.
inline std::size_t table_vertex(std::string_view sym, std::size_t n) {
  if (sym == "n") return n - 1;
  if (sym == "n-1") return n - 2;
  if (sym == "1") return 0;
  if (sym == "2") return 1;
  if (sym == "3") return 2;
  throw InputError("unknown table vertex '" + std::string(sym) + "'");
}

inline std::vector<std::size_t> table_walk(std::string_view walk, std::size_t n) {
  std::vector<std::size_t> out;
  for (auto sym : detail::split(walk, ',')) out.push_back(table_vertex(sym, n));
  return out;
}

inline const std::vector<TableRow>& z_table_rows() {
  using K = TableKind;
  static const std::vector<TableRow> rows = {
      {K::hamiltonian_cycle, 1, "x<=1<=a<=y,z", {"1,n,2,3,n-1,1"}, {}, ""},
      {K::hamiltonian_cycle, 2, "x<=z<=1<=y<=a", {"1,n,3,n-1,2,1"}, {}, ""},
      {K::hamiltonian_cycle, 3, "1<=x<=y,z<=a", {"1,3,n,n-1,2,1"}, {}, ""},
      {K::hamiltonian_cycle, 4, "x<=a<=y<=1<=z", {"1,n,2,n-1,3,1"}, {}, ""},
      {K::hamiltonian_cycle, 5, "x<=a<=z<=1<=y", {"1,n,3,2,n-1,1"}, {}, ""},
      {K::hamiltonian_cycle, 6, "x<=y<=1<=z<=a", {"1,n,n-1,2,3,1"}, {}, ""},
      {K::hamiltonian_cycle, 7, "x<=y,z<=a<=1", {"1,n,n-1,3,2,1"}, {}, ""},

      // Printed as "2,n-1,3,2"; none of those edges exist here, the reverse
      // orientation is what the edge clauses force.
      {K::two_cycles, 1, "x<=1<=y,z<=a", {"2,3,n-1,2", "1,n,n-1,2,1"}, {}, ""},
      {K::two_cycles, 2, "x<=a<=y,z<=1", {"3,1,n,3", "3,2,n-1,3"}, {}, ""},
      {K::two_cycles, 3, "x<=z,y<=1<=a", {"1,n,3,1", "1,n,n-1,2,1"}, {}, ""},
      {K::two_cycles, 4, "1<=x<=a<=y,z", {"3,n,2,3", "3,n-1,1,3"}, {}, ""},

      {K::cycle_extra_edge, 1, "1<=x<=z<=a<=y", {"3,n,n-1,1,3"}, {"2,3"}, "2"},
      {K::cycle_extra_edge, 2, "x<=y<=a<=z<=1", {"3,2,1,n,3"}, {"n-1,3"}, "n-1"},

      {K::cycle_two_extra_edges, 1, "x<=1<=z<=a<=y", {"1,n,n-1,1"}, {"2,3", "3,n-1"}, "2"},
      {K::cycle_two_extra_edges, 2, "x<=y<=a<=1<=z", {"1,n,2,1"}, {"n-1,3", "3,1"}, "n-1"},

      {K::sink_cycle_extra_edge, 1, "z<x<y<a<=1", {"3,2,n,n-1,3"}, {"3,1"}, "1"},
      {K::sink_cycle_extra_edge, 2, "x<z<a<y<=1", {"3,1,n,n-1,3"}, {"3,2"}, "2"},
      {K::sink_cycle_extra_edge, 3, "y<a<z<x<=1", {"3,1,n-1,n,3"}, {"3,2"}, "2"},
      {K::sink_cycle_extra_edge, 4, "a<y<x<z<=1", {"3,2,n-1,n,3"}, {"3,1"}, "1"},
      {K::sink_cycle_extra_edge, 5, "1<=a<z<x<y", {"3,n-1,1,2,3"}, {"3,n"}, "n"},
      {K::sink_cycle_extra_edge, 6, "1<=y<x<z<a", {"3,n-1,2,1,3"}, {"3,n"}, "n"},
      {K::sink_cycle_extra_edge, 7, "1<=z<a<y<x", {"3,n,1,2,3"}, {"3,n-1"}, "n-1"},
      // Printed as "(3,n-1,3)"; the row's sink n-1 fixes it as (3,n-1).
      {K::sink_cycle_extra_edge, 8, "1<=x<y<a<z", {"3,n,2,1,3"}, {"3,n-1"}, "n-1"},

      {K::sink_cycle_two_extra_edges, 1, "x<z<a<1<=y", {"1,n,n-1,1"}, {"3,2", "n,3"}, "2"},
      {K::sink_cycle_two_extra_edges, 2, "a<1<=z<x<y", {"1,2,n-1,1"}, {"3,n", "1,3"}, "n"},
      {K::sink_cycle_two_extra_edges, 3, "z<x<y<=1<a", {"2,n,n-1,2"}, {"3,1", "n,3"}, "1"},
      {K::sink_cycle_two_extra_edges, 4, "y<1<=x<z<a", {"1,n-1,2,1"}, {"3,n", "2,3"}, "n"},
      {K::sink_cycle_two_extra_edges, 5, "y<a<z<1<=x", {"1,n-1,n,1"}, {"3,2", "n-1,3"}, "2"},
      {K::sink_cycle_two_extra_edges, 6, "z<1<=a<y<x", {"1,2,n,1"}, {"3,n-1", "1,3"}, "n-1"},
      {K::sink_cycle_two_extra_edges, 7, "a<y<x<1<=z", {"2,n-1,n,2"}, {"3,1", "n-1,3"}, "1"},
      {K::sink_cycle_two_extra_edges, 8, "x<1<=y<a<z", {"1,n,2,1"}, {"3,n-1", "2,3"}, "n-1"},

      // Mirrored pairs share the sink column.
      {K::sink_cycle_missing_vertex, 1, "x<z<1<=a<y", {"1,n,3,n-1,1"}, {}, "2"},
      {K::sink_cycle_missing_vertex, 2, "y<a<1<=z<x", {"1,n-1,3,n,1"}, {}, "2"},
      {K::sink_cycle_missing_vertex, 3, "z<a<=1<y<x", {"1,3,2,n,1"}, {}, "n-1"},
      {K::sink_cycle_missing_vertex, 4, "x<y<=1<a<z", {"1,n,2,3,1"}, {}, "n-1"},
      {K::sink_cycle_missing_vertex, 5, "z,y<1<a,x", {"1,n-1,2,n,1"}, {}, "3"},
      {K::sink_cycle_missing_vertex, 6, "x,a<1<z,y", {"1,n,2,n-1,1"}, {}, "3"},
      {K::sink_cycle_missing_vertex, 7, "y<x<=1<z<a", {"1,n-1,2,3,1"}, {}, "n"},
      {K::sink_cycle_missing_vertex, 8, "a<z<=1<x<y", {"1,3,2,n-1,1"}, {}, "n"},
      {K::sink_cycle_missing_vertex, 9, "a<y<1<=x<z", {"3,n,2,n-1,3"}, {}, "1"},
      {K::sink_cycle_missing_vertex, 10, "z<x<1<=y<a", {"3,n-1,2,n,3"}, {}, "1"},
  };
  return rows;
}

/// Every row whose relation holds at `p` (unreduced parameters).
inline std::vector<const TableRow*> table_rows_matching(const ZParams& p) {
  std::vector<const TableRow*> out;
  for (const auto& row : z_table_rows())
    if (relation_holds(row.relation, p)) out.push_back(&row);
  return out;
}

/// First matching row in table order, if any.
inline const TableRow* table_oracle(const ZParams& p) {
  p.validate(5);
  for (const auto& row : z_table_rows())
    if (relation_holds(row.relation, p)) return &row;
  return nullptr;
}

/// Edges a row claims (cycle edges and extra edges), 0-based, for order n.
inline std::vector<Edge> claimed_edges(const TableRow& row, std::size_t n) {
  std::vector<Edge> out;
  for (auto cycle : row.cycles) {
    const auto walk = table_walk(cycle, n);
    for (std::size_t k = 0; k + 1 < walk.size(); ++k) out.emplace_back(walk[k], walk[k + 1]);
  }
  for (auto e : row.extra_edges) {
    const auto pair = table_walk(e, n);
    out.emplace_back(pair[0], pair[1]);
  }
  return out;
}

/// Claimed edges missing from `g`.
inline std::vector<Edge> check_table_row(const TableRow& row, const EfficiencyDigraph& g) {
  std::vector<Edge> missing;
  for (const auto& [i, j] : claimed_edges(row, g.size()))
    if (!g.has_edge(i, j)) missing.emplace_back(i, j);
  return missing;
}

}  // namespace recip
