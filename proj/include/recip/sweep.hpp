#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "recip/io.hpp"
#include "recip/perron.hpp"
#include "recip/z_family.hpp"

namespace recip {

struct SweepRecord {
  ZParams params;
  double r = 0.0;
  bool efficient = false;
  bool guaranteed = false;
  std::optional<std::string> exception;
  bool sink_present = false;
  std::optional<std::size_t> sink_vertex;  // 0-based
  bool agrees = false;                     // efficient <=> !sink_present
};

inline SweepRecord sweep_point(const ZParams& p, double eps_rel = kDefaultEdgeEps) {
  const auto verdict = guarantee_n5plus(p);
  const auto sink = sink_characterization(p, eps_rel);
  SweepRecord rec;
  rec.params = p;
  rec.r = sink.perron_value;
  rec.efficient = sink.efficient;
  rec.guaranteed = verdict.guaranteed_efficient;
  rec.exception = verdict.matched_exception;
  rec.sink_present = sink.sink_present;
  rec.sink_vertex = sink.sink_vertex;
  rec.agrees = sink.agrees;
  return rec;
}

/// All (x, y, z, a) in axis^4, row order lexicographic in the axis indices
/// (x slowest). Points are evaluated on `threads` workers; the result order
/// does not depend on scheduling.
inline std::vector<SweepRecord> grid_sweep(std::size_t n, const std::vector<double>& axis,
                                           double eps_rel = kDefaultEdgeEps,
                                           unsigned threads = 0) {
  if (n < 5) throw InputError("grid sweep needs order at least 5");
  if (axis.empty()) throw InputError("grid axis is empty");
  for (double v : axis)
    if (!(v > 0.0)) throw InputError("grid axis values must be positive");
  const std::size_t m = axis.size();
  const std::size_t total = m * m * m * m;
  std::vector<SweepRecord> out(total);
  auto point = [&](std::size_t k) {
    const std::size_t ix = k / (m * m * m), iy = k / (m * m) % m, iz = k / m % m, ia = k % m;
    return ZParams{n, axis[ix], axis[iy], axis[iz], axis[ia]};
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, total));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (std::size_t k = t; k < total; k += threads) out[k] = sweep_point(point(k), eps_rel);
      });
    }
  }
  return out;
}

inline constexpr const char* kSweepHeader =
    "n,x,y,z,a,r,efficient,guaranteed,exception,sink_present,sink_vertex,agrees";

inline void write_sweep_csv(std::ostream& out, const std::vector<SweepRecord>& records) {
  auto b = [](bool v) { return v ? "true" : "false"; };
  out << kSweepHeader << '\n';
  for (const auto& r : records) {
    const auto& p = r.params;
    out << p.n << ',' << format_double(p.x) << ',' << format_double(p.y) << ','
        << format_double(p.z) << ',' << format_double(p.a) << ',' << format_double(r.r) << ','
        << b(r.efficient) << ',' << b(r.guaranteed) << ',' << r.exception.value_or("") << ','
        << b(r.sink_present) << ','
        << (r.sink_vertex ? std::to_string(*r.sink_vertex + 1) : std::string()) << ','
        << b(r.agrees) << '\n';
  }
}

/// {1/4, 1/2, 1, 2, 4}
inline std::vector<double> default_axis() { return {0.25, 0.5, 1.0, 2.0, 4.0}; }

}  // namespace recip
