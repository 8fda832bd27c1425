#ifndef HHPAINLEVE_IO_HPP
#define HHPAINLEVE_IO_HPP

// Trajectory export. Column order (CSV header and JSON "columns"):
//   s, t1, t2, x1, x2, p1, p2, h1, h2, ev0_re, ev0_im, ev1_re, ev1_im, ...
// where ev<j> is the principal eigenvalue +sqrt(-det L(lambda_j)).

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hhpainleve/dynamics.hpp"

namespace hhp {

inline std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::vector<std::string> trajectory_columns(std::size_t n_lambdas) {
  std::vector<std::string> cols = {"s", "t1", "t2", "x1", "x2", "p1", "p2", "h1", "h2"};
  for (std::size_t j = 0; j < n_lambdas; ++j) {
    cols.push_back("ev" + std::to_string(j) + "_re");
    cols.push_back("ev" + std::to_string(j) + "_im");
  }
  return cols;
}

inline std::vector<double> sample_row(const Sample& s) {
  std::vector<double> row = {s.s, s.t.t1, s.t.t2, s.state.x1, s.state.x2, s.state.p1, s.state.p2, s.h1, s.h2};
  for (const auto& z : s.eigenvalues) {
    row.push_back(z.real());
    row.push_back(z.imag());
  }
  return row;
}

inline void write_csv(std::ostream& os, const Trajectory& traj) {
  const auto cols = trajectory_columns(traj.lambdas.size());
  for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
  os << '\n';
  for (const Sample& s : traj.samples) {
    const auto row = sample_row(s);
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_double(row[i]);
    os << '\n';
  }
}

inline nlohmann::json to_json(const Trajectory& traj) {
  nlohmann::json rows = nlohmann::json::array();
  for (const Sample& s : traj.samples) rows.push_back(sample_row(s));
  return {{"deformed", traj.deformed},
          {"alpha", traj.alpha},
          {"lambdas", traj.lambdas},
          {"columns", trajectory_columns(traj.lambdas.size())},
          {"rows", std::move(rows)}};
}

inline void write_json(std::ostream& os, const Trajectory& traj) { os << to_json(traj).dump(2) << '\n'; }

// Minimal polyline of (s, x1) for a quick look at a run.
inline void write_svg(std::ostream& os, const Trajectory& traj) {
  constexpr double width = 640.0;
  constexpr double height = 400.0;
  constexpr double margin = 20.0;
  double s_min = traj.front().s, s_max = traj.back().s;
  double x_min = traj.front().state.x1, x_max = x_min;
  for (const Sample& s : traj.samples) {
    x_min = std::min(x_min, s.state.x1);
    x_max = std::max(x_max, s.state.x1);
  }
  const double s_span = s_max > s_min ? s_max - s_min : 1.0;
  const double x_span = x_max > x_min ? x_max - x_min : 1.0;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\">\n";
  os << "<polyline fill=\"none\" stroke=\"black\" points=\"";
  for (const Sample& s : traj.samples) {
    const double px = margin + (s.s - s_min) / s_span * (width - 2 * margin);
    const double py = height - margin - (s.state.x1 - x_min) / x_span * (height - 2 * margin);
    os << px << ',' << py << ' ';
  }
  os << "\"/>\n</svg>\n";
}

}  // namespace hhp

#endif  // HHPAINLEVE_IO_HPP
