#ifndef HHPAINLEVE_CLI_HPP
#define HHPAINLEVE_CLI_HPP

// Command-line front end: verify, potential, simulate, pfaffian, spectral.
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 runtime singularity (SingularState / StepSizeUnderflow).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hhpainleve/dynamics.hpp"
#include "hhpainleve/io.hpp"
#include "hhpainleve/model.hpp"
#include "hhpainleve/verify.hpp"

namespace hhp::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2, kSingular = 3 };

inline constexpr int kMaxPotentialIndex = 64;

inline std::vector<double> parse_doubles(const std::string& text, char sep = ',') {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw InvalidArgument("not a number: '" + item + "'");
    }
    if (item.find_first_not_of(" \t", used) != std::string::npos) throw InvalidArgument("not a number: '" + item + "'");
    if (!std::isfinite(v)) throw InvalidArgument("non-finite value: '" + item + "'");
    out.push_back(v);
  }
  return out;
}

inline PhaseState parse_state(const std::string& text) {
  const auto v = parse_doubles(text);
  if (v.size() != 4) throw InvalidArgument("state needs 4 comma-separated values x1,x2,p1,p2");
  return {v[0], v[1], v[2], v[3]};
}

inline TimePoint parse_time(const std::string& text) {
  const auto v = parse_doubles(text);
  if (v.size() != 2) throw InvalidArgument("time point needs 2 comma-separated values t1,t2");
  return {v[0], v[1]};
}

inline Path parse_waypoints(const std::string& text) {
  Path path;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) path.waypoints.push_back(parse_time(item));
  path.validate();
  return path;
}

// Everything a single invocation needs; filled by the argument parser.
struct RunConfig {
  std::string subcommand;
  bool deformed = false;
  bool pfaffian_deformed = true;
  int flow = 1;
  std::string state = "1,1,0,0";
  std::string t0 = "0,0";
  double duration = 1.0;
  std::string waypoints;
  std::string method = "rk45";
  IntegratorConfig integrator;
  std::string lambdas = "0.5,1,2";
  std::string out;
  std::string format = "csv";
  std::string svg;
  std::optional<std::string> filter;
  bool json = false;
  int k = 0;
};

inline IntegratorConfig integrator_config(const RunConfig& rc) {
  IntegratorConfig cfg = rc.integrator;
  cfg.method = rc.method == "rk4" ? Method::Rk4Fixed : Method::Rk45Adaptive;
  cfg.lambdas = parse_doubles(rc.lambdas);
  cfg.validate();
  return cfg;
}

inline nlohmann::json report_json(const IdentityReport& r) {
  nlohmann::json j = {{"name", r.name}, {"passed", r.passed}, {"residual", render(r.residual)}};
  if (r.expected) j["expected"] = render(*r.expected);
  if (!r.parts.empty()) {
    j["parts"] = nlohmann::json::array();
    for (const auto& p : r.parts) j["parts"].push_back(report_json(p));
  }
  return j;
}

inline void print_report(std::ostream& out, const IdentityReport& r, const std::string& indent = "") {
  out << indent << (r.passed ? "PASS " : "FAIL ") << r.name;
  if (r.expected || !r.passed) {
    out << ": residual = " << render(r.residual);
    if (r.expected) out << " (expected " << render(*r.expected) << ")";
  }
  out << '\n';
  for (const auto& p : r.parts) print_report(out, p, indent + "  ");
}

inline int cmd_verify(const RunConfig& rc, std::ostream& out, std::ostream& err) {
  std::optional<std::regex> pattern;
  if (rc.filter) {
    try {
      pattern.emplace(*rc.filter);
    } catch (const std::regex_error&) {
      err << "error: invalid filter pattern '" << *rc.filter << "'\n";
      return kUsage;
    }
  }
  std::vector<IdentityReport> selected;
  for (auto& r : run_all_checks())
    if (!pattern || std::regex_search(r.name, *pattern)) selected.push_back(std::move(r));
  if (selected.empty()) {
    err << "error: filter '" << rc.filter.value_or("") << "' matches no check\n";
    return kUsage;
  }
  std::size_t passed = 0;
  for (const auto& r : selected) passed += r.passed ? 1 : 0;
  if (rc.json) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : selected) j.push_back(report_json(r));
    out << j.dump(2) << '\n';
  } else {
    for (const auto& r : selected) print_report(out, r);
    out << passed << '/' << selected.size() << " checks passed\n";
  }
  return passed == selected.size() ? kOk : kVerificationFailed;
}

inline int cmd_potential(const RunConfig& rc, std::ostream& out, std::ostream& err) {
  if (rc.k < -kMaxPotentialIndex || rc.k > kMaxPotentialIndex) {
    err << "error: |k| must be <= " << kMaxPotentialIndex << '\n';
    return kUsage;
  }
  const PotentialPair v = potential(rc.k);
  out << "V1 = " << v.v1 << '\n' << "V2 = " << v.v2 << '\n';
  return kOk;
}

inline void write_outputs(const RunConfig& rc, const Trajectory& traj) {
  if (!rc.out.empty()) {
    std::ofstream file(rc.out);
    if (!file) throw InvalidArgument("cannot open output file " + rc.out);
    if (rc.format == "json")
      write_json(file, traj);
    else
      write_csv(file, traj);
  }
  if (!rc.svg.empty()) {
    std::ofstream file(rc.svg);
    if (!file) throw InvalidArgument("cannot open svg file " + rc.svg);
    write_svg(file, traj);
  }
}

inline void print_summary(std::ostream& out, const Trajectory& traj) {
  const TrajectorySummary sum = summarize(traj);
  const Sample& end = traj.back();
  char buf[64];
  auto sci = [&](double v) {
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return std::string(buf);
  };
  out << "samples: " << traj.samples.size() << '\n';
  out << "final: s=" << format_double(end.s) << " t1=" << format_double(end.t.t1) << " t2=" << format_double(end.t.t2)
      << " x1=" << format_double(end.state.x1) << " x2=" << format_double(end.state.x2)
      << " p1=" << format_double(end.state.p1) << " p2=" << format_double(end.state.p2) << '\n';
  out << "max |h1 - h1(0)|: " << sci(sum.max_h1_drift) << '\n';
  out << "max |h2 - h2(0)|: " << sci(sum.max_h2_drift) << '\n';
  out << "max eigenvalue drift: " << sci(sum.max_eigenvalue_drift) << '\n';
}

inline int cmd_simulate(const RunConfig& rc, std::ostream& out) {
  const IntegratorConfig cfg = integrator_config(rc);
  const PhaseState state0 = parse_state(rc.state);
  if (!std::isfinite(rc.duration) || rc.duration < 0.0) throw InvalidArgument("duration must be >= 0");
  Trajectory traj;
  if (!rc.deformed) {
    traj = integrate_autonomous(rc.flow, state0, rc.duration, cfg);
  } else {
    const TimePoint t0 = parse_time(rc.t0);
    if (rc.duration == 0.0) {
      detail::require_regular(state0, cfg.alpha);
      traj = Trajectory{true, cfg.alpha, cfg.lambdas, {make_sample(true, 0.0, t0, state0, cfg.alpha, cfg.lambdas)}};
    } else {
      TimePoint t_end = t0;
      (rc.flow == 1 ? t_end.t1 : t_end.t2) += rc.duration;
      traj = integrate_pfaffian(state0, t0, Path{{t0, t_end}}, cfg, true);
    }
  }
  write_outputs(rc, traj);
  print_summary(out, traj);
  return kOk;
}

inline int cmd_pfaffian(const RunConfig& rc, std::ostream& out) {
  const IntegratorConfig cfg = integrator_config(rc);
  const Path path = parse_waypoints(rc.waypoints);
  const Trajectory traj = integrate_pfaffian(parse_state(rc.state), path.waypoints.front(), path, cfg, rc.pfaffian_deformed);
  write_outputs(rc, traj);
  print_summary(out, traj);
  return kOk;
}

inline int cmd_spectral(const RunConfig& rc, std::ostream& out) {
  const PhaseState state = parse_state(rc.state);
  const TimePoint t = parse_time(rc.t0);
  const std::vector<double> lambdas = parse_doubles(rc.lambdas);
  detail::require_regular(state, rc.integrator.alpha);

  out << "-det L(lambda) coefficients" << (rc.deformed ? " (deformed)" : "") << ":\n";
  const auto coeffs = collect(spectral_curve(rc.deformed), Var::Lambda);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
    out << "  lambda^" << it->first << ": " << it->second << '\n';

  out << "eigenvalues at x1,x2,p1,p2 = " << format_double(state.x1) << ',' << format_double(state.x2) << ','
      << format_double(state.p1) << ',' << format_double(state.p2) << ":\n";
  const auto evs = eigenvalue_samples(rc.deformed, state, t, rc.integrator.alpha, lambdas);
  for (std::size_t j = 0; j < lambdas.size(); ++j) {
    const auto& [plus, minus] = evs[j];
    const double minus_det =
        compiled_model(rc.deformed).minus_det_l(CompiledModel::point(state, t, rc.integrator.alpha, lambdas[j]));
    out << "  lambda=" << format_double(lambdas[j]) << ": -det L = " << format_double(minus_det)
        << "; eigenvalues = (" << format_double(plus.real()) << ", " << format_double(plus.imag()) << "), ("
        << format_double(minus.real()) << ", " << format_double(minus.imag()) << ")\n";
  }
  return kOk;
}

inline void add_integrator_options(CLI::App* sub, RunConfig& rc) {
  sub->add_option("--alpha", rc.integrator.alpha, "Coefficient of the x2^-2 potential")->capture_default_str();
  sub->add_option("--state", rc.state, "Initial state x1,x2,p1,p2")->capture_default_str();
  sub->add_option("--method", rc.method, "Integrator")
      ->check(CLI::IsMember({"rk45", "rk4"}))
      ->capture_default_str();
  sub->add_option("--abs-tol", rc.integrator.abs_tol)->capture_default_str();
  sub->add_option("--rel-tol", rc.integrator.rel_tol)->capture_default_str();
  sub->add_option("--max-step", rc.integrator.max_step, "Adaptive step bound / rk4 step")->capture_default_str();
  sub->add_option("--min-step", rc.integrator.min_step, "Underflow threshold")->capture_default_str();
  sub->add_option("--lambdas", rc.lambdas, "Spectral parameters for eigenvalue samples")->capture_default_str();
  sub->add_option("--out", rc.out, "Trajectory output file");
  sub->add_option("--format", rc.format, "Trajectory format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sub->add_option("--svg", rc.svg, "Write an (s, x1) polyline SVG");
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  RunConfig rc;
  CLI::App app{"Extended Henon-Heiles system and its Painleve-type deformation"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "Run the exact structural identity checks");
  verify->add_option("--filter", rc.filter, "Regex selecting checks by name");
  verify->add_flag("--json", rc.json, "Machine-readable report");

  auto* pot = app.add_subcommand("potential", "Print the separable potential V^(k)");
  pot->add_option("--k", rc.k, "Recursion index")->required();

  auto* sim = app.add_subcommand("simulate", "Integrate a single flow");
  sim->add_option("--flow", rc.flow, "Flow index")
      ->transform(CLI::CheckedTransformer(std::map<std::string, int>{{"t1", 1}, {"t2", 2}}))
      ->capture_default_str();
  sim->add_option("--deformed", rc.deformed, "Use the non-autonomous system")->capture_default_str();
  sim->add_option("--duration", rc.duration)->capture_default_str();
  sim->add_option("--t0", rc.t0, "Starting t1,t2 (deformed only)")->capture_default_str();
  add_integrator_options(sim, rc);

  auto* pff = app.add_subcommand("pfaffian", "Integrate the Pfaffian system along a path");
  pff->add_option("--waypoints", rc.waypoints, "Path \"t1,t2;t1,t2;...\"")->required();
  pff->add_option("--deformed", rc.pfaffian_deformed, "Use the non-autonomous system")->capture_default_str();
  add_integrator_options(pff, rc);

  auto* spec = app.add_subcommand("spectral", "Spectral curve and eigenvalues of L");
  spec->add_option("--state", rc.state, "State x1,x2,p1,p2")->capture_default_str();
  spec->add_option("--alpha", rc.integrator.alpha)->capture_default_str();
  spec->add_option("--t", rc.t0, "Time point t1,t2")->capture_default_str();
  spec->add_option("--deformed", rc.deformed)->capture_default_str();
  spec->add_option("--lambdas", rc.lambdas)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (verify->parsed()) return cmd_verify(rc, out, err);
    if (pot->parsed()) return cmd_potential(rc, out, err);
    if (sim->parsed()) return cmd_simulate(rc, out);
    if (pff->parsed()) return cmd_pfaffian(rc, out);
    if (spec->parsed()) return cmd_spectral(rc, out);
  } catch (const SingularState& e) {
    err << "singular: " << e.what() << '\n';
    return kSingular;
  } catch (const StepSizeUnderflow& e) {
    err << "step size underflow: " << e.what() << '\n';
    return kSingular;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace hhp::cli

#endif  // HHPAINLEVE_CLI_HPP
