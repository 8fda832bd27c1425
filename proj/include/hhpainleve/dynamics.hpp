#ifndef HHPAINLEVE_DYNAMICS_HPP
#define HHPAINLEVE_DYNAMICS_HPP

// Numerical integration of the autonomous flows and of the non-autonomous
// Pfaffian system along piecewise-linear paths in the (t1, t2) plane.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <string>
#include <utility>
#include <vector>

#include <boost/numeric/odeint.hpp>

#include "hhpainleve/errors.hpp"
#include "hhpainleve/model.hpp"
#include "hhpainleve/numeric.hpp"

namespace hhp {

using StateVector = std::array<double, 4>;

struct PhaseState {
  double x1 = 0.0;
  double x2 = 0.0;
  double p1 = 0.0;
  double p2 = 0.0;

  StateVector to_array() const { return {x1, x2, p1, p2}; }
  static PhaseState from_array(const StateVector& y) { return {y[0], y[1], y[2], y[3]}; }

  friend bool operator==(const PhaseState&, const PhaseState&) = default;
};

struct TimePoint {
  double t1 = 0.0;
  double t2 = 0.0;

  friend bool operator==(const TimePoint&, const TimePoint&) = default;
};

struct Path {
  std::vector<TimePoint> waypoints;

  void validate() const {
    if (waypoints.size() < 2) throw InvalidArgument("path needs at least 2 waypoints");
    for (std::size_t i = 0; i + 1 < waypoints.size(); ++i)
      if (waypoints[i] == waypoints[i + 1]) throw InvalidArgument("consecutive path waypoints coincide");
    for (const auto& w : waypoints)
      if (!std::isfinite(w.t1) || !std::isfinite(w.t2)) throw InvalidArgument("non-finite waypoint");
  }
};

enum class Method { Rk4Fixed, Rk45Adaptive };

struct IntegratorConfig {
  Method method = Method::Rk45Adaptive;
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
  // Upper bound on the adaptive step; the fixed step for rk4.
  double max_step = 0.01;
  // Adaptive steps below this raise StepSizeUnderflow.
  double min_step = 1e-12;
  double alpha = 0.0;
  // Spectral parameters at which eigenvalues of L are sampled.
  std::vector<double> lambdas{0.5, 1.0, 2.0};

  void validate() const {
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) throw InvalidArgument("tolerances must be positive");
    if (!(max_step > 0.0)) throw InvalidArgument("max_step must be positive");
    if (!(min_step > 0.0) || min_step > max_step) throw InvalidArgument("min_step must be in (0, max_step]");
    if (!std::isfinite(alpha)) throw InvalidArgument("alpha must be finite");
  }
};

struct Sample {
  double s = 0.0;
  TimePoint t;
  PhaseState state;
  double h1 = 0.0;
  double h2 = 0.0;
  // Principal eigenvalue +sqrt(-det L(lambda_j)); the other one is its negative.
  std::vector<std::complex<double>> eigenvalues;
};

struct Trajectory {
  bool deformed = false;
  double alpha = 0.0;
  std::vector<double> lambdas;
  std::vector<Sample> samples;

  const Sample& front() const { return samples.front(); }
  const Sample& back() const { return samples.back(); }
};

// ---------------------------------------------------------------------------
// Numeric images of the symbolic model, built once per variant.

class CompiledModel {
 public:
  explicit CompiledModel(bool deformed) {
    const HamiltonianSet H = hamiltonians(deformed);
    h_ = {CompiledPoly(H.h1), CompiledPoly(H.h2)};
    for (int k = 0; k < 2; ++k) {
      const VectorField4 Y = hamiltonian_vector_field(k == 0 ? H.h1 : H.h2);
      for (std::size_t i = 0; i < 4; ++i) fields_[k][i] = CompiledPoly(Y[i]);
    }
    const LaxTriple lax = lax_matrices(deformed);
    lax_l_ = {CompiledPoly(lax.L(0, 0)), CompiledPoly(lax.L(0, 1)), CompiledPoly(lax.L(1, 0))};
  }

  static std::array<double, kNumVars> point(const PhaseState& s, const TimePoint& t, double alpha,
                                            double lambda = 0.0) {
    return {s.x1, s.x2, s.p1, s.p2, t.t1, t.t2, lambda, alpha};
  }

  StateVector field(int k, const std::array<double, kNumVars>& x) const {
    const auto& f = fields_[k - 1];
    return {f[0](x), f[1](x), f[2](x), f[3](x)};
  }

  double hamiltonian(int r, const std::array<double, kNumVars>& x) const { return h_[r - 1](x); }

  // -det L = L11^2 + L12 L21 for the traceless L.
  double minus_det_l(const std::array<double, kNumVars>& x) const {
    const double a = lax_l_[0](x);
    return a * a + lax_l_[1](x) * lax_l_[2](x);
  }

 private:
  std::array<CompiledPoly, 2> h_;
  std::array<std::array<CompiledPoly, 4>, 2> fields_;
  std::array<CompiledPoly, 3> lax_l_;
};

inline const CompiledModel& compiled_model(bool deformed) {
  static const CompiledModel autonomous(false);
  static const CompiledModel deformed_model(true);
  return deformed ? deformed_model : autonomous;
}

namespace detail {

inline void require_regular(const PhaseState& s, double alpha) {
  if (!std::isfinite(s.x1) || !std::isfinite(s.x2) || !std::isfinite(s.p1) || !std::isfinite(s.p2))
    throw SingularState("non-finite phase state (solution blew up)");
  if (alpha != 0.0 && s.x2 == 0.0) throw SingularState("x2 = 0 with alpha != 0");
}

inline void require_flow_index(int k) {
  if (k != 1 && k != 2) throw InvalidArgument("flow index must be 1 or 2, got " + std::to_string(k));
}

}  // namespace detail

inline StateVector flow_rhs(bool deformed, int k, const PhaseState& state, const TimePoint& t, double alpha) {
  detail::require_flow_index(k);
  detail::require_regular(state, alpha);
  return compiled_model(deformed).field(k, CompiledModel::point(state, t, alpha));
}

inline std::vector<std::pair<std::complex<double>, std::complex<double>>> eigenvalue_samples(
    bool deformed, const PhaseState& state, const TimePoint& t, double alpha, const std::vector<double>& lambdas) {
  const CompiledModel& model = compiled_model(deformed);
  std::vector<std::pair<std::complex<double>, std::complex<double>>> out;
  out.reserve(lambdas.size());
  for (double lambda : lambdas) {
    const std::complex<double> z = std::sqrt(std::complex<double>(model.minus_det_l(
        CompiledModel::point(state, t, alpha, lambda))));
    out.emplace_back(z, -z);
  }
  return out;
}

inline Sample make_sample(bool deformed, double s, const TimePoint& t, const PhaseState& state, double alpha,
                          const std::vector<double>& lambdas) {
  const CompiledModel& model = compiled_model(deformed);
  const auto x = CompiledModel::point(state, t, alpha);
  Sample sample{s, t, state, model.hamiltonian(1, x), model.hamiltonian(2, x), {}};
  sample.eigenvalues.reserve(lambdas.size());
  for (const auto& [plus, minus] : eigenvalue_samples(deformed, state, t, alpha, lambdas))
    sample.eigenvalues.push_back(plus);
  return sample;
}

// Integrates dy/ds = rhs(s, y) from s0 to s1 (s1 >= s0), calling observe(s, y)
// after every accepted step. The last observed s is exactly s1.
template <class Rhs, class Observer>
void integrate_interval(const Rhs& rhs, StateVector& y, double s0, double s1, const IntegratorConfig& cfg,
                        const Observer& observe) {
  namespace odeint = boost::numeric::odeint;
  auto system = [&rhs](const StateVector& x, StateVector& dxdt, double s) { dxdt = rhs(s, x); };
  const double span = s1 - s0;
  if (span <= 0.0) return;

  if (cfg.method == Method::Rk4Fixed) {
    odeint::runge_kutta4<StateVector> stepper;
    const auto n = static_cast<long>(std::ceil(span / cfg.max_step * (1.0 - 1e-12)));
    const double dt = span / static_cast<double>(n);
    for (long i = 0; i < n; ++i) {
      const double s = s0 + static_cast<double>(i) * dt;
      stepper.do_step(system, y, s, dt);
      observe(i + 1 == n ? s1 : s0 + static_cast<double>(i + 1) * dt, y);
    }
    return;
  }

  auto stepper =
      odeint::make_controlled(cfg.abs_tol, cfg.rel_tol, cfg.max_step, odeint::runge_kutta_dopri5<StateVector>());
  double s = s0;
  double dt = std::min(cfg.max_step, span);
  while (s < s1) {
    const double remaining = s1 - s;
    const bool last = dt >= remaining;
    if (last) dt = remaining;
    double s_step = s;
    if (stepper.try_step(system, y, s_step, dt) == odeint::success) {
      s = last ? s1 : s_step;
      observe(s, y);
      if (last) break;
    } else if (dt < cfg.min_step && dt < remaining) {
      throw StepSizeUnderflow("adaptive step fell below " + std::to_string(cfg.min_step) + " at s = " +
                              std::to_string(s));
    }
  }
}

// Flow of X_{h_k} for `duration` >= 0.
inline Trajectory integrate_autonomous(int k, const PhaseState& state0, double duration, const IntegratorConfig& cfg) {
  detail::require_flow_index(k);
  cfg.validate();
  if (!std::isfinite(duration) || duration < 0.0) throw InvalidArgument("duration must be finite and >= 0");
  detail::require_regular(state0, cfg.alpha);

  const CompiledModel& model = compiled_model(false);
  const TimePoint t0{};
  Trajectory traj{false, cfg.alpha, cfg.lambdas, {}};
  traj.samples.push_back(make_sample(false, 0.0, t0, state0, cfg.alpha, cfg.lambdas));

  auto rhs = [&](double, const StateVector& y) {
    const PhaseState s = PhaseState::from_array(y);
    detail::require_regular(s, cfg.alpha);
    return model.field(k, CompiledModel::point(s, t0, cfg.alpha));
  };
  StateVector y = state0.to_array();
  integrate_interval(rhs, y, 0.0, duration, cfg, [&](double s, const StateVector& x) {
    traj.samples.push_back(make_sample(false, s, t0, PhaseState::from_array(x), cfg.alpha, cfg.lambdas));
  });
  return traj;
}

// Solves d xi = Y_{H1} dt1 + Y_{H2} dt2 along each straight segment of the
// path, parameterized by arclength; the sample parameter is the cumulative
// arclength.
inline Trajectory integrate_pfaffian(const PhaseState& state0, const TimePoint& t0, const Path& path,
                                     const IntegratorConfig& cfg, bool deformed = true) {
  cfg.validate();
  path.validate();
  if (!(path.waypoints.front() == t0)) throw InvalidArgument("path must start at t0");
  detail::require_regular(state0, cfg.alpha);

  const CompiledModel& model = compiled_model(deformed);
  Trajectory traj{deformed, cfg.alpha, cfg.lambdas, {}};
  traj.samples.push_back(make_sample(deformed, 0.0, t0, state0, cfg.alpha, cfg.lambdas));

  StateVector y = state0.to_array();
  double offset = 0.0;
  for (std::size_t i = 0; i + 1 < path.waypoints.size(); ++i) {
    const TimePoint a = path.waypoints[i];
    const TimePoint b = path.waypoints[i + 1];
    const double length = std::hypot(b.t1 - a.t1, b.t2 - a.t2);
    const double d1 = (b.t1 - a.t1) / length;
    const double d2 = (b.t2 - a.t2) / length;
    auto time_at = [&](double s) { return s >= length ? b : TimePoint{a.t1 + s * d1, a.t2 + s * d2}; };

    auto rhs = [&](double s, const StateVector& x) {
      const PhaseState st = PhaseState::from_array(x);
      detail::require_regular(st, cfg.alpha);
      const auto pt = CompiledModel::point(st, time_at(s), cfg.alpha);
      StateVector out{};
      if (d1 != 0.0) {
        const StateVector y1 = model.field(1, pt);
        for (std::size_t j = 0; j < 4; ++j) out[j] += d1 * y1[j];
      }
      if (d2 != 0.0) {
        const StateVector y2 = model.field(2, pt);
        for (std::size_t j = 0; j < 4; ++j) out[j] += d2 * y2[j];
      }
      return out;
    };
    integrate_interval(rhs, y, 0.0, length, cfg, [&](double s, const StateVector& x) {
      traj.samples.push_back(
          make_sample(deformed, offset + s, time_at(s), PhaseState::from_array(x), cfg.alpha, cfg.lambdas));
    });
    offset += length;
  }
  return traj;
}

inline double max_norm_difference(const PhaseState& a, const PhaseState& b) {
  const StateVector x = a.to_array();
  const StateVector y = b.to_array();
  double m = 0.0;
  for (std::size_t i = 0; i < 4; ++i) m = std::max(m, std::abs(x[i] - y[i]));
  return m;
}

// max-norm of phi_2^u(phi_1^s(xi0)) - phi_1^s(phi_2^u(xi0)).
inline double check_flow_commutation_numeric(const PhaseState& state0, double s, double u,
                                             const IntegratorConfig& cfg) {
  const PhaseState a = integrate_autonomous(2, integrate_autonomous(1, state0, s, cfg).back().state, u, cfg).back().state;
  const PhaseState b = integrate_autonomous(1, integrate_autonomous(2, state0, u, cfg).back().state, s, cfg).back().state;
  return max_norm_difference(a, b);
}

// Compares the central difference d/dmu U_k(e^{2 mu}) with 2 lambda dU_k/dlambda
// at lambda = e^{2 mu} for the deformed U_k; returns the largest entry deviation.
inline double check_reparametrization_numeric(int k, const PhaseState& state, const TimePoint& t,
                                              const std::vector<double>& mu_samples, double alpha = 0.0,
                                              double fd_step = 1e-6) {
  detail::require_flow_index(k);
  const PolyMatrix2 U = lax_matrices(true).U(k);
  const PolyMatrix2 dU = partial_derivative(U, Var::Lambda);
  auto at = [&](double lambda) {
    return NumericPoint{}
        .set(Var::X1, state.x1)
        .set(Var::X2, state.x2)
        .set(Var::P1, state.p1)
        .set(Var::P2, state.p2)
        .set(Var::T1, t.t1)
        .set(Var::T2, t.t2)
        .set(Var::Lambda, lambda)
        .set(Var::Alpha, alpha);
  };
  double worst = 0.0;
  for (double mu : mu_samples) {
    const double lambda = std::exp(2.0 * mu);
    const NumericPoint plus = at(std::exp(2.0 * (mu + fd_step)));
    const NumericPoint minus = at(std::exp(2.0 * (mu - fd_step)));
    const NumericPoint here = at(lambda);
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) {
        const double fd =
            (substitute_numeric(U(r, c), plus) - substitute_numeric(U(r, c), minus)) / (2.0 * fd_step);
        const double exact = 2.0 * lambda * substitute_numeric(dU(r, c), here);
        worst = std::max(worst, std::abs(fd - exact));
      }
  }
  return worst;
}

struct TrajectorySummary {
  double max_h1_drift = 0.0;
  double max_h2_drift = 0.0;
  double max_eigenvalue_drift = 0.0;
};

inline TrajectorySummary summarize(const Trajectory& traj) {
  TrajectorySummary sum;
  if (traj.samples.empty()) return sum;
  const Sample& first = traj.front();
  for (const Sample& s : traj.samples) {
    sum.max_h1_drift = std::max(sum.max_h1_drift, std::abs(s.h1 - first.h1));
    sum.max_h2_drift = std::max(sum.max_h2_drift, std::abs(s.h2 - first.h2));
    for (std::size_t j = 0; j < s.eigenvalues.size(); ++j)
      sum.max_eigenvalue_drift = std::max(sum.max_eigenvalue_drift, std::abs(s.eigenvalues[j] - first.eigenvalues[j]));
  }
  return sum;
}

}  // namespace hhp

#endif  // HHPAINLEVE_DYNAMICS_HPP
