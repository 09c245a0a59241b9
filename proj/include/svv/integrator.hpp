#pragma once

// Semi-discrete SVV system for the fractional Burgers equation,
//   d/dt u_xi = -(i xi / 2) sum_{p+q=xi} u_p u_q + G(xi) u_xi - eps_N 1_{|xi|>=m_N} xi^2 Q_xi u_xi,
// advanced with classical RK4 at a fixed step.

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "svv/diagnostics.hpp"
#include "svv/error.hpp"
#include "svv/fourier.hpp"
#include "svv/levy.hpp"
#include "svv/svv_operator.hpp"

namespace svv {

enum class Flux { burgers };

struct SolverSetup {
  SolverSetup(LevySymbol sym, SvvParams params) : symbol(std::move(sym)), svv(std::move(params)) {}

  LevySymbol symbol;
  SvvParams svv;
  Flux flux = Flux::burgers;
  double t_end = 0.0;
  std::optional<double> dt;   // fixed step, or
  std::optional<double> cfl;  // step from stable_dt on the initial state
  std::vector<double> snapshot_times;
  int diag_stride = 0;        // record diagnostics every k steps; 0: snapshots only
  int oversample = 0;         // physical grid for diagnostics; 0: 4N
  double sobolev_order = 0.5;

  int n_modes() const noexcept { return symbol.n_modes(); }
  int grid() const noexcept { return oversample > 0 ? oversample : default_oversample(n_modes()); }
};

inline void validate(const SolverSetup& s) {
  if (s.symbol.n_modes() != s.svv.n_modes)
    throw ValidationError("SolverSetup: symbol and viscosity built for different N");
  if (!(s.t_end >= 0.0)) throw ValidationError("SolverSetup: t_end must be >= 0");
  if (s.dt && s.cfl) throw ValidationError("SolverSetup: give dt or cfl, not both");
  if (!s.dt && !s.cfl) throw ValidationError("SolverSetup: one of dt or cfl is required");
  if (s.dt && !(*s.dt > 0.0)) throw ValidationError("SolverSetup: dt must be > 0");
  if (s.cfl && !(*s.cfl > 0.0 && *s.cfl <= 1.0))
    throw ValidationError("SolverSetup: cfl must lie in (0, 1]");
  if (!std::is_sorted(s.snapshot_times.begin(), s.snapshot_times.end()))
    throw ValidationError("SolverSetup: snapshot times must be sorted");
  for (double t : s.snapshot_times)
    if (t < 0.0 || t > s.t_end)
      throw ValidationError("SolverSetup: snapshot time " + std::to_string(t) +
                            " outside [0, t_end]");
  if (s.oversample != 0 && s.oversample < 2 * s.n_modes() + 1)
    throw ValidationError("SolverSetup: oversample must be >= 2N+1");
}

/// Non-finite coefficients or runaway growth during time stepping.
class BlowUpError : public std::runtime_error {
 public:
  BlowUpError(const std::string& what, double time, std::optional<Trajectory> partial = {})
      : std::runtime_error(what), time_(time), partial_(std::move(partial)) {}
  double time() const noexcept { return time_; }
  const std::optional<Trajectory>& partial() const noexcept { return partial_; }

 private:
  double time_;
  std::optional<Trajectory> partial_;
};

/// Right-hand side of the ODE system (tendency form).
inline SpectralState rhs(const SpectralState& state, const SolverSetup& setup) {
  if (state.n_modes() != setup.n_modes())
    throw ValidationError("rhs: state has N = " + std::to_string(state.n_modes()) +
                          ", setup has N = " + std::to_string(setup.n_modes()));
  const auto square = galerkin_square(state);
  const auto visc = apply_viscosity(state, setup.svv);
  const auto& g = setup.symbol;
  return state.map_modes([&](int xi, Complex c) {
    return Complex(0.0, -0.5 * xi) * square[xi] + g[xi] * c + visc[xi];
  });
}

/// cfl * min(1 / (N (|u|_inf + 1)), 1 / (eps N^2), 1 / (max|G| + 1)).
inline double stable_dt(const SpectralState& state, const SolverSetup& setup, double cfl) {
  if (!(cfl > 0.0 && cfl <= 1.0)) throw DomainError("stable_dt: cfl must lie in (0, 1]");
  const double n = setup.n_modes();
  const auto u = evaluate_physical(state, default_oversample(setup.n_modes()));
  double linf = 0.0;
  for (double v : u) linf = std::max(linf, std::abs(v));
  double bound = 1.0 / (n * (linf + 1.0));
  const double eps = setup.svv.active_eps();
  if (eps > 0.0) bound = std::min(bound, 1.0 / (eps * n * n));
  bound = std::min(bound, 1.0 / (setup.symbol.max_abs() + 1.0));
  return cfl * bound;
}

/// One classical RK4 step.
inline SpectralState rk4_step(const SpectralState& state, double dt, const SolverSetup& setup) {
  if (!(dt > 0.0)) throw DomainError("rk4_step: dt must be > 0");
  const auto k1 = rhs(state, setup);
  auto stage = state;
  stage.axpy(0.5 * dt, k1);
  const auto k2 = rhs(stage, setup);
  stage = state;
  stage.axpy(0.5 * dt, k2);
  const auto k3 = rhs(stage, setup);
  stage = state;
  stage.axpy(dt, k3);
  const auto k4 = rhs(stage, setup);

  auto next = state;
  next.axpy(dt / 6.0, k1);
  next.axpy(dt / 3.0, k2);
  next.axpy(dt / 3.0, k3);
  next.axpy(dt / 6.0, k4);
  next.enforce_hermitian();
  next.set_time(state.time() + dt);
  if (!next.all_finite())
    throw BlowUpError("rk4_step: non-finite coefficients at t = " + std::to_string(next.time()),
                      next.time());
  return next;
}

/// Integrates to setup.t_end at a fixed step, landing exactly on snapshot
/// times and t_end by shortening the step that would overshoot.
inline Trajectory solve(const SpectralState& initial, const SolverSetup& setup) {
  validate(setup);
  if (initial.n_modes() != setup.n_modes())
    throw ValidationError("solve: initial state and setup disagree on N");

  Trajectory traj;
  const int grid = setup.grid();
  auto state = initial;
  state.set_time(0.0);
  traj.dt = setup.dt ? *setup.dt : stable_dt(state, setup, *setup.cfl);

  std::vector<double> targets = setup.snapshot_times;
  if (targets.empty() || targets.back() < setup.t_end) targets.push_back(setup.t_end);
  const auto is_snapshot = [&](double t) {
    return std::find(setup.snapshot_times.begin(), setup.snapshot_times.end(), t) !=
           setup.snapshot_times.end();
  };

  traj.record.append(state, setup.sobolev_order, grid);
  if (is_snapshot(0.0) || setup.t_end == 0.0) traj.snapshots.push_back(state);

  const double norm0 = std::sqrt(state.squared_norm());
  double t = 0.0;
  for (double target : targets) {
    if (target <= t) continue;
    while (t < target) {
      double h = traj.dt;
      bool land = false;
      if (target - t <= h * (1.0 + 1e-9)) {
        h = target - t;
        land = true;
      }
      const double e_old = state.squared_norm();
      try {
        state = rk4_step(state, h, setup);
      } catch (const BlowUpError& e) {
        traj.blew_up = true;
        traj.blowup_time = e.time();
        throw BlowUpError(e.what(), e.time(), std::move(traj));
      }
      ++traj.steps;
      t = land ? target : t + h;
      state.set_time(t);

      const double e_new = state.squared_norm();
      if (norm0 > 0.0 && std::sqrt(e_new) > 1e6 * norm0) {
        traj.blew_up = true;
        traj.blowup_time = t;
        throw BlowUpError("solve: solution norm grew beyond 1e6 x initial at t = " +
                          std::to_string(t),
                          t, std::move(traj));
      }
      traj.max_energy_increase = std::max(traj.max_energy_increase, e_new - e_old);
      if (e_new - e_old > 1e-10) ++traj.energy_violations;

      const bool snap = land && is_snapshot(target);
      const bool stride = setup.diag_stride > 0 && traj.steps % setup.diag_stride == 0;
      if (snap || stride || (land && target == setup.t_end))
        traj.record.append(state, setup.sobolev_order, grid);
      if (snap) traj.snapshots.push_back(state);
    }
  }
  if (traj.snapshots.empty() || traj.snapshots.back().time() != setup.t_end)
    traj.snapshots.push_back(state);
  return traj;
}

}  // namespace svv
