#pragma once

// Norms, seminorms and the experiment-level checks (rates, Gibbs detection,
// L1 contraction, time regularity) computed from spectral states and
// trajectories. Physical-space quantities use an m-point equispaced grid,
// 4N points unless stated otherwise.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "svv/error.hpp"
#include "svv/fourier.hpp"

namespace svv {

inline int default_oversample(int n_modes) { return 4 * n_modes; }

struct Norms {
  double l1 = 0.0;
  double l2 = 0.0;
  double linf = 0.0;
};

/// l2 by Parseval; l1 (periodic trapezoid) and linf on the m-point grid.
inline Norms norms(const SpectralState& state, int m) {
  const auto u = evaluate_physical(state, m);
  Norms out;
  out.l2 = std::sqrt(2.0 * std::numbers::pi * state.squared_norm());
  for (double v : u) {
    out.l1 += std::abs(v);
    out.linf = std::max(out.linf, std::abs(v));
  }
  out.l1 *= 2.0 * std::numbers::pi / m;
  return out;
}

/// Discrete total variation over one period of the m-point grid.
inline double bv_seminorm(const SpectralState& state, int m) {
  const auto u = evaluate_physical(state, m);
  double tv = 0.0;
  for (std::size_t j = 0; j < u.size(); ++j) tv += std::abs(u[(j + 1) % u.size()] - u[j]);
  return tv;
}

/// || d/dx (I - P_N) (u^2 / 2) ||_{L^2}.
inline double truncation_error(const SpectralState& state) {
  const int n = state.n_modes();
  const auto sq = full_square(state);
  double acc = 0.0;
  for (int xi = n + 1; xi <= 2 * n; ++xi)
    acc += 2.0 * static_cast<double>(xi) * xi * std::norm(sq[xi]);
  return 0.5 * std::sqrt(2.0 * std::numbers::pi * acc);
}

/// (sum |xi|^{2s} |u_xi|^2)^{1/2}; s = lambda/2 gives the H^{lambda/2} seminorm.
inline double sobolev_seminorm(const SpectralState& state, double s) {
  if (!(s >= 0.0)) throw DomainError("sobolev_seminorm: order must be >= 0");
  double acc = s == 0.0 ? std::norm(state[0]) : 0.0;
  for (int xi = 1; xi <= state.n_modes(); ++xi)
    acc += 2.0 * std::pow(static_cast<double>(xi), 2.0 * s) * std::norm(state[xi]);
  return std::sqrt(acc);
}

/// Least-squares slope of log(error) against log(eps).
inline double rate_fit(std::span<const std::pair<double, double>> pairs) {
  if (pairs.size() < 3) throw ValidationError("rate_fit: need at least 3 (eps, error) pairs");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  bool distinct = false;
  for (const auto& [eps, err] : pairs) {
    if (!(eps > 0.0) || !(err > 0.0))
      throw ValidationError("rate_fit: eps and errors must be positive");
    const double x = std::log(eps), y = std::log(err);
    distinct = distinct || eps != pairs.front().first;
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double n = static_cast<double>(pairs.size());
  if (!distinct) throw ValidationError("rate_fit: all eps values coincide");
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

inline constexpr double kGibbsFactor = 1.5;

/// True when the total variation exceeds `factor` times a reference (SVV) run's.
inline bool gibbs_indicator(const SpectralState& state, double baseline_tv,
                            double factor = kGibbsFactor, int m = 0) {
  if (!(baseline_tv > 0.0)) throw ValidationError("gibbs_indicator: baseline TV must be > 0");
  return bv_seminorm(state, m > 0 ? m : default_oversample(state.n_modes())) > factor * baseline_tv;
}

// ---------------------------------------------------------------------------

struct DiagnosticsRecord {
  std::vector<double> times;
  std::vector<double> l1, l2, linf, bv, energy, sobolev_half, trunc_err;
  bool oscillation_flag = false;

  std::size_t size() const noexcept { return times.size(); }

  void append(const SpectralState& s, double sobolev_order, int m) {
    const auto n = norms(s, m);
    times.push_back(s.time());
    l1.push_back(n.l1);
    l2.push_back(n.l2);
    linf.push_back(n.linf);
    bv.push_back(bv_seminorm(s, m));
    energy.push_back(0.5 * n.l2 * n.l2);
    sobolev_half.push_back(sobolev_seminorm(s, sobolev_order));
    trunc_err.push_back(truncation_error(s));
  }
};

/// One JSON object per entry: t, l1, l2, linf, bv, energy, sobolev_half, trunc_err.
inline void write_jsonl(const DiagnosticsRecord& r, std::ostream& os) {
  char buf[512];
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::snprintf(buf, sizeof buf,
                  "{\"t\":%.17g,\"l1\":%.17g,\"l2\":%.17g,\"linf\":%.17g,\"bv\":%.17g,"
                  "\"energy\":%.17g,\"sobolev_half\":%.17g,\"trunc_err\":%.17g}\n",
                  r.times[i], r.l1[i], r.l2[i], r.linf[i], r.bv[i], r.energy[i],
                  r.sobolev_half[i], r.trunc_err[i]);
    os << buf;
  }
}

/// Output of a solver run.
struct Trajectory {
  std::vector<SpectralState> snapshots;
  DiagnosticsRecord record;
  double dt = 0.0;
  long steps = 0;
  double max_energy_increase = -INFINITY;  // max over steps of sum|u|^2 (new - old)
  long energy_violations = 0;               // steps with an increase above 1e-10
  bool blew_up = false;
  double blowup_time = 0.0;

  const SpectralState& final_state() const { return snapshots.back(); }
};

/// L1 distance between two trajectories at each shared snapshot.
struct ContractionReport {
  std::vector<double> times;
  std::vector<double> distances;
  double max_violation = 0.0;       // max_t d(t) / d(0) - 1
  double max_step_violation = 0.0;  // max_k d(t_{k+1}) / d(t_k) - 1
  bool contractive = true;          // both violations within tol
};

inline ContractionReport contraction_check(const Trajectory& u, const Trajectory& v, int m = 0,
                                           double tol = 1e-3) {
  if (u.snapshots.size() != v.snapshots.size() || u.snapshots.empty())
    throw ValidationError("contraction_check: snapshot grids differ");
  ContractionReport rep;
  for (std::size_t k = 0; k < u.snapshots.size(); ++k) {
    const auto& a = u.snapshots[k];
    const auto& b = v.snapshots[k];
    if (a.n_modes() != b.n_modes() || std::abs(a.time() - b.time()) > 1e-12)
      throw ValidationError("contraction_check: snapshot grids differ");
    rep.times.push_back(a.time());
    rep.distances.push_back(norms(a - b, m > 0 ? m : default_oversample(a.n_modes())).l1);
  }
  const double d0 = rep.distances.front();
  for (std::size_t k = 1; k < rep.distances.size(); ++k) {
    const double dk = rep.distances[k];
    if (d0 > 0.0) rep.max_violation = std::max(rep.max_violation, dk / d0 - 1.0);
    else if (dk > 0.0) rep.max_violation = INFINITY;
    const double prev = rep.distances[k - 1];
    if (prev > 0.0) rep.max_step_violation = std::max(rep.max_step_violation, dk / prev - 1.0);
    else if (dk > 0.0) rep.max_step_violation = INFINITY;
  }
  rep.contractive = rep.max_violation <= tol && rep.max_step_violation <= tol;
  return rep;
}

/// Fit of log ||u(t1) - u(t2)||_1 against log |t1 - t2| over snapshot pairs.
struct TimeModulus {
  bool degenerate = false;  // all distances vanish
  double exponent = 0.0;
  std::size_t pairs = 0;
};

inline TimeModulus time_modulus(const Trajectory& traj, int m = 0) {
  const auto& s = traj.snapshots;
  if (s.size() < 8) throw ValidationError("time_modulus: need at least 8 snapshots");
  const int grid = m > 0 ? m : default_oversample(s.front().n_modes());
  std::vector<std::pair<double, double>> pts;
  bool any_nonzero = false;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      const double dt = std::abs(s[j].time() - s[i].time());
      const double d = norms(s[j] - s[i], grid).l1;
      if (d > 0.0) any_nonzero = true;
      if (dt > 0.0 && d > 0.0) pts.emplace_back(dt, d);
    }
  TimeModulus out;
  out.pairs = pts.size();
  if (!any_nonzero || pts.size() < 3) {
    out.degenerate = true;
    return out;
  }
  out.exponent = rate_fit(pts);
  return out;
}

}  // namespace svv
