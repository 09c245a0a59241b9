#pragma once

// Spectral vanishing viscosity: amplitude eps_N = c_eps N^{-theta}, a
// viscosity-free band |xi| < m_N with m_N ~ c_m N^{theta/2} (log N)^{-1/2},
// and the kernel Q_p = 1 - (m_N / p)^2 for p >= m_N, 0 below.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "svv/error.hpp"
#include "svv/fourier.hpp"

namespace svv {

enum class ViscosityMode { svv, full, none };

inline const char* to_string(ViscosityMode m) {
  switch (m) {
    case ViscosityMode::svv: return "svv";
    case ViscosityMode::full: return "full";
    case ViscosityMode::none: return "none";
  }
  return "?";
}

struct SvvParams {
  int n_modes = 0;
  double theta = 0.5;
  double c_eps = 1.0;
  double c_m = 1.0;
  double eps_n = 0.0;
  int m_n = 1;
  std::vector<double> q_hat;  // p = 0..N
  ViscosityMode mode = ViscosityMode::svv;
  double full_eps = 0.0;      // amplitude in full mode
  bool m_n_clamped = false;   // the raw m_N rounded outside [1, N]

  /// eps_N m_N^2 log N, the quantity kept bounded as N grows.
  double monitored_product() const {
    return eps_n * m_n * m_n * std::log(static_cast<double>(n_modes));
  }

  /// The viscous amplitude actually applied in the current mode.
  double active_eps() const {
    switch (mode) {
      case ViscosityMode::svv: return eps_n;
      case ViscosityMode::full: return full_eps;
      case ViscosityMode::none: return 0.0;
    }
    return 0.0;
  }
};

/// Builds the parameter set. `full_eps` is only used in full mode.
inline SvvParams svv_params(int n_modes, double theta = 0.5, double c_eps = 1.0,
                            double c_m = 1.0, ViscosityMode mode = ViscosityMode::svv,
                            double full_eps = 0.0) {
  if (n_modes < 2) throw DomainError("svv_params: N must be >= 2");
  if (!(theta > 0.0 && theta < 1.0))
    throw DomainError("svv_params: theta must lie in (0, 1), got " + std::to_string(theta));
  if (!(c_eps > 0.0) || !(c_m > 0.0))
    throw DomainError("svv_params: proportionality constants must be positive");
  if (mode == ViscosityMode::full && !(full_eps >= 0.0))
    throw DomainError("svv_params: full-viscosity amplitude must be >= 0");

  SvvParams p;
  p.n_modes = n_modes;
  p.theta = theta;
  p.c_eps = c_eps;
  p.c_m = c_m;
  p.mode = mode;
  p.full_eps = full_eps;
  const double n = static_cast<double>(n_modes);
  p.eps_n = c_eps * std::pow(n, -theta);
  const long raw = std::lround(c_m * std::pow(n, theta / 2.0) / std::sqrt(std::log(n)));
  p.m_n = static_cast<int>(std::clamp<long>(raw, 1, n_modes));
  p.m_n_clamped = raw != p.m_n;
  if (raw < 1)
    std::fprintf(stderr, "svv_params: warning: m_N rounded to %ld at N = %d, clamped to 1\n", raw,
                 n_modes);
  p.q_hat.assign(static_cast<std::size_t>(n_modes + 1), 0.0);
  for (int k = p.m_n; k <= n_modes; ++k) {
    const double r = static_cast<double>(p.m_n) / k;
    p.q_hat[static_cast<std::size_t>(k)] = 1.0 - r * r;
  }
  return p;
}

/// Tendency of the viscous term:
///   svv:  -eps_N Q_|xi| xi^2 u_xi for |xi| >= m_N
///   full: -eps xi^2 u_xi
///   none: 0
inline SpectralState apply_viscosity(const SpectralState& state, const SvvParams& params) {
  if (params.n_modes != state.n_modes())
    throw ValidationError("apply_viscosity: params built for N = " +
                          std::to_string(params.n_modes) + ", state has N = " +
                          std::to_string(state.n_modes()));
  switch (params.mode) {
    case ViscosityMode::none:
      return SpectralState(state.n_modes(), state.time());
    case ViscosityMode::full:
      return state.map_modes([e = params.full_eps](int xi, Complex c) {
        return -e * static_cast<double>(xi) * xi * c;
      });
    case ViscosityMode::svv:
      break;
  }
  return state.map_modes([&params](int xi, Complex c) -> Complex {
    const int p = std::abs(xi);
    if (p < params.m_n) return 0.0;
    return -params.eps_n * params.q_hat[static_cast<std::size_t>(p)] * static_cast<double>(xi) *
           xi * c;
  });
}

}  // namespace svv
