#pragma once

// Real-valued N-trigonometric polynomials on the period (0, 2 pi),
//   u(x) = sum_{|xi| <= N} u_xi e^{i xi x},
// stored as the 2N+1 coefficients xi = -N..N with Hermitian symmetry
// u_{-xi} = conj(u_xi).

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "svv/error.hpp"
#include "svv/fft.hpp"

namespace svv {

using Complex = std::complex<double>;

class SpectralState {
 public:
  explicit SpectralState(int n_modes, double time = 0.0) : n_(n_modes), time_(time) {
    if (n_modes < 1) throw ValidationError("SpectralState: n_modes must be >= 1");
    coeffs_.assign(static_cast<std::size_t>(2 * n_modes + 1), Complex{});
  }

  /// Takes coefficients ordered xi = -N..N and symmetrizes them.
  static SpectralState from_coefficients(int n_modes, std::vector<Complex> coeffs,
                                         double time = 0.0) {
    SpectralState s(n_modes, time);
    if (coeffs.size() != s.coeffs_.size())
      throw ValidationError("SpectralState: expected " + std::to_string(s.coeffs_.size()) +
                            " coefficients, got " + std::to_string(coeffs.size()));
    s.coeffs_ = std::move(coeffs);
    s.enforce_hermitian();
    return s;
  }

  int n_modes() const noexcept { return n_; }
  double time() const noexcept { return time_; }
  void set_time(double t) noexcept { time_ = t; }

  Complex operator[](int xi) const { return coeffs_[index(xi)]; }

  /// Sets u_xi and u_{-xi} = conj(value); at xi = 0 only the real part is kept.
  void set_mode(int xi, Complex value) {
    if (xi == 0) {
      coeffs_[index(0)] = value.real();
      return;
    }
    coeffs_[index(xi)] = value;
    coeffs_[index(-xi)] = std::conj(value);
  }

  std::span<const Complex> coefficients() const noexcept { return coeffs_; }

  /// Applies f(xi, u_xi) to every mode. f must satisfy
  /// f(-xi, conj z) = conj f(xi, z) for the result to stay real-valued;
  /// symmetry is re-enforced afterwards either way.
  template <class F>
  SpectralState map_modes(F&& f) const {
    SpectralState out(n_, time_);
    for (int xi = -n_; xi <= n_; ++xi) out.coeffs_[out.index(xi)] = f(xi, (*this)[xi]);
    out.enforce_hermitian();
    return out;
  }

  /// sum_xi |u_xi|^2 = (1/2 pi) int u^2.
  double squared_norm() const noexcept {
    double s = 0.0;
    for (const auto& c : coeffs_) s += std::norm(c);
    return s;
  }

  bool all_finite() const noexcept {
    for (const auto& c : coeffs_)
      if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
    return true;
  }

  SpectralState& operator+=(const SpectralState& o) {
    check_same(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  SpectralState& operator-=(const SpectralState& o) {
    check_same(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  SpectralState& operator*=(double a) noexcept {
    for (auto& c : coeffs_) c *= a;
    return *this;
  }
  /// this += a * o
  SpectralState& axpy(double a, const SpectralState& o) {
    check_same(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += a * o.coeffs_[i];
    return *this;
  }

  friend SpectralState operator+(SpectralState a, const SpectralState& b) { return a += b; }
  friend SpectralState operator-(SpectralState a, const SpectralState& b) { return a -= b; }
  friend SpectralState operator*(double s, SpectralState a) { return a *= s; }

  /// Averages each +/- pair onto its Hermitian part; u_0 becomes real.
  void enforce_hermitian() noexcept {
    for (int xi = 1; xi <= n_; ++xi) {
      const Complex v = 0.5 * (coeffs_[index(xi)] + std::conj(coeffs_[index(-xi)]));
      coeffs_[index(xi)] = v;
      coeffs_[index(-xi)] = std::conj(v);
    }
    coeffs_[index(0)] = coeffs_[index(0)].real();
  }

 private:
  std::size_t index(int xi) const {
    if (xi < -n_ || xi > n_)
      throw ValidationError("SpectralState: mode " + std::to_string(xi) + " outside |xi| <= " +
                            std::to_string(n_));
    return static_cast<std::size_t>(xi + n_);
  }
  void check_same(const SpectralState& o) const {
    if (o.n_ != n_) throw ValidationError("SpectralState: mode count mismatch");
  }

  int n_;
  double time_;
  std::vector<Complex> coeffs_;
};

/// x_j = 2 pi j / m, j = 0..m-1.
inline std::vector<double> grid_points(int m) {
  std::vector<double> x(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) x[j] = 2.0 * std::numbers::pi * j / m;
  return x;
}

/// Discrete Fourier projection of equispaced samples onto |xi| <= n_modes.
inline SpectralState project_sampled(std::span<const double> samples, int n_modes) {
  const auto m = static_cast<int>(samples.size());
  if (n_modes < 1) throw ValidationError("project_sampled: n_modes must be >= 1");
  if (m < 2 * n_modes + 1)
    throw ValidationError("project_sampled: " + std::to_string(m) + " samples alias into " +
                          std::to_string(n_modes) + " retained modes (need >= 2N+1)");
  std::vector<Complex> buf(samples.size());
  for (std::size_t j = 0; j < samples.size(); ++j) {
    if (!std::isfinite(samples[j]))
      throw ValidationError("project_sampled: non-finite sample at index " + std::to_string(j));
    buf[j] = samples[j];
  }
  fft::plan_for(buf.size()).forward(buf);
  std::vector<Complex> coeffs(static_cast<std::size_t>(2 * n_modes + 1));
  for (int xi = -n_modes; xi <= n_modes; ++xi)
    coeffs[xi + n_modes] = buf[static_cast<std::size_t>((xi + m) % m)] / static_cast<double>(m);
  return SpectralState::from_coefficients(n_modes, std::move(coeffs));
}

/// Exact coefficients of sgn(pi - x): (1 - (-1)^xi) / (i pi xi), zero mean.
inline SpectralState square_wave_coefficients(int n_modes) {
  SpectralState s(n_modes);
  for (int xi = 1; xi <= n_modes; xi += 2)
    s.set_mode(xi, Complex(0.0, -2.0 / (std::numbers::pi * xi)));
  return s;
}

/// Values u(x_j) on the m-point equispaced grid.
inline std::vector<double> evaluate_physical(const SpectralState& state, int m) {
  const int n = state.n_modes();
  if (m < 2 * n + 1)
    throw ValidationError("evaluate_physical: grid of " + std::to_string(m) +
                          " points under-resolves " + std::to_string(n) + " modes");
  std::vector<Complex> buf(static_cast<std::size_t>(m));
  double scale = 0.0;
  for (int xi = -n; xi <= n; ++xi) {
    buf[static_cast<std::size_t>((xi + m) % m)] = state[xi];
    scale += std::abs(state[xi]);
  }
  fft::plan_for(buf.size()).backward(buf);
  std::vector<double> u(buf.size());
  for (std::size_t j = 0; j < buf.size(); ++j) {
    if (std::abs(buf[j].imag()) > 1e-12 * scale + 1e-300)
      throw ValidationError("evaluate_physical: imaginary residual exceeds tolerance");
    u[j] = buf[j].real();
  }
  return u;
}

/// d/dx: multiplies u_xi by i xi.
inline SpectralState spectral_derivative(const SpectralState& state) {
  return state.map_modes([](int xi, Complex c) { return Complex(0.0, xi) * c; });
}

/// P_n u: drops modes above n, or zero-extends when n exceeds the current count.
inline SpectralState truncate(const SpectralState& state, int n_modes) {
  SpectralState out(n_modes, state.time());
  const int k = std::min(n_modes, state.n_modes());
  for (int xi = 0; xi <= k; ++xi) out.set_mode(xi, state[xi]);
  return out;
}

namespace detail {

// Coefficients |xi| <= keep of u^2, computed on a zero-padded grid of at least
// `min_length` points. Exact when min_length >= keep + 2N + 1.
inline SpectralState padded_square(const SpectralState& state, int keep, std::size_t min_length) {
  const int n = state.n_modes();
  const std::size_t len = fft::good_size(min_length);
  const auto L = static_cast<long>(len);
  std::vector<Complex> buf(len);
  for (int xi = -n; xi <= n; ++xi) buf[static_cast<std::size_t>((xi + L) % L)] = state[xi];
  auto& plan = fft::plan_for(len);
  plan.backward(buf);
  for (auto& v : buf) v = Complex(v.real() * v.real(), 0.0);
  plan.forward(buf);
  SpectralState out(keep, state.time());
  const double inv = 1.0 / static_cast<double>(len);
  for (int xi = 0; xi <= keep; ++xi) out.set_mode(xi, buf[static_cast<std::size_t>(xi)] * inv);
  return out;
}

}  // namespace detail

/// Truncated Galerkin product P_N[u^2] via a transform on >= 3N+1 points.
inline SpectralState galerkin_square(const SpectralState& state) {
  const int n = state.n_modes();
  return detail::padded_square(state, n, static_cast<std::size_t>(3 * n + 1));
}

/// The same product as a direct O(N^2) convolution sum.
inline SpectralState galerkin_square_direct(const SpectralState& state) {
  const int n = state.n_modes();
  SpectralState out(n, state.time());
  for (int xi = 0; xi <= n; ++xi) {
    Complex acc{};
    for (int p = xi - n; p <= n; ++p) acc += state[p] * state[xi - p];
    out.set_mode(xi, acc);
  }
  return out;
}

/// All coefficients |xi| <= 2N of u^2 (no truncation).
inline SpectralState full_square(const SpectralState& state) {
  const int n = state.n_modes();
  return detail::padded_square(state, 2 * n, static_cast<std::size_t>(4 * n + 1));
}

}  // namespace svv
