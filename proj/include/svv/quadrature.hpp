#pragma once

// Panel Gauss-Legendre rules used by the symbol and Theta quadratures.

#include <boost/math/quadrature/gauss.hpp>

#include <cmath>
#include <cstddef>

namespace svv::quad {

/// n-point Gauss-Legendre on [a, b].
template <unsigned Points, class F>
auto gauss_legendre(F&& f, double a, double b) {
  using Rule = boost::math::quadrature::gauss<double, Points>;
  const auto& x = Rule::abscissa();
  const auto& w = Rule::weights();
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  // Odd rules store the centre node first.
  std::size_t start = 0;
  decltype(f(mid)) acc{};
  if constexpr (Points % 2 == 1) {
    acc = w[0] * f(mid);
    start = 1;
  }
  for (std::size_t i = start; i < x.size(); ++i) {
    const double dx = half * x[i];
    acc += w[i] * (f(mid - dx) + f(mid + dx));
  }
  return acc * half;
}

/// Integral over [a, b] split into `panels` equal panels, returning both a
/// 20-point and a 15-point estimate so callers can bound the rule error.
template <class F>
struct PanelSums {
  decltype(std::declval<F>()(0.0)) fine{};
  decltype(std::declval<F>()(0.0)) coarse{};
};

template <class F>
PanelSums<F> panel_sums(F&& f, double a, double b, std::size_t panels) {
  PanelSums<F> out;
  if (panels == 0 || !(b > a)) return out;
  const double h = (b - a) / static_cast<double>(panels);
  for (std::size_t k = 0; k < panels; ++k) {
    const double lo = a + h * static_cast<double>(k);
    const double hi = (k + 1 == panels) ? b : lo + h;
    out.fine += gauss_legendre<20>(f, lo, hi);
    out.coarse += gauss_legendre<15>(f, lo, hi);
  }
  return out;
}

/// Integral over (0, b] of f with an integrable power-type singularity
/// f(z) ~ z^alpha (alpha > -1) at 0: geometrically graded panels
/// [b 2^{-k-1}, b 2^{-k}], plus the leading-order remainder on the innermost
/// interval (0, eta], approximated by f(eta) eta / (alpha + 1).
template <class F>
PanelSums<F> graded_to_zero(F&& f, double b, int levels, double alpha) {
  PanelSums<F> out;
  double hi = b;
  for (int k = 0; k < levels; ++k) {
    const double lo = 0.5 * hi;
    out.fine += gauss_legendre<20>(f, lo, hi);
    out.coarse += gauss_legendre<15>(f, lo, hi);
    hi = lo;
  }
  const auto rest = f(hi) * (hi / (alpha + 1.0));
  out.fine += rest;
  out.coarse += rest;
  return out;
}

}  // namespace svv::quad
