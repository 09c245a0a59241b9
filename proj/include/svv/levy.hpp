#pragma once

// Fourier symbols G(xi) of periodic Levy operators,
//   G(xi) = int_{|z|>0} e^{i xi z} - 1 - i xi z 1_{|z|<1} dmu(z),
// for the fractional Laplacian measure c / |z|^{d+lambda} (closed form) and
// for densities g(z) against that measure (numerical quadrature, d = 1).

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "svv/error.hpp"
#include "svv/quadrature.hpp"

namespace svv {

using Complex = std::complex<double>;

/// Which constant multiplies |z|^{-d-lambda}.
///   paper:       c_lambda = lambda Gamma((d+lambda)/2) / (2 pi^{d/2+lambda} Gamma(1-lambda/2))
///   unit_symbol: rescaled so that the fractional Laplacian symbol is -|xi|^lambda
enum class Normalization { paper, unit_symbol };

struct FractionalLaplacian {
  double lambda = 1.0;
  int dim = 1;
};

/// Density C e^{-G z} for z > 0 and C e^{-M |z|} for z < 0, against pi_Y.
struct Cgmy {
  double C = 1.0;
  double G = 0.0;
  double M = 0.0;
  double Y = 1.0;
};

/// Arbitrary density g(z) >= 0 against pi_lambda. The tails must decay so the
/// integral can be truncated.
struct TemperedDensity {
  std::function<double(double)> g;
  double lambda = 1.0;
};

struct LevyMeasureSpec {
  std::variant<FractionalLaplacian, Cgmy, TemperedDensity> kind;
  Normalization normalization = Normalization::paper;
};

// ---------------------------------------------------------------------------
// Constants

namespace detail {

inline void check_index(double lambda, const char* who) {
  if (!(lambda > 0.0 && lambda < 2.0))
    throw DomainError(std::string(who) + ": stability index must lie in (0, 2), got " +
                      std::to_string(lambda));
}

// int_A^inf e^{i w z} z^{-a} dz by repeated integration by parts:
//   -e^{i w A} A^{-a} / (i w) * sum_k (a)_k / (i w A)^k.
// Asymptotic; the sum stops at its smallest term, whose size is returned.
inline Complex oscillatory_tail(double w, double A, double a, double* omitted = nullptr) {
  const Complex iwA(0.0, w * A);
  Complex term = 1.0;
  Complex sum = 0.0;
  double last = 1.0;
  for (int k = 0; k < 200; ++k) {
    sum += term;
    const Complex next = term * (a + k) / iwA;
    last = std::abs(next);
    if (last >= std::abs(term) || last < 1e-18 * std::abs(sum)) break;
    term = next;
  }
  const double scale = std::pow(A, -a) / std::abs(w);
  if (omitted) *omitted = last * scale;
  return -std::exp(iwA) * std::pow(A, -a) / Complex(0.0, w) * sum;
}

}  // namespace detail

/// Theta_lambda = int_0^inf x^{-lambda} sin x dx.
/// Closed forms on (0, 1]; quadrature on (1, 2).
inline double theta_lambda(double lambda) {
  detail::check_index(lambda, "theta_lambda");
  if (lambda == 1.0) return std::numbers::pi / 2.0;
  if (lambda < 1.0)
    return std::tgamma(1.0 - lambda) * std::sin(std::numbers::pi * (1.0 - lambda) / 2.0);

  // (0, eta]: termwise integration of the sine series.
  constexpr double eta = 0.5;
  double head = 0.0;
  double fact = 1.0;  // (2k+1)!
  for (int k = 0; k < 30; ++k) {
    if (k > 0) fact *= (2.0 * k) * (2.0 * k + 1.0);
    const double p = 2.0 * k + 2.0 - lambda;
    const double t = std::pow(eta, p) / (fact * p);
    head += (k % 2 == 0) ? t : -t;
    if (t < 1e-20) break;
  }
  // [eta, 2 pi K]: quarter-period panels.
  constexpr int periods = 16;
  const double A = 2.0 * std::numbers::pi * periods;
  const auto f = [lambda](double x) { return std::pow(x, -lambda) * std::sin(x); };
  const auto body = quad::panel_sums(f, eta, A, 4 * periods);
  // [2 pi K, inf): integration-by-parts expansion.
  double omitted = 0.0;
  const double tail = detail::oscillatory_tail(1.0, A, lambda, &omitted).imag();
  if (omitted > 1e-10) throw QuadratureError("theta_lambda: tail expansion not converged", omitted);
  return head + body.fine + tail;
}

/// The normalization constant of pi_lambda as given with the fractional Laplacian.
inline double c_lambda(int d, double lambda) {
  if (d < 1) throw DomainError("c_lambda: dimension must be >= 1");
  detail::check_index(lambda, "c_lambda");
  return lambda * std::tgamma((d + lambda) / 2.0) /
         (2.0 * std::pow(std::numbers::pi, d / 2.0 + lambda) * std::tgamma(1.0 - lambda / 2.0));
}

/// Surface area of the unit sphere in R^d.
inline double unit_sphere_area(int d) {
  return 2.0 * std::pow(std::numbers::pi, d / 2.0) / std::tgamma(d / 2.0);
}

/// C_lambda = 2 c_lambda Theta_lambda / lambda.
inline double symbol_constant(int d, double lambda) {
  return 2.0 * c_lambda(d, lambda) * theta_lambda(lambda) / lambda;
}

/// Constant multiplying |z|^{-d-lambda} under the chosen normalization.
inline double pi_lambda_constant(int d, double lambda, Normalization mode) {
  if (mode == Normalization::paper) return c_lambda(d, lambda);
  detail::check_index(lambda, "pi_lambda_constant");
  const double surface = d > 1 ? unit_sphere_area(d) : 1.0;
  return lambda / (2.0 * theta_lambda(lambda) * surface);
}

/// Closed-form symbol of the fractional Laplacian: -C_lambda |xi|^lambda,
/// times the unit-sphere area for d > 1; -|xi|^lambda in unit_symbol mode.
inline double symbol_closed_form(int d, double lambda, std::span<const int> xi,
                                 Normalization mode = Normalization::paper) {
  if (d < 1) throw DomainError("symbol_closed_form: dimension must be >= 1");
  detail::check_index(lambda, "symbol_closed_form");
  if (static_cast<int>(xi.size()) != d)
    throw ValidationError("symbol_closed_form: lattice vector has wrong dimension");
  double r2 = 0.0;
  for (int k : xi) r2 += static_cast<double>(k) * k;
  if (r2 == 0.0) return 0.0;
  const double mag = std::pow(std::sqrt(r2), lambda);
  if (mode == Normalization::unit_symbol) return -mag;
  const double surface = d > 1 ? unit_sphere_area(d) : 1.0;
  return -symbol_constant(d, lambda) * mag * surface;
}

inline double symbol_closed_form(double lambda, int xi, Normalization mode = Normalization::paper) {
  const int v[1] = {xi};
  return symbol_closed_form(1, lambda, v, mode);
}

// ---------------------------------------------------------------------------
// Measures

inline double stability_index(const LevyMeasureSpec& m) {
  return std::visit(
      [](const auto& k) -> double {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, Cgmy>)
          return k.Y;
        else
          return k.lambda;
      },
      m.kind);
}

namespace detail {

// Density against pi_lambda, plus which tails are eventually constant
// (those get the algebraic tail formula instead of truncation).
struct Density {
  std::function<double(double)> g;
  bool algebraic_plus = false;
  bool algebraic_minus = false;
  double g_inf_plus = 0.0;
  double g_inf_minus = 0.0;
};

inline Density density_of(const LevyMeasureSpec& m) {
  return std::visit(
      [](const auto& k) -> Density {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, FractionalLaplacian>) {
          return {[](double) { return 1.0; }, true, true, 1.0, 1.0};
        } else if constexpr (std::is_same_v<T, Cgmy>) {
          const Cgmy c = k;
          return {[c](double z) { return c.C * std::exp(-(z > 0 ? c.G : c.M) * std::abs(z)); },
                  c.G == 0.0, c.M == 0.0, c.C, c.C};
        } else {
          return {k.g, false, false, 0.0, 0.0};
        }
      },
      m.kind);
}

// Probe points on both sides of 0, geometric near 0 and linear further out.
inline std::vector<double> probe_grid() {
  std::vector<double> z;
  for (int k = 1; k <= 40; ++k) z.push_back(std::ldexp(1.0, -k));
  for (int k = 1; k <= 200; ++k) z.push_back(0.25 * k);
  return z;
}

}  // namespace detail

/// Validates parameter ranges, and for densities nonnegativity and local
/// Lipschitz continuity at 0 on a probe grid.
inline void validate(const LevyMeasureSpec& m) {
  std::visit(
      [](const auto& k) {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, FractionalLaplacian>) {
          detail::check_index(k.lambda, "FractionalLaplacian");
          if (k.dim < 1) throw DomainError("FractionalLaplacian: dimension must be >= 1");
        } else if constexpr (std::is_same_v<T, Cgmy>) {
          detail::check_index(k.Y, "Cgmy");
          if (!(k.C > 0.0) || !(k.G >= 0.0) || !(k.M >= 0.0))
            throw DomainError("Cgmy: need C > 0 and G, M >= 0");
        } else {
          detail::check_index(k.lambda, "TemperedDensity");
          if (!k.g) throw ValidationError("TemperedDensity: density function is empty");
          const double g0 = k.g(0.0);
          if (!std::isfinite(g0)) throw ValidationError("TemperedDensity: g(0) is not finite");
          double coarse = 0.0, fine = 0.0;
          for (double z : detail::probe_grid()) {
            for (double s : {z, -z}) {
              const double v = k.g(s);
              if (!std::isfinite(v) || v < 0.0)
                throw ValidationError("TemperedDensity: density negative or non-finite at z = " +
                                      std::to_string(s));
              if (z <= 0.5) {
                double& slot = z >= std::ldexp(1.0, -20) ? coarse : fine;
                slot = std::max(slot, std::abs(v - g0) / z);
              }
            }
          }
          if (fine > 4.0 * coarse + 1e-6)
            throw ValidationError(
                "TemperedDensity: density is not locally Lipschitz at 0; the measure may violate "
                "int min(|z|^2, 1) dmu < inf");
        }
      },
      m.kind);
}

inline bool is_symmetric(const LevyMeasureSpec& m) {
  if (std::holds_alternative<FractionalLaplacian>(m.kind)) return true;
  if (const auto* c = std::get_if<Cgmy>(&m.kind)) return c->G == c->M;
  const auto& g = std::get<TemperedDensity>(m.kind).g;
  for (double z : detail::probe_grid()) {
    const double a = g(z), b = g(-z);
    if (std::abs(a - b) > 1e-14 * std::max({1.0, std::abs(a), std::abs(b)})) return false;
  }
  return true;
}

/// mu = mu_s + mu_n with mu_s having density min(g(z), g(-z)) and mu_n the
/// remainder g - min(g(z), g(-z)); both against the same pi_lambda.
inline std::pair<LevyMeasureSpec, LevyMeasureSpec> split_measure(const LevyMeasureSpec& m) {
  validate(m);
  const double lambda = stability_index(m);
  const auto zero = LevyMeasureSpec{TemperedDensity{[](double) { return 0.0; }, lambda},
                                    m.normalization};
  if (std::holds_alternative<FractionalLaplacian>(m.kind)) {
    if (std::get<FractionalLaplacian>(m.kind).dim != 1)
      throw DomainError("split_measure: only d = 1 measures are supported");
    return {m, zero};
  }
  if (const auto* c = std::get_if<Cgmy>(&m.kind)) {
    const double rate = std::max(c->G, c->M);
    LevyMeasureSpec sym{Cgmy{c->C, rate, rate, c->Y}, m.normalization};
    if (c->G == c->M) return {sym, zero};
    const Cgmy k = *c;
    auto rest = [k, rate](double z) {
      const double side = z > 0 ? k.G : k.M;
      return k.C * (std::exp(-side * std::abs(z)) - std::exp(-rate * std::abs(z)));
    };
    return {sym, LevyMeasureSpec{TemperedDensity{rest, c->Y}, m.normalization}};
  }
  const auto g = std::get<TemperedDensity>(m.kind).g;
  auto sym = [g](double z) { return std::min(g(z), g(-z)); };
  auto rest = [g](double z) { return g(z) - std::min(g(z), g(-z)); };
  return {LevyMeasureSpec{TemperedDensity{sym, lambda}, m.normalization},
          LevyMeasureSpec{TemperedDensity{rest, lambda}, m.normalization}};
}

// ---------------------------------------------------------------------------
// Quadrature

namespace detail {

// sin x - x, accurate for small |x|.
inline double sin_minus_x(double x) {
  if (std::abs(x) < 0.1) {
    const double x2 = x * x;
    return -x * x2 / 6.0 * (1.0 - x2 / 20.0 * (1.0 - x2 / 42.0 * (1.0 - x2 / 72.0)));
  }
  return std::sin(x) - x;
}

}  // namespace detail

/// G(xi) for a d = 1 measure by adaptive panel quadrature. Absolute accuracy
/// target 1e-9 (1 + xi^2).
inline Complex symbol_quadrature(const LevyMeasureSpec& m, int xi) {
  validate(m);
  if (const auto* f = std::get_if<FractionalLaplacian>(&m.kind); f && f->dim != 1)
    throw DomainError("symbol_quadrature: only d = 1 is supported");
  if (xi == 0) return 0.0;

  const double lambda = stability_index(m);
  const double kappa = pi_lambda_constant(1, lambda, m.normalization);
  const auto dens = detail::density_of(m);
  const double w = static_cast<double>(xi);
  const double aw = std::abs(w);
  const double pi = std::numbers::pi;
  const double target = 1e-9 * (1.0 + w * w);
  const double tail_tol = 1e-3 * target;

  // Both half-lines folded onto z > 0.
  const auto integrand = [&](double z) -> Complex {
    const double x = w * z;
    const double s = std::sin(0.5 * x);
    const double cos_m1 = -2.0 * s * s;
    const double sin_part = z < 1.0 ? detail::sin_minus_x(x) : std::sin(x);
    const double gp = dens.g(z), gm = dens.g(-z);
    return kappa * std::pow(z, -1.0 - lambda) * Complex(cos_m1 * (gp + gm), sin_part * (gp - gm));
  };

  // Truncation point for decaying tails: bound the remaining mass.
  double z_cut = 2.0;
  const auto tail_mass = [&](double z) {
    double g = 0.0;
    if (!dens.algebraic_plus) g += dens.g(z);
    if (!dens.algebraic_minus) g += dens.g(-z);
    return 2.0 * kappa * g * std::pow(z, -lambda) / lambda;
  };
  while (tail_mass(z_cut) > tail_tol) {
    z_cut *= 1.25;
    if (z_cut > 1e4)
      throw QuadratureError("symbol_quadrature: density tail does not decay; cannot truncate",
                            tail_mass(z_cut));
  }
  const bool algebraic = dens.algebraic_plus || dens.algebraic_minus;
  if (algebraic) {
    // Land on a whole number of periods with w A >= 200 for the expansion.
    const double need = std::max({z_cut, 1.0, 200.0 / aw});
    z_cut = std::ceil(need * aw / (2.0 * pi)) * 2.0 * pi / aw;
  }

  double achieved = 0.0;
  for (int refine = 0; refine < 3; ++refine) {
    const double scale = std::ldexp(1.0, refine);
    const double a = std::min(1.0, 1.0 / aw);
    const double width = std::min(1.0, pi / aw) / scale;
    Complex fine = 0.0, coarse = 0.0;
    const auto add = [&](const auto& s) {
      fine += s.fine;
      coarse += s.coarse;
    };
    add(quad::graded_to_zero(integrand, a, 60 + 10 * refine, 1.0 - lambda));
    if (a < 1.0)
      add(quad::panel_sums(integrand, a, 1.0,
                           static_cast<std::size_t>(std::ceil((1.0 - a) / width))));
    add(quad::panel_sums(integrand, 1.0, z_cut,
                         static_cast<std::size_t>(std::ceil((z_cut - 1.0) / width))));

    double omitted = 0.0;
    Complex tail = 0.0;
    for (int side : {1, -1}) {
      const bool alg = side > 0 ? dens.algebraic_plus : dens.algebraic_minus;
      if (!alg) continue;
      const double g_inf = side > 0 ? dens.g_inf_plus : dens.g_inf_minus;
      double om = 0.0;
      const Complex osc = detail::oscillatory_tail(side * w, z_cut, 1.0 + lambda, &om);
      tail += kappa * g_inf * (osc - std::pow(z_cut, -lambda) / lambda);
      omitted += kappa * g_inf * om;
    }
    if (!algebraic) omitted += tail_mass(z_cut);
    achieved = std::abs(fine - coarse) + omitted;
    if (achieved <= target) return fine + tail;
  }
  throw QuadratureError("symbol_quadrature: no convergence at xi = " + std::to_string(xi),
                        achieved);
}

// ---------------------------------------------------------------------------
// Symbol tables

/// Diagonal weights G(xi), xi = -N..N, of the non-local operator.
class LevySymbol {
 public:
  LevySymbol(int n_modes, std::vector<Complex> weights, bool symmetric)
      : n_(n_modes), weights_(std::move(weights)), symmetric_(symmetric) {
    if (weights_.size() != static_cast<std::size_t>(2 * n_ + 1))
      throw ValidationError("LevySymbol: table size does not match n_modes");
  }

  /// The zero operator (no non-local term).
  static LevySymbol none(int n_modes) {
    return LevySymbol(n_modes, std::vector<Complex>(static_cast<std::size_t>(2 * n_modes + 1)),
                      true);
  }

  int n_modes() const noexcept { return n_; }
  bool symmetric() const noexcept { return symmetric_; }
  Complex operator[](int xi) const { return weights_.at(static_cast<std::size_t>(xi + n_)); }
  std::span<const Complex> weights() const noexcept { return weights_; }

  double max_abs() const noexcept {
    double m = 0.0;
    for (const auto& g : weights_) m = std::max(m, std::abs(g));
    return m;
  }

  /// FNV-1a over the bit patterns of the table, as 16 hex digits.
  std::string checksum() const {
    std::uint64_t h = 1469598103934665603ull;
    for (const auto& g : weights_)
      for (double v : {g.real(), g.imag()}) {
        const auto bits = std::bit_cast<std::uint64_t>(v);
        for (int b = 0; b < 8; ++b) {
          h ^= (bits >> (8 * b)) & 0xffu;
          h *= 1099511628211ull;
        }
      }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
  }

 private:
  int n_;
  std::vector<Complex> weights_;
  bool symmetric_;
};

/// Throws std::logic_error if a table breaks G(0) = 0, conjugate symmetry, or
/// (when symmetric) reality and non-positivity.
inline void check_symbol_invariants(const LevySymbol& s) {
  if (s[0] != Complex(0.0)) throw std::logic_error("LevySymbol: G(0) != 0");
  for (int xi = 1; xi <= s.n_modes(); ++xi) {
    if (s[-xi] != std::conj(s[xi]))
      throw std::logic_error("LevySymbol: conjugate symmetry broken at xi = " + std::to_string(xi));
    if (s.symmetric() && (std::abs(s[xi].imag()) > 1e-12 || s[xi].real() > 0.0))
      throw std::logic_error("LevySymbol: symmetric measure with G(xi) not real non-positive at " +
                             std::to_string(xi));
  }
}

inline LevySymbol build_symbol_table(const LevyMeasureSpec& m, int n_modes) {
  if (n_modes < 1) throw ValidationError("build_symbol_table: n_modes must be >= 1");
  validate(m);
  std::vector<Complex> w(static_cast<std::size_t>(2 * n_modes + 1));
  const auto put = [&](int xi, Complex g) {
    w[static_cast<std::size_t>(n_modes + xi)] = g;
    w[static_cast<std::size_t>(n_modes - xi)] = std::conj(g);
  };

  bool symmetric = true;
  if (const auto* f = std::get_if<FractionalLaplacian>(&m.kind)) {
    if (f->dim != 1) throw DomainError("build_symbol_table: solver tables are d = 1");
    for (int xi = 1; xi <= n_modes; ++xi)
      put(xi, symbol_closed_form(f->lambda, xi, m.normalization));
  } else if (is_symmetric(m)) {
    for (int xi = 1; xi <= n_modes; ++xi) put(xi, Complex(symbol_quadrature(m, xi).real(), 0.0));
  } else {
    symmetric = false;
    const auto [sym, rest] = split_measure(m);
    for (int xi = 1; xi <= n_modes; ++xi) {
      const Complex gs = symbol_quadrature(sym, xi);
      if (gs.real() > 0.0 || std::abs(gs.imag()) > 1e-12)
        throw std::logic_error("build_symbol_table: symmetric part not real non-positive at xi = " +
                               std::to_string(xi));
      put(xi, gs + symbol_quadrature(rest, xi));
    }
  }
  LevySymbol table(n_modes, std::move(w), symmetric);
  check_symbol_invariants(table);
  return table;
}

/// CSV with header xi,re_G,im_G; 17 significant digits.
inline void write_symbol_csv(const LevySymbol& s, std::ostream& os) {
  os << "xi,re_G,im_G\n";
  char buf[96];
  for (int xi = -s.n_modes(); xi <= s.n_modes(); ++xi) {
    std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g\n", xi, s[xi].real(), s[xi].imag());
    os << buf;
  }
}

/// 2 int min(|z|, 1) dmu: since |e^{iy} - 1 - iy| <= 2|y| and |e^{iy} - 1| <= 2,
/// |G(xi)| <= this constant times (1 + |xi|) whenever it is finite.
inline double growth_constant(const LevyMeasureSpec& m) {
  validate(m);
  const double lambda = stability_index(m);
  const double kappa = pi_lambda_constant(1, lambda, m.normalization);
  const auto dens = detail::density_of(m);
  const auto both = [&](double z) { return dens.g(z) + dens.g(-z); };
  if (lambda >= 1.0 && both(0.0) > 0.0)
    throw DomainError("growth_constant: int min(|z|, 1) dmu diverges at the origin");
  const auto inner = [&](double z) { return kappa * both(z) * std::pow(z, -lambda); };
  double total = quad::graded_to_zero(inner, 1.0, 80, both(0.0) > 0.0 ? -lambda : 1.0 - lambda).fine;

  const auto outer = [&](double z) { return kappa * both(z) * std::pow(z, -1.0 - lambda); };
  double z_cut = 2.0;
  if (!dens.algebraic_plus && !dens.algebraic_minus) {
    while (kappa * both(z_cut) * std::pow(z_cut, -lambda) / lambda > 1e-14) {
      z_cut *= 1.25;
      if (z_cut > 1e4) throw QuadratureError("growth_constant: density tail does not decay", 0.0);
    }
  } else {
    z_cut = 64.0;
  }
  total += quad::panel_sums(outer, 1.0, z_cut, static_cast<std::size_t>(4 * z_cut)).fine;
  // Eventually constant tails integrate in closed form; decaying ones were truncated.
  const double algebraic_mass = (dens.algebraic_plus ? dens.g_inf_plus : 0.0) +
                                (dens.algebraic_minus ? dens.g_inf_minus : 0.0);
  total += kappa * algebraic_mass * std::pow(z_cut, -lambda) / lambda;
  return 2.0 * total;
}

/// Linear growth bound |G(xi)| <= C (1 + |xi|): C is fitted as the largest
/// ratio over 1 <= xi <= fit_max and then checked on fit_max < xi <= verify_max.
struct GrowthBound {
  double constant = 0.0;
  double worst_ratio = 0.0;  // max over the verification range of |G| / (1 + xi)
  int worst_xi = 0;
  bool holds = false;
};

inline GrowthBound fit_linear_growth(const std::function<Complex(int)>& symbol, int fit_max,
                                     int verify_max) {
  GrowthBound out;
  for (int xi = 1; xi <= fit_max; ++xi)
    out.constant = std::max(out.constant, std::abs(symbol(xi)) / (1.0 + xi));
  for (int xi = fit_max + 1; xi <= verify_max; ++xi) {
    const double r = std::abs(symbol(xi)) / (1.0 + xi);
    if (r > out.worst_ratio) {
      out.worst_ratio = r;
      out.worst_xi = xi;
    }
  }
  out.holds = out.worst_ratio <= out.constant;
  return out;
}

}  // namespace svv
