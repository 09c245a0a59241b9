// Prints Levy symbols G(xi) for a few measures: the fractional Laplacian in
// both normalizations (closed form against quadrature) and an asymmetric CGMY.

#include <cmath>
#include <cstdio>

#include "svv/levy.hpp"

int main() {
  using namespace svv;
  for (double lambda : {0.5, 1.0, 1.5}) {
    std::printf("fractional Laplacian, lambda = %g (Theta = %.12f)\n", lambda, theta_lambda(lambda));
    std::printf("%5s %18s %18s %18s\n", "xi", "closed form", "quadrature", "unit symbol");
    for (int xi : {1, 2, 4, 16, 64}) {
      const double closed = symbol_closed_form(lambda, xi);
      const double quad = symbol_quadrature({FractionalLaplacian{lambda, 1}}, xi).real();
      std::printf("%5d %18.12f %18.12f %18.12f\n", xi, closed, quad,
                  symbol_closed_form(lambda, xi, Normalization::unit_symbol));
    }
  }

  const LevyMeasureSpec cgmy{Cgmy{1.0, 2.0, 3.0, 0.8}};
  const auto [sym, rest] = split_measure(cgmy);
  std::printf("CGMY(1, 2, 3, 0.8): G = G_s + G_n\n");
  std::printf("%5s %26s %14s %26s\n", "xi", "G", "G_s", "G_n");
  for (int xi : {1, 2, 4, 16, 64, 256}) {
    const Complex g = symbol_quadrature(cgmy, xi);
    const Complex gs = symbol_quadrature(sym, xi);
    const Complex gn = symbol_quadrature(rest, xi);
    std::printf("%5d %12.8f %+12.8fi %14.8f %12.8f %+12.8fi\n", xi, g.real(), g.imag(), gs.real(),
                gn.real(), gn.imag());
  }
  std::printf("growth constant 2 int min(|z|,1) dmu_n = %.8f\n", growth_constant(rest));
}
