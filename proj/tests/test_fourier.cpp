#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "svv/fourier.hpp"

namespace svv {
namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> sample(int m, auto f) {
  std::vector<double> v(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) v[j] = f(2.0 * kPi * j / m);
  return v;
}

TEST(ProjectSampled, CosineIsSingleMode) {
  const auto s = project_sampled(sample(64, [](double x) { return std::cos(x); }), 8);
  for (int xi = -8; xi <= 8; ++xi) {
    const double expect = std::abs(xi) == 1 ? 0.5 : 0.0;
    EXPECT_NEAR(std::abs(s[xi] - Complex(expect)), 0.0, 1e-13) << "xi=" << xi;
  }
}

TEST(ProjectSampled, ConstantIsMeanOnly) {
  const auto s = project_sampled(std::vector<double>(33, 1.0), 16);
  EXPECT_NEAR(s[0].real(), 1.0, 1e-15);
  for (int xi = 1; xi <= 16; ++xi) EXPECT_LT(std::abs(s[xi]), 1e-15);
}

TEST(ProjectSampled, SampledSquareWaveMatchesFourierIntegral) {
  const auto samples = sample(4096, [](double x) { return x < kPi ? 1.0 : (x > kPi ? -1.0 : 0.0); });
  const auto s = project_sampled(samples, 256);
  for (int xi = 1; xi <= 256; ++xi) {
    const Complex expect = oracle::square_wave_fourier_integral(xi);
    EXPECT_LT(std::abs(s[xi] - expect), 1e-3) << "xi=" << xi;
  }
}

TEST(ProjectSampled, MatchesDirectDft) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> samples(45);
  for (auto& v : samples) v = u(rng);
  const auto s = project_sampled(samples, 22);
  for (int xi = -22; xi <= 22; ++xi)
    EXPECT_LT(std::abs(s[xi] - oracle::direct_dft(samples, xi)), 1e-14);
}

TEST(ProjectSampled, RejectsAliasingAndNonFinite) {
  EXPECT_THROW(project_sampled(std::vector<double>(16, 0.0), 8), ValidationError);
  auto bad = std::vector<double>(17, 0.0);
  bad[3] = std::nan("");
  EXPECT_THROW(project_sampled(bad, 8), ValidationError);
}

TEST(SquareWave, AnalyticCoefficients) {
  const auto s = square_wave_coefficients(4);
  EXPECT_EQ(s[0], Complex(0.0));
  EXPECT_NEAR(std::abs(s[1] - Complex(0, -2.0 / kPi)), 0.0, 1e-16);
  EXPECT_EQ(s[2], Complex(0.0));
  EXPECT_NEAR(std::abs(s[3] - Complex(0, -2.0 / (3 * kPi))), 0.0, 1e-16);
  EXPECT_TRUE(oracle::is_hermitian(s));
}

TEST(SquareWave, AgreesWithFineSampling) {
  const int m = 1 << 16;
  const auto sampled = project_sampled(
      sample(m, [](double x) { return x < kPi ? 1.0 : (x > kPi ? -1.0 : 0.0); }), 64);
  const auto exact = square_wave_coefficients(64);
  for (int xi = -64; xi <= 64; ++xi) EXPECT_LT(std::abs(sampled[xi] - exact[xi]), 1e-4);
  for (int xi = 1; xi <= 64; ++xi)
    EXPECT_LT(std::abs(exact[xi] - oracle::square_wave_fourier_integral(xi)), 1e-13);
}

TEST(EvaluatePhysical, ConstantAndCosine) {
  SpectralState c(5);
  c.set_mode(0, 2.5);
  for (double v : evaluate_physical(c, 11)) EXPECT_DOUBLE_EQ(v, 2.5);

  SpectralState cosx(5);
  cosx.set_mode(1, 0.5);
  const auto u = evaluate_physical(cosx, 20);
  for (int j = 0; j < 20; ++j) EXPECT_NEAR(u[j], std::cos(2 * kPi * j / 20), 1e-15);
}

TEST(EvaluatePhysical, GibbsOvershootBound) {
  const double overshoot = oracle::square_wave_partial_sum_max(256) - 1.0;
  EXPECT_NEAR(overshoot, 0.179, 1e-3);
  const auto u = evaluate_physical(square_wave_coefficients(256), 1024);
  for (double v : u) {
    EXPECT_LE(v, 1.0 + overshoot + 1e-12);
    EXPECT_GE(v, -1.0 - overshoot - 1e-12);
  }
}

TEST(EvaluatePhysical, RejectsCoarseGrid) {
  EXPECT_THROW(evaluate_physical(SpectralState(8), 16), ValidationError);
}

TEST(SpectralDerivative, CosineToMinusSine) {
  SpectralState s(4);
  s.set_mode(1, 0.5);
  const auto d = spectral_derivative(s);
  EXPECT_EQ(d[1], Complex(0, 0.5));
  EXPECT_EQ(d[-1], Complex(0, -0.5));
  const auto dd = spectral_derivative(d);
  EXPECT_EQ(dd[1], Complex(-0.5));
  EXPECT_EQ(dd[-1], Complex(-0.5));

  SpectralState c(4);
  c.set_mode(0, 3.0);
  EXPECT_EQ(spectral_derivative(c).squared_norm(), 0.0);
}

TEST(GalerkinSquare, CosineProduct) {
  const double a = 0.7;
  SpectralState s(6);
  s.set_mode(1, a);
  for (const auto& v : {galerkin_square(s), galerkin_square_direct(s)}) {
    EXPECT_NEAR(v[0].real(), 2 * a * a, 1e-15);
    EXPECT_NEAR(std::abs(v[2] - Complex(a * a)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(v[-2] - Complex(a * a)), 0.0, 1e-15);
    for (int xi : {1, 3, 4, 5, 6}) EXPECT_LT(std::abs(v[xi]), 1e-15);
  }
}

TEST(GalerkinSquare, ZeroAndConstant) {
  EXPECT_EQ(galerkin_square(SpectralState(3)).squared_norm(), 0.0);
  SpectralState c(3);
  c.set_mode(0, -1.5);
  const auto v = galerkin_square(c);
  EXPECT_NEAR(v[0].real(), 2.25, 1e-15);
  for (int xi = 1; xi <= 3; ++xi) EXPECT_LT(std::abs(v[xi]), 1e-15);
}

TEST(GalerkinSquare, PaddedMatchesDirectOnRandomStates) {
  std::mt19937_64 rng(42);
  for (int n : {4, 16, 64}) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto s = oracle::random_state(n, rng);
      const auto fast = galerkin_square(s);
      const auto slow = galerkin_square_direct(s);
      EXPECT_LE(std::sqrt((fast - slow).squared_norm() / slow.squared_norm()), 1e-12);
      EXPECT_TRUE(oracle::is_hermitian(fast));
    }
  }
}

TEST(Properties, OperationsPreserveHermitianSymmetry) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 1 + trial * 3;
    const auto s = oracle::random_state(n, rng);
    EXPECT_TRUE(oracle::is_hermitian(s));
    EXPECT_TRUE(oracle::is_hermitian(spectral_derivative(s)));
    EXPECT_TRUE(oracle::is_hermitian(galerkin_square(s)));
    EXPECT_TRUE(oracle::is_hermitian(galerkin_square_direct(s)));
    EXPECT_TRUE(oracle::is_hermitian(project_sampled(evaluate_physical(s, 2 * n + 1), n)));
    EXPECT_TRUE(oracle::is_hermitian(2.0 * s - s));
  }
}

TEST(Properties, Parseval) {
  std::mt19937_64 rng(11);
  for (int n : {3, 17, 64}) {
    const auto s = oracle::random_state(n, rng);
    const auto u = evaluate_physical(s, 8 * n);
    double integral = 0.0;
    for (double v : u) integral += v * v;
    integral *= 2 * kPi / u.size();
    EXPECT_NEAR(s.squared_norm(), integral / (2 * kPi), 1e-10 * s.squared_norm());
  }
}

TEST(Properties, ProjectEvaluateRoundTrip) {
  std::mt19937_64 rng(5);
  for (int n : {1, 8, 33}) {
    for (int m : {2 * n + 1, 4 * n, 4 * n + 3}) {
      const auto s = oracle::random_state(n, rng);
      const auto back = project_sampled(evaluate_physical(s, m), n);
      EXPECT_LE(std::sqrt((back - s).squared_norm()), 1e-12 * std::sqrt(s.squared_norm()));
    }
  }
}

TEST(SpectralState, InvariantsAndErrors) {
  SpectralState s(3);
  EXPECT_EQ(s.coefficients().size(), 7u);
  s.set_mode(0, Complex(1.0, 5.0));
  EXPECT_EQ(s[0], Complex(1.0));
  EXPECT_THROW(s[4], ValidationError);
  EXPECT_THROW(SpectralState(0), ValidationError);
  EXPECT_THROW(SpectralState::from_coefficients(3, std::vector<Complex>(6)), ValidationError);
  auto t = SpectralState::from_coefficients(1, {Complex(1, 1), Complex(2, 3), Complex(3, 3)});
  EXPECT_TRUE(oracle::is_hermitian(t));
  EXPECT_EQ(t[0], Complex(2.0));
  EXPECT_THROW(s += SpectralState(4), ValidationError);
}

TEST(Truncate, DropsAndExtends) {
  std::mt19937_64 rng(9);
  const auto s = oracle::random_state(8, rng);
  const auto lo = truncate(s, 3);
  EXPECT_EQ(lo.n_modes(), 3);
  for (int xi = -3; xi <= 3; ++xi) EXPECT_EQ(lo[xi], s[xi]);
  const auto hi = truncate(s, 12);
  for (int xi = 9; xi <= 12; ++xi) EXPECT_EQ(hi[xi], Complex(0.0));
  EXPECT_EQ(hi[8], s[8]);
}

}  // namespace
}  // namespace svv
