#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <vector>

#include "oracles.hpp"
#include "svv/diagnostics.hpp"

namespace svv {
namespace {

constexpr double kPi = std::numbers::pi;

SpectralState cosine(int n, double half_amplitude = 0.5, double t = 0.0) {
  SpectralState s(n, t);
  s.set_mode(1, half_amplitude);
  return s;
}

TEST(Norms, Cosine) {
  const auto r = norms(cosine(8), 32);
  EXPECT_NEAR(r.l2, std::sqrt(kPi), 1e-14);
  EXPECT_NEAR(r.linf, 1.0, 1e-10);
  // |cos| has kinks, so the trapezoid l1 converges only at second order.
  EXPECT_NEAR(r.l1, 4.0, 2e-2);
  EXPECT_NEAR(norms(cosine(8), 1024).l1, 4.0, 2e-5);
}

TEST(Norms, ZeroAndScaling) {
  const auto z = norms(SpectralState(4), 16);
  EXPECT_EQ(z.l1, 0.0);
  EXPECT_EQ(z.l2, 0.0);
  EXPECT_EQ(z.linf, 0.0);
  std::mt19937_64 rng(3);
  const auto s = oracle::random_state(10, rng);
  const auto a = norms(s, 40), b = norms(2.0 * s, 40);
  EXPECT_NEAR(b.l1, 2 * a.l1, 1e-13 * a.l1);
  EXPECT_NEAR(b.l2, 2 * a.l2, 1e-13 * a.l2);
  EXPECT_NEAR(b.linf, 2 * a.linf, 1e-13 * a.linf);
  EXPECT_THROW(norms(s, 20), ValidationError);
}

TEST(Norms, ParsevalMatchesSobolevZero) {
  std::mt19937_64 rng(8);
  for (int n : {1, 7, 64}) {
    const auto s = oracle::random_state(n, rng);
    EXPECT_NEAR(norms(s, 4 * n + 1).l2, std::sqrt(2 * kPi) * sobolev_seminorm(s, 0.0),
                1e-12 * norms(s, 4 * n + 1).l2);
  }
}

TEST(BvSeminorm, Examples) {
  SpectralState c(5);
  c.set_mode(0, 1.7);
  EXPECT_EQ(bv_seminorm(c, 20), 0.0);
  EXPECT_NEAR(bv_seminorm(cosine(8), 1024), 4.0, 1e-3);
  EXPECT_GE(bv_seminorm(square_wave_coefficients(256), 1024), 4.0);
}

TEST(TruncationError, Examples) {
  EXPECT_LT(truncation_error(cosine(2, 0.8)), 1e-14);
  EXPECT_LT(truncation_error(cosine(5, 0.8)), 1e-14);
  const double a = 0.8;
  const double v = a * a / 2;
  EXPECT_NEAR(truncation_error(cosine(1, a)), std::sqrt(2 * kPi * 2 * 4 * v * v), 1e-14);
}

TEST(TruncationError, MatchesDirectConvolution) {
  std::mt19937_64 rng(12);
  const int n = 6;
  const auto s = oracle::random_state(n, rng);
  double acc = 0.0;
  for (int xi = n + 1; xi <= 2 * n; ++xi) {
    Complex c{};
    for (int p = xi - n; p <= n; ++p) c += s[p] * s[xi - p];
    acc += 2.0 * xi * xi * std::norm(c / 2.0);
  }
  EXPECT_NEAR(truncation_error(s), std::sqrt(2 * kPi * acc), 1e-12 * std::sqrt(acc));
}

TEST(SobolevSeminorm, Examples) {
  SpectralState c(3);
  c.set_mode(0, 4.0);
  EXPECT_EQ(sobolev_seminorm(c, 0.5), 0.0);
  EXPECT_NEAR(sobolev_seminorm(cosine(3), 0.5), std::sqrt(0.5), 1e-15);
  EXPECT_THROW(sobolev_seminorm(c, -0.1), DomainError);
}

TEST(RateFit, SyntheticSlopes) {
  std::vector<std::pair<double, double>> half, one;
  for (double e : {0.2, 0.1, 0.05, 0.025}) {
    half.emplace_back(e, 3.0 * std::sqrt(e));
    one.emplace_back(e, 0.7 * e);
  }
  EXPECT_NEAR(rate_fit(half), 0.5, 1e-12);
  EXPECT_NEAR(rate_fit(one), 1.0, 1e-12);
}

TEST(RateFit, Errors) {
  std::vector<std::pair<double, double>> two{{0.1, 1.0}, {0.2, 2.0}};
  EXPECT_THROW(rate_fit(two), ValidationError);
  std::vector<std::pair<double, double>> zero{{0.1, 1.0}, {0.2, 0.0}, {0.3, 1.0}};
  EXPECT_THROW(rate_fit(zero), ValidationError);
  std::vector<std::pair<double, double>> same{{0.1, 1.0}, {0.1, 2.0}, {0.1, 3.0}};
  EXPECT_THROW(rate_fit(same), ValidationError);
}

TEST(GibbsIndicator, ThresholdBehaviour) {
  const auto s = square_wave_coefficients(64);
  const double tv = bv_seminorm(s, 256);
  EXPECT_FALSE(gibbs_indicator(s, tv));
  EXPECT_TRUE(gibbs_indicator(s, tv / 1.6));
  EXPECT_FALSE(gibbs_indicator(s, tv / 1.4));
  EXPECT_TRUE(gibbs_indicator(s, tv / 1.2, 1.1));
  EXPECT_THROW(gibbs_indicator(s, 0.0), ValidationError);
}

TEST(DiagnosticsRecord, AppendAndJsonLines) {
  DiagnosticsRecord r;
  r.append(cosine(4, 0.5, 0.0), 0.5, 16);
  r.append(cosine(4, 0.25, 0.125), 0.5, 16);
  ASSERT_EQ(r.size(), 2u);
  EXPECT_NEAR(r.energy[0], kPi / 2, 1e-14);
  EXPECT_NEAR(r.sobolev_half[1], std::sqrt(2 * 0.0625), 1e-15);
  std::ostringstream os;
  write_jsonl(r, os);
  const std::string out = os.str();
  EXPECT_EQ(std::count(out.begin(), out.end(), '\n'), 2);
  EXPECT_EQ(out.rfind("{\"t\":0,\"l1\":", 0), 0u);
  for (const char* key : {"\"l2\":", "\"linf\":", "\"bv\":", "\"energy\":", "\"sobolev_half\":",
                          "\"trunc_err\":"})
    EXPECT_NE(out.find(key), std::string::npos) << key;
  EXPECT_NE(out.find("\"t\":0.125,"), std::string::npos);
}

Trajectory decaying(int n, double rate, int count, double a0 = 0.5) {
  Trajectory t;
  for (int k = 0; k < count; ++k) {
    const double time = 0.05 * k;
    t.snapshots.push_back(cosine(n, a0 * std::exp(-rate * time), time));
  }
  return t;
}

TEST(ContractionCheck, IdenticalDataHasZeroDistance) {
  const auto u = decaying(8, 1.0, 5);
  const auto rep = contraction_check(u, u);
  for (double d : rep.distances) EXPECT_EQ(d, 0.0);
  EXPECT_TRUE(rep.contractive);
}

TEST(ContractionCheck, DetectsGrowthAndMismatch) {
  const auto u = decaying(8, 1.0, 5), v = decaying(8, 1.0, 5, 0.4);
  const auto ok = contraction_check(u, v);
  EXPECT_TRUE(ok.contractive);
  EXPECT_NEAR(ok.distances.front(), 0.2 * norms(cosine(8), 32).l1, 1e-14);  // l1 of 0.2 cos x
  for (std::size_t k = 1; k < ok.distances.size(); ++k)
    EXPECT_LT(ok.distances[k], ok.distances[k - 1]);

  const auto w = decaying(8, -1.0, 5), z = decaying(8, -1.0, 5, 0.4);
  const auto bad = contraction_check(w, z);
  EXPECT_FALSE(bad.contractive);
  EXPECT_NEAR(bad.max_violation, std::exp(0.2) - 1.0, 1e-10);

  EXPECT_THROW(contraction_check(u, decaying(8, 1.0, 4)), ValidationError);
  EXPECT_THROW(contraction_check(u, decaying(16, 1.0, 5)), ValidationError);
}

TEST(TimeModulus, StationaryIsDegenerate) {
  Trajectory t;
  for (int k = 0; k < 8; ++k) t.snapshots.push_back(SpectralState(4, 0.1 * k));
  EXPECT_TRUE(time_modulus(t).degenerate);
}

TEST(TimeModulus, SmoothDecayIsLipschitz) {
  const auto tm = time_modulus(decaying(8, 1.0, 10));
  EXPECT_FALSE(tm.degenerate);
  EXPECT_EQ(tm.pairs, 45u);
  EXPECT_NEAR(tm.exponent, 1.0, 0.05);
}

TEST(TimeModulus, TooFewSnapshots) {
  EXPECT_THROW(time_modulus(decaying(8, 1.0, 7)), ValidationError);
}

TEST(Properties, DiagnosticsArePure) {
  std::mt19937_64 rng(21);
  const auto s = oracle::random_state(20, rng);
  DiagnosticsRecord a, b;
  a.append(s, 0.3, 80);
  b.append(s, 0.3, 80);
  std::ostringstream x, y;
  write_jsonl(a, x);
  write_jsonl(b, y);
  EXPECT_EQ(x.str(), y.str());
}

}  // namespace
}  // namespace svv
