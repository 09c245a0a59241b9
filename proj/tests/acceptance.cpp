// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.
// Usage: acceptance [work-dir]

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "svv/experiments.hpp"

namespace {

using namespace svv;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// Direct O(N^2) sum over p + q = xi, |p|, |q| <= N, no transforms.
SpectralState convolution_oracle(const SpectralState& s) {
  const int n = s.n_modes();
  SpectralState out(n);
  for (int xi = 0; xi <= n; ++xi) {
    Complex acc{};
    for (int p = std::max(-n, xi - n); p <= std::min(n, xi + n); ++p) acc += s[p] * s[xi - p];
    out.set_mode(xi, acc);
  }
  return out;
}

Outcome symbol_cross_oracle() {
  const auto t0 = Clock::now();
  double worst = 0.0;
  for (double lambda : {0.3, 0.9, 1.0, 1.5})
    for (int xi = 1; xi <= 64; ++xi) {
      const double closed = symbol_closed_form(lambda, xi);
      const double quad = symbol_quadrature({FractionalLaplacian{lambda, 1}}, xi).real();
      worst = std::max(worst, std::abs(closed - quad) / std::abs(closed));
    }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  return {worst <= 1e-6 && secs < 10.0, fmt("max rel err %.2e, %.2f s", worst, secs)};
}

Outcome symmetric_symbol_signs() {
  double worst_im = 0.0, worst_re = -INFINITY;
  bool zero_ok = true;
  for (double lambda : {0.1, 0.3, 0.6, 0.9, 1.0, 1.1, 1.5, 1.6, 1.9})
    for (int n : {2, 64, 256, 512}) {
      const auto t = build_symbol_table({FractionalLaplacian{lambda, 1}}, n);
      zero_ok = zero_ok && t[0] == Complex(0.0);
      for (int xi = -n; xi <= n; ++xi) {
        worst_im = std::max(worst_im, std::abs(t[xi].imag()));
        worst_re = std::max(worst_re, t[xi].real());
      }
    }
  return {worst_im <= 1e-12 && worst_re <= 0.0 && zero_ok,
          fmt("max |Im G| %.1e, max Re G %.1e, G(0) = 0: %s", worst_im, worst_re,
              zero_ok ? "yes" : "no")};
}

Outcome theta_anchors() {
  const double e1 = std::abs(theta_lambda(1.0) - std::numbers::pi / 2);
  const double e2 = std::abs(theta_lambda(0.5) - std::sqrt(std::numbers::pi / 2));
  const double e3 = std::abs(theta_lambda(1.5) - oracle::theta_reflection(1.5));
  return {e1 <= 1e-12 && e2 <= 1e-10 && e3 <= 1e-8,
          fmt("|err| at 1: %.1e, at 0.5: %.1e, at 1.5: %.1e", e1, e2, e3)};
}

Outcome galerkin_equivalence() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(2024);
  double worst = 0.0;
  for (int n : {4, 16, 64, 256})
    for (int k = 0; k < 100; ++k) {
      const auto s = oracle::random_state(n, rng);
      const auto fast = galerkin_square(s);
      const auto slow = convolution_oracle(s);
      worst = std::max(worst, std::sqrt((fast - slow).squared_norm() / slow.squared_norm()));
    }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  return {worst <= 1e-12 && secs < 30.0, fmt("max rel diff %.2e over 400 states, %.2f s", worst, secs)};
}

struct Fig1Runs {
  std::map<double, RunResult> runs;
  double seconds = 0.0;
};

Outcome conservation(const Fig1Runs& f) {
  double drift = 0.0, worst_increase = -INFINITY;
  long violations = 0;
  for (const auto& [lambda, r] : f.runs) {
    const auto& snaps = r.trajectory.snapshots;
    drift = std::max(drift, std::abs(snaps.back()[0] - snaps.front()[0]));
    worst_increase = std::max(worst_increase, r.trajectory.max_energy_increase);
    violations += r.trajectory.energy_violations;
  }
  return {drift <= 1e-12 && violations == 0 && worst_increase <= 1e-10 && f.seconds < 120.0,
          fmt("mean drift %.1e, max per-step energy change %.2e, %ld violations, %.1f s", drift,
              worst_increase, violations, f.seconds)};
}

Outcome stability(const Fig1Runs& f) {
  double linf_ratio = 0.0, tv_ratio = 0.0;
  for (const auto& [lambda, r] : f.runs) {
    const int m = r.setup.grid();
    const auto& snaps = r.trajectory.snapshots;
    const double linf0 = norms(snaps.front(), m).linf;
    for (const auto& s : snaps) linf_ratio = std::max(linf_ratio, norms(s, m).linf / linf0);
    const double growth = std::exp(r.setup.svv.monitored_product() * r.config.t_end);
    tv_ratio = std::max(tv_ratio, bv_seminorm(snaps.back(), m) / (bv_seminorm(snaps.front(), m) * growth));
  }
  return {linf_ratio <= 1.05 && tv_ratio <= 1.05,
          fmt("max linf(t)/linf(0) %.4f, max TV(T)/(TV(0) e^{c_N T}) %.4f", linf_ratio, tv_ratio)};
}

Outcome convergence_rate(const fs::path& dir) {
  const auto t0 = Clock::now();
  const auto rep = run_rate(0.6, dir);
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  std::string errs;
  for (const auto& r : rep.rows) errs += fmt(" %d:%.4g", r.n_modes, r.l1_error);
  return {rep.strictly_decreasing && rep.slope >= 0.5 && secs < 600.0,
          fmt("L1 errors%s; slope in eps_N %.3f; %.1f s", errs.c_str(), rep.slope, secs)};
}

Outcome gibbs(const Fig1Runs& f, const fs::path& dir) {
  const auto t0 = Clock::now();
  bool ok = true;
  std::string detail;
  for (double lambda : kPresetLambdas) {
    const auto& base = f.runs.at(lambda);
    const double baseline_tv = bv_seminorm(base.trajectory.final_state(), base.setup.grid());
    const auto run = run_experiment(fig2_config(lambda), dir / lambda_tag(lambda), baseline_tv);
    const bool flag = run.trajectory.record.oscillation_flag;
    const bool expected = lambda < 1.0;
    ok = ok && flag == expected;
    detail += fmt(" %g:%.2f%s", lambda, run.manifest["gibbs"]["ratio"].get<double>(),
                  flag == expected ? "" : "(wrong)");
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  return {ok && secs < 180.0, fmt("TV ratio vs SVV baseline (flag above %.1f):%s; %.1f s",
                                  kGibbsFactor, detail.c_str(), secs)};
}

Outcome contraction(const fs::path& dir) {
  const auto s = run_contraction(1.1, dir);
  return {s.report.contractive,
          fmt("L1 distance %.4f -> %.4f over %zu snapshots, max growth vs start %.1e, step to step %.1e",
              s.report.distances.front(), s.report.distances.back(), s.report.distances.size(),
              s.report.max_violation, s.report.max_step_violation)};
}

Outcome asymmetric(const fs::path& dir) {
  const auto s = run_cgmy({1.0, 2.0, 3.0, 0.8}, dir);
  const auto& t = s.run.trajectory;
  bool finite = !t.blew_up;
  for (const auto& snap : t.snapshots) finite = finite && snap.all_finite();
  return {finite && s.growth.holds,
          fmt("run stable: %s; C_n fitted on xi <= 8 = %.5f, max |G_n|/(1+xi) on (8, 256] = %.5f "
              "at xi = %d; 2 int min(|z|,1) dmu_n = %.5f bounds all xi: %s",
              finite ? "yes" : "no", s.growth.constant, s.growth.worst_ratio, s.growth.worst_xi,
              s.growth_constant, s.analytic_bound_holds ? "yes" : "no")};
}

}  // namespace

int main(int argc, char** argv) {
  const fs::path work = argc > 1 ? fs::path(argv[1]) : fs::temp_directory_path() / "svv_acceptance";
  fs::remove_all(work);

  Fig1Runs fig1;
  const auto t0 = Clock::now();
  for (double lambda : kPresetLambdas)
    fig1.runs.emplace(lambda, run_experiment(fig1_config(lambda), work / "fig1" / lambda_tag(lambda)));
  fig1.seconds = std::chrono::duration<double>(Clock::now() - t0).count();

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"symbol closed form vs quadrature", symbol_cross_oracle},
      {"symmetric symbol signs", symmetric_symbol_signs},
      {"Theta_lambda anchors", theta_anchors},
      {"Galerkin product equivalence", galerkin_equivalence},
      {"conservation and dissipation", [&] { return conservation(fig1); }},
      {"Linf and BV stability", [&] { return stability(fig1); }},
      {"convergence rate", [&] { return convergence_rate(work / "rate"); }},
      {"Gibbs reproduction", [&] { return gibbs(fig1, work / "fig2"); }},
      {"L1 contraction", [&] { return contraction(work / "contraction"); }},
      {"asymmetric measure", [&] { return asymmetric(work / "cgmy"); }},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("%s %zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
