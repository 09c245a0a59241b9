// svv: command-line driver for the SVV fractional Burgers solver.
//
//   svv run <config.json>
//   svv preset <fig1|fig2|rate|contraction|cgmy> [--lambda X] [--n N] [--out DIR]
//   svv rate --lambda X --out DIR
//
// Relative output paths are resolved against $SVV_OUTPUT_ROOT when it is set.
// Exit codes: 0 success, 2 validation error, 3 solver blow-up, 1 anything else.

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <exception>
#include <optional>
#include <string>
#include <vector>

#include "svv/experiments.hpp"

namespace {

using namespace svv;

constexpr int kExitValidation = 2;
constexpr int kExitBlowUp = 3;

fs::path output_path(const fs::path& p) {
  if (p.is_absolute()) return p;
  const char* root = std::getenv("SVV_OUTPUT_ROOT");
  return root && *root ? fs::path(root) / p : p;
}

void summarize(const RunResult& r, const fs::path& dir) {
  const auto& rec = r.trajectory.record;
  std::printf("%s: N=%d eps_N=%.6g m_N=%d dt=%.6g steps=%ld l1(T)=%.6g bv(T)=%.6g -> %s\n",
              r.config.name.c_str(), r.config.n_modes, r.setup.svv.active_eps(), r.setup.svv.m_n,
              r.trajectory.dt, r.trajectory.steps, rec.l1.back(), rec.bv.back(),
              dir.string().c_str());
}

std::vector<double> lambdas_or_all(const std::optional<double>& lambda) {
  return lambda ? std::vector<double>{*lambda} : kPresetLambdas;
}

int run_preset(const std::string& name, std::optional<double> lambda, std::optional<int> n,
               const std::optional<std::string>& out, std::optional<int> reference_n,
               const std::vector<double>& cgmy) {
  const fs::path dir = output_path(out ? fs::path(*out) : fs::path("output") / name);
  if (name != "rate" && reference_n) throw ValidationError("--reference-n only applies to rate");
  if (name != "cgmy" && !cgmy.empty()) throw ValidationError("--cgmy only applies to cgmy");

  if (name == "fig1") {
    for (double l : lambdas_or_all(lambda)) {
      const auto d = dir / lambda_tag(l);
      summarize(run_experiment(fig1_config(l, n.value_or(256)), d), d);
    }
  } else if (name == "fig2") {
    for (double l : lambdas_or_all(lambda)) {
      const auto rep = run_fig2(l, dir / lambda_tag(l), n.value_or(256));
      std::printf("fig2 lambda=%g: tv=%.6g baseline_tv=%.6g ratio=%.4g oscillation_flag=%s\n", l,
                  rep.tv, rep.baseline_tv, rep.ratio(), rep.oscillation_flag ? "true" : "false");
    }
  } else if (name == "rate") {
    if (n) throw ValidationError("rate sweeps N over {32,64,128,256}; use --reference-n instead of --n");
    const auto rep = run_rate(lambda.value_or(0.6), dir, {32, 64, 128, 256}, reference_n.value_or(1024));
    std::printf("rate lambda=%g reference N=%d\n", rep.lambda, rep.reference_n);
    for (const auto& r : rep.rows)
      std::printf("  N=%-5d eps_N=%.6g l1_error=%.6g\n", r.n_modes, r.eps_n, r.l1_error);
    std::printf("  slope in eps_N = %.4f, strictly decreasing = %s\n", rep.slope,
                rep.strictly_decreasing ? "true" : "false");
  } else if (name == "contraction") {
    const auto s = run_contraction(lambda.value_or(1.1), dir, n.value_or(256));
    std::printf("contraction: max violation %.3e, max step violation %.3e, contractive=%s\n",
                s.report.max_violation, s.report.max_step_violation,
                s.report.contractive ? "true" : "false");
    if (!s.modulus.degenerate) std::printf("  time modulus exponent %.4f\n", s.modulus.exponent);
  } else if (name == "cgmy") {
    if (lambda) throw ValidationError("cgmy takes --cgmy C G M Y, not --lambda");
    Cgmy p{1.0, 2.0, 3.0, 0.8};
    if (!cgmy.empty()) p = {cgmy[0], cgmy[1], cgmy[2], cgmy[3]};
    const auto s = run_cgmy(p, dir, n.value_or(256));
    summarize(s.run, dir);
    std::printf("  remainder growth: fitted C_n=%.6g (xi<=8), worst ratio %.6g at xi=%d, holds=%s\n",
                s.growth.constant, s.growth.worst_ratio, s.growth.worst_xi,
                s.growth.holds ? "true" : "false");
    std::printf("  2 int min(|z|,1) dmu_n = %.6g, bound holds=%s\n", s.growth_constant,
                s.analytic_bound_holds ? "true" : "false");
  } else {
    throw ValidationError("unknown preset '" + name + "' (fig1, fig2, rate, contraction, cgmy)");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral vanishing viscosity solver for fractional Burgers equations"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "run a JSON experiment config");
  std::string config_path;
  run->add_option("config", config_path, "config file")->required();

  auto* preset = app.add_subcommand("preset", "run a named preset");
  std::string preset_name;
  std::optional<double> lambda;
  std::optional<int> n;
  std::optional<std::string> out;
  std::optional<int> reference_n;
  std::vector<double> cgmy;
  preset->add_option("name", preset_name, "fig1 | fig2 | rate | contraction | cgmy")->required();
  preset->add_option("--lambda", lambda, "stability index in (0, 2)");
  preset->add_option("--n", n, "number of modes N");
  preset->add_option("--out", out, "output directory");
  preset->add_option("--reference-n", reference_n, "rate: reference resolution (default 1024)");
  preset->add_option("--cgmy", cgmy, "cgmy: C G M Y")->expected(4);

  auto* rate = app.add_subcommand("rate", "convergence-rate study");
  std::optional<double> rate_lambda;
  std::optional<std::string> rate_out;
  std::optional<int> rate_ref;
  rate->add_option("--lambda", rate_lambda, "stability index in (0, 2)")->required();
  rate->add_option("--out", rate_out, "output directory")->required();
  rate->add_option("--reference-n", rate_ref, "reference resolution (default 1024)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  try {
    if (*run) {
      const auto cfg = load_config(config_path);
      const auto dir = output_path(cfg.output_dir);
      summarize(run_experiment(cfg, dir), dir);
      return 0;
    }
    if (*preset) return run_preset(preset_name, lambda, n, out, reference_n, cgmy);
    return run_preset("rate", rate_lambda, std::nullopt, rate_out, rate_ref, {});
  } catch (const BlowUpError& e) {
    std::fprintf(stderr, "svv: blow-up: %s\n", e.what());
    return kExitBlowUp;
  } catch (const ValidationError& e) {
    std::fprintf(stderr, "svv: %s\n", e.what());
    return kExitValidation;
  } catch (const DomainError& e) {
    std::fprintf(stderr, "svv: %s\n", e.what());
    return kExitValidation;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "svv: error: %s\n", e.what());
    return 1;
  }
}
