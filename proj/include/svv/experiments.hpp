#pragma once

// Experiment configuration (JSON), presets for the standard study runs,
// and the on-disk artifacts: solution CSV, diagnostics JSON-lines, manifest.

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "svv/diagnostics.hpp"
#include "svv/error.hpp"
#include "svv/fourier.hpp"
#include "svv/integrator.hpp"
#include "svv/levy.hpp"
#include "svv/svv_operator.hpp"

namespace svv {

namespace fs = std::filesystem;
using json = nlohmann::json;

enum class InitialKind { square, cosine, file };

struct InitialData {
  InitialKind kind = InitialKind::square;
  double amplitude = 1.0;  // square: amplitude * sgn(pi - x); cosine: amplitude * cos x
  std::string path;        // file: CSV "x,u" or one sample per line
};

struct ExperimentConfig {
  std::string name = "run";
  int n_modes = 0;
  double theta = 0.5;
  double c_eps = 1.0;
  double c_m = 1.0;
  ViscosityMode viscosity = ViscosityMode::svv;
  double epsilon = 0.0;  // amplitude for viscosity = full
  std::optional<LevyMeasureSpec> measure;
  Flux flux = Flux::burgers;
  double t_end = 0.0;
  std::optional<double> dt;
  std::optional<double> cfl;
  InitialData initial;
  std::vector<double> snapshots;
  int oversample = 0;
  int diag_stride = 0;
  std::string output_dir = "output";
};

namespace detail {

inline const json* find(const json& j, const char* key) {
  const auto it = j.find(key);
  return it == j.end() ? nullptr : &*it;
}

inline double number(const json& j, const char* field) {
  if (!j.is_number()) throw ValidationError("config: '" + std::string(field) + "' must be a number");
  return j.get<double>();
}

inline int integer(const json& j, const char* field) {
  if (!j.is_number_integer())
    throw ValidationError("config: '" + std::string(field) + "' must be an integer");
  return j.get<int>();
}

inline std::string text(const json& j, const char* field) {
  if (!j.is_string()) throw ValidationError("config: '" + std::string(field) + "' must be a string");
  return j.get<std::string>();
}

inline void reject_unknown(const json& j, std::initializer_list<std::string_view> allowed,
                           const std::string& where) {
  std::vector<std::string> unknown;
  for (const auto& [key, value] : j.items())
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) unknown.push_back(key);
  if (unknown.empty()) return;
  std::string msg = where + ": unknown keys:";
  for (const auto& k : unknown) msg += " '" + k + "'";
  throw ValidationError(msg);
}

inline LevyMeasureSpec parse_measure(const json& j, Normalization norm) {
  if (!j.is_object()) throw ValidationError("config: 'measure' must be an object");
  const auto* kind = find(j, "kind");
  if (!kind) throw ValidationError("config: 'measure.kind' is required");
  const std::string k = text(*kind, "measure.kind");
  if (k == "fractional_laplacian") {
    reject_unknown(j, {"kind", "lambda"}, "config.measure");
    const auto* l = find(j, "lambda");
    if (!l) throw ValidationError("config: 'measure.lambda' is required");
    const double lambda = number(*l, "measure.lambda");
    if (!(lambda > 0.0 && lambda < 2.0))
      throw ValidationError("config: 'measure.lambda' must lie in (0, 2)");
    return {FractionalLaplacian{lambda, 1}, norm};
  }
  if (k == "cgmy") {
    reject_unknown(j, {"kind", "C", "G", "M", "Y"}, "config.measure");
    Cgmy c;
    for (auto [key, slot] : {std::pair{"C", &c.C}, {"G", &c.G}, {"M", &c.M}, {"Y", &c.Y}}) {
      const auto* v = find(j, key);
      if (!v) throw ValidationError(std::string("config: 'measure.") + key + "' is required");
      *slot = number(*v, key);
    }
    if (!(c.C > 0.0) || !(c.G >= 0.0) || !(c.M >= 0.0) || !(c.Y > 0.0 && c.Y < 2.0))
      throw ValidationError("config: cgmy needs C > 0, G, M >= 0 and Y in (0, 2)");
    return {c, norm};
  }
  throw ValidationError("config: 'measure.kind' must be fractional_laplacian or cgmy, got '" + k +
                        "'");
}

inline InitialData parse_initial(const json& j) {
  InitialData d;
  const std::string k = j.is_string() ? j.get<std::string>()
                        : j.is_object() && find(j, "kind") ? text(j["kind"], "initial.kind")
                                                           : std::string();
  if (k == "square" || k == "cosine") {
    d.kind = k == "square" ? InitialKind::square : InitialKind::cosine;
    if (j.is_object()) {
      reject_unknown(j, {"kind", "amplitude"}, "config.initial");
      if (const auto* a = find(j, "amplitude")) d.amplitude = number(*a, "initial.amplitude");
    }
    if (!std::isfinite(d.amplitude)) throw ValidationError("config: 'initial.amplitude' must be finite");
  } else if (k == "file") {
    d.kind = InitialKind::file;
    if (!j.is_object() || !find(j, "path"))
      throw ValidationError("config: 'initial' of kind file needs a 'path'");
    reject_unknown(j, {"kind", "path"}, "config.initial");
    d.path = text(j["path"], "initial.path");
  } else {
    throw ValidationError("config: 'initial' must be square, cosine or file");
  }
  return d;
}

}  // namespace detail

/// Validates the fields that do not depend on parsing.
inline void validate(const ExperimentConfig& c) {
  if (c.n_modes < 2) throw ValidationError("config: 'N' must be >= 2");
  if (!(c.t_end > 0.0) || !std::isfinite(c.t_end)) throw ValidationError("config: 'T' must be > 0");
  if (!(c.theta > 0.0 && c.theta < 1.0)) throw ValidationError("config: 'theta' must lie in (0, 1)");
  if (!(c.c_eps > 0.0)) throw ValidationError("config: 'c_eps' must be > 0");
  if (!(c.c_m > 0.0)) throw ValidationError("config: 'c_m' must be > 0");
  if (!(c.epsilon >= 0.0)) throw ValidationError("config: 'epsilon' must be >= 0");
  if (c.dt && c.cfl) throw ValidationError("config: give 'dt' or 'cfl', not both");
  if (c.dt && !(*c.dt > 0.0)) throw ValidationError("config: 'dt' must be > 0");
  if (c.cfl && !(*c.cfl > 0.0 && *c.cfl <= 1.0))
    throw ValidationError("config: 'cfl' must lie in (0, 1]");
  if (!std::is_sorted(c.snapshots.begin(), c.snapshots.end()))
    throw ValidationError("config: 'snapshots' must be sorted");
  for (double t : c.snapshots)
    if (!(t >= 0.0 && t <= c.t_end)) throw ValidationError("config: 'snapshots' must lie in [0, T]");
  if (c.oversample < 2 * c.n_modes + 1) throw ValidationError("config: 'oversample' must be >= 2N+1");
  if (c.diag_stride < 0) throw ValidationError("config: 'diag_stride' must be >= 0");
  if (c.name.empty()) throw ValidationError("config: 'name' must be non-empty");
}

/// Parses a JSON config document. Keys:
///   N, T (required); lambda | measure{kind, ...}; normalization (paper | unit);
///   theta, c_eps, c_m; viscosity (svv | full | none), epsilon; dt | cfl;
///   initial (square | cosine | {kind: square|cosine, amplitude} | {kind: file, path});
///   snapshots; oversample; diag_stride; output_dir; name; flux (burgers).
inline ExperimentConfig config_from_json(const json& j) {
  if (!j.is_object()) throw ValidationError("config: top level must be an object");
  detail::reject_unknown(j,
                         {"N", "T", "lambda", "measure", "normalization", "theta", "c_eps", "c_m",
                          "viscosity", "epsilon", "dt", "cfl", "initial", "snapshots", "oversample",
                          "diag_stride", "output_dir", "name", "flux"},
                         "config");
  using detail::find;
  ExperimentConfig c;
  const auto* n = find(j, "N");
  const auto* t = find(j, "T");
  if (!n) throw ValidationError("config: 'N' is required");
  if (!t) throw ValidationError("config: 'T' is required");
  c.n_modes = detail::integer(*n, "N");
  c.t_end = detail::number(*t, "T");

  Normalization norm = Normalization::paper;
  if (const auto* v = find(j, "normalization")) {
    const std::string s = detail::text(*v, "normalization");
    if (s == "unit") norm = Normalization::unit_symbol;
    else if (s != "paper") throw ValidationError("config: 'normalization' must be paper or unit");
  }
  const auto* lambda = find(j, "lambda");
  const auto* measure = find(j, "measure");
  if (lambda && measure) throw ValidationError("config: give 'lambda' or 'measure', not both");
  if (lambda)
    c.measure = detail::parse_measure({{"kind", "fractional_laplacian"}, {"lambda", *lambda}}, norm);
  else if (measure)
    c.measure = detail::parse_measure(*measure, norm);

  if (const auto* v = find(j, "theta")) c.theta = detail::number(*v, "theta");
  if (const auto* v = find(j, "c_eps")) c.c_eps = detail::number(*v, "c_eps");
  if (const auto* v = find(j, "c_m")) c.c_m = detail::number(*v, "c_m");
  if (const auto* v = find(j, "viscosity")) {
    const std::string s = detail::text(*v, "viscosity");
    if (s == "svv") c.viscosity = ViscosityMode::svv;
    else if (s == "full") c.viscosity = ViscosityMode::full;
    else if (s == "none") c.viscosity = ViscosityMode::none;
    else throw ValidationError("config: 'viscosity' must be svv, full or none");
  }
  if (const auto* v = find(j, "epsilon")) {
    if (c.viscosity != ViscosityMode::full)
      throw ValidationError("config: 'epsilon' only applies with viscosity = full");
    c.epsilon = detail::number(*v, "epsilon");
  } else if (c.viscosity == ViscosityMode::full) {
    throw ValidationError("config: viscosity = full needs 'epsilon'");
  }
  if (const auto* v = find(j, "dt")) c.dt = detail::number(*v, "dt");
  if (const auto* v = find(j, "cfl")) c.cfl = detail::number(*v, "cfl");
  if (!c.dt && !c.cfl) c.cfl = 0.5;
  if (const auto* v = find(j, "initial")) c.initial = detail::parse_initial(*v);
  if (const auto* v = find(j, "snapshots")) {
    if (!v->is_array()) throw ValidationError("config: 'snapshots' must be an array");
    for (const auto& s : *v) c.snapshots.push_back(detail::number(s, "snapshots"));
  } else {
    c.snapshots = {0.0, c.t_end / 2, c.t_end};
  }
  c.oversample = 4 * c.n_modes;
  if (const auto* v = find(j, "oversample")) c.oversample = detail::integer(*v, "oversample");
  if (const auto* v = find(j, "diag_stride")) c.diag_stride = detail::integer(*v, "diag_stride");
  if (const auto* v = find(j, "output_dir")) c.output_dir = detail::text(*v, "output_dir");
  if (const auto* v = find(j, "name")) c.name = detail::text(*v, "name");
  if (const auto* v = find(j, "flux"); v && detail::text(*v, "flux") != "burgers")
    throw ValidationError("config: 'flux' must be burgers");
  validate(c);
  return c;
}

inline ExperimentConfig parse_config(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("config: malformed JSON: ") + e.what());
  }
  return config_from_json(j);
}

inline ExperimentConfig load_config(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read config file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  auto c = parse_config(ss.str());
  if (c.initial.kind == InitialKind::file && fs::path(c.initial.path).is_relative())
    c.initial.path = (path.parent_path() / c.initial.path).string();
  return c;
}

inline json to_json(const LevyMeasureSpec& m) {
  json j;
  std::visit(
      [&](const auto& k) {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, FractionalLaplacian>)
          j = {{"kind", "fractional_laplacian"}, {"lambda", k.lambda}};
        else if constexpr (std::is_same_v<T, Cgmy>)
          j = {{"kind", "cgmy"}, {"C", k.C}, {"G", k.G}, {"M", k.M}, {"Y", k.Y}};
        else
          j = {{"kind", "tempered_density"}, {"lambda", k.lambda}};
      },
      m.kind);
  j["normalization"] = m.normalization == Normalization::paper ? "paper" : "unit";
  return j;
}

inline json to_json(const ExperimentConfig& c) {
  json init;
  switch (c.initial.kind) {
    case InitialKind::square: init = {{"kind", "square"}, {"amplitude", c.initial.amplitude}}; break;
    case InitialKind::cosine: init = {{"kind", "cosine"}, {"amplitude", c.initial.amplitude}}; break;
    case InitialKind::file: init = {{"kind", "file"}, {"path", c.initial.path}}; break;
  }
  json j = {{"name", c.name},           {"N", c.n_modes},
            {"T", c.t_end},             {"theta", c.theta},
            {"c_eps", c.c_eps},         {"c_m", c.c_m},
            {"viscosity", to_string(c.viscosity)},
            {"initial", init},          {"snapshots", c.snapshots},
            {"oversample", c.oversample}, {"diag_stride", c.diag_stride},
            {"flux", "burgers"},        {"output_dir", c.output_dir}};
  j["measure"] = c.measure ? to_json(*c.measure) : json(nullptr);
  if (c.viscosity == ViscosityMode::full) j["epsilon"] = c.epsilon;
  if (c.dt) j["dt"] = *c.dt;
  if (c.cfl) j["cfl"] = *c.cfl;
  return j;
}

// ---------------------------------------------------------------------------
// Files

/// Reads samples from a CSV with header "x,u" (second column) or from a
/// plain list with one value per line.
inline std::vector<double> read_samples(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read initial-data file " + path.string());
  std::vector<double> out;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (first && line == "x,u") {
      first = false;
      continue;
    }
    first = false;
    const auto comma = line.find(',');
    const std::string field = comma == std::string::npos ? line : line.substr(comma + 1);
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(field, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0) throw ValidationError("bad sample '" + line + "' in " + path.string());
    out.push_back(v);
  }
  return out;
}

inline SpectralState make_initial(const ExperimentConfig& c) {
  switch (c.initial.kind) {
    case InitialKind::square: return c.initial.amplitude * square_wave_coefficients(c.n_modes);
    case InitialKind::cosine: {
      SpectralState s(c.n_modes);
      s.set_mode(1, c.initial.amplitude / 2.0);
      return s;
    }
    case InitialKind::file: return project_sampled(read_samples(c.initial.path), c.n_modes);
  }
  throw ValidationError("unknown initial data");
}

inline SolverSetup make_setup(const ExperimentConfig& c) {
  SolverSetup s(c.measure ? build_symbol_table(*c.measure, c.n_modes) : LevySymbol::none(c.n_modes),
                svv_params(c.n_modes, c.theta, c.c_eps, c.c_m, c.viscosity, c.epsilon));
  s.flux = c.flux;
  s.t_end = c.t_end;
  s.dt = c.dt;
  s.cfl = c.cfl;
  s.snapshot_times = c.snapshots;
  s.diag_stride = c.diag_stride;
  s.oversample = c.oversample;
  s.sobolev_order = c.measure ? stability_index(*c.measure) / 2.0 : 0.5;
  return s;
}

inline void write_text(const fs::path& path, const std::string& body) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << body;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

/// CSV "x,u" on the m-point grid, %.17g, LF line endings.
inline void export_solution(const SpectralState& state, int m, const fs::path& path) {
  const auto u = evaluate_physical(state, m);
  std::string body = "x,u\n";
  char buf[64];
  for (int j = 0; j < m; ++j) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", 2.0 * std::numbers::pi * j / m, u[j]);
    body += buf;
  }
  write_text(path, body);
}

inline void export_diagnostics(const DiagnosticsRecord& r, const fs::path& path) {
  std::ostringstream os;
  write_jsonl(r, os);
  write_text(path, os.str());
}

// ---------------------------------------------------------------------------
// Runs

struct RunResult {
  ExperimentConfig config;
  SolverSetup setup;
  Trajectory trajectory;
  json manifest;
};

namespace detail {

inline json manifest_for(const ExperimentConfig& c, const SolverSetup& s, const Trajectory& t) {
  const auto& p = s.svv;
  double linf_max = 0.0;
  for (double v : t.record.linf) linf_max = std::max(linf_max, v);
  json q = {{"kernel", "1-(m/p)^2"}, {"m_n", p.m_n}, {"q_at_N", p.q_hat.back()}};
  if (p.m_n + 1 <= p.n_modes) q["q_at_m_plus_1"] = p.q_hat[static_cast<std::size_t>(p.m_n + 1)];
  json j = {{"config", to_json(c)},
            {"eps_n", p.eps_n},
            {"m_n", p.m_n},
            {"m_n_clamped", p.m_n_clamped},
            {"monitored_product", p.monitored_product()},
            {"active_eps", p.active_eps()},
            {"q_hat", q},
            {"symbol_checksum", s.symbol.checksum()},
            {"symbol_max_abs", s.symbol.max_abs()},
            {"symbol_symmetric", s.symbol.symmetric()},
            {"dt", t.dt},
            {"dt_rule", c.dt ? "fixed from config" : "stable_dt on the initial state"},
            {"steps", t.steps},
            {"energy_violations", t.energy_violations},
            {"max_energy_increase", std::isfinite(t.max_energy_increase) ? json(t.max_energy_increase)
                                                                         : json(nullptr)},
            {"blew_up", t.blew_up},
            {"oscillation_flag", t.record.oscillation_flag},
            {"snapshot_times", json::array()},
            {"files", json::array()}};
  // eps_N N against 8 max|u|, the linf proxy for the constant in the lower bound on eps_N.
  if (linf_max > 0.0) j["eps_n_times_n_over_8_linf"] = p.active_eps() * p.n_modes / (8.0 * linf_max);
  if (t.blew_up) j["blowup_time"] = t.blowup_time;
  for (const auto& snap : t.snapshots) j["snapshot_times"].push_back(snap.time());
  return j;
}

inline void write_run(const fs::path& dir, const SolverSetup& s,
                      const Trajectory& t, json& manifest) {
  fs::create_directories(dir);
  auto& files = manifest["files"];
  files = json::array();
  for (std::size_t k = 0; k < t.snapshots.size(); ++k) {
    char name[32];
    std::snprintf(name, sizeof name, "snapshot_%02zu.csv", k);
    export_solution(t.snapshots[k], s.grid(), dir / name);
    files.push_back(name);
  }
  if (!t.snapshots.empty()) {
    export_solution(t.final_state(), s.grid(), dir / "solution.csv");
    files.push_back("solution.csv");
  }
  export_diagnostics(t.record, dir / "diagnostics.jsonl");
  files.push_back("diagnostics.jsonl");
  write_text(dir / "manifest.json", manifest.dump(2) + "\n");
}

}  // namespace detail

/// Runs one configuration and writes its artifacts into `dir`. With a
/// baseline TV the Gibbs indicator is evaluated on the final state. On
/// blow-up the partial record and a manifest are written before rethrowing.
inline RunResult run_experiment(const ExperimentConfig& config, const fs::path& dir,
                                std::optional<double> baseline_tv = {}) {
  validate(config);
  auto setup = make_setup(config);
  const auto initial = make_initial(config);
  Trajectory traj;
  try {
    traj = solve(initial, setup);
  } catch (const BlowUpError& e) {
    Trajectory partial = e.partial() ? *e.partial() : Trajectory{};
    partial.blew_up = true;
    partial.blowup_time = e.time();
    auto manifest = detail::manifest_for(config, setup, partial);
    manifest["error"] = e.what();
    detail::write_run(dir, setup, partial, manifest);
    throw;
  }
  json extra;
  if (baseline_tv) {
    const double tv = bv_seminorm(traj.final_state(), setup.grid());
    traj.record.oscillation_flag = gibbs_indicator(traj.final_state(), *baseline_tv, kGibbsFactor,
                                                   setup.grid());
    extra = {{"tv", tv}, {"baseline_tv", *baseline_tv}, {"ratio", tv / *baseline_tv},
             {"factor", kGibbsFactor}};
  }
  auto manifest = detail::manifest_for(config, setup, traj);
  if (!extra.is_null()) manifest["gibbs"] = extra;
  detail::write_run(dir, setup, traj, manifest);
  return {config, std::move(setup), std::move(traj), std::move(manifest)};
}

// ---------------------------------------------------------------------------
// Presets

inline const std::vector<double> kPresetLambdas = {1.6, 1.1, 0.6, 0.1};

inline std::string lambda_tag(double lambda) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "lambda_%g", lambda);
  return buf;
}

/// Square wave, N = 256, T = 0.5, SVV on.
inline ExperimentConfig fig1_config(double lambda, int n = 256) {
  ExperimentConfig c;
  c.name = "fig1_" + lambda_tag(lambda);
  c.n_modes = n;
  c.t_end = 0.5;
  c.measure = LevyMeasureSpec{FractionalLaplacian{lambda, 1}};
  c.cfl = 0.5;
  c.snapshots = {0.0, 0.25, 0.5};
  c.oversample = 4 * n;
  validate(c);
  return c;
}

/// As fig1 with the viscous term switched off (eps = 0).
inline ExperimentConfig fig2_config(double lambda, int n = 256) {
  auto c = fig1_config(lambda, n);
  c.name = "fig2_" + lambda_tag(lambda);
  c.viscosity = ViscosityMode::none;
  return c;
}

struct GibbsReport {
  double tv = 0.0;
  double baseline_tv = 0.0;
  bool oscillation_flag = false;
  double ratio() const { return tv / baseline_tv; }
};

/// eps = 0 run judged against its SVV baseline (written to dir/baseline).
inline GibbsReport run_fig2(double lambda, const fs::path& dir, int n = 256) {
  const auto base = run_experiment(fig1_config(lambda, n), dir / "baseline");
  const double baseline_tv = bv_seminorm(base.trajectory.final_state(), base.setup.grid());
  const auto run = run_experiment(fig2_config(lambda, n), dir, baseline_tv);
  return {bv_seminorm(run.trajectory.final_state(), run.setup.grid()), baseline_tv,
          run.trajectory.record.oscillation_flag};
}

struct RateRow {
  int n_modes = 0;
  double eps_n = 0.0;
  double l1_error = 0.0;
};

struct RateReport {
  double lambda = 0.0;
  int reference_n = 0;
  std::vector<RateRow> rows;
  double slope = 0.0;  // in eps_N
  bool strictly_decreasing = true;
};

/// L1 error at T of SVV runs on `ns` against a fine SVV run truncated to each coarse grid.
inline RateReport run_rate(double lambda, const fs::path& dir,
                           const std::vector<int>& ns = {32, 64, 128, 256}, int reference_n = 1024) {
  if (ns.size() < 3) throw ValidationError("rate: need at least three resolutions");
  for (int n : ns)
    if (n >= reference_n) throw ValidationError("rate: reference N must exceed every sweep N");
  RateReport rep;
  rep.lambda = lambda;
  rep.reference_n = reference_n;
  auto ref_cfg = fig1_config(lambda, reference_n);
  ref_cfg.name = "rate_reference";
  ref_cfg.snapshots = {0.0, 0.5};
  const auto ref = run_experiment(ref_cfg, dir / ("N" + std::to_string(reference_n)));
  std::vector<std::pair<double, double>> pairs;
  std::string table = "N,eps_n,l1_error\n";
  for (int n : ns) {
    auto cfg = fig1_config(lambda, n);
    cfg.name = "rate_N" + std::to_string(n);
    cfg.snapshots = {0.0, 0.5};
    const auto run = run_experiment(cfg, dir / ("N" + std::to_string(n)));
    const auto diff = run.trajectory.final_state() - truncate(ref.trajectory.final_state(), n);
    const RateRow row{n, run.setup.svv.eps_n, norms(diff, run.setup.grid()).l1};
    if (!rep.rows.empty() && !(row.l1_error < rep.rows.back().l1_error))
      rep.strictly_decreasing = false;
    rep.rows.push_back(row);
    pairs.emplace_back(row.eps_n, row.l1_error);
    char buf[96];
    std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g\n", n, row.eps_n, row.l1_error);
    table += buf;
  }
  rep.slope = rate_fit(pairs);
  write_text(dir / "rate.csv", table);
  json j = {{"lambda", lambda}, {"reference_n", reference_n}, {"slope_in_eps", rep.slope},
            {"slope_in_inverse_n", rep.slope * 0.5}, {"strictly_decreasing", rep.strictly_decreasing},
            {"rows", json::array()}};
  for (const auto& r : rep.rows)
    j["rows"].push_back({{"N", r.n_modes}, {"eps_n", r.eps_n}, {"l1_error", r.l1_error}});
  write_text(dir / "rate.json", j.dump(2) + "\n");
  return rep;
}

struct ContractionStudy {
  ContractionReport report;
  TimeModulus modulus;  // of the first run
};

/// u0 = square wave, v0 = scale * square wave, SVV on, eleven snapshots on [0, T].
inline ContractionStudy run_contraction(double lambda, const fs::path& dir, int n = 256,
                                        double scale = 0.9, double t_end = 0.5) {
  auto cu = fig1_config(lambda, n);
  cu.name = "contraction_u";
  cu.t_end = t_end;
  cu.snapshots.clear();
  for (int k = 0; k <= 10; ++k) cu.snapshots.push_back(t_end * k / 10.0);
  const auto u = run_experiment(cu, dir / "u");

  auto cv = cu;
  cv.name = "contraction_v";
  cv.initial.amplitude = scale;
  const auto v = run_experiment(cv, dir / "v");

  ContractionStudy out{contraction_check(u.trajectory, v.trajectory, u.setup.grid()),
                       time_modulus(u.trajectory, u.setup.grid())};
  json j = {{"lambda", lambda},
            {"N", n},
            {"scale", scale},
            {"times", out.report.times},
            {"l1_distance", out.report.distances},
            {"max_violation", out.report.max_violation},
            {"max_step_violation", out.report.max_step_violation},
            {"contractive", out.report.contractive},
            {"time_modulus_exponent", out.modulus.degenerate ? json(nullptr) : json(out.modulus.exponent)}};
  write_text(dir / "contraction.json", j.dump(2) + "\n");
  return out;
}

struct CgmyStudy {
  RunResult run;
  GrowthBound growth;        // C_n fitted on xi <= fit_max, checked up to verify_max
  double growth_constant = 0.0;  // 2 int min(|z|, 1) dmu_n
  bool analytic_bound_holds = true;
};

inline CgmyStudy run_cgmy(const Cgmy& params, const fs::path& dir, int n = 256, int fit_max = 8,
                          int verify_max = 256) {
  ExperimentConfig c = fig1_config(1.0, n);
  c.name = "cgmy";
  c.measure = LevyMeasureSpec{params};
  validate(c);
  auto run = run_experiment(c, dir);

  const auto [sym, rest] = split_measure(*c.measure);
  std::vector<Complex> g(static_cast<std::size_t>(verify_max + 1));
  for (int xi = 1; xi <= verify_max; ++xi) g[static_cast<std::size_t>(xi)] = symbol_quadrature(rest, xi);
  const auto lookup = [&g](int xi) { return g.at(static_cast<std::size_t>(xi)); };
  CgmyStudy out{std::move(run), fit_linear_growth(lookup, fit_max, verify_max), growth_constant(rest)};
  double worst = 0.0;
  for (int xi = 1; xi <= verify_max; ++xi) worst = std::max(worst, std::abs(lookup(xi)) / (1.0 + xi));
  out.analytic_bound_holds = worst <= out.growth_constant;

  json curve = json::array();
  for (int xi = 1; xi <= verify_max; ++xi)
    curve.push_back({{"xi", xi}, {"re", g[xi].real()}, {"im", g[xi].imag()}});
  json j = {{"C", params.C}, {"G", params.G}, {"M", params.M}, {"Y", params.Y},
            {"fit_max", fit_max}, {"verify_max", verify_max},
            {"fitted_constant", out.growth.constant}, {"worst_ratio", out.growth.worst_ratio},
            {"worst_xi", out.growth.worst_xi}, {"fitted_bound_holds", out.growth.holds},
            {"analytic_constant", out.growth_constant},
            {"analytic_bound_holds", out.analytic_bound_holds},
            {"max_ratio", worst}, {"remainder_symbol", curve}};
  write_text(dir / "growth.json", j.dump(2) + "\n");
  return out;
}

}  // namespace svv
