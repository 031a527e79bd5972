#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "battery.hpp"
#include "pnspace/distfn.hpp"
#include "pnspace/distfn_io.hpp"
#include "pnspace/nnorm.hpp"
#include "pnspace/pnn.hpp"
#include "pnspace/report.hpp"
#include "pnspace/sibley.hpp"
#include "pnspace/tnorm.hpp"
#include "pnspace/topology.hpp"
#include "pnspace/triangle.hpp"

namespace pnspace::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

/// Raised for problems with the configuration or the input files.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

fs::path resolve_output(const std::string& p) {
  fs::path path(p);
  if (path.is_relative())
    if (const char* dir = std::getenv("PNSPACE_OUT_DIR"); dir != nullptr && *dir != '\0') path = fs::path(dir) / path;
  return path;
}

void write_file(const std::string& target, const std::string& content) {
  const fs::path path = resolve_output(target);
  if (path.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot write " + path.string());
  f << content;
  if (!f) throw ConfigError("cannot write " + path.string());
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

Vector parse_vector(const std::string& text) {
  std::string t = text;
  if (t.find('[') == std::string::npos) t = "[" + t + "]";
  try {
    return json::parse(t).get<Vector>();
  } catch (const json::exception&) {
    throw ConfigError("cannot parse vector \"" + text + "\" (expected e.g. 1,0,2 or [1,0,2])");
  }
}

std::vector<Vector> parse_vectors(const json& j, const std::string& what) {
  try {
    return j.get<std::vector<Vector>>();
  } catch (const json::exception&) {
    throw ConfigError(what + ": expected a JSON array of number arrays");
  }
}

std::uint64_t effective_seed(const std::optional<std::uint64_t>& seed, std::ostream& err) {
  if (seed) return *seed;
  std::random_device rd;
  const std::uint64_t s = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
  err << "seed: " << s << "\n";
  return s;
}

DistFn load_df(const std::string& path) {
  try {
    return load_distfn(path);
  } catch (const DistFnError& e) {
    // the message already carries the breakpoint index
    throw ConfigError(path + ": " + e.what());
  }
}

// ----------------------------------------------------------------- options

struct Output {
  std::string format;  // "" | "json" | "csv"
  std::string out;

  void add(CLI::App* app) {
    app->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    app->add_option("--out", out,
                    "Also write the primary output to this file (relative paths resolve against PNSPACE_OUT_DIR)");
  }

  void emit(std::ostream& os, const std::string& text) const {
    os << text;
    if (!out.empty()) write_file(out, text);
  }
};

struct SpaceOptions {
  std::string space = "simple";
  int dim = 3;
  int order = 2;
  std::string tnorm = "min";
  int grid = 4096;
  int ratio_resolution = 1024;
  double dep_tol = 1e-10;
  std::string basis;

  void add(CLI::App* app) {
    app->add_option("--space", space, "Construction lifting the n-norm: simple (step) or standard (t/(t+c))")
        ->check(CLI::IsMember({"simple", "standard"}))
        ->capture_default_str();
    app->add_option("--dim", dim, "Dimension d of R^d")->check(CLI::PositiveNumber)->capture_default_str();
    app->add_option("--order", order, "Order n of the n-norm (2 <= n <= d)")->capture_default_str();
    app->add_option("--tnorm", tnorm, "t-norm of the triangle function")
        ->check(CLI::IsMember({"min", "prod", "luk", "drastic"}))
        ->capture_default_str();
    app->add_option("--grid", grid, "Lattice cells of the grid convolution")->check(CLI::Range(2, 1 << 20))
        ->capture_default_str();
    app->add_option("--ratio-resolution", ratio_resolution, "Level grid of the standard construction")
        ->check(CLI::Range(2, 1 << 20))
        ->capture_default_str();
    app->add_option("--dep-tol", dep_tol, "Relative Gram threshold below which a tuple counts as dependent")
        ->capture_default_str();
    app->add_option("--basis", basis, "JSON file with the basis vectors (default: standard basis)");
  }

  PnnSpace make() const {
    return PnnSpace{NNormSpace(dim, order, dep_tol), construction_from_name(space),
                    TriangleOp{TNorm::from_name(tnorm), TriangleMode::sup_tnorm, grid}, ratio_resolution};
  }

  BasisFrame frame() const {
    if (basis.empty()) return BasisFrame::standard(dim);
    return BasisFrame::from_vectors(parse_vectors(read_json(basis), basis));
  }

  json to_json() const {
    return {{"space", space}, {"dim", dim},  {"order", order},     {"tnorm", tnorm}, {"grid", grid},
            {"ratio_resolution", ratio_resolution}, {"dep_tol", dep_tol}, {"basis", basis.empty() ? json() : json(basis)}};
  }
};

std::string report_csv(const AxiomReport& r) {
  std::ostringstream os;
  os << "suite,axiom,passed,checks,worst_margin\n";
  for (const AxiomResult& a : r.axioms)
    os << r.suite << ',' << a.axiom << ',' << (a.passed ? "true" : "false") << ',' << a.checks << ','
       << fixed12(a.worst_margin) << '\n';
  return os.str();
}

std::string trace_csv(const ConvergenceVerdict& v, bool pairs) {
  std::ostringstream os;
  os << (pairs ? "m,r,sibley_distance\n" : "m,sibley_distance\n");
  for (const TracePoint& p : v.trace) {
    os << p.m << ',';
    if (pairs) os << p.r << ',';
    os << fixed12(p.distance) << '\n';
  }
  return os.str();
}

// --------------------------------------------------------------- commands

int cmd_sibley(const std::string& left, const std::string& right, double tol, const Output& o, std::ostream& out) {
  const DistFn f = load_df(left);
  const DistFn g = load_df(right);
  const double d = sibley::distance(f, g, sibley::Params{tol});
  if (o.format == "json") {
    o.emit(out, dump_fixed(json{{"distance", d}, {"tol", tol}}) + "\n");
  } else if (o.format == "csv") {
    o.emit(out, "distance\n" + fixed12(d) + "\n");
  } else {
    o.emit(out, fixed12(d) + "\n");
  }
  return kOk;
}

int cmd_tau(const std::string& left, const std::string& right, const std::string& tnorm, const std::string& mode,
            int grid, bool force_grid, const Output& o, std::ostream& out) {
  const DistFn f = load_df(left);
  const DistFn g = load_df(right);
  const TriangleOp op{TNorm::from_name(tnorm), mode == "inf" ? TriangleMode::inf_tconorm : TriangleMode::sup_tnorm,
                      grid, force_grid};
  const DistFn h = op(f, g);
  if (o.format == "csv") {
    std::ostringstream os;
    os << "x,value,right_limit\n";
    for (const Knot& k : h.knots()) os << fixed12(k.x) << ',' << fixed12(k.at) << ',' << fixed12(k.after) << '\n';
    o.emit(out, os.str());
  } else {
    json j = distfn_to_json(h);
    j["operation"] = op.name();
    j["error_envelope"] = op.error_envelope(f, g);
    o.emit(out, dump_fixed(j) + "\n");
  }
  return kOk;
}

int cmd_nnorm(const std::string& vectors, double dep_tol, const Output& o, std::ostream& out) {
  const std::vector<Vector> tuple = parse_vectors(read_json(vectors), vectors);
  if (tuple.empty()) throw ConfigError(vectors + ": no vectors");
  const int n = static_cast<int>(tuple.size());
  const int d = static_cast<int>(tuple.front().size());
  const NNormSpace space(d, n, dep_tol);
  const GramResult g = gram(space, tuple);
  const double value = gram_nnorm(space, tuple);
  if (o.format == "json") {
    o.emit(out, dump_fixed(json{{"nnorm", value}, {"gram_det", g.det}, {"dependent", g.dependent}, {"dim", d},
                                {"order", n}}) +
                    "\n");
  } else if (o.format == "csv") {
    o.emit(out, "nnorm,dependent\n" + fixed12(value) + "," + (g.dependent ? "true" : "false") + "\n");
  } else {
    o.emit(out, fixed12(value) + "\n");
  }
  return kOk;
}

TNorm noncommutative_tnorm() {
  // unit law holds, commutativity does not
  return TNorm::custom("noncommutative", [](double a, double b) {
    if (a == 1.0) return b;
    if (b == 1.0) return a;
    return a * a * b;
  });
}

int cmd_axioms(const SpaceOptions& so, const std::string& suite, int trials, std::optional<std::uint64_t> seed_opt,
               std::optional<double> tol_opt, const Output& o, std::ostream& out, std::ostream& err) {
  const std::uint64_t seed = effective_seed(seed_opt, err);
  const PnnSpace space = so.make();
  const double tol = tol_opt.value_or(space.construction == Construction::standard ? 1e-6 : 1e-9);
  AxiomReport report;
  if (suite == "pnn") {
    report = pnn_axiom_suite(space, trials, seed, tol);
  } else if (suite == "nnorm") {
    report = nnorm_axiom_suite(space.base, trials, seed, tol);
  } else if (suite == "tnorm") {
    report = tnorm_axiom_suite(space.tau.base, trials, seed);
  } else if (suite == "triangle") {
    report = triangle_axiom_suite(space.tau, trials, seed, tol);
  } else {
    report = derived_norm_suite(space, so.frame(), trials, seed, tol);
  }
  report.config["cli"] = so.to_json();
  report.config["cli"]["suite"] = suite;
  o.emit(out, o.format == "csv" ? report_csv(report) : dump_fixed(to_json(report)) + "\n");
  return report.all_passed() ? kOk : kCheckFailed;
}

SequenceSpec load_sequence(const std::string& path) {
  try {
    return sequence_from_json(read_json(path));
  } catch (const json::exception& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

int cmd_converge(const SpaceOptions& so, const std::string& seq_path, double eps, std::optional<int> horizon_opt,
                 std::optional<int> y_samples, std::optional<std::uint64_t> seed_opt, const std::string& trace,
                 const Output& o, std::ostream& out, std::ostream& err) {
  const PnnSpace space = so.make();
  const BasisFrame frame = so.frame();
  const SequenceSpec seq = load_sequence(seq_path);
  const int horizon = horizon_opt.value_or(seq.length);
  const ConvergenceVerdict v = check_convergence(space, frame, seq, eps, horizon);
  json report{{"config", so.to_json()}, {"sequence", to_json(seq)}, {"derived", to_json(v)}};
  bool agree = v.agree;
  if (y_samples) {
    const std::uint64_t seed = effective_seed(seed_opt, err);
    const ConvergenceVerdict c = check_convergence_componentwise(space, frame, seq, eps, horizon, *y_samples, seed);
    report["component"] = to_json(c);
    report["seed"] = seed;
    agree = agree && c.converges == v.converges;
  }
  report["converges"] = v.converges;
  report["forms_agree"] = agree;
  if (!trace.empty()) write_file(trace, trace_csv(v, false));
  o.emit(out, o.format == "csv" ? trace_csv(v, false) : dump_fixed(report) + "\n");
  return agree ? kOk : kCheckFailed;
}

int cmd_cauchy(const SpaceOptions& so, const std::string& seq_path, double eps, std::optional<int> horizon_opt,
               int stride, int y_samples, std::optional<std::uint64_t> seed_opt, const std::string& trace,
               const Output& o, std::ostream& out, std::ostream& err) {
  const PnnSpace space = so.make();
  const BasisFrame frame = so.frame();
  const SequenceSpec seq = load_sequence(seq_path);
  const std::uint64_t seed = effective_seed(seed_opt, err);
  const int horizon = horizon_opt.value_or(seq.length);
  const ConvergenceVerdict v = check_cauchy(space, frame, seq, eps, horizon, stride, y_samples, seed);
  const json report{{"config", so.to_json()}, {"sequence", to_json(seq)}, {"seed", seed},
                    {"cauchy", v.converges},  {"forms_agree", v.agree},   {"verdict", to_json(v)}};
  if (!trace.empty()) write_file(trace, trace_csv(v, true));
  o.emit(out, o.format == "csv" ? trace_csv(v, true) : dump_fixed(report) + "\n");
  return v.agree ? kOk : kCheckFailed;
}

int cmd_ball(const SpaceOptions& so, const std::string& center, double radius, const std::string& point,
             const Output& o, std::ostream& out) {
  const bool inside = ball_contains(so.make(), so.frame(), parse_vector(center), radius, parse_vector(point));
  if (o.format == "json") {
    o.emit(out, dump_fixed(json{{"contains", inside}, {"radius", radius}}) + "\n");
  } else if (o.format == "csv") {
    o.emit(out, std::string("contains\n") + (inside ? "true" : "false") + "\n");
  } else {
    o.emit(out, std::string(inside ? "true" : "false") + "\n");
  }
  return kOk;
}

int cmd_suite(std::optional<std::uint64_t> seed_opt, double scale, int grid, bool inject, const Output& o,
              std::ostream& out, std::ostream& err) {
  suite::Config cfg;
  cfg.seed = effective_seed(seed_opt, err);
  cfg.scale = scale;
  cfg.grid_resolution = grid;
  if (inject) cfg.injected_tnorm = noncommutative_tnorm();
  const suite::Result r = suite::run_all(cfg);
  if (o.format == "csv") {
    std::ostringstream os;
    os << "id,criterion,passed,checks,worst_margin\n";
    for (const auto& c : r.criteria)
      os << c.id << ',' << c.name << ',' << (c.passed ? "true" : "false") << ',' << c.checks << ','
         << fixed12(c.worst_margin) << '\n';
    o.emit(out, os.str());
  } else {
    o.emit(out, dump_fixed(suite::to_json(r)) + "\n");
    for (const auto& c : r.criteria)
      err << (c.passed ? "PASS " : "FAIL ") << c.id << ". " << c.name << " (worst margin " << fixed12(c.worst_margin)
          << ")\n";
  }
  return r.all_passed() ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Probabilistic n-normed spaces: distribution functions, triangle functions, n-norms and checks"};
  app.name("pnspace");
  app.require_subcommand(1);
  app.footer("Environment: PNSPACE_OUT_DIR is the base directory for relative --out/--trace paths.\n"
             "Exit status: 0 all checks pass, 1 a check failed, 2 configuration or input error.");

  Output o_sibley, o_tau, o_nnorm, o_axioms, o_converge, o_cauchy, o_ball, o_suite;
  SpaceOptions s_axioms, s_converge, s_cauchy, s_ball;

  // sibley
  std::string sib_left, sib_right;
  double sib_tol = 1e-9;
  auto* sib = app.add_subcommand("sibley", "Sibley distance between two d.f.'s");
  sib->add_option("--left", sib_left, "First d.f. (JSON)")->required()->check(CLI::ExistingFile);
  sib->add_option("--right", sib_right, "Second d.f. (JSON)")->required()->check(CLI::ExistingFile);
  sib->add_option("--tol", sib_tol, "Bisection tolerance on h")->check(CLI::PositiveNumber)->capture_default_str();
  o_sibley.add(sib);

  // tau
  std::string tau_left, tau_right, tau_tnorm = "min", tau_mode = "sup";
  int tau_grid = 4096;
  bool tau_force = false;
  auto* tau = app.add_subcommand("tau", "Triangle function of two d.f.'s in Delta+");
  tau->add_option("--left", tau_left, "First d.f. (JSON)")->required()->check(CLI::ExistingFile);
  tau->add_option("--right", tau_right, "Second d.f. (JSON)")->required()->check(CLI::ExistingFile);
  tau->add_option("--tnorm", tau_tnorm, "t-norm")->check(CLI::IsMember({"min", "prod", "luk", "drastic"}))
      ->capture_default_str();
  tau->add_option("--mode", tau_mode, "sup (tau_T) or inf (tau_T*)")->check(CLI::IsMember({"sup", "inf"}))
      ->capture_default_str();
  tau->add_option("--grid", tau_grid, "Lattice cells of the grid convolution")->check(CLI::Range(2, 1 << 20))
      ->capture_default_str();
  tau->add_flag("--force-grid", tau_force, "Use the grid even where the exact path applies");
  o_tau.add(tau);

  // nnorm
  std::string nn_vectors;
  double nn_dep_tol = 1e-10;
  auto* nn = app.add_subcommand("nnorm", "Gram n-norm of a tuple of vectors");
  nn->add_option("--vectors", nn_vectors, "JSON file: array of n arrays of d numbers")->required()
      ->check(CLI::ExistingFile);
  nn->add_option("--dep-tol", nn_dep_tol, "Relative dependence threshold")->capture_default_str();
  o_nnorm.add(nn);

  // axioms
  std::string ax_suite = "pnn";
  int ax_trials = 500;
  std::optional<std::uint64_t> ax_seed;
  std::optional<double> ax_tol;
  auto* ax = app.add_subcommand("axioms", "Randomized axiom suite");
  s_axioms.add(ax);
  ax->add_option("--suite", ax_suite, "Which axioms: pnn, nnorm, tnorm, triangle or derived")
      ->check(CLI::IsMember({"pnn", "nnorm", "tnorm", "triangle", "derived"}))
      ->capture_default_str();
  ax->add_option("--trials", ax_trials, "Random trials")->check(CLI::PositiveNumber)->capture_default_str();
  ax->add_option("--seed", ax_seed, "Run seed (generated and echoed when absent)");
  ax->add_option("--tol", ax_tol, "Tolerance (default 1e-9, or 1e-6 for the standard space)")
      ->check(CLI::PositiveNumber);
  o_axioms.add(ax);

  // converge
  std::string cv_seq, cv_trace;
  double cv_eps = 0.05;
  std::optional<int> cv_horizon, cv_y;
  std::optional<std::uint64_t> cv_seed;
  auto* cv = app.add_subcommand("converge", "Convergence of a sequence to its limit (derived, ball, component forms)");
  s_converge.add(cv);
  cv->add_option("--seq", cv_seq, "Sequence definition (JSON)")->required()->check(CLI::ExistingFile);
  cv->add_option("--eps", cv_eps, "Threshold eps in (0,1)")->capture_default_str();
  cv->add_option("--horizon", cv_horizon, "Last index examined (default: sequence length)");
  cv->add_option("--y-samples", cv_y, "Also run the component form with this many y draws");
  cv->add_option("--seed", cv_seed, "Seed for the y draws");
  cv->add_option("--trace", cv_trace, "Write the CSV trace to this file");
  o_converge.add(cv);

  // cauchy
  std::string ca_seq, ca_trace;
  double ca_eps = 0.05;
  std::optional<int> ca_horizon;
  int ca_stride = 5, ca_y = 4;
  std::optional<std::uint64_t> ca_seed;
  auto* ca = app.add_subcommand("cauchy", "Cauchy check on tail pairs (derived and n-norm forms)");
  s_cauchy.add(ca);
  ca->add_option("--seq", ca_seq, "Sequence definition (JSON)")->required()->check(CLI::ExistingFile);
  ca->add_option("--eps", ca_eps, "Threshold eps in (0,1)")->capture_default_str();
  ca->add_option("--horizon", ca_horizon, "Last index examined (default: sequence length)");
  ca->add_option("--pair-stride", ca_stride, "Stride of the tail-pair lattice")->capture_default_str();
  ca->add_option("--y-samples", ca_y, "Draws of y_2..y_n for the n-norm form")->capture_default_str();
  ca->add_option("--seed", ca_seed, "Seed for the y draws (generated and echoed when absent)");
  ca->add_option("--trace", ca_trace, "Write the CSV trace to this file");
  o_cauchy.add(ca);

  // ball
  std::string b_center, b_point;
  double b_radius = 0.0;
  auto* ball = app.add_subcommand("ball", "Membership of a point in the open ball B(center, radius)");
  s_ball.add(ball);
  ball->add_option("--center", b_center, "Center, e.g. 1,0,0")->required();
  ball->add_option("--radius", b_radius, "Radius t > 0")->required();
  ball->add_option("--point", b_point, "Point, e.g. 0.5,0,0")->required();
  o_ball.add(ball);

  // suite
  std::optional<std::uint64_t> su_seed;
  double su_scale = 1.0;
  int su_grid = 4096;
  bool su_inject = false;
  auto* su = app.add_subcommand("suite", "Full acceptance battery (criteria 1-11)");
  su->add_option("--seed", su_seed, "Run seed (generated and echoed when absent)");
  su->add_option("--scale", su_scale, "Multiplier on every trial count")->check(CLI::PositiveNumber)
      ->capture_default_str();
  su->add_option("--grid", su_grid, "Lattice cells of the grid convolution")->check(CLI::Range(2, 1 << 20))
      ->capture_default_str();
  su->add_flag("--inject-noncommutative-tnorm", su_inject, "Add a non-commutative t-norm to the t-norm criterion");
  o_suite.add(su);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    if (sib->parsed()) return cmd_sibley(sib_left, sib_right, sib_tol, o_sibley, out);
    if (tau->parsed()) return cmd_tau(tau_left, tau_right, tau_tnorm, tau_mode, tau_grid, tau_force, o_tau, out);
    if (nn->parsed()) return cmd_nnorm(nn_vectors, nn_dep_tol, o_nnorm, out);
    if (ax->parsed()) return cmd_axioms(s_axioms, ax_suite, ax_trials, ax_seed, ax_tol, o_axioms, out, err);
    if (cv->parsed())
      return cmd_converge(s_converge, cv_seq, cv_eps, cv_horizon, cv_y, cv_seed, cv_trace, o_converge, out, err);
    if (ca->parsed())
      return cmd_cauchy(s_cauchy, ca_seq, ca_eps, ca_horizon, ca_stride, ca_y, ca_seed, ca_trace, o_cauchy, out, err);
    if (ball->parsed()) return cmd_ball(s_ball, b_center, b_radius, b_point, o_ball, out);
    if (su->parsed()) return cmd_suite(su_seed, su_scale, su_grid, su_inject, o_suite, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  }
  return kConfigError;
}

}  // namespace pnspace::cli
