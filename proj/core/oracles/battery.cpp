#include "battery.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "oracles.hpp"
#include "pnspace/distfn.hpp"
#include "pnspace/nnorm.hpp"
#include "pnspace/pnn.hpp"
#include "pnspace/random.hpp"
#include "pnspace/report.hpp"
#include "pnspace/rng.hpp"
#include "pnspace/sibley.hpp"
#include "pnspace/topology.hpp"
#include "pnspace/triangle.hpp"

namespace pnspace::suite {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Acceptance sizes and tolerances.
constexpr int kSibleyTrials = 1000;
constexpr double kSibleyIdentityTol = 1e-9;
constexpr double kSibleyTriangleTol = 2e-9;
constexpr double kClosedFormTol = 1e-9;
constexpr int kOracleHResolution = 10000;
constexpr int kTNormTrials = 1000;
constexpr int kUnitLawTrials = 200;
constexpr double kExactTol = 1e-9;
constexpr int kConvolutionPairs = 100;
constexpr int kNNormTrials = 1000;
constexpr double kNNormTol = 1e-9;
constexpr int kPnnTrials = 500;
constexpr double kPnnStandardTol = 1e-6;
constexpr int kPn5GridPoints = 100;
constexpr int kDerivedTrials = 500;
constexpr int kSequences = 100;
constexpr int kHorizon = 200;
constexpr double kEps = 0.05;
constexpr int kYSamples = 4;
constexpr int kPairStride = 5;
constexpr int kDim = 4;
constexpr int kOrder = 3;

struct Tracker {
  Criterion c;

  Tracker(int id, std::string name) {
    c.id = id;
    c.name = std::move(name);
    c.worst_margin = kInf;
  }

  void add(bool ok, double slack) {
    ++c.checks;
    c.passed = c.passed && ok;
    c.worst_margin = std::min(c.worst_margin, slack);
  }

  void absorb(const AxiomReport& r, const std::string& key, bool gate = true) {
    for (const AxiomResult& a : r.axioms) {
      c.checks += a.checks;
      if (gate) {
        c.passed = c.passed && a.passed;
        c.worst_margin = std::min(c.worst_margin, a.worst_margin);
      }
    }
    c.details[key] = to_json(r);
  }

  void fail_with(nlohmann::json witness) {
    if (!c.details.contains("first_failure")) c.details["first_failure"] = std::move(witness);
  }

  Criterion done() {
    if (c.checks == 0) c.worst_margin = 0.0;
    return std::move(c);
  }
};

int scaled(int n, double scale) { return std::max(1, static_cast<int>(std::llround(n * scale))); }

std::uint64_t stream(const Config& cfg, int id) { return mix_seed(cfg.seed, static_cast<std::uint64_t>(1000 + id)); }

// 1. Sibley metric axioms on random step d.f.'s.
Criterion sibley_axioms(const Config& cfg) {
  Tracker t(1, "Sibley metric axioms");
  const int trials = scaled(kSibleyTrials, cfg.scale);
  for (int i = 0; i < trials; ++i) {
    Rng rng(mix_seed(stream(cfg, 1), static_cast<std::uint64_t>(i)));
    const DistFn f = random_step_df(rng, 1.5);
    const DistFn g = random_step_df(rng, 1.5);
    const DistFn k = random_step_df(rng, 1.5);
    const double dff = sibley::distance(f, f);
    const double dfg = sibley::distance(f, g);
    const double dgf = sibley::distance(g, f);
    const double dgk = sibley::distance(g, k);
    const double dfk = sibley::distance(f, k);
    const bool ok_id = dff <= kSibleyIdentityTol;
    const bool ok_sym = dfg == dgf;
    const double tri = dfg + dgk + kSibleyTriangleTol - dfk;
    t.add(ok_id, kSibleyIdentityTol - dff);
    t.add(ok_sym, 0.0);
    t.add(tri >= 0.0, tri);
    if (!(ok_id && ok_sym && tri >= 0.0))
      t.fail_with({{"trial", i}, {"d_ff", dff}, {"d_fg", dfg}, {"d_gf", dgf}, {"d_gk", dgk}, {"d_fk", dfk}});
  }
  t.c.details["trials"] = trials;
  return t.done();
}

// 2. d_s(H0, step_at(a)) = min(a, 1): grid oracle first, then the bisection.
Criterion closed_form(const Config&) {
  Tracker t(2, "Closed-form Sibley cross-check");
  const auto h0 = [](double x) { return x <= 0.0 ? 0.0 : 1.0; };
  const double grid_tol = 1.0 / kOracleHResolution;
  nlohmann::json rows = nlohmann::json::array();
  for (double a : {0.01, 0.1, 0.5, 0.9, 1.5, 10.0}) {
    const auto step = [a](double x) { return x <= a ? 0.0 : 1.0; };
    const double expected = std::min(a, 1.0);
    const double oracle = oracle::sibley_grid(h0, step, {0.0, a}, -1.0, a + 2.0, kOracleHResolution, 2000);
    const bool oracle_ok = std::fabs(oracle - expected) <= grid_tol;
    t.add(oracle_ok, grid_tol - std::fabs(oracle - expected));
    const double d = sibley::distance(unit_step(), step_at(a));
    const double err = std::fabs(d - expected);
    // the bisection result is only trusted once the oracle agrees with the law
    t.add(oracle_ok && err <= kClosedFormTol, kClosedFormTol - err);
    rows.push_back({{"a", a}, {"expected", expected}, {"oracle", oracle}, {"distance", d}});
  }
  t.c.details["rows"] = std::move(rows);
  return t.done();
}

// 3. t-norm axioms.
Criterion tnorm_axioms(const Config& cfg) {
  Tracker t(3, "t-norm axioms");
  std::vector<TNorm> norms{TNorm::minimum(), TNorm::product(), TNorm::lukasiewicz(), TNorm::drastic()};
  if (cfg.injected_tnorm) norms.push_back(*cfg.injected_tnorm);
  const int trials = scaled(kTNormTrials, cfg.scale);
  for (const TNorm& n : norms) t.absorb(tnorm_axiom_suite(n, trials, stream(cfg, 3)), n.name());
  return t.done();
}

// 4. Unit law tau(F, H0) = F on the exact path and on the grid for each t-norm.
Criterion unit_law(const Config& cfg) {
  Tracker t(4, "Triangle-function unit law");
  const double grid_tol = 2.0 / cfg.grid_resolution;
  std::vector<TriangleOp> ops;
  ops.push_back(TriangleOp{});
  for (const TNorm& n : {TNorm::minimum(), TNorm::product(), TNorm::lukasiewicz(), TNorm::drastic()})
    ops.push_back(TriangleOp{n, TriangleMode::sup_tnorm, cfg.grid_resolution, true});
  const DistFn h0 = unit_step();
  const int trials = scaled(kUnitLawTrials, cfg.scale);
  nlohmann::json worst = nlohmann::json::object();
  for (const TriangleOp& op : ops) {
    const double tol = op.has_exact_path() ? kExactTol : grid_tol;
    double op_worst = 0.0;
    for (int i = 0; i < trials; ++i) {
      Rng rng(mix_seed(stream(cfg, 4), static_cast<std::uint64_t>(i)));
      const DistFn f = random_delta_plus(rng, 1.0);
      const double d = sibley::distance(op(f, h0), f);
      op_worst = std::max(op_worst, d);
      t.add(d <= tol, tol - d);
      if (d > tol) t.fail_with({{"op", op.name()}, {"trial", i}, {"distance", d}});
    }
    worst[op.name()] = op_worst;
  }
  t.c.details["worst_distance"] = std::move(worst);
  t.c.details["trials"] = trials;
  return t.done();
}

// 5. Exact tau_M against the grid, and associativity of tau_M.
Criterion convolution_equivalence(const Config& cfg) {
  Tracker t(5, "Convolution oracle equivalence");
  const double grid_tol = 2.0 / cfg.grid_resolution;
  const TriangleOp grid_min{TNorm::minimum(), TriangleMode::sup_tnorm, cfg.grid_resolution, true};
  const int trials = scaled(kConvolutionPairs, cfg.scale);
  double worst_eq = 0.0;
  double worst_assoc = 0.0;
  for (int i = 0; i < trials; ++i) {
    Rng rng(mix_seed(stream(cfg, 5), static_cast<std::uint64_t>(i)));
    const DistFn f = random_delta_plus(rng, 1.0);
    const DistFn g = random_delta_plus(rng, 1.0);
    const DistFn k = random_delta_plus(rng, 1.0);
    const double d = sibley::distance(tau_min_exact(f, g), tau_grid(grid_min, f, g));
    worst_eq = std::max(worst_eq, d);
    t.add(d <= grid_tol, grid_tol - d);
    const double da = sibley::distance(tau_min_exact(tau_min_exact(f, g), k), tau_min_exact(f, tau_min_exact(g, k)));
    worst_assoc = std::max(worst_assoc, da);
    t.add(da <= kExactTol, kExactTol - da);
    if (d > grid_tol || da > kExactTol) t.fail_with({{"trial", i}, {"exact_vs_grid", d}, {"associativity", da}});
  }
  t.c.details["worst_exact_vs_grid"] = worst_eq;
  t.c.details["worst_associativity"] = worst_assoc;
  t.c.details["trials"] = trials;
  return t.done();
}

// 6. Gram n-norm axioms, and |det| for n = d.
Criterion nnorm_axioms(const Config& cfg) {
  Tracker t(6, "n-norm axioms");
  const int trials = scaled(kNNormTrials, cfg.scale);
  for (int n = 2; n <= kDim; ++n)
    t.absorb(nnorm_axiom_suite(NNormSpace(kDim, n), trials, stream(cfg, 6) + static_cast<std::uint64_t>(n), kNNormTol),
             "n=" + std::to_string(n));
  const NNormSpace full(kDim, kDim);
  double worst = 0.0;
  for (int i = 0; i < trials; ++i) {
    Rng rng(mix_seed(stream(cfg, 6), static_cast<std::uint64_t>(i)));
    std::vector<Vector> rows;
    for (int r = 0; r < kDim; ++r) rows.push_back(random_vector(rng, kDim));
    const double det = std::fabs(oracle::det_laplace(rows));
    const double err = std::fabs(gram_nnorm(full, rows) - det) / std::max(1.0, det);
    worst = std::max(worst, err);
    t.add(err <= kNNormTol, kNNormTol - err);
    if (err > kNNormTol) t.fail_with({{"trial", i}, {"rows", rows}, {"det", det}});
  }
  t.c.details["worst_det_error"] = worst;
  return t.done();
}

// 7. Probabilistic n-norm axioms for both constructions.
Criterion pnn_axioms(const Config& cfg) {
  Tracker t(7, "Probabilistic n-norm axioms");
  const double scalar_worst = oracle::pn5_scalar_worst(kPn5GridPoints);
  t.add(scalar_worst >= -1e-15, scalar_worst);
  t.c.details["pn5_scalar_grid_worst"] = scalar_worst;
  const int trials = scaled(kPnnTrials, cfg.scale);
  const PnnSpace simple{NNormSpace(kDim, kOrder), Construction::simple};
  const PnnSpace standard{NNormSpace(kDim, kOrder), Construction::standard};
  t.absorb(pnn_axiom_suite(simple, trials, stream(cfg, 7), kExactTol), "simple");
  t.absorb(pnn_axiom_suite(standard, trials, stream(cfg, 7) + 1, kPnnStandardTol), "standard");
  return t.done();
}

// 8. Derived norm properties, PN1-PN3 and the Serstnev identity.
Criterion derived_norm(const Config& cfg) {
  Tracker t(8, "Derived-norm properties");
  const int trials = scaled(kDerivedTrials, cfg.scale);
  const PnnSpace space{NNormSpace(kDim, kOrder), Construction::simple};
  Rng frame_rng(stream(cfg, 8));
  const BasisFrame frame = BasisFrame::random(kDim, frame_rng);
  t.absorb(derived_norm_suite(space, frame, trials, stream(cfg, 8) + 1, kExactTol), "properties");
  const ProbNorm nu = [&](const Vector& p) { return pnspace::derived_norm(space, frame, p); };
  const TriangleOp tau{};
  const TriangleOp tau_star{TNorm::minimum(), TriangleMode::inf_tconorm, cfg.grid_resolution};
  const AxiomReport pn = pn_axiom_suite(nu, kDim, tau, tau_star, trials, stream(cfg, 8) + 2, kExactTol);
  for (const AxiomResult& a : pn.axioms) {
    if (a.axiom == "PN4") continue;  // reported, not part of the criterion
    t.c.checks += a.checks;
    t.c.passed = t.c.passed && a.passed;
    t.c.worst_margin = std::min(t.c.worst_margin, a.worst_margin);
  }
  t.c.details["pn_axioms"] = to_json(pn);
  t.absorb(serstnev_check(nu, kDim, trials, stream(cfg, 8) + 3, kExactTol), "serstnev");
  return t.done();
}

struct Battery {
  PnnSpace space{NNormSpace(kDim, kOrder), Construction::simple};
  std::vector<SequenceSpec> sequences;
};

// 9. Component, F-infinity and ball forms agree; convergent implies Cauchy.
Criterion lemma_equivalence(const Config& cfg, const Battery& b) {
  Tracker t(9, "Lemma equivalence battery");
  const BasisFrame frame = BasisFrame::standard(kDim);
  int convergent = 0;
  for (std::size_t i = 0; i < b.sequences.size(); ++i) {
    const SequenceSpec& s = b.sequences[i];
    const std::uint64_t seed = mix_seed(stream(cfg, 9), i);
    const auto v = check_convergence(b.space, frame, s, kEps, kHorizon);
    const auto c = check_convergence_componentwise(b.space, frame, s, kEps, kHorizon, kYSamples, seed);
    const auto k = check_cauchy(b.space, frame, s, kEps, kHorizon, kPairStride, kYSamples, seed);
    const bool agree = v.converges == v.companion && v.converges == c.converges;
    const bool implication = !v.converges || k.converges;
    convergent += v.converges ? 1 : 0;
    t.add(agree, 0.0);
    t.add(implication, 0.0);
    if (!(agree && implication))
      t.fail_with({{"sequence", i}, {"definition", to_json(s)}, {"derived", v.converges}, {"ball", v.companion},
                   {"component", c.converges}, {"cauchy", k.converges}});
  }
  t.c.details["sequences"] = b.sequences.size();
  t.c.details["convergent"] = convergent;
  return t.done();
}

// 10. n-norm-form and derived-form Cauchy verdicts agree.
Criterion banach_equivalence(const Config& cfg, const Battery& b) {
  Tracker t(10, "Banach-equivalence battery");
  const BasisFrame frame = BasisFrame::standard(kDim);
  int cauchy = 0;
  for (std::size_t i = 0; i < b.sequences.size(); ++i) {
    const SequenceSpec& s = b.sequences[i];
    const auto k = check_cauchy(b.space, frame, s, kEps, kHorizon, kPairStride, kYSamples, mix_seed(stream(cfg, 10), i));
    const bool by_construction = s.kind == SequenceKind::geometric || s.kind == SequenceKind::affine_decay;
    cauchy += k.converges ? 1 : 0;
    t.add(k.agree, 0.0);
    t.add(k.converges == by_construction, 0.0);
    if (!k.agree || k.converges != by_construction)
      t.fail_with({{"sequence", i}, {"definition", to_json(s)}, {"derived", k.converges}, {"nnorm", k.companion},
                   {"expected", by_construction}});
  }
  t.c.details["sequences"] = b.sequences.size();
  t.c.details["cauchy"] = cauchy;
  return t.done();
}

// 11. Verdicts agree across two random bases.
Criterion basis_independence(const Config& cfg, const Battery& b) {
  Tracker t(11, "Basis independence");
  Rng rng(stream(cfg, 11));
  const BasisFrame a = BasisFrame::random(kDim, rng);
  const BasisFrame c = BasisFrame::random(kDim, rng);
  t.absorb(basis_equivalence_report(b.space, a, c, b.sequences, kEps, kHorizon), "report");
  return t.done();
}

}  // namespace

bool Result::all_passed() const {
  return std::all_of(criteria.begin(), criteria.end(), [](const Criterion& c) { return c.passed; });
}

Result run_all(const Config& cfg, const std::function<void(const Criterion&)>& progress) {
  if (!(cfg.scale > 0.0)) throw std::invalid_argument("suite scale must be > 0");
  if (cfg.grid_resolution < 2) throw std::invalid_argument("grid resolution must be >= 2");
  Result r;
  r.config = {{"seed", cfg.seed},
              {"scale", cfg.scale},
              {"grid_resolution", cfg.grid_resolution},
              {"injected_tnorm", cfg.injected_tnorm ? nlohmann::json(cfg.injected_tnorm->name()) : nlohmann::json()},
              {"eps", kEps},
              {"horizon", kHorizon},
              {"dim", kDim},
              {"order", kOrder}};
  auto push = [&](Criterion c) {
    if (progress) progress(c);
    r.criteria.push_back(std::move(c));
  };
  push(sibley_axioms(cfg));
  push(closed_form(cfg));
  push(tnorm_axioms(cfg));
  push(unit_law(cfg));
  push(convolution_equivalence(cfg));
  push(nnorm_axioms(cfg));
  push(pnn_axioms(cfg));
  push(derived_norm(cfg));
  Battery b;
  b.sequences = sequence_battery(kDim, std::max(4, scaled(kSequences, cfg.scale)), stream(cfg, 9), kHorizon);
  push(lemma_equivalence(cfg, b));
  push(banach_equivalence(cfg, b));
  push(basis_independence(cfg, b));
  return r;
}

nlohmann::json to_json(const Result& r) {
  nlohmann::json crit = nlohmann::json::array();
  for (const Criterion& c : r.criteria)
    crit.push_back({{"id", c.id},
                    {"name", c.name},
                    {"passed", c.passed},
                    {"checks", c.checks},
                    {"worst_margin", c.worst_margin},
                    {"details", c.details}});
  return {{"config", r.config}, {"all_passed", r.all_passed()}, {"criteria", std::move(crit)}};
}

}  // namespace pnspace::suite
