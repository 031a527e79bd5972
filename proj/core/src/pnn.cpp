#include "pnspace/pnn.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "pnspace/random.hpp"
#include "pnspace/rng.hpp"
#include "pnspace/sibley.hpp"
#include "compare.hpp"

namespace pnspace {

using detail::both_ratio;
using detail::discretization;
using detail::dominance_slack;
using detail::exact_gap;
using detail::unit_distance;

Construction construction_from_name(std::string_view name) {
  if (name == "simple") return Construction::simple;
  if (name == "standard") return Construction::standard;
  throw std::invalid_argument("unknown construction \"" + std::string(name) + "\" (expected simple|standard)");
}

const char* to_string(Construction c) { return c == Construction::simple ? "simple" : "standard"; }

DistFn lift(const PnnSpace& space, double c) {
  if (!(c >= 0.0)) throw std::invalid_argument("lift: n-norm value must be >= 0");
  return space.construction == Construction::simple ? step_at(c) : ratio_df(c, space.ratio_resolution);
}

DistFn pnn_eval(const PnnSpace& space, std::span<const Vector> tuple) {
  return lift(space, gram_nnorm(space.base, tuple));
}

namespace {

nlohmann::json vectors_json(std::span<const Vector> t) {
  nlohmann::json j = nlohmann::json::array();
  for (const Vector& v : t) j.push_back(v);
  return j;
}

}  // namespace

AxiomReport pnn_axiom_suite(const PnnSpace& space, int trials, std::uint64_t seed, double tol) {
  if (trials <= 0) throw std::invalid_argument("pnn_axiom_suite: trials must be > 0");
  AxiomReport report;
  report.suite = "pnn";
  report.trials = trials;
  report.seed = seed;
  report.tol = tol;
  report.config = {{"construction", to_string(space.construction)},
                   {"dim", space.base.dim()},
                   {"order", space.base.order()},
                   {"tau", space.tau.name()},
                   {"ratio_resolution", space.ratio_resolution}};

  AxiomResult& n1 = report.axiom("Pn-N1");
  AxiomResult& n2 = report.axiom("Pn-N2");
  AxiomResult& n3 = report.axiom("Pn-N3");
  AxiomResult& n4 = report.axiom("Pn-N4");
  AxiomResult& n5 = report.axiom("Pn-N5");
  AxiomResult& codomain = report.axiom("codomain D+");

  const int d = space.base.dim();
  const int n = space.base.order();
  const sibley::Params sp{std::min(tol, 1e-9)};

  for (int trial = 0; trial < trials; ++trial) {
    const std::uint64_t s = mix_seed(seed, static_cast<std::uint64_t>(trial));
    Rng rng(s);
    std::vector<Vector> t;
    for (int i = 0; i < n; ++i) t.push_back(random_vector(rng, d));
    auto witness = [&](const char* what, std::span<const Vector> tuple, double value) {
      return nlohmann::json{{"trial", trial}, {"seed", s}, {"check", what}, {"tuple", vectors_json(tuple)}, {"value", value}};
    };

    const DistFn f = pnn_eval(space, t);
    codomain.check(classify(f) == DfClass::DPlus, 0.0, [&] { return witness("F in D+", t, 0.0); });

    // Pn-N2: independent tuple stays away from H0
    const double d_indep = unit_distance(f, sp);
    n2.check(d_indep > tol, d_indep - tol, [&] { return witness("d(F, H0) > tol", t, d_indep); });

    // Pn-N1: make the tuple dependent
    std::vector<Vector> dt = t;
    const auto slot = static_cast<std::size_t>(rng.integer(0, n - 1));
    const auto other = (slot + 1 + static_cast<std::size_t>(rng.integer(0, n - 2))) % static_cast<std::size_t>(n);
    dt[slot] = rng.integer(0, 3) == 0 ? Vector(static_cast<std::size_t>(d), 0.0) : scaled(t[other], rng.uniform(-2.0, 2.0));
    const DistFn fd = pnn_eval(space, dt);
    const double d_dep = unit_distance(fd, sp);
    n1.check(d_dep <= tol, tol - d_dep, [&] { return witness("d(F, H0) <= tol", dt, d_dep); });

    // Pn-N3
    std::vector<Vector> pt = t;
    for (int i = n - 1; i > 0; --i) std::swap(pt[static_cast<std::size_t>(i)], pt[static_cast<std::size_t>(rng.integer(0, i))]);
    const DistFn fp = pnn_eval(space, pt);
    n3.check(fp == f, 0.0, [&] { return witness("F permuted == F", pt, 0.0); });

    // Pn-N4
    double alpha = rng.uniform(-3.0, 3.0);
    if (std::fabs(alpha) < 0.05) alpha = alpha < 0.0 ? -0.05 : 0.05;
    std::vector<Vector> at = t;
    at[0] = scaled(t[0], alpha);
    const DistFn fa = pnn_eval(space, at);
    const DistFn fs = scale_arg(f, alpha);
    const double gap4 = both_ratio(fa, fs) ? exact_gap(fa, fs) : sibley::distance(fa, fs, sp);
    n4.check(gap4 <= tol, tol - gap4, [&] {
      auto w = witness("F_{a x1,...}(t) = F_{x1,...}(t/|a|)", at, gap4);
      w["alpha"] = alpha;
      return w;
    });

    // Pn-N5
    const Vector y = random_vector(rng, d);
    std::vector<Vector> yt = t, st = t;
    yt[0] = y;
    st[0] = add(t[0], y);
    const DistFn fy = pnn_eval(space, yt);
    const DistFn fsum = pnn_eval(space, st);
    const DistFn bound = space.tau(f, fy);
    const double margin = tol + space.tau.error_envelope(f, fy) + discretization(f);
    const double slack5 = dominance_slack(bound, fsum, tol, margin);
    n5.check(slack5 >= 0.0, slack5, [&] { return witness("F_{x+y,...} >= tau(F_x, F_y)", st, slack5); });
  }
  return report;
}

AxiomReport pn_axiom_suite(const ProbNorm& nu, int dim, const TriangleOp& tau, const TriangleOp& tau_star,
                           int trials, std::uint64_t seed, double tol) {
  if (trials <= 0) throw std::invalid_argument("pn_axiom_suite: trials must be > 0");
  AxiomReport report;
  report.suite = "pn";
  report.trials = trials;
  report.seed = seed;
  report.tol = tol;
  report.config = {{"dim", dim}, {"tau", tau.name()}, {"tau_star", tau_star.name()}};

  AxiomResult& pn1 = report.axiom("PN1");
  AxiomResult& pn2 = report.axiom("PN2");
  AxiomResult& pn3 = report.axiom("PN3");
  AxiomResult& pn4 = report.axiom("PN4");

  const sibley::Params sp{std::min(tol, 1e-9)};
  static constexpr double kAlphaGrid[] = {0.0, 0.125, 0.25, 0.375, 0.5, 0.625, 0.75, 0.875, 1.0};
  const Vector zero(static_cast<std::size_t>(dim), 0.0);

  for (int trial = 0; trial < trials; ++trial) {
    const std::uint64_t s = mix_seed(seed, static_cast<std::uint64_t>(trial));
    Rng rng(s);
    const Vector p = random_vector(rng, dim);
    const Vector q = random_vector(rng, dim);
    auto witness = [&](const char* what, double value) {
      return nlohmann::json{{"trial", trial}, {"seed", s}, {"check", what}, {"p", p}, {"q", q}, {"value", value}};
    };

    const DistFn np = nu(p);
    if (trial == 0) {
      const double d0 = unit_distance(nu(zero), sp);
      pn1.check(d0 <= tol, tol - d0, [&] { return witness("nu_theta = H0", d0); });
    }
    const double dp = unit_distance(np, sp);
    pn1.check(dp > tol, dp - tol, [&] { return witness("nu_p != H0 for p != theta", dp); });

    const DistFn nm = nu(scaled(p, -1.0));
    const double d2 = nm == np ? 0.0 : (both_ratio(nm, np) ? exact_gap(nm, np) : sibley::distance(nm, np, sp));
    pn2.check(d2 <= tol, tol - d2, [&] { return witness("nu_{-p} = nu_p", d2); });

    const DistFn nq = nu(q);
    const DistFn npq = nu(add(p, q));
    const DistFn bound = tau(np, nq);
    const double m3 = tol + tau.error_envelope(np, nq) + discretization(np);
    const double slack3 = dominance_slack(bound, npq, tol, m3);
    pn3.check(slack3 >= 0.0, slack3, [&] { return witness("nu_{p+q} >= tau(nu_p, nu_q)", slack3); });

    const double alpha = kAlphaGrid[static_cast<std::size_t>(trial) % std::size(kAlphaGrid)];
    const DistFn na = nu(scaled(p, alpha));
    const DistFn nb = nu(scaled(p, 1.0 - alpha));
    const DistFn upper = tau_star(na, nb);
    const double m4 = tol + tau_star.error_envelope(na, nb) + discretization(np);
    const bool ok4 = leq_within(np, upper, m4);
    pn4.check(ok4, ok4 ? m4 : -1.0, [&] {
      auto w = witness("nu_p <= tau*(nu_{a p}, nu_{(1-a) p})", alpha);
      w["alpha"] = alpha;
      return w;
    });
  }
  return report;
}

AxiomReport serstnev_check(const ProbNorm& nu, int dim, int trials, std::uint64_t seed, double tol) {
  if (trials <= 0) throw std::invalid_argument("serstnev_check: trials must be > 0");
  AxiomReport report;
  report.suite = "serstnev";
  report.trials = trials;
  report.seed = seed;
  report.tol = tol;
  report.config = {{"dim", dim}};
  AxiomResult& sc = report.axiom("scaling nu_{lp}(x) = nu_p(x/|l|)");
  const sibley::Params sp{std::min(tol, 1e-9)};

  for (int trial = 0; trial < trials; ++trial) {
    const std::uint64_t s = mix_seed(seed, static_cast<std::uint64_t>(trial));
    Rng rng(s);
    const Vector p = random_vector(rng, dim);
    double lambda = trial % 5 == 0 ? -1.0 : rng.uniform(-3.0, 3.0);
    if (std::fabs(lambda) < 0.05) lambda = lambda < 0.0 ? -0.05 : 0.05;
    const DistFn lhs = nu(scaled(p, lambda));
    const DistFn rhs = scale_arg(nu(p), lambda);
    const double gap = lhs == rhs ? 0.0 : (both_ratio(lhs, rhs) ? exact_gap(lhs, rhs) : sibley::distance(lhs, rhs, sp));
    sc.check(gap <= tol, tol - gap, [&] {
      return nlohmann::json{{"trial", trial}, {"seed", s}, {"p", p}, {"lambda", lambda}, {"value", gap}};
    });
  }
  return report;
}

}  // namespace pnspace
