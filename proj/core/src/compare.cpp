#include "compare.hpp"

#include <algorithm>
#include <cmath>
#include <variant>
#include <vector>

#include "pnspace/distfn.hpp"
#include "pnspace/sibley.hpp"

namespace pnspace::detail {

namespace {

double ratio_scale(const DistFn& f) {
  if (const auto* r = std::get_if<exact::Ratio>(&f.exact_form())) return r->scale;
  if (const auto* s = std::get_if<exact::Step>(&f.exact_form())) return s->at;
  return 1.0;
}

// Probe points spanning several decades around the scales of the arguments.
std::vector<double> probe_points(const DistFn& a, const DistFn& b) {
  const double ref = std::max({ratio_scale(a), ratio_scale(b), 1e-12});
  std::vector<double> ts;
  for (int k = 0; k <= 64; ++k) ts.push_back(ref * std::exp2((k - 32) / 4.0));
  return ts;
}

}  // namespace

bool both_ratio(const DistFn& a, const DistFn& b) {
  return std::holds_alternative<exact::Ratio>(a.exact_form()) && std::holds_alternative<exact::Ratio>(b.exact_form());
}

double exact_excess(const DistFn& lower, const DistFn& upper) {
  double worst = -1.0;
  for (double t : probe_points(lower, upper)) worst = std::max(worst, lower.eval_exact(t) - upper.eval_exact(t));
  return worst;
}

double exact_gap(const DistFn& a, const DistFn& b) {
  double worst = 0.0;
  for (double t : probe_points(a, b)) worst = std::max(worst, std::fabs(a.eval_exact(t) - b.eval_exact(t)));
  return worst;
}

double discretization(const DistFn& f) {
  if (const auto* r = std::get_if<exact::Ratio>(&f.exact_form())) return 1.0 / r->resolution;
  return 0.0;
}

double dominance_slack(const DistFn& lower, const DistFn& upper, double tol, double margin) {
  if (both_ratio(lower, upper)) return tol - exact_excess(lower, upper);
  return leq_within(lower, upper, margin) ? margin : -1.0;
}

double unit_distance(const DistFn& f, const sibley::Params& sp) {
  return in_delta_plus(f) ? sibley::distance_to_unit(f, sp) : sibley::distance(f, unit_step(), sp);
}

}  // namespace pnspace::detail
