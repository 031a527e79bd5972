#pragma once

#include "pnspace/distfn.hpp"
#include "pnspace/sibley.hpp"

namespace pnspace::detail {

/// Both arguments carry the closed form t / (t + c).
bool both_ratio(const DistFn& a, const DistFn& b);

/// Largest pointwise excess of `lower` over `upper` under the exact evaluators,
/// probed on a log-spaced set around the attached scales.
double exact_excess(const DistFn& lower, const DistFn& upper);

/// Largest pointwise |a - b| under the exact evaluators on the same probes.
double exact_gap(const DistFn& a, const DistFn& b);

/// Sup-norm sampling error of a discretized ratio d.f. (0 otherwise).
double discretization(const DistFn& f);

/// Slack of `lower <= upper`: closed-form comparison within tol when both
/// sides carry ratio forms, otherwise leq_within(margin). Negative on failure.
double dominance_slack(const DistFn& lower, const DistFn& upper, double tol, double margin);

/// d_s(F, H0), through the Delta+ shortcut when it applies.
double unit_distance(const DistFn& f, const sibley::Params& sp);

}  // namespace pnspace::detail
