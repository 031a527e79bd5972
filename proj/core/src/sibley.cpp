#include "pnspace/sibley.hpp"

#include <stdexcept>

#include "sweep.hpp"

namespace pnspace::sibley {

bool condition_holds(const DistFn& f, const DistFn& g, double h) {
  if (!(h > 0.0 && h <= 1.0)) throw std::invalid_argument("sibley: h must lie in (0,1]");
  // values: [0] = F(x-h), [1] = G(x), [2] = F(x+h)
  const detail::Shifted fns[] = {{&f, -h}, {&g, 0.0}, {&f, h}};
  const detail::Domain dom{-1.0 / h, 1.0 / h};
  return detail::all_pieces(fns, dom, [h](const detail::Values& v) {
    return v[0] - h <= v[1] && v[1] <= v[2] + h;
  });
}

namespace {

template <class Feasible>
double bisect(Feasible&& feasible, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("sibley: tol must be > 0");
  if (!feasible(1.0)) throw std::logic_error("sibley: h = 1 must always be feasible");
  double lo = 0.0;
  double hi = 1.0;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (feasible(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

}  // namespace

double distance(const DistFn& f, const DistFn& g, const Params& params) {
  return bisect([&](double h) { return condition_holds(f, g, h) && condition_holds(g, f, h); }, params.tol);
}

double distance_to_unit(const DistFn& f, const Params& params) {
  if (!in_delta_plus(f)) throw std::invalid_argument("sibley::distance_to_unit: argument must lie in Delta+");
  return bisect([&](double h) { return f.right_limit(h) >= 1.0 - h; }, params.tol);
}

}  // namespace pnspace::sibley
