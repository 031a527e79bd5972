#include "pnspace/random.hpp"

#include <algorithm>
#include <vector>

namespace pnspace {

namespace {

std::vector<double> sorted_draws(Rng& rng, int n, double lo, double hi) {
  std::vector<double> v;
  for (int i = 0; i < n; ++i) v.push_back(rng.uniform(lo, hi));
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

DistFn random_step_df(Rng& rng, double support, int max_knots) {
  const int n = static_cast<int>(rng.integer(1, max_knots));
  std::vector<double> xs = sorted_draws(rng, n, 0.0, support);
  if (xs.front() == 0.0) xs.front() = support * 0x1.0p-20;
  std::vector<double> ps = sorted_draws(rng, static_cast<int>(xs.size()) - 1, 0.0, 1.0);
  ps.resize(xs.size() - 1);
  ps.push_back(1.0);
  std::vector<Knot> knots;
  double before = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    knots.push_back({xs[i], before, ps[i]});
    before = ps[i];
  }
  return DistFn::from_knots(std::move(knots));
}

DistFn random_linear_df(Rng& rng, double support, int max_knots, bool allow_defect) {
  const double start = rng.uniform(0.0, 0.5 * support);
  const int n = static_cast<int>(rng.integer(0, std::max(0, max_knots - 2)));
  std::vector<double> xs = sorted_draws(rng, n, start, support);
  std::vector<double> ps = sorted_draws(rng, static_cast<int>(xs.size()), 0.0, 1.0);
  ps.resize(xs.size());
  const double top = allow_defect && rng.coin() ? rng.uniform(0.5, 1.0) : 1.0;
  std::vector<Knot> knots{{start, 0.0, 0.0}};
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!(xs[i] > knots.back().x) || !(xs[i] < support)) continue;
    const double p = ps[i] * top;
    knots.push_back({xs[i], p, p});
  }
  knots.push_back({support, top, top});
  return DistFn::from_knots(std::move(knots));
}

DistFn random_delta_plus(Rng& rng, double support, int max_knots) {
  return rng.coin() ? random_step_df(rng, support, max_knots) : random_linear_df(rng, support, max_knots);
}

}  // namespace pnspace
