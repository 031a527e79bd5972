#include "pnspace/distfn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "distfn_build.hpp"
#include "sweep.hpp"

namespace pnspace {

namespace {

bool is_probability(double p) { return std::isfinite(p) && p >= 0.0 && p <= 1.0; }

std::string at_index(int i, const std::string& what) {
  return i < 0 ? what : "breakpoints[" + std::to_string(i) + "]: " + what;
}

void validate(const std::vector<Knot>& knots) {
  if (knots.empty()) throw DistFnError(-1, "a distribution function needs at least one breakpoint");
  for (std::size_t j = 0; j < knots.size(); ++j) {
    const Knot& k = knots[j];
    const int i = static_cast<int>(j);
    if (!std::isfinite(k.x)) throw DistFnError(i, "x must be finite");
    if (!is_probability(k.at) || !is_probability(k.after))
      throw DistFnError(i, "values must lie in [0,1]");
    if (k.after < k.at) throw DistFnError(i, "right limit below value (decreasing jump)");
    if (j > 0) {
      if (!(k.x > knots[j - 1].x)) throw DistFnError(i, "x must be strictly increasing");
      if (k.at < knots[j - 1].after) throw DistFnError(i, "values must be nondecreasing");
    }
  }
}

// Drops knots that neither jump nor bend the function.
std::vector<Knot> canonicalize(std::vector<Knot> knots) {
  std::vector<Knot> out;
  out.reserve(knots.size());
  for (std::size_t j = 0; j < knots.size(); ++j) {
    const Knot& k = knots[j];
    const bool flat_here = k.at == k.after;
    const bool flat_before = out.empty() ? true : out.back().after == k.at;
    const bool flat_after = j + 1 == knots.size() ? true : knots[j + 1].at == k.after;
    const bool last_candidate = out.empty() && j + 1 == knots.size();
    if (flat_here && flat_before && flat_after && !last_candidate) continue;
    out.push_back(k);
  }
  if (out.empty()) out.push_back(knots.front());
  return out;
}

}  // namespace

const char* to_string(DfClass c) {
  switch (c) {
    case DfClass::Delta: return "Delta";
    case DfClass::DeltaPlus: return "DeltaPlus";
    case DfClass::DPlus: return "DPlus";
    case DfClass::NotDF: return "NotDF";
  }
  return "NotDF";
}

DistFnError::DistFnError(int index, const std::string& what)
    : std::invalid_argument(at_index(index, what)), index_(index) {}

DistFn DistFn::from_knots(std::vector<Knot> knots, ExactForm form) {
  validate(knots);
  return DistFn(canonicalize(std::move(knots)), std::move(form));
}

DistFn DistFn::from_breakpoints(Interpolation interp,
                                std::span<const std::pair<double, double>> bps,
                                double left_tail, double right_tail) {
  if (!is_probability(left_tail)) throw DistFnError(-1, "left_tail must lie in [0,1]");
  if (!is_probability(right_tail)) throw DistFnError(-1, "right_tail must lie in [0,1]");
  if (bps.empty()) throw DistFnError(-1, "breakpoints must not be empty");

  const int n = static_cast<int>(bps.size());
  double prev_p = left_tail;
  for (int i = 0; i < n; ++i) {
    const auto [x, p] = bps[static_cast<std::size_t>(i)];
    if (!std::isfinite(x)) throw DistFnError(i, "x must be finite");
    if (!is_probability(p)) throw DistFnError(i, "probability must lie in [0,1]");
    if (p < prev_p)
      throw DistFnError(i, i == 0 ? "probability below left_tail" : "probabilities must be nondecreasing");
    prev_p = p;
    if (i > 0) {
      const double px = bps[static_cast<std::size_t>(i - 1)].first;
      const bool dup_ok = interp == Interpolation::linear && x == px && i - 1 > 0 && i < n - 1 &&
                          (i < 2 || bps[static_cast<std::size_t>(i - 2)].first < px);
      if (!(x > px) && !dup_ok) {
        throw DistFnError(i, x == px && interp == Interpolation::linear
                                 ? "repeated x allowed only as a single interior pair"
                                 : "x must be strictly increasing");
      }
    }
  }
  if (bps.back().second > right_tail) throw DistFnError(n - 1, "probability above right_tail");

  std::vector<Knot> knots;
  knots.reserve(bps.size());
  if (interp == Interpolation::step) {
    if (bps.back().second != right_tail)
      throw DistFnError(n - 1, "step form requires right_tail equal to the last probability");
    double before = left_tail;
    for (const auto& [x, p] : bps) {
      knots.push_back({x, before, p});
      before = p;
    }
  } else {
    if (n == 1) {
      if (bps[0].second != right_tail)
        throw DistFnError(0, "single linear breakpoint requires probability equal to right_tail");
      knots.push_back({bps[0].first, left_tail, right_tail});
    } else {
      knots.push_back({bps[0].first, left_tail, bps[0].second});
      for (int i = 1; i < n - 1; ++i) {
        const auto [x, p] = bps[static_cast<std::size_t>(i)];
        if (bps[static_cast<std::size_t>(i + 1)].first == x) {
          knots.push_back({x, p, bps[static_cast<std::size_t>(i + 1)].second});
          ++i;
        } else {
          knots.push_back({x, p, p});
        }
      }
      knots.push_back({bps.back().first, bps.back().second, right_tail});
    }
  }
  return from_knots(std::move(knots));
}

double DistFn::value(double x) const {
  if (std::isnan(x)) throw std::invalid_argument("DistFn::value: NaN argument");
  const auto it = std::lower_bound(knots_.begin(), knots_.end(), x,
                                   [](const Knot& k, double v) { return k.x < v; });
  if (it == knots_.begin()) return it->at;
  if (it == knots_.end()) return knots_.back().after;
  if (it->x == x) return it->at;
  const Knot& l = *(it - 1);
  const Knot& r = *it;
  if (l.after == r.at) return r.at;
  const double t = (x - l.x) / (r.x - l.x);
  return std::clamp(l.after + t * (r.at - l.after), l.after, r.at);
}

double DistFn::right_limit(double x) const {
  const auto it = std::lower_bound(knots_.begin(), knots_.end(), x,
                                   [](const Knot& k, double v) { return k.x < v; });
  if (it != knots_.end() && it->x == x) return it->after;
  return value(x);
}

double DistFn::eval_exact(double x) const {
  if (const auto* s = std::get_if<exact::Step>(&exact_)) return x <= s->at ? 0.0 : 1.0;
  if (const auto* r = std::get_if<exact::Ratio>(&exact_)) return x <= 0.0 ? 0.0 : x / (x + r->scale);
  return value(x);
}

bool DistFn::is_step() const {
  for (std::size_t j = 0; j + 1 < knots_.size(); ++j)
    if (knots_[j].after != knots_[j + 1].at) return false;
  return true;
}

DistFn unit_step() { return step_at(0.0); }

DistFn step_at(double a) {
  if (!(a >= 0.0) || !std::isfinite(a)) throw std::invalid_argument("step_at: location must be finite and >= 0");
  return DistFn::from_knots({{a, 0.0, 1.0}}, exact::Step{a});
}

DistFn ratio_df(double c, int resolution) {
  if (!(c >= 0.0) || !std::isfinite(c)) throw std::invalid_argument("ratio_df: scale must be finite and >= 0");
  if (resolution < 2) throw std::invalid_argument("ratio_df: resolution must be >= 2");
  if (c == 0.0) return unit_step();
  std::vector<Knot> knots;
  knots.reserve(static_cast<std::size_t>(resolution));
  const double res = resolution;
  for (int i = 0; i < resolution; ++i) {
    // uniform in level: t_i solves t/(t+c) = i/resolution
    const double t = c * (static_cast<double>(i) / static_cast<double>(resolution - i));
    const double p = i / res;
    knots.push_back({t, p, i + 1 == resolution ? 1.0 : p});
  }
  return DistFn::from_knots(std::move(knots), exact::Ratio{c, resolution});
}

bool leq(const DistFn& f, const DistFn& g) { return leq_within(f, g, 0.0); }

bool leq_within(const DistFn& f, const DistFn& g, double margin) {
  if (!(margin >= 0.0)) throw std::invalid_argument("leq_within: margin must be >= 0");
  const detail::Shifted fns[] = {{&f, 0.0}, {&g, margin}};
  return detail::all_pieces(fns, detail::Domain{}, [margin](const detail::Values& v) { return v[0] <= v[1] + margin; });
}

DistFn scale_arg(const DistFn& f, double lambda) {
  if (lambda == 0.0 || !std::isfinite(lambda)) throw std::invalid_argument("scale_arg: lambda must be finite and nonzero");
  const double s = std::fabs(lambda);
  if (s == 1.0) return f;
  std::vector<Knot> knots(f.knots().begin(), f.knots().end());
  for (Knot& k : knots) k.x *= s;
  ExactForm form = f.exact_form();
  if (auto* st = std::get_if<exact::Step>(&form)) st->at *= s;
  if (auto* r = std::get_if<exact::Ratio>(&form)) r->scale *= s;
  return DistFn::from_knots(std::move(knots), form);
}

bool in_delta(const DistFn& f) { return f.left_tail() == 0.0; }
bool in_delta_plus(const DistFn& f) { return in_delta(f) && f.value(0.0) == 0.0; }
bool in_d_plus(const DistFn& f) { return in_delta_plus(f) && f.right_tail() == 1.0; }

DfClass classify(const DistFn& f) {
  if (in_d_plus(f)) return DfClass::DPlus;
  if (in_delta_plus(f)) return DfClass::DeltaPlus;
  if (in_delta(f)) return DfClass::Delta;
  return DfClass::NotDF;
}

namespace {

template <class Pick>
DistFn pointwise(std::span<const DistFn> fs, Pick pick, bool take_min) {
  if (fs.empty()) throw std::invalid_argument("pointwise: empty input");
  std::vector<double> xs;
  for (const DistFn& f : fs)
    for (const Knot& k : f.knots()) xs.push_back(k.x);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  auto combine = [&](auto&& eval) {
    double v = eval(fs[0]);
    for (std::size_t i = 1; i < fs.size(); ++i) v = pick(v, eval(fs[i]));
    return v;
  };

  std::vector<Knot> knots;
  std::vector<double> cross;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double x = xs[i];
    knots.push_back({x, combine([x](const DistFn& f) { return f.value(x); }),
                     combine([x](const DistFn& f) { return f.right_limit(x); })});
    if (i + 1 == xs.size()) break;
    const double x1 = xs[i + 1];
    cross.clear();
    for (std::size_t a = 0; a < fs.size(); ++a) {
      for (std::size_t b = a + 1; b < fs.size(); ++b) {
        const double d0 = fs[a].right_limit(x) - fs[b].right_limit(x);
        const double d1 = fs[a].value(x1) - fs[b].value(x1);
        if ((d0 < 0.0 && d1 > 0.0) || (d0 > 0.0 && d1 < 0.0)) {
          const double t = d0 / (d0 - d1);
          const double xc = x + t * (x1 - x);
          if (xc > x && xc < x1) cross.push_back(xc);
        }
      }
    }
    std::sort(cross.begin(), cross.end());
    for (double xc : cross) {
      const double v = combine([xc](const DistFn& f) { return f.value(xc); });
      knots.push_back({xc, v, v});
    }
  }
  detail::enforce_monotone(knots);

  ExactForm form;
  if (const auto* s0 = std::get_if<exact::Step>(&fs[0].exact_form())) {
    double at = s0->at;
    bool all = true;
    for (const DistFn& f : fs) {
      const auto* s = std::get_if<exact::Step>(&f.exact_form());
      if (!s) { all = false; break; }
      at = take_min ? std::max(at, s->at) : std::min(at, s->at);
    }
    if (all) form = exact::Step{at};
  } else if (const auto* r0 = std::get_if<exact::Ratio>(&fs[0].exact_form())) {
    double c = r0->scale;
    int res = r0->resolution;
    bool all = true;
    for (const DistFn& f : fs) {
      const auto* r = std::get_if<exact::Ratio>(&f.exact_form());
      if (!r) { all = false; break; }
      c = take_min ? std::max(c, r->scale) : std::min(c, r->scale);
      res = std::min(res, r->resolution);
    }
    if (all) form = exact::Ratio{c, res};
  }
  return DistFn::from_knots(std::move(knots), form);
}

}  // namespace

DistFn pointwise_min(std::span<const DistFn> fs) {
  return pointwise(fs, [](double a, double b) { return std::min(a, b); }, true);
}

DistFn pointwise_max(std::span<const DistFn> fs) {
  return pointwise(fs, [](double a, double b) { return std::max(a, b); }, false);
}

namespace detail {

void enforce_monotone(std::vector<Knot>& knots) {
  std::vector<Knot> out;
  out.reserve(knots.size());
  double floor = 0.0;
  for (Knot k : knots) {
    k.at = std::clamp(k.at, 0.0, 1.0);
    k.after = std::clamp(k.after, 0.0, 1.0);
    if (!out.empty() && !(k.x > out.back().x)) {
      out.back().after = std::max(out.back().after, k.after);
      floor = out.back().after;
      continue;
    }
    k.at = std::max(k.at, floor);
    k.after = std::max(k.after, k.at);
    floor = k.after;
    out.push_back(k);
  }
  knots = std::move(out);
}

}  // namespace detail

}  // namespace pnspace
