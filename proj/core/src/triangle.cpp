#include "pnspace/triangle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "distfn_build.hpp"
#include "pnspace/random.hpp"
#include "pnspace/rng.hpp"
#include "pnspace/sibley.hpp"

namespace pnspace {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Above this many breakpoint pairs the grid is not refined with pairwise
// sums; the inputs are then dense enough that the lattice dominates anyway.
constexpr std::size_t kAnchorPairLimit = 1024;

void require_delta_plus(const DistFn& f, const char* who) {
  if (!in_delta_plus(f)) throw std::invalid_argument(std::string(who) + ": arguments must lie in Delta+");
}

double crossing(const Knot& l, const Knot& r, double p) {
  const double t = (p - l.after) / (r.at - l.after);
  return std::clamp(l.x + t * (r.x - l.x), l.x, r.x);
}

bool knots_less(const DistFn& a, const DistFn& b) {
  const auto ka = a.knots(), kb = b.knots();
  return std::lexicographical_compare(ka.begin(), ka.end(), kb.begin(), kb.end(), [](const Knot& u, const Knot& v) {
    return std::tie(u.x, u.at, u.after) < std::tie(v.x, v.at, v.after);
  });
}

}  // namespace

double quantile(const DistFn& f, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("quantile: level must lie in [0,1]");
  const auto k = f.knots();
  if (p == 0.0 && in_delta_plus(f)) return 0.0;
  if (k.front().at >= p) return -kInf;
  for (std::size_t j = 0; j < k.size(); ++j) {
    if (j > 0 && k[j].at >= p) return p == k[j].at ? k[j].x : crossing(k[j - 1], k[j], p);
    if (k[j].after >= p) return k[j].x;
  }
  return kInf;
}

double upper_quantile(const DistFn& f, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("upper_quantile: level must lie in [0,1]");
  const auto k = f.knots();
  if (f.right_tail() <= p) return kInf;
  if (k.front().at > p) return -kInf;
  for (std::size_t j = 0; j < k.size(); ++j) {
    if (j > 0 && k[j].at > p) return p == k[j - 1].after ? k[j - 1].x : crossing(k[j - 1], k[j], p);
    if (k[j].after > p) return k[j].x;
  }
  return kInf;
}

DistFn tau_min_exact(const DistFn& f, const DistFn& g) {
  require_delta_plus(f, "tau_min_exact");
  require_delta_plus(g, "tau_min_exact");

  const double top = std::min(f.right_tail(), g.right_tail());
  std::vector<double> levels{0.0, top};
  for (const DistFn* d : {&f, &g}) {
    for (const Knot& k : d->knots()) {
      if (k.at <= top) levels.push_back(k.at);
      if (k.after <= top) levels.push_back(k.after);
    }
  }
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  // Vertices of the result's graph. Between levels both quantile functions
  // are affine in p, so the graph is linear between consecutive vertices;
  // vertices sharing an x form a jump.
  struct Vertex {
    double x, y;
  };
  std::vector<Vertex> graph;
  auto push = [&graph](double x, double y) {
    if (!std::isfinite(x)) return;
    if (!graph.empty()) x = std::max(x, graph.back().x);
    graph.push_back({x, y});
  };
  for (double level : levels) {
    if (level > 0.0) push(quantile(f, level) + quantile(g, level), level);
    push(upper_quantile(f, level) + upper_quantile(g, level), level);
  }

  std::vector<Knot> knots;
  for (const Vertex& v : graph) {
    if (!knots.empty() && knots.back().x == v.x) {
      knots.back().after = v.y;
    } else {
      knots.push_back({v.x, v.y, v.y});
    }
  }
  detail::enforce_monotone(knots);

  ExactForm form;
  const auto* sf = std::get_if<exact::Step>(&f.exact_form());
  const auto* sg = std::get_if<exact::Step>(&g.exact_form());
  const auto* rf = std::get_if<exact::Ratio>(&f.exact_form());
  const auto* rg = std::get_if<exact::Ratio>(&g.exact_form());
  if (sf && sg) {
    form = exact::Step{sf->at + sg->at};
  } else if (rf && rg) {
    form = exact::Ratio{rf->scale + rg->scale, std::min(rf->resolution, rg->resolution)};
  } else if (sf && sf->at == 0.0) {
    form = g.exact_form();
  } else if (sg && sg->at == 0.0) {
    form = f.exact_form();
  }
  return DistFn::from_knots(std::move(knots), form);
}

namespace {

// Value of F at t, snapped onto a breakpoint lying within rounding distance.
// Arguments formed as (a + b) - a miss b by an ulp or so, which would land on
// the wrong side of a jump.
double snapped_value(const DistFn& f, double t) {
  const auto k = f.knots();
  const double eps = 1e-12 * (1.0 + std::fabs(t));
  const auto it = std::lower_bound(k.begin(), k.end(), t, [](const Knot& kn, double v) { return kn.x < v; });
  if (it != k.end() && it->x - t <= eps) return it->at;
  if (it != k.begin() && t - (it - 1)->x <= eps) return (it - 1)->at;
  return f.value(t);
}

// sup over k of t(a[k], b[len - 1 - k]). Four accumulators keep the
// dependency chain short; the kind dispatch sits outside the loop.
template <class T>
double sup_fold(const double* a, const double* b, std::size_t len, T t) {
  double m0 = 0.0, m1 = 0.0, m2 = 0.0, m3 = 0.0;
  const double* rb = b + len - 1;
  std::size_t k = 0;
  for (; k + 4 <= len; k += 4) {
    m0 = std::max(m0, t(a[k], rb[-static_cast<std::ptrdiff_t>(k)]));
    m1 = std::max(m1, t(a[k + 1], rb[-static_cast<std::ptrdiff_t>(k + 1)]));
    m2 = std::max(m2, t(a[k + 2], rb[-static_cast<std::ptrdiff_t>(k + 2)]));
    m3 = std::max(m3, t(a[k + 3], rb[-static_cast<std::ptrdiff_t>(k + 3)]));
  }
  for (; k < len; ++k) m0 = std::max(m0, t(a[k], rb[-static_cast<std::ptrdiff_t>(k)]));
  return std::max(std::max(m0, m1), std::max(m2, m3));
}

double sup_fold(const TNorm& t, const double* a, const double* b, std::size_t len) {
  switch (t.kind()) {
    case TNormKind::minimum: return sup_fold(a, b, len, [](double u, double v) { return u < v ? u : v; });
    case TNormKind::product: return sup_fold(a, b, len, [](double u, double v) { return u * v; });
    case TNormKind::lukasiewicz:
      return sup_fold(a, b, len, [](double u, double v) {
        const double w = u + v - 1.0;
        return w > 0.0 ? w : 0.0;
      });
    case TNormKind::drastic:
      return sup_fold(a, b, len, [](double u, double v) { return u == 1.0 ? v : (v == 1.0 ? u : 0.0); });
    case TNormKind::custom: break;
  }
  return sup_fold(a, b, len, [&t](double u, double v) { return t.raw(u, v); });
}

class GridConvolution {
 public:
  GridConvolution(const TriangleOp& op, const DistFn& f, const DistFn& g)
      : op_(op), f_(f), g_(g), sup_(op.mode == TriangleMode::sup_tnorm) {
    n_ = static_cast<std::size_t>(op.grid_resolution);
    span_ = std::max(0.0, f.last_x()) + std::max(0.0, g.last_x());
    delta_ = span_ / static_cast<double>(n_);
    anchored_ = f.knots().size() * g.knots().size() <= kAnchorPairLimit;
    for (const Knot& k : f.knots())
      if (k.x >= 0.0) fx_.push_back(k.x);
    for (const Knot& k : g.knots())
      if (k.x >= 0.0) gx_.push_back(k.x);
    if (delta_ > 0.0) {
      fv_.resize(n_ + 1);
      gv_.resize(n_ + 1);
      for (std::size_t k = 0; k <= n_; ++k) {
        fv_[k] = sample(f.value(lattice(k)));
        gv_[k] = sample(g.value(lattice(k)));
      }
    }
  }

  DistFn run() const {
    std::vector<double> xs;
    if (delta_ > 0.0)
      for (std::size_t k = 0; k <= n_; ++k) xs.push_back(lattice(k));
    xs.push_back(0.0);
    xs.push_back(span_);
    if (anchored_) {
      for (double a : with_zero(fx_))
        for (double b : with_zero(gx_)) xs.push_back(a + b);
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    std::vector<double> vals(xs.size());
    double running = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      running = std::max(running, at(xs[i]));
      vals[i] = running;
    }
    const double tail = std::max(running, at(span_ + 1.0));

    std::vector<Knot> knots;
    knots.reserve(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i)
      knots.push_back({xs[i], vals[i], i + 1 < xs.size() ? vals[i + 1] : tail});
    detail::enforce_monotone(knots);
    return DistFn::from_knots(std::move(knots));
  }

 private:
  double lattice(std::size_t k) const { return k == n_ ? span_ : static_cast<double>(k) * delta_; }
  double sample(double v) const { return sup_ ? v : 1.0 - v; }

  // F(t) given pos = first knot with x >= t; matches DistFn::value.
  static double value_near(std::span<const Knot> k, std::size_t pos, double t) {
    if (pos == 0) return k.front().at;
    if (pos == k.size()) return k.back().after;
    if (k[pos].x == t) return k[pos].at;
    const Knot& l = k[pos - 1];
    const Knot& r = k[pos];
    if (l.after == r.at) return r.at;
    const double w = (t - l.x) / (r.x - l.x);
    return std::clamp(l.after + w * (r.at - l.after), l.after, r.at);
  }

  static std::vector<double> with_zero(const std::vector<double>& v) {
    std::vector<double> out{0.0};
    out.insert(out.end(), v.begin(), v.end());
    return out;
  }

  double combine(double u, double v) const {
    return sup_ ? op_.base.raw(u, v) : 1.0 - op_.base.raw(1.0 - u, 1.0 - v);
  }
  double better(double best, double cand) const { return sup_ ? std::max(best, cand) : std::min(best, cand); }

  // H(x) evaluated over the finite set of split points s in [0, x].
  double at(double x) const {
    if (x <= 0.0) return 0.0;
    double best = sup_ ? 0.0 : 1.0;

    // lattice splits: inf_s T*(u, v) = 1 - sup_s T(1 - u, 1 - v), so both
    // modes fold a t-norm over (complemented) samples
    if (delta_ > 0.0) {
      const double m_real = x / delta_;
      const auto m = static_cast<std::size_t>(std::llround(m_real));
      const bool on_lattice = m <= n_ && lattice(m) == x;
      double folded = 0.0;
      if (on_lattice) {
        folded = sup_fold(op_.base, fv_.data(), gv_.data(), m + 1);
      } else {
        const std::size_t kmax = std::min(n_, static_cast<std::size_t>(std::floor(m_real)));
        // tmp[j] = G(x - lattice(kmax - j)); arguments increase with j
        tmp_.resize(kmax + 1);
        const auto gk = g_.knots();
        std::size_t pos = 0;
        for (std::size_t j = 0; j <= kmax; ++j) {
          const double t = x - lattice(kmax - j);
          while (pos < gk.size() && gk[pos].x < t) ++pos;
          tmp_[j] = sample(value_near(gk, pos, t));
        }
        folded = sup_fold(op_.base, fv_.data(), tmp_.data(), kmax + 1);
      }
      best = better(best, sup_ ? folded : 1.0 - folded);
    }

    // breakpoint-anchored splits; pieces between consecutive anchors are
    // sampled at their midpoints so open pieces of step inputs are seen
    struct Split {
      double s;
      double fs;
      double gt;
    };
    std::vector<Split> splits;
    splits.push_back({0.0, f_.value(0.0), g_.value(x)});
    splits.push_back({x, f_.value(x), g_.value(0.0)});
    const bool full = anchored_;
    for (std::size_t i = 0; i < fx_.size(); ++i) {
      if (!full && i + 1 != fx_.size()) continue;
      const double a = fx_[i];
      if (a <= x) splits.push_back({a, f_.value(a), snapped_value(g_, x - a)});
    }
    for (std::size_t j = 0; j < gx_.size(); ++j) {
      if (!full && j + 1 != gx_.size()) continue;
      const double b = gx_[j];
      if (b <= x) splits.push_back({x - b, snapped_value(f_, x - b), g_.value(b)});
    }
    std::sort(splits.begin(), splits.end(), [](const Split& l, const Split& r) { return l.s < r.s; });
    for (std::size_t i = 0; i < splits.size(); ++i) {
      best = better(best, combine(splits[i].fs, splits[i].gt));
      if (full && i + 1 < splits.size() && splits[i + 1].s > splits[i].s) {
        const double mid = 0.5 * (splits[i].s + splits[i + 1].s);
        best = better(best, combine(f_.value(mid), g_.value(x - mid)));
      }
    }
    return best;
  }

  const TriangleOp& op_;
  const DistFn& f_;
  const DistFn& g_;
  bool sup_;
  std::size_t n_ = 0;
  double span_ = 0.0;
  double delta_ = 0.0;
  bool anchored_ = false;
  std::vector<double> fx_, gx_;
  std::vector<double> fv_, gv_;
  mutable std::vector<double> tmp_;
};

}  // namespace

DistFn tau_grid(const TriangleOp& op, const DistFn& f, const DistFn& g) {
  require_delta_plus(f, "tau_grid");
  require_delta_plus(g, "tau_grid");
  if (op.grid_resolution < 2) throw std::invalid_argument("tau_grid: grid_resolution must be >= 2");
  // canonical argument order makes the computed operation exactly commutative
  if (knots_less(g, f)) return GridConvolution(op, g, f).run();
  return GridConvolution(op, f, g).run();
}

bool TriangleOp::has_exact_path() const {
  return !force_grid && mode == TriangleMode::sup_tnorm && base.kind() == TNormKind::minimum;
}

DistFn TriangleOp::operator()(const DistFn& f, const DistFn& g) const {
  return has_exact_path() ? tau_min_exact(f, g) : tau_grid(*this, f, g);
}

double TriangleOp::error_envelope(const DistFn& f, const DistFn& g) const {
  if (has_exact_path()) return 0.0;
  const double span = std::max(0.0, f.last_x()) + std::max(0.0, g.last_x());
  const double cell = span / static_cast<double>(grid_resolution);
  return mode == TriangleMode::sup_tnorm ? cell : 2.0 * cell;
}

std::string TriangleOp::name() const {
  std::string n = mode == TriangleMode::sup_tnorm ? "sup/" : "inf/";
  n += base.name();
  if (has_exact_path()) n += "/exact";
  return n;
}

AxiomReport triangle_axiom_suite(const TriangleOp& op, int trials, std::uint64_t seed, double tol) {
  if (trials <= 0) throw std::invalid_argument("triangle_axiom_suite: trials must be > 0");
  AxiomReport report;
  report.suite = "triangle";
  report.trials = trials;
  report.seed = seed;
  report.tol = tol;
  report.config = {{"triangle", op.name()}, {"grid_resolution", op.grid_resolution}};

  AxiomResult& assoc = report.axiom("associativity");
  AxiomResult& comm = report.axiom("commutativity");
  AxiomResult& mono = report.axiom("monotonicity");
  AxiomResult& unit = report.axiom("unit");
  AxiomResult& closure = report.axiom("closure_delta_plus");

  const DistFn h0 = unit_step();
  const sibley::Params sp{std::min(tol, 1e-9)};
  for (int trial = 0; trial < trials; ++trial) {
    const std::uint64_t s = mix_seed(seed, static_cast<std::uint64_t>(trial));
    Rng rng(s);
    const DistFn f = random_delta_plus(rng, 0.5);
    const DistFn g = random_delta_plus(rng, 0.5);
    const DistFn h = random_delta_plus(rng, 0.5);
    const DistFn r = random_delta_plus(rng, 0.5);
    auto witness = [&](const char* what, double value) {
      return nlohmann::json{{"trial", trial}, {"seed", s}, {"check", what}, {"value", value}};
    };

    const DistFn fg = op(f, g);
    const DistFn gh = op(g, h);
    const DistFn left = op(fg, h);
    const DistFn right = op(f, gh);
    const double env = op.error_envelope(f, g) + op.error_envelope(fg, h) + op.error_envelope(g, h) +
                       op.error_envelope(f, gh);
    const double d_assoc = sibley::distance(left, right, sp);
    assoc.check(d_assoc <= tol + env, tol + env - d_assoc, [&] { return witness("d(t(t(F,G),H), t(F,t(G,H)))", d_assoc); });

    const DistFn gf = op(g, f);
    comm.check(fg == gf, 0.0, [&] { return witness("t(F,G) == t(G,F)", sibley::distance(fg, gf, sp)); });

    const DistFn f_up = pointwise_max(std::vector<DistFn>{f, r});
    const DistFn lo = op(f, g);
    const DistFn hi = op(f_up, g);
    const double margin = op.error_envelope(f, g) + op.error_envelope(f_up, g) + tol;
    mono.check(leq_within(lo, hi, margin), margin, [&] { return witness("F<=F' => t(F,G) <= t(F',G)", margin); });

    const DistFn fu = op(f, h0);
    const double unit_bound = tol + op.error_envelope(f, h0);
    const double d_unit = sibley::distance(fu, f, sp);
    unit.check(d_unit <= unit_bound, unit_bound - d_unit, [&] { return witness("d(t(F,H0), F)", d_unit); });

    closure.check(in_delta_plus(fg), 0.0, [&] { return witness("t(F,G) in Delta+", 0.0); });
  }
  return report;
}

}  // namespace pnspace
