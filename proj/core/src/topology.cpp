#include "pnspace/topology.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "pnspace/random.hpp"
#include "pnspace/rng.hpp"
#include "pnspace/sibley.hpp"
#include "pnspace/triangle.hpp"
#include "compare.hpp"

namespace pnspace {

namespace {

const sibley::Params kSibley{1e-9};

double dist_h0(const DistFn& f) { return detail::unit_distance(f, kSibley); }

void require_dim(const PnnSpace& space, const BasisFrame& frame) {
  if (frame.dim() != space.base.dim())
    throw std::invalid_argument("basis dimension " + std::to_string(frame.dim()) + " does not match space dimension " +
                                std::to_string(space.base.dim()));
}

// All k-element index subsets of {0..d-1} in lexicographic order.
std::vector<std::vector<int>> subsets(int d, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    out.push_back(idx);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == d - k + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

int tail_start_of(int horizon) { return (horizon + 1) / 2; }

void check_common(const PnnSpace& space, const BasisFrame& frame, const SequenceSpec& seq, double eps, int horizon) {
  require_dim(space, frame);
  seq.validate();
  if (seq.dim() != space.base.dim()) throw std::invalid_argument("sequence dimension does not match space dimension");
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("eps must lie in (0, 1)");
  if (horizon < 2 || horizon > seq.length)
    throw std::invalid_argument("horizon must lie in [2, " + std::to_string(seq.length) + "]");
}

// Verdict over a trace indexed by m = 1..horizon.
void settle(ConvergenceVerdict& v) {
  int n = v.horizon + 1;
  for (auto it = v.trace.rbegin(); it != v.trace.rend() && it->distance < v.eps; ++it) n = it->m;
  v.realized_n = n <= v.horizon ? n : -1;
  v.converges = v.realized_n != -1 && v.realized_n <= v.tail_start;
}

std::vector<std::vector<Vector>> draw_ys(int count, int per_draw, int dim, std::uint64_t seed) {
  std::vector<std::vector<Vector>> ys;
  for (int k = 0; k < count; ++k) {
    Rng rng(mix_seed(seed, static_cast<std::uint64_t>(k)));
    std::vector<Vector> draw;
    for (int j = 0; j < per_draw; ++j) draw.push_back(random_vector(rng, dim));
    ys.push_back(std::move(draw));
  }
  return ys;
}

nlohmann::json ys_json(const std::vector<std::vector<Vector>>& ys) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& draw : ys) j.push_back(draw);
  return j;
}

}  // namespace

// ---------------------------------------------------------------- BasisFrame

BasisFrame BasisFrame::standard(int dim) {
  if (dim < 1) throw std::invalid_argument("basis dimension must be >= 1");
  std::vector<Vector> b(static_cast<std::size_t>(dim), Vector(static_cast<std::size_t>(dim), 0.0));
  for (std::size_t i = 0; i < b.size(); ++i) b[i][i] = 1.0;
  return BasisFrame(std::move(b));
}

BasisFrame BasisFrame::from_vectors(std::vector<Vector> basis, double dep_tol) {
  const auto d = basis.size();
  if (d < 1) throw std::invalid_argument("basis must contain at least one vector");
  for (std::size_t i = 0; i < d; ++i)
    if (basis[i].size() != d)
      throw std::invalid_argument("basis vector " + std::to_string(i) + " has " + std::to_string(basis[i].size()) +
                                  " entries, expected " + std::to_string(d));
  if (d >= 2) {
    const NNormSpace full(static_cast<int>(d), static_cast<int>(d), dep_tol);
    if (is_dependent(full, basis)) throw std::invalid_argument("basis vectors are linearly dependent");
  } else if (basis[0][0] == 0.0) {
    throw std::invalid_argument("basis vectors are linearly dependent");
  }
  return BasisFrame(std::move(basis));
}

BasisFrame BasisFrame::random(int dim, Rng& rng) {
  while (true) {
    std::vector<Vector> b(static_cast<std::size_t>(dim), Vector(static_cast<std::size_t>(dim)));
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (i == j ? 2.0 : 0.0) + rng.uniform(-1.0, 1.0);
    try {
      return from_vectors(std::move(b));
    } catch (const std::invalid_argument&) {
      // practically unreachable for a diagonally dominated draw; redraw
    }
  }
}

// -------------------------------------------------------------- derived norm

double derived_value(const PnnSpace& space, const BasisFrame& frame, const Vector& x) {
  require_dim(space, frame);
  const int n = space.base.order();
  double best = 0.0;
  std::vector<Vector> tuple(static_cast<std::size_t>(n));
  tuple[0] = x;
  for (const auto& s : subsets(frame.dim(), n - 1)) {
    for (std::size_t j = 0; j < s.size(); ++j) tuple[j + 1] = frame[static_cast<std::size_t>(s[j])];
    best = std::max(best, gram_nnorm(space.base, tuple));
  }
  return best;
}

DistFn derived_norm(const PnnSpace& space, const BasisFrame& frame, const Vector& x) {
  return lift(space, derived_value(space, frame, x));
}

bool ball_contains(const PnnSpace& space, const BasisFrame& frame, const Vector& center, double t, const Vector& y) {
  if (!(t > 0.0)) throw std::invalid_argument("ball radius must be > 0");
  return derived_norm(space, frame, sub(center, y)).eval_exact(t) > 1.0 - t;
}

// ----------------------------------------------------------------- sequences

SequenceKind sequence_kind_from_name(std::string_view name) {
  if (name == "affine_decay") return SequenceKind::affine_decay;
  if (name == "geometric") return SequenceKind::geometric;
  if (name == "oscillating") return SequenceKind::oscillating;
  if (name == "harmonic") return SequenceKind::harmonic;
  if (name == "custom") return SequenceKind::custom;
  throw std::invalid_argument("unknown sequence kind \"" + std::string(name) + "\"");
}

const char* to_string(SequenceKind k) {
  switch (k) {
    case SequenceKind::affine_decay: return "affine_decay";
    case SequenceKind::geometric: return "geometric";
    case SequenceKind::oscillating: return "oscillating";
    case SequenceKind::harmonic: return "harmonic";
    case SequenceKind::custom: return "custom";
  }
  return "custom";
}

void SequenceSpec::validate() const {
  if (limit.empty()) throw std::invalid_argument("sequence limit must be a nonempty vector");
  if (length < 2) throw std::invalid_argument("sequence length must be >= 2");
  if (kind == SequenceKind::custom) {
    if (terms.size() != static_cast<std::size_t>(length))
      throw std::invalid_argument("custom sequence needs exactly `length` terms");
    for (std::size_t i = 0; i < terms.size(); ++i)
      if (terms[i].size() != limit.size())
        throw std::invalid_argument("sequence term " + std::to_string(i) + " has the wrong dimension");
    return;
  }
  if (direction.size() != limit.size()) throw std::invalid_argument("sequence direction has the wrong dimension");
  if (!std::isfinite(param)) throw std::invalid_argument("sequence parameter must be finite");
  if (kind == SequenceKind::affine_decay && !(param > 0.0)) throw std::invalid_argument("affine_decay needs p > 0");
  if (kind == SequenceKind::geometric && !(std::fabs(param) <= 1.0))
    throw std::invalid_argument("geometric needs |r| <= 1");
}

Vector SequenceSpec::at(int m) const {
  if (m < 1 || m > length) throw std::out_of_range("sequence index " + std::to_string(m) + " out of range");
  double s = 0.0;
  switch (kind) {
    case SequenceKind::custom: return terms[static_cast<std::size_t>(m - 1)];
    case SequenceKind::affine_decay: s = std::pow(static_cast<double>(m), -param); break;
    case SequenceKind::geometric: s = std::pow(param, m); break;
    case SequenceKind::oscillating: s = (m % 2 == 0 ? 1.0 : -1.0) * param; break;
    case SequenceKind::harmonic:
      for (int k = 1; k <= m; ++k) s += 1.0 / k;
      break;
  }
  return add(limit, scaled(direction, s));
}

SequenceSpec sequence_from_json(const nlohmann::json& j) {
  SequenceSpec s;
  s.kind = sequence_kind_from_name(j.at("kind").get<std::string>());
  s.limit = j.at("limit").get<Vector>();
  if (s.kind == SequenceKind::custom) {
    s.terms = j.at("terms").get<std::vector<Vector>>();
    s.length = static_cast<int>(s.terms.size());
  } else {
    s.direction = j.at("direction").get<Vector>();
    s.param = j.value("param", 1.0);
    s.length = j.at("length").get<int>();
  }
  s.validate();
  return s;
}

nlohmann::json to_json(const SequenceSpec& s) {
  nlohmann::json j{{"kind", to_string(s.kind)}, {"limit", s.limit}, {"length", s.length}};
  if (s.kind == SequenceKind::custom) {
    j["terms"] = s.terms;
  } else {
    j["direction"] = s.direction;
    j["param"] = s.param;
  }
  return j;
}

nlohmann::json to_json(const ConvergenceVerdict& v) {
  nlohmann::json trace = nlohmann::json::array();
  for (const TracePoint& p : v.trace) {
    nlohmann::json row{{"m", p.m}, {"sibley_distance", p.distance}};
    if (p.r != 0) row["r"] = p.r;
    trace.push_back(std::move(row));
  }
  return {{"form", v.form},         {"converges", v.converges}, {"companion", v.companion},
          {"agree", v.agree},       {"eps", v.eps},             {"horizon", v.horizon},
          {"tail_start", v.tail_start}, {"realized_n", v.realized_n}, {"sampling", v.sampling},
          {"trace", std::move(trace)}};
}

// ------------------------------------------------------------------- checks

ConvergenceVerdict check_convergence(const PnnSpace& space, const BasisFrame& frame, const SequenceSpec& seq,
                                     double eps, int horizon) {
  check_common(space, frame, seq, eps, horizon);
  ConvergenceVerdict v;
  v.form = "derived";
  v.eps = eps;
  v.horizon = horizon;
  v.tail_start = tail_start_of(horizon);
  bool in_ball = true;
  for (int m = 1; m <= horizon; ++m) {
    const Vector xm = seq.at(m);
    v.trace.push_back({m, 0, dist_h0(derived_norm(space, frame, sub(xm, seq.limit)))});
    if (m >= v.tail_start) in_ball = in_ball && ball_contains(space, frame, seq.limit, eps, xm);
  }
  settle(v);
  v.companion = in_ball;
  v.agree = v.converges == v.companion;
  return v;
}

ConvergenceVerdict check_convergence_componentwise(const PnnSpace& space, const BasisFrame& frame,
                                                   const SequenceSpec& seq, double eps, int horizon,
                                                   int y_samples, std::uint64_t seed) {
  check_common(space, frame, seq, eps, horizon);
  if (y_samples <= 0) throw std::invalid_argument("y_samples must be > 0");
  const int n = space.base.order();
  const int d = space.base.dim();
  // with n = 2 there is nothing to sample: the components are the u_i alone
  const auto ys = draw_ys(n > 2 ? y_samples : 1, n - 2, d, seed);

  ConvergenceVerdict v;
  v.form = "component";
  v.eps = eps;
  v.horizon = horizon;
  v.tail_start = tail_start_of(horizon);
  v.sampling = {{"seed", seed}, {"y_samples", static_cast<int>(ys.size())}, {"ys", ys_json(ys)}};

  std::vector<Vector> tuple(static_cast<std::size_t>(n));
  for (int m = 1; m <= horizon; ++m) {
    tuple[0] = sub(seq.at(m), seq.limit);
    double worst = 0.0;
    for (const auto& draw : ys) {
      std::copy(draw.begin(), draw.end(), tuple.begin() + 1);
      for (const Vector& u : frame.vectors()) {
        tuple.back() = u;
        worst = std::max(worst, dist_h0(pnn_eval(space, tuple)));
      }
    }
    v.trace.push_back({m, 0, worst});
  }
  settle(v);
  v.companion = v.converges;
  return v;
}

ConvergenceVerdict check_cauchy(const PnnSpace& space, const BasisFrame& frame, const SequenceSpec& seq, double eps,
                                int horizon, int pair_stride, int y_samples, std::uint64_t seed) {
  check_common(space, frame, seq, eps, horizon);
  if (pair_stride < 1) throw std::invalid_argument("pair_stride must be >= 1");
  if (y_samples <= 0) throw std::invalid_argument("y_samples must be > 0");
  const int n = space.base.order();
  const int d = space.base.dim();
  const auto ys = draw_ys(y_samples, n - 1, d, seed);

  ConvergenceVerdict v;
  v.form = "cauchy";
  v.eps = eps;
  v.horizon = horizon;
  v.tail_start = tail_start_of(horizon);
  v.sampling = {{"seed", seed}, {"y_samples", y_samples}, {"pair_stride", pair_stride}, {"ys", ys_json(ys)}};

  std::vector<std::pair<int, int>> pairs;
  for (int m = v.tail_start; m < horizon; ++m) pairs.emplace_back(m, m + 1);
  for (int m = v.tail_start; m <= horizon; m += pair_stride)
    for (int r = m + pair_stride; r <= horizon; r += pair_stride) pairs.emplace_back(m, r);
  pairs.emplace_back(v.tail_start, horizon);
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

  bool derived_ok = true;
  bool nnorm_ok = true;
  int last_bad = 0;
  std::vector<Vector> tuple(static_cast<std::size_t>(n));
  for (auto [m, r] : pairs) {
    const Vector diff = sub(seq.at(m), seq.at(r));
    const double dd = dist_h0(derived_norm(space, frame, diff));
    tuple[0] = diff;
    double dn = 0.0;
    for (const auto& draw : ys) {
      std::copy(draw.begin(), draw.end(), tuple.begin() + 1);
      dn = std::max(dn, dist_h0(pnn_eval(space, tuple)));
    }
    v.trace.push_back({m, r, dd});
    if (dd >= eps) {
      derived_ok = false;
      last_bad = std::max(last_bad, m);
    }
    nnorm_ok = nnorm_ok && dn < eps;
  }
  v.converges = derived_ok;
  v.companion = nnorm_ok;
  v.agree = v.converges == v.companion;
  v.realized_n = derived_ok ? v.tail_start : (last_bad + 1 < horizon ? last_bad + 1 : -1);
  return v;
}

AxiomReport basis_equivalence_report(const PnnSpace& space, const BasisFrame& frame_a, const BasisFrame& frame_b,
                                     std::span<const SequenceSpec> battery, double eps, int horizon) {
  AxiomReport report;
  report.suite = "basis_equivalence";
  report.trials = static_cast<int>(battery.size());
  report.tol = eps;
  report.config = {{"eps", eps}, {"horizon", horizon}, {"frame_a", frame_a.vectors()}, {"frame_b", frame_b.vectors()}};
  AxiomResult& agree = report.axiom("verdict agreement");
  for (std::size_t i = 0; i < battery.size(); ++i) {
    const auto a = check_convergence(space, frame_a, battery[i], eps, horizon);
    const auto b = check_convergence(space, frame_b, battery[i], eps, horizon);
    agree.check(a.converges == b.converges, 0.0, [&] {
      return nlohmann::json{{"sequence", i}, {"definition", to_json(battery[i])}, {"frame_a", a.converges},
                            {"frame_b", b.converges}};
    });
  }
  return report;
}

std::vector<SequenceSpec> sequence_battery(int dim, int count, std::uint64_t seed, int length) {
  if (dim < 1 || count < 0 || length < 2) throw std::invalid_argument("sequence_battery: bad arguments");
  std::vector<SequenceSpec> out;
  for (int i = 0; i < count; ++i) {
    Rng rng(mix_seed(seed, static_cast<std::uint64_t>(i)));
    SequenceSpec s;
    s.limit = random_vector(rng, dim);
    // direction with norm in [0.5, 1.5] so divergent kinds stay clear of eps
    Vector v = random_vector(rng, dim);
    while (norm(v) < 1e-3) v = random_vector(rng, dim);
    s.direction = scaled(v, rng.uniform(0.5, 1.5) / norm(v));
    s.length = length;
    switch (i % 4) {
      case 0:
        s.kind = SequenceKind::geometric;
        s.param = (rng.coin() ? 1.0 : -1.0) * rng.uniform(0.3, 0.8);
        break;
      case 1:
        s.kind = SequenceKind::affine_decay;
        s.param = rng.uniform(2.0, 3.0);
        break;
      case 2:
        s.kind = SequenceKind::oscillating;
        s.param = rng.uniform(0.5, 2.0);
        break;
      default:
        s.kind = SequenceKind::harmonic;
        break;
    }
    out.push_back(std::move(s));
  }
  return out;
}

AxiomReport derived_norm_suite(const PnnSpace& space, const BasisFrame& frame, int trials, std::uint64_t seed,
                               double tol) {
  if (trials <= 0) throw std::invalid_argument("derived_norm_suite: trials must be > 0");
  require_dim(space, frame);
  AxiomReport report;
  report.suite = "derived_norm";
  report.trials = trials;
  report.seed = seed;
  report.tol = tol;
  report.config = {{"construction", to_string(space.construction)}, {"dim", space.base.dim()},
                   {"order", space.base.order()}, {"tau", space.tau.name()}};
  AxiomResult& p1 = report.axiom("(1) F_x = H0 iff x = 0");
  AxiomResult& p2 = report.axiom("(2) F_{ax}(t) = F_x(t/|a|)");
  AxiomResult& p3 = report.axiom("(3) F_{x+y} >= tau(F_x, F_y)");
  const int d = space.base.dim();

  {
    const double d0 = dist_h0(derived_norm(space, frame, Vector(static_cast<std::size_t>(d), 0.0)));
    p1.check(d0 <= tol, tol - d0, [&] { return nlohmann::json{{"check", "x = 0"}, {"value", d0}}; });
  }
  for (int trial = 0; trial < trials; ++trial) {
    const std::uint64_t s = mix_seed(seed, static_cast<std::uint64_t>(trial));
    Rng rng(s);
    const Vector x = random_vector(rng, d);
    const Vector y = random_vector(rng, d);
    auto witness = [&](const char* what, double value) {
      return nlohmann::json{{"trial", trial}, {"seed", s}, {"check", what}, {"x", x}, {"y", y}, {"value", value}};
    };
    const DistFn fx = derived_norm(space, frame, x);
    const double dx = dist_h0(fx);
    p1.check(dx > tol, dx - tol, [&] { return witness("x != 0 => d(F_x, H0) > tol", dx); });

    double alpha = rng.uniform(-3.0, 3.0);
    if (std::fabs(alpha) < 0.05) alpha = alpha < 0.0 ? -0.05 : 0.05;
    const DistFn fa = derived_norm(space, frame, scaled(x, alpha));
    const DistFn fs = scale_arg(fx, alpha);
    const double gap =
        fa == fs ? 0.0 : (detail::both_ratio(fa, fs) ? detail::exact_gap(fa, fs) : sibley::distance(fa, fs, kSibley));
    p2.check(gap <= tol, tol - gap, [&] {
      auto w = witness("scaling", gap);
      w["alpha"] = alpha;
      return w;
    });

    const DistFn fy = derived_norm(space, frame, y);
    const DistFn fxy = derived_norm(space, frame, add(x, y));
    const DistFn bound = space.tau(fx, fy);
    const double margin = tol + space.tau.error_envelope(fx, fy) + detail::discretization(fx);
    const double slack = detail::dominance_slack(bound, fxy, tol, margin);
    p3.check(slack >= 0.0, slack, [&] { return witness("triangle", slack); });
  }
  return report;
}

}  // namespace pnspace
