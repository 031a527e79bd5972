#include "pnspace/nnorm.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "pnspace/random.hpp"
#include "pnspace/rng.hpp"

namespace pnspace {

NNormSpace::NNormSpace(int dim, int order, double dep_tol) : dim_(dim), order_(order), dep_tol_(dep_tol) {
  if (order < 2 || order > dim) throw std::invalid_argument("n-norm space requires 2 <= n <= d");
  if (!(dep_tol >= 0.0)) throw std::invalid_argument("dep_tol must be >= 0");
}

void NNormSpace::validate(std::span<const Vector> tuple) const {
  if (static_cast<int>(tuple.size()) != order_)
    throw std::invalid_argument("dimension mismatch: expected " + std::to_string(order_) + " vectors, got " +
                                std::to_string(tuple.size()));
  for (const Vector& v : tuple) {
    if (static_cast<int>(v.size()) != dim_)
      throw std::invalid_argument("dimension mismatch: expected vectors of length " + std::to_string(dim_));
  }
}

namespace {

// Direction key: the vector divided by its first nonzero entry. Invariant
// under x -> -x and exactly invariant under x -> 2^k x.
Vector direction_key(const Vector& v) {
  const auto it = std::find_if(v.begin(), v.end(), [](double a) { return a != 0.0; });
  if (it == v.end()) return Vector(v.size(), 0.0);
  const double lead = *it;
  Vector key(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) key[i] = v[i] / lead;
  return key;
}

}  // namespace

GramResult gram(const NNormSpace& space, std::span<const Vector> tuple) {
  space.validate(tuple);
  const std::size_t n = tuple.size();

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<Vector> keys;
  keys.reserve(n);
  for (const Vector& v : tuple) keys.push_back(direction_key(v));
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (keys[a] != keys[b]) return keys[a] < keys[b];
    return std::fabs(tuple[a][0]) < std::fabs(tuple[b][0]);
  });

  std::vector<double> m(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      m[i * n + j] = m[j * n + i] = dot(tuple[order[i]], tuple[order[j]]);

  GramResult r;
  r.scale = 1.0;
  for (std::size_t i = 0; i < n; ++i) r.scale *= m[i * n + i];

  // LDL^T without pivoting; the Gram matrix is positive semidefinite.
  double det = 1.0;
  bool degenerate = false;
  for (std::size_t k = 0; k < n; ++k) {
    const double d = m[k * n + k];
    if (!(d > 0.0)) {
      degenerate = true;
      break;
    }
    det *= d;
    for (std::size_t i = k + 1; i < n; ++i) {
      const double l = m[i * n + k] / d;
      for (std::size_t j = k + 1; j <= i; ++j) m[i * n + j] -= l * m[j * n + k];
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < i; ++j) m[j * n + i] = m[i * n + j];
  }
  if (degenerate) det = 0.0;
  r.dependent = det <= space.dep_tol() * r.scale;
  r.det = r.dependent ? 0.0 : det;
  return r;
}

double gram_nnorm(const NNormSpace& space, std::span<const Vector> tuple) {
  return std::sqrt(gram(space, tuple).det);
}

bool is_dependent(const NNormSpace& space, std::span<const Vector> tuple) { return gram(space, tuple).dependent; }

Vector add(const Vector& a, const Vector& b) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vector sub(const Vector& a, const Vector& b) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vector scaled(const Vector& a, double s) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
  return r;
}

double dot(const Vector& a, const Vector& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm(const Vector& a) { return std::sqrt(dot(a, a)); }

namespace {

nlohmann::json tuple_json(std::span<const Vector> t) {
  nlohmann::json j = nlohmann::json::array();
  for (const Vector& v : t) j.push_back(v);
  return j;
}

}  // namespace

AxiomReport nnorm_axiom_suite(const NNormSpace& space, int trials, std::uint64_t seed, double tol) {
  if (trials <= 0) throw std::invalid_argument("nnorm_axiom_suite: trials must be > 0");
  AxiomReport report;
  report.suite = "nnorm";
  report.trials = trials;
  report.seed = seed;
  report.tol = tol;
  report.config = {{"dim", space.dim()}, {"order", space.order()}, {"dep_tol", space.dep_tol()}};

  AxiomResult& dep = report.axiom("n-N1 dependent => 0");
  AxiomResult& indep = report.axiom("n-N1 independent => >0");
  AxiomResult& perm = report.axiom("n-N2 permutation");
  AxiomResult& homog = report.axiom("n-N3 homogeneity");
  AxiomResult& tri = report.axiom("n-N4 triangle");

  const int n = space.order();
  for (int trial = 0; trial < trials; ++trial) {
    const std::uint64_t s = mix_seed(seed, static_cast<std::uint64_t>(trial));
    Rng rng(s);
    std::vector<Vector> t;
    for (int i = 0; i < n; ++i) t.push_back(random_vector(rng, space.dim()));
    auto witness = [&](const char* what, std::span<const Vector> tuple, double value) {
      return nlohmann::json{{"trial", trial}, {"seed", s}, {"check", what}, {"tuple", tuple_json(tuple)}, {"value", value}};
    };

    const GramResult g = gram(space, t);
    const double base = std::sqrt(g.det);
    indep.check(!g.dependent && base > 0.0, base, [&] { return witness("random tuple independent", t, base); });

    // dependent: last slot a combination of the others (or the zero vector)
    std::vector<Vector> dt = t;
    Vector combo(static_cast<std::size_t>(space.dim()), 0.0);
    if (rng.integer(0, 4) != 0) {
      for (int i = 0; i + 1 < n; ++i) combo = add(combo, scaled(t[static_cast<std::size_t>(i)], rng.uniform(-2.0, 2.0)));
    }
    dt.back() = combo;
    const double dv = gram_nnorm(space, dt);
    dep.check(dv == 0.0 && is_dependent(space, dt), -dv, [&] { return witness("dependent tuple vanishes", dt, dv); });

    std::vector<Vector> pt = t;
    for (int i = n - 1; i > 0; --i) std::swap(pt[static_cast<std::size_t>(i)], pt[static_cast<std::size_t>(rng.integer(0, i))]);
    const double pv = gram_nnorm(space, pt);
    const double pdiff = std::fabs(pv - base);
    perm.check(pdiff <= tol * base, tol * base - pdiff, [&] { return witness("permutation invariance", pt, pv); });

    const double alpha = rng.uniform(-5.0, 5.0);
    std::vector<Vector> ht = t;
    ht[0] = scaled(t[0], alpha);
    const double hv = gram_nnorm(space, ht);
    const double hexp = std::fabs(alpha) * base;
    const double hdiff = std::fabs(hv - hexp);
    homog.check(hdiff <= tol * std::max(hexp, 1e-300), tol * hexp - hdiff,
                [&] { return witness("absolute homogeneity", ht, hv); });

    const Vector y = random_vector(rng, space.dim());
    std::vector<Vector> yt = t, st = t;
    yt[0] = y;
    st[0] = add(t[0], y);
    const double lhs = gram_nnorm(space, st);
    const double rhs = base + gram_nnorm(space, yt);
    const double tscale = (norm(t[0]) + norm(y)) * std::sqrt(g.scale) / std::max(norm(t[0]), 1e-300);
    tri.check(lhs <= rhs + tol * tscale, rhs + tol * tscale - lhs, [&] { return witness("triangle inequality", st, lhs - rhs); });
  }
  return report;
}

}  // namespace pnspace
