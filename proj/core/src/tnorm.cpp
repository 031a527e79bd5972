#include "pnspace/tnorm.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pnspace/rng.hpp"

namespace pnspace {

namespace {

void check_unit_interval(double a, double b) {
  if (!(a >= 0.0 && a <= 1.0) || !(b >= 0.0 && b <= 1.0))
    throw std::invalid_argument("t-norm arguments must lie in [0,1]");
}

}  // namespace

TNorm TNorm::custom(std::string name, Fn fn) {
  if (!fn) throw std::invalid_argument("custom t-norm needs a function");
  return TNorm(TNormKind::custom, std::move(name), std::move(fn));
}

TNorm TNorm::from_name(std::string_view name) {
  if (name == "min") return minimum();
  if (name == "prod") return product();
  if (name == "luk") return lukasiewicz();
  if (name == "drastic") return drastic();
  throw std::invalid_argument("unknown t-norm \"" + std::string(name) + "\" (expected min|prod|luk|drastic)");
}

double TNorm::apply(double a, double b) const {
  check_unit_interval(a, b);
  return raw(a, b);
}

double TNorm::conorm(double a, double b) const {
  check_unit_interval(a, b);
  return 1.0 - raw(1.0 - a, 1.0 - b);
}

AxiomReport tnorm_axiom_suite(const TNorm& t, int trials, std::uint64_t seed) {
  if (trials <= 0) throw std::invalid_argument("tnorm_axiom_suite: trials must be > 0");
  AxiomReport report;
  report.suite = "tnorm";
  report.trials = trials;
  report.seed = seed;
  report.config = {{"tnorm", t.name()}};

  AxiomResult& assoc = report.axiom("associativity");
  AxiomResult& comm = report.axiom("commutativity");
  AxiomResult& mono = report.axiom("monotonicity");
  AxiomResult& unit = report.axiom("unit");

  for (int trial = 0; trial < trials; ++trial) {
    const std::uint64_t s = mix_seed(seed, static_cast<std::uint64_t>(trial));
    Rng rng(s);
    auto draw = [&rng] { return static_cast<double>(rng.integer(0, 1024)) / 1024.0; };
    const double a = draw(), b = draw(), c = draw();
    auto witness = [&](const char* what, double lhs, double rhs) {
      return nlohmann::json{{"trial", trial}, {"seed", s}, {"a", a}, {"b", b}, {"c", c},
                            {"check", what}, {"lhs", lhs}, {"rhs", rhs}};
    };

    const double l = t.apply(t.apply(a, b), c);
    const double r = t.apply(a, t.apply(b, c));
    assoc.check(l == r, -std::fabs(l - r), [&] { return witness("T(T(a,b),c) = T(a,T(b,c))", l, r); });

    const double ab = t.apply(a, b), ba = t.apply(b, a);
    comm.check(ab == ba, -std::fabs(ab - ba), [&] { return witness("T(a,b) = T(b,a)", ab, ba); });

    const double lo = std::min(a, b), hi = std::max(a, b);
    const double m1 = t.apply(lo, c), m2 = t.apply(hi, c);
    mono.check(m1 <= m2, m2 - m1, [&] { return witness("a<=a' => T(a,c) <= T(a',c)", m1, m2); });
    const double m3 = t.apply(c, lo), m4 = t.apply(c, hi);
    mono.check(m3 <= m4, m4 - m3, [&] { return witness("b<=b' => T(c,b) <= T(c,b')", m3, m4); });

    const double u1 = t.apply(a, 1.0), u2 = t.apply(1.0, a);
    unit.check(u1 == a, -std::fabs(u1 - a), [&] { return witness("T(a,1) = a", u1, a); });
    unit.check(u2 == a, -std::fabs(u2 - a), [&] { return witness("T(1,a) = a", u2, a); });
  }
  return report;
}

}  // namespace pnspace
