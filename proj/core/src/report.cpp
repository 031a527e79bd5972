#include "pnspace/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace pnspace {

void AxiomResult::record(bool ok, double slack, const nlohmann::json& witness) {
  ++checks;
  if (!std::isnan(slack) && slack < worst_margin) worst_margin = slack;
  if (!ok && passed) {
    passed = false;
    counterexample = witness;
  }
}

bool AxiomReport::all_passed() const {
  for (const AxiomResult& a : axioms)
    if (!a.passed) return false;
  return true;
}

AxiomResult& AxiomReport::axiom(const std::string& name) {
  for (AxiomResult& a : axioms)
    if (a.axiom == name) return a;
  AxiomResult& added = axioms.emplace_back();
  added.axiom = name;
  return added;
}

const AxiomResult* AxiomReport::find(const std::string& name) const {
  for (const AxiomResult& a : axioms)
    if (a.axiom == name) return &a;
  return nullptr;
}

nlohmann::json to_json(const AxiomResult& r) {
  nlohmann::json j;
  j["axiom"] = r.axiom;
  j["passed"] = r.passed;
  j["checks"] = r.checks;
  j["worst_margin"] = std::isfinite(r.worst_margin) ? nlohmann::json(r.worst_margin) : nlohmann::json(nullptr);
  j["counterexample"] = r.counterexample;
  return j;
}

nlohmann::json to_json(const AxiomReport& r) {
  nlohmann::json j;
  j["suite"] = r.suite;
  j["trials"] = r.trials;
  j["seed"] = r.seed;
  j["tol"] = r.tol;
  j["config"] = r.config;
  j["all_passed"] = r.all_passed();
  j["axioms"] = nlohmann::json::array();
  for (const AxiomResult& a : r.axioms) j["axioms"].push_back(to_json(a));
  return j;
}

std::string fixed12(double v) {
  if (std::isnan(v)) return "NaN";
  if (std::isinf(v)) return v > 0 ? "Infinity" : "-Infinity";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", v);
  // avoid "-0.000000000000"
  if (std::string_view(buf) == "-0.000000000000") return "0.000000000000";
  return buf;
}

namespace {

void write(std::ostringstream& os, const nlohmann::json& j, int indent, int depth) {
  const auto pad = [&](int d) {
    if (indent > 0) os << '\n' << std::string(static_cast<std::size_t>(indent * d), ' ');
  };
  switch (j.type()) {
    case nlohmann::json::value_t::object: {
      if (j.empty()) { os << "{}"; return; }
      os << '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) os << ',';
        first = false;
        pad(depth + 1);
        os << nlohmann::json(it.key()).dump() << (indent > 0 ? ": " : ":");
        write(os, it.value(), indent, depth + 1);
      }
      pad(depth);
      os << '}';
      return;
    }
    case nlohmann::json::value_t::array: {
      if (j.empty()) { os << "[]"; return; }
      os << '[';
      bool first = true;
      for (const auto& v : j) {
        if (!first) os << ',';
        first = false;
        pad(depth + 1);
        write(os, v, indent, depth + 1);
      }
      pad(depth);
      os << ']';
      return;
    }
    case nlohmann::json::value_t::number_float: {
      const double v = j.get<double>();
      // JSON has no infinities; non-finite values become strings
      if (std::isfinite(v)) {
        os << fixed12(v);
      } else {
        os << '"' << fixed12(v) << '"';
      }
      return;
    }
    default:
      os << j.dump();
  }
}

}  // namespace

std::string dump_fixed(const nlohmann::json& j, int indent) {
  std::ostringstream os;
  write(os, j, indent, 0);
  return os.str();
}

}  // namespace pnspace
