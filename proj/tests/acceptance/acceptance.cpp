// Runs the full battery twice through the command-line entry point and prints
// one line per criterion. Exit status 0 iff every criterion passes.

#include <chrono>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace {

constexpr const char* kSeed = "20240601";
// Target wall time for one full battery run.
constexpr double kRuntimeBudgetSeconds = 120.0;

struct Capture {
  int code = -1;
  std::string out;
  double seconds = 0.0;
};

Capture run_suite() {
  std::ostringstream out;
  std::ostringstream err;
  const auto start = std::chrono::steady_clock::now();
  Capture c;
  c.code = pnspace::cli::run({"suite", "--seed", kSeed, "--format", "json"}, out, err);
  c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.out = out.str();
  return c;
}

void line(bool ok, int id, const std::string& name, const std::string& detail) {
  std::printf("[%s] %2d. %s (%s)\n", ok ? "PASS" : "FAIL", id, name.c_str(), detail.c_str());
}

}  // namespace

int main() {
  const Capture first = run_suite();
  const Capture second = run_suite();

  nlohmann::json report;
  try {
    report = nlohmann::json::parse(first.out);
  } catch (const nlohmann::json::exception& e) {
    std::printf("[FAIL] could not parse the suite report: %s\n", e.what());
    return 1;
  }

  bool all = first.code == 0;
  int expected_id = 1;
  for (const nlohmann::json& c : report.at("criteria")) {
    const int id = c.at("id").get<int>();
    const bool ok = c.at("passed").get<bool>();
    all = all && ok && id == expected_id++;
    char detail[128];
    std::snprintf(detail, sizeof detail, "worst margin %.3e over %lld checks",
                  c.at("worst_margin").is_number() ? c.at("worst_margin").get<double>() : 0.0,
                  static_cast<long long>(c.at("checks").get<std::int64_t>()));
    line(ok, id, c.at("name").get<std::string>(), detail);
  }
  if (expected_id != 12) {
    std::printf("[FAIL] expected criteria 1-11, found %d\n", expected_id - 1);
    all = false;
  }

  const bool identical = first.out == second.out && first.code == second.code;
  line(identical, 12, "Deterministic report", std::to_string(first.out.size()) + " bytes, seed " + kSeed);
  all = all && identical;

  const bool in_budget = first.seconds <= kRuntimeBudgetSeconds;
  std::printf("[%s]     runtime %.1f s (budget %.0f s)\n", in_budget ? "PASS" : "FAIL", first.seconds,
              kRuntimeBudgetSeconds);
  all = all && in_budget;

  std::printf("%s\n", all ? "ALL CRITERIA PASSED" : "SOME CRITERIA FAILED");
  return all ? 0 : 1;
}
