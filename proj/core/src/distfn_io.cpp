#include "pnspace/distfn_io.hpp"

#include <fstream>
#include <vector>

namespace pnspace {

namespace {

double number_field(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) throw DistFnError(-1, std::string("missing field \"") + key + "\"");
  if (!j.at(key).is_number()) throw DistFnError(-1, std::string("field \"") + key + "\" must be a number");
  return j.at(key).get<double>();
}

}  // namespace

DistFn distfn_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw DistFnError(-1, "d.f. must be a JSON object");
  if (!j.contains("interpolation") || !j.at("interpolation").is_string())
    throw DistFnError(-1, "missing string field \"interpolation\"");
  const std::string kind = j.at("interpolation").get<std::string>();
  Interpolation interp;
  if (kind == "step") {
    interp = Interpolation::step;
  } else if (kind == "linear") {
    interp = Interpolation::linear;
  } else {
    throw DistFnError(-1, "interpolation must be \"step\" or \"linear\"");
  }
  if (!j.contains("breakpoints") || !j.at("breakpoints").is_array())
    throw DistFnError(-1, "missing array field \"breakpoints\"");
  std::vector<std::pair<double, double>> bps;
  int i = 0;
  for (const auto& bp : j.at("breakpoints")) {
    if (!bp.is_array() || bp.size() != 2 || !bp[0].is_number() || !bp[1].is_number())
      throw DistFnError(i, "expected [x, p] pair of numbers");
    bps.emplace_back(bp[0].get<double>(), bp[1].get<double>());
    ++i;
  }
  return DistFn::from_breakpoints(interp, bps, number_field(j, "left_tail"), number_field(j, "right_tail"));
}

DistFn load_distfn(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw DistFnError(-1, path.string() + ": " + e.what());
  }
  return distfn_from_json(j);
}

nlohmann::json distfn_to_json(const DistFn& f) {
  const auto knots = f.knots();
  nlohmann::json bps = nlohmann::json::array();
  nlohmann::json out;
  if (f.is_step()) {
    out["interpolation"] = "step";
    for (const Knot& k : knots) bps.push_back({k.x, k.after});
  } else {
    out["interpolation"] = "linear";
    bps.push_back({knots.front().x, knots.front().after});
    for (std::size_t j = 1; j + 1 < knots.size(); ++j) {
      bps.push_back({knots[j].x, knots[j].at});
      if (knots[j].after != knots[j].at) bps.push_back({knots[j].x, knots[j].after});
    }
    bps.push_back({knots.back().x, knots.back().at});
  }
  out["breakpoints"] = std::move(bps);
  out["left_tail"] = f.left_tail();
  out["right_tail"] = f.right_tail();
  return out;
}

}  // namespace pnspace
