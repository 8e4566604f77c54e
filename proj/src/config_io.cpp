#include "eqlab/config_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "eqlab/errors.hpp"

namespace eqlab {

using nlohmann::json;

namespace {

struct ExactValue {
  double value;
  Rational exact;
};

ExactValue read_number(const json& obj, const char* field, const std::string& where) {
  const std::string name = where + "." + field;
  const auto it = obj.find(field);
  if (it == obj.end()) throw ConfigError(name + ": missing");
  try {
    if (it->is_number()) {
      const double v = it->get<double>();
      return {v, rational_from_double(v)};
    }
    if (it->is_string()) {
      const Rational r = parse_rational(it->get<std::string>());
      return {to_double(r), r};
    }
  } catch (const InvalidParameter& e) {
    throw ConfigError(name + ": " + e.what());
  }
  throw ConfigError(name + ": expected a number or a rational string");
}

}  // namespace

LoadedConfiguration parse_configuration(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("configuration: expected an object");
  const auto masses = doc.find("masses");
  if (masses == doc.end()) throw ConfigError("masses: missing");
  if (!masses->is_array()) throw ConfigError("masses: expected an array");
  if (masses->empty()) throw ConfigError("masses: needs at least one mass");

  std::vector<MassPoint> points;
  ExactConfiguration exact;
  for (std::size_t i = 0; i < masses->size(); ++i) {
    const json& entry = (*masses)[i];
    const std::string where = "masses[" + std::to_string(i) + "]";
    if (!entry.is_object()) throw ConfigError(where + ": expected an object");
    const ExactValue x = read_number(entry, "x", where);
    const ExactValue y = read_number(entry, "y", where);
    const ExactValue m = read_number(entry, "m", where);
    if (!(m.exact > 0)) throw ConfigError(where + ".m: must be positive");
    points.push_back({x.value, y.value, m.value});
    exact.push_back({x.exact, y.exact, m.exact});
  }
  try {
    return {Configuration(std::move(points)), std::move(exact)};
  } catch (const InvalidParameter& e) {
    throw ConfigError(std::string("masses: ") + e.what());
  }
}

LoadedConfiguration load_configuration(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read configuration file '" + path.string() + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_configuration(text.str());
}

std::string configuration_json(const Configuration& config) {
  json masses = json::array();
  for (const auto& p : config.points()) masses.push_back({{"x", p.x}, {"y", p.y}, {"m", p.m}});
  return json{{"masses", masses}}.dump(2);
}

std::string result_json(int n, const std::vector<Equilibrium>& equilibria, const MorseReport& report) {
  json list = json::array();
  for (const auto& eq : equilibria) {
    list.push_back({{"x", eq.location.x},
                    {"y", eq.location.y},
                    {"residual", eq.residual},
                    {"morse_index", eq.morse_index ? json(*eq.morse_index) : json(nullptr)},
                    {"hessian_det", eq.hessian_det}});
  }
  const json doc{{"n", n},
                 {"equilibria", list},
                 {"report",
                  {{"N0", report.n0},
                   {"N1", report.n1},
                   {"N2", report.n2},
                   {"N", report.total},
                   {"lower_bound_ok", report.lower_bound_ok},
                   {"euler_ok", report.euler_ok},
                   {"degenerate_found", report.degenerate_found}}}};
  return doc.dump(2);
}

ParsedResult parse_result_json(std::string_view json_text) {
  try {
    const json doc = json::parse(json_text);
    ParsedResult out;
    out.n = doc.at("n").get<int>();
    for (const auto& e : doc.at("equilibria")) {
      ResultRecord rec;
      rec.x = e.at("x").get<double>();
      rec.y = e.at("y").get<double>();
      rec.residual = e.at("residual").get<double>();
      if (!e.at("morse_index").is_null()) rec.morse_index = e.at("morse_index").get<int>();
      rec.hessian_det = e.at("hessian_det").get<double>();
      out.equilibria.push_back(rec);
    }
    const json& r = doc.at("report");
    out.n0 = r.at("N0").get<int>();
    out.n1 = r.at("N1").get<int>();
    out.n2 = r.at("N2").get<int>();
    out.lower_bound_ok = r.at("lower_bound_ok").get<bool>();
    out.euler_ok = r.at("euler_ok").get<bool>();
    out.degenerate_found = r.at("degenerate_found").get<bool>();
    return out;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed result document: ") + e.what());
  }
}

}  // namespace eqlab
