#include "conesum/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <regex>

namespace conesum {

Rational json_rational(const nlohmann::json& v) {
  if (v.is_number_integer()) return Rational(Integer(v.get<long>()));
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const std::exception& e) {
      throw ConfigError("bad rational '" + v.get<std::string>() + "'");
    }
  }
  throw ConfigError("expected an exact rational (string \"p/q\" or integer), got " + v.dump());
}

QVec json_vec(const nlohmann::json& v) {
  if (!v.is_array()) throw ConfigError("expected an array, got " + v.dump());
  QVec out;
  for (const auto& x : v) out.push_back(json_rational(x));
  return out;
}

namespace {

std::vector<QVec> json_vecs(const nlohmann::json& v) {
  if (!v.is_array()) throw ConfigError("expected an array of vectors");
  std::vector<QVec> out;
  for (const auto& x : v) out.push_back(json_vec(x));
  return out;
}

template <class T>
T get_or(const nlohmann::json& j, const char* key, T dflt) {
  if (!j.contains(key)) return dflt;
  try {
    return j.at(key).get<T>();
  } catch (const std::exception&) {
    throw ConfigError(std::string("bad value for '") + key + "'");
  }
}

IntersectionData parse_intersections(const nlohmann::json& j) {
  IntersectionData d;
  d.s = get_or<unsigned>(j, "s", 1);
  if (!j.contains("entries") || !j.at("entries").is_object()) throw ConfigError("intersections need 'entries'");
  static const std::regex key_re(R"(\(\s*\d+(\s*,\s*\d+)*\s*\))");
  for (const auto& [key, val] : j.at("entries").items()) {
    if (!std::regex_match(key, key_re)) throw ConfigError("bad intersection key '" + key + "'");
    std::vector<unsigned> k;
    std::string digits;
    for (char c : key) {
      if (std::isdigit(static_cast<unsigned char>(c))) digits += c;
      else if (!digits.empty()) {
        k.push_back(static_cast<unsigned>(std::stoul(digits)));
        digits.clear();
      }
    }
    if (d.r == 0) d.r = k.size();
    if (k.size() != d.r) throw ConfigError("intersection keys of different lengths");
    d.entries[k] = json_rational(val);
  }
  d.cross_nodes = get_or<long>(j, "cross_nodes", 0);
  return d;
}

}  // namespace

RunConfig parse_config(const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  static const std::vector<std::string> known{"field",  "module", "fan",       "x0",         "s",
                                              "N_max",  "tol",    "precision_bits", "seed", "format",
                                              "window", "unitsearch", "period_one", "intersections", "lvalue"};
  for (const auto& [key, val] : j.items())
    if (std::find(known.begin(), known.end(), key) == known.end()) throw ConfigError("unknown key '" + key + "'");

  RunConfig c;
  if (!j.contains("field") || !j.at("field").contains("min_poly")) throw ConfigError("missing field.min_poly");
  for (const auto& v : j.at("field").at("min_poly")) {
    if (!v.is_number_integer()) throw ConfigError("min_poly coefficients must be integers");
    c.min_poly.push_back(Integer(v.get<long>()));
  }
  if (c.min_poly.size() < 2 || c.min_poly.back() != 1) throw ConfigError("min_poly must be monic of degree >= 1");
  size_t n = c.min_poly.size() - 1;

  if (j.contains("module")) {
    const auto& m = j.at("module");
    if (m.contains("basis")) c.basis = json_vecs(m.at("basis"));
    if (m.contains("rho")) c.rho = json_vec(m.at("rho"));
    if (m.contains("units")) c.units = json_vecs(m.at("units"));
  }
  if (c.basis.empty())
    for (size_t i = 0; i < n; ++i) c.basis.push_back(unit_vec(n, i));
  if (c.rho.empty()) c.rho = zero_vec(n);
  for (const auto& v : c.basis)
    if (v.size() != n) throw ConfigError("module basis vectors need n coordinates");
  if (c.rho.size() != n) throw ConfigError("rho needs n coordinates");
  for (const auto& v : c.units)
    if (v.size() != n) throw ConfigError("units need n coordinates");

  if (j.contains("fan")) {
    const auto& f = j.at("fan");
    c.fan_kind = get_or<std::string>(f, "kind", "quadratic");
    if (c.fan_kind != "quadratic" && c.fan_kind != "explicit") throw ConfigError("fan.kind is quadratic or explicit");
    if (f.contains("tops"))
      for (const auto& t : f.at("tops")) c.tops.push_back(json_vecs(t));
    if (f.contains("refine_rays")) c.refine_rays = json_vecs(f.at("refine_rays"));
    if (c.fan_kind == "explicit" && c.tops.empty()) throw ConfigError("explicit fans need 'tops'");
  }
  if (j.contains("x0")) {
    c.x0 = json_vec(j.at("x0"));
    if (c.x0->size() != n) throw ConfigError("x0 needs n coordinates");
  }
  c.s = get_or<unsigned>(j, "s", c.s);
  c.N_max = get_or<long>(j, "N_max", c.N_max);
  c.tol = get_or<double>(j, "tol", c.tol);
  c.precision_bits = get_or<unsigned>(j, "precision_bits", c.precision_bits);
  c.seed = get_or<std::uint64_t>(j, "seed", c.seed);
  c.format = get_or<std::string>(j, "format", c.format);
  c.window = get_or<std::string>(j, "window", c.window);
  c.period_one = get_or<std::string>(j, "period_one", c.period_one);
  if (j.contains("unitsearch")) {
    const auto& u = j.at("unitsearch");
    if (u.contains("a")) c.a = json_rational(u.at("a"));
    if (u.contains("b")) c.b = json_rational(u.at("b"));
    c.radius = get_or<long>(u, "radius", c.radius);
    c.chart_window = get_or<long>(u, "window", c.chart_window);
  }
  if (j.contains("intersections")) c.intersections = parse_intersections(j.at("intersections"));
  if (j.contains("lvalue")) c.cutoff = get_or<double>(j.at("lvalue"), "cutoff", c.cutoff);

  if (c.N_max < 1) throw ConfigError("N_max must be positive");
  if (c.precision_bits < 64) throw ConfigError("precision_bits must be at least 64");
  if (c.format != "csv" && c.format != "json") throw ConfigError("format is csv or json");
  if (c.window != "cone_index" && c.window != "unit_powers") throw ConfigError("window is cone_index or unit_powers");
  if (c.period_one != "split-node" && c.period_one != "nodal") throw ConfigError("period_one is split-node or nodal");
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  return parse_config(j);
}

FieldPtr make_field(const RunConfig& cfg) { return TotallyRealField::make(cfg.min_poly); }

Space make_space(const RunConfig& cfg) { return Space::of_field(make_field(cfg)); }

LatticeModule make_module(const RunConfig& cfg) {
  LatticeModule M;
  M.F = make_field(cfg);
  M.basis = cfg.basis;
  M.rho = cfg.rho;
  M.V.generators = cfg.units;
  return M;
}

FanDescription make_fan(const RunConfig& cfg) {
  Space S = make_space(cfg);
  if (cfg.units.empty()) throw ConfigError("fans need module.units");
  FanDescription fan;
  if (cfg.fan_kind == "quadratic") {
    if (S.n != 2) throw ConfigError("automatic fans are quadratic only; give fan.kind = explicit");
    fan = build_quadratic_fan(S, cfg.basis, cfg.units.at(0));
  } else {
    UnitGroupData V{cfg.units};
    fan = explicit_fan(S, cfg.basis, V, cfg.tops);
  }
  for (const auto& r : cfg.refine_rays) fan = refine_insert_ray(fan, r);
  return fan;
}

}  // namespace conesum
