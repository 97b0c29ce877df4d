#include "conesum/cli.hpp"

#include <CLI11.hpp>

#include <optional>
#include <sstream>
#include <vector>

#include "conesum/config.hpp"
#include "conesum/suites.hpp"

namespace conesum {

namespace {

struct Overrides {
  std::optional<std::string> x0;
  std::optional<long> N_max;
  std::optional<double> tol;
  std::optional<unsigned> precision_bits;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> format;
  std::optional<std::string> field;
  std::optional<std::string> a, b;
  std::optional<long> radius;
  unsigned threads = 1;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

Rational flag_rational(const std::string& s, const char* flag) {
  try {
    return parse_rational(s);
  } catch (const std::exception&) {
    throw ConfigError(std::string("bad rational '") + s + "' for " + flag);
  }
}

void apply(const Overrides& o, RunConfig& c) {
  if (o.field) {
    c.min_poly.clear();
    for (const auto& t : split(*o.field, ',')) {
      try {
        c.min_poly.push_back(Integer(t));
      } catch (const std::exception&) {
        throw ConfigError("--field takes ascending integer coefficients, e.g. 1,-2,-1,1");
      }
    }
    if (c.min_poly.size() < 2 || c.min_poly.back() != 1) throw ConfigError("--field must be monic");
  }
  size_t n = c.min_poly.size() - 1;
  if (o.x0) {
    QVec x;
    for (const auto& t : split(*o.x0, ',')) x.push_back(flag_rational(t, "--x0"));
    if (x.size() != n) throw ConfigError("--x0 needs " + std::to_string(n) + " coordinates");
    c.x0 = x;
  }
  if (o.N_max) c.N_max = *o.N_max;
  if (o.tol) c.tol = *o.tol;
  if (o.precision_bits) c.precision_bits = *o.precision_bits;
  if (o.seed) c.seed = *o.seed;
  if (o.format) c.format = *o.format;
  if (o.a) c.a = flag_rational(*o.a, "--a");
  if (o.b) c.b = flag_rational(*o.b, "--b");
  if (o.radius) c.radius = *o.radius;
  if (c.N_max < 1) throw ConfigError("N_max must be positive");
  if (c.precision_bits < 64) throw ConfigError("precision_bits must be at least 64");
}

std::string decimal(const ScaledRational& v, unsigned bits) {
  mpfr_t x;
  mpfr_init2(x, bits);
  v.to_mpfr(x, bits);
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.20Re", x);
  std::string s(buf);
  mpfr_free_str(buf);
  mpfr_clear(x);
  return s;
}

std::string sci(double d) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6e", d);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

void emit_checks(std::ostream& out, const std::string& format, const nlohmann::ordered_json& header,
                 const std::vector<Check>& checks) {
  if (format == "json") {
    nlohmann::ordered_json j = header;
    j["results"] = nlohmann::json::array();
    for (const auto& c : checks) j["results"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    out << j.dump(2) << "\n";
    return;
  }
  out << "#";
  for (const auto& [k, v] : header.items()) out << " " << k << "=" << (v.is_string() ? v.get<std::string>() : v.dump());
  out << "\nname,pass,detail\n";
  for (const auto& c : checks) out << csv_field(c.name) << "," << (c.pass ? "true" : "false") << "," << csv_field(c.detail) << "\n";
}

bool all_pass(const std::vector<Check>& cs) {
  for (const auto& c : cs)
    if (!c.pass) return false;
  return true;
}

int cmd_converge(const std::string& path, const Overrides& o, std::ostream& out) {
  RunConfig cfg = load_config(path);
  apply(o, cfg);
  if (!cfg.x0) throw ConfigError("converge needs x0");
  FanDescription fan = make_fan(cfg);
  if (!fan.S.totally_positive(*cfg.x0)) throw Error(ErrorCode::NotTotallyPositive, "x0 must be totally positive");
  std::optional<WindowKind> kind;
  if (fan.seq) kind = cfg.window == "unit_powers" ? WindowKind::UnitPowers : WindowKind::ConeIndex;
  auto rows = converge(fan, *cfg.x0, cfg.N_max, 0, kind);
  bool ok = !rows.empty() && rows.back().defined && rows.back().abs_error < cfg.tol;
  if (cfg.format == "json") {
    nlohmann::json j;
    j["x0"] = to_string(*cfg.x0);
    j["target"] = to_string(rows.front().target);
    j["tol"] = cfg.tol;
    j["rows"] = nlohmann::json::array();
    for (const auto& r : rows) {
      nlohmann::json row{{"N", r.N}, {"defined", r.defined}};
      if (r.defined) {
        row["partial_sum"] = r.partial_sum.str();
        row["partial_sum_decimal"] = decimal(r.partial_sum, cfg.precision_bits);
        row["abs_error"] = r.abs_error;
      } else {
        row["note"] = r.note;
      }
      row["target"] = to_string(r.target);
      row["target_decimal"] = decimal(ScaledRational(r.target, 0, 1), cfg.precision_bits);
      j["rows"].push_back(row);
    }
    j["converged"] = ok;
    out << j.dump(2) << "\n";
  } else {
    out << "N,partial_sum_decimal,target_decimal,abs_error\n";
    for (const auto& r : rows) {
      out << r.N << ",";
      if (r.defined)
        out << decimal(r.partial_sum, cfg.precision_bits) << ",";
      else
        out << "undefined,";
      out << decimal(ScaledRational(r.target, 0, 1), cfg.precision_bits) << ",";
      out << (r.defined ? sci(r.abs_error) : "undefined") << "\n";
    }
  }
  return ok ? kOk : kPropertyFailure;
}

int cmd_verify(const std::string& suite, const std::string& path, const Overrides& o, std::ostream& out) {
  RunConfig cfg;
  const RunConfig* cp = nullptr;
  if (!path.empty()) {
    cfg = load_config(path);
    apply(o, cfg);
    cp = &cfg;
  } else {
    if (o.seed) cfg.seed = *o.seed;
    if (o.format) cfg.format = *o.format;
  }
  auto checks = run_suite(suite, cp, cfg.seed);
  emit_checks(out, cfg.format, {{"suite", suite}, {"seed", cfg.seed}}, checks);
  return all_pass(checks) ? kOk : kPropertyFailure;
}

int cmd_unitsearch(const std::string& path, const Overrides& o, std::ostream& out) {
  RunConfig cfg;
  if (!path.empty()) {
    cfg = load_config(path);
  } else {
    if (!o.field) throw ConfigError("unitsearch needs a config or --field");
    cfg.min_poly = {1};
  }
  apply(o, cfg);
  FieldPtr F = make_field(cfg);
  size_t n = F->degree();
  if (n < 3) throw Error(ErrorCode::DegreeTooSmall, "admissible units need degree >= 3");
  UnitGroupData V;
  V.generators = cfg.units;
  if (V.generators.empty()) {
    if (cfg.min_poly != std::vector<Integer>{1, -2, -1, 1})
      throw ConfigError("unitsearch needs module.units for this field");
    FieldElement t1 = F->theta();
    t1[0] += 1;
    V.generators = {F->mul(F->theta(), F->theta()), F->mul(t1, t1)};
  }
  validate_units(*F, V);
  AdmissibleCandidate cand = search_admissible(*F, V, cfg.a, cfg.b, cfg.radius);

  std::vector<Check> checks;
  for (const auto& c : check_lemma3(*F, cand).conditions) checks.push_back(c);
  for (const auto& c : check_admissible(*F, cand.units).conditions) checks.push_back({"admissible " + c.name, c.pass, c.detail});
  for (size_t j = 0; j < n; ++j) {
    HullChart ch = hull_chart(*F, cand.units, j, cfg.chart_window);
    bool pos = true;
    std::string as;
    for (const auto& v : ch.a) {
      pos = pos && v.certainly_pos();
      as += (as.empty() ? "" : " ") + v.str(12);
    }
    checks.push_back({"chart" + std::to_string(j + 1) + " exponents positive", pos, as});
    bool vert = false;
    std::string detail = "window " + std::to_string(cfg.chart_window);
    try {
      vert = verify_vertices(*F, cand.units, j, cfg.chart_window);
    } catch (const Error& e) {
      detail = e.what();
    }
    checks.push_back({"chart" + std::to_string(j + 1) + " vertices", vert, detail});
  }
  nlohmann::ordered_json header{{"command", "unitsearch"}, {"radius", cfg.radius}, {"a", to_string(cfg.a)},
                        {"b", to_string(cfg.b)}};
  std::string units, exps;
  for (size_t i = 0; i < n; ++i) {
    units += (i ? ";" : "") + to_string(cand.units[i]);
    std::string e;
    for (size_t k = 0; k < cand.exponents[i].size(); ++k) e += (k ? "," : "") + std::to_string(cand.exponents[i][k]);
    exps += (i ? ";" : "") + std::string("(") + e + ")";
  }
  header["units"] = units;
  header["exponents"] = exps;
  emit_checks(out, cfg.format, header, checks);
  return all_pass(checks) ? kOk : kPropertyFailure;
}

int exit_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::NotFound:
      return kNotFound;
    case ErrorCode::InvalidInput:
    case ErrorCode::NotIrreducible:
    case ErrorCode::NotTotallyReal:
    case ErrorCode::DegenerateRoots:
    case ErrorCode::ZeroInput:
    case ErrorCode::NotAUnit:
    case ErrorCode::NotTotallyPositive:
    case ErrorCode::UnitDoesNotPreserveM:
    case ErrorCode::DegreeTooSmall:
    case ErrorCode::RayNotRational:
    case ErrorCode::RayOnExistingFace:
    case ErrorCode::NotFullDim:
      return kConfigError;
    default:
      return kPropertyFailure;
  }
}

void error_record(std::ostream& err, const std::string& code, const std::string& message) {
  err << nlohmann::json{{"error", code}, {"message", message}}.dump() << "\n";
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact cone sums over totally real fields", "conesum"};
  app.require_subcommand(1);
  Overrides o;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--x0", o.x0, "x0 as comma separated rationals in the power basis");
    sub->add_option("--N-max", o.N_max, "largest window");
    sub->add_option("--tol", o.tol, "tolerance on the final abs_error");
    sub->add_option("--precision-bits", o.precision_bits, "MPFR working precision for decimals");
    sub->add_option("--seed", o.seed, "seed of the randomized suites");
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--threads", o.threads, "thread cap (computation is single threaded)");
  };

  std::string conv_path;
  auto* conv = app.add_subcommand("converge", "partial sums of the fan series against 1/N(x0)");
  conv->add_option("config", conv_path, "JSON config")->required();
  add_common(conv);

  std::string suite, verify_path;
  auto* ver = app.add_subcommand("verify", "run a property suite");
  ver->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
  ver->add_option("config", verify_path, "optional JSON config");
  add_common(ver);

  std::string us_path;
  auto* us = app.add_subcommand("unitsearch", "search for admissible units");
  us->add_option("config", us_path, "JSON config");
  us->add_option("--field", o.field, "ascending minimal polynomial coefficients, e.g. 1,-2,-1,1");
  us->add_option("--a", o.a, "ratio bound a");
  us->add_option("--b", o.b, "separation bound b");
  us->add_option("--radius", o.radius, "exponent search radius");
  add_common(us);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    error_record(err, "UsageError", e.what());
    return kConfigError;
  }

  try {
    if (*conv) return cmd_converge(conv_path, o, out);
    if (*ver) return cmd_verify(suite, verify_path, o, out);
    return cmd_unitsearch(us_path, o, out);
  } catch (const ConfigError& e) {
    error_record(err, "ConfigError", e.what());
    return kConfigError;
  } catch (const Error& e) {
    error_record(err, error_name(e.code()), e.what());
    return exit_for(e.code());
  }
}

}  // namespace conesum
