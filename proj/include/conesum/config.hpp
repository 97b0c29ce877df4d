#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "conesum/arith.hpp"
#include "conesum/summation.hpp"

namespace conesum {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::vector<Integer> min_poly;  // ascending, monic
  std::vector<QVec> basis;        // module basis (default: power basis)
  QVec rho;
  std::vector<QVec> units;  // generators of V
  std::string fan_kind = "quadratic";
  std::vector<std::vector<QVec>> tops;  // explicit fans
  std::vector<QVec> refine_rays;
  std::optional<QVec> x0;
  unsigned s = 1;
  long N_max = 16;
  double tol = 1e-6;
  unsigned precision_bits = 256;
  std::uint64_t seed = 1;
  std::string format = "csv";
  std::string window = "cone_index";
  // unit search
  Rational a = 2, b = 9;
  long radius = 7;
  long chart_window = 3;
  // arithmetic
  std::string period_one = "split-node";
  std::optional<IntersectionData> intersections;
  double cutoff = 100000;
};

RunConfig parse_config(const nlohmann::json& j);
RunConfig load_config(const std::string& path);
// Rationals come as "p/q" strings or JSON integers; floats are rejected.
Rational json_rational(const nlohmann::json& v);
QVec json_vec(const nlohmann::json& v);

FieldPtr make_field(const RunConfig& cfg);
Space make_space(const RunConfig& cfg);
LatticeModule make_module(const RunConfig& cfg);
FanDescription make_fan(const RunConfig& cfg);

}  // namespace conesum
