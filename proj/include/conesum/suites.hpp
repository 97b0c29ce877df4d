#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "conesum/config.hpp"
#include "conesum/cycles.hpp"
#include "conesum/unitsearch.hpp"

namespace conesum {

// Portable draws from a 64-bit Mersenne twister (no distribution objects, so streams match everywhere).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}
  long uniform(long lo, long hi) { return lo + static_cast<long>(g_() % static_cast<std::uint64_t>(hi - lo + 1)); }
  Rational rational(long num_bound, long den_bound) {
    Rational q(uniform(-num_bound, num_bound), uniform(1, den_bound));
    q.canonicalize();
    return q;
  }
  QVec int_vec(size_t n, long bound);
  QVec rat_vec(size_t n, long num_bound, long den_bound);

 private:
  std::mt19937_64 g_;
};

inline constexpr long kHurwitzSamples = 4000000;

// Fields used by the randomized suites: degrees 2, 3, 4.
FieldPtr test_field(size_t n);

std::vector<Check> suite_cocycle(std::uint64_t seed, int tuples = 100, int points = 20);
std::vector<Check> suite_theorem2(std::uint64_t seed, int random_polygons = 10);
std::vector<Check> suite_hurwitz(std::uint64_t seed, int instances = 50, long samples = kHurwitzSamples);
// With a config: also compares its intersection data (or the data of its fan) against the numeric L-value.
std::vector<Check> suite_satake(bool numeric = true, const RunConfig* cfg = nullptr);
std::vector<Check> suite_lemma1(std::uint64_t seed);
std::vector<Check> suite_goodfan();
std::vector<Check> suite_lemma3(const RunConfig* cfg);

const std::vector<std::string>& suite_names();
std::vector<Check> run_suite(const std::string& name, const RunConfig* cfg, std::uint64_t seed);

// Random convex polygon (vertices in counterclockwise order) from up to k lattice points in [-b, b]^2.
std::vector<QVec> random_convex_polygon(Rng& rng, int k, long b);

}  // namespace conesum
