#pragma once

#include <optional>
#include <string>
#include <vector>

#include "conesum/fan.hpp"

namespace conesum {

struct AdmissibleCandidate {
  std::vector<FieldElement> units;          // eps_1 .. eps_n
  std::vector<std::vector<long>> exponents;  // in the generators of V, when found by search
  Rational a, b;
};

struct Report {
  std::vector<Check> conditions;
  bool pass() const;
};

// Precision schedule for interval decisions (bits).
inline const std::vector<unsigned> kPrecisions{64, 128, 256, 512, 1024};

Report check_lemma3(const TotallyRealField& F, const AdmissibleCandidate& cand);
Report check_admissible(const TotallyRealField& F, const std::vector<FieldElement>& T);

// Scans exponent vectors of V in [-radius, radius]^(n-1), lexicographically; first hit per region.
AdmissibleCandidate search_admissible(const TotallyRealField& F, const UnitGroupData& V, const Rational& a,
                                      const Rational& b, long radius);

// Log vector of prod g_k^{c_k}, certified to the given precision.
std::vector<Interval> unit_log(const TotallyRealField& F, const UnitGroupData& V, const std::vector<long>& c,
                               mpfr_prec_t prec);
// 1 / 0 / -1 certified membership of a log vector in the region R_i (-1 = undecided at this precision).
int in_region(const std::vector<Interval>& xi, size_t i, const Rational& a, const Rational& b);

struct HullChart {
  size_t j = 0;                          // omitted place
  std::vector<size_t> I;                 // the other indices
  std::vector<Interval> a;               // exponents, (1..1) E^{-1} up to a common sign
  bool sign_flipped = false;             // (1..1) E^{-1} itself was negative
  std::vector<std::vector<long>> alpha;  // exponent vectors over I, sum zero
  std::vector<std::vector<Interval>> z;  // phi_j of the V_I points
  long window = 0;
  mpfr_prec_t prec = 128;
};

HullChart hull_chart(const TotallyRealField& F, const std::vector<FieldElement>& T, size_t j, long window,
                     mpfr_prec_t prec = 128);
// max |sum a_i log z_i| over the charted points (upper bound)
double chart_residual(const HullChart& chart);
// Every charted point is a vertex of the hull of the charted points.
bool verify_vertices(const TotallyRealField& F, const std::vector<FieldElement>& T, size_t j, long window);

// x in Sigma_N = intersection over j of eps_j^{-N} phi_j^{-1}(Pi_{I(j)}); cubic fields only.
bool sigma_N_contains(const TotallyRealField& F, const std::vector<FieldElement>& T, long N, const FieldElement& x,
                      long window);

struct ConvexityReport {
  bool all_minors_positive = true;
  double max_rel_err = 0;      // f^k prod(p_i / z_i^2) (1 + sum p_i) against finite differences
  double max_rel_err_alt = 0;  // (1 + sum p_i) prod p_i z_i^{-(n-2) p_i - 2} against finite differences
  bool matches = true;
  bool alt_matches = true;
};
double minor_closed_form(const std::vector<double>& p, const std::vector<double>& z, size_t k);
double minor_alt(const std::vector<double>& p, const std::vector<double>& z, size_t k);
ConvexityReport convexity_check(const std::vector<double>& p, const std::vector<std::vector<double>>& grid,
                                double step = 1e-4, double tol = 1e-6);

}  // namespace conesum
