#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "conesum/interval.hpp"
#include "conesum/poly.hpp"
#include "conesum/scaled.hpp"

namespace conesum {

// Power-basis coordinates (1, theta, ..., theta^{n-1}).
using FieldElement = QVec;

class TotallyRealField {
 public:
  // min_poly ascending, monic
  static std::shared_ptr<const TotallyRealField> make(const std::vector<Integer>& min_poly);

  size_t degree() const { return n_; }
  const QPoly& min_poly() const { return f_; }
  const std::vector<RatInterval>& roots() const { return roots_; }
  const Integer& disc_abs() const { return D_; }
  const Rational& disc() const { return disc_; }
  const QMatrix& trace_form() const { return gram_; }

  FieldElement zero() const { return zero_vec(n_); }
  FieldElement one() const { return from_rational(1); }
  FieldElement theta() const;
  FieldElement from_rational(const Rational& q) const;
  FieldElement from_poly(const QPoly& p) const;  // reduce p(theta)

  FieldElement add(const FieldElement& x, const FieldElement& y) const { return x + y; }
  FieldElement sub(const FieldElement& x, const FieldElement& y) const { return x - y; }
  FieldElement mul(const FieldElement& x, const FieldElement& y) const;
  FieldElement inv(const FieldElement& x) const;
  FieldElement pow(const FieldElement& x, long k) const;

  QMatrix mult_matrix(const FieldElement& x) const;  // columns: x*theta^k
  Rational trace(const FieldElement& x) const;
  Rational trace_pairing(const FieldElement& x, const FieldElement& y) const;
  Rational norm(const FieldElement& x) const;
  QPoly charpoly(const FieldElement& x) const;
  bool is_rational(const FieldElement& x) const;
  bool is_algebraic_integer(const FieldElement& x) const;
  bool is_unit(const FieldElement& x) const;

  // Intervals of width <= 2^-bits, nested as bits grows.
  std::vector<RatInterval> embed(const FieldElement& x, unsigned bits) const;
  std::vector<Interval> embed_mpfr(const FieldElement& x, unsigned bits, mpfr_prec_t prec) const;
  int embedding_sign(const FieldElement& x, size_t i) const;
  bool is_totally_positive(const FieldElement& x) const;
  // For each embedding, the rank of its value among the distinct conjugates (exact).
  std::vector<int> conjugate_ranks(const FieldElement& x) const;

 private:
  size_t n_ = 0;
  QPoly f_;
  std::vector<RatInterval> roots_;
  Integer D_;
  Rational disc_;
  std::vector<Rational> power_sums_;
  QMatrix gram_;
};

using FieldPtr = std::shared_ptr<const TotallyRealField>;

struct UnitGroupData {
  std::vector<FieldElement> generators;
  size_t rank() const { return generators.size(); }
};

// Checks norms, total positivity and log independence of the generators.
void validate_units(const TotallyRealField& F, const UnitGroupData& V);

ScaledRational det_scaled(const TotallyRealField& F, const std::vector<FieldElement>& A);

// (argmin set, argmax set) of the embeddings, 0-based indices.
std::pair<std::vector<size_t>, std::vector<size_t>> limit_pair(const TotallyRealField& F,
                                                               const FieldElement& eps);

// Smallest totally positive unit > 1 of the ring of integers of Q(sqrt d), field x^2 - d.
FieldElement fundamental_unit_quadratic(long d, long bound = 10000000);

}  // namespace conesum
