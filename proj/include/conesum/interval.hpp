#pragma once

#include <mpfr.h>

#include <string>

#include "conesum/rational.hpp"

namespace conesum {

// Closed real interval [lo, hi] with MPFR endpoints, outward rounded.
class Interval {
 public:
  explicit Interval(mpfr_prec_t prec = 128);
  Interval(const Rational& q, mpfr_prec_t prec);
  Interval(const Rational& lo, const Rational& hi, mpfr_prec_t prec);
  Interval(const Interval& o);
  Interval& operator=(const Interval& o);
  ~Interval();

  mpfr_prec_t prec() const { return prec_; }
  const mpfr_t& lo() const { return lo_; }
  const mpfr_t& hi() const { return hi_; }

  Interval operator+(const Interval& o) const;
  Interval operator-(const Interval& o) const;
  Interval operator-() const;
  Interval operator*(const Interval& o) const;
  Interval operator/(const Interval& o) const;
  Interval log() const;
  Interval exp() const;

  // certified relations: true only when they hold for every pair of points
  bool certainly_pos() const { return mpfr_sgn(lo_) > 0; }
  bool certainly_neg() const { return mpfr_sgn(hi_) < 0; }
  bool certainly_less(const Interval& o) const { return mpfr_less_p(hi_, o.lo_); }
  bool certainly_greater(const Interval& o) const { return o.certainly_less(*this); }
  bool contains_zero() const { return !certainly_pos() && !certainly_neg(); }
  bool contains(const Interval& o) const;
  bool overlaps(const Interval& o) const;

  double lo_d() const { return mpfr_get_d(lo_, MPFR_RNDD); }
  double hi_d() const { return mpfr_get_d(hi_, MPFR_RNDU); }
  double mid_d() const;
  double width_d() const;
  std::string str(int digits = 17) const;

 private:
  mpfr_prec_t prec_;
  mpfr_t lo_, hi_;
};

}  // namespace conesum
