#pragma once

#include <mpfr.h>

#include <string>

#include "conesum/rational.hpp"

namespace conesum {

// Exact value q * sqrt(D)^e with e in {-1, 0, 1}.
class ScaledRational {
 public:
  ScaledRational() : q_(0), e_(0), D_(1) {}
  ScaledRational(const Rational& q, int e, const Integer& D);
  static ScaledRational zero(const Integer& D) { return ScaledRational(0, 0, D); }

  const Rational& q() const { return q_; }
  int e() const { return e_; }
  const Integer& D() const { return D_; }
  bool is_zero() const { return q_ == 0; }
  int sign() const { return sgn(q_); }

  ScaledRational operator-() const { return ScaledRational(-q_, e_, D_); }
  ScaledRational& operator+=(const ScaledRational& o);
  ScaledRational& operator-=(const ScaledRational& o) { return *this += -o; }
  friend ScaledRational operator+(ScaledRational a, const ScaledRational& b) { return a += b; }
  friend ScaledRational operator-(ScaledRational a, const ScaledRational& b) { return a -= b; }
  friend ScaledRational operator*(const ScaledRational& a, const ScaledRational& b);
  friend ScaledRational operator/(const ScaledRational& a, const ScaledRational& b);
  friend ScaledRational operator*(const Rational& r, const ScaledRational& a) {
    return ScaledRational(r * a.q_, a.e_, a.D_);
  }
  bool operator==(const ScaledRational& o) const;
  bool operator!=(const ScaledRational& o) const { return !(*this == o); }

  // sign of (value - r), exact
  int compare(const Rational& r) const;

  void to_mpfr(mpfr_t out, mpfr_prec_t prec) const;
  double to_double() const;
  std::string str() const;

 private:
  void reduce();
  Rational q_;
  int e_;
  Integer D_;
};

// |a - r| as a double, computed at the given working precision.
double abs_difference(const ScaledRational& a, const Rational& r, mpfr_prec_t prec = 256);

}  // namespace conesum
