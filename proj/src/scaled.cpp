#include "conesum/scaled.hpp"

namespace conesum {

ScaledRational::ScaledRational(const Rational& q, int e, const Integer& D) : q_(q), e_(e), D_(D) {
  if (D_ <= 0) throw Error(ErrorCode::InvalidInput, "ScaledRational needs D > 0");
  reduce();
}

void ScaledRational::reduce() {
  while (e_ >= 2) {
    q_ *= D_;
    e_ -= 2;
  }
  while (e_ <= -2) {
    q_ /= D_;
    e_ += 2;
  }
  if (q_ == 0 || D_ == 1) e_ = 0;
}

ScaledRational& ScaledRational::operator+=(const ScaledRational& o) {
  if (o.q_ == 0) return *this;
  if (q_ == 0) {
    *this = o;
    return *this;
  }
  if (D_ != o.D_) throw Error(ErrorCode::InvalidInput, "ScaledRational with different D");
  if (e_ == o.e_) {
    q_ += o.q_;
  } else if (e_ == -1 && o.e_ == 1) {
    q_ += o.q_ * D_;  // q sqrt(D) = (q D) / sqrt(D)
  } else if (e_ == 1 && o.e_ == -1) {
    q_ += o.q_ / D_;
  } else {
    throw Error(ErrorCode::InvalidInput, "adding ScaledRationals with different exponents");
  }
  reduce();
  return *this;
}

ScaledRational operator*(const ScaledRational& a, const ScaledRational& b) {
  if (a.D_ != b.D_ && a.q_ != 0 && b.q_ != 0 && a.D_ != 1 && b.D_ != 1)
    throw Error(ErrorCode::InvalidInput, "ScaledRational with different D");
  Integer D = a.D_ == 1 ? b.D_ : a.D_;
  return ScaledRational(a.q_ * b.q_, a.e_ + b.e_, D);
}

ScaledRational operator/(const ScaledRational& a, const ScaledRational& b) {
  if (b.q_ == 0) throw Error(ErrorCode::ZeroInput, "division by zero ScaledRational");
  Integer D = a.D_ == 1 ? b.D_ : a.D_;
  return ScaledRational(a.q_ / b.q_, a.e_ - b.e_, D);
}

bool ScaledRational::operator==(const ScaledRational& o) const {
  if (q_ == 0 || o.q_ == 0) return q_ == o.q_;
  if (D_ != o.D_) return false;
  if (e_ == o.e_) return q_ == o.q_;
  if (e_ == -1 && o.e_ == 1) return q_ == o.q_ * D_;
  if (e_ == 1 && o.e_ == -1) return q_ * D_ == o.q_;
  return false;
}

int ScaledRational::compare(const Rational& r) const {
  if (e_ == 0) return sgn(q_ - r);
  // value = q sqrt(D)^e, irrational unless D square; compare by signs and squares
  int sv = sgn(q_), sr = sgn(r);
  if (sv != sr) return sv > sr ? 1 : -1;
  if (sv == 0) return 0;
  Rational v2 = q_ * q_;
  if (e_ == 1)
    v2 *= D_;
  else
    v2 /= D_;
  Rational r2 = r * r;
  int c = sgn(v2 - r2);
  return sv > 0 ? c : -c;
}

void ScaledRational::to_mpfr(mpfr_t out, mpfr_prec_t prec) const {
  mpfr_set_prec(out, prec);
  mpfr_set_q(out, q_.get_mpq_t(), MPFR_RNDN);
  if (e_ != 0) {
    mpfr_t s;
    mpfr_init2(s, prec);
    mpfr_set_z(s, D_.get_mpz_t(), MPFR_RNDN);
    mpfr_sqrt(s, s, MPFR_RNDN);
    if (e_ > 0)
      mpfr_mul(out, out, s, MPFR_RNDN);
    else
      mpfr_div(out, out, s, MPFR_RNDN);
    mpfr_clear(s);
  }
}

double ScaledRational::to_double() const {
  mpfr_t v;
  mpfr_init2(v, 128);
  to_mpfr(v, 128);
  double d = mpfr_get_d(v, MPFR_RNDN);
  mpfr_clear(v);
  return d;
}

std::string ScaledRational::str() const {
  if (e_ == 0) return q_.get_str();
  std::string s = "(" + q_.get_str() + ")";
  return s + (e_ > 0 ? "*" : "/") + "√" + D_.get_str();
}

double abs_difference(const ScaledRational& a, const Rational& r, mpfr_prec_t prec) {
  mpfr_t v, t;
  mpfr_init2(v, prec);
  mpfr_init2(t, prec);
  a.to_mpfr(v, prec);
  mpfr_set_q(t, r.get_mpq_t(), MPFR_RNDN);
  mpfr_sub(v, v, t, MPFR_RNDN);
  mpfr_abs(v, v, MPFR_RNDN);
  double d = mpfr_get_d(v, MPFR_RNDU);
  mpfr_clear(v);
  mpfr_clear(t);
  return d;
}

}  // namespace conesum
