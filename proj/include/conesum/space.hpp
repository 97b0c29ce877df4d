#pragma once

#include "conesum/field.hpp"

namespace conesum {

// R^n with a rational positive definite pairing <x,y> = x^T G y, D = det G.
// Either the trace form of a field (points are field elements) or the standard product.
struct Space {
  size_t n = 0;
  QMatrix G;
  Integer D = 1;
  FieldPtr field;

  static Space standard(size_t n);
  static Space of_field(FieldPtr F);

  Rational pair(const QVec& x, const QVec& y) const;
  // the G-dual point of a linear functional given by coefficients c (c(x) = c . x)
  QVec functional_to_point(const QVec& c) const;
  Rational norm(const QVec& x) const;
  bool totally_positive(const QVec& x) const;
  int embedding_sign(const QVec& x, size_t i) const;
  ScaledRational det_scaled(const std::vector<QVec>& A) const;
  ScaledRational scalar(const Rational& q) const { return ScaledRational(q, 0, D); }
};

}  // namespace conesum
