#pragma once

#include <utility>
#include <vector>

#include "conesum/rational.hpp"

namespace conesum {

// Coefficients in ascending order; the zero polynomial is empty.
using QPoly = std::vector<Rational>;

struct RatInterval {
  Rational lo, hi;
};

namespace poly {

void trim(QPoly& p);
int degree(const QPoly& p);
QPoly add(const QPoly& a, const QPoly& b);
QPoly sub(const QPoly& a, const QPoly& b);
QPoly mul(const QPoly& a, const QPoly& b);
void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r);
QPoly rem(const QPoly& a, const QPoly& b);
QPoly gcd(QPoly a, QPoly b);  // monic
QPoly derivative(const QPoly& p);
QPoly make_monic(const QPoly& p);
Rational eval(const QPoly& p, const Rational& x);
RatInterval eval(const QPoly& p, const RatInterval& x);

Rational resultant(const QPoly& a, const QPoly& b);
Rational discriminant(const QPoly& p);
QPoly squarefree_part(const QPoly& p);

// Sturm sequence of a squarefree polynomial.
std::vector<QPoly> sturm_sequence(const QPoly& p);
int sign_variations(const std::vector<QPoly>& seq, const Rational& x);
// number of distinct real roots in (a, b]
int count_roots(const std::vector<QPoly>& seq, const Rational& a, const Rational& b);
int count_real_roots(const QPoly& p);
Rational root_bound(const QPoly& p);

// Disjoint closed isolating intervals for the real roots of a squarefree p, increasing.
std::vector<RatInterval> isolate_real_roots(const QPoly& p);

// Halves an isolating interval of a squarefree p (canonical midpoint bisection).
RatInterval bisect_root(const QPoly& p, const RatInterval& iv);

// Characteristic polynomial det(tI - A), monic (Faddeev-LeVerrier).
QPoly charpoly(const QMatrix& a);

}  // namespace poly
}  // namespace conesum
