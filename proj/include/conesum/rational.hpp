#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "conesum/error.hpp"

namespace conesum {

using Integer = mpz_class;
using Rational = mpq_class;
using QVec = std::vector<Rational>;
using QMatrix = std::vector<QVec>;  // row major

Rational parse_rational(const std::string& s);
std::string to_string(const Rational& q);
std::string to_string(const QVec& v);

QVec zero_vec(size_t n);
QVec unit_vec(size_t n, size_t i);
QMatrix identity(size_t n);
QMatrix zero_matrix(size_t rows, size_t cols);
QMatrix transpose(const QMatrix& a);
QMatrix mat_mul(const QMatrix& a, const QMatrix& b);
QVec mat_vec(const QMatrix& a, const QVec& v);
// v^T A (row vector times matrix)
QVec vec_mat(const QVec& v, const QMatrix& a);

QVec operator+(const QVec& a, const QVec& b);
QVec operator-(const QVec& a, const QVec& b);
QVec operator-(const QVec& a);
QVec operator*(const Rational& s, const QVec& a);
Rational dot(const QVec& a, const QVec& b);
bool is_zero(const QVec& v);

Rational det(QMatrix a);
size_t rank(QMatrix a);

// Reduced row echelon form; returns the pivot columns.
std::vector<size_t> rref(QMatrix& a);

// Nonzero rows of rref(rows): canonical basis of the row space.
QMatrix row_space_basis(const QMatrix& rows);

// Basis of {x : a x = 0}.
QMatrix nullspace(const QMatrix& a);

// Solves a x = b; returns false when inconsistent. Picks the solution with free variables zero.
bool solve(const QMatrix& a, const QVec& b, QVec& x);

QMatrix inverse(const QMatrix& a);

// Scales v by a positive rational so its entries are coprime integers.
QVec primitive_integer(const QVec& v);

// Projective key: first nonzero entry equal to 1.
QVec proj_normalize(const QVec& v);
// Positive rescaling so that the first nonzero entry is +1 or -1.
QVec ray_normalize(const QVec& v);

int sign(const Rational& q);

}  // namespace conesum
