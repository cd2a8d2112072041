#pragma once

#include <vector>

#include "hopfdom/cyclo.hpp"
#include "hopfdom/ratpoly.hpp"

namespace hopfdom {

/// Polynomial in the indeterminate q with rational coefficients.
using QPolynomial = RatPoly;

/// [n]_q = 1 + q + ... + q^(n-1); [0]_q = 0.
QPolynomial q_integer(int n);

/// Gaussian binomial (a choose r)_q; zero when r lies outside [0, a].
/// Computed by the product formula with exact polynomial division.
QPolynomial gauss_binomial(int a, int r);

/// Evaluates p at the field element q.
CycloScalar evaluate(const QPolynomial& p, const CycloScalar& q);

/// True iff (a choose r)_xi == 0 for every 0 < r < a. The answer is
/// cross-checked against "xi has multiplicative order exactly a"; a
/// disagreement throws std::logic_error.
bool vanishes_at(int a, const CycloScalar& xi);

/// Coefficients c_0..c_a with (u + v)^a = sum_r c_r u^(a-r) v^r whenever
/// v u = q u v. Monomials are written with u-powers to the left of v-powers;
/// every q-commuting power expansion in the library goes through here.
std::vector<CycloScalar> skew_binomial_expand(int a, const CycloScalar& q);

}  // namespace hopfdom
