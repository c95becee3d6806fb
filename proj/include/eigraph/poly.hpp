#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eigraph/bigint.hpp"

namespace eigraph {

// Integer polynomial, coefficients in ascending degree order.  Trailing zero
// coefficients are stripped; the zero polynomial is stored as {0}.
using IntPoly = std::vector<BigInt>;

void poly_trim(IntPoly& p);
std::size_t poly_degree(const IntPoly& p);
bool poly_is_zero(const IntPoly& p);

IntPoly poly_add(const IntPoly& a, const IntPoly& b);
IntPoly poly_sub(const IntPoly& a, const IntPoly& b);
IntPoly poly_mul(const IntPoly& a, const IntPoly& b);
IntPoly poly_neg(const IntPoly& a);
IntPoly poly_pow(const IntPoly& a, unsigned e);

BigInt poly_eval(const IntPoly& p, const BigInt& x);
double poly_eval(const IntPoly& p, double x);

// Quotient of an exact division; throws std::invalid_argument when the
// divisor does not divide evenly (nonzero remainder or coefficient that
// fails to divide).
IntPoly poly_divide_exact(const IntPoly& num, const IntPoly& den);

// p(-x-1), the substitution used by the complement and join formulas.
IntPoly poly_reflect(const IntPoly& p);

// Flips the sign so the leading coefficient is positive.  Char polys here
// follow det(A - lambda I), whose leading coefficient is (-1)^N; this puts
// them in the monic form closed formulas are quoted in.
IntPoly poly_monic(const IntPoly& p);

// Exact characteristic polynomial det(A - lambda I) of an n x n integer
// matrix (row-major) by the Faddeev-LeVerrier recurrence.  All divisions are
// exact over the integers.
IntPoly char_poly_matrix(const std::vector<std::int64_t>& a, std::size_t n);

// Char poly of the complement of an r-regular graph on n vertices:
// P_comp(lambda) = (-1)^n (lambda-n+r+1)/(lambda+r+1) P(-lambda-1).
// Throws std::invalid_argument when the division is not exact, i.e. the
// input was not the char poly of an r-regular graph.
IntPoly complement_charpoly_regular(const IntPoly& p, std::size_t n, std::size_t r);

// Char poly of a join from the char polys of both parts and both
// complements:
// P(lambda) = (-1)^{n2} P1(lambda) Q2(-lambda-1)
//           + (-1)^{n1} P2(lambda) Q1(-lambda-1)
//           - (-1)^{n1+n2} Q1(-lambda-1) Q2(-lambda-1)
// where Qi is the char poly of the complement of part i.
IntPoly join_charpoly(const IntPoly& p1, const IntPoly& p2,
                      const IntPoly& pc1, const IntPoly& pc2);

std::vector<std::string> poly_decimal_strings(const IntPoly& p);
std::string poly_display(const IntPoly& p);

} // namespace eigraph
