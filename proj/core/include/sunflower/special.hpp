#pragma once

#include "sunflower/bigmath.hpp"
#include "sunflower/interval.hpp"
#include "sunflower/verdict.hpp"

namespace sunflower {

// s(t) = sum_{j>=1} t^j / (j(j+1))  for t in (0,1).
//
// Closed form: s(t) = 1 + (1/t - 1) ln(1-t). The series and the closed form
// must agree; tests pin both against each other.
Interval s_closed(const BigRat& t, long prec = Interval::kDefaultPrecision);

// Partial sum of `terms` leading terms, widened by the tail bound
// t^{T+1} / ((T+1)(1-t)). Both endpoints are exact rationals before rounding.
Interval s_series(const BigRat& t, unsigned long terms,
                  long prec = Interval::kDefaultPrecision);

// Two-sided window around ln C(x,y). With
//   z = ln C(x,y) - y[ln(x/y) + 1 - s(y/x)] - (1/2) ln(x / (2 pi y (x-y))),
// checks
//   1/(12x+1) - 1/(12y) - 1/(12(x-y))  <  z  <  1/(12x) - 1/(12y+1) - 1/(12(x-y)+1).
// Requires 0 < y < x. Claim id "lemma-a.1".
VerdictReport lemma_asymptotic_check(long x, long y,
                                     long prec = Interval::kDefaultPrecision);

// Additive error of the binomial shift C(x,y) -> C(x-y, y-j):
//   | ln C(x,y) - ln C(x-y,y-j) - j(ln(x/y)+1) - (y-j+1/2) ln(1-j/y) |
//     <  (3y/2x)(j + 2y ln 2) + 1/4 + (1/2) ln(3/2).
// Hypothesis x >= 3y (vacuous otherwise); requires 0 <= j < y.
// Claim id "lemma-a.2".
VerdictReport lemma_asymptotic1_check(long x, long y, long j,
                                      long prec = Interval::kDefaultPrecision);

// C(x,y) < (e x / y)^y for 1 <= y <= x. Claim id "eq-2.3".
VerdictReport binom_upper_check(long x, long y,
                                long prec = Interval::kDefaultPrecision);

}  // namespace sunflower
