#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace sunflower {

// Exact arbitrary-precision integers and rationals. All counting in this
// library is done on these types; floating point only ever appears behind
// the directed-rounding Interval type.
using BigInt = mpz_class;
using BigRat = mpq_class;

// mpq_class(num, den) keeps the fraction as given; every construction from a
// numerator/denominator pair must go through here so values are canonical.
BigRat make_rational(const BigInt& num, const BigInt& den);
BigRat make_rational(long num, long den);

// Accepts "p" or "p/q" with optional sign, q > 0 after canonicalization.
std::optional<BigRat> parse_rational(std::string_view text);

// Canonical "p/q" with q >= 1, used by the family text format.
std::string rational_string(const BigRat& q);

BigInt pow_int(const BigInt& base, unsigned long e);

// base^e for any integer e; base must be nonzero when e < 0.
BigRat pow_rat(const BigRat& base, long e);

BigInt factorial(unsigned long n);

// Floor and ceiling of a rational, exact.
BigInt floor_rat(const BigRat& q);
BigInt ceil_rat(const BigRat& q);

// floor(sqrt(num/den)) and floor(cbrt(num/den)) for num >= 0, den > 0.
// Decided by integer power comparisons, never by floating point.
BigInt floor_sqrt(const BigInt& num, const BigInt& den);
BigInt floor_cbrt(const BigInt& num, const BigInt& den);

}  // namespace sunflower
