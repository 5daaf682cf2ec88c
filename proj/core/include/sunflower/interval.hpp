#pragma once

#include <mpfr.h>

#include <string>

#include "sunflower/bigmath.hpp"

namespace sunflower {

// Three-valued truth for comparisons of interval-represented reals.
enum class Tern { True, False, Unknown };

// Outward-rounded real interval backed by MPFR. The invariant maintained by
// every operation: the mathematically exact value of the expression lies in
// [lo, hi]. Lower endpoints round toward -infinity, upper endpoints toward
// +infinity, so the invariant survives composition. A comparison that the
// current width cannot decide returns Tern::Unknown; callers surface that as
// an "inconclusive" verdict and may retry at higher precision.
//
// Value type: copyable, movable, no shared state. Not thread-safe to mutate
// concurrently, freely usable from multiple threads otherwise.
class Interval {
 public:
  static constexpr long kDefaultPrecision = 128;

  explicit Interval(long prec = kDefaultPrecision);  // [0, 0]
  Interval(const Interval& other);
  Interval(Interval&& other) noexcept;
  Interval& operator=(const Interval& other);
  Interval& operator=(Interval&& other) noexcept;
  ~Interval();

  static Interval of(long v, long prec = kDefaultPrecision);
  static Interval of(const BigInt& v, long prec = kDefaultPrecision);
  static Interval of(const BigRat& v, long prec = kDefaultPrecision);
  // [lo, hi] from exact rational endpoints; requires lo <= hi.
  static Interval from_bounds(const BigRat& lo, const BigRat& hi,
                              long prec = kDefaultPrecision);
  static Interval pi(long prec = kDefaultPrecision);

  long precision() const { return prec_; }

  Interval operator+(const Interval& rhs) const;
  Interval operator-(const Interval& rhs) const;
  Interval operator*(const Interval& rhs) const;
  // Requires rhs to be sign-definite (zero not in [rhs.lo, rhs.hi]).
  Interval operator/(const Interval& rhs) const;
  Interval operator-() const;

  // Requires lo > 0.
  Interval log() const;
  Interval exp() const;
  // Integer power, any sign pattern of the base; e >= 0.
  Interval pow(unsigned long e) const;

  bool is_positive() const;  // lo > 0
  bool is_negative() const;  // hi < 0

  // Is *this < rhs / *this <= rhs as real numbers? True and False are
  // certain; Unknown means the intervals overlap too much to tell.
  Tern less(const Interval& rhs) const;
  Tern less_equal(const Interval& rhs) const;

  // Decimal endpoint strings, outward-rounded so the printed interval still
  // contains the true value.
  std::string lo_string(int digits = 20) const;
  std::string hi_string(int digits = 20) const;
  std::string str(int digits = 12) const;  // "[lo, hi]"

 private:
  Interval(long prec, bool);  // uninitialized-value tag used internally
  mpfr_t lo_;
  mpfr_t hi_;
  long prec_;
};

}  // namespace sunflower
