#include "sunflower/interval.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace sunflower {

Interval::Interval(long prec) : prec_(prec) {
  if (prec < 8) throw std::invalid_argument("Interval: precision too small");
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(long prec, bool) : prec_(prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
}

Interval::Interval(const Interval& other) : prec_(other.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set(lo_, other.lo_, MPFR_RNDD);  // same precision, exact
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept : prec_(other.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
}

Interval& Interval::operator=(const Interval& other) {
  if (this != &other) {
    Interval tmp(other);
    mpfr_swap(lo_, tmp.lo_);
    mpfr_swap(hi_, tmp.hi_);
    prec_ = tmp.prec_;
  }
  return *this;
}

Interval& Interval::operator=(Interval&& other) noexcept {
  if (this != &other) {
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
    std::swap(prec_, other.prec_);
  }
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Interval Interval::of(long v, long prec) {
  Interval r(prec, true);
  mpfr_set_si(r.lo_, v, MPFR_RNDD);
  mpfr_set_si(r.hi_, v, MPFR_RNDU);
  return r;
}

Interval Interval::of(const BigInt& v, long prec) {
  Interval r(prec, true);
  mpfr_set_z(r.lo_, v.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(r.hi_, v.get_mpz_t(), MPFR_RNDU);
  return r;
}

Interval Interval::of(const BigRat& v, long prec) {
  Interval r(prec, true);
  mpfr_set_q(r.lo_, v.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, v.get_mpq_t(), MPFR_RNDU);
  return r;
}

Interval Interval::from_bounds(const BigRat& lo, const BigRat& hi, long prec) {
  if (lo > hi) throw std::invalid_argument("Interval::from_bounds: lo > hi");
  Interval r(prec, true);
  mpfr_set_q(r.lo_, lo.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, hi.get_mpq_t(), MPFR_RNDU);
  return r;
}

Interval Interval::pi(long prec) {
  Interval r(prec, true);
  mpfr_const_pi(r.lo_, MPFR_RNDD);
  mpfr_const_pi(r.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::operator+(const Interval& rhs) const {
  Interval r(std::max(prec_, rhs.prec_), true);
  mpfr_add(r.lo_, lo_, rhs.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, hi_, rhs.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::operator-(const Interval& rhs) const {
  Interval r(std::max(prec_, rhs.prec_), true);
  mpfr_sub(r.lo_, lo_, rhs.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, hi_, rhs.lo_, MPFR_RNDU);
  return r;
}

Interval Interval::operator*(const Interval& rhs) const {
  // Endpoint products with both rounding directions; the true range is
  // bracketed by the min of the downward and the max of the upward products.
  Interval r(std::max(prec_, rhs.prec_), true);
  mpfr_t t;
  mpfr_init2(t, r.prec_);
  const mpfr_srcptr a[2] = {lo_, hi_};
  const mpfr_srcptr b[2] = {rhs.lo_, rhs.hi_};
  bool first = true;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      mpfr_mul(t, a[i], b[j], MPFR_RNDD);
      if (first || mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
      mpfr_mul(t, a[i], b[j], MPFR_RNDU);
      if (first || mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
      first = false;
    }
  }
  mpfr_clear(t);
  return r;
}

Interval Interval::operator/(const Interval& rhs) const {
  if (mpfr_sgn(rhs.lo_) <= 0 && mpfr_sgn(rhs.hi_) >= 0)
    throw std::domain_error("Interval: division by interval containing zero");
  Interval r(std::max(prec_, rhs.prec_), true);
  mpfr_t t;
  mpfr_init2(t, r.prec_);
  const mpfr_srcptr a[2] = {lo_, hi_};
  const mpfr_srcptr b[2] = {rhs.lo_, rhs.hi_};
  bool first = true;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      mpfr_div(t, a[i], b[j], MPFR_RNDD);
      if (first || mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
      mpfr_div(t, a[i], b[j], MPFR_RNDU);
      if (first || mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
      first = false;
    }
  }
  mpfr_clear(t);
  return r;
}

Interval Interval::operator-() const {
  Interval r(prec_, true);
  mpfr_neg(r.lo_, hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  return r;
}

Interval Interval::log() const {
  if (mpfr_sgn(lo_) <= 0)
    throw std::domain_error("Interval::log: lower endpoint not positive");
  Interval r(prec_, true);
  mpfr_log(r.lo_, lo_, MPFR_RNDD);
  mpfr_log(r.hi_, hi_, MPFR_RNDU);
  return r;
}

Interval Interval::exp() const {
  Interval r(prec_, true);
  mpfr_exp(r.lo_, lo_, MPFR_RNDD);
  mpfr_exp(r.hi_, hi_, MPFR_RNDU);
  return r;
}

Interval Interval::pow(unsigned long e) const {
  Interval r(prec_, true);
  if (e == 0) {
    mpfr_set_si(r.lo_, 1, MPFR_RNDD);
    mpfr_set_si(r.hi_, 1, MPFR_RNDU);
    return r;
  }
  const bool even = (e % 2 == 0);
  if (mpfr_sgn(lo_) >= 0) {  // monotone increasing on [0, inf)
    mpfr_pow_ui(r.lo_, lo_, e, MPFR_RNDD);
    mpfr_pow_ui(r.hi_, hi_, e, MPFR_RNDU);
  } else if (mpfr_sgn(hi_) <= 0) {
    if (even) {  // decreasing on (-inf, 0]
      mpfr_pow_ui(r.lo_, hi_, e, MPFR_RNDD);
      mpfr_pow_ui(r.hi_, lo_, e, MPFR_RNDU);
    } else {  // increasing
      mpfr_pow_ui(r.lo_, lo_, e, MPFR_RNDD);
      mpfr_pow_ui(r.hi_, hi_, e, MPFR_RNDU);
    }
  } else {  // straddles zero
    if (even) {
      mpfr_t t;
      mpfr_init2(t, prec_);
      mpfr_pow_ui(t, lo_, e, MPFR_RNDU);
      mpfr_pow_ui(r.hi_, hi_, e, MPFR_RNDU);
      if (mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
      mpfr_set_zero(r.lo_, 1);
      mpfr_clear(t);
    } else {
      mpfr_pow_ui(r.lo_, lo_, e, MPFR_RNDD);
      mpfr_pow_ui(r.hi_, hi_, e, MPFR_RNDU);
    }
  }
  return r;
}

bool Interval::is_positive() const { return mpfr_sgn(lo_) > 0; }
bool Interval::is_negative() const { return mpfr_sgn(hi_) < 0; }

Tern Interval::less(const Interval& rhs) const {
  if (mpfr_cmp(hi_, rhs.lo_) < 0) return Tern::True;
  if (mpfr_cmp(lo_, rhs.hi_) >= 0) return Tern::False;
  return Tern::Unknown;
}

Tern Interval::less_equal(const Interval& rhs) const {
  if (mpfr_cmp(hi_, rhs.lo_) <= 0) return Tern::True;
  if (mpfr_cmp(lo_, rhs.hi_) > 0) return Tern::False;
  return Tern::Unknown;
}

namespace {

std::string format_endpoint(mpfr_srcptr v, int digits, mpfr_rnd_t rnd) {
  // Format buffer sized for sign, mantissa, exponent and terminator.
  std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
  const char* fmt = rnd == MPFR_RNDD ? "%.*RDe" : "%.*RUe";
  mpfr_snprintf(buf.data(), buf.size(), fmt, digits, v);
  return std::string(buf.data());
}

}  // namespace

std::string Interval::lo_string(int digits) const {
  return format_endpoint(lo_, digits, MPFR_RNDD);
}

std::string Interval::hi_string(int digits) const {
  return format_endpoint(hi_, digits, MPFR_RNDU);
}

std::string Interval::str(int digits) const {
  return "[" + lo_string(digits) + ", " + hi_string(digits) + "]";
}

}  // namespace sunflower
