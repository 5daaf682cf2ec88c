#include "sunflower/bigmath.hpp"

#include <cctype>
#include <stdexcept>

namespace sunflower {

BigRat make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
  BigRat q(num, den);
  q.canonicalize();
  return q;
}

BigRat make_rational(long num, long den) {
  return make_rational(BigInt(num), BigInt(den));
}

std::optional<BigRat> parse_rational(std::string_view text) {
  if (text.empty()) return std::nullopt;
  const auto slash = text.find('/');
  const auto is_int = [](std::string_view s) {
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  std::string num(text.substr(0, slash));
  std::string den = slash == std::string_view::npos
                        ? std::string("1")
                        : std::string(text.substr(slash + 1));
  if (!is_int(num) || !is_int(den)) return std::nullopt;
  BigInt d(den);
  if (d == 0) return std::nullopt;
  return make_rational(BigInt(num), d);
}

std::string rational_string(const BigRat& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

BigInt pow_int(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

BigRat pow_rat(const BigRat& base, long e) {
  if (e == 0) return BigRat(1);
  if (e < 0 && base == 0)
    throw std::invalid_argument("pow_rat: zero base with negative exponent");
  const auto ue = static_cast<unsigned long>(e < 0 ? -e : e);
  BigInt num = pow_int(base.get_num(), ue);
  BigInt den = pow_int(base.get_den(), ue);
  return e > 0 ? make_rational(num, den) : make_rational(den, num);
}

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt floor_rat(const BigRat& q) {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

BigInt ceil_rat(const BigRat& q) {
  BigInt r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

namespace {

// floor of the k-th root of num/den: the unique t >= 0 with
// t^k * den <= num < (t+1)^k * den.
BigInt floor_root(const BigInt& num, const BigInt& den, unsigned long k) {
  if (num < 0 || den <= 0)
    throw std::invalid_argument("floor_root: requires num >= 0, den > 0");
  BigInt quot = num / den;  // truncation toward zero == floor for nonnegatives
  BigInt t;
  mpz_root(t.get_mpz_t(), quot.get_mpz_t(), k);
  // mpz_root of floor(num/den) can undershoot the true root of num/den by at
  // most one; nudge until the defining inequalities hold.
  while (pow_int(t + 1, k) * den <= num) ++t;
  while (t > 0 && pow_int(t, k) * den > num) --t;
  return t;
}

}  // namespace

BigInt floor_sqrt(const BigInt& num, const BigInt& den) {
  return floor_root(num, den, 2);
}

BigInt floor_cbrt(const BigInt& num, const BigInt& den) {
  return floor_root(num, den, 3);
}

}  // namespace sunflower
