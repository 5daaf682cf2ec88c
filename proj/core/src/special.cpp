#include "sunflower/special.hpp"

#include <stdexcept>

#include "sunflower/binom.hpp"

namespace sunflower {

namespace {

void require_unit_open(const BigRat& t, const char* who) {
  if (t <= 0 || t >= 1)
    throw std::invalid_argument(std::string(who) + ": t must lie in (0,1)");
}

Verdict combine_strict(Tern a, Tern b) {
  if (a == Tern::False || b == Tern::False) return Verdict::Fails;
  if (a == Tern::True && b == Tern::True) return Verdict::Holds;
  return Verdict::Inconclusive;
}

}  // namespace

Interval s_closed(const BigRat& t, long prec) {
  require_unit_open(t, "s_closed");
  const BigRat coeff = BigRat(1) / t - 1;
  return Interval::of(1L, prec) +
         Interval::of(coeff, prec) * Interval::of(BigRat(1) - t, prec).log();
}

Interval s_series(const BigRat& t, unsigned long terms, long prec) {
  require_unit_open(t, "s_series");
  if (terms == 0) throw std::invalid_argument("s_series: need at least one term");
  BigRat partial(0);
  BigRat tp(1);
  for (unsigned long j = 1; j <= terms; ++j) {
    tp *= t;
    partial += tp / BigRat(BigInt(j) * BigInt(j + 1));
  }
  // Remaining terms are dominated by the geometric series with ratio t and
  // the constant factor 1/(T+1), so the tail is below t^{T+1}/((T+1)(1-t)).
  const BigRat tail = tp * t / (BigRat(BigInt(terms + 1)) * (BigRat(1) - t));
  return Interval::from_bounds(partial, partial + tail, prec);
}

VerdictReport lemma_asymptotic_check(long x, long y, long prec) {
  StopWatch watch;
  if (y < 1 || y >= x)
    throw std::invalid_argument("lemma_asymptotic_check: need 0 < y < x");

  VerdictReport r;
  r.claim_id = "lemma-a.1";

  const Interval one = Interval::of(1L, prec);
  const Interval half = Interval::of(make_rational(1, 2), prec);

  const Interval ln_binom = Interval::of(binom(x, y), prec).log();
  const Interval s = s_closed(make_rational(y, x), prec);
  const Interval main_term =
      Interval::of(y, prec) *
      (Interval::of(make_rational(x, y), prec).log() + one - s);
  const Interval correction =
      half * (Interval::of(make_rational(BigInt(x), BigInt(y) * (x - y)), prec) /
              (Interval::pi(prec) * Interval::of(2L, prec)))
                 .log();
  const Interval z = ln_binom - main_term - correction;

  const BigRat lower = make_rational(1, 12 * x + 1) - make_rational(1, 12 * y) -
                       make_rational(1, 12 * (x - y));
  const BigRat upper = make_rational(1, 12 * x) - make_rational(1, 12 * y + 1) -
                       make_rational(1, 12 * (x - y) + 1);

  r.holds = combine_strict(Interval::of(lower, prec).less(z),
                           z.less(Interval::of(upper, prec)));
  r.lhs = ReportValue::of(z);
  r.rhs = ReportValue::of_text("(" + rational_string(lower) + ", " +
                               rational_string(upper) + ")");
  r.runtime_ms = watch.ms();
  return r;
}

VerdictReport lemma_asymptotic1_check(long x, long y, long j, long prec) {
  StopWatch watch;
  if (x < 1 || y < 1 || j < 0 || j >= y)
    throw std::invalid_argument(
        "lemma_asymptotic1_check: need x,y >= 1 and 0 <= j < y");

  VerdictReport r;
  r.claim_id = "lemma-a.2";
  if (x < 3 * y) {
    r.holds = Verdict::Vacuous;
    r.note = "hypothesis x >= 3y not met";
    r.runtime_ms = watch.ms();
    return r;
  }

  const Interval one = Interval::of(1L, prec);
  const Interval half = Interval::of(make_rational(1, 2), prec);
  const Interval ln2 = Interval::of(2L, prec).log();

  const Interval value =
      Interval::of(binom(x, y), prec).log() -
      Interval::of(binom(x - y, y - j), prec).log() -
      Interval::of(j, prec) *
          (Interval::of(make_rational(x, y), prec).log() + one) -
      Interval::of(make_rational(2 * (y - j) + 1, 2), prec) *
          Interval::of(make_rational(y - j, y), prec).log();

  const Interval bound =
      Interval::of(make_rational(3 * y, 2 * x), prec) *
          (Interval::of(j, prec) + Interval::of(2 * y, prec) * ln2) +
      Interval::of(make_rational(1, 4), prec) +
      half * Interval::of(make_rational(3, 2), prec).log();

  // |value| < bound, checked from both sides.
  r.holds = combine_strict(value.less(bound), (-value).less(bound));
  r.lhs = ReportValue::of(value);
  r.rhs = ReportValue::of(bound);
  r.note = "absolute value compared: -rhs < lhs < rhs";
  r.runtime_ms = watch.ms();
  return r;
}

VerdictReport binom_upper_check(long x, long y, long prec) {
  StopWatch watch;
  if (y < 1 || x < y)
    throw std::invalid_argument("binom_upper_check: need 1 <= y <= x");

  VerdictReport r;
  r.claim_id = "eq-2.3";
  const BigInt& lhs = binom(x, y);
  const Interval rhs =
      (Interval::of(y, prec) *
       (Interval::of(1L, prec) + Interval::of(make_rational(x, y), prec).log()))
          .exp();
  r.holds = verdict_of(Interval::of(lhs, prec).less(rhs));
  r.lhs = ReportValue::of(lhs);
  r.rhs = ReportValue::of(rhs);
  r.runtime_ms = watch.ms();
  return r;
}

}  // namespace sunflower
