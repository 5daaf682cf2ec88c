#include "doctest.h"

#include "sunflower/bigmath.hpp"
#include "sunflower/binom.hpp"
#include "sunflower/interval.hpp"
#include "sunflower/special.hpp"

using namespace sunflower;

TEST_CASE("make_rational canonicalizes") {
  CHECK(make_rational(4, 6) == make_rational(2, 3));
  CHECK(make_rational(-4, 6) == make_rational(-2, 3));
  CHECK(make_rational(0, 7) == BigRat(0));
  const BigRat q = make_rational(BigInt(10), BigInt(4));
  CHECK(q.get_num() == 5);
  CHECK(q.get_den() == 2);
}

TEST_CASE("parse_rational accepts p and p/q, rejects junk") {
  CHECK(*parse_rational("7") == BigRat(7));
  CHECK(*parse_rational("-3/9") == make_rational(-1, 3));
  CHECK(*parse_rational("22/7") == make_rational(22, 7));
  CHECK(!parse_rational(""));
  CHECK(!parse_rational("x"));
  CHECK(!parse_rational("1/0"));
  CHECK(!parse_rational("1/2/3"));
  CHECK(!parse_rational("1.5"));
}

TEST_CASE("rational_string round-trips through parse_rational") {
  for (long num = -6; num <= 6; ++num)
    for (long den = 1; den <= 5; ++den) {
      const BigRat q = make_rational(num, den);
      CHECK(*parse_rational(rational_string(q)) == q);
    }
  CHECK(rational_string(BigRat(3)) == "3/1");
}

TEST_CASE("integer powers and factorials") {
  CHECK(pow_int(BigInt(3), 0) == 1);
  CHECK(pow_int(BigInt(3), 5) == 243);
  CHECK(pow_int(BigInt(-2), 3) == -8);
  CHECK(pow_rat(make_rational(2, 3), 2) == make_rational(4, 9));
  CHECK(pow_rat(make_rational(2, 3), -2) == make_rational(9, 4));
  CHECK(pow_rat(BigRat(5), 0) == 1);
  CHECK(factorial(0) == 1);
  CHECK(factorial(6) == 720);
}

TEST_CASE("floor and ceiling of rationals, both signs") {
  CHECK(floor_rat(make_rational(7, 2)) == 3);
  CHECK(ceil_rat(make_rational(7, 2)) == 4);
  CHECK(floor_rat(make_rational(-7, 2)) == -4);
  CHECK(ceil_rat(make_rational(-7, 2)) == -3);
  CHECK(floor_rat(BigRat(5)) == 5);
  CHECK(ceil_rat(BigRat(5)) == 5);
}

TEST_CASE("integer square and cube roots on exact boundaries") {
  CHECK(floor_sqrt(BigInt(0), BigInt(1)) == 0);
  CHECK(floor_sqrt(BigInt(48), BigInt(1)) == 6);
  CHECK(floor_sqrt(BigInt(49), BigInt(1)) == 7);
  CHECK(floor_sqrt(BigInt(1), BigInt(2)) == 0);   // sqrt(1/2) < 1
  CHECK(floor_sqrt(BigInt(9), BigInt(4)) == 1);   // sqrt(9/4) = 3/2
  CHECK(floor_cbrt(BigInt(26), BigInt(1)) == 2);
  CHECK(floor_cbrt(BigInt(27), BigInt(1)) == 3);
  CHECK(floor_cbrt(BigInt(1000), BigInt(8)) == 5);
}

TEST_CASE("binomial coefficients") {
  CHECK(binom(0, 0) == 1);
  CHECK(binom(6, 3) == 20);
  CHECK(binom(10, 4) == 210);
  CHECK(binom(5, 7) == 0);
  for (int n = 1; n <= 12; ++n)
    for (int k = 1; k <= n; ++k) {
      // Pascal and symmetry, consumed immediately (the cache can grow).
      const BigInt lhs = binom(n, k);
      CHECK(lhs == BigInt(binom(n - 1, k - 1)) + binom(n - 1, k));
      CHECK(lhs == binom(n, n - k));
    }
}

TEST_CASE("binom agrees with the Pascal table") {
  const BinomTable table(40);
  for (long x = 0; x <= 40; ++x)
    for (long y = -1; y <= x + 1; ++y) CHECK(binom(x, y) == table.at(x, y));
}

TEST_CASE("interval arithmetic keeps the true value inside") {
  const Interval two = Interval::of(2L);
  const Interval e = Interval::of(1L).exp();
  // e = 2.718281828459045...
  CHECK(e.less(Interval::of(make_rational(2719, 1000))) == Tern::True);
  CHECK(Interval::of(make_rational(2718, 1000)).less(e) == Tern::True);
  CHECK(two.log().exp().less(Interval::of(make_rational(201, 100))) ==
        Tern::True);
  const Interval pi = Interval::pi();
  CHECK(pi.less(Interval::of(make_rational(314160, 100000))) == Tern::True);
  CHECK(Interval::of(make_rational(314159, 100000)).less(pi) == Tern::True);
}

TEST_CASE("interval comparisons go Unknown instead of guessing") {
  const Interval a = Interval::from_bounds(BigRat(1), BigRat(3));
  const Interval b = Interval::from_bounds(BigRat(2), BigRat(4));
  CHECK(a.less(b) == Tern::Unknown);
  CHECK(a.less(Interval::of(5L)) == Tern::True);
  CHECK(Interval::of(5L).less(a) == Tern::False);
  CHECK(a.less_equal(Interval::of(1L)) == Tern::Unknown);
  const Interval point = Interval::of(1L);
  CHECK(point.less_equal(point) == Tern::True);
  CHECK(point.less(point) == Tern::False);
}

TEST_CASE("interval signs and division") {
  const Interval neg = Interval::of(-3L);
  CHECK(neg.is_negative());
  CHECK((-neg).is_positive());
  const Interval q = Interval::of(1L) / Interval::of(3L);
  CHECK(Interval::of(make_rational(1, 3)).less_equal(q) == Tern::True);
  CHECK(q.pow(3).less(Interval::of(make_rational(1, 26))) == Tern::True);
}

TEST_CASE("s series brackets the closed form") {
  for (long num = 1; num <= 9; num += 2) {
    const BigRat t = make_rational(num, 10);
    const Interval closed = s_closed(t);
    const Interval series = s_series(t, 40);
    // Both enclose s(t), so neither may sit strictly on one side.
    CHECK(series.less(closed) != Tern::True);
    CHECK(closed.less(series) != Tern::True);
  }
  CHECK_THROWS_AS((void)s_closed(BigRat(1)), std::invalid_argument);
  CHECK_THROWS_AS((void)s_series(BigRat(0), 5), std::invalid_argument);
  CHECK_THROWS_AS((void)s_series(make_rational(1, 2), 0),
                  std::invalid_argument);
}

TEST_CASE("s(t) at t = 1/2 is near 1 - ln 2") {
  // s(1/2) = 1 + (2 - 1) ln(1/2) = 1 - ln 2 = 0.30685...
  const Interval v = s_closed(make_rational(1, 2));
  CHECK(v.less(Interval::of(make_rational(307, 1000))) == Tern::True);
  CHECK(Interval::of(make_rational(306, 1000)).less(v) == Tern::True);
}

TEST_CASE("two sided Stirling window holds on spot checks") {
  for (auto [x, y] : {std::pair<long, long>{10, 3},
                      {50, 25},
                      {300, 1},
                      {300, 299},
                      {37, 17}}) {
    const VerdictReport r = lemma_asymptotic_check(x, y);
    CAPTURE(x);
    CAPTURE(y);
    CHECK(r.holds == Verdict::Holds);
    CHECK(r.claim_id == "lemma-a.1");
  }
  CHECK_THROWS_AS((void)lemma_asymptotic_check(5, 5), std::invalid_argument);
  CHECK_THROWS_AS((void)lemma_asymptotic_check(5, 0), std::invalid_argument);
}

TEST_CASE("binomial shift bound holds in range, vacuous below 3y") {
  CHECK(lemma_asymptotic1_check(30, 10, 0).holds == Verdict::Holds);
  CHECK(lemma_asymptotic1_check(120, 10, 9).holds == Verdict::Holds);
  CHECK(lemma_asymptotic1_check(20, 10, 3).holds == Verdict::Vacuous);
  CHECK_THROWS_AS((void)lemma_asymptotic1_check(30, 10, 10),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)lemma_asymptotic1_check(30, 10, -1),
                  std::invalid_argument);
}

TEST_CASE("binomial upper bound (e x / y)^y") {
  CHECK(binom_upper_check(5, 2).holds == Verdict::Holds);
  CHECK(binom_upper_check(300, 150).holds == Verdict::Holds);
  CHECK(binom_upper_check(7, 7).holds == Verdict::Holds);  // 1 < e^7
  CHECK_THROWS_AS((void)binom_upper_check(3, 4), std::invalid_argument);
  CHECK_THROWS_AS((void)binom_upper_check(3, 0), std::invalid_argument);
}
