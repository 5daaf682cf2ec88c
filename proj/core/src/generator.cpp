#include "sunflower/generator.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "sunflower/binom.hpp"
#include "sunflower/extension.hpp"

namespace sunflower {
namespace {

struct GenEval {
  BigInt achieved;
  Interval required;
  Tern cmp = Tern::Unknown;
};

GenEval eval_generator(const SetFamily& f, const ElementSet& t, int l,
                       const BigRat& lambda, long prec) {
  GenEval out;
  const int tc = static_cast<int>(t.count());
  if (restricted_count(f, t) > 0) {
    ResidualFamily res = residual_family(f, t);
    out.achieved = ext(res.family, l - tc).count;
  }
  const BigInt& slots = binom(f.n() - tc, l - tc);
  // The threshold is transcendental; retry at doubled precision before
  // giving up on the comparison.
  for (long p = prec; p <= 4 * prec; p *= 2) {
    Interval lam = Interval::of(lambda, p);
    out.required =
        Interval::of(slots, p) * (Interval::of(1L, p) - (-lam).exp());
    out.cmp = out.required.less_equal(Interval::of(out.achieved, p));
    if (out.cmp != Tern::Unknown) break;
  }
  return out;
}

VerdictReport generator_report(const GenEval& eval, const ElementSet& t,
                               std::string claim, long long ms) {
  VerdictReport report;
  report.claim_id = std::move(claim);
  report.lhs = ReportValue::of(eval.achieved);
  report.rhs = ReportValue::of(eval.required);
  report.holds = verdict_of(eval.cmp);
  report.note =
      report.holds == Verdict::Inconclusive
          ? "threshold interval straddles the exact count; widen precision"
          : "count taken over the residual family at size l - |T|";
  if (!t.empty()) report.witness.elements = t.elements();
  report.runtime_ms = ms;
  return report;
}

}  // namespace

VerdictReport is_extension_generator(const SetFamily& f, const ElementSet& t,
                                     int l, const BigRat& lambda, long prec) {
  if (!f.universe().contains_set(t))
    throw std::invalid_argument("is_extension_generator: T outside the universe");
  if (static_cast<int>(t.count()) > f.m())
    throw std::invalid_argument("is_extension_generator: |T| exceeds m");
  if (l < f.m() || l > f.n())
    throw std::invalid_argument("is_extension_generator: l outside [m, n]");
  StopWatch watch;
  GenEval eval = eval_generator(f, t, l, lambda, prec);
  return generator_report(eval, t, "extension-generator", watch.ms());
}

CoreExtraction gamma_core_extract(const SetFamily& f, const BigRat& b) {
  if (f.size() == 0)
    throw std::invalid_argument("gamma_core_extract: empty family");
  if (!(b > 1))
    throw std::invalid_argument("gamma_core_extract: requires b > 1");
  StopWatch watch;
  const int n = f.n();
  const int m = f.m();

  ElementSet t;
  CoreExtraction out{ElementSet(), residual_family(f, t), VerdictReport(),
                     VerdictReport(), false};
  for (;;) {
    out.residual = residual_family(f, t);
    out.residual_gamma = gamma_unit_check(out.residual.family, b);
    if (out.residual_gamma.holds != Verdict::Fails) break;
    // A violating S certifies |F[T u S]| > |F[T]| b^{-|S|} >=
    // |F| b^{-|T u S|}, so adjoining S keeps the invariant and leaves F[T]
    // nonempty. S is nonempty, so this happens at most m times.
    ElementSet grown = t;
    for (int e : out.residual_gamma.witness.elements)
      grown = grown.with(out.residual.old_of_new[e - 1]);
    t = grown;
  }
  out.t = t;
  out.degenerate = out.residual.degenerate;

  VerdictReport tb;
  tb.claim_id = "core-extract";
  const long tc = static_cast<long>(t.count());
  const BigRat total(static_cast<unsigned long>(f.size()));
  BigRat lhs = total;
  BigRat ratio;
  if (m >= 1) {
    ratio = BigRat(n) / (BigRat(m) * b);
    lhs = pow_rat(ratio, tc) * total;
  }
  const BigRat rhs(binom(n, m));
  tb.lhs = ReportValue::of(lhs);
  tb.rhs = ReportValue::of(rhs);
  tb.holds = lhs <= rhs ? Verdict::Holds : Verdict::Fails;
  tb.note = "|F| (n/(b m))^{|T|} <= C(n, m) with |T| = " + std::to_string(tc);
  if (m >= 1 && ratio > 1) {
    Interval lg = Interval::of(ratio).log();
    if (lg.is_positive()) {
      const BigRat ek = make_rational(
          binom(n, m), BigInt(static_cast<unsigned long>(f.size())));
      Interval form = Interval::of(ek).log() / lg;
      tb.note += "; ratio form |T| <= kappa/ln(n/(b m)) = " + form.str();
    }
  }
  tb.runtime_ms = watch.ms();
  out.t_bound = std::move(tb);
  return out;
}

GeneratorCertificate egt_find(const SetFamily& f, int l, const BigRat& lambda,
                              const BigRat& eps, long prec) {
  if (f.size() == 0) throw std::invalid_argument("egt_find: empty family");
  const int n = f.n();
  const int m = f.m();
  if (m < 1) throw std::invalid_argument("egt_find: requires m >= 1");
  if (l < m || l > n)
    throw std::invalid_argument("egt_find: l outside [m, n]");
  BigRat e = eps;
  e.canonicalize();
  BigRat lam = lambda;
  lam.canonicalize();
  if (!(e > 0 && e < 1))
    throw std::invalid_argument("egt_find: eps outside (0, 1)");
  if (!(lam > 1) || !(lam * m * m < e * l))
    throw std::invalid_argument("egt_find: lambda outside (1, eps l / m^2)");
  StopWatch watch;

  // l0 = floor(l sqrt(eps) / lambda), by squaring the radicand.
  const BigInt l0z = floor_sqrt(
      BigInt(l) * l * e.get_num() * lam.get_den() * lam.get_den(),
      e.get_den() * lam.get_num() * lam.get_num());
  const long l0 = l0z.get_si();
  // lambda < eps l <= l sqrt(eps) forces l0 >= 1.

  // b = 14 gamma m n / l0 with gamma = eps^{-1/4} is irrational; take the
  // exact floor(b 2^64) / 2^64 instead. b^4 = c^4/eps is rational, and
  // floor of a fourth root is two integer square roots.
  BigRat c4 = pow_rat(make_rational(14L * m * n, l0), 4);
  const BigInt shifted = floor_sqrt(
      floor_sqrt(c4.get_num() * e.get_den() << 256, c4.get_den() * e.get_num()),
      BigInt(1));
  const BigRat b_lo = make_rational(shifted, pow_int(BigInt(2), 64));
  // b >= 14 (gamma >= 1 and n >= l0), so the approximation stays above 1.

  CoreExtraction core = gamma_core_extract(f, b_lo);

  GeneratorCertificate cert;
  cert.t = core.t;
  cert.l = l;
  cert.lambda = lam;
  cert.b_used = b_lo;
  cert.l0 = l0;
  cert.degenerate = core.degenerate;
  cert.residual_gamma = core.residual_gamma;

  GenEval eval = eval_generator(f, core.t, l, lam, prec);
  cert.achieved = eval.achieved;
  cert.required = eval.required;
  cert.property = generator_report(eval, core.t, "theorem-1.2", watch.ms());

  VerdictReport tb;
  tb.claim_id = "theorem-1.2";
  const BigRat ratio = e * l / (BigRat(m) * m * lam);  // > 1 by precondition
  const BigRat lhs = pow_rat(ratio, static_cast<long>(core.t.count())) *
                     BigRat(static_cast<unsigned long>(f.size()));
  const BigRat rhs(binom(n, m));
  tb.lhs = ReportValue::of(lhs);
  tb.rhs = ReportValue::of(rhs);
  tb.holds = lhs <= rhs ? Verdict::Holds : Verdict::Fails;
  tb.note = "exponential form of |T| <= kappa/ln(eps l/(m^2 lambda)); |T| = " +
            std::to_string(core.t.count());
  Interval lg = Interval::of(ratio, prec).log();
  if (lg.is_positive())
    tb.note += ", ratio bound " + (sparsity(f).log(prec) / lg).str();
  tb.runtime_ms = watch.ms();
  cert.t_bound = std::move(tb);
  return cert;
}

}  // namespace sunflower
