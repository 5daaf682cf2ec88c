#include "sunflower/gamma.hpp"

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace sunflower {

namespace {

// ||(Y choose m)|| = total weight of members inside Y.
BigRat slice_weight(const SetFamily& f, const ElementSet& y) {
  BigRat s(0);
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f.set(i).subset_of(y)) s += f.weight(i);
  return s;
}

std::vector<std::size_t> members_inside(const SetFamily& f,
                                        const ElementSet& y) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f.set(i).subset_of(y)) idx.push_back(i);
  return idx;
}

void require_range(const SetFamily& f, int l, const char* who) {
  if (l < f.m() || l > f.n())
    throw std::invalid_argument(std::string(who) + ": need m <= l <= n");
}

// Gamma_w(b) and Gamma(b) are automatic for b <= 1: every restricted count
// or pair mass is at most the unrestricted total, and the bound's factor
// C(m,j) b^{-j} (resp. b^{-|S|}) is then at least 1.
bool gamma_trivially_true(const BigRat& b) { return b <= 1; }

}  // namespace

BigRat GammaParams::b() const {
  if (n < 1 || m < 1 || l < 1)
    throw std::invalid_argument("GammaParams: need n, m, l >= 1");
  return gamma * make_rational(14L * m * n, l);
}

Interval GammaParams::delta(long prec) const {
  if (gamma <= 0) throw std::invalid_argument("GammaParams: need gamma > 0");
  const Interval one = Interval::of(1L, prec);
  const Interval ln2 = Interval::of(2L, prec).log();
  return Interval::of(make_rational(3, 2) / gamma, prec) *
             (one + Interval::of(2L, prec) * ln2) +
         Interval::of(make_rational(1, 4), prec) +
         Interval::of(make_rational(1, 2), prec) *
             Interval::of(make_rational(3, 2), prec).log();
}

Interval GammaParams::u(int j, long prec) const {
  if (m < 1) throw std::invalid_argument("GammaParams::u: need m >= 1");
  if (j < 0 || j >= m)
    throw std::invalid_argument("GammaParams::u: need 0 <= j < m");
  const Interval one = Interval::of(1L, prec);
  return Interval::of(j, prec) * (one - Interval::of(m, prec).log()) +
         Interval::of(make_rational(2 * (m - j) + 1, 2), prec) *
             Interval::of(make_rational(m - j, m), prec).log() +
         delta(prec);
}

VerdictReport GammaParams::sanity_anchor(long prec) const {
  StopWatch watch;
  VerdictReport r;
  r.claim_id = "gamma-anchor";
  const Interval value =
      (Interval::of(1L, prec) + Interval::of(2L, prec) * delta(prec)).exp();
  r.holds = verdict_of(value.less(Interval::of(7L, prec)));
  r.lhs = ReportValue::of(value);
  r.rhs = ReportValue::of(BigRat(7));
  r.runtime_ms = watch.ms();
  return r;
}

VerdictReport gamma_unit_check(const SetFamily& f, const BigRat& b) {
  StopWatch watch;
  if (f.size() == 0)
    throw std::invalid_argument("gamma_unit_check: family is empty");
  if (b <= 1) throw std::invalid_argument("gamma_unit_check: need b > 1");

  // Only subsets of members matter; any other S restricts F to nothing.
  auto by_size_then_seq = [](const ElementSet& a, const ElementSet& c) {
    if (a.count() != c.count()) return a.count() < c.count();
    return ElementSet::seq_less(a, c);
  };
  std::set<ElementSet, decltype(by_size_then_seq)> candidates(by_size_then_seq);
  for (const ElementSet& u : f.sets())
    for_each_nonempty_subset(
        u, [&](const ElementSet& s) { candidates.insert(s); });

  VerdictReport r;
  r.claim_id = "gamma-unit";
  const BigRat total(static_cast<unsigned long>(f.size()));
  for (const ElementSet& s : candidates) {
    const BigRat lhs(static_cast<unsigned long>(restricted_count(f, s)));
    const BigRat rhs = total * pow_rat(b, -s.count());
    if (lhs > rhs) {
      r.holds = Verdict::Fails;
      r.witness.elements = s.elements();
      r.lhs = ReportValue::of(lhs);
      r.rhs = ReportValue::of(rhs);
      r.runtime_ms = watch.ms();
      return r;
    }
  }
  r.holds = Verdict::Holds;
  r.note = "checked " + std::to_string(candidates.size()) + " subsets";
  r.runtime_ms = watch.ms();
  return r;
}

VerdictReport gamma_weighted_check(const SetFamily& f, const BigRat& b) {
  StopWatch watch;
  if (f.size() == 0)
    throw std::invalid_argument("gamma_weighted_check: family is empty");
  if (b <= 1) throw std::invalid_argument("gamma_weighted_check: need b > 1");

  VerdictReport r;
  r.claim_id = "gamma-weighted";
  const BigRat total = family_size(f);
  const std::map<int, BigRat> profile = intersection_profile(f);
  for (int j = 1; j <= f.m(); ++j) {
    const BigRat rhs = total * total * BigRat(binom(f.m(), j)) * pow_rat(b, -j);
    const BigRat& lhs = profile.at(j);
    if (lhs > rhs) {
      r.holds = Verdict::Fails;
      r.witness.text = "j=" + std::to_string(j);
      r.lhs = ReportValue::of(lhs);
      r.rhs = ReportValue::of(rhs);
      r.runtime_ms = watch.ms();
      return r;
    }
  }
  r.holds = Verdict::Holds;
  r.runtime_ms = watch.ms();
  return r;
}

VerdictReport gamma_pair_check(const SetFamily& f, const PairWeight& pw,
                               const BigRat& b, const BigRat& h) {
  StopWatch watch;
  if (pw.count() != f.size())
    throw std::invalid_argument("gamma_pair_check: weight size mismatch");
  if (b <= 0 || h <= 0)
    throw std::invalid_argument("gamma_pair_check: need b, h > 0");
  const BigInt total = pw.total();
  if (total == 0)
    throw std::invalid_argument("gamma_pair_check: zero total weight");

  std::vector<BigInt> by_overlap(f.m() + 1);
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t k = 0; k < f.size(); ++k)
      by_overlap[f.set(i).intersection_count(f.set(k))] += pw.at(i, k);

  VerdictReport r;
  r.claim_id = "gamma-pair";
  for (int j = 1; j <= f.m(); ++j) {
    const BigRat lhs(by_overlap[j]);
    const BigRat rhs =
        h * pow_rat(b, -j) * BigRat(binom(f.m(), j)) * BigRat(total);
    if (lhs > rhs) {
      r.holds = Verdict::Fails;
      r.witness.text = "j=" + std::to_string(j);
      r.lhs = ReportValue::of(lhs);
      r.rhs = ReportValue::of(rhs);
      r.runtime_ms = watch.ms();
      return r;
    }
  }
  r.holds = Verdict::Holds;
  r.runtime_ms = watch.ms();
  return r;
}

MdQuantities md_quantities(const SetFamily& f, int l) {
  require_range(f, l, "md_quantities");
  MdQuantities out;
  out.mark = 0;
  out.double_mark = 0;
  for_each_subset(f.universe().all(), l, [&](const ElementSet& y) {
    const BigRat s = slice_weight(f, y);
    out.mark += s;
    out.double_mark += s * s;
  });
  out.profile = intersection_profile(f);

  const int n = f.n(), m = f.m();
  const BigRat closed_mark = family_size(f) * BigRat(binom(n - m, l - m));
  BigRat closed_double(0);
  for (const auto& [j, pj] : out.profile)
    if (l - 2 * m + j >= 0)
      closed_double += pj * BigRat(binom(n - 2 * m + j, l - 2 * m + j));
  if (out.mark != closed_mark || out.double_mark != closed_double)
    throw std::logic_error("md_quantities: closed-form identity mismatch");
  return out;
}

VerdictReport double_mark_check(const SetFamily& f, int l,
                                const BigRat& gamma) {
  StopWatch watch;
  if (f.size() == 0)
    throw std::invalid_argument("double_mark_check: family is empty");
  if (f.m() < 1) throw std::invalid_argument("double_mark_check: need m >= 1");
  require_range(f, l, "double_mark_check");
  if (gamma <= make_rational(1, 2))
    throw std::invalid_argument("double_mark_check: need gamma > 1/2");

  VerdictReport r;
  r.claim_id = "lemma-2.4";
  const BigRat b = gamma * make_rational(14L * f.m() * f.n(), l);
  const VerdictReport gw = gamma_weighted_check(f, b);
  if (gw.holds != Verdict::Holds) {
    r.holds = Verdict::Vacuous;
    r.note = "hypothesis fails: Gamma_w(" + rational_string(b) +
             ") does not hold at " + gw.witness.text;
    r.witness = gw.witness;
    r.runtime_ms = watch.ms();
    return r;
  }

  const int n = f.n(), m = f.m();
  const MdQuantities md = md_quantities(f, l);
  const BigRat fam = family_size(f);
  const BigInt cnm = binom(n, m);
  const BigRat scale =
      fam * fam / BigRat(cnm * cnm) / (BigRat(1) - BigRat(1) / (2 * gamma));
  const BigRat clm2(binom(l, m) * binom(l, m));
  const BigRat rhs = scale * BigRat(binom(n, l)) * clm2;
  const BigRat rhs_variant = scale * BigRat(cnm) * clm2;

  r.holds = md.double_mark < rhs ? Verdict::Holds : Verdict::Fails;
  r.lhs = ReportValue::of(md.double_mark);
  r.rhs = ReportValue::of(rhs);
  r.note = "leading binomial read as C(n,l); the C(n,m) variant gives " +
           rational_string(rhs_variant);
  r.runtime_ms = watch.ms();
  return r;
}

VerdictReport weight_bounds_check(const SetFamily& f, int l, const BigRat& t,
                                  const BigRat& u, const BigRat& v,
                                  BoundSide side) {
  StopWatch watch;
  if (f.size() == 0)
    throw std::invalid_argument("weight_bounds_check: family is empty");
  require_range(f, l, "weight_bounds_check");

  VerdictReport r;
  r.claim_id = "lemma-2.5";
  auto vacuous = [&](const std::string& clause) {
    r.holds = Verdict::Vacuous;
    r.note = "hypothesis fails: " + clause;
    r.runtime_ms = watch.ms();
    return r;
  };

  const int n = f.n(), m = f.m();
  const BigInt cnl = binom(n, l);
  const BigInt clm = binom(l, m);
  const BigRat ek = family_size(f) / BigRat(binom(n, m));  // e^{-kappa}
  const MdQuantities md = md_quantities(f, l);

  if (!(md.double_mark > 0)) return vacuous("||D|| > 0");
  if (!(md.double_mark <= t * BigRat(cnl) * BigRat(clm * clm) * ek * ek))
    return vacuous("||D|| <= t C(n,l) C(l,m)^2 e^{-2 kappa}");
  if (!(u > 0 && u < 1)) return vacuous("0 < u < 1");
  BigRat u_slice = u * BigRat(cnl);
  if (u_slice.get_den() != 1) return vacuous("u C(n,l) integral");
  const BigRat one_minus_uv = BigRat(1) - u * v;
  if (!(t < u * v * v + one_minus_uv * one_minus_uv / (BigRat(1) - u)))
    return vacuous("t < u v^2 + (1-uv)^2 / (1-u)");
  if (side == BoundSide::Above && !(v >= 1))
    return vacuous("v >= 1 for side=above");
  if (side == BoundSide::Below && !(v <= 1))
    return vacuous("v <= 1 for side=below");

  const BigRat threshold = v * BigRat(clm) * ek;
  BigInt count(0);
  for_each_subset(f.universe().all(), l, [&](const ElementSet& y) {
    const BigRat s = slice_weight(f, y);
    if (side == BoundSide::Above ? s < threshold : s > threshold) ++count;
  });

  const BigRat needed = (BigRat(1) - u) * BigRat(cnl);
  r.holds = BigRat(count) > needed ? Verdict::Holds : Verdict::Fails;
  r.lhs = ReportValue::of(count);
  r.rhs = ReportValue::of(needed);
  r.note = std::string("count of Y with ||(Y choose m)|| ") +
           (side == BoundSide::Above ? "<" : ">") + " " +
           rational_string(threshold);
  r.runtime_ms = watch.ms();
  return r;
}

namespace {

// Shared skeleton of the three window verifiers. `weight_of` maps Y to the
// quantity being windowed; `center` is its average over (X choose l).
template <typename WeightFn>
BigInt count_in_window(const SetFamily& f, int l, const BigRat& center,
                       const BigRat& inv_gamma, WeightFn&& weight_of) {
  BigInt count(0);
  for_each_subset(f.universe().all(), l, [&](const ElementSet& y) {
    // |s/c - 1| < gamma^{-1/3}, cubed to stay rational.
    const BigRat d = weight_of(y) / center - 1;
    const BigRat d3 = d * d * d;
    if (d3 < inv_gamma && -d3 < inv_gamma) ++count;
  });
  return count;
}

}  // namespace

Egt4Result egt4_verify(const SetFamily& f, int l, const BigRat& gamma) {
  StopWatch watch;
  if (f.size() == 0)
    throw std::invalid_argument("egt4_verify: family is empty");
  require_range(f, l, "egt4_verify");
  if (gamma <= 0) throw std::invalid_argument("egt4_verify: need gamma > 0");

  const int n = f.n(), m = f.m();
  const BigInt cnl = binom(n, l);

  Egt4Result out;
  out.report.claim_id = "theorem-2.3";

  // required = C(n,l) - floor(2 C(n,l) gamma^{-1/3}); the floor is decided
  // by cubing: (2 C gamma^{-1/3})^3 = 8 C^3 / gamma.
  BigRat g = gamma;
  g.canonicalize();
  out.required =
      cnl - floor_cbrt(8 * cnl * cnl * cnl * g.get_den(), g.get_num());

  const BigRat center = BigRat(binom(l, m)) * family_size(f) / BigRat(binom(n, m));
  out.qualifying = count_in_window(f, l, center, BigRat(1) / gamma,
                                   [&](const ElementSet& y) {
                                     return slice_weight(f, y);
                                   });

  out.report.lhs = ReportValue::of(out.qualifying);
  out.report.rhs = ReportValue::of(out.required);
  if (out.required <= 0) {
    out.report.holds = Verdict::Vacuous;
    out.report.note = "required count nonpositive";
  } else if (!(gamma * m * m <= l && gamma <= BigRat(cnl))) {
    out.report.holds = Verdict::Vacuous;
    out.report.note = "gamma outside [., min{l/m^2, C(n,l)}]";
  } else {
    const BigRat b = gamma * make_rational(14L * m * n, l);
    if (!gamma_trivially_true(b)) {
      const VerdictReport gw = gamma_weighted_check(f, b);
      if (gw.holds != Verdict::Holds) {
        out.report.holds = Verdict::Vacuous;
        out.report.note = "hypothesis fails: Gamma_w(" + rational_string(b) +
                          ") does not hold at " + gw.witness.text;
        out.report.witness = gw.witness;
        out.report.runtime_ms = watch.ms();
        return out;
      }
    }
    out.report.holds =
        out.qualifying >= out.required ? Verdict::Holds : Verdict::Fails;
  }
  out.report.runtime_ms = watch.ms();
  return out;
}

VerdictReport egt4_term_bound_check(int n, int m, int l, const BigRat& gamma,
                                    int j, long prec) {
  StopWatch watch;
  if (m < 2 || j < 1 || j > m - 1)
    throw std::invalid_argument("egt4_term_bound_check: need 1 <= j <= m-1");
  if (l < 3 * m)
    throw std::invalid_argument("egt4_term_bound_check: need l >= 3m");
  if (n < l) throw std::invalid_argument("egt4_term_bound_check: need n >= l");
  if (gamma <= 0)
    throw std::invalid_argument("egt4_term_bound_check: need gamma > 0");

  VerdictReport r;
  r.claim_id = "egt4-term-bound";

  const GammaParams gp{n, m, l, gamma};
  const BigRat n_over_b = make_rational(l, 14L * m) / gamma;  // n/b exactly
  const Interval lhs =
      Interval::of(BigInt(binom(l - m, m - j) * binom(m, j)), prec) *
      (gp.u(j, prec) +
       Interval::of(j, prec) * Interval::of(n_over_b, prec).log())
          .exp();
  const BigRat rhs = BigRat(binom(l, m)) * pow_rat(2 * gamma, -j);

  r.holds = verdict_of(lhs.less(Interval::of(rhs, prec)));
  if (r.holds == Verdict::Inconclusive) r.note = "widen precision";
  r.lhs = ReportValue::of(lhs);
  r.rhs = ReportValue::of(rhs);
  r.runtime_ms = watch.ms();
  return r;
}

Egt4Result egt4cor_verify(const SetFamily& f, int l, const BigRat& gamma) {
  StopWatch watch;
  if (f.size() == 0)
    throw std::invalid_argument("egt4cor_verify: family is empty");
  require_range(f, l, "egt4cor_verify");
  if (gamma <= 0) throw std::invalid_argument("egt4cor_verify: need gamma > 0");

  const int n = f.n(), m = f.m();
  const BigInt cnl = binom(n, l);

  Egt4Result out;
  out.report.claim_id = "corollary-2.7";

  BigRat g = gamma;
  g.canonicalize();
  out.required =
      cnl - floor_cbrt(8 * cnl * cnl * cnl * g.get_den(), g.get_num());

  const BigRat center = BigRat(binom(l, m)) *
                        BigRat(BigInt(static_cast<unsigned long>(f.size()))) /
                        BigRat(binom(n, m));
  out.qualifying = count_in_window(
      f, l, center, BigRat(1) / gamma, [&](const ElementSet& y) {
        return BigRat(static_cast<unsigned long>(members_inside(f, y).size()));
      });

  out.report.lhs = ReportValue::of(out.qualifying);
  out.report.rhs = ReportValue::of(out.required);
  if (out.required <= 0) {
    out.report.holds = Verdict::Vacuous;
    out.report.note = "required count nonpositive";
  } else if (!(gamma * m * m <= l && gamma <= BigRat(cnl))) {
    out.report.holds = Verdict::Vacuous;
    out.report.note = "gamma outside [., min{l/m^2, C(n,l)}]";
  } else {
    const BigRat b = gamma * make_rational(14L * m * n, l);
    if (!gamma_trivially_true(b)) {
      const VerdictReport gu = gamma_unit_check(f, b);
      if (gu.holds != Verdict::Holds) {
        out.report.holds = Verdict::Vacuous;
        out.report.note = "hypothesis fails: Gamma(" + rational_string(b) +
                          ") does not hold in X";
        out.report.witness = gu.witness;
        out.report.runtime_ms = watch.ms();
        return out;
      }
    }
    out.report.holds =
        out.qualifying >= out.required ? Verdict::Holds : Verdict::Fails;
  }
  out.report.runtime_ms = watch.ms();
  return out;
}

Egt4Result egt4tilde_verify(const SetFamily& f, const PairWeight& pw, int l,
                            const BigRat& gamma, const BigRat& h,
                            const BigRat& eps) {
  StopWatch watch;
  if (pw.count() != f.size())
    throw std::invalid_argument("egt4tilde_verify: weight size mismatch");
  require_range(f, l, "egt4tilde_verify");
  if (pw.total() == 0)
    throw std::invalid_argument("egt4tilde_verify: zero total weight");
  if (!(eps > 0 && eps < 1))
    throw std::invalid_argument("egt4tilde_verify: need 0 < eps < 1");
  if (gamma <= make_rational(1, 2))
    throw std::invalid_argument("egt4tilde_verify: need gamma > 1/2");
  if (h <= 0) throw std::invalid_argument("egt4tilde_verify: need h > 0");

  const int n = f.n(), m = f.m();
  const BigInt cnl = binom(n, l);
  const BigInt clm = binom(l, m);
  const BigInt cnm = binom(n, m);
  const BigInt total = pw.total();

  Egt4Result out;
  out.report.claim_id = "corollary-2.8";
  out.required = ceil_rat((BigRat(1) - eps) * BigRat(cnl));

  const BigRat threshold = h * BigRat(clm * clm) /
                           (eps * (BigRat(1) - BigRat(1) / (2 * gamma)) *
                            BigRat(cnm * cnm)) *
                           BigRat(total);
  out.qualifying = 0;
  for_each_subset(f.universe().all(), l, [&](const ElementSet& y) {
    const std::vector<std::size_t> idx = members_inside(f, y);
    BigInt mass(0);
    for (std::size_t a : idx)
      for (std::size_t c : idx) mass += pw.at(a, c);
    if (BigRat(mass) < threshold) ++out.qualifying;
  });

  out.report.lhs = ReportValue::of(out.qualifying);
  out.report.rhs = ReportValue::of(out.required);
  const BigRat b = gamma * make_rational(14L * m * n, l);
  const VerdictReport gp = gamma_pair_check(f, pw, b, h);
  if (gp.holds != Verdict::Holds) {
    out.report.holds = Verdict::Vacuous;
    out.report.note = "hypothesis fails: Gamma_pair(" + rational_string(b) +
                      ", " + rational_string(h) + ") does not hold at " +
                      gp.witness.text;
    out.report.witness = gp.witness;
  } else {
    out.report.holds =
        out.qualifying >= out.required ? Verdict::Holds : Verdict::Fails;
  }
  out.report.runtime_ms = watch.ms();
  return out;
}

}  // namespace sunflower
