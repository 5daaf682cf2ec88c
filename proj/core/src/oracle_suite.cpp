#include "sunflower/oracle_suite.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sunflower/binom.hpp"
#include "sunflower/construction.hpp"
#include "sunflower/extension.hpp"
#include "sunflower/family.hpp"
#include "sunflower/gamma.hpp"
#include "sunflower/generator.hpp"
#include "sunflower/random_families.hpp"
#include "sunflower/special.hpp"
#include "sunflower/split.hpp"
#include "sunflower/sunflower_find.hpp"
#include "sunflower/verdict.hpp"

namespace sunflower {
namespace {

using Detail = std::ostringstream;

SetFamily unit_family(int n, int m,
                      std::initializer_list<std::initializer_list<int>> sets) {
  std::vector<ElementSet> v;
  for (const auto& s : sets) {
    ElementSet e;
    for (int x : s) e.add(x);
    v.push_back(e);
  }
  return SetFamily::unit(Universe(n), m, std::move(v));
}

SetFamily full_slice(int n, int m) {
  return SetFamily::unit(Universe(n), m,
                         subsets_of_size(ElementSet::range(1, n), m));
}

// Weighted mass of members lying inside Y.
BigRat direct_inside(const SetFamily& f, const ElementSet& y) {
  BigRat s(0);
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f.set(i).subset_of(y)) s += f.weight(i);
  return s;
}

// The pair condition recomputed from the raw double loop.
bool direct_gamma_weighted(const SetFamily& f, const BigRat& b) {
  const BigRat total = family_size(f);
  std::map<int, BigRat> pj;
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t k = 0; k < f.size(); ++k)
      pj[f.set(i).intersection_count(f.set(k))] += f.weight(i) * f.weight(k);
  for (int j = 1; j <= f.m(); ++j) {
    const BigRat lhs = pj.count(j) ? pj[j] : BigRat(0);
    if (lhs * pow_rat(b, j) > total * total * BigRat(binom(f.m(), j)))
      return false;
  }
  return true;
}

// Weighted tuple total over ordered lists of j pairwise disjoint d-sets.
BigRat direct_tuples(const SetFamily& f, int d, int j) {
  BigRat sum(0);
  std::vector<ElementSet> chosen;
  std::function<void(ElementSet)> rec = [&](ElementSet used) {
    if (static_cast<int>(chosen.size()) == j) {
      for (std::size_t i = 0; i < f.size(); ++i) {
        bool hits = true;
        for (const ElementSet& x : chosen)
          hits = hits && f.set(i).intersection_count(x) == 1;
        if (hits) sum += f.weight(i);
      }
      return;
    }
    for_each_subset(f.universe().all() - used, d, [&](const ElementSet& x) {
      chosen.push_back(x);
      rec(used | x);
      chosen.pop_back();
    });
  };
  rec(ElementSet());
  return sum;
}

// Canonical unordered full splits: the block of the smallest remaining
// element comes first.
void visit_splits(const ElementSet& rest, int d, std::vector<ElementSet>& blocks,
                  const std::function<void(const std::vector<ElementSet>&)>& visit) {
  if (rest.empty()) {
    visit(blocks);
    return;
  }
  const int lead = rest.min_element();
  for_each_subset(rest.without(lead), d - 1, [&](const ElementSet& pick) {
    blocks.push_back(pick.with(lead));
    visit_splits(rest - blocks.back(), d, blocks, visit);
    blocks.pop_back();
  });
}

struct Suite {
  const OracleConfig& cfg;
  std::vector<OracleCaseResult> rows;

  explicit Suite(const OracleConfig& c) : cfg(c) {}

  void run(const std::string& name, const std::function<bool(Detail&)>& body) {
    OracleCaseResult row;
    row.name = name;
    StopWatch watch;
    Detail d;
    try {
      row.pass = body(d);
      row.detail = d.str();
    } catch (const std::exception& e) {
      row.pass = false;
      row.detail = std::string("exception: ") + e.what();
    }
    row.runtime_ms = watch.ms();
    rows.push_back(std::move(row));
  }
};

}  // namespace

std::vector<OracleCaseResult> run_oracle_suite(const OracleConfig& cfg) {
  Suite suite(cfg);
  const std::uint64_t seed = cfg.seed;
  const int scale = cfg.scale < 1 ? 1 : cfg.scale;

  suite.run("s-function-closed-series", [&](Detail& d) {
    const BigRat tiny = make_rational(BigInt(1), BigInt(1) << 100);
    auto within = [&](const Interval& a, const Interval& b) {
      const Interval diff = a - b;
      return diff.less_equal(Interval::of(tiny)) == Tern::True &&
             (-diff).less_equal(Interval::of(tiny)) == Tern::True;
    };
    bool ok = within(s_closed(make_rational(1, 2), 256),
                     Interval::of(1L, 256) - Interval::of(2L, 256).log());
    ok = ok && within(s_closed(make_rational(1, 3), 256),
                      s_series(make_rational(1, 3), 200, 256));
    d << "s(1/2) vs 1 - ln 2 and s(1/3) vs its 200-term series, within 2^-100";
    return ok;
  });

  suite.run("lemma-grid-spot", [&](Detail& d) {
    const VerdictReport reps[] = {
        lemma_asymptotic_check(10, 3),     lemma_asymptotic_check(200, 1),
        lemma_asymptotic1_check(30, 10, 0), lemma_asymptotic1_check(9, 3, 2),
        binom_upper_check(4, 2),           binom_upper_check(100, 50)};
    int holds = 0;
    for (const VerdictReport& r : reps)
      if (r.holds == Verdict::Holds) ++holds;
    d << holds << "/6 spot instances hold with certainty";
    return holds == 6;
  });

  suite.run("sparsity-definition", [&](Detail& d) {
    bool ok = sparsity(unit_family(4, 2, {{1, 2}})).exp_kappa == 6;
    ok = ok && sparsity(SetFamily::unit(Universe(4), 2, {})).infinite;
    const int trials = 20 * scale;
    int good = 0;
    for (int t = 0; t < trials; ++t) {
      const SetFamily f = random_weighted_family(7, 3, 5 + t % 7, seed + t);
      BigRat total(0);
      for (std::size_t i = 0; i < f.size(); ++i) total += f.weight(i);
      if (sparsity(f).exp_kappa == binom(7, 3) / total) ++good;
    }
    d << "exp kappa = C(n,m)/||F|| on " << good << "/" << trials
      << " weighted families";
    return ok && good == trials;
  });

  suite.run("intersection-profile", [&](Detail& d) {
    const std::map<int, BigRat> want1{
        {0, BigRat(4)}, {1, BigRat(2)}, {2, BigRat(3)}};
    bool ok =
        intersection_profile(unit_family(5, 2, {{1, 2}, {1, 3}, {4, 5}})) ==
        want1;
    const std::map<int, BigRat> want2{
        {0, BigRat(2)}, {1, BigRat(0)}, {2, BigRat(2)}};
    ok = ok &&
         intersection_profile(unit_family(4, 2, {{1, 2}, {3, 4}})) == want2;
    const int trials = 20 * scale;
    int good = 0;
    for (int t = 0; t < trials; ++t) {
      const SetFamily f = random_weighted_family(8, 3, 6, seed ^ (t + 1u));
      const std::map<int, BigRat> prof = intersection_profile(f);
      BigRat mass(0), weighted(0);
      for (const auto& [k, v] : prof) {
        mass += v;
        weighted += BigRat(k) * v;
      }
      BigRat via_elements(0);
      for (int e = 1; e <= 8; ++e) {
        BigRat deg(0);
        for (std::size_t i = 0; i < f.size(); ++i)
          if (f.set(i).contains(e)) deg += f.weight(i);
        via_elements += deg * deg;
      }
      const BigRat total = family_size(f);
      if (mass == total * total && weighted == via_elements) ++good;
    }
    d << "profile aggregates match the element route on " << good << "/"
      << trials;
    return ok && good == trials;
  });

  suite.run("restriction-residual", [&](Detail& d) {
    CounterRng rng(seed + 77);
    const int trials = 20 * scale;
    int good = 0;
    for (int t = 0; t < trials; ++t) {
      const SetFamily f = random_weighted_family(7, 3, 8, seed + 1000 + t);
      ElementSet tset;
      const int ts = static_cast<int>(rng.below(3));
      while (tset.count() < ts) tset.add(1 + static_cast<int>(rng.below(7)));
      const SetFamily g = restrict_family(f, tset);
      std::vector<std::string> a, b;
      for (std::size_t i = 0; i < f.size(); ++i)
        if (tset.subset_of(f.set(i)))
          a.push_back(f.set(i).str() + "#" + rational_string(f.weight(i)));
      for (std::size_t i = 0; i < g.size(); ++i)
        b.push_back(g.set(i).str() + "#" + rational_string(g.weight(i)));
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      bool pass = a == b;
      if (pass) {
        const ResidualFamily res = residual_family(f, tset);
        std::vector<std::string> c;
        for (std::size_t i = 0; i < res.family.size(); ++i) {
          ElementSet back;
          res.family.set(i).for_each(
              [&](int el) { back.add(res.old_of_new[el - 1]); });
          c.push_back((back | tset).str() + "#" +
                      rational_string(res.family.weight(i)));
        }
        std::sort(c.begin(), c.end());
        pass = c == a;
      }
      if (pass) ++good;
    }
    d << "restriction filter and residual round-trip agree on " << good << "/"
      << trials;
    return good == trials;
  });

  suite.run("extension-bruteforce", [&](Detail& d) {
    bool ok = ext(unit_family(4, 2, {{1, 2}, {3, 4}}), 3).count == 4;
    ok = ok && ext(unit_family(4, 2, {{1, 2}}), 3).count == 2;
    ok = ok && ext(unit_family(5, 2, {{1, 2}}), 3).count == 3;
    const int trials = 15 * scale;
    int good = 0;
    for (int t = 0; t < trials; ++t) {
      const int n = 6 + t % 3;
      const int m = 2 + t % 2;
      const SetFamily f = random_family(n, m, 4 + t % 5, seed + 31 * t);
      const int l = m + 1 + t % (n - m);
      BigInt direct(0);
      for (const ElementSet& x : subsets_of_size(f.universe().all(), l)) {
        bool covered = false;
        for (std::size_t i = 0; i < f.size() && !covered; ++i)
          covered = f.set(i).subset_of(x);
        if (covered) ++direct;
      }
      const ExtensionResult by_sup = ext(f, l, ExtStrategy::BySupersets);
      const ExtensionResult by_con = ext(f, l, ExtStrategy::ByContainment);
      if (by_sup.count == direct && by_con.count == direct &&
          by_sup.count == BigInt(static_cast<long>(by_sup.family.size())))
        ++good;
    }
    d << "both route counts equal the direct containment scan on " << good
      << "/" << trials;
    return ok && good == trials;
  });

  suite.run("ext-lower-bound", [&](Detail& d) {
    bool ok = ext_lower_bound_check(unit_family(4, 2, {{1, 2}}), 3).holds ==
              Verdict::Vacuous;
    ok = ok && ext_lower_bound_check(full_slice(4, 2), 3).passed();
    const int trials = 25 * scale;
    int held = 0, vac = 0;
    for (int t = 0; t < trials; ++t) {
      const SetFamily f = random_family(6, 2, 1 + t % 10, seed + 19 * t);
      const int l = 2 + t % 5;
      const VerdictReport r = ext_lower_bound_check(f, l);
      if (r.holds == Verdict::Holds) ++held;
      if (r.holds == Verdict::Vacuous) ++vac;
    }
    d << held << " hold, " << vac << " vacuous, "
      << trials - held - vac << " other over " << trials << " seeded families";
    return ok && held + vac == trials;
  });

  suite.run("ext-sparsity", [&](Detail& d) {
    const int trials = 15 * scale;
    int good = 0;
    for (int t = 0; t < trials; ++t) {
      const SetFamily f = random_family(6, 2, 1 + t % 8, seed + 7 * t);
      const int l = 3 + t % 3;
      const int p = 1 + t % 2;
      if (ext_sparsity_checks(f, l, p).passed()) ++good;
    }
    d << good << "/" << trials
      << " seeded families pass both extension-sparsity bounds";
    return good == trials;
  });

  suite.run("gamma-unit-direct", [&](Detail& d) {
    const SetFamily f0 = unit_family(4, 2, {{1, 2}, {3, 4}});
    bool ok =
        gamma_unit_check(f0, make_rational(7, 5)).holds == Verdict::Holds;
    const VerdictReport bad = gamma_unit_check(f0, make_rational(3, 2));
    ok = ok && bad.holds == Verdict::Fails &&
         bad.witness.elements == std::vector<int>{1, 2};
    const int trials = 25 * scale;
    int good = 0;
    for (int t = 0; t < trials; ++t) {
      const SetFamily f =
          random_family(6, 2 + t % 2, 3 + t % 6, seed + 13 * t);
      const BigRat b = make_rational(6 + t % 7, 5);
      // The unit condition is about set counts, not weights.
      const BigRat total(static_cast<unsigned long>(f.size()));
      bool direct = true;
      for (int sz = 1; sz <= f.m() && direct; ++sz)
        for (const ElementSet& s : subsets_of_size(f.universe().all(), sz))
          if (BigRat(static_cast<unsigned long>(restricted_count(f, s))) *
                  pow_rat(b, sz) >
              total) {
            direct = false;
            break;
          }
      if ((gamma_unit_check(f, b).holds == Verdict::Holds) == direct) ++good;
    }
    d << "definition scan agrees on " << good << "/" << trials;
    return ok && good == trials;
  });

  suite.run("gamma-weighted-pairs", [&](Detail& d) {
    bool ok = gamma_weighted_check(unit_family(4, 2, {{1, 2}}),
                                   make_rational(6, 5))
                  .holds == Verdict::Fails;
    ok = ok && gamma_weighted_check(unit_family(4, 2, {{1, 2}, {3, 4}}),
                                    make_rational(7, 5))
                   .holds == Verdict::Holds;
    const int trials = 25 * scale;
    int good = 0;
    for (int t = 0; t < trials; ++t) {
      const SetFamily f =
          random_weighted_family(7, 2 + t % 2, 4 + t % 5, seed + 37 * t);
      const BigRat b = make_rational(5 + t % 9, 4);
      if ((gamma_weighted_check(f, b).holds == Verdict::Holds) ==
          direct_gamma_weighted(f, b))
        ++good;
    }
    d << "pair-class scan agrees on " << good << "/" << trials;
    return ok && good == trials;
  });

  suite.run("gamma-pair-direct", [&](Detail& d) {
    const SetFamily f0 = unit_family(4, 2, {{1, 2}, {1, 3}});
    const PairWeight off = PairWeight::from_matrix(
        {{BigInt(0), BigInt(1)}, {BigInt(1), BigInt(0)}});
    bool ok = gamma_pair_check(f0, off, BigRat(2), BigRat(1)).holds ==
              Verdict::Holds;
    const int trials = 20 * scale;
    int good = 0;
    for (int t = 0; t < trials; ++t) {
      const SetFamily f = random_family(7, 2, 5, seed + 3 * t);
      const PairWeight pw = random_pair_weight(f.size(), seed + 101 + t);
      const BigRat b = make_rational(5 + t % 6, 4);
      const BigRat h = make_rational(1 + t % 3, 1);
      std::map<int, BigInt> wj;
      for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t k = 0; k < f.size(); ++k)
          wj[f.set(i).intersection_count(f.set(k))] += pw.at(i, k);
      const BigRat tot = BigRat(pw.total());
      bool direct = true;
      for (int j = 1; j <= f.m() && direct; ++j) {
        const BigRat lhs = wj.count(j) ? BigRat(wj[j]) : BigRat(0);
        direct = !(lhs * pow_rat(b, j) > h * BigRat(binom(f.m(), j)) * tot);
      }
      if ((gamma_pair_check(f, pw, b, h).holds == Verdict::Holds) == direct)
        ++good;
    }
    d << "boundary instance and " << good << "/" << trials << " seeded scans";
    return ok && good == trials;
  });

  suite.run("gamma-implies-weighted", [&](Detail& d) {
    const BigRat bs[] = {make_rational(6, 5), make_rational(7, 5), BigRat(2),
                         BigRat(3)};
    const int trials = 25 * scale;
    int checked = 0, agreed = 0;
    for (int t = 0; t < trials; ++t) {
      const SetFamily f = random_family(6, 2, 2 + t % 6, seed + 17 * t);
      for (const BigRat& b : bs)
        if (gamma_unit_check(f, b).holds == Verdict::Holds) {
          ++checked;
          if (gamma_weighted_check(f, b).holds == Verdict::Holds) ++agreed;
        }
    }
    d << "unit condition held " << checked << " times; the pair form followed "
      << agreed << " times";
    return checked > 0 && checked == agreed;
  });

  suite.run("md-closed-form", [&](Detail& d) {
    const MdQuantities a = md_quantities(unit_family(4, 2, {{1, 2}, {3, 4}}), 3);
    bool ok = a.mark == 4 && a.double_mark == 4;
    const MdQuantities b = md_quantities(unit_family(4, 2, {{1, 2}, {1, 3}}), 3);
    ok = ok && b.mark == 4 && b.double_mark == 6;
    const int trials = 12 * scale;
    int good = 0;
    for (int t = 0; t < trials; ++t) {
      const SetFamily f = random_weighted_family(6, 2, 4 + t % 4, seed + 43 * t);
      const int l = 3 + t % 3;
      const MdQuantities q = md_quantities(f, l);
      BigRat mark(0), dmark(0);
      for (const ElementSet& y : subsets_of_size(f.universe().all(), l)) {
        const BigRat inside = direct_inside(f, y);
        mark += inside;
        dmark += inside * inside;
      }
      if (q.mark == mark && q.double_mark == dmark) ++good;
    }
    d << "direct double loop agrees on " << good << "/" << trials;
    return ok && good == trials;
  });

  suite.run("double-mark-bound", [&](Detail& d) {
    const int trials = 15 * scale;
    int good = 0;
    for (int t = 0; t < trials; ++t) {
      const SetFamily f = random_weighted_family(6, 2, 3 + t % 6, seed + 23 * t);
      const int l = 4 + t % 2;
      const BigRat gamma = make_rational(3 + t % 4, 4);
      const BigRat b = make_rational(14L * f.m() * f.n(), l) * gamma;
      BigRat dmark(0);
      for (const ElementSet& y : subsets_of_size(f.universe().all(), l))
        dmark += direct_inside(f, y) * direct_inside(f, y);
      const BigRat total = family_size(f);
      const BigRat cnm = BigRat(binom(6, 2));
      const BigRat bound = total * total / (cnm * cnm) /
                           (BigRat(1) - BigRat(1) / (BigRat(2) * gamma)) *
                           BigRat(binom(6, l)) * BigRat(binom(l, 2)) *
                           BigRat(binom(l, 2));
      const Verdict expect = !direct_gamma_weighted(f, b)
                                 ? Verdict::Vacuous
                                 : (dmark < bound ? Verdict::Holds
                                                  : Verdict::Fails);
      if (double_mark_check(f, l, gamma).holds == expect) ++good;
    }
    d << "verdicts match the raw recount on " << good << "/" << trials;
    return good == trials;
  });

  suite.run("weight-bounds-count", [&](Detail& d) {
    const int trials = 15 * scale;
    int good = 0, live = 0;
    for (int t = 0; t < trials; ++t) {
      const SetFamily f = random_weighted_family(6, 2, 8 + t % 6, seed + 29 * t);
      const int l = 4;
      const BigRat u = make_rational(1, 3);
      const BoundSide side = (t % 2) ? BoundSide::Above : BoundSide::Below;
      const BigRat v = (side == BoundSide::Above)
                           ? make_rational(3 + (t / 2) % 2, 2)  // 3/2 or 2
                           : make_rational(1, 2);
      const BigRat tp = (t % 3 == 0) ? make_rational(17, 16)
                                     : make_rational(11, 10);
      const VerdictReport r = weight_bounds_check(f, l, tp, u, v, side);
      const BigRat total = family_size(f);
      const BigRat ek = total / BigRat(binom(6, 2));
      BigRat dmark(0);
      for (const ElementSet& y : subsets_of_size(f.universe().all(), l))
        dmark += direct_inside(f, y) * direct_inside(f, y);
      const BigRat clm = BigRat(binom(l, 2));
      BigRat uc = u * BigRat(binom(6, l));
      const bool hyp =
          dmark > 0 &&
          dmark <= tp * BigRat(binom(6, l)) * clm * clm * ek * ek &&
          u > 0 && u < 1 && uc.get_den() == 1 &&
          tp < u * v * v + (BigRat(1) - u * v) * (BigRat(1) - u * v) /
                               (BigRat(1) - u) &&
          (side == BoundSide::Above ? v >= 1 : v <= 1);
      BigInt cnt(0);
      for (const ElementSet& y : subsets_of_size(f.universe().all(), l)) {
        const BigRat inside = direct_inside(f, y);
        const bool in = side == BoundSide::Above ? inside < v * clm * ek
                                                 : inside > v * clm * ek;
        if (in) ++cnt;
      }
      const bool claim = BigRat(cnt) > (BigRat(1) - u) * BigRat(binom(6, l));
      const Verdict expect =
          !hyp ? Verdict::Vacuous
               : (claim ? Verdict::Holds : Verdict::Fails);
      if (r.holds == expect) {
        ++good;
        if (hyp) ++live;
      }
    }
    d << "verdicts match the direct recount on " << good << "/" << trials
      << " (" << live << " with live hypotheses)";
    return good == trials;
  });

  suite.run("egt4-window", [&](Detail& d) {
    bool ok = egt4_verify(full_slice(6, 2), 4, BigRat(2)).qualifying ==
              binom(6, 4);
    const int trials = 12 * scale;
    int good = 0;
    for (int t = 0; t < trials; ++t) {
      const SetFamily f = random_weighted_family(7, 2, 5 + t % 8, seed + 41 * t);
      const int l = 4 + t % 3;
      const BigRat gamma = make_rational(2 + t % 5, 2);
      const Egt4Result r = egt4_verify(f, l, gamma);
      const BigRat centre =
          BigRat(binom(l, 2)) * family_size(f) / BigRat(binom(7, 2));
      const BigRat g3 = BigRat(1) / gamma;
      BigInt cnt(0);
      for (const ElementSet& y : subsets_of_size(f.universe().all(), l)) {
        const BigRat x = direct_inside(f, y) / centre - 1;
        const BigRat cube = x * x * x;
        if (cube < g3 && -cube < g3) ++cnt;
      }
      if (r.qualifying == cnt) ++good;
    }
    d << "full slice saturates; window count agrees on " << good << "/"
      << trials;
    return ok && good == trials;
  });

  suite.run("egt4-unit-crosscheck", [&](Detail& d) {
    const int trials = 10 * scale;
    int good = 0;
    for (int t = 0; t < trials; ++t) {
      const SetFamily f = random_family(7, 2, 4 + t % 7, seed + 47 * t);
      const int l = 4 + t % 2;
      const BigRat gamma = make_rational(3 + t % 4, 2);
      if (egt4cor_verify(f, l, gamma).qualifying ==
          egt4_verify(f, l, gamma).qualifying)
        ++good;
    }
    d << "membership and unit-weight counts agree on " << good << "/" << trials;
    return good == trials;
  });

  suite.run("egt4-pair-window", [&](Detail& d) {
    // all weight on one diagonal entry: Y avoiding that member qualify.
    const SetFamily f0 =
        unit_family(8, 2, {{1, 2}, {3, 4}, {5, 6}, {7, 8}, {1, 3}});
    std::vector<std::vector<BigInt>> w(5, std::vector<BigInt>(5, BigInt(0)));
    w[0][0] = 1;
    const Egt4Result spike = egt4tilde_verify(f0, PairWeight::from_matrix(w), 5,
                                              BigRat(2), BigRat(1),
                                              make_rational(1, 2));
    bool ok = spike.qualifying == binom(8, 5) - binom(6, 3);
    const int trials = 10 * scale;
    int good = 0;
    for (int t = 0; t < trials; ++t) {
      const SetFamily f = random_family(8, 2, 5, seed + 53 * t);
      const PairWeight pw = random_pair_weight(5, seed + 900 + t);
      const BigRat gamma = BigRat(2 + t % 3);
      const BigRat h = make_rational(1 + t % 2, 1);
      const BigRat eps = make_rational(1, 2 + t % 3);
      const Egt4Result r = egt4tilde_verify(f, pw, 5, gamma, h, eps);
      const BigRat c85 = BigRat(binom(5, 2));
      const BigRat thr =
          h * c85 * c85 * BigRat(pw.total()) /
          (eps * (BigRat(1) - BigRat(1) / (BigRat(2) * gamma)) *
           BigRat(binom(8, 2)) * BigRat(binom(8, 2)));
      BigInt cnt(0);
      for (const ElementSet& y : subsets_of_size(f.universe().all(), 5)) {
        BigRat mass(0);
        for (std::size_t i = 0; i < f.size(); ++i)
          for (std::size_t k = 0; k < f.size(); ++k)
            if (f.set(i).subset_of(y) && f.set(k).subset_of(y))
              mass += BigRat(pw.at(i, k));
        if (mass < thr) ++cnt;
      }
      if (r.qualifying == cnt) ++good;
    }
    d << "spike instance and " << good << "/" << trials << " seeded windows";
    return ok && good == trials;
  });

  suite.run("term-bound-interval", [&](Detail& d) {
    const bool j1 =
        egt4_term_bound_check(10000, 3, 1000, BigRat(10), 1).holds ==
        Verdict::Holds;
    const bool j2 =
        egt4_term_bound_check(10000, 3, 1000, BigRat(10), 2).holds ==
        Verdict::Holds;
    d << "paper-scale parameters hold at j = 1 and j = m - 1";
    return j1 && j2;
  });

  suite.run("gamma-anchor", [&](Detail& d) {
    GammaParams gp;
    gp.n = 100;
    gp.m = 3;
    gp.l = 30;
    gp.gamma = BigRat(10);
    bool ok = gp.b() == make_rational(14L * 10 * 3 * 100, 30);
    ok = ok && gp.delta().is_positive();
    // The anchor needs the gamma-dependent part of delta to die off.
    ok = ok && gp.sanity_anchor().holds == Verdict::Fails;
    gp.gamma = BigRat(300);
    ok = ok && gp.sanity_anchor().holds == Verdict::Holds;
    d << "b closed form, positive delta, anchor fails at gamma = 10 and "
         "holds at 300";
    return ok;
  });

  suite.run("generator-definition", [&](Detail& d) {
    const SetFamily f0 = unit_family(6, 2, {{1, 2}, {1, 3}});
    bool ok = is_extension_generator(f0, ElementSet::of({1}), 3, BigRat(1))
                  .holds == Verdict::Holds;
    CounterRng rng(seed + 7);
    const int trials = 15 * scale;
    int good = 0;
    for (int t = 0; t < trials; ++t) {
      const SetFamily f = random_family(7, 2, 3 + t % 6, seed + 59 * t);
      ElementSet tset;
      const int ts = static_cast<int>(rng.below(3));
      while (tset.count() < ts) tset.add(1 + static_cast<int>(rng.below(7)));
      const int l = 2 + t % 6;
      const BigRat lam = make_rational(1 + t % 4, 2);
      const VerdictReport r = is_extension_generator(f, tset, l, lam);
      BigInt cnt(0);
      for (const ElementSet& w :
           subsets_of_size(f.universe().all() - tset, l - tset.count())) {
        bool hit = false;
        for (std::size_t i = 0; i < f.size() && !hit; ++i)
          hit = tset.subset_of(f.set(i)) &&
                (f.set(i) - tset).subset_of(w);
        if (hit) ++cnt;
      }
      Tern cmp = Tern::Unknown;
      for (long p = 128; p <= 512 && cmp == Tern::Unknown; p *= 2) {
        const Interval req =
            Interval::of(binom(7 - tset.count(), l - tset.count()), p) *
            (Interval::of(1L, p) - (-Interval::of(lam, p)).exp());
        cmp = req.less_equal(Interval::of(cnt, p));
      }
      if (r.holds == verdict_of(cmp)) ++good;
    }
    d << "frozen star instance and " << good << "/" << trials
      << " independent recounts";
    return ok && good == trials;
  });

  suite.run("core-extract-post", [&](Detail& d) {
    std::vector<ElementSet> star;
    for (int e = 2; e <= 5; ++e) star.push_back(ElementSet::of({1, e}));
    const CoreExtraction ce =
        gamma_core_extract(SetFamily::unit(Universe(5), 2, std::move(star)),
                           BigRat(2));
    bool ok = ce.t == ElementSet::of({1}) && ce.residual_gamma.passed() &&
              ce.t_bound.passed();
    const int trials = 15 * scale;
    int good = 0;
    for (int t = 0; t < trials; ++t) {
      const SetFamily f =
          random_family(6, 2 + t % 2, 3 + t % 6, seed + 61 * t);
      const BigRat b = (t % 2) ? make_rational(6, 5) : BigRat(2);
      const CoreExtraction c = gamma_core_extract(f, b);
      bool pass = c.residual_gamma.passed() && c.t_bound.passed();
      const BigRat total(static_cast<unsigned long>(f.size()));
      auto count_at = [&](const ElementSet& s) {
        return BigRat(static_cast<unsigned long>(restricted_count(f, s)));
      };
      pass = pass && count_at(c.t) * pow_rat(b, c.t.count()) >= total;
      bool inside_member = c.t.empty();
      for (std::size_t i = 0; i < f.size() && !inside_member; ++i)
        inside_member = c.t.subset_of(f.set(i));
      if (pass && inside_member) ++good;
    }
    d << "star pins T = {1}; density invariant holds on " << good << "/"
      << trials;
    return ok && good == trials;
  });

  suite.run("egt-find-certificate", [&](Detail& d) {
    const GeneratorCertificate c0 =
        egt_find(unit_family(10, 2, {{1, 2}}), 6, make_rational(17, 16),
                 make_rational(3, 4));
    bool ok = c0.t == ElementSet::of({1, 2}) && c0.degenerate &&
              c0.achieved == binom(8, 4) && c0.l0 == 4 &&
              c0.property.passed() && c0.t_bound.passed();
    const int trials = 10 * scale;
    int good = 0;
    for (int t = 0; t < trials; ++t) {
      const SetFamily f = random_family(10, 2, 2 + t % 5, seed + 67 * t);
      const GeneratorCertificate c =
          egt_find(f, 6, make_rational(17, 16), make_rational(3, 4));
      BigInt cnt(0);
      for (const ElementSet& w : subsets_of_size(
               f.universe().all() - c.t, static_cast<int>(c.l0))) {
        bool hit = false;
        for (std::size_t i = 0; i < f.size() && !hit; ++i)
          hit = c.t.subset_of(f.set(i)) && (f.set(i) - c.t).subset_of(w);
        if (hit) ++cnt;
      }
      bool pass = cnt == c.achieved;
      if (c.property.holds == Verdict::Holds)
        pass = pass &&
               c.required.less_equal(Interval::of(c.achieved)) == Tern::True;
      if (pass) ++good;
    }
    d << "frozen trace and achieved-count recomputation on " << good << "/"
      << trials;
    return ok && good == trials;
  });

  suite.run("split-tuples", [&](Detail& d) {
    bool ok = split1_identity_check(full_slice(4, 2), 2, 1).passed();
    ok = ok && split1_identity_check(unit_family(6, 2, {{1, 4}}), 3, 1).passed();
    const int trials = 8 * scale;
    int good = 0, cases = 0;
    for (int t = 0; t < trials; ++t) {
      const int m = 2 + t % 2;
      const int dd = 6 / m;
      const SetFamily f = random_weighted_family(6, m, 3 + t % 5, seed + 71 * t);
      for (int j = 0; j <= m; ++j) {
        ++cases;
        const BigRat lhs = direct_tuples(f, dd, j);
        BigRat rhs = BigRat(pow_int(BigInt(dd), j)) *
                     BigRat(binom(6 - dd * j, m - j)) * family_size(f) /
                     BigRat(binom(6, m));
        for (int i = 0; i < j; ++i) rhs *= BigRat(binom(6 - dd * i, dd));
        if (lhs == rhs && split1_identity_check(f, dd, j).passed()) ++good;
      }
    }
    d << "ordered-tuple totals meet the closed form on " << good << "/"
      << cases << " (d, j) cases";
    return ok && good == cases;
  });

  suite.run("split-average", [&](Detail& d) {
    const int trials = 6 * scale;
    int good = 0;
    for (int t = 0; t < trials; ++t) {
      const int m = 2 + t % 2;
      const int dd = 6 / m;
      const SetFamily f = random_weighted_family(6, m, 3 + t % 6, seed + 73 * t);
      const BigRat bound = pow_rat(make_rational(6, m), m) * family_size(f) /
                           BigRat(binom(6, m));
      BigRat total(0), best(-1);
      BigInt count(0);
      std::vector<ElementSet> blocks;
      visit_splits(ElementSet::range(1, 6), dd, blocks,
                   [&](const std::vector<ElementSet>& bs) {
                     BigRat sz(0);
                     for (std::size_t i = 0; i < f.size(); ++i) {
                       bool hits = true;
                       for (const ElementSet& x : bs)
                         hits = hits && f.set(i).intersection_count(x) == 1;
                       if (hits) sz += f.weight(i);
                     }
                     total += sz;
                     if (sz > best) best = sz;
                     ++count;
                   });
      const Split2Result sr = split2_find(f, seed + t);
      bool pass = total / BigRat(count) == bound;
      pass = pass && sr.report.holds == Verdict::Holds && sr.size >= bound;
      pass = pass && family_size(family_on_split(f, sr.split)) == sr.size;
      pass = pass && best >= sr.size;
      if (pass) ++good;
    }
    d << "mean over all unordered splits equals the bound on " << good << "/"
      << trials;
    return good == trials;
  });

  suite.run("split-sparsity", [&](Detail& d) {
    int cases = 0, good = 0;
    for (int n = 2; n <= 8; ++n)
      for (int m = 1; m <= n; ++m) {
        if (n % m) continue;
        for (int t = 0; t < 2 * scale; ++t) {
          const SetFamily f =
              random_family(n, m, 2 + t, seed + n * 100 + m * 10 + t);
          const Split2Result sr = split2_find(f, seed + t);
          if (sr.report.holds != Verdict::Holds) continue;
          ++cases;
          const Verdict v = split_sparsity_check(f, sr.split).holds;
          if (v == Verdict::Holds || v == Verdict::Vacuous) ++good;
        }
      }
    d << good << "/" << cases << " qualifying splits meet the sparsity display";
    return cases > 0 && good == cases;
  });

  suite.run("sunflower-equivalence", [&](Detail& d) {
    bool ok = find_sunflower(unit_family(3, 2, {{1, 2}, {2, 3}, {3, 1}}), 3)
                  .status == SearchStatus::NotFound;
    const SunflowerSearch petals =
        find_sunflower(unit_family(4, 2, {{1, 2}, {1, 3}, {1, 4}}), 3);
    ok = ok && petals.status == SearchStatus::Found &&
         petals.witness->core == ElementSet::of({1});
    const SunflowerSearch disjoint =
        find_sunflower(unit_family(3, 1, {{1}, {2}, {3}}), 3);
    ok = ok && disjoint.status == SearchStatus::Found &&
         disjoint.witness->core.empty();
    ok = ok && find_sunflower(unit_family(5, 2,
                                          {{1, 2}, {2, 3}, {3, 1}, {4, 5}}),
                              3)
                   .status == SearchStatus::NotFound;
    const int trials = 60 * scale;
    int good = 0;
    for (int t = 0; t < trials; ++t) {
      const int k = 2 + t % 3;
      const FamilyShape shape =
          (t % 3 == 0) ? FamilyShape::Star : FamilyShape::Uniform;
      const SetFamily f = random_family(8 + t % 3, 2 + t % 3, 1 + t % 8,
                                        seed + 79 * t, shape);
      const SunflowerSearch a = find_sunflower(f, k);
      const SunflowerSearch b = naive_find_sunflower(f, k);
      bool pass = a.status == b.status;
      if (pass && a.status == SearchStatus::Found)
        pass = is_sunflower(f, *a.witness, k) && is_sunflower(f, *b.witness, k);
      if (pass) ++good;
    }
    d << "fast and naive searches agree on " << good << "/" << trials
      << " seeded instances";
    return ok && good == trials;
  });

  suite.run("erdos-rado-threshold", [&](Detail& d) {
    bool ok = erdos_rado_threshold(2, 3) == 8 && erdos_rado_threshold(3, 3) == 48;
    const int trials = 25 * scale;
    int good = 0;
    for (int t = 0; t < trials; ++t) {
      const SetFamily f = random_family(10, 2, 9 + t % 4, seed + 83 * t);
      if (f.size() > 8 && find_sunflower(f, 3).status == SearchStatus::Found)
        ++good;
    }
    d << "above-threshold families always contain a 3-sunflower: " << good
      << "/" << trials;
    return ok && good == trials;
  });

  suite.run("vectors-and-sets", [&](Detail& d) {
    const auto all = enumerate_vectors(1, 2, 2, VectorFilter::All);
    const auto beta = enumerate_vectors(1, 2, 2, VectorFilter::Beta, 1);
    const auto zt = enumerate_vectors(1, 2, 2, VectorFilter::ZeroTail);
    bool ok = all.size() == 9 && beta.size() == 6 && zt.size() == 3;
    ok = ok && zt[0].v == std::vector<int>{0, 0} &&
         zt[1].v == std::vector<int>{1, 0} &&
         zt[2].v == std::vector<int>{2, 0};
    const BlockPartition p = make_block_partition(
        Universe(4), 2, {ElementSet::of({1, 2}), ElementSet::of({3, 4})});
    const auto sets =
        sets_with_vector(p, CardinalityVector{1, {1, 1}}, ElementSet());
    ok = ok && sets.size() == 4 && sets[0] == ElementSet::of({1, 3}) &&
         sets[1] == ElementSet::of({1, 4}) &&
         sets[2] == ElementSet::of({2, 3}) &&
         sets[3] == ElementSet::of({2, 4});
    const auto avoid =
        sets_with_vector(p, CardinalityVector{1, {1, 0}}, ElementSet::of({1}));
    ok = ok && avoid.size() == 1 && avoid[0] == ElementSet::of({2});
    d << "vector counts 9/6/3 and the four (1,1)-sets in order";
    return ok;
  });

  suite.run("pi-toy-ratio", [&](Detail& d) {
    const ConstructionParams params =
        ConstructionParams::direct(2, 2, 1, make_rational(1, 2), BigRat(4));
    const BlockPartition p = make_block_partition(
        Universe(4), 2, {ElementSet::of({1, 2}), ElementSet::of({3, 4})});
    const BigRat ratio =
        pi_condition_ii_value(unit_family(4, 2, {{1, 3}, {2, 4}}), p, 1,
                              params);
    bool ok = ratio == 2;
    const BigRat grown = pi_condition_ii_value(
        unit_family(4, 2, {{1, 3}, {2, 4}, {1, 4}, {2, 3}}), p, 1, params);
    ok = ok && grown == 1 && grown < ratio;
    d << "toy ratio " << rational_string(ratio) << " falls to "
      << rational_string(grown) << " as the family fills in";
    return ok;
  });

  suite.run("step1-hand-sums", [&](Detail& d) {
    const BlockPartition p = make_block_partition(
        Universe(6), 2, {ElementSet::of({1, 2}), ElementSet::of({3, 4})});
    CounterRng rng(seed + 79);
    const int trials = 8 * scale;
    int good = 0;
    for (int t = 0; t < trials; ++t) {
      const SetFamily f = random_family(6, 2 + t % 3, 3 + t % 4, seed + 89 * t);
      const int j = 1 + t % 2;
      const int len = p.r() - j + 1;
      CardinalityVector v{j, std::vector<int>(len)};
      for (int& e : v.v) e = static_cast<int>(rng.below(3));
      const auto cands = sets_with_vector(p, v, ElementSet());
      const ElementSet s = cands[rng.below(cands.size())];
      const BigRat b = make_rational(3 + t % 3, 2);
      const int beta = t % 2;
      const auto reports = step1_conditions_check(f, p, j, s, v, b, beta);
      ElementSet zone;
      for (int z = j - 1; z < p.r(); ++z) zone = zone | p.blocks[z];
      zone = zone - s;
      BigRat sum1(0), sum2(0);
      for_each_nonempty_subset(zone, [&](const ElementSet& tt) {
        const BigRat rs = restricted_size(f, s | tt);
        if (rs == 0) return;
        BigInt denom(1);
        for (int idx = 0; idx < len; ++idx)
          denom *= binom(2 - v.v[idx],
                         tt.intersection_count(p.blocks[j - 1 + idx]));
        const int norm = tt.count();
        if (norm > beta) sum1 += rs * rs * pow_rat(b, norm) / BigRat(denom);
        if (tt.subset_of(p.blocks[j - 1]))
          sum2 += rs * rs * pow_rat(b / 8, norm) / BigRat(denom);
      });
      const BigRat base = restricted_size(f, s);
      bool pass =
          (reports[0].holds == Verdict::Holds) == (sum1 <= base * base);
      pass = pass &&
             (reports[1].holds == Verdict::Holds) == (sum2 <= base * base);
      const BigRat floor3 = family_size(f) * pow_rat(b, -v.norm()) / 3;
      pass = pass && (reports[2].holds == Verdict::Holds) == (base >= floor3);
      if (pass) ++good;
    }
    d << "raw-subset sums reproduce all three verdicts on " << good << "/"
      << trials;
    return good == trials;
  });

  suite.run("toy-witness-shapes", [&](Detail& d) {
    const ConstructionParams params =
        ConstructionParams::direct(2, 2, 1, make_rational(1, 2), BigRat(4));
    const BlockPartition p = make_block_partition(
        Universe(6), 2, {ElementSet::of({1, 2}), ElementSet::of({3, 4})});
    const ToyWitnessResult conc = toy_witness_search(
        unit_family(6, 3, {{1, 2, 3}, {1, 2, 4}}), p, params, 1);
    bool ok = conc.status == SearchStatus::Found &&
              conc.witness->v.v == std::vector<int>{2, 0} &&
              conc.witness->s == ElementSet::of({1, 2});
    const ToyWitnessResult spread = toy_witness_search(
        unit_family(6, 1, {{1}, {2}, {3}, {4}}), p, params, 1);
    ok = ok && spread.status == SearchStatus::Found &&
         spread.witness->v.norm() == 0 && spread.witness->s.empty();
    d << "concentrated family pins S = Z_1; spread family returns the empty core";
    return ok;
  });

  suite.run("pi-check-levels", [&](Detail& d) {
    const ConstructionParams params =
        ConstructionParams::direct(1, 2, 0, make_rational(1, 2), BigRat(2));
    const BlockPartition p = make_block_partition(
        Universe(6), 1, {ElementSet::of({1, 2, 3}), ElementSet::of({4, 5, 6})});
    const SetFamily f1 = unit_family(6, 2, {{1, 4}, {1, 5}});
    const SetFamily f2 = unit_family(6, 2, {{2, 4}, {2, 6}});
    const SetFamily f3 = unit_family(6, 2, {{3, 5}, {3, 6}});
    bool ok = pi_check(f1, f2, f3, p, 2, params, BigInt(6)).holds ==
              Verdict::Holds;
    const SetFamily clash = unit_family(6, 2, {{1, 4}, {2, 6}});
    const VerdictReport bad = pi_check(f1, clash, f3, p, 2, params, BigInt(6));
    ok = ok && bad.holds == Verdict::Fails;
    d << "block-disjoint trio holds at the final level; a shared element is caught";
    return ok;
  });

  suite.run("paper-constants-display", [&](Detail& d) {
    bool ok = !paper_constants(make_rational(1, 25), 16).finite;
    const PaperConstants big = paper_constants(make_rational(3, 4), 10000);
    ok = ok && big.finite && big.q == 1000 && big.r == 10;
    ok = ok && big.c1.less(Interval::of(65537L)) == Tern::True &&
         Interval::of(65535L).less(big.c1) == Tern::True;
    ok = ok && big.beta.has_value() && *big.beta == 57;
    d << "eps = 1/25 overflows; m = 10^4 at eps = 3/4 gives q = 1000, r = 10, "
         "beta = 57";
    return ok;
  });

  suite.run("block-assumption-guard", [&](Detail& d) {
    const BlockPartition p = make_block_partition(
        Universe(4), 2, {ElementSet::of({1, 2}), ElementSet::of({3, 4})});
    bool threw = false;
    try {
      require_block_assumption(p, unit_family(4, 2, {{1, 3}}));
    } catch (const std::invalid_argument&) {
      threw = true;
    }
    require_block_assumption(p, unit_family(4, 4, {{1, 2, 3, 4}}));
    d << "violation throws with the offending member; conforming family passes";
    return threw;
  });

  suite.run("phase2-induction", [&](Detail& d) {
    const int trials = 30 * scale;
    int good = 0;
    for (int t = 0; t < trials; ++t) {
      const int n = 5 + t % 8;
      const int m = std::min(1 + t % 3, n / 2);
      const SetFamily f = random_family(n, m, 1 + t % 10, seed + 97 * t);
      if (phase2_check(f).passed()) ++good;
    }
    d << good << "/" << trials << " seeded families pass (holds or vacuous)";
    return good == trials;
  });

  return std::move(suite.rows);
}

bool all_pass(const std::vector<OracleCaseResult>& results) {
  for (const OracleCaseResult& r : results)
    if (!r.pass) return false;
  return true;
}

std::string oracle_table(const std::vector<OracleCaseResult>& results) {
  std::size_t width = 4;
  for (const OracleCaseResult& r : results)
    width = std::max(width, r.name.size());
  std::ostringstream out;
  int passed = 0;
  for (const OracleCaseResult& r : results) {
    out << (r.pass ? "pass  " : "FAIL  ") << r.name
        << std::string(width - r.name.size() + 2, ' ') << r.detail << "  ["
        << r.runtime_ms << " ms]\n";
    if (r.pass) ++passed;
  }
  out << passed << "/" << results.size() << " cases pass\n";
  return out.str();
}

}  // namespace sunflower
