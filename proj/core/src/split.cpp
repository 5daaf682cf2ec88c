#include "sunflower/split.hpp"

#include <functional>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "sunflower/binom.hpp"
#include "sunflower/random_families.hpp"

namespace sunflower {
namespace {

// Sum over ordered j-tuples of disjoint d-blocks of ||F_X||, by recursion on
// the tuple position. `alive` holds the member indices still hitting every
// chosen block exactly once; an empty alive list contributes nothing to any
// completion, so that branch is cut.
void tuple_sum(const SetFamily& f, const ElementSet& remaining, int level,
               int j, int d, const std::vector<std::size_t>& alive,
               BigRat& acc) {
  if (level == j) {
    for (std::size_t i : alive) acc += f.weight(i);
    return;
  }
  for_each_subset(remaining, d, [&](const ElementSet& block) {
    std::vector<std::size_t> next;
    next.reserve(alive.size());
    for (std::size_t i : alive)
      if (f.set(i).intersection_count(block) == 1) next.push_back(i);
    if (!next.empty())
      tuple_sum(f, remaining - block, level + 1, j, d, next, acc);
  });
}

// Unordered partitions into d-blocks, canonically: the block holding the
// smallest remaining element comes first. visit returns true to stop.
bool enum_partitions(
    const ElementSet& remaining, int d, std::vector<ElementSet>& acc,
    const std::function<bool(const std::vector<ElementSet>&)>& visit) {
  if (remaining.empty()) return visit(acc);
  const int first = remaining.min_element();
  bool keep = true;
  for_each_subset(remaining.without(first), d - 1,
                  [&](const ElementSet& companions) {
                    acc.push_back(companions.with(first));
                    keep = enum_partitions(remaining - acc.back(), d, acc,
                                           visit);
                    acc.pop_back();
                    return keep;
                  });
  return keep;
}

BigRat eval_split(const SetFamily& f, const std::vector<ElementSet>& blocks) {
  BigRat s(0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    bool hits = true;
    for (const ElementSet& block : blocks) {
      if (f.set(i).intersection_count(block) != 1) {
        hits = false;
        break;
      }
    }
    if (hits) s += f.weight(i);
  }
  return s;
}

std::string blocks_string(const std::vector<ElementSet>& blocks) {
  std::string out;
  for (const ElementSet& b : blocks) out += b.str();
  return out;
}

}  // namespace

ElementSet SplitVector::support() const {
  ElementSet u;
  for (const ElementSet& b : blocks) u = u | b;
  return u;
}

SplitVector make_split(const Universe& u, int d,
                       std::vector<ElementSet> blocks) {
  if (d < 1) throw std::invalid_argument("make_split: d must be positive");
  if (static_cast<long>(blocks.size()) * d > u.n)
    throw std::invalid_argument("make_split: blocks exceed the universe");
  ElementSet seen;
  for (const ElementSet& b : blocks) {
    if (static_cast<int>(b.count()) != d)
      throw std::invalid_argument("make_split: block of the wrong size");
    if (!u.contains_set(b))
      throw std::invalid_argument("make_split: block outside the universe");
    if (seen.intersects(b))
      throw std::invalid_argument("make_split: blocks overlap");
    seen = seen | b;
  }
  return SplitVector{d, std::move(blocks)};
}

SetFamily family_on_split(const SetFamily& f, const SplitVector& s) {
  for (const ElementSet& b : s.blocks)
    if (!f.universe().contains_set(b))
      throw std::invalid_argument("family_on_split: split outside the universe");
  std::vector<ElementSet> sets;
  std::vector<BigRat> weights;
  for (std::size_t i = 0; i < f.size(); ++i) {
    bool hits = true;
    for (const ElementSet& block : s.blocks) {
      if (f.set(i).intersection_count(block) != 1) {
        hits = false;
        break;
      }
    }
    if (!hits) continue;
    sets.push_back(f.set(i));
    if (!f.is_unit()) weights.push_back(f.weight(i));
  }
  return f.is_unit()
             ? SetFamily::unit(f.universe(), f.m(), std::move(sets))
             : SetFamily::weighted(f.universe(), f.m(), std::move(sets),
                                   std::move(weights));
}

VerdictReport split1_identity_check(const SetFamily& f, int d, int j) {
  const int n = f.n();
  const int m = f.m();
  if (m < 1 || d < 2 || n != d * m)
    throw std::invalid_argument(
        "split1_identity_check: requires d = n/m >= 2");
  if (j < 0 || j > m)
    throw std::invalid_argument("split1_identity_check: j outside [0, m]");
  StopWatch watch;

  BigRat lhs(0);
  std::vector<std::size_t> alive(f.size());
  std::iota(alive.begin(), alive.end(), std::size_t{0});
  tuple_sum(f, f.universe().all(), 0, j, d, alive, lhs);

  BigRat rhs(pow_int(BigInt(d), static_cast<unsigned long>(j)));
  rhs *= BigRat(binom(n - d * j, m - j));
  rhs *= family_size(f);
  rhs /= BigRat(binom(n, m));
  for (int i = 0; i < j; ++i) rhs *= BigRat(binom(n - d * i, d));

  VerdictReport report;
  report.claim_id = "lemma-3.1";
  report.lhs = ReportValue::of(lhs);
  report.rhs = ReportValue::of(rhs);
  report.holds = lhs == rhs ? Verdict::Holds : Verdict::Fails;
  report.note =
      "ordered tuples enumerated outright; e^{-kappa} taken as ||F||/C(n, m)";
  report.runtime_ms = watch.ms();
  return report;
}

Split2Result split2_find(const SetFamily& f, unsigned long long seed,
                         long budget) {
  const int n = f.n();
  const int m = f.m();
  if (f.size() == 0) throw std::invalid_argument("split2_find: empty family");
  if (m < 1 || n % m != 0)
    throw std::invalid_argument("split2_find: requires m | n");
  if (budget < 1)
    throw std::invalid_argument("split2_find: budget must be positive");
  const int d = n / m;
  StopWatch watch;

  const BigRat bound =
      pow_rat(make_rational(n, m), m) * family_size(f) / BigRat(binom(n, m));

  std::vector<ElementSet> best;
  BigRat best_size(-1);

  BigInt partitions(1);
  for (int i = 0; i < m; ++i) partitions *= binom(n - d * i - 1, d - 1);

  if (partitions <= budget) {
    std::vector<ElementSet> acc;
    enum_partitions(f.universe().all(), d, acc,
                    [&](const std::vector<ElementSet>& blocks) {
                      BigRat s = eval_split(f, blocks);
                      if (s > best_size) {
                        best_size = s;
                        best = blocks;
                      }
                      // Keep enumerating until a qualifying split turns up.
                      return best_size < bound;
                    });
  } else {
    CounterRng rng(seed);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    for (long restart = 0; restart < budget && best_size < bound; ++restart) {
      for (int i = n - 1; i > 0; --i)
        std::swap(perm[i], perm[rng.below(static_cast<std::uint64_t>(i) + 1)]);
      std::vector<ElementSet> blocks(m);
      for (int i = 0; i < n; ++i) blocks[i / d] = blocks[i / d].with(perm[i]);
      BigRat s = eval_split(f, blocks);

      // Accept any strictly improving cross-block swap until none is left.
      // Strict improvement bounds the climb; the step cap is a backstop.
      long steps = 0;
      bool improved = true;
      while (improved && steps < static_cast<long>(n) * n) {
        improved = false;
        for (int a = 0; a < m && !improved; ++a) {
          for (int b = a + 1; b < m && !improved; ++b) {
            for (int x : blocks[a].elements()) {
              for (int y : blocks[b].elements()) {
                std::vector<ElementSet> trial = blocks;
                trial[a] = trial[a].without(x).with(y);
                trial[b] = trial[b].without(y).with(x);
                BigRat ts = eval_split(f, trial);
                ++steps;
                if (ts > s) {
                  blocks = std::move(trial);
                  s = ts;
                  improved = true;
                  break;
                }
              }
              if (improved) break;
            }
          }
        }
      }
      if (s > best_size) {
        best_size = s;
        best = blocks;
      }
    }
  }

  Split2Result out;
  out.split = make_split(f.universe(), d, best);
  out.size = best_size;
  out.bound = bound;
  out.exhausted_budget = best_size < bound;

  VerdictReport report;
  report.claim_id = "corollary-3.2";
  report.lhs = ReportValue::of(best_size);
  report.rhs = ReportValue::of(bound);
  if (best_size >= bound) {
    report.holds = Verdict::Holds;
    report.note = "the bound is the exact average of ||F_X|| over all splits";
  } else {
    report.holds = Verdict::Inconclusive;
    report.note =
        "search budget exhausted below the bound; the qualifying split exists "
        "but was not found";
  }
  report.witness.text = blocks_string(best);
  report.runtime_ms = watch.ms();
  out.report = std::move(report);
  return out;
}

VerdictReport split_sparsity_check(const SetFamily& f, const SplitVector& s,
                                   long prec) {
  const int n = f.n();
  const int m = f.m();
  if (m < 1 || n % m != 0 || s.d != n / m || s.j() != m)
    throw std::invalid_argument(
        "split_sparsity_check: requires a full m-split");
  make_split(f.universe(), s.d, s.blocks);  // revalidate block structure
  StopWatch watch;

  VerdictReport report;
  report.claim_id = "eq-3.1";
  SetFamily fx = family_on_split(f, s);
  if (fx.size() == 0) {
    report.holds = Verdict::Vacuous;
    report.note = "F_X is empty, so its sparsity display is undefined";
    report.runtime_ms = watch.ms();
    return report;
  }

  // display = ln C(n,m) - ln((n/m)^m ||F||/C(n,m)) = ln of the rational
  // C(n,m)^2 m^m / (n^m ||F||). display < kappa(F) + m collapses to the
  // F-independent comparison C(n,m) m^m < e^m n^m.
  const BigRat total = family_size(f);
  const BigRat inside = BigRat(binom(n, m)) * BigRat(binom(n, m)) /
                        (pow_rat(make_rational(n, m), m) * total);
  const BigInt lhs_int =
      binom(n, m) * pow_int(BigInt(m), static_cast<unsigned long>(m));
  const BigInt npow = pow_int(BigInt(n), static_cast<unsigned long>(m));
  Tern cmp = Tern::Unknown;
  for (long p = prec; p <= 4 * prec && cmp == Tern::Unknown; p *= 2)
    cmp = Interval::of(lhs_int, p)
              .less(Interval::of(static_cast<long>(m), p).exp() *
                    Interval::of(npow, p));
  report.holds = verdict_of(cmp);
  report.lhs = ReportValue::of(Interval::of(inside, prec).log());
  report.rhs =
      ReportValue::of(sparsity(f).log(prec) + Interval::of(static_cast<long>(m), prec));
  report.note = "decided by C(n,m) m^m < e^m n^m; actual kappa(F_X) = " +
                sparsity(fx).str();
  report.runtime_ms = watch.ms();
  return report;
}

}  // namespace sunflower
