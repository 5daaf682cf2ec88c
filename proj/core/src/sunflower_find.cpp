#include "sunflower/sunflower_find.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <set>
#include <stdexcept>

namespace sunflower {
namespace {

struct BySizeThenSeq {
  bool operator()(const ElementSet& a, const ElementSet& b) const {
    if (a.count() != b.count()) return a.count() < b.count();
    return ElementSet::seq_less(a, b);
  }
};

// Backtracking disjoint packing of petals for one fixed core. Returns true
// with `chosen` filled on success; sets `exceeded` when the visit budget
// runs out mid-search.
bool pack_petals(const std::vector<std::size_t>& members,
                 const std::vector<ElementSet>& petals, int k,
                 std::size_t start, const ElementSet& used,
                 std::vector<std::size_t>& chosen, long& visits, long budget,
                 bool& exceeded) {
  if (static_cast<int>(chosen.size()) == k) return true;
  if (++visits > budget) {
    exceeded = true;
    return false;
  }
  const std::size_t need = static_cast<std::size_t>(k) - chosen.size();
  for (std::size_t idx = start; idx < members.size(); ++idx) {
    if (members.size() - idx < need) break;
    if (petals[idx].intersects(used)) continue;
    chosen.push_back(members[idx]);
    if (pack_petals(members, petals, k, idx + 1, used | petals[idx], chosen,
                    visits, budget, exceeded))
      return true;
    chosen.pop_back();
    if (exceeded) return false;
  }
  return false;
}

}  // namespace

bool is_sunflower(const SetFamily& f, const Sunflower& s, int k) {
  if (static_cast<int>(s.petals.size()) != k) return false;
  std::set<std::size_t> distinct(s.petals.begin(), s.petals.end());
  if (distinct.size() != s.petals.size()) return false;
  for (std::size_t i : s.petals)
    if (i >= f.size()) return false;
  for (std::size_t a = 0; a < s.petals.size(); ++a)
    for (std::size_t b = a + 1; b < s.petals.size(); ++b) {
      const ElementSet meet = f.set(s.petals[a]) & f.set(s.petals[b]);
      if (!(meet == s.core)) return false;
    }
  return true;
}

SunflowerSearch find_sunflower(const SetFamily& f, int k, long budget) {
  if (k < 2) throw std::invalid_argument("find_sunflower: requires k >= 2");
  SunflowerSearch out;
  if (static_cast<int>(f.size()) < k) return out;

  std::set<ElementSet, BySizeThenSeq> cores;
  cores.insert(ElementSet());
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = i + 1; j < f.size(); ++j)
      cores.insert(f.set(i) & f.set(j));

  long visits = 0;
  bool exceeded = false;
  for (const ElementSet& core : cores) {
    std::vector<std::size_t> members;
    std::vector<ElementSet> petals;
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (core.subset_of(f.set(i))) {
        members.push_back(i);
        petals.push_back(f.set(i) - core);
      }
    }
    if (static_cast<int>(members.size()) < k) continue;
    std::vector<std::size_t> chosen;
    if (pack_petals(members, petals, k, 0, ElementSet(), chosen, visits,
                    budget, exceeded)) {
      out.status = SearchStatus::Found;
      out.witness = Sunflower{core, std::move(chosen)};
      return out;
    }
    if (exceeded) {
      out.status = SearchStatus::BudgetExceeded;
      return out;
    }
  }
  return out;
}

SunflowerSearch naive_find_sunflower(const SetFamily& f, int k) {
  if (k < 2)
    throw std::invalid_argument("naive_find_sunflower: requires k >= 2");
  SunflowerSearch out;
  const std::size_t count = f.size();
  if (static_cast<int>(count) < k) return out;

  std::vector<std::size_t> pick;
  // All k-subsets of member indices in lexicographic order.
  std::function<bool(std::size_t)> rec = [&](std::size_t start) -> bool {
    if (static_cast<int>(pick.size()) == k) {
      const ElementSet core = f.set(pick[0]) & f.set(pick[1]);
      for (std::size_t a = 0; a < pick.size(); ++a)
        for (std::size_t b = a + 1; b < pick.size(); ++b)
          if (!((f.set(pick[a]) & f.set(pick[b])) == core)) return false;
      out.status = SearchStatus::Found;
      out.witness = Sunflower{core, pick};
      return true;
    }
    for (std::size_t i = start; i < count; ++i) {
      pick.push_back(i);
      if (rec(i + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  rec(0);
  return out;
}

VerdictReport sunflower_free_check(const SetFamily& f, int k) {
  if (k < 2)
    throw std::invalid_argument("sunflower_free_check: requires k >= 2");
  StopWatch watch;
  SunflowerSearch search =
      find_sunflower(f, k, std::numeric_limits<long>::max());
  VerdictReport report;
  report.claim_id = "sunflower-free";
  report.lhs = ReportValue::of_text("k = " + std::to_string(k) + ", |F| = " +
                                    std::to_string(f.size()));
  report.rhs = ReportValue::of_text("no k-sunflower");
  if (search.status == SearchStatus::Found) {
    report.holds = Verdict::Fails;
    report.witness.indices = search.witness->petals;
    report.witness.elements = search.witness->core.elements();
    report.witness.text = "core " + search.witness->core.str();
  } else {
    report.holds = Verdict::Holds;
  }
  if (f.size() > 30)
    report.note = "exhaustive search over a large family; expect exponential cost";
  report.runtime_ms = watch.ms();
  return report;
}

BigInt erdos_rado_threshold(int m, int k) {
  if (m < 1 || k < 2)
    throw std::invalid_argument("erdos_rado_threshold: requires m >= 1, k >= 2");
  return factorial(static_cast<unsigned long>(m)) *
         pow_int(BigInt(k - 1), static_cast<unsigned long>(m));
}

}  // namespace sunflower
