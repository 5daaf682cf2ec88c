#include <stdexcept>

#include "doctest.h"

#include "sunflower/extension.hpp"
#include "sunflower/family.hpp"
#include "sunflower/random_families.hpp"

using namespace sunflower;

namespace {

SetFamily unit(int n, int m, std::vector<ElementSet> sets) {
  return SetFamily::unit(Universe(n), m, std::move(sets));
}

}  // namespace

TEST_CASE("extension counts by hand") {
  const SetFamily f = unit(4, 2, {ElementSet::of({1, 2})});
  CHECK(ext(f, 3).count == 2);  // {1,2,3}, {1,2,4}
  CHECK(ext(f, 4).count == 1);
  CHECK(ext(f, 2).count == 1);  // l = m reproduces the member

  const SetFamily two = unit(4, 2, {ElementSet::of({1, 2}),
                                    ElementSet::of({3, 4})});
  CHECK(ext(two, 3).count == 4);  // all 3-sets contain one or the other

  CHECK_THROWS_AS((void)ext(f, 1), std::invalid_argument);
  CHECK_THROWS_AS((void)ext(f, 5), std::invalid_argument);
}

TEST_CASE("both enumeration routes agree") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const int n = 6 + static_cast<int>(seed % 3);
    const int m = 2 + static_cast<int>(seed % 2);
    const SetFamily f = random_family(n, m, 6, seed);
    for (int l = m; l <= n; ++l) {
      const ExtensionResult a = ext(f, l, ExtStrategy::BySupersets);
      const ExtensionResult b = ext(f, l, ExtStrategy::ByContainment);
      REQUIRE(a.count == b.count);
      for (std::size_t i = 0; i < a.family.size(); ++i)
        CHECK(a.family.set(i) == b.family.set(i));
    }
  }
}

TEST_CASE("extension is monotone and l-uniform") {
  const SetFamily f = random_family(8, 3, 5, 99);
  BigInt prev(0);
  for (int l = 3; l <= 8; ++l) {
    const ExtensionResult e = ext(f, l);
    CHECK(e.family.m() == l);
    // Every member of Ext contains some member of F.
    for (const ElementSet& t : e.family.sets()) {
      bool covered = false;
      for (const ElementSet& u : f.sets()) covered = covered || u.subset_of(t);
      CHECK(covered);
    }
    prev = e.count;
  }
  CHECK(prev == 1);  // Ext(F, n) is the whole ground set
}

TEST_CASE("extension lower bound holds with positive right side at m = 1") {
  const SetFamily f = unit(6, 1, {ElementSet::of({1}), ElementSet::of({2}),
                                  ElementSet::of({3})});
  const VerdictReport r = ext_lower_bound_check(f, 3);
  CHECK(r.claim_id == "eq-1.1");
  CHECK(r.holds == Verdict::Holds);
  // |Ext| = C(6,3) - C(3,3) = 19.
  CHECK(r.lhs.exact == 19);
}

TEST_CASE("extension lower bound is vacuous when the right side dips") {
  // m >= 2 at desk scale: m e^{-x} > 1, so the bound asks for nothing.
  const SetFamily f = unit(6, 2, {ElementSet::of({1, 2})});
  const VerdictReport r = ext_lower_bound_check(f, 4);
  CHECK(r.holds == Verdict::Vacuous);
  CHECK(r.note == "right side nonpositive");
  CHECK_THROWS_AS((void)ext_lower_bound_check(unit(6, 2, {}), 4),
                  std::invalid_argument);
}

TEST_CASE("phase two doubling on hand families") {
  // Full slice: both complements are empty, kappa = kappa = +inf.
  std::vector<ElementSet> slice;
  for_each_subset(ElementSet::range(1, 4), 2,
                  [&](const ElementSet& s) { slice.push_back(s); });
  const VerdictReport full = phase2_check(unit(4, 2, slice));
  CHECK(full.claim_id == "lemma-2.6");
  CHECK(full.holds == Verdict::Holds);

  const VerdictReport one = phase2_check(unit(4, 2, {ElementSet::of({1, 2})}));
  CHECK(one.holds == Verdict::Holds);

  CHECK_THROWS_AS((void)phase2_check(unit(5, 3, {ElementSet::of({1, 2, 3})})),
                  std::invalid_argument);
}

TEST_CASE("phase two across seeded families") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int m = 1 + static_cast<int>(seed % 3);
    const int n = 2 * m + static_cast<int>(seed % 4);
    const SetFamily f = random_family(n, m, 4 + seed % 5, seed);
    const VerdictReport r = phase2_check(f);
    CAPTURE(seed);
    CHECK(r.passed());
  }
}

TEST_CASE("extension sparsity monotonicity") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const int n = 5 + static_cast<int>(seed % 3);
    const int m = 2 + static_cast<int>(seed % 2);
    const SetFamily f = random_family(n, m, 3 + seed % 4, seed * 7 + 1);
    const int l = m + static_cast<int>(seed % (n - m + 1));
    const int p = static_cast<int>(seed % 3);
    const VerdictReport r = ext_sparsity_checks(f, l, p);
    CAPTURE(seed);
    CHECK(r.claim_id == "ext-sparsity");
    CHECK(r.holds == Verdict::Holds);
  }
}
