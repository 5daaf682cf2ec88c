#include <stdexcept>

#include "doctest.h"

#include "sunflower/family.hpp"
#include "sunflower/random_families.hpp"
#include "sunflower/split.hpp"

using namespace sunflower;

namespace {

SetFamily full_slice(int n, int m) {
  std::vector<ElementSet> sets;
  for_each_subset(ElementSet::range(1, n), m,
                  [&](const ElementSet& s) { sets.push_back(s); });
  return SetFamily::unit(Universe(n), m, std::move(sets));
}

}  // namespace

TEST_CASE("split construction validates blocks") {
  const Universe u(6);
  const SplitVector s = make_split(
      u, 2, {ElementSet::of({1, 2}), ElementSet::of({3, 4})});
  CHECK(s.j() == 2);
  CHECK(s.support() == ElementSet::of({1, 2, 3, 4}));
  CHECK(make_split(u, 2, {}).j() == 0);

  CHECK_THROWS_AS((void)make_split(u, 0, {}), std::invalid_argument);
  CHECK_THROWS_AS((void)make_split(u, 2, {ElementSet::of({1, 2, 3})}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      (void)make_split(u, 2,
                       {ElementSet::of({1, 2}), ElementSet::of({2, 3})}),
      std::invalid_argument);
  CHECK_THROWS_AS((void)make_split(u, 2, {ElementSet::of({5, 7})}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      (void)make_split(u, 2,
                       {ElementSet::of({1, 2}), ElementSet::of({3, 4}),
                        ElementSet::of({5, 6}), ElementSet::of({1, 3})}),
      std::invalid_argument);
}

TEST_CASE("family on a split keeps exactly the transversal members") {
  const SetFamily f = SetFamily::weighted(
      Universe(6), 2,
      {ElementSet::of({1, 3}), ElementSet::of({1, 4}), ElementSet::of({3, 5}),
       ElementSet::of({5, 6})},
      {BigRat(1), BigRat(2), BigRat(4), BigRat(8)});
  const SplitVector s = make_split(
      f.universe(), 2, {ElementSet::of({1, 2}), ElementSet::of({3, 4})});
  const SetFamily fx = family_on_split(f, s);
  CHECK(fx.size() == 2);
  CHECK(fx.contains(ElementSet::of({1, 3})));
  CHECK(fx.contains(ElementSet::of({1, 4})));
  CHECK(family_size(fx) == 3);  // weights carried

  // The empty tuple changes nothing.
  const SetFamily same = family_on_split(f, make_split(f.universe(), 2, {}));
  CHECK(same.size() == f.size());
  CHECK(family_size(same) == family_size(f));
}

TEST_CASE("ordered split identity on the full slice") {
  const SetFamily f = full_slice(4, 2);
  for (int j = 0; j <= 2; ++j) {
    const VerdictReport r = split1_identity_check(f, 2, j);
    CAPTURE(j);
    CHECK(r.claim_id == "lemma-3.1");
    CHECK(r.holds == Verdict::Holds);
  }
  // The j = 1 tally: six singleton tuples, each restricting to 4 members.
  const VerdictReport r1 = split1_identity_check(f, 2, 1);
  CHECK(r1.lhs.exact == 24);
  CHECK(r1.rhs.exact == 24);

  // Both sides vanish on an empty family.
  const SetFamily empty = SetFamily::unit(Universe(4), 2, {});
  CHECK(split1_identity_check(empty, 2, 1).holds == Verdict::Holds);
}

TEST_CASE("ordered split identity across seeded weighted families") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const bool deep = seed % 2 == 0;
    const int n = 6;
    const int m = deep ? 3 : 2;  // d = 2 or 3
    const SetFamily f = random_weighted_family(n, m, 4 + seed % 8, seed * 7);
    for (int j = 0; j <= m; ++j) {
      CAPTURE(seed);
      CAPTURE(j);
      CHECK(split1_identity_check(f, n / m, j).holds == Verdict::Holds);
    }
  }
}

TEST_CASE("ordered split identity rejects bad shapes") {
  const SetFamily f = full_slice(4, 2);
  CHECK_THROWS_AS((void)split1_identity_check(f, 3, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)split1_identity_check(f, 2, 3),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)split1_identity_check(f, 2, -1),
                  std::invalid_argument);
  const SetFamily f21 = full_slice(2, 1);  // d = 2, fine; d = 1 is not
  CHECK_THROWS_AS((void)split1_identity_check(full_slice(3, 3), 1, 1),
                  std::invalid_argument);
  CHECK(split1_identity_check(f21, 2, 1).holds == Verdict::Holds);
}

TEST_CASE("mean split search meets the average bound") {
  // On the full slice every split scores the average exactly.
  const SetFamily f = full_slice(4, 2);
  const Split2Result r = split2_find(f);
  CHECK(r.report.claim_id == "corollary-3.2");
  CHECK(r.report.holds == Verdict::Holds);
  CHECK(r.size == 4);
  CHECK(r.bound == 4);
  CHECK_FALSE(r.exhausted_budget);
  CHECK(r.split.j() == 2);

  // The returned split revalidates and reproduces its reported size.
  const SetFamily fx = family_on_split(f, r.split);
  CHECK(family_size(fx) == r.size);
}

TEST_CASE("mean split search on seeded families, both search paths") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const int m = 2 + static_cast<int>(seed % 2);
    const int n = 3 * m;
    const SetFamily f = random_family(n, m, 5 + seed % 7, seed + 1);
    // Large budget: the partition count fits and the search is exhaustive,
    // so the maximizing split qualifies. Tiny budget: hill climbing from one
    // seeded start; the flag and the verdict must stay consistent.
    const Split2Result big = split2_find(f, seed, 100000);
    CHECK(big.report.holds == Verdict::Holds);
    CHECK(big.size >= big.bound);
    const Split2Result small = split2_find(f, seed, 1);
    CHECK(small.exhausted_budget ==
          (small.report.holds == Verdict::Inconclusive));
    CHECK(family_size(family_on_split(f, small.split)) == small.size);
    if (small.report.holds == Verdict::Inconclusive)
      CHECK(small.report.note.find("budget exhausted") != std::string::npos);
  }
}

TEST_CASE("mean split search input validation") {
  CHECK_THROWS_AS((void)split2_find(SetFamily::unit(Universe(4), 2, {})),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)split2_find(full_slice(5, 2)),
                  std::invalid_argument);  // m does not divide n
  CHECK_THROWS_AS((void)split2_find(full_slice(4, 2), 0, 0),
                  std::invalid_argument);
}

TEST_CASE("split sparsity display bound") {
  const SetFamily f = full_slice(4, 2);
  const SplitVector s = make_split(
      f.universe(), 2, {ElementSet::of({1, 2}), ElementSet::of({3, 4})});
  const VerdictReport r = split_sparsity_check(f, s);
  CHECK(r.claim_id == "eq-3.1");
  CHECK(r.holds == Verdict::Holds);

  // Empty restriction: nothing to measure.
  const SetFamily single =
      SetFamily::unit(Universe(4), 2, {ElementSet::of({1, 2})});
  CHECK(split_sparsity_check(single, s).holds == Verdict::Vacuous);

  // A partial tuple is not an m-split.
  const SplitVector half =
      make_split(f.universe(), 2, {ElementSet::of({1, 2})});
  CHECK_THROWS_AS((void)split_sparsity_check(f, half),
                  std::invalid_argument);
}
