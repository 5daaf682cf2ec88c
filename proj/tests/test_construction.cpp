#include <stdexcept>

#include "doctest.h"

#include "sunflower/construction.hpp"
#include "sunflower/family.hpp"

using namespace sunflower;

namespace {

ConstructionParams toy_params() {
  return ConstructionParams::direct(2, 2, 1, make_rational(1, 2), BigRat(4));
}

BlockPartition toy_blocks(const Universe& u) {
  return make_block_partition(
      u, 2, {ElementSet::of({1, 2}), ElementSet::of({3, 4})});
}

SetFamily unit(int n, int m, std::vector<ElementSet> sets) {
  return SetFamily::unit(Universe(n), m, std::move(sets));
}

}  // namespace

TEST_CASE("direct parameters and the per-level threshold decay") {
  const ConstructionParams cp = toy_params();
  CHECK(cp.b(1) == 4);
  CHECK(cp.b(2) == 1);  // 4 ((r-1)/r)^2 = 4/4
  CHECK_THROWS_AS((void)cp.b(0), std::invalid_argument);
  CHECK_THROWS_AS((void)cp.b(3), std::invalid_argument);

  CHECK_THROWS_AS((void)ConstructionParams::direct(0, 2, 1, make_rational(1, 2),
                                                   BigRat(4)),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      (void)ConstructionParams::direct(2, 2, 1, BigRat(1), BigRat(4)),
      std::invalid_argument);
  CHECK_THROWS_AS(
      (void)ConstructionParams::direct(2, 2, 1, make_rational(1, 2), BigRat(0)),
      std::invalid_argument);
}

TEST_CASE("display constants at a desk-scale eps") {
  // eps = 3/4, m = 10^4: every formula stays representable.
  const PaperConstants pc = paper_constants(make_rational(3, 4), 10000);
  CHECK(pc.finite);
  CHECK(pc.q == 1000);
  CHECK(pc.r == 10);
  REQUIRE(pc.beta.has_value());
  CHECK(*pc.beta == 57);
  // c_1 = 2^(2^4) = 65536.
  CHECK(Interval::of(65535L).less(pc.c1) == Tern::True);
  CHECK(pc.c1.less(Interval::of(65537L)) == Tern::True);

  // eps = 1/25 pushes 2^(2^75) past any representable exponent.
  CHECK_FALSE(paper_constants(make_rational(1, 25), 10000).finite);

  CHECK_THROWS_AS((void)paper_constants(BigRat(1), 100),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)paper_constants(make_rational(1, 2), 0),
                  std::invalid_argument);
}

TEST_CASE("block partition structure and the per-member assumption") {
  const Universe u(6);
  const BlockPartition p = toy_blocks(u);
  CHECK(p.r() == 2);
  CHECK(p.support() == ElementSet::of({1, 2, 3, 4}));

  CHECK_THROWS_AS((void)make_block_partition(u, 0, {ElementSet::of({1})}),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)make_block_partition(u, 1, {}),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)make_block_partition(u, 1, {ElementSet()}),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)make_block_partition(u, 1, {ElementSet::of({7})}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      (void)make_block_partition(
          u, 1, {ElementSet::of({1, 2}), ElementSet::of({2, 3})}),
      std::invalid_argument);

  // |Z_p cap U| = q must hold for every member and block.
  const BlockPartition p1 = make_block_partition(
      u, 1, {ElementSet::of({1, 2, 3}), ElementSet::of({4, 5, 6})});
  require_block_assumption(p1, unit(6, 2, {ElementSet::of({1, 4}),
                                           ElementSet::of({2, 5})}));
  CHECK_THROWS_AS(
      require_block_assumption(p1, unit(6, 2, {ElementSet::of({1, 2})})),
      std::invalid_argument);
}

TEST_CASE("vector enumeration, filters, and order") {
  CHECK(enumerate_vectors(1, 2, 2, VectorFilter::All).size() == 9);
  CHECK(enumerate_vectors(1, 2, 2, VectorFilter::Beta, 1).size() == 6);
  const std::vector<CardinalityVector> zt =
      enumerate_vectors(1, 2, 2, VectorFilter::ZeroTail);
  REQUIRE(zt.size() == 3);
  for (int i = 0; i < 3; ++i) {
    CHECK(zt[i].v == std::vector<int>{i, 0});
    CHECK(zt[i].norm() == i);
  }
  // Start index 2 leaves a single coordinate.
  CHECK(enumerate_vectors(2, 2, 2, VectorFilter::All).size() == 3);
  CHECK(enumerate_vectors(1, 0, 3, VectorFilter::All).size() == 1);

  CHECK_THROWS_AS((void)enumerate_vectors(0, 2, 2, VectorFilter::All),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)enumerate_vectors(3, 2, 2, VectorFilter::All),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)enumerate_vectors(1, -1, 2, VectorFilter::All),
                  std::invalid_argument);
}

TEST_CASE("sets realizing a cardinality vector") {
  const BlockPartition p = toy_blocks(Universe(6));
  const std::vector<ElementSet> all =
      sets_with_vector(p, CardinalityVector{1, {1, 1}}, ElementSet());
  REQUIRE(all.size() == 4);
  CHECK(all[0] == ElementSet::of({1, 3}));
  CHECK(all[1] == ElementSet::of({1, 4}));
  CHECK(all[2] == ElementSet::of({2, 3}));
  CHECK(all[3] == ElementSet::of({2, 4}));

  const std::vector<ElementSet> avoid =
      sets_with_vector(p, CardinalityVector{1, {1, 0}}, ElementSet::of({1}));
  REQUIRE(avoid.size() == 1);
  CHECK(avoid[0] == ElementSet::of({2}));
}

TEST_CASE("condition-ii ratio drops as the family spreads") {
  const ConstructionParams cp = toy_params();
  const BlockPartition p = toy_blocks(Universe(4));
  const SetFamily tight =
      unit(4, 2, {ElementSet::of({1, 3}), ElementSet::of({2, 4})});
  CHECK(pi_condition_ii_value(tight, p, 1, cp) == 2);
  const SetFamily spread =
      unit(4, 2, {ElementSet::of({1, 3}), ElementSet::of({2, 4}),
                  ElementSet::of({1, 4}), ElementSet::of({2, 3})});
  CHECK(pi_condition_ii_value(spread, p, 1, cp) == 1);

  CHECK_THROWS_AS((void)pi_condition_ii_value(unit(4, 2, {}), p, 1, cp),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)pi_condition_ii_value(tight, p, 3, cp),
                  std::invalid_argument);
}

TEST_CASE("three-part property across levels") {
  // q = 1 transversal singleton families on blocks {1,2} and {3,4}.
  const ConstructionParams cp =
      ConstructionParams::direct(1, 2, 1, make_rational(1, 2),
                                 make_rational(1, 2));
  const BlockPartition p = make_block_partition(
      Universe(4), 1, {ElementSet::of({1, 2}), ElementSet::of({3, 4})});
  const SetFamily f1 = unit(4, 2, {ElementSet::of({1, 3})});
  const SetFamily f2 = unit(4, 2, {ElementSet::of({2, 4})});
  const SetFamily f3 = unit(4, 2, {ElementSet::of({2, 3})});

  const VerdictReport ok = pi_check(f1, f2, f3, p, 1, cp, BigInt(1));
  CHECK(ok.claim_id == "property-pi");
  CHECK(ok.holds == Verdict::Holds);

  // At level 2 the prefix Z_1 becomes off-limits for cross-family contact,
  // and f2, f3 both touch element 2.
  const VerdictReport clash = pi_check(f1, f2, f3, p, 2, cp, BigInt(1));
  CHECK(clash.holds == Verdict::Fails);
  CHECK_FALSE(clash.witness.empty());

  // A family breaking the per-block assumption is rejected outright.
  const SetFamily bad = unit(4, 2, {ElementSet::of({1, 2})});
  CHECK_THROWS_AS((void)pi_check(bad, f2, f3, p, 1, cp, BigInt(1)),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)pi_check(f1, f2, f3, p, 4, cp, BigInt(1)),
                  std::invalid_argument);
}

TEST_CASE("selection conditions on hand instances") {
  const BlockPartition p = toy_blocks(Universe(4));
  const SetFamily f = unit(4, 2, {ElementSet::of({1, 3}),
                                  ElementSet::of({1, 4}),
                                  ElementSet::of({2, 3})});

  // S empty: the heavy-tail sum collects the three transversal pairs.
  const auto empty_s = step1_conditions_check(
      f, p, 1, ElementSet(), CardinalityVector{1, {0, 0}}, BigRat(2), 1);
  CHECK(empty_s[0].claim_id == "step1-1");
  CHECK(empty_s[0].holds == Verdict::Holds);
  CHECK(empty_s[0].lhs.exact == 3);
  CHECK(empty_s[0].rhs.exact == 9);
  CHECK(empty_s[1].claim_id == "step1-2");
  CHECK(empty_s[1].holds == Verdict::Holds);
  CHECK(empty_s[1].lhs.exact == make_rational(5, 8));
  CHECK(empty_s[2].claim_id == "step1-3");
  CHECK(empty_s[2].holds == Verdict::Holds);
  CHECK(empty_s[2].lhs.exact == 3);
  CHECK(empty_s[2].rhs.exact == 1);

  // S = {1,3}: every extension dies and the base keeps its third.
  const auto s13 = step1_conditions_check(
      f, p, 1, ElementSet::of({1, 3}), CardinalityVector{1, {1, 1}},
      BigRat(2), 1);
  CHECK(s13[0].holds == Verdict::Holds);
  CHECK(s13[0].lhs.exact == 0);
  CHECK(s13[1].lhs.exact == 0);
  CHECK(s13[2].holds == Verdict::Holds);
  CHECK(s13[2].lhs.exact == 1);
  CHECK(s13[2].rhs.exact == make_rational(1, 4));

  CHECK_THROWS_AS(
      (void)step1_conditions_check(f, p, 1, ElementSet(),
                                   CardinalityVector{1, {0, 0}}, BigRat(0), 1),
      std::invalid_argument);
  CHECK_THROWS_AS(
      (void)step1_conditions_check(f, p, 3, ElementSet(),
                                   CardinalityVector{3, {0}}, BigRat(2), 1),
      std::invalid_argument);
  CHECK_THROWS_AS(
      (void)step1_conditions_check(f, p, 1, ElementSet::of({1, 2}),
                                   CardinalityVector{1, {1, 1}}, BigRat(2), 1),
      std::invalid_argument);
}

TEST_CASE("vanishing denominators may not carry mass") {
  // q = 1 blocks, but a member meets Z_1 twice: the u = (1,0) term at
  // v = (1,0) divides by C(0,1) while F[{1,2}] is nonempty.
  const BlockPartition p = make_block_partition(
      Universe(6), 1, {ElementSet::of({1, 2, 3}), ElementSet::of({4, 5, 6})});
  const SetFamily f = unit(6, 3, {ElementSet::of({1, 2, 4})});
  CHECK_THROWS_AS(
      (void)step1_conditions_check(f, p, 1, ElementSet::of({1}),
                                   CardinalityVector{1, {1, 0}}, BigRat(2), 0),
      std::invalid_argument);
}

TEST_CASE("toy witness search finds the concentrated core") {
  const ConstructionParams cp = toy_params();
  const BlockPartition p = toy_blocks(Universe(6));
  const SetFamily f = unit(6, 3, {ElementSet::of({1, 2, 3}),
                                  ElementSet::of({1, 2, 4})});
  const ToyWitnessResult r = toy_witness_search(f, p, cp, 1);
  REQUIRE(r.status == SearchStatus::Found);
  CHECK(r.witness->v.v == std::vector<int>{2, 0});
  CHECK(r.witness->s == ElementSet::of({1, 2}));
  CHECK(r.witness->entry_ratio >= 1);
  for (const VerdictReport& c : r.witness->conditions)
    CHECK(c.holds == Verdict::Holds);
}

TEST_CASE("toy witness search falls back to the empty core when spread") {
  const ConstructionParams cp = toy_params();
  const BlockPartition p = toy_blocks(Universe(6));
  const SetFamily f = unit(6, 1, {ElementSet::of({1}), ElementSet::of({2}),
                                  ElementSet::of({3}), ElementSet::of({4})});
  const ToyWitnessResult r = toy_witness_search(f, p, cp, 1);
  REQUIRE(r.status == SearchStatus::Found);
  CHECK(r.witness->v.norm() == 0);
  CHECK(r.witness->s.empty());
  CHECK(r.witness->entry_ratio == 1);
}

TEST_CASE("toy witness search respects its budget") {
  // All mass sits on element 2, so v = (1,0) is chosen, S = {1} is evaluated
  // first and fails the retained-mass condition; one unit of budget ends the
  // scan before S = {2} can succeed.
  const ConstructionParams cp = toy_params();
  const BlockPartition p = toy_blocks(Universe(4));
  const SetFamily f =
      unit(4, 2, {ElementSet::of({2, 3}), ElementSet::of({2, 4})});
  const ToyWitnessResult tight = toy_witness_search(f, p, cp, 1, 1);
  CHECK(tight.status == SearchStatus::BudgetExceeded);
  CHECK_FALSE(tight.witness.has_value());

  const ToyWitnessResult loose = toy_witness_search(f, p, cp, 1, 10);
  REQUIRE(loose.status == SearchStatus::Found);
  CHECK(loose.witness->s == ElementSet::of({2}));
  CHECK(loose.witness->v.v == std::vector<int>{1, 0});

  CHECK_THROWS_AS((void)toy_witness_search(f, p, cp, 1, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)toy_witness_search(f, p, cp, 3, 10),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      (void)toy_witness_search(unit(4, 2, {}), p, cp, 1, 10),
      std::invalid_argument);
}
