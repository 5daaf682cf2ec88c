#pragma once

#include <array>
#include <optional>
#include <vector>

#include "sunflower/family.hpp"
#include "sunflower/sunflower_find.hpp"
#include "sunflower/verdict.hpp"

namespace sunflower {

// Toy-scale parameter bundle for the block-partition predicates. Direct
// construction supplies (q, r, beta, eps, b1) outright; b then decays by
// (1 - 1/r)^2 per level:
//
//   b_j = b1 ((r - 1)/r)^{2(j-1)}.
//
// The closed-form constants the asymptotic argument uses (doubly
// exponential in 1/eps) overflow any desk-scale run; they are available
// separately through paper_constants for display, never for evaluation.
struct ConstructionParams {
  BigRat eps;
  long m = 0;  // informational; the families carry their own member size
  long q = 0;
  long r = 0;
  long beta = 0;
  BigRat b1;

  BigRat b(long j) const;  // requires 1 <= j <= r

  static ConstructionParams direct(long q, long r, long beta,
                                   const BigRat& eps, const BigRat& b1);
};

// The display-only evaluation of the asymptotic parameter formulas
//   c_i = 2^(2^((4-i)/eps)),  alpha = m^{1/4}/c_1,  b_1 = m/(c_2 alpha),
//   q = floor(m^{3/4}),       r = floor(m/q),       beta = floor(c_3 m^{1/4}).
// q and r are exact integers; the rest are intervals. When an exponent
// exceeds what MPFR can represent, `finite` is false and the intervals are
// meaningless. beta is supplied only when the interval pins a single floor.
struct PaperConstants {
  Interval c1, c2, c3, alpha, b1;
  long q = 0;
  long r = 0;
  std::optional<BigInt> beta;
  bool finite = true;
};

PaperConstants paper_constants(const BigRat& eps, long m,
                               long prec = Interval::kDefaultPrecision);

// Pairwise-disjoint blocks Z_1..Z_r together with the per-member
// intersection cardinality q the surrounding argument assumes. Construction
// validates only the block structure; the assumption |Z_p cap U| = q is a
// property of a family and is enforced by require_block_assumption where an
// operation depends on it.
struct BlockPartition {
  int q = 0;
  std::vector<ElementSet> blocks;

  int r() const { return static_cast<int>(blocks.size()); }
  ElementSet support() const;
};

BlockPartition make_block_partition(const Universe& u, int q,
                                    std::vector<ElementSet> blocks);

// Throws std::invalid_argument naming the first member U and block Z_p with
// |Z_p cap U| != q.
void require_block_assumption(const BlockPartition& p, const SetFamily& f);

// Entries v_j..v_r, each in [0, q]; |v| is the 1-norm.
struct CardinalityVector {
  int j = 1;
  std::vector<int> v;

  int norm() const;
};

enum class VectorFilter {
  All,       // every vector
  Beta,      // |v| > beta
  ZeroTail,  // v_p = 0 for all p > j
};

// All vectors for start index j in a deterministic odometer order, filtered.
// Counts per norm are cross-checked against the choose-with-repetition
// bound C(w + len - 1, len - 1) (equality when q >= w); a mismatch throws
// std::logic_error.
std::vector<CardinalityVector> enumerate_vectors(int j, int q, int r,
                                                 VectorFilter filter,
                                                 int beta = 0);

// S_j(v) restricted to S cap B = {}: all S inside Z_j u ... u Z_r with
// |S cap Z_p| = v_p for every p, avoiding B. Lexicographic order.
std::vector<ElementSet> sets_with_vector(const BlockPartition& p,
                                         const CardinalityVector& v,
                                         const ElementSet& b);

// The condition-ii mass ratio at level j:
//
//   sum over |v| > beta, S in S_j(v) of
//     ||F_i[S]||^2 b_j^{|v|} / prod_p C(q, v_p),
//
// divided by ||F_i||^2, exactly. The condition of interest is ratio < 1.
// F_i must be nonempty and 1 <= j <= r.
BigRat pi_condition_ii_value(const SetFamily& f_i, const BlockPartition& p,
                             int j, const ConstructionParams& params);

// The three-part property of the nested families at level j:
//   i)   ||F_i|| > Fsize eps^{j q} for each i;
//   ii)  the condition-ii ratio is < 1 for each i (levels j <= r only);
//   iii) members of distinct families never meet inside Z_1 u ... u Z_{j-1}.
// All exact; one report with the first failure as witness. Every family
// must satisfy the per-block assumption of p. Claim id "property-pi".
VerdictReport pi_check(const SetFamily& f1, const SetFamily& f2,
                       const SetFamily& f3, const BlockPartition& p, int j,
                       const ConstructionParams& params, const BigInt& fsize);

// The three selection conditions for a candidate core S with cardinality
// vector v at threshold b, reported separately (claim ids "step1-1",
// "step1-2", "step1-3"):
//   1) sum over |u| > beta, T in S(u, S) of
//        ||F_i[S u T]||^2 b^{|u|} / prod_p C(q - v_p, u_p)  <=  ||F_i[S]||^2
//   2) the same sum over zero-tail u != 0 with b/8 in place of b
//   3) ||F_i[S]|| >= ||F_i|| b^{-|v|} / 3.
// A term whose denominator vanishes must carry zero mass (no member can
// contain it); nonzero mass there throws. S must lie in S(v, {}).
std::array<VerdictReport, 3> step1_conditions_check(
    const SetFamily& f_i, const BlockPartition& p, int j, const ElementSet& s,
    const CardinalityVector& v, const BigRat& b, int beta);

// A witness found by toy_witness_search: the maximal zero-tail vector
// passing the entry inequality, and the first S satisfying all three
// selection conditions at b = (1 - 1/r) b_j.
struct ToyWitness {
  CardinalityVector v;
  BigRat entry_ratio;  // entry mass over ||F||^2 at v; >= 1 by selection
  ElementSet s;
  std::array<VerdictReport, 3> conditions;
};

struct ToyWitnessResult {
  SearchStatus status = SearchStatus::NotFound;
  std::optional<ToyWitness> witness;
};

// Exhaustive scan: zero-tail vectors are scalar in v_j, scanned downward
// from q so the first entry-inequality hit is the maximal one (v = 0 always
// qualifies with equality); then S runs through S(v, {}) lexicographically.
// `budget` bounds the number of S fully evaluated; exceeding it is reported
// as BudgetExceeded, distinct from an exhausted NotFound.
ToyWitnessResult toy_witness_search(const SetFamily& f,
                                    const BlockPartition& p,
                                    const ConstructionParams& params, int j,
                                    long budget = 10000);

}  // namespace sunflower
