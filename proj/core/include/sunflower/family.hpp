#pragma once

#include <map>
#include <span>
#include <vector>

#include "sunflower/bigmath.hpp"
#include "sunflower/binom.hpp"
#include "sunflower/interval.hpp"
#include "sunflower/universe.hpp"

namespace sunflower {

// An m-uniform family of distinct subsets of {1, ..., n}, optionally carrying
// positive rational per-set weights. Immutable after construction; every
// operation on families returns a new value.
class SetFamily {
 public:
  static SetFamily unit(Universe u, int m, std::vector<ElementSet> sets);
  static SetFamily weighted(Universe u, int m, std::vector<ElementSet> sets,
                            std::vector<BigRat> weights);

  const Universe& universe() const { return universe_; }
  int n() const { return universe_.n; }
  int m() const { return m_; }
  std::size_t size() const { return sets_.size(); }  // |F|, a count
  bool is_unit() const { return weights_.empty(); }

  const std::vector<ElementSet>& sets() const { return sets_; }
  const ElementSet& set(std::size_t i) const { return sets_[i]; }
  BigRat weight(std::size_t i) const {
    return is_unit() ? BigRat(1) : weights_[i];
  }
  const std::vector<BigRat>& weights() const { return weights_; }

  bool contains(const ElementSet& s) const;

 private:
  SetFamily(Universe u, int m, std::vector<ElementSet> sets,
            std::vector<BigRat> weights);
  Universe universe_;
  int m_;
  std::vector<ElementSet> sets_;
  std::vector<BigRat> weights_;          // empty means unit weights
  std::vector<std::size_t> sorted_;      // indices in seq_less order
};

// ||F|| and the weighted size of an index-selected subfamily.
BigRat family_size(const SetFamily& f);
BigRat family_size(const SetFamily& f, std::span<const std::size_t> indices);

// Sparsity kappa(F) = ln C(n, m) - ln ||F||, an extended real. The value is
// kept as the exact rational e^kappa = C(n, m) / ||F||, so order comparisons
// between sparsities stay exact; the logarithm is only taken for display.
// The empty family has kappa = +infinity.
struct Sparsity {
  bool infinite = false;
  BigRat exp_kappa;  // C(n,m)/||F|| when finite

  Interval log(long prec = Interval::kDefaultPrecision) const;
  std::string str() const;
};

Sparsity sparsity(const SetFamily& f);

// F[T] = {U in F : U contains T}, same universe, same m, weights carried.
SetFamily restrict_family(const SetFamily& f, const ElementSet& t);
std::vector<std::size_t> restrict_indices(const SetFamily& f,
                                          const ElementSet& t);

// ||F[T]|| without materializing the restricted family.
BigRat restricted_size(const SetFamily& f, const ElementSet& t);
std::size_t restricted_count(const SetFamily& f, const ElementSet& t);

// j -> || { (U, V) : |U cap V| = j } || over ordered member pairs, diagonal
// included (it lands at j = m). Every j in [0, m] is present in the result;
// the values sum to ||F||^2.
std::map<int, BigRat> intersection_profile(const SetFamily& f);

// The (m - |T|)-uniform family {U - T : U in F[T]} living on X - T, with
// X - T relabeled monotonically onto {1, ..., n - |T|} so it is again a
// SetFamily over a plain prefix universe. old_of_new[i] is the original
// element renamed to i+1. Requires |T| < m or a nonempty F[T] with |T| = m;
// |T| = m yields the degenerate 0-uniform family and is flagged.
struct ResidualFamily {
  SetFamily family;
  std::vector<int> old_of_new;
  bool degenerate = false;  // |T| == m
};
ResidualFamily residual_family(const SetFamily& f, const ElementSet& t);

// Symmetric nonnegative integer pair weights on member indices of a family.
class PairWeight {
 public:
  // Validates symmetry and nonnegativity.
  static PairWeight from_matrix(std::vector<std::vector<BigInt>> w);
  static PairWeight uniform(std::size_t count, const BigInt& value);

  std::size_t count() const { return count_; }
  const BigInt& at(std::size_t i, std::size_t j) const {
    return w_[i * count_ + j];
  }
  BigInt total() const;

 private:
  PairWeight(std::size_t count, std::vector<BigInt> flat);
  std::size_t count_;
  std::vector<BigInt> w_;
};

}  // namespace sunflower
