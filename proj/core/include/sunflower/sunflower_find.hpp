#pragma once

#include <optional>
#include <vector>

#include "sunflower/family.hpp"
#include "sunflower/verdict.hpp"

namespace sunflower {

// k member sets whose pairwise intersections all equal `core` exactly;
// equivalently, each chosen set contains core and the sets minus core are
// pairwise disjoint.
struct Sunflower {
  ElementSet core;
  std::vector<std::size_t> petals;  // member indices into the family
};

// Independent re-check of the definition, used by tests against any witness.
bool is_sunflower(const SetFamily& f, const Sunflower& s, int k);

// Outcome of a bounded search. BudgetExceeded means the search stopped
// early: the answer is unknown, never a silent "none".
enum class SearchStatus { Found, NotFound, BudgetExceeded };

struct SunflowerSearch {
  SearchStatus status = SearchStatus::NotFound;
  std::optional<Sunflower> witness;
};

// Finds a k-sunflower or certifies there is none. A k-sunflower's core
// equals each of its pairwise intersections, so trying every intersection
// of two members (plus the empty set) as the core loses nothing; for each
// core the petal sets are packed disjointly by backtracking. `budget`
// bounds backtracking node visits; k >= 2.
SunflowerSearch find_sunflower(const SetFamily& f, int k,
                               long budget = 2000000);

// Reference implementation: test every k-subset of members directly.
// Exponential; the oracle the fast search is compared against.
SunflowerSearch naive_find_sunflower(const SetFamily& f, int k);

// Exhaustive verification that F contains no k-sunflower; the full search
// with no budget. A found sunflower fails the check and is attached as the
// witness. Claim id "sunflower-free".
VerdictReport sunflower_free_check(const SetFamily& f, int k);

// m! (k-1)^m: above this size an m-uniform family always contains a
// k-sunflower. m >= 1, k >= 2.
BigInt erdos_rado_threshold(int m, int k);

}  // namespace sunflower
