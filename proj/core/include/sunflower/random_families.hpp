#pragma once

#include <cstdint>

#include "sunflower/family.hpp"

namespace sunflower {

// Counter-based generator: draw i is a pure function of (seed, i), so a test
// that logs its seed can replay any single draw without replaying the stream.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t next();
  // Uniform in [0, bound). bound = 0 is invalid.
  std::uint64_t below(std::uint64_t bound);

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

enum class FamilyShape {
  Uniform,    // members drawn uniformly from (X choose m)
  Star,       // all members share a fixed element; dense around one point
  Clustered,  // members drawn from a small sub-universe, spilling out rarely
};

// `count` distinct members; if the universe cannot supply that many the family
// is the whole slice (X choose m). Weighted variant draws small positive
// integer weights.
SetFamily random_family(int n, int m, std::size_t count, std::uint64_t seed,
                        FamilyShape shape = FamilyShape::Uniform);
SetFamily random_weighted_family(int n, int m, std::size_t count,
                                 std::uint64_t seed,
                                 FamilyShape shape = FamilyShape::Uniform);

// Symmetric matrix of integer weights in [0, max_value].
PairWeight random_pair_weight(std::size_t count, std::uint64_t seed,
                              unsigned max_value = 8);

}  // namespace sunflower
