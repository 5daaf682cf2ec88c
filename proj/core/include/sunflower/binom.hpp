#pragma once

#include <vector>

#include "sunflower/bigmath.hpp"

namespace sunflower {

// Exact binomial coefficient with the vanishing convention:
// binom(x, y) = 0 for y < 0 or y > x. Requires x >= 0.
// Results are memoized per thread, so repeated lookups in hot loops are cheap.
const BigInt& binom(long x, long y);

// Pascal-triangle table built purely from the addition recurrence
// C(x, y) = C(x-1, y-1) + C(x-1, y). Serves as the independent cross-check
// for binom(); it shares no code path with GMP's binomial routine.
class BinomTable {
 public:
  explicit BinomTable(long max_x);
  // Same vanishing convention as binom(); requires 0 <= x <= max_x.
  const BigInt& at(long x, long y) const;
  long max_x() const { return static_cast<long>(rows_.size()) - 1; }

 private:
  std::vector<std::vector<BigInt>> rows_;
  BigInt zero_;
};

}  // namespace sunflower
