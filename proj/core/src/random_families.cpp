#include "sunflower/random_families.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "sunflower/binom.hpp"

namespace sunflower {

namespace {

std::uint64_t mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t CounterRng::next() {
  return mix(seed_ + (++counter_) * 0x9e3779b97f4a7c15ULL);
}

std::uint64_t CounterRng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("CounterRng::below: bound 0");
  // Rejection keeps the draw unbiased; at most a couple of retries expected.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t v;
  do {
    v = next();
  } while (v >= limit);
  return v % bound;
}

namespace {

ElementSet random_subset(CounterRng& rng, const std::vector<int>& pool, int m) {
  std::vector<int> idx(pool.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
  // Partial Fisher-Yates: only the first m positions matter.
  for (int i = 0; i < m; ++i) {
    const std::size_t j = i + rng.below(idx.size() - i);
    std::swap(idx[i], idx[j]);
  }
  ElementSet s;
  for (int i = 0; i < m; ++i) s.add(pool[idx[i]]);
  return s;
}

std::vector<ElementSet> draw_members(int n, int m, std::size_t count,
                                     std::uint64_t seed, FamilyShape shape) {
  const BigInt slice = binom(n, m);
  if (slice <= static_cast<long>(count)) {
    std::vector<ElementSet> all;
    for_each_subset(Universe(n).all(), m,
                    [&](const ElementSet& s) { all.push_back(s); });
    return all;
  }

  CounterRng rng(seed);
  std::vector<int> full(n);
  for (int i = 0; i < n; ++i) full[i] = i + 1;

  int center = 0;
  std::vector<int> cluster;
  if (shape == FamilyShape::Star && m >= 1) {
    center = static_cast<int>(1 + rng.below(n));
  } else if (shape == FamilyShape::Clustered) {
    // Sub-universe of about 2m elements (at least m, at most n).
    const int cn = std::min(n, std::max(m, 2 * m));
    std::vector<int> pool = full;
    for (int i = 0; i < cn; ++i) {
      const std::size_t j = i + rng.below(pool.size() - i);
      std::swap(pool[i], pool[j]);
    }
    cluster.assign(pool.begin(), pool.begin() + cn);
    std::sort(cluster.begin(), cluster.end());
  }

  std::set<ElementSet, bool (*)(const ElementSet&, const ElementSet&)> seen(
      &ElementSet::seq_less);
  std::vector<ElementSet> out;
  while (out.size() < count) {
    ElementSet s;
    switch (shape) {
      case FamilyShape::Uniform:
        s = random_subset(rng, full, m);
        break;
      case FamilyShape::Star: {
        std::vector<int> rest;
        for (int e = 1; e <= n; ++e)
          if (e != center) rest.push_back(e);
        s = random_subset(rng, rest, m - 1).with(center);
        break;
      }
      case FamilyShape::Clustered:
        // One draw in eight escapes the cluster.
        s = (rng.below(8) == 0) ? random_subset(rng, full, m)
                                : random_subset(rng, cluster, m);
        break;
    }
    if (seen.insert(s).second) out.push_back(s);
    // Star families top out at C(n-1, m-1) members.
    if (shape == FamilyShape::Star &&
        binom(n - 1, m - 1) <= static_cast<long>(out.size()))
      break;
  }
  return out;
}

}  // namespace

SetFamily random_family(int n, int m, std::size_t count, std::uint64_t seed,
                        FamilyShape shape) {
  return SetFamily::unit(Universe(n), m, draw_members(n, m, count, seed, shape));
}

SetFamily random_weighted_family(int n, int m, std::size_t count,
                                 std::uint64_t seed, FamilyShape shape) {
  auto sets = draw_members(n, m, count, seed, shape);
  CounterRng rng(seed ^ 0x77f1e5a9d3c2b041ULL);
  std::vector<BigRat> weights;
  weights.reserve(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const long num = static_cast<long>(1 + rng.below(12));
    const long den = static_cast<long>(1 + rng.below(4));
    weights.push_back(make_rational(num, den));
  }
  return SetFamily::weighted(Universe(n), m, std::move(sets),
                             std::move(weights));
}

PairWeight random_pair_weight(std::size_t count, std::uint64_t seed,
                              unsigned max_value) {
  CounterRng rng(seed);
  std::vector<std::vector<BigInt>> mat(count, std::vector<BigInt>(count));
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = i; j < count; ++j) {
      const BigInt v = static_cast<long>(rng.below(max_value + 1));
      mat[i][j] = v;
      mat[j][i] = v;
    }
  return PairWeight::from_matrix(std::move(mat));
}

}  // namespace sunflower
