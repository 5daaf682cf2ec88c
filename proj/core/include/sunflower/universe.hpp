#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#ifndef SUNFLOWER_UNIVERSE_CAP
#define SUNFLOWER_UNIVERSE_CAP 128
#endif

namespace sunflower {

// Hard cap on the ground set size, overridable at compile time via
// -DSUNFLOWER_UNIVERSE_CAP=<bits>. Desk-scale verification never needs more
// than the 128 default; the cap exists so a set always fits in a fixed,
// allocation-free word array.
inline constexpr int kUniverseCap = SUNFLOWER_UNIVERSE_CAP;
static_assert(kUniverseCap >= 64 && kUniverseCap % 64 == 0);

// A subset of {1, ..., kUniverseCap} as a fixed-width bitset. Elements are
// 1-based; element e lives at bit (e-1). Value type, trivially copyable.
class ElementSet {
 public:
  static constexpr int kWords = kUniverseCap / 64;

  constexpr ElementSet() = default;

  static ElementSet of(std::initializer_list<int> elems) {
    ElementSet s;
    for (int e : elems) s.add(e);
    return s;
  }

  // {lo, lo+1, ..., hi}; empty when hi < lo.
  static ElementSet range(int lo, int hi) {
    ElementSet s;
    for (int e = lo; e <= hi; ++e) s.add(e);
    return s;
  }

  bool contains(int e) const {
    return (w_[word(e)] >> bit(e)) & 1u;
  }
  void add(int e) { w_[word(e)] |= std::uint64_t{1} << bit(e); }
  void remove(int e) { w_[word(e)] &= ~(std::uint64_t{1} << bit(e)); }

  ElementSet with(int e) const {
    ElementSet s = *this;
    s.add(e);
    return s;
  }
  ElementSet without(int e) const {
    ElementSet s = *this;
    s.remove(e);
    return s;
  }

  int count() const {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (auto w : w_)
      if (w) return false;
    return true;
  }

  friend ElementSet operator|(const ElementSet& a, const ElementSet& b) {
    ElementSet r;
    for (int i = 0; i < kWords; ++i) r.w_[i] = a.w_[i] | b.w_[i];
    return r;
  }
  friend ElementSet operator&(const ElementSet& a, const ElementSet& b) {
    ElementSet r;
    for (int i = 0; i < kWords; ++i) r.w_[i] = a.w_[i] & b.w_[i];
    return r;
  }
  friend ElementSet operator-(const ElementSet& a, const ElementSet& b) {
    ElementSet r;
    for (int i = 0; i < kWords; ++i) r.w_[i] = a.w_[i] & ~b.w_[i];
    return r;
  }
  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.w_ == b.w_;
  }
  friend bool operator!=(const ElementSet& a, const ElementSet& b) {
    return !(a == b);
  }

  bool subset_of(const ElementSet& sup) const {
    for (int i = 0; i < kWords; ++i)
      if (w_[i] & ~sup.w_[i]) return false;
    return true;
  }
  bool intersects(const ElementSet& other) const {
    for (int i = 0; i < kWords; ++i)
      if (w_[i] & other.w_[i]) return true;
    return false;
  }
  int intersection_count(const ElementSet& other) const {
    int c = 0;
    for (int i = 0; i < kWords; ++i)
      c += std::popcount(w_[i] & other.w_[i]);
    return c;
  }

  // Smallest element, 0 when empty.
  int min_element() const {
    for (int i = 0; i < kWords; ++i)
      if (w_[i]) return i * 64 + std::countr_zero(w_[i]) + 1;
    return 0;
  }

  // Ascending-element lexicographic order on equal-size sets, the order the
  // canonical file format sorts by. The set owning the smallest element of
  // the symmetric difference comes first.
  static bool seq_less(const ElementSet& a, const ElementSet& b) {
    for (int i = 0; i < kWords; ++i) {
      const std::uint64_t d = a.w_[i] ^ b.w_[i];
      if (d) {
        const std::uint64_t lowest = d & (~d + 1);
        return (a.w_[i] & lowest) != 0;
      }
    }
    return false;
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for_each([&](int e) { out.push_back(e); });
    return out;
  }

  template <class F>
  void for_each(F&& fn) const {
    for (int i = 0; i < kWords; ++i) {
      std::uint64_t w = w_[i];
      while (w) {
        fn(i * 64 + std::countr_zero(w) + 1);
        w &= w - 1;
      }
    }
  }

  std::size_t hash() const {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto w : w_) {
      h ^= w;
      h *= 0x100000001b3ull;
      h ^= h >> 29;
    }
    return h;
  }

  std::string str() const;  // "{1 2 5}"

 private:
  static int word(int e) { return (e - 1) >> 6; }
  static int bit(int e) { return (e - 1) & 63; }
  std::array<std::uint64_t, kWords> w_{};
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

// Ground set X = {1, ..., n}.
struct Universe {
  int n;
  explicit Universe(int n_);
  ElementSet all() const { return ElementSet::range(1, n); }
  bool contains_set(const ElementSet& s) const {
    return s.subset_of(all());
  }
  friend bool operator==(const Universe& a, const Universe& b) {
    return a.n == b.n;
  }
};

// Calls fn(const ElementSet&) for every k-subset of ground, in ascending
// lexicographic order of element sequences. fn may return void, or bool
// where false stops the enumeration early.
template <class F>
void for_each_subset(const ElementSet& ground, int k, F&& fn) {
  const std::vector<int> elems = ground.elements();
  const int n = static_cast<int>(elems.size());
  if (k < 0 || k > n) return;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  constexpr bool stoppable =
      std::is_same_v<std::invoke_result_t<F&, const ElementSet&>, bool>;
  for (;;) {
    ElementSet s;
    for (int i : idx) s.add(elems[static_cast<std::size_t>(i)]);
    if constexpr (stoppable) {
      if (!fn(static_cast<const ElementSet&>(s))) return;
    } else {
      fn(static_cast<const ElementSet&>(s));
    }
    if (k == 0) return;
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

std::vector<ElementSet> subsets_of_size(const ElementSet& ground, int k);

// All nonempty subsets of a small set (at most 24 elements), sizes
// ascending, lexicographic within a size.
template <class F>
void for_each_nonempty_subset(const ElementSet& ground, F&& fn) {
  const int n = ground.count();
  for (int k = 1; k <= n; ++k) for_each_subset(ground, k, fn);
}

}  // namespace sunflower
