#include "sunflower/binom.hpp"

#include <cstdint>
#include <stdexcept>
#include <unordered_map>

namespace sunflower {

const BigInt& binom(long x, long y) {
  if (x < 0) throw std::invalid_argument("binom: negative upper index");
  static thread_local std::unordered_map<std::uint64_t, BigInt> cache;
  static thread_local const BigInt zero(0);
  if (y < 0 || y > x) return zero;
  const std::uint64_t key =
      (static_cast<std::uint64_t>(x) << 32) | static_cast<std::uint64_t>(y);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  BigInt v;
  mpz_bin_uiui(v.get_mpz_t(), static_cast<unsigned long>(x),
               static_cast<unsigned long>(y));
  return cache.emplace(key, std::move(v)).first->second;
}

BinomTable::BinomTable(long max_x) : zero_(0) {
  if (max_x < 0) throw std::invalid_argument("BinomTable: negative max_x");
  rows_.resize(static_cast<std::size_t>(max_x) + 1);
  for (long x = 0; x <= max_x; ++x) {
    auto& row = rows_[static_cast<std::size_t>(x)];
    row.resize(static_cast<std::size_t>(x) + 1);
    row.front() = 1;
    row.back() = 1;
    for (long y = 1; y < x; ++y) {
      const auto& prev = rows_[static_cast<std::size_t>(x - 1)];
      row[static_cast<std::size_t>(y)] = prev[static_cast<std::size_t>(y - 1)] +
                                         prev[static_cast<std::size_t>(y)];
    }
  }
}

const BigInt& BinomTable::at(long x, long y) const {
  if (x < 0 || x > max_x())
    throw std::out_of_range("BinomTable::at: x outside table");
  if (y < 0 || y > x) return zero_;
  return rows_[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
}

}  // namespace sunflower
