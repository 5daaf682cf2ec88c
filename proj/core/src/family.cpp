#include "sunflower/family.hpp"

#include <algorithm>
#include <stdexcept>

namespace sunflower {

SetFamily::SetFamily(Universe u, int m, std::vector<ElementSet> sets,
                     std::vector<BigRat> weights)
    : universe_(u), m_(m), sets_(std::move(sets)), weights_(std::move(weights)) {
  if (m_ < 0 || m_ > universe_.n)
    throw std::invalid_argument("SetFamily: m outside [0, n]");
  if (!weights_.empty() && weights_.size() != sets_.size())
    throw std::invalid_argument("SetFamily: weight count mismatch");
  for (const auto& s : sets_) {
    if (s.count() != m_)
      throw std::invalid_argument("SetFamily: member has wrong cardinality");
    if (!universe_.contains_set(s))
      throw std::invalid_argument("SetFamily: member outside universe");
  }
  for (const auto& w : weights_)
    if (w <= 0)
      throw std::invalid_argument("SetFamily: weights must be positive");
  sorted_.resize(sets_.size());
  for (std::size_t i = 0; i < sorted_.size(); ++i) sorted_[i] = i;
  std::sort(sorted_.begin(), sorted_.end(), [&](std::size_t a, std::size_t b) {
    return ElementSet::seq_less(sets_[a], sets_[b]);
  });
  for (std::size_t i = 1; i < sorted_.size(); ++i)
    if (sets_[sorted_[i - 1]] == sets_[sorted_[i]])
      throw std::invalid_argument("SetFamily: duplicate member set");
}

SetFamily SetFamily::unit(Universe u, int m, std::vector<ElementSet> sets) {
  return SetFamily(u, m, std::move(sets), {});
}

SetFamily SetFamily::weighted(Universe u, int m, std::vector<ElementSet> sets,
                              std::vector<BigRat> weights) {
  return SetFamily(u, m, std::move(sets), std::move(weights));
}

bool SetFamily::contains(const ElementSet& s) const {
  auto it = std::lower_bound(
      sorted_.begin(), sorted_.end(), s, [&](std::size_t i, const ElementSet& v) {
        return ElementSet::seq_less(sets_[i], v);
      });
  return it != sorted_.end() && sets_[*it] == s;
}

BigRat family_size(const SetFamily& f) {
  if (f.is_unit()) return BigRat(static_cast<unsigned long>(f.size()));
  BigRat total(0);
  for (std::size_t i = 0; i < f.size(); ++i) total += f.weight(i);
  return total;
}

BigRat family_size(const SetFamily& f, std::span<const std::size_t> indices) {
  BigRat total(0);
  for (std::size_t i : indices) {
    if (i >= f.size()) throw std::out_of_range("family_size: bad index");
    total += f.weight(i);
  }
  return total;
}

Interval Sparsity::log(long prec) const {
  if (infinite)
    throw std::domain_error("Sparsity::log: infinite sparsity");
  return Interval::of(exp_kappa, prec).log();
}

std::string Sparsity::str() const {
  if (infinite) return "inf";
  return log().str();
}

Sparsity sparsity(const SetFamily& f) {
  Sparsity k;
  const BigRat total = family_size(f);
  if (total == 0) {
    k.infinite = true;
    return k;
  }
  k.exp_kappa = BigRat(binom(f.n(), f.m())) / total;
  return k;
}

std::vector<std::size_t> restrict_indices(const SetFamily& f,
                                          const ElementSet& t) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (t.subset_of(f.set(i))) out.push_back(i);
  return out;
}

SetFamily restrict_family(const SetFamily& f, const ElementSet& t) {
  std::vector<ElementSet> sets;
  std::vector<BigRat> weights;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (t.subset_of(f.set(i))) {
      sets.push_back(f.set(i));
      if (!f.is_unit()) weights.push_back(f.weight(i));
    }
  }
  return f.is_unit() ? SetFamily::unit(f.universe(), f.m(), std::move(sets))
                     : SetFamily::weighted(f.universe(), f.m(), std::move(sets),
                                           std::move(weights));
}

BigRat restricted_size(const SetFamily& f, const ElementSet& t) {
  BigRat total(0);
  for (std::size_t i = 0; i < f.size(); ++i)
    if (t.subset_of(f.set(i))) total += f.weight(i);
  return total;
}

std::size_t restricted_count(const SetFamily& f, const ElementSet& t) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (t.subset_of(f.set(i))) ++c;
  return c;
}

std::map<int, BigRat> intersection_profile(const SetFamily& f) {
  std::map<int, BigRat> profile;
  for (int j = 0; j <= f.m(); ++j) profile[j] = BigRat(0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = 0; j < f.size(); ++j) {
      const int cap = f.set(i).intersection_count(f.set(j));
      profile[cap] += f.weight(i) * f.weight(j);
    }
  }
  return profile;
}

ResidualFamily residual_family(const SetFamily& f, const ElementSet& t) {
  if (!f.universe().contains_set(t))
    throw std::invalid_argument("residual_family: T outside universe");
  const int tsize = t.count();
  if (tsize > f.m())
    throw std::invalid_argument("residual_family: |T| exceeds m");

  // Monotone relabeling of X - T onto {1, ..., n - |T|}.
  std::vector<int> old_of_new;
  std::vector<int> new_of_old(static_cast<std::size_t>(f.n()) + 1, 0);
  const ElementSet rest = f.universe().all() - t;
  rest.for_each([&](int e) {
    old_of_new.push_back(e);
    new_of_old[static_cast<std::size_t>(e)] =
        static_cast<int>(old_of_new.size());
  });

  std::vector<ElementSet> sets;
  std::vector<BigRat> weights;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!t.subset_of(f.set(i))) continue;
    ElementSet reduced;
    (f.set(i) - t).for_each([&](int e) {
      reduced.add(new_of_old[static_cast<std::size_t>(e)]);
    });
    sets.push_back(reduced);
    if (!f.is_unit()) weights.push_back(f.weight(i));
  }
  // A degenerate residual (|T| = m) is the 0-uniform family {emptyset} when
  // T itself is a member; duplicates cannot arise since members are distinct.
  Universe u(f.n() - tsize > 0 ? f.n() - tsize : 1);
  SetFamily fam = f.is_unit()
                      ? SetFamily::unit(u, f.m() - tsize, std::move(sets))
                      : SetFamily::weighted(u, f.m() - tsize, std::move(sets),
                                            std::move(weights));
  return ResidualFamily{std::move(fam), std::move(old_of_new),
                        tsize == f.m()};
}

PairWeight::PairWeight(std::size_t count, std::vector<BigInt> flat)
    : count_(count), w_(std::move(flat)) {}

PairWeight PairWeight::from_matrix(std::vector<std::vector<BigInt>> w) {
  const std::size_t n = w.size();
  std::vector<BigInt> flat(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (w[i].size() != n)
      throw std::invalid_argument("PairWeight: matrix not square");
    for (std::size_t j = 0; j < n; ++j) {
      if (w[i][j] < 0)
        throw std::invalid_argument("PairWeight: negative weight");
      flat[i * n + j] = w[i][j];
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (flat[i * n + j] != flat[j * n + i])
        throw std::invalid_argument("PairWeight: not symmetric");
  return PairWeight(n, std::move(flat));
}

PairWeight PairWeight::uniform(std::size_t count, const BigInt& value) {
  if (value < 0) throw std::invalid_argument("PairWeight: negative weight");
  return PairWeight(count, std::vector<BigInt>(count * count, value));
}

BigInt PairWeight::total() const {
  BigInt t(0);
  for (const auto& v : w_) t += v;
  return t;
}

}  // namespace sunflower
