#include "sunflower/universe.hpp"

#include <sstream>
#include <stdexcept>

namespace sunflower {

std::string ElementSet::str() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for_each([&](int e) {
    if (!first) os << " ";
    os << e;
    first = false;
  });
  os << "}";
  return os.str();
}

Universe::Universe(int n_) : n(n_) {
  if (n < 1 || n > kUniverseCap)
    throw std::invalid_argument("Universe: n outside [1, cap]");
}

std::vector<ElementSet> subsets_of_size(const ElementSet& ground, int k) {
  std::vector<ElementSet> out;
  for_each_subset(ground, k, [&](const ElementSet& s) { out.push_back(s); });
  return out;
}

}  // namespace sunflower
