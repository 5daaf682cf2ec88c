#include "sunflower/family_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace sunflower {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

SetFamily parse_family(std::istream& in) {
  std::string line;
  int lineno = 0;
  int n = -1, m = -1;

  // Header.
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::istringstream hs(t);
    std::string ntok, mtok;
    hs >> ntok >> mtok;
    std::string rest;
    if (hs >> rest) throw ParseError(lineno, "junk after header");
    if (ntok.rfind("n=", 0) != 0 || mtok.rfind("m=", 0) != 0)
      throw ParseError(lineno, "expected header 'n=<int> m=<int>'");
    try {
      n = std::stoi(ntok.substr(2));
      m = std::stoi(mtok.substr(2));
    } catch (const std::exception&) {
      throw ParseError(lineno, "bad integer in header");
    }
    break;
  }
  if (n < 0) throw ParseError(lineno, "missing header");
  if (n < 1 || n > kUniverseCap)
    throw ParseError(lineno, "n outside [1, " + std::to_string(kUniverseCap) + "]");
  if (m < 0 || m > n) throw ParseError(lineno, "m outside [0, n]");

  std::vector<ElementSet> sets;
  std::vector<BigRat> weights;
  bool any_weight = false;

  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;

    std::string weight_part;
    const auto bar = t.find('|');
    if (bar != std::string::npos) {
      weight_part = trim(t.substr(bar + 1));
      t = trim(t.substr(0, bar));
    }

    ElementSet s;
    int prev = 0, count = 0;
    std::istringstream es(t);
    std::string tok;
    while (es >> tok) {
      int e;
      try {
        e = std::stoi(tok);
      } catch (const std::exception&) {
        throw ParseError(lineno, "bad element '" + tok + "'");
      }
      if (e < 1 || e > n) throw ParseError(lineno, "element outside [1, n]");
      if (e <= prev) throw ParseError(lineno, "elements must be strictly ascending");
      s.add(e);
      prev = e;
      ++count;
    }
    if (count != m) throw ParseError(lineno, "member has " + std::to_string(count) +
                                                 " elements, expected m");

    if (!weight_part.empty()) {
      if (weight_part.rfind("w=", 0) != 0)
        throw ParseError(lineno, "expected 'w=<int>/<int>' after '|'");
      auto w = parse_rational(weight_part.substr(2));
      if (!w) throw ParseError(lineno, "bad weight");
      if (*w <= 0) throw ParseError(lineno, "weight must be positive");
      if (!sets.empty() && !any_weight)
        throw ParseError(lineno, "weights must be on all members or none");
      any_weight = true;
      weights.push_back(*w);
    } else if (any_weight) {
      throw ParseError(lineno, "weights must be on all members or none");
    }
    sets.push_back(s);
  }

  try {
    return any_weight
               ? SetFamily::weighted(Universe(n), m, std::move(sets),
                                     std::move(weights))
               : SetFamily::unit(Universe(n), m, std::move(sets));
  } catch (const std::invalid_argument& e) {
    throw ParseError(lineno, e.what());
  }
}

SetFamily parse_family(const std::string& text) {
  std::istringstream in(text);
  return parse_family(in);
}

SetFamily load_family(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return parse_family(in);
}

std::string serialize_family(const SetFamily& f) {
  std::vector<std::size_t> order(f.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return ElementSet::seq_less(f.set(a), f.set(b));
  });

  std::ostringstream os;
  os << "n=" << f.n() << " m=" << f.m() << "\n";
  for (std::size_t i : order) {
    bool first = true;
    f.set(i).for_each([&](int e) {
      if (!first) os << " ";
      os << e;
      first = false;
    });
    if (!f.is_unit()) os << " | w=" << rational_string(f.weight(i));
    os << "\n";
  }
  return os.str();
}

}  // namespace sunflower
