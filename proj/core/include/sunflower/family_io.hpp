#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "sunflower/family.hpp"

namespace sunflower {

// Family text format.
//
//   n=<int> m=<int>
//   <e1> <e2> ... <em> [| w=<int>/<int>]
//
// One member per line, elements strictly ascending, 1-based. Lines starting
// with '#' and blank lines are skipped. Either every member carries a weight
// or none does. Encoding is UTF-8 with LF line endings.
//
// Canonical serialization sorts members in ascending-element lexicographic
// order and prints weights as canonical fractions, so
// serialize(parse(serialize(f))) == serialize(f) byte for byte.

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_) + ": " + what),
        line(line_) {}
};

SetFamily parse_family(std::istream& in);
SetFamily parse_family(const std::string& text);
SetFamily load_family(const std::string& path);

std::string serialize_family(const SetFamily& f);

}  // namespace sunflower
