#include <sstream>
#include <string>

#include "doctest.h"

#include "sunflower/family.hpp"
#include "sunflower/family_io.hpp"
#include "sunflower/random_families.hpp"

using namespace sunflower;

TEST_CASE("parse a plain family") {
  const SetFamily f = parse_family("n=5 m=2\n1 2\n3 5\n");
  CHECK(f.n() == 5);
  CHECK(f.m() == 2);
  CHECK(f.size() == 2);
  CHECK(f.is_unit());
  CHECK(f.contains(ElementSet::of({3, 5})));
}

TEST_CASE("comments, blank lines, stray spacing") {
  const SetFamily f = parse_family(
      "# header comment\n"
      "n=6 m=2\n"
      "\n"
      "  1 2  \n"
      "# middle\n"
      "5 6\n"
      "\n");
  CHECK(f.size() == 2);
  // Comments are whole lines only; '#' inside a member line is an error.
  CHECK_THROWS_AS((void)parse_family("n=6 m=2\n1 2 # note\n"), ParseError);
}

TEST_CASE("weighted members") {
  const SetFamily f = parse_family("n=4 m=2\n1 2 | w=3/2\n3 4 | w=2/1\n");
  CHECK(!f.is_unit());
  CHECK(family_size(f) == make_rational(7, 2));

  // All-or-none: a mixed file is rejected, with the line number.
  try {
    (void)parse_family("n=4 m=2\n1 2 | w=3/2\n3 4\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
  }
}

TEST_CASE("malformed inputs carry line numbers") {
  CHECK_THROWS_AS((void)parse_family(""), ParseError);
  CHECK_THROWS_AS((void)parse_family("n=4\n1 2\n"), ParseError);
  CHECK_THROWS_AS((void)parse_family("n=4 m=2\n1 2 3\n"), ParseError);
  CHECK_THROWS_AS((void)parse_family("n=4 m=2\n1 9\n"), ParseError);
  CHECK_THROWS_AS((void)parse_family("n=4 m=2\n1 1\n"), ParseError);
  CHECK_THROWS_AS((void)parse_family("n=4 m=2\n1 2\n1 2\n"), ParseError);
  CHECK_THROWS_AS((void)parse_family("n=4 m=2\n1 x\n"), ParseError);
  CHECK_THROWS_AS((void)parse_family("n=4 m=2\n1 2 | w=0/1\n"), ParseError);
  CHECK_THROWS_AS((void)load_family("/no/such/file"), ParseError);
}

TEST_CASE("serialization is canonical") {
  // Members arrive out of order; the canonical form sorts them.
  const SetFamily f = parse_family("n=5 m=2\n3 5\n1 4\n1 2\n");
  CHECK(serialize_family(f) == "n=5 m=2\n1 2\n1 4\n3 5\n");
}

TEST_CASE("round trip is byte exact") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const int n = 4 + static_cast<int>(seed % 6);
    const int m = 1 + static_cast<int>(seed % 3);
    const SetFamily f =
        seed % 2 ? random_family(n, m, 8, seed)
                 : random_weighted_family(n, m, 8, seed,
                                          FamilyShape::Clustered);
    const std::string text = serialize_family(f);
    CHECK(serialize_family(parse_family(text)) == text);
  }
}

TEST_CASE("stream parse matches string parse") {
  const std::string text = "n=6 m=3\n1 2 3\n2 4 6\n";
  std::istringstream in(text);
  CHECK(serialize_family(parse_family(in)) ==
        serialize_family(parse_family(text)));
}
