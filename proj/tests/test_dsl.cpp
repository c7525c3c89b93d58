#include <doctest.h>

#include <sstream>

#include "powgraph/dsl.hpp"
#include "powgraph/errors.hpp"
#include "powgraph/verifier.hpp"

using namespace powgraph;

TEST_CASE("atoms") {
  CHECK(build_group("C6").order() == 6);
  CHECK(build_group("C6").label() == "C6");
  CHECK(build_group("D4").order() == 8);
  CHECK(build_group("S3").order() == 6);
  CHECK(build_group("A4").order() == 12);
  CHECK(build_group("Q8").order() == 8);
}

TEST_CASE("products and whitespace") {
  const GroupTable g = build_group("C6xC4");
  CHECK(g.order() == 24);
  CHECK(g.label() == "C6 x C4");

  CHECK(build_group("  C2 x C3 x C5 ").order() == 30);
  CHECK(build_group("C 6").order() == 6);
}

TEST_CASE("permutation atoms") {
  CHECK(build_group("perm:(1 2 3 4 5);(1 2)").order() == 120);  // S5
  CHECK(build_group("perm:(1 2 3)(4 5)").order() == 6);         // C6
  CHECK(build_group("perm:(1 2);(3 4)").order() == 4);          // C2 x C2
  CHECK(build_group("perm:").order() == 1);
  CHECK(build_group("perm:(1 2) x C3").order() == 6);
}

TEST_CASE("parse errors carry byte offsets") {
  try {
    build_group("C6xB4");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset == 3);
  }

  try {
    build_group("perm:(1 2");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset == 5);  // the unclosed '('
  }

  CHECK_THROWS_AS(build_group(""), ParseError);
  CHECK_THROWS_AS(build_group("C"), ParseError);
  CHECK_THROWS_AS(build_group("C0"), ParseError);
  CHECK_THROWS_AS(build_group("C6 C4"), ParseError);
  CHECK_THROWS_AS(build_group("perm:(1 2 1)"), ParseError);
  CHECK_THROWS_AS(build_group("perm:(0 1)"), ParseError);
}

TEST_CASE("capacity is enforced during evaluation") {
  CHECK_THROWS_AS(build_group("C200xC200", 20000), CapacityError);
  CHECK_THROWS_AS(build_group("S6", 100), CapacityError);
  CHECK(build_group("S6", 720).order() == 720);
}

TEST_CASE("catalog files") {
  std::istringstream in(
      "# comment line\n"
      "C6\n"
      "  D4   # trailing comment\n"
      "\n"
      "Q8xC2\n");
  const CatalogSpec cat = load_catalog(in);
  REQUIRE(cat.entries.size() == 3);
  CHECK(cat.entries[0] == "C6");
  CHECK(cat.entries[1] == "D4");
  CHECK(cat.entries[2] == "Q8xC2");
}
