#include <doctest.h>

#include <string>
#include <vector>

#include "zdhom/errors.hpp"
#include "zdhom/ring_spec.hpp"

using namespace zdhom;
using Kind = RingSpec::Term::Kind;

TEST_SUITE("ring_spec") {

TEST_CASE("parse single terms") {
  RingSpec s = parse_ring_spec("Z30");
  REQUIRE(s.factors.size() == 1);
  CHECK(s.factors[0].kind == Kind::ZMod);
  CHECK(s.factors[0].n == 30);

  s = parse_ring_spec("GF(3^2)");
  REQUIRE(s.factors.size() == 1);
  CHECK(s.factors[0].kind == Kind::GaloisField);
  CHECK(s.factors[0].p == 3);
  CHECK(s.factors[0].k == 2);

  // Coefficients are stored low degree first.
  s = parse_ring_spec("F2[x]/(x^3 + x)");
  REQUIRE(s.factors.size() == 1);
  CHECK(s.factors[0].kind == Kind::UnivariateQuotient);
  CHECK(s.factors[0].p == 2);
  CHECK(s.factors[0].poly == std::vector<unsigned>{0, 1, 0, 1});

  s = parse_ring_spec("F2[x,y]/(x^2, y^2)");
  REQUIRE(s.factors.size() == 1);
  CHECK(s.factors[0].kind == Kind::MonomialQuotient);
  CHECK(s.factors[0].nvars == 2);
  CHECK(s.factors[0].gens ==
        std::vector<std::vector<unsigned>>{{2, 0}, {0, 2}});
}

TEST_CASE("parse products and whitespace") {
  RingSpec s = parse_ring_spec("Z4 x GF(3^2)");
  REQUIRE(s.factors.size() == 2);
  CHECK(s.factors[0].kind == Kind::ZMod);
  CHECK(s.factors[1].kind == Kind::GaloisField);

  CHECK(parse_ring_spec("  Z6   x   Z4  ") == parse_ring_spec("Z6 x Z4"));
  CHECK(normalize(parse_ring_spec("  Z6   x   Z4  ")) == "Z6 x Z4");
  CHECK(parse_ring_spec("F2[x]/(x^3+x+1)") == parse_ring_spec("F2[x]/(x^3 + x + 1)"));
}

TEST_CASE("normalize is canonical and round-trips") {
  for (const char* text :
       {"Z12", "GF(2^2)", "GF(3^2) x Z4", "F2[x]/(x^3 + x + 1)", "F3[x]/(x^2)",
        "F2[x,y]/(x^2, y^2)", "F2[x,y]/(x^2, xy, y^2)", "F2[x]/(x^2) x Z3",
        "Z4 x GF(3^2) x F2[x]/(x^3)"}) {
    RingSpec s = parse_ring_spec(text);
    CHECK(normalize(s) == text);
    CHECK(parse_ring_spec(normalize(s)) == s);
  }

  // Monomial generators are listed highest power of the first variable first,
  // duplicates are dropped, and juxtaposition or '*' both denote a product.
  CHECK(normalize(parse_ring_spec("F2[x,y]/(y^2, x^2, y^2)")) == "F2[x,y]/(x^2, y^2)");
  CHECK(normalize(parse_ring_spec("F2[x,y]/(x^2, x y, y^2)")) == "F2[x,y]/(x^2, xy, y^2)");
  CHECK(normalize(parse_ring_spec("F2[x,y]/(x^2, x*y, y^2)")) == "F2[x,y]/(x^2, xy, y^2)");

  // Polynomials are printed highest degree first with normalized coefficients.
  CHECK(normalize(parse_ring_spec("F3[x]/(x + x^2 + x)")) == "F3[x]/(x^2 + 2x)");

  // Custom variable names normalize to the canonical ones.
  CHECK(normalize(parse_ring_spec("F2[t]/(t^4)")) == "F2[x]/(x^4)");
  CHECK(normalize(parse_ring_spec("F2[a,b]/(a^2, b^3)")) == "F2[x,y]/(x^2, y^3)");
}

TEST_CASE("parse errors carry byte offsets") {
  auto offset_of = [](const char* text) -> std::size_t {
    try {
      parse_ring_spec(text);
    } catch (const parse_error& e) {
      return e.offset;
    }
    FAIL("expected a parse error for '", text, "'");
    return static_cast<std::size_t>(-1);
  };

  CHECK(offset_of("Zx") == 1);        // Z needs digits
  CHECK(offset_of("GF(4)") == 4);     // the grammar requires the caret form GF(p^k)
  CHECK(offset_of("GF(4^2)") == 4);   // 4 is not prime (reported just past it)
  CHECK(offset_of("Z6 y Z4") == 3);   // bad separator
  CHECK(offset_of("Z6 Z4") == 3);     // missing separator
  CHECK(offset_of("Z1") == 2);        // modulus below 2
  CHECK(offset_of("F2[x]/()") == 7);  // empty ideal
  CHECK(offset_of("") == 0);

  CHECK_THROWS_AS(parse_ring_spec("F2[x]/(x^2 + 1 + x^2)"), parse_error);  // degree collapses
  CHECK_THROWS_AS(parse_ring_spec("F2[x]/(2x^3)"), parse_error);           // zero mod 2
  CHECK_THROWS_AS(parse_ring_spec("F2[x,y]/(x^2 + y)"), parse_error);      // not monomial
  CHECK_THROWS_AS(parse_ring_spec("F2[x,x]/(x^2)"), parse_error);          // duplicate variable
  CHECK_THROWS_AS(parse_ring_spec("F2[x]/(y^2)"), parse_error);            // unknown variable
  CHECK_THROWS_AS(parse_ring_spec("F9[x]/(x^2)"), parse_error);            // 9 is not prime
}

TEST_CASE("build_ring instantiates the parsed spec") {
  CHECK(build_ring(parse_ring_spec("Z6")).order == 6);
  CHECK(build_ring(parse_ring_spec("GF(2^2)")).order == 4);
  CHECK(build_ring(parse_ring_spec("Z4 x GF(3^2) x F2[x]/(x^3)")).order == 4 * 9 * 8);
  CHECK(build_ring(parse_ring_spec("F2[x,y]/(x^2, y^2)")).order == 16);
  CHECK_THROWS_AS(build_ring(parse_ring_spec("Z4096")), too_large);  // dense-table ceiling
  CHECK_THROWS_AS(build_ring(parse_ring_spec("Z30 x Z30")), too_large);
  // A generous cap admits the same product.
  CHECK(build_ring(parse_ring_spec("Z30 x Z30"), 1024).order == 900);
}

}  // TEST_SUITE("ring_spec")
