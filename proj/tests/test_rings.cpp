#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "zdhom/errors.hpp"
#include "zdhom/ring.hpp"

using namespace zdhom;

namespace {

std::vector<std::size_t> factor_orders(const Ring& r) {
  std::vector<std::size_t> orders;
  for (const Ring& f : decompose_local(r)) orders.push_back(f.order);
  return orders;
}

bool same_tables(const Ring& a, const Ring& b) {
  return a.order == b.order && a.add_table == b.add_table && a.mul_table == b.mul_table &&
         a.zero == b.zero && a.one == b.one;
}

}  // namespace

TEST_SUITE("rings") {

TEST_CASE("make_zmod builds modular arithmetic") {
  Ring z6 = make_zmod(6);
  REQUIRE(z6.order == 6);
  CHECK(z6.mul(2, 3) == 0);
  CHECK(z6.mul(2, 4) == 2);
  CHECK(z6.add(4, 5) == 3);
  CHECK(z6.labels[4] == "4");
  CHECK(z6.element_by_label("5") == 5);
  CHECK_THROWS_AS(z6.element_by_label("6"), invalid_parameter);
  CHECK_THROWS_AS(make_zmod(1), invalid_parameter);
  CHECK_THROWS_AS(make_zmod(0), invalid_parameter);
}

TEST_CASE("make_zmod local structure") {
  auto prof = is_local(make_zmod(4));
  REQUIRE(prof.has_value());
  CHECK(prof->maximal_ideal == std::vector<uint16_t>{0, 2});
  CHECK(prof->nilpotency_index == 2);
  CHECK(prof->unit_count == 2);
  CHECK_FALSE(prof->is_field);

  // Z30 is a product of three fields by the Chinese remainder theorem.
  Ring z30 = make_zmod(30);
  CHECK_FALSE(is_local(z30).has_value());
  auto orders = factor_orders(z30);
  CHECK(orders == std::vector<std::size_t>{2, 3, 5});
}

TEST_CASE("make_galois_field small fields") {
  Ring f2 = make_galois_field(2, 1);
  CHECK(f2.order == 2);
  CHECK(units(f2).size() == 1);

  // In GF(4) the two elements outside {0,1} are inverse to each other and
  // sum to 1 (they are x and x+1 modulo x^2+x+1).
  Ring f4 = make_galois_field(2, 2);
  REQUIRE(f4.order == 4);
  std::vector<uint16_t> others;
  for (uint16_t e = 0; e < 4; ++e)
    if (e != f4.zero && e != f4.one) others.push_back(e);
  REQUIRE(others.size() == 2);
  CHECK(f4.mul(others[0], others[1]) == f4.one);
  CHECK(f4.add(others[0], others[1]) == f4.one);

  Ring f9 = make_galois_field(3, 2);
  CHECK(f9.order == 9);
  CHECK(units(f9).size() == 8);
  auto prof = is_local(f9);
  REQUIRE(prof.has_value());
  CHECK(prof->is_field);
  CHECK(prof->nilpotency_index == 1);

  CHECK_THROWS_AS(make_galois_field(4, 1), invalid_parameter);
  CHECK_THROWS_AS(make_galois_field(2, 10), too_large);  // 1024 > default cap
}

TEST_CASE("make_univariate_quotient") {
  // F2[x]/(x^3): local with m = (x), m^3 = 0, socle layer {0, x^2}.
  Ring r8 = make_univariate_quotient(2, {0, 0, 0, 1});
  REQUIRE(r8.order == 8);
  auto prof = is_local(r8);
  REQUIRE(prof.has_value());
  CHECK(prof->nilpotency_index == 3);
  CHECK(prof->unit_count == 4);
  REQUIRE(prof->socle_layer.size() == 2);
  CHECK(prof->socle_layer[0] == r8.zero);
  CHECK(r8.labels[prof->socle_layer[1]] == "x^2");

  // F2[x]/(x^2) is the order-4 local non-field of the classification.
  Ring r4 = make_univariate_quotient(2, {0, 0, 1});
  CHECK(r4.order == 4);
  REQUIRE(is_local(r4).has_value());
  CHECK(is_local(r4)->maximal_ideal.size() == 2);

  // x^2 + x = x(x+1) splits: the quotient is F2 x F2, detected through the
  // idempotents x and x+1.
  Ring split = make_univariate_quotient(2, {0, 1, 1});
  CHECK_FALSE(is_local(split).has_value());
  CHECK(factor_orders(split) == std::vector<std::size_t>{2, 2});

  // A zero leading coefficient is trimmed: {0, 1, 0} is the polynomial x,
  // and F2[x]/(x) is the field with two elements.
  CHECK(make_univariate_quotient(2, {0, 1, 0}).order == 2);
  CHECK_THROWS_AS(make_univariate_quotient(2, {1}), invalid_parameter);   // degree 0
  CHECK_THROWS_AS(make_univariate_quotient(2, {1, 2}), invalid_parameter);  // 2x = 0 mod 2
}

TEST_CASE("make_monomial_quotient") {
  // F2[x,y]/(x^2, y^2): basis 1, x, y, xy; m^2 = (xy) and m^3 = 0.
  Ring r16 = make_monomial_quotient(2, 2, {{2, 0}, {0, 2}});
  REQUIRE(r16.order == 16);
  auto prof = is_local(r16);
  REQUIRE(prof.has_value());
  CHECK(prof->nilpotency_index == 3);
  CHECK(prof->unit_count == 8);

  // One variable reduces to the univariate construction.
  Ring mono = make_monomial_quotient(2, 1, {{4}});
  Ring uni = make_univariate_quotient(2, {0, 0, 0, 0, 1});
  CHECK(same_tables(mono, uni));

  Ring r9 = make_monomial_quotient(3, 1, {{2}});
  REQUIRE(r9.order == 9);
  auto p9 = is_local(r9);
  REQUIRE(p9.has_value());
  CHECK(p9->socle_layer.size() == 3);

  // y never appears as a pure power, so the quotient is infinite.
  CHECK_THROWS_AS(make_monomial_quotient(2, 2, {{2, 0}, {1, 1}}), invalid_parameter);
}

TEST_CASE("product rings") {
  Ring z2 = make_zmod(2), z3 = make_zmod(3);
  Ring p = product({z2, z3});
  REQUIRE(p.order == 6);

  // The CRT map a -> (a mod 2, a mod 3) carries Z6 onto Z2 x Z3; check it is
  // a ring isomorphism on the explicit tables.
  Ring z6 = make_zmod(6);
  std::vector<uint16_t> iso(6);
  for (uint16_t a = 0; a < 6; ++a) {
    std::string label = "(" + std::to_string(a % 2) + "," + std::to_string(a % 3) + ")";
    iso[a] = p.element_by_label(label);
  }
  for (uint16_t a = 0; a < 6; ++a)
    for (uint16_t b = 0; b < 6; ++b) {
      CHECK(iso[z6.add(a, b)] == p.add(iso[a], iso[b]));
      CHECK(iso[z6.mul(a, b)] == p.mul(iso[a], iso[b]));
    }

  Ring single = product({z6});
  CHECK(same_tables(single, z6));

  Ring cube = product({z2, z2, z2});
  CHECK(cube.order == 8);
  CHECK(units(cube).size() == 1);

  CHECK_THROWS_AS(product({make_zmod(100), make_zmod(100)}), too_large);
  CHECK_THROWS_AS(product({}), invalid_parameter);
}

TEST_CASE("units and zero divisors partition the nonzero elements") {
  Ring z6 = make_zmod(6);
  CHECK(units(z6) == std::vector<uint16_t>{1, 5});
  CHECK(zero_divisors(z6) == std::vector<uint16_t>{2, 3, 4});
  CHECK(units(make_zmod(4)) == std::vector<uint16_t>{1, 3});
  CHECK(units(make_galois_field(3, 2)).size() == 8);

  for (const Ring& r : {make_zmod(12), make_zmod(30), product({make_zmod(4), make_zmod(4)}),
                        make_monomial_quotient(2, 2, {{2, 0}, {0, 2}})}) {
    std::set<uint16_t> all;
    for (uint16_t u : units(r)) all.insert(u);
    std::size_t nu = all.size();
    for (uint16_t z : zero_divisors(r)) all.insert(z);
    CHECK(all.size() == nu + zero_divisors(r).size());  // disjoint
    CHECK(all.size() == r.order - 1);                   // covers R minus {0}
    CHECK(all.count(r.zero) == 0);
  }
}

TEST_CASE("is_local profiles") {
  auto p8 = is_local(make_zmod(8));
  REQUIRE(p8.has_value());
  CHECK(p8->maximal_ideal == std::vector<uint16_t>{0, 2, 4, 6});
  CHECK(p8->nilpotency_index == 3);
  CHECK(p8->unit_count == 4);
  CHECK(p8->socle_layer == std::vector<uint16_t>{0, 4});
  CHECK_FALSE(p8->is_field);

  CHECK_FALSE(is_local(make_zmod(6)).has_value());  // 2 + 3 = 5 is a unit

  auto pf = is_local(make_galois_field(2, 2));
  REQUIRE(pf.has_value());
  CHECK(pf->is_field);
  CHECK(pf->nilpotency_index == 1);
  CHECK(pf->maximal_ideal == std::vector<uint16_t>{0});
}

TEST_CASE("decompose_local properties") {
  // Prime-power part orders for Z_n.
  CHECK(factor_orders(make_zmod(12)) == std::vector<std::size_t>{3, 4});
  CHECK(factor_orders(make_zmod(360)) == std::vector<std::size_t>{5, 8, 9});

  for (unsigned long n : {6ul, 12ul, 30ul, 36ul, 60ul, 81ul, 105ul}) {
    Ring r = make_zmod(n);
    std::size_t prod = 1;
    for (const Ring& f : decompose_local(r)) {
      auto prof = is_local(f);
      REQUIRE(prof.has_value());
      CHECK(prof->unit_count == units(f).size());
      CHECK(prof->unit_count == f.order - prof->maximal_ideal.size());
      prod *= f.order;
      // A local ring decomposes to itself.
      auto again = decompose_local(f);
      REQUIRE(again.size() == 1);
      CHECK(same_tables(again[0], f));
    }
    CHECK(prod == r.order);
  }
}

TEST_CASE("axiom checks pass on every constructed family") {
  for (const Ring& r :
       {make_zmod(2), make_zmod(36), make_galois_field(2, 3), make_galois_field(5, 1),
        make_univariate_quotient(2, {1, 1, 0, 1}),  // irreducible x^3 + x + 1
        make_univariate_quotient(3, {0, 0, 1}), make_monomial_quotient(2, 2, {{2, 0}, {0, 2}}),
        product({make_zmod(4), make_zmod(9)})}) {
    AxiomReport rep = check_axioms(r);
    CHECK_MESSAGE(rep.ok, r.name, ": ", rep.detail);
  }
}

TEST_CASE("axiom check reports a broken table") {
  Ring r = make_zmod(5);
  r.mul_table[1 * 5 + 2] = 4;  // 1 * 2 must be 2; breaks the identity axiom
  AxiomReport rep = check_axioms(r);
  CHECK_FALSE(rep.ok);
  CHECK_FALSE(rep.detail.empty());
}

}  // TEST_SUITE("rings")
