#include <doctest.h>

#include "superpoint/derivation.hpp"
#include "superpoint/element.hpp"
#include "test_support.hpp"

using namespace superpoint;
using superpoint::testing::random_element;
using superpoint::testing::random_w_field;

TEST_CASE("canonical element text") {
  int n = 3;
  CHECK(SuperElement::zero(n).to_text() == "0");
  CHECK(SuperElement::one(n).to_text() == "1");
  CHECK(SuperElement::constant(n, Rational(-3, 4)).to_text() == "-3/4");
  CHECK(SuperElement::variable_x(n, 2).to_text() == "x2");
  CHECK(SuperElement::term(n, Rational(-1, 2), {2, 0, 0}, {1, 3}).to_text() ==
        "-1/2·x1^2·xi1xi3");
  CHECK(SuperElement::term(n, -1, {0, 1, 0}, {}).to_text() == "-x2");
}

TEST_CASE("element text round trip") {
  Rng rng(10);
  for (int trial = 0; trial < 200; ++trial) {
    int n = rng.uniform(1, 5);
    SuperElement a = random_element(n, 3, 5, rng);
    CHECK(parse_element(n, a.to_text()) == a);
  }
}

TEST_CASE("element parser accepts aliases") {
  int n = 2;
  SuperElement expected =
      Rational(3, 2) * (SuperElement::variable_x(n, 1) * SuperElement::variable_xi(n, 1) *
                        SuperElement::variable_xi(n, 2));
  CHECK(parse_element(n, "3/2*x1*xi1xi2") == expected);
  CHECK(parse_element(n, "3/2·x1·ξ1ξ2") == expected);
  CHECK(parse_element(n, " 3/2 x1 xi1 xi2 ") == expected);
  CHECK(parse_element(n, "x1 - x1") == SuperElement::zero(n));
  CHECK(parse_element(n, "-x1 + -x2") ==
        -(SuperElement::variable_x(n, 1) + SuperElement::variable_x(n, 2)));
}

TEST_CASE("element parse errors carry positions") {
  auto position_of = [](int n, const std::string& text) -> std::size_t {
    try {
      parse_element(n, text);
    } catch (const ParseError& e) {
      return e.position;
    }
    return static_cast<std::size_t>(-1);
  };
  CHECK(position_of(2, "") == 0);
  CHECK(position_of(2, "x1 +") == 4);
  CHECK(position_of(2, "xi3") == 2);       // index out of range, at the digits
  CHECK(position_of(2, "x1^") == 3);
  CHECK(position_of(2, "xi1^2") == 3);     // odd generators cannot carry exponents
  CHECK(position_of(2, "x1 x2 )") == 6);
  CHECK(position_of(2, "y1") == 0);
}

TEST_CASE("derivation text round trip") {
  Rng rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    int n = rng.uniform(1, 4);
    WField f = random_w_field(n, rng);
    SuperDerivation d = f.as_derivation();
    CHECK(parse_derivation(n, d.to_text()) == d);
    if (f.z_degree()) {
      SuperDerivation e = extend(f);
      CHECK(parse_derivation(n, e.to_text()) == e);
    }
  }
}

TEST_CASE("derivation parser accepts aliases") {
  int n = 2;
  SuperDerivation d = koszul_d(n);
  CHECK(parse_derivation(n, "x1·dxi1 + x2·dxi2") == d);
  CHECK(parse_derivation(n, "(x1)*∂ξ1 + (x2)*∂ξ2") == d);
  CHECK(parse_derivation(n, "E") == euler(n).as_derivation());
  CHECK(parse_derivation(n, "xi1xi2dxi1") ==
        WField(n, {SuperElement::variable_xi(n, 1) * SuperElement::variable_xi(n, 2),
                   SuperElement::zero(n)})
            .as_derivation());
  CHECK(parse_derivation(n, "dxi1 - dxi1").is_zero());
  CHECK(parse_derivation(n, "2dx1").image_x(1) == SuperElement::constant(n, 2));
}

TEST_CASE("derivation parse errors") {
  CHECK_THROWS_AS(parse_derivation(2, ""), ParseError);
  CHECK_THROWS_AS(parse_derivation(2, "x1"), ParseError);
  CHECK_THROWS_AS(parse_derivation(2, "dxi3"), ParseError);
  CHECK_THROWS_AS(parse_derivation(2, "(x1 dxi1"), ParseError);
}
