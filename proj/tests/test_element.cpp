#include <doctest.h>

#include "superpoint/element.hpp"
#include "superpoint/quadratic_form.hpp"
#include "test_support.hpp"

using namespace superpoint;
using superpoint::testing::random_element;
using superpoint::testing::random_homogeneous;

namespace {

SuperElement x(int n, int i) { return SuperElement::variable_x(n, i); }
SuperElement xi(int n, int i) { return SuperElement::variable_xi(n, i); }

}  // namespace

TEST_CASE("addition") {
  int n = 2;
  CHECK((x(n, 1) + Rational(-1) * x(n, 1)).is_zero());
  SuperElement s = xi(n, 1) + xi(n, 2);
  CHECK(s.term_count() == 2);
  CHECK(Rational(1, 2) * x(n, 1) + Rational(1, 2) * x(n, 1) == x(n, 1));
  CHECK_THROWS_AS(x(2, 1) + x(3, 1), std::invalid_argument);
}

TEST_CASE("multiplication and the sign rule") {
  int n = 2;
  CHECK(xi(n, 1) * xi(n, 2) == SuperElement::term(n, 1, {0, 0}, {1, 2}));
  CHECK(xi(n, 2) * xi(n, 1) == SuperElement::term(n, -1, {0, 0}, {1, 2}));
  CHECK((xi(n, 1) * xi(n, 1)).is_zero());
  SuperElement a = x(n, 1) + xi(n, 1) * xi(n, 2);
  SuperElement expected = SuperElement::monomial(Monomial::x(n, 1, 2)) +
                          SuperElement::term(n, 2, {1, 0}, {1, 2});
  CHECK(a * a == expected);
}

TEST_CASE("odd canonical form absorbs the sorting sign") {
  CHECK(SuperElement::term(3, 1, {0, 0, 0}, {2, 1}) ==
        SuperElement::term(3, -1, {0, 0, 0}, {1, 2}));
  CHECK(SuperElement::term(3, 1, {0, 0, 0}, {3, 1, 2}) ==
        SuperElement::term(3, 1, {0, 0, 0}, {1, 2, 3}));
  CHECK(SuperElement::term(3, 5, {0, 0, 0}, {2, 2}).is_zero());
}

TEST_CASE("homogeneous components") {
  int n = 2;
  SuperElement a = x(n, 1) + xi(n, 1) * xi(n, 2);
  CHECK(a.homogeneous_component(Bidegree{1, 0}) == x(n, 1));
  CHECK(a.homogeneous_component(Bidegree{0, 2}) == xi(n, 1) * xi(n, 2));
  CHECK(a.homogeneous_component(Bidegree{5, 1}).is_zero());
  // The element is the sum of its components.
  SuperElement sum = SuperElement::zero(n);
  for (int p = 0; p <= 3; ++p)
    for (int q = 0; q <= n; ++q) sum += a.homogeneous_component(Bidegree{p, q});
  CHECK(sum == a);
}

TEST_CASE("evaluate_even") {
  int n = 2;
  std::vector<Rational> p{3, 0};
  CHECK((x(n, 1) * xi(n, 2)).evaluate_even(p) == Rational(3) * xi(n, 2));
  SuperElement sq = x(n, 1) * x(n, 1) + x(n, 2) * x(n, 2);
  std::vector<Rational> e1{1, 0};
  CHECK(sq.evaluate_even(e1) == SuperElement::one(n));

  // A rational point of the cone of an indefinite diagonal form.
  QuadraticForm indef = QuadraticForm::diagonal({1, 1, 1, -1});
  std::vector<Rational> cone1{1, 0, 0, 1};
  std::vector<Rational> cone2{3, 4, 0, 5};
  CHECK(indef.as_element().evaluate_even(cone1).is_zero());
  CHECK(indef.as_element().evaluate_even(cone2).is_zero());
}

TEST_CASE("supercommutativity on random homogeneous pairs") {
  Rng rng(0);
  for (int trial = 0; trial < 200; ++trial) {
    int n = rng.uniform(1, 4);
    SuperElement a = random_homogeneous(n, rng.uniform(0, 2), rng.uniform(0, n), rng);
    SuperElement b = random_homogeneous(n, rng.uniform(0, 2), rng.uniform(0, n), rng);
    auto pa = a.parity(), pb = b.parity();
    REQUIRE(pa.has_value());
    REQUIRE(pb.has_value());
    int sign = (*pa && *pb) ? -1 : 1;
    CHECK(a * b == Rational(sign) * (b * a));
  }
}

TEST_CASE("associativity and distributivity on random triples") {
  Rng rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    int n = rng.uniform(1, 4);
    SuperElement a = random_element(n, 2, 4, rng);
    SuperElement b = random_element(n, 2, 4, rng);
    SuperElement c = random_element(n, 2, 4, rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("grading of products") {
  Rng rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    int n = rng.uniform(2, 4);
    int p1 = rng.uniform(0, 2), q1 = rng.uniform(0, 2);
    int p2 = rng.uniform(0, 2), q2 = rng.uniform(0, 2);
    SuperElement a = random_homogeneous(n, p1, q1, rng);
    SuperElement b = random_homogeneous(n, p2, q2, rng);
    SuperElement ab = a * b;
    if (a.is_zero() || b.is_zero() || ab.is_zero()) continue;
    auto d = ab.bidegree();
    REQUIRE(d.has_value());
    CHECK(d->x_degree == p1 + p2);
    CHECK(d->xi_degree == q1 + q2);
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    int n = rng.uniform(1, 4);
    SuperElement a = random_element(n, 2, 4, rng);
    SuperElement b = random_element(n, 2, 4, rng);
    std::vector<Rational> p;
    for (int i = 0; i < n; ++i) p.push_back(Rational(rng.uniform(-4, 4)));
    CHECK((a * b).evaluate_even(p) == a.evaluate_even(p) * b.evaluate_even(p));
  }
}

TEST_CASE("partial_xi is a signed left derivative") {
  int n = 3;
  SuperElement a = SuperElement::term(n, 1, {0, 0, 0}, {1, 2, 3});
  CHECK(a.partial_xi(1) == SuperElement::term(n, 1, {0, 0, 0}, {2, 3}));
  CHECK(a.partial_xi(2) == SuperElement::term(n, -1, {0, 0, 0}, {1, 3}));
  CHECK(a.partial_xi(3) == SuperElement::term(n, 1, {0, 0, 0}, {1, 2}));
  CHECK(x(n, 1).partial_xi(1).is_zero());
}

TEST_CASE("bidegree and parity bookkeeping") {
  int n = 2;
  SuperElement a = x(n, 1) * xi(n, 1);
  auto d = a.bidegree();
  REQUIRE(d.has_value());
  CHECK(d->x_degree == 1);
  CHECK(d->xi_degree == 1);
  CHECK(d->parity() == 1);
  CHECK(!(x(n, 1) + xi(n, 1)).bidegree().has_value());
  CHECK(SuperElement::zero(n).bidegree() == Bidegree{0, 0});
}
