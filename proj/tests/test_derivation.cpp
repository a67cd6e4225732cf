#include <doctest.h>

#include "superpoint/derivation.hpp"
#include "superpoint/quadratic_form.hpp"
#include "superpoint/vectorial.hpp"
#include "test_support.hpp"

using namespace superpoint;
using superpoint::testing::random_homogeneous;

namespace {

SuperElement xi(int n, int i) { return SuperElement::variable_xi(n, i); }
SuperElement x(int n, int i) { return SuperElement::variable_x(n, i); }

WField dxi(int n, int i) { return WField::basis_field(n, 0, i); }

std::vector<WField> full_w_basis(int n) {
  std::vector<WField> out;
  for (int k = -1; k <= n - 1; ++k) {
    auto layer = w_basis(n, k);
    out.insert(out.end(), layer.fields.begin(), layer.fields.end());
  }
  return out;
}

}  // namespace

TEST_CASE("graded Leibniz application") {
  int n = 2;
  CHECK(apply(dxi(n, 1).as_derivation(), xi(n, 1) * xi(n, 2)) == xi(n, 2));
  CHECK(apply(koszul_d(n), xi(n, 1) * xi(n, 2)) ==
        x(n, 1) * xi(n, 2) - x(n, 2) * xi(n, 1));
  CHECK(apply(euler(n).as_derivation(), xi(n, 1) * xi(n, 2)) ==
        Rational(2) * (xi(n, 1) * xi(n, 2)));
  // Mixed parity is rejected.
  SuperDerivation mixed(n, {SuperElement::one(n), xi(n, 1)},
                        {SuperElement::zero(n), SuperElement::zero(n)});
  CHECK(!mixed.parity().has_value());
  CHECK_THROWS_AS(apply(mixed, xi(n, 1)), std::invalid_argument);
}

TEST_CASE("koszul differential") {
  int n = 3;
  SuperDerivation d = koszul_d(n);
  CHECK(apply(d, xi(n, 1)) == x(n, 1));
  CHECK(apply(d, x(n, 1)).is_zero());
  CHECK(apply(d, apply(d, xi(n, 1) * xi(n, 2))).is_zero());
  CHECK(d.parity() == 1);
  CHECK(d.z_degree() == -1);
}

TEST_CASE("d squared vanishes on monomials") {
  for (int n = 1; n <= 4; ++n) {
    SuperDerivation d = koszul_d(n);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      Monomial m = Monomial::one(n);
      m.odd = mask;
      m.even[0] = 1;  // an x-factor comes along for the ride
      CHECK(apply(d, apply(d, SuperElement::monomial(m))).is_zero());
    }
  }
}

TEST_CASE("euler field") {
  int n = 3;
  WField e = euler(n);
  CHECK(apply(e.as_derivation(), xi(n, 1)) == xi(n, 1));
  CHECK(apply(e.as_derivation(), SuperElement::one(n)).is_zero());
  CHECK(apply(extend(e), QuadraticForm::standard(n).as_element()) ==
        Rational(2) * QuadraticForm::standard(n).as_element());
  CHECK(e.z_degree() == 0);
}

TEST_CASE("Serre extension") {
  int n = 2;
  SUBCASE("coordinate derivations extend to themselves") {
    for (int i = 1; i <= n; ++i) {
      SuperDerivation ext = extend(dxi(n, i));
      CHECK(ext.image_xi(i) == SuperElement::one(n));
      for (int j = 1; j <= n; ++j) CHECK(ext.image_x(j).is_zero());
    }
  }
  SUBCASE("degree-zero example") {
    WField f(n, {SuperElement::zero(n), xi(n, 1)});  // xi1 d/dxi2
    SuperDerivation ext = extend(f);
    CHECK(ext.image_x(2) == x(n, 1));
    CHECK(ext.image_x(1).is_zero());
  }
  SUBCASE("degree-one example picks up the sign") {
    WField f(n, {xi(n, 1) * xi(n, 2), SuperElement::zero(n)});
    SuperDerivation ext = extend(f);
    CHECK(ext.image_x(1) == -(x(n, 1) * xi(n, 2) - x(n, 2) * xi(n, 1)));
  }
  SUBCASE("inhomogeneous input is rejected") {
    // images of mixed degree: xi1 (degree 0) and xi1xi2 (degree 1)
    WField g(n, {xi(n, 1), xi(n, 1) * xi(n, 2)});
    CHECK(!g.z_degree().has_value());
    CHECK_THROWS_AS(extend(g), std::invalid_argument);
  }
}

TEST_CASE("extension commutes with d on every basis field (n <= 3)") {
  for (int n = 1; n <= 3; ++n) {
    SuperDerivation d = koszul_d(n);
    for (const auto& f : full_w_basis(n)) CHECK(bracket(extend(f), d).is_zero());
  }
}

TEST_CASE("superbracket") {
  int n = 2;
  WField a = dxi(n, 1);
  WField b(n, {xi(n, 1), SuperElement::zero(n)});  // xi1 d/dxi1
  CHECK(bracket(a, b) == a);
  CHECK(bracket(dxi(n, 1), dxi(n, 2)).is_zero());
  // [E, delta] = k delta for homogeneous delta of degree k
  WField c(n, {xi(n, 1) * xi(n, 2), SuperElement::zero(n)});
  CHECK(bracket(euler(n), c) == c);
  CHECK(bracket(euler(n), dxi(n, 1)) == -dxi(n, 1));
}

TEST_CASE("bracket degrees add and parity matches") {
  Rng rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    int n = rng.uniform(2, 4);
    int k1 = rng.uniform(-1, n - 1), k2 = rng.uniform(-1, n - 1);
    auto l1 = w_basis(n, k1).fields;
    auto l2 = w_basis(n, k2).fields;
    const WField& a = l1[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(l1.size()) - 1))];
    const WField& b = l2[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(l2.size()) - 1))];
    WField br = bracket(a, b);
    if (br.is_zero()) continue;
    CHECK(br.z_degree() == k1 + k2);
    CHECK(br.parity() == ((k1 + k2) % 2 + 2) % 2);
  }
}

TEST_CASE("super-antisymmetry on random pairs") {
  Rng rng(22);
  for (int trial = 0; trial < 100; ++trial) {
    int n = rng.uniform(2, 4);
    auto basis = full_w_basis(n);
    const WField& a = basis[static_cast<std::size_t>(
        rng.uniform(0, static_cast<int>(basis.size()) - 1))];
    const WField& b = basis[static_cast<std::size_t>(
        rng.uniform(0, static_cast<int>(basis.size()) - 1))];
    int sign = (a.parity().value() * b.parity().value()) % 2 ? -1 : 1;
    CHECK(bracket(a, b) == Rational(-sign) * bracket(b, a));
  }
}

TEST_CASE("extension is a Lie superalgebra homomorphism (n <= 3)") {
  for (int n = 2; n <= 3; ++n) {
    auto basis = full_w_basis(n);
    SuperDerivation d = koszul_d(n);
    for (const auto& a : basis)
      for (const auto& b : basis) {
        WField br = bracket(a, b);
        CHECK(extend(br) == bracket(extend(a), extend(b)));
      }
  }
}

TEST_CASE("faithfulness on the basis") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& f : full_w_basis(n)) CHECK(!extend(f).is_zero());
}

TEST_CASE("application respects the grading") {
  Rng rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    int n = rng.uniform(2, 4);
    int k = rng.uniform(-1, n - 1);
    auto layer = w_basis(n, k).fields;
    const WField& f = layer[static_cast<std::size_t>(
        rng.uniform(0, static_cast<int>(layer.size()) - 1))];
    int m = rng.uniform(0, n);
    SuperElement a = random_homogeneous(n, 0, m, rng);
    SuperElement image = apply(f.as_derivation(), a);
    if (image.is_zero()) continue;
    auto d = image.bidegree();
    REQUIRE(d.has_value());
    CHECK(d->xi_degree == m + k);
    CHECK(d->x_degree == 0);
  }
}

TEST_CASE("w-field restriction") {
  int n = 2;
  CHECK(as_w_field(euler(n).as_derivation()) == euler(n));
  CHECK_THROWS_AS(as_w_field(koszul_d(n)), std::invalid_argument);
}
