#include <doctest.h>

#include "superpoint/exact_matrix.hpp"
#include "superpoint/rng.hpp"

using namespace superpoint;

namespace {

ExactMatrix random_matrix(int rows, int cols, Rng& rng) {
  ExactMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      m.at(i, j) = Rational(rng.uniform(-6, 6), rng.uniform(1, 3));
  return m;
}

}  // namespace

TEST_CASE("determinant") {
  ExactMatrix a = ExactMatrix::from_rows({{Rational(1), Rational(2)},
                                          {Rational(3), Rational(4)}});
  CHECK(a.determinant() == -2);
  ExactMatrix b = ExactMatrix::from_rows({{Rational(2), Rational(0), Rational(1)},
                                          {Rational(1), Rational(1), Rational(0)},
                                          {Rational(0), Rational(3), Rational(1)}});
  CHECK(b.determinant() == 5);
  ExactMatrix c = ExactMatrix::from_rows({{Rational(1), Rational(2)},
                                          {Rational(2), Rational(4)}});
  CHECK(c.determinant() == 0);
  ExactMatrix d = ExactMatrix::from_rows({{Rational(1, 2), Rational(1, 3)},
                                          {Rational(1, 4), Rational(1, 5)}});
  CHECK(d.determinant() == Rational(1, 60));
}

TEST_CASE("inverse") {
  ExactMatrix a = ExactMatrix::from_rows({{Rational(2), Rational(1)},
                                          {Rational(5), Rational(3)}});
  CHECK(a * a.inverse() == ExactMatrix::identity(2));
  CHECK(a.inverse() * a == ExactMatrix::identity(2));
  ExactMatrix s = ExactMatrix::from_rows({{Rational(1), Rational(1)},
                                          {Rational(1), Rational(1)}});
  CHECK_THROWS_AS(s.inverse(), std::domain_error);
}

TEST_CASE("rank and nullspace on hand matrices") {
  ExactMatrix a = ExactMatrix::from_rows({{Rational(1), Rational(2), Rational(3)},
                                          {Rational(2), Rational(4), Rational(6)}});
  CHECK(a.rank() == 1);
  auto ns = a.nullspace();
  CHECK(ns.size() == 2);
  for (const auto& v : ns) {
    auto image = a.mul_vec(v);
    for (const auto& q : image) CHECK(q == 0);
  }
  CHECK(ExactMatrix::identity(4).rank() == 4);
  CHECK(ExactMatrix::identity(4).nullspace().empty());
  CHECK(ExactMatrix(3, 5).rank() == 0);
  CHECK(ExactMatrix(3, 5).nullspace().size() == 5);
}

TEST_CASE("rank-nullity and nullspace correctness on random matrices") {
  Rng rng(30);
  for (int trial = 0; trial < 60; ++trial) {
    int rows = rng.uniform(1, 7), cols = rng.uniform(1, 7);
    ExactMatrix a = random_matrix(rows, cols, rng);
    BareissEchelon ech(a);
    auto ns = a.nullspace();
    CHECK(ech.rank() + static_cast<int>(ns.size()) == cols);
    for (const auto& v : ns) {
      auto image = a.mul_vec(v);
      for (const auto& q : image) CHECK(q == 0);
    }
    // Nullspace vectors are primitive integer vectors.
    for (const auto& v : ns)
      for (const auto& q : v) CHECK(denominator(q) == 1);
  }
}

TEST_CASE("solve") {
  ExactMatrix a = ExactMatrix::from_rows({{Rational(1), Rational(1)},
                                          {Rational(1), Rational(-1)},
                                          {Rational(2), Rational(0)}});
  BareissEchelon ech(a);
  auto sol = ech.solve({Rational(3), Rational(1), Rational(4)});
  REQUIRE(sol.has_value());
  CHECK((*sol)[0] == 2);
  CHECK((*sol)[1] == 1);
  CHECK(!ech.solve({Rational(3), Rational(1), Rational(5)}).has_value());
}

TEST_CASE("solve returns a genuine solution on random consistent systems") {
  Rng rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    int rows = rng.uniform(1, 6), cols = rng.uniform(1, 6);
    ExactMatrix a = random_matrix(rows, cols, rng);
    std::vector<Rational> x;
    for (int j = 0; j < cols; ++j) x.push_back(Rational(rng.uniform(-5, 5)));
    auto b = a.mul_vec(x);
    auto sol = BareissEchelon(a).solve(b);
    REQUIRE(sol.has_value());
    CHECK(a.mul_vec(*sol) == b);
  }
}

TEST_CASE("determinant matches row scaling under permutation") {
  // Exercises pivoting: first column starts with zero.
  ExactMatrix a = ExactMatrix::from_rows({{Rational(0), Rational(1), Rational(2)},
                                          {Rational(1, 2), Rational(0), Rational(1)},
                                          {Rational(3), Rational(1), Rational(0)}});
  // Expansion by hand: det = 0*(0*0-1*1) - 1*(1/2*0-1*3) + 2*(1/2*1-0*3) = 4.
  CHECK(a.determinant() == 4);
}
