#include <doctest.h>

#include "superpoint/vectorial.hpp"
#include "test_support.hpp"

using namespace superpoint;

namespace {

SuperElement xi(int n, int i) { return SuperElement::variable_xi(n, i); }

std::vector<WField> full_w_basis(int n) {
  std::vector<WField> out;
  for (int k = -1; k <= n - 1; ++k) {
    auto layer = w_basis(n, k);
    out.insert(out.end(), layer.fields.begin(), layer.fields.end());
  }
  return out;
}

// Independent oracle for the defect of a degree-k field against the standard
// form: the displayed double sum (-1)^k 2 sum_{i,j} x_i x_j dh_j/dxi_i.
SuperElement defect_double_sum(const WField& delta) {
  int n = delta.n();
  int k = delta.z_degree().value();
  SuperElement out = SuperElement::zero(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      SuperElement part = delta.image(j).partial_xi(i);
      if (part.is_zero()) continue;
      out += SuperElement::variable_x(n, i) *
             (SuperElement::variable_x(n, j) * part);
    }
  int sign = ((k % 2) + 2) % 2 ? -2 : 2;
  return Rational(sign) * out;
}

// Independent construction oracle for H(omega) with omega standard: the
// Hamiltonian field of f in Lambda^{k+2} has images h_i = df/dxi_i.
WField hamiltonian_field(const SuperElement& f) {
  int n = f.n();
  std::vector<SuperElement> images;
  for (int i = 1; i <= n; ++i) images.push_back(f.partial_xi(i));
  return WField(n, std::move(images));
}

}  // namespace

TEST_CASE("w_basis enumeration") {
  auto wm1 = w_basis(2, -1);
  CHECK(wm1.dim() == 2);
  CHECK(wm1.fields[0] == WField::basis_field(2, 0, 1));
  CHECK(wm1.fields[1] == WField::basis_field(2, 0, 2));
  int total = 0;
  for (int k = -1; k <= 1; ++k) total += w_basis(2, k).dim();
  CHECK(total == 8);
  CHECK(w_basis(3, 2).dim() == 3);
  CHECK(w_basis(3, 3).dim() == 0);
  CHECK(w_basis(3, -2).dim() == 0);
  for (int n = 1; n <= 6; ++n)
    for (int k = -1; k <= n - 1; ++k)
      CHECK(w_basis(n, k).dim() == n * binomial(n, k + 1));
}

TEST_CASE("layer coordinates round trip") {
  Rng rng(40);
  for (int trial = 0; trial < 50; ++trial) {
    int n = rng.uniform(2, 4);
    int k = rng.uniform(-1, n - 1);
    auto layer = w_basis(n, k);
    std::vector<Rational> coords;
    for (int i = 0; i < layer.dim(); ++i) coords.push_back(Rational(rng.uniform(-3, 3)));
    WField f = w_layer_from_coordinates(n, k, coords);
    CHECK(w_layer_coordinates(f, k) == coords);
  }
}

TEST_CASE("hamiltonian defect examples") {
  int n = 2;
  QuadraticForm omega = QuadraticForm::standard(n);
  WField rotation(n, {xi(n, 2), -xi(n, 1)});
  CHECK(hamiltonian_defect(rotation, omega).is_zero());
  CHECK(hamiltonian_defect(euler(n), omega) == Rational(2) * omega.as_element());
  WField d1 = WField::basis_field(n, 0, 1);
  SuperElement defect = hamiltonian_defect(d1, omega);
  CHECK(defect == defect_double_sum(d1));
  CHECK(defect.is_zero());
}

TEST_CASE("defect agrees with the double-sum formula on every basis field") {
  for (int n = 2; n <= 4; ++n) {
    QuadraticForm omega = QuadraticForm::standard(n);
    for (const auto& f : full_w_basis(n))
      CHECK(hamiltonian_defect(f, omega) == defect_double_sum(f));
  }
}

TEST_CASE("h_basis kernels") {
  QuadraticForm omega2 = QuadraticForm::standard(2);
  auto h0 = h_basis(2, omega2, 0);
  CHECK(h0.dim() == 1);
  // The rotation spans it.
  WField rotation(2, {xi(2, 2), -xi(2, 1)});
  auto coords = w_layer_coordinates(rotation, 0);
  std::vector<std::vector<Rational>> rows{w_layer_coordinates(h0.fields[0], 0)};
  rows.push_back(coords);
  CHECK(ExactMatrix::from_rows(rows).rank() == 1);

  // Every kernel element has exactly zero defect; the complement does not.
  for (int n = 2; n <= 4; ++n) {
    QuadraticForm omega = QuadraticForm::standard(n);
    for (int k = -1; k <= n - 1; ++k) {
      auto h = h_basis(n, omega, k);
      for (const auto& f : h.fields) CHECK(hamiltonian_defect(f, omega).is_zero());
    }
  }
}

TEST_CASE("h dimensions match the Hamiltonian-field construction oracle") {
  for (int n = 2; n <= 5; ++n) {
    QuadraticForm omega = QuadraticForm::standard(n);
    for (int k = -1; k <= n - 1; ++k) {
      // Span of the fields H_f, f running over Lambda^{k+2} monomials.
      std::vector<std::vector<Rational>> rows;
      for (std::uint32_t mask : lambda_masks(n, k + 2)) {
        Monomial m = Monomial::one(n);
        m.odd = mask;
        WField hf = hamiltonian_field(SuperElement::monomial(m));
        CHECK(hamiltonian_defect(hf, omega).is_zero());
        rows.push_back(w_layer_coordinates(hf, k));
      }
      int oracle_dim =
          rows.empty() ? 0 : ExactMatrix::from_rows(rows).rank();
      CHECK(oracle_dim == binomial(n, k + 2));
      CHECK(h_basis(n, omega, k).dim() == oracle_dim);
    }
  }
}

TEST_CASE("dh layers") {
  for (int n = 2; n <= 4; ++n) {
    QuadraticForm omega = QuadraticForm::standard(n);
    for (int k = -1; k <= n - 1; ++k) {
      auto layer = dh_layer(n, omega, k);
      auto h = h_basis(n, omega, k);
      CHECK(layer.space.dim() == h.dim() + (k == 0 ? 1 : 0));
      for (const auto& phi : layer.phis) CHECK(phi == phi.xi_degree_component(0));
    }
    // E lies in the span of DH_0.
    auto dh0 = dh_layer(n, omega, 0);
    std::vector<std::vector<Rational>> rows;
    for (const auto& f : dh0.space.fields) rows.push_back(w_layer_coordinates(f, 0));
    BareissEchelon ech(ExactMatrix::from_rows(rows).transposed());
    CHECK(ech.solve(w_layer_coordinates(euler(n), 0)).has_value());
  }
}

TEST_CASE("verify_lemma_1_1 passes for n = 2..4") {
  for (int n = 2; n <= 4; ++n) {
    Report rep = verify_lemma_1_1(n, QuadraticForm::standard(n));
    CHECK(rep.passed());
  }
}

TEST_CASE("degenerate forms are rejected at construction") {
  ExactMatrix m(3, 3);
  m.at(0, 0) = 1;
  m.at(1, 1) = 1;
  CHECK_THROWS_AS(QuadraticForm(std::move(m)), std::invalid_argument);
  ExactMatrix asym = ExactMatrix::identity(2);
  asym.at(0, 1) = 1;
  CHECK_THROWS_AS(QuadraticForm(std::move(asym)), std::invalid_argument);
}

TEST_CASE("structure constants") {
  SUBCASE("W_2 is closed and the expansion reproduces the brackets") {
    auto basis = full_w_basis(2);
    auto sc = structure_constants(basis);
    CHECK(sc.closed);
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < basis.size(); ++j) {
        WField reconstructed = WField::zero(2);
        for (std::size_t t = 0; t < basis.size(); ++t)
          reconstructed += sc.coefficients[i][j][t] * basis[t];
        CHECK(reconstructed == bracket(basis[i], basis[j]));
      }
  }
  SUBCASE("brackets of layers land in the summed layer") {
    for (int n = 2; n <= 3; ++n)
      for (int k1 = -1; k1 <= n - 1; ++k1)
        for (int k2 = -1; k2 <= n - 1; ++k2)
          for (const auto& a : w_basis(n, k1).fields)
            for (const auto& b : w_basis(n, k2).fields) {
              WField br = bracket(a, b);
              if (!br.is_zero()) CHECK(br.z_degree() == k1 + k2);
            }
  }
  SUBCASE("H(omega) is closed under the bracket") {
    for (int n = 2; n <= 4; ++n) {
      QuadraticForm omega = QuadraticForm::standard(n);
      std::vector<WField> h_all;
      for (int k = -1; k <= n - 1; ++k) {
        auto h = h_basis(n, omega, k);
        h_all.insert(h_all.end(), h.fields.begin(), h.fields.end());
      }
      CHECK(structure_constants(h_all).closed);
    }
  }
  SUBCASE("[DH, H] lies in H") {
    for (int n = 2; n <= 4; ++n) {
      QuadraticForm omega = QuadraticForm::standard(n);
      std::vector<WField> h_all;
      for (int k = -1; k <= n - 1; ++k) {
        auto h = h_basis(n, omega, k);
        h_all.insert(h_all.end(), h.fields.begin(), h.fields.end());
      }
      std::vector<std::vector<Rational>> rows;
      for (const auto& f : h_all) rows.push_back(w_full_coordinates(f));
      BareissEchelon ech(ExactMatrix::from_rows(rows).transposed());
      for (int k = -1; k <= n - 1; ++k)
        for (const auto& dh : dh_basis(n, omega, k).fields)
          for (const auto& h : h_all)
            CHECK(ech.solve(w_full_coordinates(bracket(dh, h))).has_value());
    }
  }
  SUBCASE("a bracket leaving the span is reported") {
    // {d/dxi1, xi1xi2 d/dxi2} brackets to xi2 d/dxi2, outside the span.
    std::vector<WField> basis{
        WField::basis_field(2, 0, 1),
        WField::basis_field(2, 0b11, 2),
    };
    auto sc = structure_constants(basis);
    CHECK(!sc.closed);
    CHECK(!sc.failures.empty());
  }
}

TEST_CASE("jacobi identity") {
  auto basis = full_w_basis(2);
  auto rep = jacobi_check(basis, all_triples(static_cast<int>(basis.size())));
  CHECK(rep.checked == 512);
  CHECK(rep.passed());

  Rng rng(41);
  auto basis4 = full_w_basis(4);
  auto rep4 = jacobi_check(basis4, random_triples(static_cast<int>(basis4.size()), 100, rng));
  CHECK(rep4.checked == 100);
  CHECK(rep4.passed());
}

TEST_CASE("change of basis") {
  SUBCASE("identity leaves omega alone") {
    QuadraticForm omega = QuadraticForm::standard(3);
    CHECK(transform(omega, ExactMatrix::identity(3)) == omega);
  }
  SUBCASE("diagonal scaling") {
    QuadraticForm omega = QuadraticForm::standard(2);
    ExactMatrix g(2, 2);
    g.at(0, 0) = 1;
    g.at(1, 1) = 2;
    QuadraticForm scaled = transform(omega, g);
    CHECK(scaled == QuadraticForm::diagonal({1, 4}));
    for (int k = -1; k <= 1; ++k)
      CHECK(h_basis(2, omega, k).dim() == h_basis(2, scaled, k).dim());
  }
  SUBCASE("singular matrices are rejected") {
    ExactMatrix g(2, 2);
    g.at(0, 0) = 1;
    CHECK_THROWS_AS(transform(QuadraticForm::standard(2), g), std::domain_error);
  }
  SUBCASE("hyperbolic form has the same kernel dimensions") {
    ExactMatrix hyp(2, 2);
    hyp.at(0, 1) = Rational(1, 2);
    hyp.at(1, 0) = Rational(1, 2);
    QuadraticForm hyperbolic(std::move(hyp));  // the form x1 x2
    QuadraticForm standard = QuadraticForm::standard(2);
    for (int k = -1; k <= 1; ++k)
      CHECK(h_basis(2, hyperbolic, k).dim() == h_basis(2, standard, k).dim());
  }
  SUBCASE("conjugated Hamiltonian fields are Hamiltonian for the transformed form") {
    Rng rng(42);
    for (int n = 2; n <= 3; ++n) {
      QuadraticForm omega = QuadraticForm::standard(n);
      ExactMatrix g(n, n);
      do {
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) g.at(i, j) = Rational(rng.uniform(-2, 2));
      } while (g.determinant() == 0);
      QuadraticForm moved = transform(omega, g);
      for (int k = -1; k <= n - 1; ++k) {
        CHECK(h_basis(n, omega, k).dim() == h_basis(n, moved, k).dim());
        // Conjugation by g carries H(omega) onto H(g^T omega g), so the
        // inverse direction carries the moved kernel back.
        for (const auto& f : h_basis(n, moved, k).fields)
          CHECK(hamiltonian_defect(transform_field(g.inverse(), f), omega).is_zero());
        for (const auto& f : h_basis(n, omega, k).fields)
          CHECK(hamiltonian_defect(transform_field(g, f), moved).is_zero());
      }
    }
  }
}

TEST_CASE("transform_element is an algebra automorphism compatible with d") {
  Rng rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    int n = rng.uniform(2, 3);
    ExactMatrix g(n, n);
    do {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g.at(i, j) = Rational(rng.uniform(-2, 2));
    } while (g.determinant() == 0);
    SuperElement a = superpoint::testing::random_element(n, 2, 3, rng);
    SuperElement b = superpoint::testing::random_element(n, 2, 3, rng);
    CHECK(transform_element(g, a * b) ==
          transform_element(g, a) * transform_element(g, b));
    SuperDerivation d = koszul_d(n);
    CHECK(transform_element(g, apply(d, a)) == apply(d, transform_element(g, a)));
  }
}

TEST_CASE("extension uniqueness") {
  for (int n = 1; n <= 3; ++n)
    for (int k = -1; k <= n - 1; ++k) {
      ExtensionUniqueness uniq(n, k);
      CHECK(uniq.freedom() == 0);
      for (const auto& f : w_basis(n, k).fields) CHECK(uniq.matches(f));
    }
}
