#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "superpoint/derivation.hpp"
#include "superpoint/exact_matrix.hpp"
#include "superpoint/quadratic_form.hpp"
#include "superpoint/report.hpp"
#include "superpoint/rng.hpp"

namespace superpoint {

enum class Provenance { WLayer, HKernel, DHKernel };

/// A list of linearly independent fields of one fixed Z-degree. Factories
/// verify independence by exact rank before handing the space out.
struct GradedSubspace {
  int n = 0;
  int k = 0;
  Provenance provenance = Provenance::WLayer;
  std::vector<WField> fields;
  int dim() const { return static_cast<int>(fields.size()); }
};

/// Odd index masks of the given degree in canonical (increasing index-list)
/// order.
std::vector<std::uint32_t> lambda_masks(int n, int degree);

int binomial(int n, int k);

/// The layer (W_n)_k with basis {xi_T d/dxi_i : |T| = k+1}; empty outside
/// -1 <= k <= n-1.
GradedSubspace w_basis(int n, int k);

/// Coordinates over the w_basis(n, k) enumeration; the field must be zero or
/// homogeneous of degree k.
std::vector<Rational> w_layer_coordinates(const WField& f, int k);
WField w_layer_from_coordinates(int n, int k, const std::vector<Rational>& coords);

/// Coordinates over all layers k = -1..n-1, concatenated.
std::vector<Rational> w_full_coordinates(const WField& f);

/// delta~(omega) for the Serre extension of a homogeneous field.
SuperElement hamiltonian_defect(const WField& delta, const QuadraticForm& omega);

/// Exact kernel of delta -> hamiltonian_defect(delta, omega) inside (W_n)_k.
GradedSubspace h_basis(int n, const QuadraticForm& omega, int k);

/// Kernel of (delta, phi) -> delta~(omega) - phi omega with phi ranging over
/// all of Lambda (not presumed scalar); the phi of each solution is kept so
/// callers can inspect it.
struct DHLayer {
  GradedSubspace space;
  std::vector<SuperElement> phis;
};
DHLayer dh_layer(int n, const QuadraticForm& omega, int k);
GradedSubspace dh_basis(int n, const QuadraticForm& omega, int k);

/// Same kernel with phi constrained to scalars; used to cross-check that the
/// unconstrained solve forces phi constant.
int dh_dim_scalar_phi(int n, const QuadraticForm& omega, int k);

Report verify_lemma_1_1(int n, const QuadraticForm& omega);

/// Expansion of all pairwise brackets over the given basis; fails (with the
/// offending pair recorded) when a bracket leaves the span.
struct StructureConstants {
  bool closed = true;
  std::vector<std::vector<std::vector<Rational>>> coefficients;  // [i][j] -> coords
  std::vector<std::pair<int, int>> failures;
};
StructureConstants structure_constants(const std::vector<WField>& basis);

struct JacobiReport {
  int checked = 0;
  std::vector<std::array<int, 3>> failures;
  bool passed() const { return failures.empty(); }
};
JacobiReport jacobi_check(const std::vector<WField>& basis,
                          const std::vector<std::array<int, 3>>& triples);
std::vector<std::array<int, 3>> all_triples(int size);
std::vector<std::array<int, 3>> random_triples(int size, int count, Rng& rng);

/// The algebra automorphism Phi_g: x_i -> sum_j g_ij x_j, xi_i -> sum_j g_ij xi_j.
SuperElement transform_element(const ExactMatrix& g, const SuperElement& a);

/// Conjugation Phi_g . delta . Phi_g^{-1}; maps H(omega) onto H(g^T omega g).
WField transform_field(const ExactMatrix& g, const WField& delta);

/// The linear constraint [delta~, d] = 0 with prescribed xi-images, solved
/// for the x-images over all candidate images of total degree k+1. The system
/// splits per generator and per bidegree slice; each slice is factored once
/// and reused across fields.
class ExtensionUniqueness {
 public:
  ExtensionUniqueness(int n, int k);

  /// Total solution freedom (0 = the x-images are determined uniquely).
  int freedom() const { return freedom_; }

  /// Solves for a concrete degree-k field and compares with extend().
  bool matches(const WField& delta) const;

 private:
  struct Slice {
    std::vector<Monomial> monomials;
    BareissEchelon system;
    int rows;
  };
  int n_, k_, freedom_ = 0;
  std::vector<Slice> slices_;
};

/// Convenience wrapper around ExtensionUniqueness::freedom.
int extension_freedom(int n, int k);

/// Helpers shared by the verification drivers: the union of monomials of the
/// given elements in canonical order, and the coefficient matrix with one
/// column per element.
std::pair<std::vector<Monomial>, ExactMatrix> vectorize(
    const std::vector<SuperElement>& elems);

}  // namespace superpoint
