#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "superpoint/monomial.hpp"
#include "superpoint/rational.hpp"

namespace superpoint {

/// Z x Z degree of a bihomogeneous element: (degree in the x's, degree in the xi's).
struct Bidegree {
  int x_degree = 0;
  int xi_degree = 0;
  int parity() const { return xi_degree & 1; }
  bool operator==(const Bidegree&) const = default;
};

/// An element of A = Q[x1..xn] (x) Lambda[xi1..xin], stored as a sparse map
/// from monomials to nonzero rational coefficients. Values are immutable in
/// spirit: every operation returns a fresh element.
class SuperElement {
 public:
  explicit SuperElement(int n);

  static SuperElement zero(int n) { return SuperElement(n); }
  static SuperElement constant(int n, const Rational& c);
  static SuperElement one(int n) { return constant(n, 1); }
  static SuperElement variable_x(int n, int i);    // 1-based
  static SuperElement variable_xi(int n, int i);   // 1-based
  static SuperElement monomial(Monomial m, Rational c = 1);

  /// Builds c * x^even * xi_{odd[0]} ... xi_{odd[k-1]} where `odd` need not be
  /// sorted; the sorting sign is absorbed into the coefficient. A repeated odd
  /// index gives zero.
  static SuperElement term(int n, const Rational& c, std::vector<int> even,
                           const std::vector<int>& odd);

  int n() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  Rational coefficient(const Monomial& m) const;

  bool operator==(const SuperElement&) const = default;

  SuperElement& operator+=(const SuperElement& rhs);
  SuperElement& operator-=(const SuperElement& rhs);
  friend SuperElement operator+(SuperElement lhs, const SuperElement& rhs);
  friend SuperElement operator-(SuperElement lhs, const SuperElement& rhs);
  friend SuperElement operator*(const SuperElement& lhs, const SuperElement& rhs);
  friend SuperElement operator*(const Rational& c, SuperElement rhs);
  SuperElement operator-() const;

  /// Parity of a homogeneous element; nullopt when even and odd terms mix.
  std::optional<int> parity() const;

  /// Bidegree when bihomogeneous, nullopt otherwise. Zero has every bidegree;
  /// we report (0,0).
  std::optional<Bidegree> bidegree() const;
  bool is_homogeneous() const { return bidegree().has_value(); }

  SuperElement homogeneous_component(Bidegree d) const;
  SuperElement xi_degree_component(int q) const;  // all terms with xi-degree q
  SuperElement parity_component(int p) const;     // all terms of parity p
  int max_xi_degree() const;                      // 0 for the zero element
  int max_x_degree() const;

  bool is_x_free() const;   // lies in Lambda[xi]
  bool is_xi_free() const;  // lies in Q[x]

  /// Substitutes the point p for (x1..xn); the result lies in Lambda[xi].
  SuperElement evaluate_even(std::span<const Rational> p) const;

  /// Left partial derivative with respect to xi_i.
  SuperElement partial_xi(int i) const;

  /// Algebra homomorphism sending x_i and xi_i to the given images.
  /// Images of the x's must be even, images of the xi's odd.
  SuperElement substitute(std::span<const SuperElement> x_images,
                          std::span<const SuperElement> xi_images) const;

  /// Canonical text form, e.g. "-1/2·x1^2·xi1xi3 + x2". Terms are listed in
  /// increasing graded-lex order; "0" for the zero element.
  std::string to_text() const;

 private:
  void insert(Monomial m, Rational c);  // accumulating, drops zeros

  int n_;
  std::map<Monomial, Rational> terms_;
};

/// Parses the canonical text form (and the ASCII/Unicode aliases documented in
/// the README). Throws ParseError with a byte position on malformed input.
SuperElement parse_element(int n, std::string_view text);

struct ParseError {
  std::size_t position;
  std::string message;
};

}  // namespace superpoint
