#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "superpoint/element.hpp"

namespace superpoint {

/// A superderivation of A, described extensionally by its images on the
/// generators x1..xn, xi1..xin. Parity is inferred from the images and may be
/// absent (mixed) for sums; apply/bracket require it to be definite.
/// The Z-degree is the Koszul-complex degree: a derivation of degree k raises
/// the xi-degree of xi-images by k and the total degree of x-images by k.
class SuperDerivation {
 public:
  SuperDerivation(int n, std::vector<SuperElement> images_xi,
                  std::vector<SuperElement> images_x);

  static SuperDerivation zero(int n);

  int n() const { return n_; }
  const std::vector<SuperElement>& images_xi() const { return images_xi_; }
  const std::vector<SuperElement>& images_x() const { return images_x_; }
  const SuperElement& image_xi(int i) const;  // 1-based
  const SuperElement& image_x(int i) const;   // 1-based

  bool is_zero() const;
  std::optional<int> parity() const { return parity_; }
  std::optional<int> z_degree() const { return z_degree_; }

  bool operator==(const SuperDerivation&) const = default;

  SuperDerivation& operator+=(const SuperDerivation& rhs);
  friend SuperDerivation operator+(SuperDerivation lhs, const SuperDerivation& rhs);
  friend SuperDerivation operator-(SuperDerivation lhs, const SuperDerivation& rhs);
  friend SuperDerivation operator*(const Rational& c, SuperDerivation rhs);
  SuperDerivation operator-() const;

  /// Canonical text form: "(image)·dxi1 + (image)·dx2 + ...".
  std::string to_text() const;

 private:
  int n_;
  std::vector<SuperElement> images_xi_;
  std::vector<SuperElement> images_x_;
  std::optional<int> parity_;
  std::optional<int> z_degree_;
};

/// Graded Leibniz application. Throws if the derivation has mixed parity or
/// the dimensions disagree.
SuperElement apply(const SuperDerivation& d, const SuperElement& a);

/// The Koszul differential d = sum_i x_i d/dxi_i (odd, degree -1, d^2 = 0).
SuperDerivation koszul_d(int n);

/// Superbracket [d1,d2] = d1 d2 - (-1)^{p1 p2} d2 d1, evaluated on generators.
SuperDerivation bracket(const SuperDerivation& d1, const SuperDerivation& d2);

/// An element of W(V) = Der Lambda[xi1..xin]: images h_i = delta(xi_i) are
/// x-free. Acts on A as the derivation with zero x-images.
class WField {
 public:
  WField(int n, std::vector<SuperElement> images);

  static WField zero(int n);
  /// xi_T . d/dxi_i for the odd monomial with index mask T.
  static WField basis_field(int n, std::uint32_t t_mask, int i);

  int n() const { return n_; }
  const std::vector<SuperElement>& images() const { return images_; }
  const SuperElement& image(int i) const;  // 1-based

  bool is_zero() const;
  std::optional<int> parity() const;
  std::optional<int> z_degree() const { return z_degree_; }
  WField homogeneous_component(int k) const;

  SuperDerivation as_derivation() const;  // the Lambda-action (x-images zero)

  bool operator==(const WField&) const = default;
  WField& operator+=(const WField& rhs);
  friend WField operator+(WField lhs, const WField& rhs);
  friend WField operator-(WField lhs, const WField& rhs);
  friend WField operator*(const Rational& c, WField rhs);
  WField operator-() const;

  std::string to_text() const;

 private:
  int n_;
  std::vector<SuperElement> images_;
  std::optional<int> z_degree_;
};

/// The Euler field E = sum_i xi_i d/dxi_i in W(V)_0.
WField euler(int n);

/// Serre extension: the unique derivation of A restricting to delta on
/// Lambda[xi] with [extend(delta), d] = 0. Requires homogeneous Z-degree k;
/// the x-images are (-1)^k d(h_i).
SuperDerivation extend(const WField& delta);

WField bracket(const WField& a, const WField& b);

/// Parses the canonical derivation form, e.g. "(x1)·dxi2 + xi1xi2·dxi1",
/// plus the aliases "E" (Euler) and unicode ∂ξ/∂x. Throws ParseError.
SuperDerivation parse_derivation(int n, std::string_view text);

/// Restricts a derivation with x-free xi-images and zero x-images to W(V).
/// Throws if the derivation does not lie in W(V).
WField as_w_field(const SuperDerivation& d);

}  // namespace superpoint
