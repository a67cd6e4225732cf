#pragma once

#include <cstdint>

#include "superpoint/quadratic_form.hpp"
#include "superpoint/report.hpp"
#include "superpoint/vectorial.hpp"

namespace superpoint {

/// The quotient A' = A / omega A for a diagonal nondegenerate omega, with the
/// normal form that eliminates x_n^2 (no representative monomial is divisible
/// by the leading square). Nondiagonal forms must be diagonalized first via a
/// change of basis.
class QuotientRing {
 public:
  explicit QuotientRing(QuadraticForm omega);

  int n() const { return omega_.n(); }
  const QuadraticForm& omega() const { return omega_; }

  bool is_normal(const SuperElement& a) const;
  SuperElement reduce(const SuperElement& a) const;

  /// a = quotient * omega + remainder, with the identity re-multiplied and
  /// checked exactly before returning.
  struct Division {
    SuperElement quotient;
    SuperElement remainder;
  };
  Division divide(const SuperElement& a) const;

 private:
  QuadraticForm omega_;
};

/// An element of A' held by its unique normal-form representative.
class QuotientElement {
 public:
  QuotientElement(const QuotientRing& ring, const SuperElement& value);

  int n() const { return representative_.n(); }
  const SuperElement& representative() const { return representative_; }
  bool is_zero() const { return representative_.is_zero(); }
  bool operator==(const QuotientElement&) const = default;

 private:
  SuperElement representative_;
};

/// d' on A': class(a) -> class(d a). Well defined because d(omega A) lies in
/// omega A.
QuotientElement d_prime(const QuotientRing& ring, const QuotientElement& u);

/// The derivation of A' induced by a field delta in DH(omega). Construction
/// verifies the membership delta~(omega) = c*omega and rejects other fields
/// with the nonproportional defect as witness.
class InducedDerivation {
 public:
  InducedDerivation(const WField& delta, const QuotientRing& ring);

  const Rational& proportionality() const { return c_; }
  const SuperDerivation& extension() const { return extension_; }
  int parity() const { return parity_; }

  QuotientElement operator()(const QuotientRing& ring, const QuotientElement& u) const;

 private:
  SuperDerivation extension_;
  Rational c_;
  int parity_;
};

/// Full verification of the DH_n -> Der A' construction: d'^2 = 0,
/// representative independence, commutation with d', bracket preservation on
/// all DH basis pairs, and injectivity by exact rank.
Report verify_dh_action(int n, std::uint64_t seed);

}  // namespace superpoint
