#pragma once

#include <span>
#include <string>
#include <vector>

#include "superpoint/derivation.hpp"
#include "superpoint/element.hpp"
#include "superpoint/report.hpp"
#include "superpoint/rng.hpp"

namespace superpoint {

/// A fraction num/den of the localized algebra B, with an even nonzero
/// denominator. Construction cancels the rational content and any common
/// monomial factor and normalizes the denominator's leading coefficient to 1.
class LocalizedElement {
 public:
  LocalizedElement(SuperElement num, SuperElement den);
  static LocalizedElement from(SuperElement a);  // denominator 1

  int n() const { return num_.n(); }
  const SuperElement& num() const { return num_; }
  const SuperElement& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  /// Cross-multiplied equality: a/b == c/d iff a d == c b.
  bool operator==(const LocalizedElement& rhs) const;

  LocalizedElement operator-() const;
  friend LocalizedElement operator+(const LocalizedElement& a, const LocalizedElement& b);
  friend LocalizedElement operator-(const LocalizedElement& a, const LocalizedElement& b);
  friend LocalizedElement operator*(const LocalizedElement& a, const LocalizedElement& b);
  friend LocalizedElement operator*(const Rational& c, const LocalizedElement& a);
  /// Division by an even fraction; throws when rhs is zero or odd-tainted.
  friend LocalizedElement operator/(const LocalizedElement& a, const LocalizedElement& b);

  /// Stalk semantics: the denominator is x-homogeneous and every numerator
  /// term has the same x-degree as the denominator.
  bool is_stalk_homogeneous() const;

  Rational den_value(std::span<const Rational> p) const;
  /// Value at a point with den(p) != 0; lies in Lambda[xi].
  SuperElement evaluate(std::span<const Rational> p) const;

  std::string to_text() const;  // "num" or "(num)/(den)"

 private:
  SuperElement num_, den_;
};

/// d extended to B: the denominator is even and x-only, so it passes through.
LocalizedElement d_localized(const LocalizedElement& u);

/// gamma(f/g) = (g gamma(f) - f gamma(g)) / g^2.
LocalizedElement apply_localized(const SuperDerivation& gamma, const LocalizedElement& u);

/// A point of P(V): homogeneous coordinates, not all zero, normalized so the
/// first nonzero coordinate is 1.
class ProjectivePoint {
 public:
  explicit ProjectivePoint(std::vector<Rational> coords);
  int n() const { return static_cast<int>(coords_.size()); }
  const std::vector<Rational>& coords() const { return coords_; }
  bool operator==(const ProjectivePoint&) const = default;
  std::string to_text() const;  // "(1 : 0 : 2)"

 private:
  std::vector<Rational> coords_;
};

enum class StalkVerdict {
  InRegular,      // lies in the structure stalk O^a_z
  InAmbientOnly,  // lies in the ambient stalk Ô^a_z but not in ker d
  NotInAmbient,   // denominator vanishes at z (or not stalk-homogeneous)
};
const char* to_string(StalkVerdict v);

/// Lemma 2.1 classification of u at z: ambient membership needs a
/// nonvanishing denominator and stalk homogeneity; regular membership
/// additionally needs d(u) = 0.
StalkVerdict stalk_membership(const LocalizedElement& u, const ProjectivePoint& z);

/// eta_j = xi_j - (x_j/x_i) xi_i, the chart-i frame of the annihilator bundle.
struct FrameSection {
  int chart;  // 1-based chart index i
  int j;      // section index, j != chart
  LocalizedElement value;
};
LocalizedElement frame_section(int n, int chart, int j);
std::vector<FrameSection> frame_sections(int n, int chart);
/// The affine coordinate x_j / x_chart.
LocalizedElement chart_coordinate(int n, int chart, int j);

/// Pointwise check of the Lemma 2.1 proof: d_x u(x) = 0 at samples versus the
/// symbolic verdict d(u) = 0.
struct PointwiseReport {
  bool symbolic_zero = false;
  int tested = 0;
  int skipped = 0;
  bool pointwise_all_zero = true;
  bool witness_found = false;  // some sample with d_x u(x) != 0
  std::vector<std::string> notes;
  bool agrees() const { return symbolic_zero ? pointwise_all_zero : witness_found; }
};
PointwiseReport pointwise_annihilator_check(
    const LocalizedElement& u, std::span<const std::vector<Rational>> samples);

/// The derivation d_x = sum_i x_i(p) d/dxi_i of Lambda[xi] at a numeric point.
SuperElement apply_pointwise_d(std::span<const Rational> p, const SuperElement& v);

/// Chart-by-chart sampling verification of Lemma 2.1 for the frame sections
/// and `random_elements` seeded random localized elements per chart, on
/// `samples` rational points per chart.
Report verify_lemma_2_1(int n, int samples, int random_elements, std::uint64_t seed);

}  // namespace superpoint
