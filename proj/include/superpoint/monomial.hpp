#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace superpoint {

/// A monomial x1^a1 ... xn^an . xi_{i1} ... xi_{ik} of the free
/// supercommutative algebra on n even and n odd generators. The odd factor
/// is stored as a bitmask (bit i-1 set <=> xi_i present), which makes the
/// strictly-increasing-indices invariant structural.
struct Monomial {
  std::vector<int> even;   // exponents of x1..xn
  std::uint32_t odd = 0;   // subset of {1..n}

  static Monomial one(int n);
  static Monomial x(int n, int i, int power = 1);  // i is 1-based
  static Monomial xi(int n, int i);

  int n() const { return static_cast<int>(even.size()); }
  int x_degree() const;
  int xi_degree() const;
  int total_degree() const { return x_degree() + xi_degree(); }
  int parity() const { return xi_degree() & 1; }
  std::vector<int> odd_indices() const;  // 1-based, strictly increasing

  bool operator==(const Monomial&) const = default;

  /// Graded lexicographic order on (total degree, even exponents, odd indices).
  std::strong_ordering operator<=>(const Monomial& rhs) const;
};

/// Sign of sorting the concatenation xi_A . xi_B into increasing order:
/// (-1)^{#{(a,b) in A x B : a > b}}, or 0 when A and B intersect.
int merge_sign(std::uint32_t a, std::uint32_t b);

/// Sign picked up by moving xi_i to the front of xi_mask (i must be in mask):
/// (-1)^{# indices in mask below i}.
int extraction_sign(std::uint32_t mask, int i);

}  // namespace superpoint
