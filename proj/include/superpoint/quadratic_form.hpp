#pragma once

#include <string>

#include "superpoint/element.hpp"
#include "superpoint/exact_matrix.hpp"

namespace superpoint {

/// A nondegenerate quadratic form omega in S^2, stored as a symmetric
/// rational matrix. The constructor rejects asymmetric or degenerate input.
class QuadraticForm {
 public:
  explicit QuadraticForm(ExactMatrix symmetric);

  /// omega = x1^2 + ... + xn^2, the paper's normal form.
  static QuadraticForm standard(int n);
  static QuadraticForm diagonal(const std::vector<Rational>& entries);

  int n() const { return n_; }
  const ExactMatrix& matrix() const { return m_; }

  bool is_standard() const;
  bool is_diagonal() const;
  Rational diagonal_entry(int i) const;  // 1-based

  /// omega as the element sum_i m_ii x_i^2 + sum_{i<j} 2 m_ij x_i x_j.
  SuperElement as_element() const;

  /// "standard" or the rows of the matrix, e.g. "[[1, 0], [0, -1]]".
  std::string to_text() const;

  bool operator==(const QuadraticForm&) const = default;

 private:
  int n_;
  ExactMatrix m_;
};

/// The transformed form g^T omega g. Throws std::domain_error when g is
/// singular.
QuadraticForm transform(const QuadraticForm& omega, const ExactMatrix& g);

}  // namespace superpoint
