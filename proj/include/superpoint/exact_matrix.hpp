#pragma once

#include <optional>
#include <vector>

#include "superpoint/rational.hpp"

namespace superpoint {

/// Dense matrix of rationals. Row-major; sizes are small (desk scale), so no
/// sparsity tricks.
class ExactMatrix {
 public:
  ExactMatrix(int rows, int cols);
  static ExactMatrix identity(int n);
  static ExactMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int i, int j);
  const Rational& at(int i, int j) const;

  ExactMatrix transposed() const;
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  std::vector<Rational> mul_vec(const std::vector<Rational>& v) const;

  bool operator==(const ExactMatrix&) const = default;

  Rational determinant() const;  // square matrices
  int rank() const;
  ExactMatrix inverse() const;   // throws std::domain_error when singular

  /// Basis of the right nullspace {v : A v = 0}; each vector is primitive
  /// integer with positive leading entry.
  std::vector<std::vector<Rational>> nullspace() const;

 private:
  int rows_, cols_;
  std::vector<Rational> a_;
};

/// Fraction-free (Bareiss) echelon factorization. Rows are scaled to
/// arbitrary-precision integers, eliminated with exact divisions, and queries
/// finish with rational back-substitution. Factor once, query many times.
class BareissEchelon {
 public:
  explicit BareissEchelon(const ExactMatrix& a);

  int rank() const { return static_cast<int>(pivot_cols_.size()); }
  const std::vector<int>& pivot_columns() const { return pivot_cols_; }

  /// Determinant of the original (square) matrix.
  Rational determinant() const;

  /// A particular solution of A x = b with free variables set to zero;
  /// nullopt when inconsistent.
  std::optional<std::vector<Rational>> solve(const std::vector<Rational>& b) const;

  std::vector<std::vector<Rational>> nullspace() const;

 private:
  int rows_, cols_;
  std::vector<std::vector<Int>> r_;  // echelon form of the scaled matrix
  std::vector<std::vector<Int>> u_;  // integer transform: u_ * scaled A = r_
  std::vector<Rational> row_scale_;  // scaled A = diag(row_scale_) * A
  std::vector<int> pivot_cols_;
  int swap_sign_ = 1;
};

}  // namespace superpoint
