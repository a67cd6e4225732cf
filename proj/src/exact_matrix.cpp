#include "superpoint/exact_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace superpoint {

ExactMatrix::ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix shape");
  a_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), Rational(0));
}

ExactMatrix ExactMatrix::identity(int n) {
  ExactMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows.front().size());
  ExactMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c)
      throw std::invalid_argument("ragged rows");
    for (int j = 0; j < c; ++j)
      m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  return m;
}

Rational& ExactMatrix::at(int i, int j) {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
    throw std::out_of_range("matrix index");
  return a_[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
            static_cast<std::size_t>(j)];
}

const Rational& ExactMatrix::at(int i, int j) const {
  return const_cast<ExactMatrix*>(this)->at(i, j);
}

ExactMatrix ExactMatrix::transposed() const {
  ExactMatrix m(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
  ExactMatrix m(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Rational& aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols_; ++j) m.at(i, j) += aik * b.at(k, j);
    }
  return m;
}

std::vector<Rational> ExactMatrix::mul_vec(const std::vector<Rational>& v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw std::invalid_argument("vector length mismatch");
  std::vector<Rational> out(static_cast<std::size_t>(rows_), Rational(0));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      out[static_cast<std::size_t>(i)] += at(i, j) * v[static_cast<std::size_t>(j)];
  return out;
}

Rational ExactMatrix::determinant() const { return BareissEchelon(*this).determinant(); }

int ExactMatrix::rank() const { return BareissEchelon(*this).rank(); }

ExactMatrix ExactMatrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse of a non-square matrix");
  BareissEchelon ech(*this);
  if (ech.rank() != rows_) throw std::domain_error("matrix is singular");
  ExactMatrix inv(rows_, rows_);
  std::vector<Rational> e(static_cast<std::size_t>(rows_), Rational(0));
  for (int j = 0; j < rows_; ++j) {
    e[static_cast<std::size_t>(j)] = 1;
    auto col = ech.solve(e);
    for (int i = 0; i < rows_; ++i) inv.at(i, j) = (*col)[static_cast<std::size_t>(i)];
    e[static_cast<std::size_t>(j)] = 0;
  }
  return inv;
}

std::vector<std::vector<Rational>> ExactMatrix::nullspace() const {
  return BareissEchelon(*this).nullspace();
}

// ---------------------------------------------------------------------------

BareissEchelon::BareissEchelon(const ExactMatrix& a)
    : rows_(a.rows()), cols_(a.cols()) {
  using boost::multiprecision::gcd;
  using boost::multiprecision::lcm;

  r_.assign(static_cast<std::size_t>(rows_), {});
  u_.assign(static_cast<std::size_t>(rows_), {});
  row_scale_.assign(static_cast<std::size_t>(rows_), Rational(1));
  for (int i = 0; i < rows_; ++i) {
    Int l = 1;
    for (int j = 0; j < cols_; ++j) l = lcm(l, denominator(a.at(i, j)));
    row_scale_[static_cast<std::size_t>(i)] = Rational(l);
    auto& row = r_[static_cast<std::size_t>(i)];
    row.resize(static_cast<std::size_t>(cols_));
    for (int j = 0; j < cols_; ++j) {
      const Rational& q = a.at(i, j);
      row[static_cast<std::size_t>(j)] = numerator(q) * (l / denominator(q));
    }
    auto& urow = u_[static_cast<std::size_t>(i)];
    urow.assign(static_cast<std::size_t>(rows_), 0);
    urow[static_cast<std::size_t>(i)] = 1;
  }

  Int prev = 1;
  int rank = 0;
  for (int c = 0; c < cols_ && rank < rows_; ++c) {
    int pivot = -1;
    for (int i = rank; i < rows_; ++i)
      if (r_[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank) {
      // row_scale_ stays in original row order: it pairs with the columns of
      // u_, which always index the original (unpermuted) rows.
      std::swap(r_[static_cast<std::size_t>(pivot)], r_[static_cast<std::size_t>(rank)]);
      std::swap(u_[static_cast<std::size_t>(pivot)], u_[static_cast<std::size_t>(rank)]);
      swap_sign_ = -swap_sign_;
    }
    const Int piv = r_[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c)];
    for (int i = rank + 1; i < rows_; ++i) {
      auto& ri = r_[static_cast<std::size_t>(i)];
      const auto& rr = r_[static_cast<std::size_t>(rank)];
      const Int mult = ri[static_cast<std::size_t>(c)];
      for (int j = c + 1; j < cols_; ++j)
        ri[static_cast<std::size_t>(j)] =
            (ri[static_cast<std::size_t>(j)] * piv - mult * rr[static_cast<std::size_t>(j)]) /
            prev;
      ri[static_cast<std::size_t>(c)] = 0;
      auto& ui = u_[static_cast<std::size_t>(i)];
      const auto& ur = u_[static_cast<std::size_t>(rank)];
      for (int j = 0; j < rows_; ++j)
        ui[static_cast<std::size_t>(j)] =
            (ui[static_cast<std::size_t>(j)] * piv - mult * ur[static_cast<std::size_t>(j)]) /
            prev;
    }
    prev = piv;
    pivot_cols_.push_back(c);
    ++rank;
  }
  // Invariant: r_ = u_ * diag(row_scale_) * A with A in original row order.
}

Rational BareissEchelon::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of a non-square matrix");
  if (rows_ == 0) return 1;
  if (rank() != rows_) return 0;
  const Int& last =
      r_[static_cast<std::size_t>(rows_ - 1)][static_cast<std::size_t>(cols_ - 1)];
  Rational det(last);
  for (const auto& s : row_scale_) det /= s;
  return swap_sign_ > 0 ? det : -det;
}

std::optional<std::vector<Rational>> BareissEchelon::solve(
    const std::vector<Rational>& b) const {
  if (static_cast<int>(b.size()) != rows_)
    throw std::invalid_argument("right-hand side length mismatch");
  // r_ x = u_ * diag(row_scale_) * b must hold for solutions of A x = b.
  std::vector<Rational> y(static_cast<std::size_t>(rows_), Rational(0));
  for (int i = 0; i < rows_; ++i) {
    Rational acc(0);
    for (int j = 0; j < rows_; ++j) {
      const Int& uij = u_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (uij == 0) continue;
      acc += Rational(uij) * row_scale_[static_cast<std::size_t>(j)] *
             b[static_cast<std::size_t>(j)];
    }
    y[static_cast<std::size_t>(i)] = std::move(acc);
  }
  int rk = rank();
  for (int i = rk; i < rows_; ++i)
    if (y[static_cast<std::size_t>(i)] != 0) return std::nullopt;
  std::vector<Rational> x(static_cast<std::size_t>(cols_), Rational(0));
  for (int t = rk - 1; t >= 0; --t) {
    int pc = pivot_cols_[static_cast<std::size_t>(t)];
    Rational acc = y[static_cast<std::size_t>(t)];
    const auto& row = r_[static_cast<std::size_t>(t)];
    for (int j = pc + 1; j < cols_; ++j) {
      const Int& rij = row[static_cast<std::size_t>(j)];
      if (rij != 0) acc -= Rational(rij) * x[static_cast<std::size_t>(j)];
    }
    x[static_cast<std::size_t>(pc)] = acc / Rational(row[static_cast<std::size_t>(pc)]);
  }
  return x;
}

std::vector<std::vector<Rational>> BareissEchelon::nullspace() const {
  std::vector<std::vector<Rational>> basis;
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols_), false);
  for (int c : pivot_cols_) is_pivot[static_cast<std::size_t>(c)] = true;
  for (int f = 0; f < cols_; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    std::vector<Rational> x(static_cast<std::size_t>(cols_), Rational(0));
    x[static_cast<std::size_t>(f)] = 1;
    for (int t = rank() - 1; t >= 0; --t) {
      int pc = pivot_cols_[static_cast<std::size_t>(t)];
      if (pc > f) continue;
      Rational acc(0);
      const auto& row = r_[static_cast<std::size_t>(t)];
      for (int j = pc + 1; j <= f; ++j) {
        const Int& rij = row[static_cast<std::size_t>(j)];
        if (rij != 0 && x[static_cast<std::size_t>(j)] != 0)
          acc -= Rational(rij) * x[static_cast<std::size_t>(j)];
      }
      x[static_cast<std::size_t>(pc)] = acc / Rational(row[static_cast<std::size_t>(pc)]);
    }
    // Primitive integer normalization with positive leading entry.
    using boost::multiprecision::gcd;
    using boost::multiprecision::lcm;
    Int l = 1;
    for (const auto& q : x) l = lcm(l, denominator(q));
    Int g = 0;
    for (auto& q : x) {
      q *= Rational(l);
      g = gcd(g, boost::multiprecision::abs(numerator(q)));
    }
    if (g > 1)
      for (auto& q : x) q /= Rational(g);
    for (const auto& q : x) {
      if (q == 0) continue;
      if (q < 0)
        for (auto& w : x) w = -w;
      break;
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace superpoint
