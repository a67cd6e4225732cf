#include "superpoint/quadratic_form.hpp"

#include <sstream>
#include <stdexcept>

namespace superpoint {

QuadraticForm::QuadraticForm(ExactMatrix symmetric)
    : n_(symmetric.rows()), m_(std::move(symmetric)) {
  if (m_.rows() != m_.cols())
    throw std::invalid_argument("quadratic form matrix must be square");
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (m_.at(i, j) != m_.at(j, i))
        throw std::invalid_argument("quadratic form matrix must be symmetric");
  if (m_.determinant() == 0)
    throw std::invalid_argument("quadratic form is degenerate");
}

QuadraticForm QuadraticForm::standard(int n) {
  return QuadraticForm(ExactMatrix::identity(n));
}

QuadraticForm QuadraticForm::diagonal(const std::vector<Rational>& entries) {
  int n = static_cast<int>(entries.size());
  ExactMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = entries[static_cast<std::size_t>(i)];
  return QuadraticForm(std::move(m));
}

bool QuadraticForm::is_standard() const { return m_ == ExactMatrix::identity(n_); }

bool QuadraticForm::is_diagonal() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (i != j && m_.at(i, j) != 0) return false;
  return true;
}

Rational QuadraticForm::diagonal_entry(int i) const { return m_.at(i - 1, i - 1); }

SuperElement QuadraticForm::as_element() const {
  SuperElement e = SuperElement::zero(n_);
  for (int i = 1; i <= n_; ++i) {
    if (m_.at(i - 1, i - 1) != 0)
      e += m_.at(i - 1, i - 1) * SuperElement::monomial(Monomial::x(n_, i, 2));
    for (int j = i + 1; j <= n_; ++j) {
      if (m_.at(i - 1, j - 1) == 0) continue;
      Monomial m = Monomial::one(n_);
      m.even[static_cast<std::size_t>(i - 1)] = 1;
      m.even[static_cast<std::size_t>(j - 1)] = 1;
      e += (2 * m_.at(i - 1, j - 1)) * SuperElement::monomial(std::move(m));
    }
  }
  return e;
}

std::string QuadraticForm::to_text() const {
  if (is_standard()) return "standard";
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < n_; ++i) {
    if (i) os << ", ";
    os << "[";
    for (int j = 0; j < n_; ++j) {
      if (j) os << ", ";
      os << rational_text(m_.at(i, j));
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

QuadraticForm transform(const QuadraticForm& omega, const ExactMatrix& g) {
  if (g.rows() != omega.n() || g.cols() != omega.n())
    throw std::invalid_argument("change-of-basis matrix has wrong shape");
  if (g.determinant() == 0) throw std::domain_error("change of basis is singular");
  return QuadraticForm(g.transposed() * omega.matrix() * g);
}

}  // namespace superpoint
