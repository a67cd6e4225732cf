#include "superpoint/element.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace superpoint {

namespace {

void check_same_n(const SuperElement& a, const SuperElement& b) {
  if (a.n() != b.n())
    throw std::invalid_argument("ambient dimension mismatch: " +
                                std::to_string(a.n()) + " vs " + std::to_string(b.n()));
}

}  // namespace

SuperElement::SuperElement(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("negative ambient dimension");
}

SuperElement SuperElement::constant(int n, const Rational& c) {
  SuperElement e(n);
  e.insert(Monomial::one(n), c);
  return e;
}

SuperElement SuperElement::variable_x(int n, int i) {
  return monomial(Monomial::x(n, i));
}

SuperElement SuperElement::variable_xi(int n, int i) {
  return monomial(Monomial::xi(n, i));
}

SuperElement SuperElement::monomial(Monomial m, Rational c) {
  SuperElement e(m.n());
  e.insert(std::move(m), std::move(c));
  return e;
}

SuperElement SuperElement::term(int n, const Rational& c, std::vector<int> even,
                                const std::vector<int>& odd) {
  if (static_cast<int>(even.size()) != n)
    throw std::invalid_argument("even exponent vector has wrong length");
  for (int a : even)
    if (a < 0) throw std::invalid_argument("negative exponent");
  Monomial m;
  m.even = std::move(even);
  Rational coeff = c;
  for (int i : odd) {
    if (i < 1 || i > n) throw std::invalid_argument("xi index out of range");
    std::uint32_t bit = 1u << (i - 1);
    int sign = merge_sign(m.odd, bit);
    if (sign == 0) return zero(n);
    if (sign < 0) coeff = -coeff;
    m.odd |= bit;
  }
  SuperElement e(n);
  e.insert(std::move(m), std::move(coeff));
  return e;
}

Rational SuperElement::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SuperElement::insert(Monomial m, Rational c) {
  if (c == 0) return;
  if (m.n() != n_) throw std::invalid_argument("monomial has wrong ambient dimension");
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(std::move(m), std::move(c));
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SuperElement& SuperElement::operator+=(const SuperElement& rhs) {
  check_same_n(*this, rhs);
  for (const auto& [m, c] : rhs.terms_) insert(m, c);
  return *this;
}

SuperElement& SuperElement::operator-=(const SuperElement& rhs) {
  check_same_n(*this, rhs);
  for (const auto& [m, c] : rhs.terms_) insert(m, -c);
  return *this;
}

SuperElement operator+(SuperElement lhs, const SuperElement& rhs) {
  lhs += rhs;
  return lhs;
}

SuperElement operator-(SuperElement lhs, const SuperElement& rhs) {
  lhs -= rhs;
  return lhs;
}

SuperElement SuperElement::operator-() const {
  SuperElement out(n_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

SuperElement operator*(const SuperElement& lhs, const SuperElement& rhs) {
  check_same_n(lhs, rhs);
  SuperElement out(lhs.n_);
  for (const auto& [ma, ca] : lhs.terms_) {
    for (const auto& [mb, cb] : rhs.terms_) {
      int sign = merge_sign(ma.odd, mb.odd);
      if (sign == 0) continue;
      Monomial m;
      m.even.resize(ma.even.size());
      for (std::size_t i = 0; i < m.even.size(); ++i)
        m.even[i] = ma.even[i] + mb.even[i];
      m.odd = ma.odd | mb.odd;
      Rational prod = ca * cb;
      if (sign < 0) prod = -prod;
      out.insert(std::move(m), std::move(prod));
    }
  }
  return out;
}

SuperElement operator*(const Rational& c, SuperElement rhs) {
  if (c == 0) return SuperElement::zero(rhs.n_);
  for (auto& [m, coeff] : rhs.terms_) coeff *= c;
  return rhs;
}

std::optional<int> SuperElement::parity() const {
  std::optional<int> p;
  for (const auto& [m, c] : terms_) {
    int mp = m.parity();
    if (p && *p != mp) return std::nullopt;
    p = mp;
  }
  return p ? p : std::optional<int>(0);
}

std::optional<Bidegree> SuperElement::bidegree() const {
  std::optional<Bidegree> d;
  for (const auto& [m, c] : terms_) {
    Bidegree md{m.x_degree(), m.xi_degree()};
    if (d && !(*d == md)) return std::nullopt;
    d = md;
  }
  return d ? d : std::optional<Bidegree>(Bidegree{0, 0});
}

SuperElement SuperElement::homogeneous_component(Bidegree d) const {
  SuperElement out(n_);
  for (const auto& [m, c] : terms_)
    if (m.x_degree() == d.x_degree && m.xi_degree() == d.xi_degree)
      out.terms_.emplace(m, c);
  return out;
}

SuperElement SuperElement::xi_degree_component(int q) const {
  SuperElement out(n_);
  for (const auto& [m, c] : terms_)
    if (m.xi_degree() == q) out.terms_.emplace(m, c);
  return out;
}

SuperElement SuperElement::parity_component(int p) const {
  SuperElement out(n_);
  for (const auto& [m, c] : terms_)
    if (m.parity() == p) out.terms_.emplace(m, c);
  return out;
}

int SuperElement::max_xi_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.xi_degree());
  return d;
}

int SuperElement::max_x_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.x_degree());
  return d;
}

bool SuperElement::is_x_free() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.first.x_degree() == 0; });
}

bool SuperElement::is_xi_free() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.first.odd == 0; });
}

SuperElement SuperElement::evaluate_even(std::span<const Rational> p) const {
  if (static_cast<int>(p.size()) != n_)
    throw std::invalid_argument("evaluation point has wrong length");
  SuperElement out(n_);
  for (const auto& [m, c] : terms_) {
    Rational v = c;
    for (int i = 0; i < n_; ++i)
      for (int e = 0; e < m.even[static_cast<std::size_t>(i)]; ++e)
        v *= p[static_cast<std::size_t>(i)];
    Monomial xi_part = Monomial::one(n_);
    xi_part.odd = m.odd;
    out.insert(std::move(xi_part), std::move(v));
  }
  return out;
}

SuperElement SuperElement::partial_xi(int i) const {
  if (i < 1 || i > n_) throw std::invalid_argument("xi index out of range");
  std::uint32_t bit = 1u << (i - 1);
  SuperElement out(n_);
  for (const auto& [m, c] : terms_) {
    if (!(m.odd & bit)) continue;
    Monomial d = m;
    d.odd &= ~bit;
    out.insert(std::move(d), extraction_sign(m.odd, i) > 0 ? c : -c);
  }
  return out;
}

SuperElement SuperElement::substitute(std::span<const SuperElement> x_images,
                                      std::span<const SuperElement> xi_images) const {
  if (static_cast<int>(x_images.size()) != n_ ||
      static_cast<int>(xi_images.size()) != n_)
    throw std::invalid_argument("substitution needs one image per generator");
  for (const auto& img : x_images)
    if (img.parity() != std::optional<int>(0))
      throw std::invalid_argument("image of an even generator must be even");
  for (const auto& img : xi_images)
    if (!img.is_zero() && img.parity() != std::optional<int>(1))
      throw std::invalid_argument("image of an odd generator must be odd");

  SuperElement out(n_);
  for (const auto& [m, c] : terms_) {
    SuperElement prod = constant(n_, c);
    for (int i = 0; i < n_; ++i)
      for (int e = 0; e < m.even[static_cast<std::size_t>(i)]; ++e)
        prod = prod * x_images[static_cast<std::size_t>(i)];
    for (int i : m.odd_indices()) prod = prod * xi_images[static_cast<std::size_t>(i - 1)];
    out += prod;
  }
  return out;
}

std::string SuperElement::to_text() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    std::vector<std::string> factors;
    for (int i = 1; i <= n_; ++i) {
      int e = m.even[static_cast<std::size_t>(i - 1)];
      if (e == 0) continue;
      std::string f = "x" + std::to_string(i);
      if (e > 1) f += "^" + std::to_string(e);
      factors.push_back(std::move(f));
    }
    if (m.odd) {
      std::string f;
      for (int i : m.odd_indices()) f += "xi" + std::to_string(i);
      factors.push_back(std::move(f));
    }
    if (factors.empty()) {
      os << rational_text(c);
      continue;
    }
    if (c == -1)
      os << "-";
    else if (c != 1)
      os << rational_text(c) << "·";
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) os << "·";
      os << factors[i];
    }
  }
  return os.str();
}

}  // namespace superpoint
