#include "superpoint/derivation.hpp"

#include <sstream>
#include <stdexcept>

namespace superpoint {

namespace {

// Degree contribution rules: xi-images shift the xi-degree, x-images shift
// the total degree.
void scan_degrees(const std::vector<SuperElement>& images, int base_degree,
                  bool total, std::optional<int>& degree, bool& mixed) {
  for (const auto& img : images) {
    for (const auto& [m, c] : img.terms()) {
      int k = (total ? m.total_degree() : m.xi_degree()) - base_degree;
      if (degree && *degree != k) mixed = true;
      degree = k;
    }
  }
}

std::optional<int> scan_parity(const std::vector<SuperElement>& images_xi,
                               const std::vector<SuperElement>& images_x) {
  std::optional<int> p;
  bool mixed = false;
  for (const auto& img : images_xi)
    for (const auto& [m, c] : img.terms()) {
      int mp = (m.parity() + 1) & 1;
      if (p && *p != mp) mixed = true;
      p = mp;
    }
  for (const auto& img : images_x)
    for (const auto& [m, c] : img.terms()) {
      int mp = m.parity();
      if (p && *p != mp) mixed = true;
      p = mp;
    }
  if (mixed) return std::nullopt;
  return p ? p : std::optional<int>(0);
}

void check_images(int n, const std::vector<SuperElement>& images, const char* what) {
  if (static_cast<int>(images.size()) != n)
    throw std::invalid_argument(std::string(what) + ": expected one image per generator");
  for (const auto& img : images)
    if (img.n() != n)
      throw std::invalid_argument(std::string(what) + ": ambient dimension mismatch");
}

}  // namespace

SuperDerivation::SuperDerivation(int n, std::vector<SuperElement> images_xi,
                                 std::vector<SuperElement> images_x)
    : n_(n), images_xi_(std::move(images_xi)), images_x_(std::move(images_x)) {
  check_images(n, images_xi_, "derivation xi-images");
  check_images(n, images_x_, "derivation x-images");
  parity_ = scan_parity(images_xi_, images_x_);
  std::optional<int> deg;
  bool mixed = false;
  scan_degrees(images_xi_, 1, false, deg, mixed);
  scan_degrees(images_x_, 1, true, deg, mixed);
  if (!mixed) z_degree_ = deg ? deg : std::optional<int>(0);
}

SuperDerivation SuperDerivation::zero(int n) {
  std::vector<SuperElement> none(static_cast<std::size_t>(n), SuperElement::zero(n));
  return SuperDerivation(n, none, none);
}

const SuperElement& SuperDerivation::image_xi(int i) const {
  if (i < 1 || i > n_) throw std::invalid_argument("generator index out of range");
  return images_xi_[static_cast<std::size_t>(i - 1)];
}

const SuperElement& SuperDerivation::image_x(int i) const {
  if (i < 1 || i > n_) throw std::invalid_argument("generator index out of range");
  return images_x_[static_cast<std::size_t>(i - 1)];
}

bool SuperDerivation::is_zero() const {
  for (const auto& e : images_xi_)
    if (!e.is_zero()) return false;
  for (const auto& e : images_x_)
    if (!e.is_zero()) return false;
  return true;
}

SuperDerivation& SuperDerivation::operator+=(const SuperDerivation& rhs) {
  if (n_ != rhs.n_) throw std::invalid_argument("ambient dimension mismatch");
  std::vector<SuperElement> xi = images_xi_, x = images_x_;
  for (int i = 0; i < n_; ++i) {
    xi[static_cast<std::size_t>(i)] += rhs.images_xi_[static_cast<std::size_t>(i)];
    x[static_cast<std::size_t>(i)] += rhs.images_x_[static_cast<std::size_t>(i)];
  }
  *this = SuperDerivation(n_, std::move(xi), std::move(x));
  return *this;
}

SuperDerivation operator+(SuperDerivation lhs, const SuperDerivation& rhs) {
  lhs += rhs;
  return lhs;
}

SuperDerivation operator-(SuperDerivation lhs, const SuperDerivation& rhs) {
  lhs += -rhs;
  return lhs;
}

SuperDerivation operator*(const Rational& c, SuperDerivation rhs) {
  std::vector<SuperElement> xi, x;
  for (const auto& e : rhs.images_xi_) xi.push_back(c * e);
  for (const auto& e : rhs.images_x_) x.push_back(c * e);
  return SuperDerivation(rhs.n_, std::move(xi), std::move(x));
}

SuperDerivation SuperDerivation::operator-() const { return Rational(-1) * *this; }

SuperElement apply(const SuperDerivation& d, const SuperElement& a) {
  if (d.n() != a.n()) throw std::invalid_argument("ambient dimension mismatch");
  auto parity = d.parity();
  if (!parity) throw std::invalid_argument("cannot apply a mixed-parity derivation");
  int n = a.n();
  SuperElement out(n);
  for (const auto& [m, c] : a.terms()) {
    // delta(x^a) . xi_S
    for (int i = 1; i <= n; ++i) {
      int e = m.even[static_cast<std::size_t>(i - 1)];
      if (e == 0) continue;
      const SuperElement& dx = d.image_x(i);
      if (dx.is_zero()) continue;
      Monomial rest = m;
      rest.even[static_cast<std::size_t>(i - 1)] = e - 1;
      rest.odd = 0;
      Monomial xi_part = Monomial::one(n);
      xi_part.odd = m.odd;
      out += SuperElement::monomial(std::move(rest), c * e) * dx *
             SuperElement::monomial(std::move(xi_part));
    }
    // x^a . Leibniz over the odd factors
    auto odd = m.odd_indices();
    for (std::size_t j = 0; j < odd.size(); ++j) {
      const SuperElement& dxi = d.image_xi(odd[j]);
      if (dxi.is_zero()) continue;
      int sign = (*parity && (j & 1)) ? -1 : 1;
      Monomial prefix = m;  // x^a and the odd factors before position j
      prefix.odd = 0;
      Monomial suffix = Monomial::one(n);
      for (std::size_t l = 0; l < odd.size(); ++l) {
        if (l < j)
          prefix.odd |= 1u << (odd[l] - 1);
        else if (l > j)
          suffix.odd |= 1u << (odd[l] - 1);
      }
      out += SuperElement::monomial(std::move(prefix), sign > 0 ? c : -c) * dxi *
             SuperElement::monomial(std::move(suffix));
    }
  }
  return out;
}

SuperDerivation koszul_d(int n) {
  std::vector<SuperElement> xi, x;
  for (int i = 1; i <= n; ++i) {
    xi.push_back(SuperElement::variable_x(n, i));
    x.push_back(SuperElement::zero(n));
  }
  return SuperDerivation(n, std::move(xi), std::move(x));
}

SuperDerivation bracket(const SuperDerivation& d1, const SuperDerivation& d2) {
  if (d1.n() != d2.n()) throw std::invalid_argument("ambient dimension mismatch");
  auto p1 = d1.parity(), p2 = d2.parity();
  if (!p1 || !p2)
    throw std::invalid_argument("bracket requires definite-parity derivations");
  int sign = (*p1 && *p2) ? -1 : 1;
  int n = d1.n();
  std::vector<SuperElement> xi, x;
  for (int i = 1; i <= n; ++i) {
    SuperElement a = apply(d1, d2.image_xi(i)) - Rational(sign) * apply(d2, d1.image_xi(i));
    SuperElement b = apply(d1, d2.image_x(i)) - Rational(sign) * apply(d2, d1.image_x(i));
    xi.push_back(std::move(a));
    x.push_back(std::move(b));
  }
  return SuperDerivation(n, std::move(xi), std::move(x));
}

namespace {

void images_text(int n, const std::vector<SuperElement>& images, const char* gen,
                 bool& any, std::ostringstream& os) {
  for (int i = 1; i <= n; ++i) {
    const SuperElement& img = images[static_cast<std::size_t>(i - 1)];
    if (img.is_zero()) continue;
    if (any) os << " + ";
    any = true;
    if (img == SuperElement::one(img.n())) {
      os << gen << i;
    } else if (img.term_count() == 1 && img.terms().begin()->second == 1 &&
               !(img.terms().begin()->first == Monomial::one(img.n()))) {
      os << img.to_text() << "·" << gen << i;
    } else {
      os << "(" << img.to_text() << ")·" << gen << i;
    }
  }
}

}  // namespace

std::string SuperDerivation::to_text() const {
  std::ostringstream os;
  bool any = false;
  images_text(n_, images_xi_, "dxi", any, os);
  images_text(n_, images_x_, "dx", any, os);
  if (!any) return "0";
  return os.str();
}

// ---------------------------------------------------------------------------
// WField

WField::WField(int n, std::vector<SuperElement> images)
    : n_(n), images_(std::move(images)) {
  check_images(n, images_, "W-field images");
  for (const auto& img : images_)
    if (!img.is_x_free())
      throw std::invalid_argument("W-field images must lie in Lambda[xi]");
  std::optional<int> deg;
  bool mixed = false;
  scan_degrees(images_, 1, false, deg, mixed);
  if (!mixed) z_degree_ = deg ? deg : std::optional<int>(0);
}

WField WField::zero(int n) {
  return WField(n, std::vector<SuperElement>(static_cast<std::size_t>(n),
                                             SuperElement::zero(n)));
}

WField WField::basis_field(int n, std::uint32_t t_mask, int i) {
  if (i < 1 || i > n) throw std::invalid_argument("generator index out of range");
  Monomial m = Monomial::one(n);
  m.odd = t_mask;
  auto images = std::vector<SuperElement>(static_cast<std::size_t>(n),
                                          SuperElement::zero(n));
  images[static_cast<std::size_t>(i - 1)] = SuperElement::monomial(std::move(m));
  return WField(n, std::move(images));
}

const SuperElement& WField::image(int i) const {
  if (i < 1 || i > n_) throw std::invalid_argument("generator index out of range");
  return images_[static_cast<std::size_t>(i - 1)];
}

bool WField::is_zero() const {
  for (const auto& e : images_)
    if (!e.is_zero()) return false;
  return true;
}

std::optional<int> WField::parity() const {
  return scan_parity(images_, {});
}

WField WField::homogeneous_component(int k) const {
  std::vector<SuperElement> images;
  for (const auto& img : images_) images.push_back(img.xi_degree_component(k + 1));
  return WField(n_, std::move(images));
}

SuperDerivation WField::as_derivation() const {
  std::vector<SuperElement> x(static_cast<std::size_t>(n_), SuperElement::zero(n_));
  return SuperDerivation(n_, images_, std::move(x));
}

WField& WField::operator+=(const WField& rhs) {
  if (n_ != rhs.n_) throw std::invalid_argument("ambient dimension mismatch");
  std::vector<SuperElement> images = images_;
  for (int i = 0; i < n_; ++i)
    images[static_cast<std::size_t>(i)] += rhs.images_[static_cast<std::size_t>(i)];
  *this = WField(n_, std::move(images));
  return *this;
}

WField operator+(WField lhs, const WField& rhs) {
  lhs += rhs;
  return lhs;
}

WField operator-(WField lhs, const WField& rhs) {
  lhs += Rational(-1) * rhs;
  return lhs;
}

WField operator*(const Rational& c, WField rhs) {
  std::vector<SuperElement> images;
  for (const auto& e : rhs.images_) images.push_back(c * e);
  return WField(rhs.n_, std::move(images));
}

WField WField::operator-() const { return Rational(-1) * *this; }

std::string WField::to_text() const { return as_derivation().to_text(); }

WField euler(int n) {
  std::vector<SuperElement> images;
  for (int i = 1; i <= n; ++i) images.push_back(SuperElement::variable_xi(n, i));
  return WField(n, std::move(images));
}

SuperDerivation extend(const WField& delta) {
  auto k = delta.z_degree();
  if (!k) throw std::invalid_argument("extend requires a homogeneous W-field");
  int n = delta.n();
  SuperDerivation d = koszul_d(n);
  int sign = (((*k % 2) + 2) % 2 == 0) ? 1 : -1;
  std::vector<SuperElement> x;
  for (int i = 1; i <= n; ++i) x.push_back(Rational(sign) * apply(d, delta.image(i)));
  return SuperDerivation(n, delta.images(), std::move(x));
}

WField bracket(const WField& a, const WField& b) {
  return as_w_field(bracket(a.as_derivation(), b.as_derivation()));
}

WField as_w_field(const SuperDerivation& d) {
  for (const auto& img : d.images_x())
    if (!img.is_zero())
      throw std::invalid_argument("derivation does not lie in W(V): nonzero x-image");
  for (const auto& img : d.images_xi())
    if (!img.is_x_free())
      throw std::invalid_argument("derivation does not lie in W(V): x-dependent xi-image");
  return WField(d.n(), d.images_xi());
}

}  // namespace superpoint
