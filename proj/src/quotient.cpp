#include "superpoint/quotient.hpp"

#include <sstream>
#include <stdexcept>

namespace superpoint {

QuotientRing::QuotientRing(QuadraticForm omega) : omega_(std::move(omega)) {
  if (!omega_.is_diagonal())
    throw std::invalid_argument(
        "quotient reduction needs a diagonal omega; diagonalize via a change of basis first");
}

bool QuotientRing::is_normal(const SuperElement& a) const {
  int n = this->n();
  for (const auto& [m, c] : a.terms())
    if (m.even[static_cast<std::size_t>(n - 1)] >= 2) return false;
  return true;
}

SuperElement QuotientRing::reduce(const SuperElement& a) const { return divide(a).remainder; }

QuotientRing::Division QuotientRing::divide(const SuperElement& a) const {
  int n = this->n();
  const Rational cn = omega_.diagonal_entry(n);
  SuperElement remainder = a;
  SuperElement quotient = SuperElement::zero(n);
  for (;;) {
    // Largest term divisible by x_n^2.
    const Monomial* found = nullptr;
    Rational coeff;
    for (auto it = remainder.terms().rbegin(); it != remainder.terms().rend(); ++it)
      if (it->first.even[static_cast<std::size_t>(n - 1)] >= 2) {
        found = &it->first;
        coeff = it->second;
        break;
      }
    if (!found) break;
    Monomial m = *found;
    m.even[static_cast<std::size_t>(n - 1)] -= 2;
    SuperElement mono = SuperElement::monomial(std::move(m), coeff / cn);
    quotient += mono;
    remainder -= mono * omega_.as_element();
  }
  if (!(quotient * omega_.as_element() + remainder == a))
    throw std::runtime_error("quotient division identity failed");
  return Division{std::move(quotient), std::move(remainder)};
}

QuotientElement::QuotientElement(const QuotientRing& ring, const SuperElement& value)
    : representative_(ring.reduce(value)) {}

QuotientElement d_prime(const QuotientRing& ring, const QuotientElement& u) {
  return QuotientElement(ring, apply(koszul_d(ring.n()), u.representative()));
}

InducedDerivation::InducedDerivation(const WField& delta, const QuotientRing& ring)
    : extension_(extend(delta)), c_(0), parity_(0) {
  SuperElement defect = apply(extension_, ring.omega().as_element());
  SuperElement omega_elt = ring.omega().as_element();
  if (!defect.is_zero()) {
    // c = coefficient ratio on the leading omega monomial, then an exact
    // proportionality check.
    const auto& [m0, c0] = *omega_elt.terms().rbegin();
    c_ = defect.coefficient(m0) / c0;
    if (!(defect == c_ * omega_elt))
      throw std::domain_error("field is not in DH(omega): defect " + defect.to_text() +
                              " is not proportional to omega");
  }
  parity_ = extension_.parity().value();
}

QuotientElement InducedDerivation::operator()(const QuotientRing& ring,
                                              const QuotientElement& u) const {
  return QuotientElement(ring, apply(extension_, u.representative()));
}

namespace {

SuperElement random_element(int n, int max_x_degree, Rng& rng) {
  SuperElement out = SuperElement::zero(n);
  int terms = rng.uniform(1, 5);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> exps(static_cast<std::size_t>(n), 0);
    int deg = rng.uniform(0, max_x_degree);
    for (int s = 0; s < deg; ++s) exps[static_cast<std::size_t>(rng.uniform(0, n - 1))]++;
    Monomial m;
    m.even = std::move(exps);
    m.odd = static_cast<std::uint32_t>(rng.next() % (1u << n));
    int c = rng.uniform(-4, 4);
    if (c == 0) c = 2;
    out += SuperElement::monomial(std::move(m), Rational(c));
  }
  return out;
}

}  // namespace

Report verify_dh_action(int n, std::uint64_t seed) {
  if (n < 2 || n > 6) throw std::invalid_argument("verify dhaction supports 2 <= n <= 6");
  Report rep;
  rep.title = "DH_n action on the split supermanifold over the quadric";
  rep.n = n;
  rep.seed = seed;
  QuadraticForm omega = QuadraticForm::standard(n);
  rep.omega = omega.to_text();
  QuotientRing ring(omega);
  Rng rng(seed);

  std::vector<WField> basis;
  for (int k = -1; k <= n - 1; ++k) {
    auto layer = dh_layer(n, omega, k);
    rep.layers.push_back(
        LayerRow{k, w_basis(n, k).dim(), std::nullopt, layer.space.dim()});
    basis.insert(basis.end(), layer.space.fields.begin(), layer.space.fields.end());
  }

  // Generators of A' as classes.
  std::vector<QuotientElement> generators;
  for (int i = 1; i <= n; ++i)
    generators.emplace_back(ring, SuperElement::variable_x(n, i));
  for (int i = 1; i <= n; ++i)
    generators.emplace_back(ring, SuperElement::variable_xi(n, i));

  // d'^2 = 0 on generators and on random elements.
  {
    bool ok = true;
    for (const auto& g : generators)
      if (!d_prime(ring, d_prime(ring, g)).is_zero()) ok = false;
    for (int t = 0; t < 10; ++t) {
      QuotientElement u(ring, random_element(n, 3, rng));
      if (!d_prime(ring, d_prime(ring, u)).is_zero()) ok = false;
    }
    rep.check("d'^2 = 0 on A'", ok);
  }

  // Membership and induced derivations for the DH basis.
  std::vector<InducedDerivation> induced;
  {
    bool ok = true;
    std::string witness;
    for (const auto& f : basis) {
      try {
        induced.emplace_back(f, ring);
      } catch (const std::domain_error& e) {
        ok = false;
        witness = e.what();
      }
    }
    rep.check("every DH basis field induces a derivation of A'", ok, witness);
  }
  if (!rep.passed()) return rep;

  // Representative independence: class(a + omega r) maps like class(a).
  {
    bool ok = true;
    std::string witness;
    SuperElement omega_elt = omega.as_element();
    for (std::size_t t = 0; t < basis.size() && ok; ++t)
      for (int trial = 0; trial < 20; ++trial) {
        SuperElement a = random_element(n, 2, rng);
        SuperElement r = random_element(n, 1, rng);
        QuotientElement lhs =
            induced[t](ring, QuotientElement(ring, a + omega_elt * r));
        QuotientElement rhs = induced[t](ring, QuotientElement(ring, a));
        if (!(lhs == rhs)) {
          ok = false;
          witness = basis[t].to_text();
          break;
        }
      }
    rep.check("induced derivations are representative independent", ok, witness);
  }

  // Commutation with d' through the reductions.
  {
    bool ok = true;
    std::string witness;
    for (std::size_t t = 0; t < basis.size() && ok; ++t) {
      int sign = induced[t].parity() ? -1 : 1;
      for (const auto& g : generators) {
        QuotientElement lhs = d_prime(ring, induced[t](ring, g));
        QuotientElement rhs = induced[t](ring, d_prime(ring, g));
        SuperElement diff =
            lhs.representative() - Rational(sign) * rhs.representative();
        if (!ring.reduce(diff).is_zero()) {
          ok = false;
          witness = basis[t].to_text();
          break;
        }
      }
    }
    rep.check("[induced delta, d'] = 0 on A' generators", ok, witness);
  }

  // Bracket preservation on all basis pairs, evaluated on the generators.
  {
    bool ok = true;
    std::string witness;
    for (std::size_t i = 0; i < basis.size() && ok; ++i)
      for (std::size_t j = i; j < basis.size() && ok; ++j) {
        WField br = bracket(basis[i], basis[j]);
        InducedDerivation ind_br(br, ring);
        int sign = (induced[i].parity() * induced[j].parity()) % 2 ? -1 : 1;
        for (const auto& g : generators) {
          QuotientElement lhs = ind_br(ring, g);
          SuperElement rhs =
              induced[i](ring, induced[j](ring, g)).representative() -
              Rational(sign) * induced[j](ring, induced[i](ring, g)).representative();
          if (!(lhs.representative() == ring.reduce(rhs))) {
            ok = false;
            witness = "pair (" + basis[i].to_text() + ", " + basis[j].to_text() + ")";
            break;
          }
        }
      }
    rep.check("bracket preserved by the induced derivations (all DH pairs)", ok,
              witness);
  }

  // Injectivity: images of the generators determine the field.
  {
    std::vector<std::vector<SuperElement>> images(basis.size());
    for (std::size_t t = 0; t < basis.size(); ++t)
      for (const auto& g : generators)
        images[t].push_back(induced[t](ring, g).representative());
    std::vector<std::vector<Rational>> rows(basis.size());
    for (std::size_t pos = 0; pos < generators.size(); ++pos) {
      std::vector<SuperElement> block;
      for (std::size_t t = 0; t < basis.size(); ++t) block.push_back(images[t][pos]);
      auto [monos, mat] = vectorize(block);
      for (std::size_t t = 0; t < basis.size(); ++t)
        for (int r = 0; r < mat.rows(); ++r)
          rows[t].push_back(mat.at(r, static_cast<int>(t)));
    }
    ExactMatrix m = ExactMatrix::from_rows(rows).transposed();
    bool ok = m.rank() == static_cast<int>(basis.size());
    rep.check("injectivity: induced derivations have full rank " +
                  std::to_string(basis.size()),
              ok);
  }

  return rep;
}

}  // namespace superpoint
