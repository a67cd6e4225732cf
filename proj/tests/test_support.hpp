#pragma once

#include "superpoint/derivation.hpp"
#include "superpoint/element.hpp"
#include "superpoint/rng.hpp"

namespace superpoint::testing {

inline SuperElement random_element(int n, int max_x_degree, int max_terms, Rng& rng) {
  SuperElement out = SuperElement::zero(n);
  int terms = rng.uniform(1, max_terms);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> exps(static_cast<std::size_t>(n), 0);
    int deg = rng.uniform(0, max_x_degree);
    for (int s = 0; s < deg; ++s)
      exps[static_cast<std::size_t>(rng.uniform(0, n - 1))]++;
    Monomial m;
    m.even = std::move(exps);
    m.odd = static_cast<std::uint32_t>(rng.next() % (1u << n));
    int c = rng.uniform(-5, 5);
    if (c == 0) c = 3;
    out += SuperElement::monomial(std::move(m), Rational(c, rng.uniform(1, 3)));
  }
  return out;
}

inline SuperElement random_homogeneous(int n, int x_deg, int xi_deg, Rng& rng) {
  SuperElement out = SuperElement::zero(n);
  for (int t = 0; t < 3; ++t) {
    std::vector<int> exps(static_cast<std::size_t>(n), 0);
    for (int s = 0; s < x_deg; ++s)
      exps[static_cast<std::size_t>(rng.uniform(0, n - 1))]++;
    std::uint32_t mask = 0;
    int tries = 0;
    while (std::popcount(mask) < xi_deg && tries++ < 64)
      mask |= 1u << rng.uniform(0, n - 1);
    if (std::popcount(mask) != xi_deg) continue;
    Monomial m;
    m.even = std::move(exps);
    m.odd = mask;
    out += SuperElement::monomial(std::move(m), Rational(rng.uniform(1, 4)));
  }
  return out;
}

inline WField random_w_field(int n, Rng& rng) {
  std::vector<SuperElement> images;
  for (int i = 0; i < n; ++i) {
    SuperElement img = SuperElement::zero(n);
    int terms = rng.uniform(0, 2);
    for (int t = 0; t < terms; ++t) {
      Monomial m = Monomial::one(n);
      m.odd = static_cast<std::uint32_t>(rng.next() % (1u << n));
      img += SuperElement::monomial(std::move(m), Rational(rng.uniform(-3, 3)));
    }
    images.push_back(std::move(img));
  }
  return WField(n, std::move(images));
}

}  // namespace superpoint::testing
