#include "superpoint/monomial.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>

namespace superpoint {

Monomial Monomial::one(int n) {
  Monomial m;
  m.even.assign(static_cast<std::size_t>(n), 0);
  return m;
}

Monomial Monomial::x(int n, int i, int power) {
  if (i < 1 || i > n) throw std::invalid_argument("x index out of range");
  if (power < 0) throw std::invalid_argument("negative exponent");
  Monomial m = one(n);
  m.even[static_cast<std::size_t>(i - 1)] = power;
  return m;
}

Monomial Monomial::xi(int n, int i) {
  if (i < 1 || i > n) throw std::invalid_argument("xi index out of range");
  Monomial m = one(n);
  m.odd = 1u << (i - 1);
  return m;
}

int Monomial::x_degree() const {
  return std::accumulate(even.begin(), even.end(), 0);
}

int Monomial::xi_degree() const { return std::popcount(odd); }

std::vector<int> Monomial::odd_indices() const {
  std::vector<int> out;
  for (int i = 1; i <= n(); ++i)
    if (odd & (1u << (i - 1))) out.push_back(i);
  return out;
}

std::strong_ordering Monomial::operator<=>(const Monomial& rhs) const {
  if (auto c = total_degree() <=> rhs.total_degree(); c != 0) return c;
  if (auto c = even <=> rhs.even; c != 0) return c;
  // Equal total degree and equal even part force equal xi-degree, so the
  // index lists have the same length; lex order then reduces to the lowest
  // differing index.
  std::uint32_t diff = odd ^ rhs.odd;
  if (diff == 0) return std::strong_ordering::equal;
  std::uint32_t low = diff & (~diff + 1);
  return (odd & low) ? std::strong_ordering::less : std::strong_ordering::greater;
}

int merge_sign(std::uint32_t a, std::uint32_t b) {
  if (a & b) return 0;
  int inversions = 0;
  while (b) {
    std::uint32_t t = b & (~b + 1);
    inversions += std::popcount(a & ~(t | (t - 1)));
    b ^= t;
  }
  return (inversions & 1) ? -1 : 1;
}

int extraction_sign(std::uint32_t mask, int i) {
  std::uint32_t bit = 1u << (i - 1);
  if (!(mask & bit)) throw std::invalid_argument("index not present in odd mask");
  return (std::popcount(mask & (bit - 1)) & 1) ? -1 : 1;
}

}  // namespace superpoint
