#include "superpoint/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace superpoint {

std::string rational_text(const Rational& r) { return r.str(); }

Rational parse_rational(std::string_view s) {
  auto bad = [&](const char* why) {
    throw std::invalid_argument("invalid rational '" + std::string(s) + "': " + why);
  };
  std::size_t i = 0;
  auto digits = [&]() {
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) bad("expected digits");
  };
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  digits();
  if (i < s.size() && s[i] == '/') {
    ++i;
    digits();
  }
  if (i != s.size()) bad("trailing characters");
  Rational r{std::string(s)};
  return r;
}

}  // namespace superpoint
