#include <cctype>
#include <string>
#include <string_view>

#include "superpoint/derivation.hpp"
#include "superpoint/element.hpp"

// Recursive-descent parser for the canonical text forms. Accepted aliases:
// '*' for the '·' separator, 'ξ<i>' for 'xi<i>', '∂ξ<i>'/'dξ<i>' for 'dxi<i>',
// '∂x<i>' for 'dx<i>', and the U+2212 minus sign.

namespace superpoint {

namespace {

constexpr std::string_view kDot = "·";     // ·
constexpr std::string_view kXiGlyph = "ξ"; // ξ
constexpr std::string_view kPartial = "∂"; // ∂
constexpr std::string_view kMinus = "−";   // −

[[noreturn]] void fail(std::size_t pos, std::string msg) {
  throw ParseError{pos, std::move(msg)};
}

struct Lexer {
  std::string_view s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos == s.size();
  }
  bool peek_is(char c) {
    skip_ws();
    return pos < s.size() && s[pos] == c;
  }
  bool accept(char c) {
    if (peek_is(c)) {
      ++pos;
      return true;
    }
    return false;
  }
  bool accept_seq(std::string_view t) {
    skip_ws();
    if (s.substr(pos, t.size()) == t) {
      pos += t.size();
      return true;
    }
    return false;
  }
  bool peek_digit() {
    skip_ws();
    return pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]));
  }
  // '+' returns +1, '-'/'−' returns -1.
  int accept_sign() {
    skip_ws();
    if (accept('+')) return +1;
    if (accept('-') || accept_seq(kMinus)) return -1;
    return 0;
  }
  bool accept_separator() { return accept('*') || accept_seq(kDot); }

  long parse_uint(const char* what) {
    skip_ws();
    if (!peek_digit()) fail(pos, std::string("expected ") + what);
    long v = 0;
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + (s[pos] - '0');
      if (v > 1000000) fail(start, "number too large");
      ++pos;
    }
    return v;
  }

  Rational parse_rational_token() {
    Int num(parse_uint("a number"));
    if (accept('/')) {
      std::size_t dpos = pos;
      Int den(parse_uint("a denominator"));
      if (den == 0) fail(dpos, "zero denominator");
      return Rational(num, den);
    }
    return Rational(num);
  }

  int parse_index(int n, const char* what) {
    std::size_t start = pos;
    long i = parse_uint("a generator index");
    if (i < 1 || i > n)
      fail(start, std::string(what) + " index " + std::to_string(i) +
                      " out of range 1.." + std::to_string(n));
    return static_cast<int>(i);
  }
};

// One multiplicative factor of an element term; nullopt when the next token
// does not start a factor.
bool parse_factor(Lexer& lx, int n, SuperElement& acc) {
  lx.skip_ws();
  if (lx.pos >= lx.s.size()) return false;
  if (lx.peek_digit()) {
    Rational c = lx.parse_rational_token();
    acc = c * acc;
    return true;
  }
  if (lx.accept_seq("xi") || lx.accept_seq(kXiGlyph)) {
    int i = lx.parse_index(n, "xi");
    if (lx.peek_is('^')) fail(lx.pos, "odd generators cannot carry exponents");
    acc = acc * SuperElement::variable_xi(n, i);
    return true;
  }
  if (lx.peek_is('x')) {
    ++lx.pos;
    int i = lx.parse_index(n, "x");
    int e = 1;
    if (lx.accept('^')) e = static_cast<int>(lx.parse_uint("an exponent"));
    acc = acc * SuperElement::monomial(Monomial::x(n, i, e));
    return true;
  }
  return false;
}

SuperElement parse_element_impl(Lexer& lx, int n, bool stop_at_paren) {
  SuperElement out = SuperElement::zero(n);
  if (lx.done()) fail(lx.pos, "empty element");
  bool first_term = true;
  for (;;) {
    lx.skip_ws();
    if (lx.pos >= lx.s.size() || (stop_at_paren && lx.peek_is(')'))) {
      if (first_term) fail(lx.pos, "empty element");
      break;
    }
    int sign = 1;
    if (!first_term) {
      int binop = lx.accept_sign();
      if (binop == 0) fail(lx.pos, "expected '+' or '-' between terms");
      sign = binop;
    }
    for (int s; (s = lx.accept_sign()) != 0;) sign *= s;
    SuperElement term = SuperElement::constant(n, sign);
    std::size_t term_pos = lx.pos;
    if (!parse_factor(lx, n, term)) fail(lx.pos, "expected a term");
    for (;;) {
      bool sep = lx.accept_separator();
      std::size_t before = lx.pos;
      if (!parse_factor(lx, n, term)) {
        if (sep) fail(before, "expected a factor after separator");
        break;
      }
    }
    (void)term_pos;
    out += term;
    first_term = false;
  }
  return out;
}

}  // namespace

SuperElement parse_element(int n, std::string_view text) {
  Lexer lx{text};
  SuperElement out = parse_element_impl(lx, n, false);
  if (!lx.done()) fail(lx.pos, "unexpected trailing input");
  return out;
}

namespace {

// Returns 1 for dxi<i>, 2 for dx<i>, 0 if the cursor is not at a ∂-symbol.
int accept_partial(Lexer& lx) {
  lx.skip_ws();
  std::size_t save = lx.pos;
  if (lx.accept_seq(kPartial) || lx.accept('d')) {
    if (lx.accept_seq("xi") || lx.accept_seq(kXiGlyph)) return 1;
    if (lx.peek_is('x')) {
      ++lx.pos;
      return 2;
    }
    lx.pos = save;
    return 0;
  }
  return 0;
}

}  // namespace

SuperDerivation parse_derivation(int n, std::string_view text) {
  Lexer lx{text};
  std::vector<SuperElement> images_xi(static_cast<std::size_t>(n), SuperElement::zero(n));
  std::vector<SuperElement> images_x(static_cast<std::size_t>(n), SuperElement::zero(n));
  if (lx.done()) fail(lx.pos, "empty derivation");
  bool first_term = true;
  while (!lx.done()) {
    int sign = 1;
    if (!first_term) {
      int binop = lx.accept_sign();
      if (binop == 0) fail(lx.pos, "expected '+' or '-' between terms");
      sign = binop;
    }
    for (int s; (s = lx.accept_sign()) != 0;) sign *= s;
    first_term = false;

    lx.skip_ws();
    if (lx.peek_is('E')) {
      ++lx.pos;
      for (int i = 1; i <= n; ++i)
        images_xi[static_cast<std::size_t>(i - 1)] +=
            Rational(sign) * SuperElement::variable_xi(n, i);
      continue;
    }
    // A literal zero is a valid (empty) term: the zero derivation prints "0".
    if (lx.peek_digit()) {
      std::size_t save = lx.pos;
      Rational coeff = lx.parse_rational_token();
      lx.skip_ws();
      bool boundary = lx.pos == lx.s.size() || lx.s[lx.pos] == '+' ||
                      lx.s[lx.pos] == '-' ||
                      lx.s.substr(lx.pos, kMinus.size()) == kMinus;
      if (boundary) {
        if (coeff == 0) continue;
        fail(save, "a derivation term needs dxi<i> or dx<i>");
      }
      lx.pos = save;
    }

    SuperElement image = SuperElement::constant(n, sign);
    bool have_image_factor = false;
    int partial_kind = 0;
    for (;;) {
      partial_kind = accept_partial(lx);
      if (partial_kind != 0) break;
      if (lx.accept('(')) {
        image = image * parse_element_impl(lx, n, true);
        if (!lx.accept(')')) fail(lx.pos, "expected ')'");
        have_image_factor = true;
        lx.accept_separator();
        continue;
      }
      bool sep_seen = have_image_factor && lx.accept_separator();
      if (sep_seen) {
        partial_kind = accept_partial(lx);
        if (partial_kind != 0) break;
      }
      std::size_t before = lx.pos;
      if (!parse_factor(lx, n, image)) {
        if (sep_seen) fail(before, "expected a factor after separator");
        fail(lx.pos, "expected dxi<i> or dx<i>");
      }
      have_image_factor = true;
    }
    int i = lx.parse_index(n, partial_kind == 1 ? "dxi" : "dx");
    auto& slot = partial_kind == 1 ? images_xi[static_cast<std::size_t>(i - 1)]
                                   : images_x[static_cast<std::size_t>(i - 1)];
    slot += image;
  }
  return SuperDerivation(n, std::move(images_xi), std::move(images_x));
}

}  // namespace superpoint
