#include <cctype>

#include "bubble/error.hpp"
#include "bubble/poly.hpp"

namespace bubble {
namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const ParseOptions& options)
      : text_(text), options_(options) {}

  Poly parse() {
    skip_space();
    if (at_end()) fail("empty polynomial literal");
    Poly result = term();
    for (;;) {
      skip_space();
      if (at_end()) break;
      const char op = peek();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      ++pos_;
      Poly next = term();
      if (op == '+') {
        result += next;
      } else {
        result -= next;
      }
    }
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(ErrorCode::ParseSyntax, what, pos_);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool next_is_digit() {
    skip_space();
    return std::isdigit(static_cast<unsigned char>(peek())) != 0;
  }

  std::string digits() {
    skip_space();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  // uint ("/" uint)?
  Rational unsigned_rational() {
    BigInt num(digits());
    if (!accept('/')) return Rational(num);
    skip_space();
    const std::size_t den_pos = pos_;
    BigInt den(digits());
    if (den == 0) throw ParseError(ErrorCode::ParseZeroDenominator, "zero denominator", den_pos);
    return Rational(num, den);
  }

  Rational signed_rational() {
    const bool negative = accept('-');
    Rational r = unsigned_rational();
    return negative ? -r : r;
  }

  std::size_t monomial() {
    expect('t');
    if (!accept('^')) return 1;
    skip_space();
    const std::size_t start = pos_;
    const std::string text = digits();
    const std::string cap = std::to_string(options_.max_exponent);
    if (text.size() > cap.size() + 1 || BigInt(text) > BigInt(cap)) {
      throw ParseError(ErrorCode::ParseExponentOverflow,
                       "exponent exceeds cap " + cap, start);
    }
    return static_cast<std::size_t>(std::stoull(text));
  }

  // "(" rat ("+"|"-") rat? "i" ")"
  GaussianRational parenthesized() {
    const Rational re = signed_rational();
    skip_space();
    const char op = peek();
    if (op != '+' && op != '-') fail("expected '+' or '-' inside complex coefficient");
    ++pos_;
    Rational im(1);
    if (next_is_digit()) im = unsigned_rational();
    expect('i');
    expect(')');
    return {re, op == '-' ? -im : im};
  }

  GaussianRational coefficient() {
    skip_space();
    if (accept('(')) return parenthesized();
    if (accept('i')) return GaussianRational::i();
    if (!next_is_digit()) fail("expected coefficient or 't'");
    Rational r = unsigned_rational();
    if (accept('i')) return {Rational(0), r};
    return r;
  }

  Poly term() {
    const bool negative = accept('-');
    skip_space();
    GaussianRational c(1);
    std::size_t exponent = 0;
    if (peek() == 't') {
      exponent = monomial();
    } else {
      c = coefficient();
      if (accept('*')) {
        skip_space();
        if (peek() != 't') fail("expected 't' after '*'");
        exponent = monomial();
      } else {
        skip_space();
        if (peek() == 't') exponent = monomial();
      }
    }
    if (negative) c = -c;
    return Poly::monomial(c, exponent);
  }

  std::string_view text_;
  const ParseOptions& options_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, const ParseOptions& options) {
  return PolyParser(text, options).parse();
}

GaussianRational parse_scalar(std::string_view text) {
  const Poly p = parse_poly(text);
  if (p.degree() > 0) throw ParseError(ErrorCode::ParseSyntax, "scalar literal contains t", 0);
  return p.coeff(0);
}

}  // namespace bubble
