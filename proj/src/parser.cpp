// Recursive-descent parser for the polynomial grammar
//
//   expr        := ['+'|'-'] term (('+'|'-') term)*
//   term        := factor ('*' factor)*
//   factor      := coefficient | var ('^' nat)? | '(' expr ')' ('^' nat)?
//   coefficient := int ('/' posint)?
//
// Whitespace is insignificant between tokens; juxtaposition is rejected.

#include <cctype>
#include <limits>

#include "gaussfano/errors.hpp"
#include "gaussfano/ring.hpp"

namespace gaussfano {
namespace {

class Parser {
 public:
  Parser(std::string_view text, const PolyRing& ring) : text_(text), ring_(ring) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(pos_, what); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Polynomial expr() {
    bool negate = false;
    char c = peek();
    if (c == '+' || c == '-') {
      negate = c == '-';
      ++pos_;
    }
    Polynomial acc = term();
    if (negate) acc = -acc;
    for (;;) {
      c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      Polynomial rhs = term();
      if (c == '+')
        acc += rhs;
      else
        acc -= rhs;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * factor();
        continue;
      }
      if (c == '\0' || c == '+' || c == '-' || c == ')') break;
      fail("implicit multiplication is not allowed");
    }
    return acc;
  }

  Polynomial factor() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      if (peek() == '^') {
        ++pos_;
        return inner.pow(exponent());
      }
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Polynomial::constant(ring_, coefficient());
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      std::string name = identifier();
      auto idx = ring_.index_of(name);
      if (!idx) throw Error(ErrorCode::UnknownVariable, "'" + name + "' at byte " + std::to_string(start));
      std::uint32_t e = 1;
      if (peek() == '^') {
        ++pos_;
        e = exponent();
      }
      Monomial m(ring_.nvars());
      m.set(*idx, e);
      return Polynomial::term(ring_, Rational(1), std::move(m));
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string identifier() {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  Rational coefficient() {
    mpz_class num(digits(), 10);
    mpz_class den(1);
    if (peek() == '/') {
      ++pos_;
      skip_ws();
      std::size_t at = pos_;
      den = mpz_class(digits(), 10);
      if (den == 0) throw SyntaxError(at, "zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

  std::uint32_t exponent() {
    char c = peek();
    if (c == '-') throw Error(ErrorCode::NegativeExponent, "at byte " + std::to_string(pos_));
    if (!std::isdigit(static_cast<unsigned char>(c))) fail("expected exponent");
    std::size_t at = pos_;
    mpz_class e(digits(), 10);
    if (e > std::numeric_limits<std::uint16_t>::max()) throw SyntaxError(at, "exponent too large");
    return static_cast<std::uint32_t>(e.get_ui());
  }

  std::string_view text_;
  const PolyRing& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_poly(std::string_view text, const PolyRing& ring) { return Parser(text, ring).parse(); }

}  // namespace gaussfano
