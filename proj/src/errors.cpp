#include "gaussfano/errors.hpp"

#include "gaussfano/rational.hpp"

#include <cctype>

namespace gaussfano {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::NegativeExponent: return "NegativeExponent";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::NotHomogeneousInST: return "NotHomogeneousInST";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::ZeroDivisorArgument: return "ZeroDivisorArgument";
    case ErrorCode::ComputationBudgetExceeded: return "ComputationBudgetExceeded";
    case ErrorCode::CoincidentPoints: return "CoincidentPoints";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::BadCodimension: return "BadCodimension";
    case ErrorCode::PointNotOnVariety: return "PointNotOnVariety";
    case ErrorCode::LineNotOnVariety: return "LineNotOnVariety";
    case ErrorCode::LineInSingularLocus: return "LineInSingularLocus";
    case ErrorCode::VerificationWindowMismatch: return "VerificationWindowMismatch";
    case ErrorCode::NonzeroRemainder: return "NonzeroRemainder";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Rational make_rational(long num, long den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  auto bad = [&] {
    return Error(ErrorCode::InvalidArgument, "malformed rational '" + std::string(text) + "'");
  };
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  std::size_t end = text.size();
  while (end > i && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  std::string_view body = text.substr(i, end - i);
  if (body.empty()) throw bad();

  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);

  auto digits_ok = [](std::string_view s, bool allow_sign) {
    std::size_t k = 0;
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) k = 1;
    if (k == s.size()) return false;
    for (; k < s.size(); ++k)
      if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
    return true;
  };
  if (!digits_ok(num, true)) throw bad();
  std::string num_str(num[0] == '+' ? num.substr(1) : num);
  mpz_class n(num_str, 10);
  mpz_class d(1);
  if (slash != std::string_view::npos) {
    if (!digits_ok(den, false)) throw bad();
    d = mpz_class(std::string(den), 10);
    if (d == 0) throw bad();
  }
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(); }

}  // namespace gaussfano
