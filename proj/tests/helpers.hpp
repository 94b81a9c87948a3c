#pragma once

#include <random>
#include <string>
#include <vector>

#include "gaussfano/errors.hpp"
#include "gaussfano/grassmann.hpp"
#include "gaussfano/groebner.hpp"

namespace gaussfano::test {

inline PolyRing ring_of(std::vector<std::string> names, MonomialOrder order = MonomialOrder::degrevlex()) {
  return PolyRing(std::move(names), order);
}

inline PolyRing projective_ring(std::size_t n, const std::string& stem = "x") {
  std::vector<std::string> names;
  for (std::size_t i = 0; i <= n; ++i) names.push_back(stem + std::to_string(i));
  return PolyRing(names);
}

inline Ideal ideal_of(const PolyRing& ring, const std::vector<std::string>& gens) { return parse_ideal(gens, ring); }

inline std::vector<Rational> qvec(std::initializer_list<long> values) {
  std::vector<Rational> out;
  for (long v : values) out.emplace_back(v);
  return out;
}

inline LineRep line_rows(std::initializer_list<long> r0, std::initializer_list<long> r1) {
  return LineRep::from_rows({qvec(r0), qvec(r1)});
}

inline Ideal cone() { return ideal_of(projective_ring(3), {"x0*x1 - x2^2"}); }
inline Ideal smooth_quadric() { return ideal_of(projective_ring(3), {"x0*x3 - x1*x2"}); }
inline Ideal symmetroid() {
  return ideal_of(projective_ring(5, "T"), {"T0*T3*T5 - T0*T4^2 - T1^2*T5 - T2^2*T3 + 2*T1*T2*T4"});
}

/// Random polynomial with small integer/fractional coefficients.
inline Polynomial random_poly(std::mt19937& rng, const PolyRing& ring, int max_terms, int max_exp) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> exp(0, max_exp);
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 4);
  std::vector<Term> terms;
  const int n = nterms(rng);
  for (int k = 0; k < n; ++k) {
    std::vector<std::uint32_t> e(ring.nvars());
    for (auto& x : e) x = static_cast<std::uint32_t>(exp(rng));
    terms.push_back({make_rational(num(rng), den(rng)), Monomial(e)});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

/// Structural canonical-form check on a polynomial.
inline bool is_canonical(const Polynomial& p) {
  const auto& t = p.terms();
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i].coeff == 0) return false;
    if (t[i].mono.size() != p.ring().nvars()) return false;
    if (i > 0 && p.ring().compare(t[i - 1].mono, t[i].mono) <= 0) return false;
  }
  return true;
}

template <class F>
ErrorCode error_code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  throw std::logic_error("expected an Error");
}

}  // namespace gaussfano::test
