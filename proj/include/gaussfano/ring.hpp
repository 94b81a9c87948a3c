#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gaussfano/rational.hpp"

namespace gaussfano {

enum class OrderKind { Degrevlex, Lex, Block };

/// Monomial order tag.  Block(k) compares the first k variables by
/// degrevlex first and breaks ties with degrevlex on the remaining ones; it
/// is an elimination order for the first k variables.
struct MonomialOrder {
  OrderKind kind = OrderKind::Degrevlex;
  std::size_t block = 0;

  static MonomialOrder degrevlex() { return {OrderKind::Degrevlex, 0}; }
  static MonomialOrder lex() { return {OrderKind::Lex, 0}; }
  static MonomialOrder eliminating(std::size_t k) { return {OrderKind::Block, k}; }

  bool operator==(const MonomialOrder&) const = default;
};

std::string to_string(const MonomialOrder& order);

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps);

  std::size_t size() const { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::uint32_t degree() const { return degree_; }
  const std::vector<std::uint32_t>& exponents() const { return exps_; }
  bool is_one() const { return degree_ == 0; }

  void set(std::size_t i, std::uint32_t e);

  bool divides(const Monomial& other) const;
  /// Requires divisor.divides(*this).
  Monomial quotient(const Monomial& divisor) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  bool operator==(const Monomial& other) const { return exps_ == other.exps_; }

 private:
  std::vector<std::uint32_t> exps_;
  std::uint32_t degree_ = 0;
};

/// Ordered list of variable names plus a monomial order.  Cheap to copy;
/// equality is structural.
class PolyRing {
 public:
  PolyRing();
  explicit PolyRing(std::vector<std::string> names, MonomialOrder order = MonomialOrder::degrevlex());

  std::size_t nvars() const;
  const std::string& name(std::size_t i) const;
  const std::vector<std::string>& names() const;
  std::optional<std::size_t> index_of(std::string_view name) const;
  /// Throws UnknownVariable.
  std::size_t require_index(std::string_view name) const;
  const MonomialOrder& order() const;

  /// Negative when a < b in this ring's order.
  int compare(const Monomial& a, const Monomial& b) const;

  PolyRing with_order(MonomialOrder order) const;
  PolyRing appended(const std::vector<std::string>& extra) const;
  PolyRing without_last(std::size_t k) const;
  /// A name not already used by this ring, derived from `stem`.
  std::string fresh_name(std::string_view stem) const;

  bool same_variables(const PolyRing& other) const;
  bool operator==(const PolyRing& other) const;

 private:
  struct Data;
  std::shared_ptr<const Data> d_;
};

struct Term {
  Rational coeff;
  Monomial mono;
};

/// Polynomial with rational coefficients; terms are kept strictly
/// descending in the ring order with no zero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(PolyRing ring) : ring_(std::move(ring)) {}

  static Polynomial constant(const PolyRing& ring, const Rational& c);
  static Polynomial variable(const PolyRing& ring, std::size_t index);
  static Polynomial variable(const PolyRing& ring, std::string_view name);
  static Polynomial term(const PolyRing& ring, const Rational& c, Monomial mono);
  /// Sorts, merges duplicates and drops zeros.
  static Polynomial from_terms(const PolyRing& ring, std::vector<Term> terms);

  const PolyRing& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool is_one() const;

  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().mono; }
  const Rational& leading_coeff() const { return terms_.front().coeff; }
  /// All terms but the leading one.
  Polynomial tail() const;
  /// -1 for the zero polynomial.
  int total_degree() const;
  bool is_homogeneous() const;
  /// Indices of variables that occur with positive exponent.
  std::vector<std::size_t> support() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& p);

  Polynomial mul_term(const Rational& c, const Monomial& m) const;
  /// this - c*m*other, the reduction kernel.
  Polynomial sub_mul_term(const Rational& c, const Monomial& m, const Polynomial& other) const;
  Polynomial pow(unsigned k) const;
  Polynomial monic() const;

  Polynomial derivative(std::size_t var) const;
  Rational evaluate(std::span<const Rational> point) const;
  /// Replace variable i by images[i]; all images must share one ring.
  Polynomial substitute(std::span<const Polynomial> images, const PolyRing& target) const;
  /// Same polynomial viewed in another ring, matching variables by name.
  /// Throws UnknownVariable if a used variable is missing from target.
  Polynomial remap(const PolyRing& target) const;

  /// Exact quotient this / divisor, or nullopt when divisor does not divide.
  std::optional<Polynomial> divide_exact(const Polynomial& divisor) const;

  std::string to_string() const;

  bool operator==(const Polynomial& other) const;

 private:
  PolyRing ring_;
  std::vector<Term> terms_;
};

std::string to_string(const Polynomial& p);

/// Parse the polynomial grammar (see README) into `ring`.
Polynomial parse_poly(std::string_view text, const PolyRing& ring);

}  // namespace gaussfano
