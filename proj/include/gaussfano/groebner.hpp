#pragma once

#include <cstdint>
#include <vector>

#include "gaussfano/ring.hpp"

namespace gaussfano {

/// Upper bound on reduction steps for one Gröbner computation.  Exceeding
/// it throws ComputationBudgetExceeded.
struct Budget {
  std::uint64_t max_steps;

  static constexpr std::uint64_t kDefaultSteps = 10'000'000;

  /// The process-wide default (initially kDefaultSteps).
  static Budget standard();
  static void set_standard(std::uint64_t max_steps);
};

class Ideal {
 public:
  Ideal() = default;
  explicit Ideal(PolyRing ring) : ring_(std::move(ring)) {}
  /// Zero generators are dropped.  Throws RingMismatch if a generator lives
  /// in a ring with a different variable list.
  Ideal(PolyRing ring, std::vector<Polynomial> generators);

  const PolyRing& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }

 private:
  PolyRing ring_;
  std::vector<Polynomial> gens_;
};

/// Parse every generator string in `ring`.
Ideal parse_ideal(const std::vector<std::string>& generators, const PolyRing& ring);

class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(PolyRing ring, std::vector<Polynomial> basis) : ring_(std::move(ring)), basis_(std::move(basis)) {}

  /// The ring the basis lives in; its order is the basis order.
  const PolyRing& ring() const { return ring_; }
  const MonomialOrder& order() const { return ring_.order(); }
  const std::vector<Polynomial>& basis() const { return basis_; }
  bool is_unit() const { return basis_.size() == 1 && basis_[0].is_constant(); }

 private:
  PolyRing ring_;
  std::vector<Polynomial> basis_;
};

/// Reduced Gröbner basis of I with respect to `order`, computed by
/// Buchberger's algorithm with Gebauer-Möller pair pruning.  Pairs are
/// processed by (lcm degree, lcm in the order, insertion index); the basis
/// is returned sorted ascending by leading monomial.
GroebnerBasis buchberger(const Ideal& ideal, MonomialOrder order = MonomialOrder::degrevlex(),
                         Budget budget = Budget::standard());

/// Full remainder of f modulo G.  f may use a different order of the same
/// variables; the result lives in G's ring.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb, Budget budget = Budget::standard());

bool ideal_member(const Polynomial& f, const GroebnerBasis& gb);

struct Division {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

/// Multivariate division with remainder: f = sum q_i g_i + r in the order of
/// f's ring.  Divisors are tried in list order.
Division divide(const Polynomial& f, const std::vector<Polynomial>& divisors);

/// The S-polynomial of two nonzero polynomials in the same ring.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

bool ideal_equal(const Ideal& a, const Ideal& b);

/// Generators of I ∩ k[keep], returned in I's ring.
Ideal eliminate(const Ideal& ideal, const std::vector<std::string>& keep, Budget budget = Budget::standard());

/// Generators of I ∩ J.
Ideal intersect(const Ideal& a, const Ideal& b, Budget budget = Budget::standard());

/// Generators of (I : g).  Throws ZeroDivisorArgument for g = 0.
Ideal ideal_quotient(const Ideal& ideal, const Polynomial& g, Budget budget = Budget::standard());

/// f ∈ √I, decided by 1 ∈ I + (1 - w f) in a ring with one extra variable.
bool radical_member(const Polynomial& f, const Ideal& ideal, Budget budget = Budget::standard());

/// Krull dimension of R/I; -1 when I is the unit ideal.
int ideal_dimension(const Ideal& ideal, Budget budget = Budget::standard());

/// Monic greatest common divisor.  gcd(0, 0) = 0.
Polynomial polynomial_gcd(const Polynomial& a, const Polynomial& b);

/// Monic square-free part f / gcd(f, ∂f/∂x_1, ..., ∂f/∂x_n).
Polynomial square_free_part(const Polynomial& f);

}  // namespace gaussfano
