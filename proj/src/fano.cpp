#include "gaussfano/fano.hpp"

#include <algorithm>

#include "gaussfano/errors.hpp"

namespace gaussfano {

FanoChartIdeal fano_chart_ideal(const Ideal& variety, const Chart& chart, Budget budget) {
  if (variety.ring().nvars() != chart.ambient_dim() + 1)
    throw Error(ErrorCode::ArityMismatch, "variety ring has " + std::to_string(variety.ring().nvars()) +
                                              " variables, chart expects " + std::to_string(chart.ambient_dim() + 1));
  for (const auto& f : variety.generators())
    if (!f.is_homogeneous()) throw Error(ErrorCode::NotHomogeneous, f.to_string());

  const LineParam psi = chart_param(chart);
  std::vector<Polynomial> gens;
  for (const auto& f : variety.generators()) {
    for (auto& h : st_coefficients(substitute_line(f, psi))) gens.push_back(std::move(h));
  }
  Ideal ideal(chart.ring(), std::move(gens));
  GroebnerBasis basis = buchberger(ideal, MonomialOrder::degrevlex(), budget);
  return {chart, std::move(ideal), std::move(basis), variety};
}

bool line_on_variety(const Ideal& variety, const LineRep& line) {
  const LineParam psi = line_param(line);
  return std::all_of(variety.generators().begin(), variety.generators().end(),
                     [&](const Polynomial& f) { return substitute_line(f, psi).is_zero(); });
}

std::string_view to_string(CertificateFailureKind kind) {
  switch (kind) {
    case CertificateFailureKind::WitnessInIdeal: return "WitnessInIdeal";
    case CertificateFailureKind::NoNilpotency: return "NoNilpotency";
    case CertificateFailureKind::QuotientNotInRadical: return "QuotientNotInRadical";
  }
  return "?";
}

CertificateOutcome nonreduced_certificate(const FanoChartIdeal& fano, const Polynomial& witness, unsigned max_power,
                                          Budget budget) {
  if (max_power < 2) throw Error(ErrorCode::InvalidArgument, "k_max must be at least 2");
  const PolyRing& ring = fano.ideal.ring();
  if (!witness.ring().same_variables(ring)) throw Error(ErrorCode::RingMismatch, "witness is not in the chart ring");
  const Polynomial g = witness.remap(ring);

  if (normal_form(g, fano.basis, budget).is_zero())
    return CertificateFailure{CertificateFailureKind::WitnessInIdeal, g.to_string() + " lies in the ideal"};

  unsigned power = 0;
  Polynomial gk = g;
  for (unsigned k = 2; k <= max_power; ++k) {
    gk = gk * g;
    if (normal_form(gk, fano.basis, budget).is_zero()) {
      power = k;
      break;
    }
  }
  if (power == 0)
    return CertificateFailure{CertificateFailureKind::NoNilpotency,
                              "no power " + g.to_string() + "^k with k <= " + std::to_string(max_power) + " lies in the ideal"};

  NonReducednessCertificate cert{g, power, {}, {}};
  const Ideal quotient = ideal_quotient(fano.ideal, g, budget);
  cert.quotient_generators = quotient.generators();
  for (const auto& q : cert.quotient_generators) cert.quotient_in_radical.push_back(radical_member(q, fano.ideal, budget));
  for (std::size_t i = 0; i < cert.quotient_generators.size(); ++i) {
    if (!cert.quotient_in_radical[i])
      return CertificateFailure{CertificateFailureKind::QuotientNotInRadical,
                                cert.quotient_generators[i].to_string() + " is not in the radical"};
  }
  return cert;
}

namespace {

// (I : g) through I ∩ (g) computed with a lex elimination of the auxiliary
// variable.
Ideal quotient_by_lex_elimination(const Ideal& ideal, const Polynomial& g, Budget budget) {
  const PolyRing& ring = ideal.ring();
  std::vector<std::string> names{ring.fresh_name("_u")};
  names.insert(names.end(), ring.names().begin(), ring.names().end());
  const PolyRing ext(names, MonomialOrder::lex());
  const Polynomial u = Polynomial::variable(ext, 0);
  const Polynomial one = Polynomial::constant(ext, Rational(1));
  const Polynomial ge = g.remap(ext);
  std::vector<Polynomial> gens;
  for (const auto& f : ideal.generators()) gens.push_back(u * f.remap(ext));
  gens.push_back((one - u) * ge);
  const GroebnerBasis gb = buchberger(Ideal(ext, std::move(gens)), MonomialOrder::lex(), budget);
  std::vector<Polynomial> out;
  for (const auto& h : gb.basis()) {
    if (h.leading_monomial()[0] != 0) continue;  // lex: u-free iff leading monomial is u-free
    auto q = h.divide_exact(ge);
    if (!q) return Ideal(ring, {Polynomial::constant(ring, Rational(1))});
    out.push_back(q->remap(ring));
  }
  return Ideal(ring, std::move(out));
}

}  // namespace

bool verify_certificate(const Ideal& ideal, const NonReducednessCertificate& cert, Budget budget) {
  const PolyRing& ring = ideal.ring();
  if (!cert.witness.ring().same_variables(ring)) return false;
  if (cert.power < 2) return false;
  if (cert.quotient_in_radical.size() != cert.quotient_generators.size()) return false;

  const GroebnerBasis lex = buchberger(ideal, MonomialOrder::lex(), budget);
  const Polynomial g = cert.witness.remap(ring);
  if (normal_form(g, lex, budget).is_zero()) return false;
  if (!normal_form(g.pow(cert.power), lex, budget).is_zero()) return false;

  for (std::size_t i = 0; i < cert.quotient_generators.size(); ++i) {
    const Polynomial q = cert.quotient_generators[i].remap(ring);
    if (!cert.quotient_in_radical[i]) return false;
    if (!normal_form(q * g, lex, budget).is_zero()) return false;
    if (!radical_member(q, ideal, budget)) return false;
  }

  // The listed generators must span the whole quotient, not just part of it.
  const Ideal recomputed = quotient_by_lex_elimination(ideal, g, budget);
  if (ideal.is_zero()) return recomputed.is_zero() && cert.quotient_generators.empty();
  return ideal_equal(recomputed, Ideal(ring, cert.quotient_generators));
}

std::vector<Polynomial> candidate_witnesses(const FanoChartIdeal& fano) {
  return candidate_witnesses(fano.ideal, fano.basis);
}

std::vector<Polynomial> candidate_witnesses(const Ideal& ideal, const GroebnerBasis& basis) {
  constexpr std::size_t kMaxCandidates = 32;
  const PolyRing& ring = ideal.ring();
  std::vector<Polynomial> out;
  auto add = [&](const Polynomial& p) {
    if (out.size() >= kMaxCandidates || p.is_constant()) return;
    Polynomial m = p.monic();
    if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(std::move(m));
  };
  if (ideal.is_zero() || basis.is_unit()) return out;

  for (const auto& f : ideal.generators()) {
    const Polynomial root = square_free_part(f);
    if (!normal_form(root, basis).is_zero()) add(root);
  }
  for (std::size_t i = 0; i < ring.nvars(); ++i) add(Polynomial::variable(ring, i));
  for (std::size_t i = 0; i < ring.nvars(); ++i) {
    const Polynomial x = Polynomial::variable(ring, i);
    const Polynomial nf = normal_form(x, basis).remap(ring);
    if (!(nf == x)) add(nf);
  }
  return out;
}

}  // namespace gaussfano
