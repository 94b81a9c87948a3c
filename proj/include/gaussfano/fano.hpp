#pragma once

#include <string>
#include <variant>
#include <vector>

#include "gaussfano/grassmann.hpp"
#include "gaussfano/groebner.hpp"

namespace gaussfano {

/// Local equations of the Hilbert scheme of lines of X inside one chart:
/// the (s, t)-coefficients of every generator of I_X pulled back along the
/// chart's symbolic line.
struct FanoChartIdeal {
  Chart chart;
  Ideal ideal;          // unprocessed generators, in generation order
  GroebnerBasis basis;  // reduced degrevlex basis of `ideal`
  Ideal source;         // I_X
};

/// Throws NotHomogeneous if a generator of I_X is not homogeneous, and
/// ArityMismatch if I_X does not live in N+1 variables.
FanoChartIdeal fano_chart_ideal(const Ideal& variety, const Chart& chart, Budget budget = Budget::standard());

/// True iff every generator of I_X vanishes identically on the line.
bool line_on_variety(const Ideal& variety, const LineRep& line);

/// A nilpotent g of the chart ring k[U]/I with g != 0, g^k = 0, and every
/// generator of (I : g) in the radical of I, i.e. the support of g is all
/// of V(I).
struct NonReducednessCertificate {
  Polynomial witness;
  unsigned power = 0;
  std::vector<Polynomial> quotient_generators;
  std::vector<bool> quotient_in_radical;
};

enum class CertificateFailureKind { WitnessInIdeal, NoNilpotency, QuotientNotInRadical };

std::string_view to_string(CertificateFailureKind kind);

struct CertificateFailure {
  CertificateFailureKind kind;
  std::string detail;
};

using CertificateOutcome = std::variant<NonReducednessCertificate, CertificateFailure>;

CertificateOutcome nonreduced_certificate(const FanoChartIdeal& fano, const Polynomial& witness, unsigned max_power,
                                          Budget budget = Budget::standard());

/// Re-check a certificate against an ideal using only its fields.  Uses lex
/// bases and recomputes the quotient by a separate elimination, so it
/// shares no intermediate result with the producer.
bool verify_certificate(const Ideal& ideal, const NonReducednessCertificate& cert, Budget budget = Budget::standard());

/// Heuristic witness candidates: square-free parts of generators that differ
/// from the generator modulo I, then chart coordinates, then their nonzero
/// normal forms.  Deduplicated, at most 32 entries.
std::vector<Polynomial> candidate_witnesses(const FanoChartIdeal& fano);
/// Same, for any ideal with a reduced Gröbner basis of it.
std::vector<Polynomial> candidate_witnesses(const Ideal& ideal, const GroebnerBasis& basis);

}  // namespace gaussfano
