#include "gaussfano/gauss.hpp"

#include <map>

#include "gaussfano/errors.hpp"
#include "gaussfano/fano.hpp"
#include "gaussfano/linalg.hpp"

namespace gaussfano {

namespace {

// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    out.push_back(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

Polynomial linear_form(const PolyRing& ring, const std::vector<Rational>& coeffs) {
  Polynomial f(ring);
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    if (coeffs[k] != 0) f += coeffs[k] * Polynomial::variable(ring, k);
  return f;
}

void check_line_arity(const Ideal& variety, const LineRep& line) {
  if (variety.ring().nvars() != line.ambient_dim() + 1)
    throw Error(ErrorCode::ArityMismatch, "line is in P^" + std::to_string(line.ambient_dim()) +
                                              " but the variety's ring has " + std::to_string(variety.ring().nvars()) +
                                              " variables");
}

}  // namespace

std::vector<std::vector<Polynomial>> jacobian_matrix(const Ideal& variety) {
  std::vector<std::vector<Polynomial>> jac;
  for (const auto& f : variety.generators()) {
    std::vector<Polynomial> row;
    for (std::size_t k = 0; k < variety.ring().nvars(); ++k) row.push_back(f.derivative(k));
    jac.push_back(std::move(row));
  }
  return jac;
}

std::size_t derived_codim(const Ideal& variety, Budget budget) {
  const int affine_dim = ideal_dimension(variety, budget);
  if (affine_dim < 1) throw Error(ErrorCode::InvalidArgument, "the ideal defines the empty projective variety");
  const std::size_t n = variety.ring().nvars() - 1;
  return n - static_cast<std::size_t>(affine_dim - 1);
}

Ideal singular_scheme_ideal(const Ideal& variety, std::size_t codim) {
  const PolyRing& ring = variety.ring();
  const std::size_t n = ring.nvars() - 1;
  if (codim < 1 || codim > n)
    throw Error(ErrorCode::BadCodimension, "codim " + std::to_string(codim) + " outside [1, " + std::to_string(n) + "]");
  std::vector<Polynomial> gens = variety.generators();
  const auto jac = jacobian_matrix(variety);
  for (const auto& rows : subsets(jac.size(), codim)) {
    for (const auto& cols : subsets(ring.nvars(), codim)) {
      std::vector<std::vector<Polynomial>> minor;
      for (auto r : rows) {
        std::vector<Polynomial> row;
        for (auto c : cols) row.push_back(jac[r][c]);
        minor.push_back(std::move(row));
      }
      Polynomial d = determinant(minor, ring);
      if (!d.is_zero()) gens.push_back(std::move(d));
    }
  }
  return Ideal(ring, std::move(gens));
}

TangentSpaceReport tangent_space(const Ideal& variety, const std::vector<Rational>& point, std::size_t codim) {
  const PolyRing& ring = variety.ring();
  if (point.size() != ring.nvars()) throw Error(ErrorCode::ArityMismatch, "point has the wrong number of coordinates");
  for (const auto& f : variety.generators())
    if (f.evaluate(point) != 0) throw Error(ErrorCode::PointNotOnVariety, f.to_string() + " does not vanish");

  const auto jac = jacobian_matrix(variety);
  QMatrix at(jac.size(), ring.nvars());
  for (std::size_t r = 0; r < jac.size(); ++r)
    for (std::size_t c = 0; c < ring.nvars(); ++c) at(r, c) = jac[r][c].evaluate(point);
  const QMatrix basis = at.rref();

  TangentSpaceReport report;
  report.point = point;
  report.rank = basis.rows();
  report.smooth = report.rank == codim;
  for (std::size_t r = 0; r < basis.rows(); ++r) report.conormal_basis.push_back(linear_form(ring, basis.row(r)));
  return report;
}

namespace {

std::vector<std::vector<Polynomial>> restricted_jacobian(const Ideal& variety, const LineRep& line) {
  const LineParam psi = line_param(line);
  auto jac = jacobian_matrix(variety);
  for (auto& row : jac)
    for (auto& entry : row) entry = substitute_line(entry, psi);
  return jac;
}

}  // namespace

std::size_t generic_jacobian_rank(const Ideal& variety, const LineRep& line) {
  check_line_arity(variety, line);
  return generic_rank(restricted_jacobian(variety, line));
}

GaussConstancyResult gauss_constant_on_line(const Ideal& variety, const LineRep& line, std::size_t codim) {
  check_line_arity(variety, line);
  if (!line_on_variety(variety, line)) throw Error(ErrorCode::LineNotOnVariety, line.to_string());

  const auto jac = restricted_jacobian(variety, line);
  GaussConstancyResult result;
  result.generic_rank = generic_rank(jac);
  if (result.generic_rank < codim)
    throw Error(ErrorCode::LineInSingularLocus, "Jacobian rank " + std::to_string(result.generic_rank) +
                                                    " < codim " + std::to_string(codim) + " along " + line.to_string());

  const std::size_t ncols = variety.ring().nvars();
  std::vector<std::vector<Rational>> vectors;
  for (const auto& row : jac) {
    // Entries of one row share an (s, t)-degree; key coefficients by the
    // exponent of s.
    std::map<std::uint32_t, std::vector<Rational>> by_monomial;
    for (std::size_t k = 0; k < ncols; ++k) {
      for (const auto& t : row[k].terms()) {
        auto& v = by_monomial.try_emplace(t.mono[0], ncols, Rational(0)).first->second;
        v[k] = t.coeff;
      }
    }
    for (auto& [_, v] : by_monomial) vectors.push_back(std::move(v));
  }
  const QMatrix span = vectors.empty() ? QMatrix(0, ncols) : QMatrix(vectors).rref();
  result.coefficient_span_dim = span.rows();
  result.constant = result.coefficient_span_dim == result.generic_rank;
  if (result.constant) {
    std::vector<Polynomial> forms;
    for (std::size_t r = 0; r < span.rows(); ++r) forms.push_back(linear_form(variety.ring(), span.row(r)));
    result.common_conormal = std::move(forms);
  }
  return result;
}

}  // namespace gaussfano
