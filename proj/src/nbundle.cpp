#include "gaussfano/nbundle.hpp"

#include <algorithm>
#include <numeric>

#include "gaussfano/errors.hpp"
#include "gaussfano/fano.hpp"

namespace gaussfano {

namespace {

std::vector<Rational> linear_coefficients(const Polynomial& f, std::size_t n) {
  std::vector<Rational> c(n, Rational(0));
  for (const auto& t : f.terms()) {
    if (t.mono.degree() != 1) throw Error(ErrorCode::InvalidArgument, f.to_string() + " is not a linear form");
    for (std::size_t k = 0; k < n; ++k)
      if (t.mono[k] == 1) c[k] = t.coeff;
  }
  return c;
}

std::size_t resolve_codim(const Ideal& variety, std::optional<std::size_t> dim_x) {
  const std::size_t n = variety.ring().nvars() - 1;
  if (!dim_x) return derived_codim(variety);
  if (*dim_x >= n) throw Error(ErrorCode::BadCodimension, "dim X must be below N");
  return n - *dim_x;
}

}  // namespace

std::vector<Polynomial> vanishing_linear_forms(const LineRep& line, const PolyRing& ring) {
  if (ring.nvars() != line.ambient_dim() + 1) throw Error(ErrorCode::ArityMismatch, "ring does not match the line");
  const QMatrix forms = line.matrix().nullspace();
  std::vector<Polynomial> out;
  for (std::size_t r = 0; r < forms.rows(); ++r) {
    Polynomial f(ring);
    for (std::size_t k = 0; k < forms.cols(); ++k)
      if (forms(r, k) != 0) f += forms(r, k) * Polynomial::variable(ring, k);
    out.push_back(std::move(f));
  }
  return out;
}

ConormalPresentation conormal_presentation(const Ideal& variety, const LineRep& line) {
  return conormal_presentation(variety, line, vanishing_linear_forms(line, variety.ring()));
}

ConormalPresentation conormal_presentation(const Ideal& variety, const LineRep& line,
                                           const std::vector<Polynomial>& ell_basis,
                                           const std::vector<std::size_t>& pivot_order) {
  const PolyRing& ring = variety.ring();
  const std::size_t nv = ring.nvars();
  if (nv != line.ambient_dim() + 1) throw Error(ErrorCode::ArityMismatch, "ring does not match the line");
  if (!line_on_variety(variety, line)) throw Error(ErrorCode::LineNotOnVariety, line.to_string());
  const std::size_t m = ell_basis.size();
  if (m != nv - 2) throw Error(ErrorCode::InvalidArgument, "a line in P^N needs N-1 linear forms");

  std::vector<std::size_t> perm = pivot_order;
  if (perm.empty()) {
    perm.resize(nv);
    std::iota(perm.begin(), perm.end(), 0);
  }
  {
    auto sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t k = 0; k < nv; ++k)
      if (sorted.size() != nv || sorted[k] != k) throw Error(ErrorCode::InvalidArgument, "pivot order is not a permutation");
  }

  const LineParam psi = line_param(line);
  for (const auto& ell : ell_basis)
    if (!substitute_line(ell.remap(ring), psi).is_zero())
      throw Error(ErrorCode::InvalidArgument, ell.to_string() + " does not vanish on the line");

  // [E' | I] in echelon form gives rows T E' with T recorded on the right.
  QMatrix aug(m, nv + m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto c = linear_coefficients(ell_basis[i].remap(ring), nv);
    for (std::size_t k = 0; k < nv; ++k) aug(i, k) = c[perm[k]];
    aug(i, nv + i) = 1;
  }
  std::vector<std::size_t> pivots;
  const QMatrix reduced = aug.rref(&pivots);
  if (pivots.size() < m || pivots[m - 1] >= nv)
    throw Error(ErrorCode::InvalidArgument, "linear forms are not independent");

  // Division ring: variables in pivot order, lex, so each echelon form leads
  // with its pivot variable.
  std::vector<std::string> names;
  for (auto k : perm) names.push_back(ring.name(k));
  const PolyRing div_ring(names, MonomialOrder::lex());
  std::vector<Polynomial> echelon;
  for (std::size_t i = 0; i < m; ++i) {
    Polynomial f(div_ring);
    for (std::size_t k = 0; k < nv; ++k)
      if (reduced(i, k) != 0) f += reduced(i, k) * Polynomial::variable(div_ring, k);
    echelon.push_back(std::move(f));
  }

  std::vector<int> col_degrees;
  std::vector<std::vector<Polynomial>> entries(m);
  for (const auto& f : variety.generators()) {
    const Division div = divide(f.remap(div_ring), echelon);
    if (!div.remainder.is_zero())
      throw Error(ErrorCode::NonzeroRemainder, f.to_string() + " leaves remainder " + div.remainder.to_string());
    col_degrees.push_back(f.total_degree());
    // F = sum_i B_i ech_i with ech_i = sum_k T_ik ell_k, so A_k = sum_i T_ik B_i.
    for (std::size_t k = 0; k < m; ++k) {
      Polynomial a(ring);
      for (std::size_t i = 0; i < m; ++i) {
        const Rational& tik = reduced(i, nv + k);
        if (tik != 0) a += tik * div.quotients[i].remap(ring);
      }
      entries[k].push_back(substitute_line(a, psi));
    }
  }
  std::vector<int> row_degrees(m, 1);
  std::vector<Polynomial> ell;
  for (const auto& e : ell_basis) ell.push_back(e.remap(ring));
  return {line, std::move(ell), GradedMatrix(std::move(row_degrees), std::move(col_degrees), std::move(entries))};
}

SplittingType normal_bundle_splitting(const Ideal& variety, const LineRep& line, std::optional<std::size_t> dim_x) {
  if (variety.ring().nvars() != line.ambient_dim() + 1) throw Error(ErrorCode::ArityMismatch, "ring does not match the line");
  if (!line_on_variety(variety, line)) throw Error(ErrorCode::LineNotOnVariety, line.to_string());
  const std::size_t codim = resolve_codim(variety, dim_x);
  const std::size_t rank = generic_jacobian_rank(variety, line);
  if (rank < codim)
    throw Error(ErrorCode::LineInSingularLocus,
                "Jacobian rank " + std::to_string(rank) + " < codim " + std::to_string(codim) + " along " + line.to_string());
  return dual_splitting(conormal_presentation(variety, line).matrix);
}

TheoremCheck theorem_check(const Ideal& variety, const LineRep& line, std::optional<std::size_t> dim_x) {
  const std::size_t codim = resolve_codim(variety, dim_x);
  const std::size_t dim = variety.ring().nvars() - 1 - codim;
  TheoremCheck check;
  check.dim_x = dim;
  check.gauss = gauss_constant_on_line(variety, line, codim);
  check.splitting = normal_bundle_splitting(variety, line, dim);
  check.splitting_all_ones =
      check.splitting.rank() == dim - 1 &&
      std::all_of(check.splitting.degrees.begin(), check.splitting.degrees.end(), [](int a) { return a == 1; });
  check.consistent = check.gauss.constant == check.splitting_all_ones;
  return check;
}

}  // namespace gaussfano
