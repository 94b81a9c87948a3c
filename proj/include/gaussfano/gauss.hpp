#pragma once

#include <optional>
#include <vector>

#include "gaussfano/grassmann.hpp"
#include "gaussfano/groebner.hpp"

namespace gaussfano {

/// Rows = generators of I_X, columns = variables.
std::vector<std::vector<Polynomial>> jacobian_matrix(const Ideal& variety);

/// N - dim X, with dim X = (affine dimension of I_X) - 1.
std::size_t derived_codim(const Ideal& variety, Budget budget = Budget::standard());

/// I_X plus every codim x codim minor of the Jacobian.  For a hypersurface
/// this is F followed by its nonzero partial derivatives.  Throws
/// BadCodimension unless 1 <= codim <= N.
Ideal singular_scheme_ideal(const Ideal& variety, std::size_t codim);

struct TangentSpaceReport {
  std::vector<Rational> point;
  /// Linear forms cutting out the embedded tangent space (RREF of the
  /// Jacobian rows at the point).
  std::vector<Polynomial> conormal_basis;
  std::size_t rank = 0;
  bool smooth = false;
};

/// Throws PointNotOnVariety.
TangentSpaceReport tangent_space(const Ideal& variety, const std::vector<Rational>& point, std::size_t codim);

struct GaussConstancyResult {
  bool constant = false;
  std::size_t generic_rank = 0;
  std::size_t coefficient_span_dim = 0;
  /// Present iff constant: a basis of the span of all coefficient vectors.
  std::optional<std::vector<Polynomial>> common_conormal;
};

/// Rank of the Jacobian restricted to the line, over k(s, t).
std::size_t generic_jacobian_rank(const Ideal& variety, const LineRep& line);

/// The Gauss map is constant along L iff the span of the (s, t)-coefficient
/// vectors of the restricted Jacobian rows has dimension equal to the
/// generic rank.  Throws LineNotOnVariety, or LineInSingularLocus when the
/// generic rank along L is below codim.
GaussConstancyResult gauss_constant_on_line(const Ideal& variety, const LineRep& line, std::size_t codim);

}  // namespace gaussfano
