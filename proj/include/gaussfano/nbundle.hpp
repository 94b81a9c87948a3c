#pragma once

#include <optional>
#include <vector>

#include "gaussfano/gauss.hpp"
#include "gaussfano/grassmann.hpp"
#include "gaussfano/groebner.hpp"
#include "gaussfano/p1mod.hpp"

namespace gaussfano {

/// Presentation of the conormal module I_L / (I_L^2 + I_X) over k[s, t]:
/// generators are the linear forms ell_i (degree 1), relations are the
/// columns (A_1j|L, ..., A_{N-1}j|L) with F_j = sum_i A_ij ell_i.
struct ConormalPresentation {
  LineRep line;
  std::vector<Polynomial> ell_basis;
  GradedMatrix matrix;
};

/// Reduced row echelon basis of the linear forms vanishing on L.
std::vector<Polynomial> vanishing_linear_forms(const LineRep& line, const PolyRing& ring);

/// Uses the echelon basis of vanishing_linear_forms.  Throws
/// LineNotOnVariety.
ConormalPresentation conormal_presentation(const Ideal& variety, const LineRep& line);

/// Same, with a caller-chosen basis of the forms vanishing on L.  The
/// division F_j = sum A_ij ell_i is carried out after echelonizing the
/// basis with pivots chosen in `pivot_order` (a permutation of the
/// variable indices; empty means natural order).
ConormalPresentation conormal_presentation(const Ideal& variety, const LineRep& line,
                                           const std::vector<Polynomial>& ell_basis,
                                           const std::vector<std::size_t>& pivot_order = {});

/// Splitting type of N_{L/X}.  dim_x is dim X when known; otherwise it is
/// derived from the ideal.  Throws LineNotOnVariety or LineInSingularLocus.
SplittingType normal_bundle_splitting(const Ideal& variety, const LineRep& line,
                                      std::optional<std::size_t> dim_x = std::nullopt);

struct TheoremCheck {
  GaussConstancyResult gauss;
  SplittingType splitting;
  std::size_t dim_x = 0;
  /// splitting == [1, ..., 1] with dim_x - 1 entries.
  bool splitting_all_ones = false;
  /// gauss.constant == splitting_all_ones; false would expose a bug.
  bool consistent = false;
};

/// Runs the Gauss-map test and the normal-bundle computation
/// independently and compares the verdicts.
TheoremCheck theorem_check(const Ideal& variety, const LineRep& line, std::optional<std::size_t> dim_x = std::nullopt);

}  // namespace gaussfano
