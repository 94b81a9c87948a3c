#pragma once

#include <string>
#include <vector>

#include "gaussfano/linalg.hpp"
#include "gaussfano/ring.hpp"

namespace gaussfano {

/// Homogeneous map phi: ⊕_j S(-c_j) -> ⊕_i S(-r_i) over S = k[s, t].
/// Entry (i, j) is zero or homogeneous of degree c_j - r_i.
class GradedMatrix {
 public:
  GradedMatrix() = default;
  /// Entries must live in st_ring(); throws InvalidArgument on a degree
  /// mismatch.
  GradedMatrix(std::vector<int> row_degrees, std::vector<int> col_degrees, std::vector<std::vector<Polynomial>> entries);
  static GradedMatrix zero(std::vector<int> row_degrees, std::vector<int> col_degrees);

  std::size_t rows() const { return row_degrees_.size(); }
  std::size_t cols() const { return col_degrees_.size(); }
  const std::vector<int>& row_degrees() const { return row_degrees_; }
  const std::vector<int>& col_degrees() const { return col_degrees_; }
  const Polynomial& entry(std::size_t i, std::size_t j) const { return entries_[i][j]; }
  const std::vector<std::vector<Polynomial>>& entries() const { return entries_; }

  /// phi^T : ⊕_i S(r_i) -> ⊕_j S(c_j), presenting Hom(-, S).
  GradedMatrix transpose_dual() const;
  /// this ∘ other; requires col_degrees() == other.row_degrees().
  GradedMatrix compose(const GradedMatrix& other) const;

  /// The k-linear map in degree d between the monomial bases of source and
  /// target (columns index source basis, rows index target basis).
  QMatrix degree_slice(int d) const;
  int source_dim(int d) const;
  int target_dim(int d) const;

  std::string to_string() const;

 private:
  std::vector<int> row_degrees_;
  std::vector<int> col_degrees_;
  std::vector<std::vector<Polynomial>> entries_;
};

/// Multiset of twists a_1 >= a_2 >= ... of ⊕ O(a_i) on P^1.
struct SplittingType {
  std::vector<int> degrees;

  static SplittingType from_unsorted(std::vector<int> degrees);
  std::size_t rank() const { return degrees.size(); }
  int degree() const;
  std::string to_string() const;
  bool operator==(const SplittingType&) const = default;
};

/// dim_k S_d.
int graded_piece_dim(int d);

/// dim_k (coker phi)_d.
int hilbert_function(const GradedMatrix& phi, int d);

/// dim_k (ker phi)_d.
int kernel_dimension(const GradedMatrix& phi, int d);

/// Rank of phi over k(s, t).
std::size_t generic_rank(const GradedMatrix& phi);

/// Matrix whose columns freely generate ker phi, in ascending degree.  The
/// result is checked (phi * K = 0, Hilbert function match over a window of
/// three degrees and at two later degrees); a failed check throws
/// VerificationWindowMismatch.
GradedMatrix kernel_free_basis(const GradedMatrix& phi);

/// Splitting type of Hom((coker phi)~, O) on P^1, read off from the free
/// module ker(phi^T).
SplittingType dual_splitting(const GradedMatrix& phi);

}  // namespace gaussfano
