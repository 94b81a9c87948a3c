#pragma once

#include <cstddef>
#include <vector>

#include "gaussfano/rational.hpp"
#include "gaussfano/ring.hpp"

namespace gaussfano {

/// Dense row-major matrix over the rationals.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}
  explicit QMatrix(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::vector<Rational> row(std::size_t r) const;

  /// Reduced row echelon form with zero rows removed; pivot columns are
  /// written to `pivots` when non-null.
  QMatrix rref(std::vector<std::size_t>* pivots = nullptr) const;
  std::size_t rank() const;
  /// Basis of {x : A x = 0}, one vector per free column, as rows of the
  /// result (which is itself in reduced row echelon form).
  QMatrix nullspace() const;
  QMatrix transposed() const;

  bool operator==(const QMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Rank of a polynomial matrix over the fraction field of its ring
/// (fraction-free Bareiss elimination).
std::size_t generic_rank(const std::vector<std::vector<Polynomial>>& matrix);

/// Determinant of a square polynomial matrix by cofactor expansion.
Polynomial determinant(const std::vector<std::vector<Polynomial>>& matrix, const PolyRing& ring);

}  // namespace gaussfano
