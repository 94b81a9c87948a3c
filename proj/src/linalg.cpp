#include "gaussfano/linalg.hpp"

#include <utility>

#include "gaussfano/errors.hpp"

namespace gaussfano {

QMatrix::QMatrix(const std::vector<std::vector<Rational>>& rows) {
  rows_ = rows.size();
  cols_ = rows.empty() ? 0 : rows[0].size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorCode::InvalidArgument, "ragged matrix");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

std::vector<Rational> QMatrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

QMatrix QMatrix::rref(std::vector<std::size_t>* pivots) const {
  QMatrix m = *this;
  std::vector<std::size_t> piv;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < cols_ && lead_row < rows_; ++c) {
    std::size_t p = lead_row;
    while (p < rows_ && m(p, c) == 0) ++p;
    if (p == rows_) continue;
    if (p != lead_row)
      for (std::size_t j = 0; j < cols_; ++j) std::swap(m(p, j), m(lead_row, j));
    const Rational inv = 1 / m(lead_row, c);
    for (std::size_t j = c; j < cols_; ++j) m(lead_row, j) *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == lead_row || m(i, c) == 0) continue;
      const Rational f = m(i, c);
      for (std::size_t j = c; j < cols_; ++j) m(i, j) -= f * m(lead_row, j);
    }
    piv.push_back(c);
    ++lead_row;
  }
  QMatrix out(lead_row, cols_);
  for (std::size_t i = 0; i < lead_row; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = m(i, j);
  if (pivots) *pivots = std::move(piv);
  return out;
}

std::size_t QMatrix::rank() const { return rref().rows(); }

QMatrix QMatrix::nullspace() const {
  std::vector<std::size_t> piv;
  const QMatrix r = rref(&piv);
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(cols_, Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r(i, f);
    basis.push_back(std::move(v));
  }
  if (basis.empty()) return QMatrix(0, cols_);
  return QMatrix(basis).rref();
}

QMatrix QMatrix::transposed() const {
  QMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

std::size_t generic_rank(const std::vector<std::vector<Polynomial>>& matrix) {
  if (matrix.empty()) return 0;
  auto m = matrix;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  const PolyRing& ring = m[0].empty() ? PolyRing() : m[0][0].ring();
  Polynomial prev = Polynomial::constant(ring, Rational(1));
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Polynomial num = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        auto q = num.divide_exact(prev);
        if (!q) throw Error(ErrorCode::NonzeroRemainder, "Bareiss step not exact");
        m[i][j] = std::move(*q);
      }
      m[i][c] = Polynomial(ring);
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

Polynomial determinant(const std::vector<std::vector<Polynomial>>& matrix, const PolyRing& ring) {
  const std::size_t n = matrix.size();
  if (n == 0) return Polynomial::constant(ring, Rational(1));
  if (n == 1) return matrix[0][0];
  Polynomial det(ring);
  for (std::size_t c = 0; c < n; ++c) {
    if (matrix[0][c].is_zero()) continue;
    std::vector<std::vector<Polynomial>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Polynomial> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(matrix[i][j]);
      minor.push_back(std::move(row));
    }
    Polynomial term = matrix[0][c] * determinant(minor, ring);
    if (c % 2 == 0)
      det += term;
    else
      det -= term;
  }
  return det;
}

}  // namespace gaussfano
