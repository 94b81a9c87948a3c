#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gaussfano/linalg.hpp"
#include "gaussfano/ring.hpp"

namespace gaussfano {

/// Affine chart of G(2, N+1): 2x(N+1) matrices whose columns in
/// `identity_cols` form the 2x2 identity.  The remaining columns
/// (`free_cols`, ascending) carry the coordinates, named a1_k for the first
/// row and a2_k for the second, k = 1..N-1.  Column indices are 0-based;
/// externally a chart is addressed by its 1-based identity pair "i,j".
///
/// The cone example's chart with rows (1, a, b, 0), (0, c, d, 1) is the
/// chart "1,4", with a = a1_1, b = a1_2, c = a2_1, d = a2_2.
class Chart {
 public:
  /// Throws InvalidArgument unless 0 <= first < second <= N.
  Chart(std::size_t n, std::size_t first, std::size_t second);

  /// Parse a 1-based pair such as "1,4".
  static Chart from_label(std::size_t n, const std::string& label);

  std::size_t ambient_dim() const { return n_; }
  const std::array<std::size_t, 2>& identity_cols() const { return identity_; }
  const std::vector<std::size_t>& free_cols() const { return free_; }
  /// 1-based identity pair, e.g. "1,4".
  std::string label() const;
  /// Coordinate ring of the chart (degrevlex, a1_* then a2_*).
  const PolyRing& ring() const { return ring_; }
  std::size_t num_coords() const { return ring_.nvars(); }

  /// The matrix of the chart point with the given coordinates.
  QMatrix matrix_at(const std::vector<Rational>& coords) const;

  bool operator==(const Chart& other) const { return n_ == other.n_ && identity_ == other.identity_; }

 private:
  std::size_t n_;
  std::array<std::size_t, 2> identity_;
  std::vector<std::size_t> free_;
  PolyRing ring_;
};

/// All C(N+1, 2) charts ordered lexicographically by identity pair.
std::vector<Chart> charts(std::size_t n);

/// A line of P^N as the reduced row echelon form of a rank-2 2x(N+1)
/// matrix; equal lines have equal representatives.
class LineRep {
 public:
  /// Throws CoincidentPoints when the rows do not span a plane.
  static LineRep from_rows(const std::vector<std::vector<Rational>>& rows);

  const QMatrix& matrix() const { return m_; }
  std::size_t ambient_dim() const { return m_.cols() - 1; }
  /// Row-space point s*row0 + t*row1.
  std::vector<Rational> point(const Rational& s, const Rational& t) const;
  std::string to_string() const;

  bool operator==(const LineRep& other) const { return m_ == other.m_; }

 private:
  explicit LineRep(QMatrix m) : m_(std::move(m)) {}
  QMatrix m_;
};

LineRep line_through(const std::vector<Rational>& p, const std::vector<Rational>& q);

/// Chart coordinates of L in C, or nullopt when the minor on C's identity
/// columns is singular.
std::optional<std::vector<Rational>> localize(const LineRep& line, const Chart& chart);

/// psi(x_k) = alpha_k * s + beta_k * t for k = 0..N.  The images live in a
/// ring whose last two variables are s and t; any earlier variables are
/// chart coordinates (symbolic parametrization).
struct LineParam {
  PolyRing ring;
  std::vector<Polynomial> images;

  std::size_t num_params() const { return ring.nvars() - 2; }
  /// alpha_k (the s-coefficient) or beta_k (the t-coefficient) as a
  /// polynomial in the parameter variables.
  Polynomial alpha(std::size_t k) const;
  Polynomial beta(std::size_t k) const;
};

/// Symbolic parametrization of the lines in a chart: s follows the first
/// matrix row and t the second.
LineParam chart_param(const Chart& chart);

/// Parametrization of a concrete line over the ring k[s, t].
LineParam line_param(const LineRep& line);

/// Substitute rational values for the parameter variables of `psi`.
LineParam specialize(const LineParam& psi, const std::vector<Rational>& values);

/// The ring k[s, t] used for concrete line parametrizations.
const PolyRing& st_ring();

/// F(psi(x_0), ..., psi(x_N)).  Throws ArityMismatch when F's ring does not
/// have N+1 variables.
Polynomial substitute_line(const Polynomial& f, const LineParam& psi);

/// Coefficients of s^i t^(d-i), i descending, zero ones omitted, as
/// polynomials in the ring without s and t.  Throws NotHomogeneousInST.
std::vector<Polynomial> st_coefficients(const Polynomial& p);

}  // namespace gaussfano
