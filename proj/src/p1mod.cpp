#include "gaussfano/p1mod.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "gaussfano/errors.hpp"
#include "gaussfano/grassmann.hpp"

namespace gaussfano {

int graded_piece_dim(int d) { return d < 0 ? 0 : d + 1; }

// ------------------------------------------------------------ GradedMatrix

GradedMatrix::GradedMatrix(std::vector<int> row_degrees, std::vector<int> col_degrees,
                           std::vector<std::vector<Polynomial>> entries)
    : row_degrees_(std::move(row_degrees)), col_degrees_(std::move(col_degrees)), entries_(std::move(entries)) {
  if (entries_.size() != row_degrees_.size()) throw Error(ErrorCode::InvalidArgument, "row count mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].size() != col_degrees_.size()) throw Error(ErrorCode::InvalidArgument, "column count mismatch");
    for (std::size_t j = 0; j < entries_[i].size(); ++j) {
      Polynomial& e = entries_[i][j];
      if (!e.ring().same_variables(st_ring()))
        throw Error(ErrorCode::RingMismatch, "graded matrix entries must lie in k[s, t]");
      e = e.remap(st_ring());
      if (e.is_zero()) continue;
      const int want = col_degrees_[j] - row_degrees_[i];
      if (!e.is_homogeneous() || e.total_degree() != want)
        throw Error(ErrorCode::InvalidArgument, "entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " +
                                                    e.to_string() + " must be homogeneous of degree " +
                                                    std::to_string(want));
    }
  }
}

GradedMatrix GradedMatrix::zero(std::vector<int> row_degrees, std::vector<int> col_degrees) {
  std::vector<std::vector<Polynomial>> entries(row_degrees.size(),
                                               std::vector<Polynomial>(col_degrees.size(), Polynomial(st_ring())));
  return GradedMatrix(std::move(row_degrees), std::move(col_degrees), std::move(entries));
}

GradedMatrix GradedMatrix::transpose_dual() const {
  std::vector<int> rows, cols;
  for (int c : col_degrees_) rows.push_back(-c);
  for (int r : row_degrees_) cols.push_back(-r);
  std::vector<std::vector<Polynomial>> entries(col_degrees_.size(), std::vector<Polynomial>(row_degrees_.size()));
  for (std::size_t i = 0; i < row_degrees_.size(); ++i)
    for (std::size_t j = 0; j < col_degrees_.size(); ++j) entries[j][i] = entries_[i][j];
  return GradedMatrix(std::move(rows), std::move(cols), std::move(entries));
}

GradedMatrix GradedMatrix::compose(const GradedMatrix& other) const {
  if (col_degrees_ != other.row_degrees_) throw Error(ErrorCode::InvalidArgument, "incompatible graded matrices");
  std::vector<std::vector<Polynomial>> entries(rows(), std::vector<Polynomial>(other.cols(), Polynomial(st_ring())));
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t k = 0; k < other.cols(); ++k)
      for (std::size_t j = 0; j < cols(); ++j) entries[i][k] += entries_[i][j] * other.entries_[j][k];
  return GradedMatrix(row_degrees_, other.col_degrees_, std::move(entries));
}

int GradedMatrix::source_dim(int d) const {
  int n = 0;
  for (int c : col_degrees_) n += graded_piece_dim(d - c);
  return n;
}

int GradedMatrix::target_dim(int d) const {
  int n = 0;
  for (int r : row_degrees_) n += graded_piece_dim(d - r);
  return n;
}

// Basis of S_e is s^e, s^(e-1) t, ..., t^e; s^a t^(e-a) sits at position e - a.
QMatrix GradedMatrix::degree_slice(int d) const {
  std::vector<int> row_offset(rows() + 1, 0), col_offset(cols() + 1, 0);
  for (std::size_t i = 0; i < rows(); ++i) row_offset[i + 1] = row_offset[i] + graded_piece_dim(d - row_degrees_[i]);
  for (std::size_t j = 0; j < cols(); ++j) col_offset[j + 1] = col_offset[j] + graded_piece_dim(d - col_degrees_[j]);
  QMatrix m(static_cast<std::size_t>(row_offset.back()), static_cast<std::size_t>(col_offset.back()));
  for (std::size_t j = 0; j < cols(); ++j) {
    const int e = d - col_degrees_[j];
    for (int a = e; a >= 0; --a) {
      const std::size_t col = static_cast<std::size_t>(col_offset[j] + (e - a));
      for (std::size_t i = 0; i < rows(); ++i) {
        const int target_e = d - row_degrees_[i];
        for (const auto& t : entries_[i][j].terms()) {
          const int sa = static_cast<int>(t.mono[0]) + a;
          m(static_cast<std::size_t>(row_offset[i] + (target_e - sa)), col) += t.coeff;
        }
      }
    }
  }
  return m;
}

std::string GradedMatrix::to_string() const {
  std::ostringstream out;
  out << "rows(";
  for (std::size_t i = 0; i < rows(); ++i) out << (i ? "," : "") << row_degrees_[i];
  out << ") cols(";
  for (std::size_t j = 0; j < cols(); ++j) out << (j ? "," : "") << col_degrees_[j];
  out << ") [";
  for (std::size_t i = 0; i < rows(); ++i) {
    out << (i ? "; " : "");
    for (std::size_t j = 0; j < cols(); ++j) out << (j ? ", " : "") << entries_[i][j].to_string();
  }
  out << "]";
  return out.str();
}

// ----------------------------------------------------------- SplittingType

SplittingType SplittingType::from_unsorted(std::vector<int> degrees) {
  std::sort(degrees.begin(), degrees.end(), std::greater<>());
  return {std::move(degrees)};
}

int SplittingType::degree() const { return std::accumulate(degrees.begin(), degrees.end(), 0); }

std::string SplittingType::to_string() const {
  if (degrees.empty()) return "0";
  std::ostringstream out;
  for (std::size_t i = 0; i < degrees.size(); ++i) out << (i ? " + " : "") << "O(" << degrees[i] << ")";
  return out.str();
}

// ------------------------------------------------------------------ kernel

int hilbert_function(const GradedMatrix& phi, int d) {
  return phi.target_dim(d) - static_cast<int>(phi.degree_slice(d).rank());
}

int kernel_dimension(const GradedMatrix& phi, int d) {
  return phi.source_dim(d) - static_cast<int>(phi.degree_slice(d).rank());
}

std::size_t generic_rank(const GradedMatrix& phi) { return generic_rank(phi.entries()); }

namespace {

Polynomial st_monomial(int a, int b) {
  return Polynomial::term(st_ring(), Rational(1), Monomial(std::vector<std::uint32_t>{static_cast<std::uint32_t>(a),
                                                                                        static_cast<std::uint32_t>(b)}));
}

// Coordinates of a source element (one polynomial per column, the column
// entries of degree d - c_j) in the degree-d source basis.
std::vector<Rational> source_coords(const GradedMatrix& phi, const std::vector<Polynomial>& element, int d) {
  std::vector<Rational> v;
  v.reserve(static_cast<std::size_t>(phi.source_dim(d)));
  for (std::size_t j = 0; j < phi.cols(); ++j) {
    const int e = d - phi.col_degrees()[j];
    if (e < 0) continue;
    std::vector<Rational> block(static_cast<std::size_t>(e + 1), Rational(0));
    for (const auto& t : element[j].terms()) block[static_cast<std::size_t>(e - static_cast<int>(t.mono[0]))] = t.coeff;
    v.insert(v.end(), block.begin(), block.end());
  }
  return v;
}

std::vector<Polynomial> source_element(const GradedMatrix& phi, const std::vector<Rational>& v, int d) {
  std::vector<Polynomial> element(phi.cols(), Polynomial(st_ring()));
  std::size_t pos = 0;
  for (std::size_t j = 0; j < phi.cols(); ++j) {
    const int e = d - phi.col_degrees()[j];
    for (int a = e; a >= 0; --a, ++pos)
      if (v[pos] != 0) element[j] += v[pos] * st_monomial(a, e - a);
  }
  return element;
}

struct Generator {
  int degree;
  std::vector<Polynomial> column;
};

int free_dim(const std::vector<Generator>& gens, int d) {
  int n = 0;
  for (const auto& g : gens) n += graded_piece_dim(d - g.degree);
  return n;
}

// Rows spanning the degree-d part of the submodule generated by gens.
std::vector<std::vector<Rational>> submodule_slice(const GradedMatrix& phi, const std::vector<Generator>& gens, int d) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& g : gens) {
    const int e = d - g.degree;
    for (int a = e; a >= 0; --a) {
      const Polynomial m = st_monomial(a, e - a);
      std::vector<Polynomial> shifted;
      for (const auto& p : g.column) shifted.push_back(m * p);
      rows.push_back(source_coords(phi, shifted, d));
    }
  }
  return rows;
}

std::size_t span_rank(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) return 0;
  return QMatrix(rows).rank();
}

}  // namespace

GradedMatrix kernel_free_basis(const GradedMatrix& phi) {
  const std::size_t kernel_rank = phi.cols() - generic_rank(phi);
  std::vector<Generator> gens;

  if (kernel_rank > 0) {
    const int min_col = *std::min_element(phi.col_degrees().begin(), phi.col_degrees().end());
    const int max_col = *std::max_element(phi.col_degrees().begin(), phi.col_degrees().end());
    int max_entry = 0;
    for (std::size_t i = 0; i < phi.rows(); ++i)
      for (std::size_t j = 0; j < phi.cols(); ++j)
        if (!phi.entry(i, j).is_zero()) max_entry = std::max(max_entry, phi.col_degrees()[j] - phi.row_degrees()[i]);
    // Kernel generators are built from minors of phi, which bounds their degree.
    const int limit = max_col + static_cast<int>(phi.rows() + 1) * (max_entry + 1) + 2;

    for (int d = min_col; gens.size() < kernel_rank; ++d) {
      if (d > limit)
        throw Error(ErrorCode::VerificationWindowMismatch, "kernel generators not found below degree " +
                                                               std::to_string(limit) + " for " + phi.to_string());
      const int kdim = kernel_dimension(phi, d);
      const int have = free_dim(gens, d);
      if (kdim == have) continue;
      if (kdim < have)
        throw Error(ErrorCode::VerificationWindowMismatch, "generated submodule exceeds the kernel in degree " +
                                                               std::to_string(d));
      auto span = submodule_slice(phi, gens, d);
      std::size_t rank = span_rank(span);
      if (static_cast<int>(rank) != have)
        throw Error(ErrorCode::VerificationWindowMismatch, "kernel generators are not free in degree " + std::to_string(d));
      const QMatrix kernel = phi.degree_slice(d).nullspace();
      for (std::size_t r = 0; r < kernel.rows() && static_cast<int>(rank) < kdim; ++r) {
        auto candidate = span;
        candidate.push_back(kernel.row(r));
        const std::size_t extended = span_rank(candidate);
        if (extended == rank) continue;
        span = std::move(candidate);
        rank = extended;
        gens.push_back({d, source_element(phi, kernel.row(r), d)});
      }
    }
  }

  std::vector<int> col_degrees;
  std::vector<std::vector<Polynomial>> entries(phi.cols());
  for (const auto& g : gens) {
    col_degrees.push_back(g.degree);
    for (std::size_t j = 0; j < phi.cols(); ++j) entries[j].push_back(g.column[j]);
  }
  GradedMatrix k(phi.col_degrees(), std::move(col_degrees), std::move(entries));

  // phi * K = 0 exactly.
  const GradedMatrix product = phi.compose(k);
  for (const auto& row : product.entries())
    for (const auto& e : row)
      if (!e.is_zero()) throw Error(ErrorCode::VerificationWindowMismatch, "phi * K is nonzero");

  // Hilbert function of the free module matches the kernel on the window.
  int top = gens.empty() ? (phi.cols() ? *std::max_element(phi.col_degrees().begin(), phi.col_degrees().end()) : 0)
                         : gens.back().degree;
  for (int d : {top, top + 1, top + 2, top + 5, top + 8}) {
    if (kernel_dimension(phi, d) != free_dim(gens, d))
      throw Error(ErrorCode::VerificationWindowMismatch, "Hilbert function mismatch in degree " + std::to_string(d));
  }
  return k;
}

SplittingType dual_splitting(const GradedMatrix& phi) {
  const GradedMatrix k = kernel_free_basis(phi.transpose_dual());
  std::vector<int> twists;
  for (int e : k.col_degrees()) twists.push_back(-e);
  return SplittingType::from_unsorted(std::move(twists));
}

}  // namespace gaussfano
