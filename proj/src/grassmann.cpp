#include "gaussfano/grassmann.hpp"

#include <sstream>

#include "gaussfano/errors.hpp"

namespace gaussfano {

// ------------------------------------------------------------------- Chart

Chart::Chart(std::size_t n, std::size_t first, std::size_t second) : n_(n), identity_{first, second} {
  if (n < 1 || first >= second || second > n)
    throw Error(ErrorCode::InvalidArgument, "bad chart columns for N = " + std::to_string(n));
  for (std::size_t c = 0; c <= n; ++c)
    if (c != first && c != second) free_.push_back(c);
  std::vector<std::string> names;
  for (int row = 1; row <= 2; ++row)
    for (std::size_t k = 1; k <= free_.size(); ++k) names.push_back("a" + std::to_string(row) + "_" + std::to_string(k));
  ring_ = PolyRing(std::move(names));
}

Chart Chart::from_label(std::size_t n, const std::string& label) {
  auto comma = label.find(',');
  auto bad = [&] { return Error(ErrorCode::InvalidArgument, "chart label '" + label + "' is not of the form I,J"); };
  if (comma == std::string::npos) throw bad();
  std::size_t i = 0, j = 0;
  try {
    std::size_t used = 0;
    i = std::stoul(label.substr(0, comma), &used);
    if (used != comma) throw bad();
    std::string rest = label.substr(comma + 1);
    j = std::stoul(rest, &used);
    if (used != rest.size()) throw bad();
  } catch (const std::logic_error&) {
    throw bad();
  }
  if (i < 1 || j < 1 || i > n + 1 || j > n + 1 || i == j)
    throw Error(ErrorCode::InvalidArgument, "chart label '" + label + "' out of range for N = " + std::to_string(n));
  if (i > j) std::swap(i, j);
  return Chart(n, i - 1, j - 1);
}

std::string Chart::label() const { return std::to_string(identity_[0] + 1) + "," + std::to_string(identity_[1] + 1); }

QMatrix Chart::matrix_at(const std::vector<Rational>& coords) const {
  if (coords.size() != num_coords()) throw Error(ErrorCode::ArityMismatch, "wrong number of chart coordinates");
  QMatrix m(2, n_ + 1);
  m(0, identity_[0]) = 1;
  m(1, identity_[1]) = 1;
  const std::size_t k = free_.size();
  for (std::size_t f = 0; f < k; ++f) {
    m(0, free_[f]) = coords[f];
    m(1, free_[f]) = coords[k + f];
  }
  return m;
}

std::vector<Chart> charts(std::size_t n) {
  std::vector<Chart> out;
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) out.emplace_back(n, i, j);
  return out;
}

// ----------------------------------------------------------------- LineRep

LineRep LineRep::from_rows(const std::vector<std::vector<Rational>>& rows) {
  if (rows.size() != 2) throw Error(ErrorCode::InvalidArgument, "a line needs exactly two rows");
  if (rows[0].size() != rows[1].size() || rows[0].size() < 2)
    throw Error(ErrorCode::ArityMismatch, "line rows must have equal length >= 2");
  QMatrix r = QMatrix(rows).rref();
  if (r.rows() != 2) throw Error(ErrorCode::CoincidentPoints, "rows do not span a line");
  return LineRep(std::move(r));
}

std::vector<Rational> LineRep::point(const Rational& s, const Rational& t) const {
  std::vector<Rational> p(m_.cols());
  for (std::size_t k = 0; k < m_.cols(); ++k) p[k] = s * m_(0, k) + t * m_(1, k);
  return p;
}

std::string LineRep::to_string() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t r = 0; r < 2; ++r) {
    out << (r ? "; " : "") << "(";
    for (std::size_t c = 0; c < m_.cols(); ++c) out << (c ? "," : "") << m_(r, c).get_str();
    out << ")";
  }
  out << "]";
  return out.str();
}

LineRep line_through(const std::vector<Rational>& p, const std::vector<Rational>& q) {
  return LineRep::from_rows({p, q});
}

std::optional<std::vector<Rational>> localize(const LineRep& line, const Chart& chart) {
  if (line.ambient_dim() != chart.ambient_dim()) throw Error(ErrorCode::ArityMismatch, "line and chart dimensions differ");
  const QMatrix& m = line.matrix();
  const auto [c0, c1] = chart.identity_cols();
  const Rational a = m(0, c0), b = m(0, c1), c = m(1, c0), d = m(1, c1);
  const Rational det = a * d - b * c;
  if (det == 0) return std::nullopt;
  // Z = M^{-1} * line, where M is the minor on the identity columns.
  const Rational i00 = d / det, i01 = -b / det, i10 = -c / det, i11 = a / det;
  const auto& free = chart.free_cols();
  std::vector<Rational> coords(2 * free.size());
  for (std::size_t f = 0; f < free.size(); ++f) {
    coords[f] = i00 * m(0, free[f]) + i01 * m(1, free[f]);
    coords[free.size() + f] = i10 * m(0, free[f]) + i11 * m(1, free[f]);
  }
  return coords;
}

// --------------------------------------------------------------- LineParam

const PolyRing& st_ring() {
  static const PolyRing ring({"s", "t"});
  return ring;
}

namespace {

Polynomial st_coefficient(const LineParam& psi, std::size_t k, std::size_t which) {
  const PolyRing params = psi.ring.without_last(2);
  std::vector<Term> out;
  const std::size_t np = params.nvars();
  for (const auto& t : psi.images.at(k).terms()) {
    if (t.mono[np + which] != 1) continue;
    std::vector<std::uint32_t> e(t.mono.exponents().begin(), t.mono.exponents().begin() + static_cast<std::ptrdiff_t>(np));
    out.push_back({t.coeff, Monomial(std::move(e))});
  }
  return Polynomial::from_terms(params, std::move(out));
}

}  // namespace

Polynomial LineParam::alpha(std::size_t k) const { return st_coefficient(*this, k, 0); }
Polynomial LineParam::beta(std::size_t k) const { return st_coefficient(*this, k, 1); }

LineParam chart_param(const Chart& chart) {
  const PolyRing ring = chart.ring().appended({"s", "t"});
  const std::size_t np = chart.num_coords();
  const Polynomial s = Polynomial::variable(ring, np);
  const Polynomial t = Polynomial::variable(ring, np + 1);
  std::vector<Polynomial> images(chart.ambient_dim() + 1, Polynomial(ring));
  images[chart.identity_cols()[0]] = s;
  images[chart.identity_cols()[1]] = t;
  const auto& free = chart.free_cols();
  for (std::size_t f = 0; f < free.size(); ++f) {
    images[free[f]] = Polynomial::variable(ring, f) * s + Polynomial::variable(ring, free.size() + f) * t;
  }
  return {ring, std::move(images)};
}

LineParam line_param(const LineRep& line) {
  const PolyRing& ring = st_ring();
  const Polynomial s = Polynomial::variable(ring, 0);
  const Polynomial t = Polynomial::variable(ring, 1);
  const QMatrix& m = line.matrix();
  std::vector<Polynomial> images;
  for (std::size_t k = 0; k < m.cols(); ++k) images.push_back(m(0, k) * s + m(1, k) * t);
  return {ring, std::move(images)};
}

LineParam specialize(const LineParam& psi, const std::vector<Rational>& values) {
  if (values.size() != psi.num_params()) throw Error(ErrorCode::ArityMismatch, "wrong number of parameter values");
  const PolyRing& target = st_ring();
  std::vector<Polynomial> subst;
  for (const auto& v : values) subst.push_back(Polynomial::constant(target, v));
  subst.push_back(Polynomial::variable(target, 0));
  subst.push_back(Polynomial::variable(target, 1));
  std::vector<Polynomial> images;
  for (const auto& im : psi.images) images.push_back(im.substitute(subst, target));
  return {target, std::move(images)};
}

Polynomial substitute_line(const Polynomial& f, const LineParam& psi) {
  if (f.ring().nvars() != psi.images.size())
    throw Error(ErrorCode::ArityMismatch, "polynomial has " + std::to_string(f.ring().nvars()) +
                                              " variables but the line lives in P^" +
                                              std::to_string(psi.images.size() - 1));
  return f.substitute(psi.images, psi.ring);
}

std::vector<Polynomial> st_coefficients(const Polynomial& p) {
  const PolyRing& ring = p.ring();
  if (ring.nvars() < 2) throw Error(ErrorCode::ArityMismatch, "ring has no (s, t) variables");
  const std::size_t si = ring.nvars() - 2, ti = ring.nvars() - 1;
  const PolyRing coeff_ring = ring.without_last(2);
  if (p.is_zero()) return {};

  const std::uint32_t deg = p.terms().front().mono[si] + p.terms().front().mono[ti];
  std::vector<std::vector<Term>> buckets(deg + 1);
  for (const auto& t : p.terms()) {
    if (t.mono[si] + t.mono[ti] != deg) throw Error(ErrorCode::NotHomogeneousInST, p.to_string());
    std::vector<std::uint32_t> e(t.mono.exponents().begin(), t.mono.exponents().begin() + static_cast<std::ptrdiff_t>(si));
    buckets[t.mono[si]].push_back({t.coeff, Monomial(std::move(e))});
  }
  std::vector<Polynomial> out;
  for (std::size_t i = deg + 1; i-- > 0;) {
    if (buckets[i].empty()) continue;
    Polynomial c = Polynomial::from_terms(coeff_ring, std::move(buckets[i]));
    if (!c.is_zero()) out.push_back(std::move(c));
  }
  return out;
}

}  // namespace gaussfano
