#include "gaussfano/ring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "gaussfano/errors.hpp"

namespace gaussfano {

std::string to_string(const MonomialOrder& order) {
  switch (order.kind) {
    case OrderKind::Degrevlex: return "degrevlex";
    case OrderKind::Lex: return "lex";
    case OrderKind::Block: return "block(" + std::to_string(order.block) + ")";
  }
  return "?";
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {
  degree_ = std::accumulate(exps_.begin(), exps_.end(), std::uint32_t{0});
}

void Monomial::set(std::size_t i, std::uint32_t e) {
  degree_ = degree_ - exps_[i] + e;
  exps_[i] = e;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  Monomial q(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) q.exps_[i] -= divisor.exps_[i];
  q.degree_ -= divisor.degree_;
  return q;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial l(*this);
  l.degree_ = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    l.exps_[i] = std::max(exps_[i], other.exps_[i]);
    l.degree_ += l.exps_[i];
  }
  return l;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m(a);
  for (std::size_t i = 0; i < a.exps_.size(); ++i) m.exps_[i] += b.exps_[i];
  m.degree_ += b.degree_;
  return m;
}

// ---------------------------------------------------------------- PolyRing

struct PolyRing::Data {
  std::vector<std::string> names;
  MonomialOrder order;
  std::unordered_map<std::string, std::size_t> index;
};

namespace {

int degrevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  std::uint64_t da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace

PolyRing::PolyRing() : PolyRing(std::vector<std::string>{}) {}

PolyRing::PolyRing(std::vector<std::string> names, MonomialOrder order) {
  auto d = std::make_shared<Data>();
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i].empty()) throw Error(ErrorCode::InvalidArgument, "empty variable name");
    if (!d->index.emplace(names[i], i).second)
      throw Error(ErrorCode::InvalidArgument, "duplicate variable '" + names[i] + "'");
  }
  if (order.kind == OrderKind::Block && order.block > names.size())
    throw Error(ErrorCode::InvalidArgument, "block larger than ring");
  d->names = std::move(names);
  d->order = order;
  d_ = std::move(d);
}

std::size_t PolyRing::nvars() const { return d_->names.size(); }
const std::string& PolyRing::name(std::size_t i) const { return d_->names.at(i); }
const std::vector<std::string>& PolyRing::names() const { return d_->names; }
const MonomialOrder& PolyRing::order() const { return d_->order; }

std::optional<std::size_t> PolyRing::index_of(std::string_view name) const {
  auto it = d_->index.find(std::string(name));
  if (it == d_->index.end()) return std::nullopt;
  return it->second;
}

std::size_t PolyRing::require_index(std::string_view name) const {
  auto idx = index_of(name);
  if (!idx) throw Error(ErrorCode::UnknownVariable, "'" + std::string(name) + "'");
  return *idx;
}

int PolyRing::compare(const Monomial& a, const Monomial& b) const {
  const std::size_t n = a.size();
  switch (d_->order.kind) {
    case OrderKind::Degrevlex:
      return degrevlex_range(a, b, 0, n);
    case OrderKind::Lex:
      for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
      return 0;
    case OrderKind::Block: {
      int c = degrevlex_range(a, b, 0, d_->order.block);
      if (c != 0) return c;
      return degrevlex_range(a, b, d_->order.block, n);
    }
  }
  return 0;
}

PolyRing PolyRing::with_order(MonomialOrder order) const { return PolyRing(d_->names, order); }

PolyRing PolyRing::appended(const std::vector<std::string>& extra) const {
  auto names = d_->names;
  names.insert(names.end(), extra.begin(), extra.end());
  return PolyRing(std::move(names), d_->order.kind == OrderKind::Block ? MonomialOrder::degrevlex() : d_->order);
}

PolyRing PolyRing::without_last(std::size_t k) const {
  if (k > nvars()) throw Error(ErrorCode::InvalidArgument, "cannot drop more variables than the ring has");
  std::vector<std::string> names(d_->names.begin(), d_->names.end() - static_cast<std::ptrdiff_t>(k));
  return PolyRing(std::move(names), d_->order.kind == OrderKind::Block ? MonomialOrder::degrevlex() : d_->order);
}

std::string PolyRing::fresh_name(std::string_view stem) const {
  std::string candidate(stem);
  for (int i = 0; index_of(candidate); ++i) candidate = std::string(stem) + std::to_string(i);
  return candidate;
}

bool PolyRing::same_variables(const PolyRing& other) const {
  return d_ == other.d_ || d_->names == other.d_->names;
}

bool PolyRing::operator==(const PolyRing& other) const {
  return d_ == other.d_ || (d_->names == other.d_->names && d_->order == other.d_->order);
}

// -------------------------------------------------------------- Polynomial

namespace {

void check_same_ring(const PolyRing& a, const PolyRing& b) {
  if (!(a == b)) throw Error(ErrorCode::RingMismatch, "operands live in different rings");
}

}  // namespace

Polynomial Polynomial::constant(const PolyRing& ring, const Rational& c) {
  return term(ring, c, Monomial(ring.nvars()));
}

Polynomial Polynomial::variable(const PolyRing& ring, std::size_t index) {
  if (index >= ring.nvars()) throw Error(ErrorCode::UnknownVariable, "index " + std::to_string(index));
  Monomial m(ring.nvars());
  m.set(index, 1);
  return term(ring, Rational(1), std::move(m));
}

Polynomial Polynomial::variable(const PolyRing& ring, std::string_view name) {
  return variable(ring, ring.require_index(name));
}

Polynomial Polynomial::term(const PolyRing& ring, const Rational& c, Monomial mono) {
  if (mono.size() != ring.nvars()) throw Error(ErrorCode::ArityMismatch, "monomial length differs from ring arity");
  Polynomial p(ring);
  if (c != 0) p.terms_.push_back({c, std::move(mono)});
  return p;
}

Polynomial Polynomial::from_terms(const PolyRing& ring, std::vector<Term> terms) {
  for (const auto& t : terms)
    if (t.mono.size() != ring.nvars()) throw Error(ErrorCode::ArityMismatch, "monomial length differs from ring arity");
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return ring.compare(a.mono, b.mono) > 0; });
  Polynomial p(ring);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  // A cancelled pair can leave a zero entry that is not at the back.
  std::erase_if(p.terms_, [](const Term& t) { return t.coeff == 0; });
  return p;
}

bool Polynomial::is_one() const {
  return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coeff == 1;
}

Polynomial Polynomial::tail() const {
  Polynomial r(ring_);
  if (terms_.size() > 1) r.terms_.assign(terms_.begin() + 1, terms_.end());
  return r;
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.degree()));
  return d;
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  return true;
}

std::vector<std::size_t> Polynomial::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ring_.nvars(); ++i) {
    for (const auto& t : terms_) {
      if (t.mono[i] != 0) {
        out.push_back(i);
        break;
      }
    }
  }
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

namespace {

// Merge two sorted term lists: a + sign*b.
std::vector<Term> merge_terms(const PolyRing& ring, const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = ring.compare(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({sign > 0 ? Rational(b[j].coeff) : Rational(-b[j].coeff), b[j].mono});
      ++j;
    } else {
      Rational s = sign > 0 ? Rational(a[i].coeff + b[j].coeff) : Rational(a[i].coeff - b[j].coeff);
      if (s != 0) out.push_back({std::move(s), a[i].mono});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back({sign > 0 ? Rational(b[j].coeff) : Rational(-b[j].coeff), b[j].mono});
  return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_same_ring(ring_, other.ring_);
  terms_ = merge_terms(ring_, terms_, other.terms_, +1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_same_ring(ring_, other.ring_);
  terms_ = merge_terms(ring_, terms_, other.terms_, -1);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  check_same_ring(a.ring_, b.ring_);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
  // Multiply by the shorter factor term-by-term, merging sorted partial
  // products; each partial product is already sorted.
  const Polynomial& longer = a.size() >= b.size() ? a : b;
  const Polynomial& shorter = a.size() >= b.size() ? b : a;
  Polynomial acc(a.ring_);
  for (const auto& t : shorter.terms_) acc += longer.mul_term(t.coeff, t.mono);
  return acc;
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
  Polynomial r(p.ring_);
  if (c == 0) return r;
  r.terms_ = p.terms_;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

Polynomial Polynomial::mul_term(const Rational& c, const Monomial& m) const {
  Polynomial r(ring_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  // Multiplication by a monomial preserves the order of terms.
  for (const auto& t : terms_) r.terms_.push_back({t.coeff * c, t.mono * m});
  return r;
}

Polynomial Polynomial::sub_mul_term(const Rational& c, const Monomial& m, const Polynomial& other) const {
  Polynomial r(ring_);
  r.terms_ = merge_terms(ring_, terms_, other.mul_term(c, m).terms_, -1);
  return r;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(ring_, Rational(1));
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Rational inv = 1 / leading_coeff();
  return inv * *this;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  if (var >= ring_.nvars()) throw Error(ErrorCode::UnknownVariable, "index " + std::to_string(var));
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.mono[var] == 0) continue;
    Monomial m = t.mono;
    m.set(var, t.mono[var] - 1);
    out.push_back({t.coeff * t.mono[var], std::move(m)});
  }
  return from_terms(ring_, std::move(out));
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != ring_.nvars()) throw Error(ErrorCode::ArityMismatch, "evaluation point has wrong length");
  Rational sum(0);
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < point.size(); ++i) {
      for (std::uint32_t e = 0; e < t.mono[i]; ++e) v *= point[i];
    }
    sum += v;
  }
  return sum;
}

Polynomial Polynomial::substitute(std::span<const Polynomial> images, const PolyRing& target) const {
  if (images.size() != ring_.nvars())
    throw Error(ErrorCode::ArityMismatch, "substitution needs " + std::to_string(ring_.nvars()) + " images, got " +
                                              std::to_string(images.size()));
  for (const auto& im : images) check_same_ring(im.ring(), target);
  // powers[i][e] = images[i]^e, filled lazily.
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](std::size_t i, std::uint32_t e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(constant(target, Rational(1)));
    while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };
  Polynomial sum(target);
  for (const auto& t : terms_) {
    Polynomial prod = constant(target, t.coeff);
    for (std::size_t i = 0; i < images.size() && !prod.is_zero(); ++i) {
      if (t.mono[i] != 0) prod = prod * power(i, t.mono[i]);
    }
    sum += prod;
  }
  return sum;
}

Polynomial Polynomial::remap(const PolyRing& target) const {
  if (ring_ == target) return *this;
  std::vector<std::optional<std::size_t>> where(ring_.nvars());
  for (std::size_t i = 0; i < ring_.nvars(); ++i) where[i] = target.index_of(ring_.name(i));
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(target.nvars());
    for (std::size_t i = 0; i < ring_.nvars(); ++i) {
      if (t.mono[i] == 0) continue;
      if (!where[i]) throw Error(ErrorCode::UnknownVariable, "'" + ring_.name(i) + "' absent from target ring");
      m.set(*where[i], t.mono[i]);
    }
    out.push_back({t.coeff, std::move(m)});
  }
  return from_terms(target, std::move(out));
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& divisor) const {
  check_same_ring(ring_, divisor.ring_);
  if (divisor.is_zero()) throw Error(ErrorCode::ZeroDivisorArgument, "division by the zero polynomial");
  Polynomial quotient(ring_);
  Polynomial rest = *this;
  std::vector<Term> qterms;
  while (!rest.is_zero()) {
    const Term& lt = rest.leading_term();
    if (!divisor.leading_monomial().divides(lt.mono)) return std::nullopt;
    Rational c = lt.coeff / divisor.leading_coeff();
    Monomial m = lt.mono.quotient(divisor.leading_monomial());
    rest = rest.sub_mul_term(c, m, divisor);
    qterms.push_back({std::move(c), std::move(m)});
  }
  // Quotient terms come out in strictly descending order.
  quotient.terms_ = std::move(qterms);
  return quotient;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    bool negative = t.coeff < 0;
    Rational mag = abs(t.coeff);
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    bool need_star = false;
    if (t.mono.is_one() || mag != 1) {
      out << mag.get_str();
      need_star = true;
    }
    for (std::size_t i = 0; i < ring_.nvars(); ++i) {
      if (t.mono[i] == 0) continue;
      if (need_star) out << "*";
      out << ring_.name(i);
      if (t.mono[i] > 1) out << "^" << t.mono[i];
      need_star = true;
    }
  }
  return out.str();
}

bool Polynomial::operator==(const Polynomial& other) const {
  if (!ring_.same_variables(other.ring_)) return false;
  if (terms_.size() != other.terms_.size()) return false;
  if (ring_ == other.ring_) {
    for (std::size_t i = 0; i < terms_.size(); ++i)
      if (terms_[i].coeff != other.terms_[i].coeff || !(terms_[i].mono == other.terms_[i].mono)) return false;
    return true;
  }
  return remap(other.ring_) == other;
}

std::string to_string(const Polynomial& p) { return p.to_string(); }

}  // namespace gaussfano
