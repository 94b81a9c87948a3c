#include "gaussfano/groebner.hpp"

#include <algorithm>
#include <atomic>
#include <bit>

#include "gaussfano/errors.hpp"

namespace gaussfano {

namespace {
std::atomic<std::uint64_t> g_standard_steps{Budget::kDefaultSteps};
}

Budget Budget::standard() { return Budget{g_standard_steps.load(std::memory_order_relaxed)}; }

void Budget::set_standard(std::uint64_t max_steps) { g_standard_steps.store(max_steps, std::memory_order_relaxed); }

// ------------------------------------------------------------------- Ideal

Ideal::Ideal(PolyRing ring, std::vector<Polynomial> generators) : ring_(std::move(ring)) {
  for (auto& g : generators) {
    if (!g.ring().same_variables(ring_))
      throw Error(ErrorCode::RingMismatch, "generator " + g.to_string() + " is not in the ideal's ring");
    if (!g.is_zero()) gens_.push_back(g.remap(ring_));
  }
}

Ideal parse_ideal(const std::vector<std::string>& generators, const PolyRing& ring) {
  std::vector<Polynomial> gens;
  gens.reserve(generators.size());
  for (const auto& text : generators) gens.push_back(parse_poly(text, ring));
  return Ideal(ring, std::move(gens));
}

// --------------------------------------------------------------- reduction

namespace {

class StepCounter {
 public:
  explicit StepCounter(Budget budget) : limit_(budget.max_steps) {}

  void tick() {
    if (++steps_ > limit_)
      throw Error(ErrorCode::ComputationBudgetExceeded,
                  "more than " + std::to_string(limit_) + " reduction steps");
  }

 private:
  std::uint64_t limit_;
  std::uint64_t steps_ = 0;
};

const Polynomial* find_reducer(const Monomial& m, const std::vector<const Polynomial*>& reducers) {
  for (const Polynomial* g : reducers)
    if (g->leading_monomial().divides(m)) return g;
  return nullptr;
}

/// Full reduction of f by `reducers` (all nonzero, same ring as f).
Polynomial reduce(Polynomial f, const std::vector<const Polynomial*>& reducers, StepCounter& counter) {
  std::vector<Term> remainder;
  while (!f.is_zero()) {
    const Term& lt = f.leading_term();
    if (const Polynomial* g = find_reducer(lt.mono, reducers)) {
      counter.tick();
      Rational c = lt.coeff / g->leading_coeff();
      Monomial m = lt.mono.quotient(g->leading_monomial());
      f = f.sub_mul_term(c, m, *g);
    } else {
      remainder.push_back(lt);
      f = f.tail();
    }
  }
  return Polynomial::from_terms(f.ring(), std::move(remainder));
}

struct CriticalPair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

}  // namespace

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const Monomial l = f.leading_monomial().lcm(g.leading_monomial());
  Polynomial a = f.mul_term(1 / f.leading_coeff(), l.quotient(f.leading_monomial()));
  return a.sub_mul_term(1 / g.leading_coeff(), l.quotient(g.leading_monomial()), g);
}

GroebnerBasis buchberger(const Ideal& ideal, MonomialOrder order, Budget budget) {
  const PolyRing ring = ideal.ring().with_order(order);
  StepCounter counter(budget);

  std::vector<Polynomial> polys;  // every basis element ever added
  std::vector<bool> active;
  std::vector<CriticalPair> pairs;

  auto active_reducers = [&] {
    std::vector<const Polynomial*> out;
    for (std::size_t k = 0; k < polys.size(); ++k)
      if (active[k]) out.push_back(&polys[k]);
    return out;
  };

  // Gebauer-Möller update with a new element h.
  auto update = [&](Polynomial h) {
    const std::size_t hi = polys.size();
    polys.push_back(std::move(h));
    active.push_back(true);
    const Monomial& lh = polys[hi].leading_monomial();

    std::vector<CriticalPair> fresh;
    for (std::size_t k = 0; k < hi; ++k)
      if (active[k]) fresh.push_back({k, hi, polys[k].leading_monomial().lcm(lh)});

    // Chain criterion among the new pairs.  A pair is dropped when a later
    // unprocessed pair or an already kept one has an lcm dividing its lcm;
    // coprime pairs always pass here so they can shadow others, and are
    // removed afterwards by the product criterion.
    std::vector<CriticalPair> kept;
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      const Monomial& l = fresh[a].lcm;
      bool keep = polys[fresh[a].i].leading_monomial().coprime(lh);
      if (!keep) {
        keep = std::none_of(fresh.begin() + static_cast<std::ptrdiff_t>(a) + 1, fresh.end(),
                            [&](const CriticalPair& q) { return q.lcm.divides(l); }) &&
               std::none_of(kept.begin(), kept.end(), [&](const CriticalPair& q) { return q.lcm.divides(l); });
      }
      if (keep) kept.push_back(fresh[a]);
    }
    std::erase_if(kept, [&](const CriticalPair& p) { return polys[p.i].leading_monomial().coprime(lh); });

    // Drop old pairs whose lcm is strictly shadowed via h.
    std::erase_if(pairs, [&](const CriticalPair& p) {
      if (!lh.divides(p.lcm)) return false;
      const Monomial lih = polys[p.i].leading_monomial().lcm(lh);
      const Monomial ljh = polys[p.j].leading_monomial().lcm(lh);
      return !(lih == p.lcm) && !(ljh == p.lcm);
    });
    pairs.insert(pairs.end(), kept.begin(), kept.end());

    for (std::size_t k = 0; k < hi; ++k)
      if (active[k] && lh.divides(polys[k].leading_monomial())) active[k] = false;
  };

  for (const auto& g : ideal.generators()) {
    Polynomial r = reduce(g.remap(ring), active_reducers(), counter);
    if (r.is_zero()) continue;
    if (r.is_constant()) return GroebnerBasis(ring, {Polynomial::constant(ring, Rational(1))});
    update(r.monic());
  }

  auto pair_less = [&](const CriticalPair& a, const CriticalPair& b) {
    if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
    int c = ring.compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  };

  while (!pairs.empty()) {
    auto it = std::min_element(pairs.begin(), pairs.end(), pair_less);
    CriticalPair p = *it;
    pairs.erase(it);
    Polynomial s = s_polynomial(polys[p.i], polys[p.j]);
    Polynomial r = reduce(std::move(s), active_reducers(), counter);
    if (r.is_zero()) continue;
    if (r.is_constant()) return GroebnerBasis(ring, {Polynomial::constant(ring, Rational(1))});
    update(r.monic());
  }

  // The active set is a minimal basis; tail-reduce it.
  std::vector<Polynomial> minimal;
  for (std::size_t k = 0; k < polys.size(); ++k)
    if (active[k]) minimal.push_back(polys[k]);
  std::vector<Polynomial> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<const Polynomial*> others;
    for (std::size_t m = 0; m < minimal.size(); ++m)
      if (m != k) others.push_back(&minimal[m]);
    Polynomial head = Polynomial::term(ring, minimal[k].leading_coeff(), minimal[k].leading_monomial());
    Polynomial tail = reduce(minimal[k].tail(), others, counter);
    reduced.push_back((head + tail).monic());
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ring.compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  return GroebnerBasis(ring, std::move(reduced));
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb, Budget budget) {
  if (!f.ring().same_variables(gb.ring()))
    throw Error(ErrorCode::RingMismatch, "polynomial and basis live in different rings");
  StepCounter counter(budget);
  std::vector<const Polynomial*> reducers;
  for (const auto& g : gb.basis()) reducers.push_back(&g);
  return reduce(f.remap(gb.ring()), reducers, counter);
}

bool ideal_member(const Polynomial& f, const GroebnerBasis& gb) { return normal_form(f, gb).is_zero(); }

Division divide(const Polynomial& f, const std::vector<Polynomial>& divisors) {
  const PolyRing& ring = f.ring();
  std::vector<Polynomial> ds;
  for (const auto& d : divisors) {
    if (!d.ring().same_variables(ring)) throw Error(ErrorCode::RingMismatch, "divisor in a different ring");
    ds.push_back(d.remap(ring));
  }
  Division out{std::vector<Polynomial>(ds.size(), Polynomial(ring)), Polynomial(ring)};
  std::vector<Term> remainder;
  Polynomial p = f;
  while (!p.is_zero()) {
    const Term& lt = p.leading_term();
    bool divided = false;
    for (std::size_t k = 0; k < ds.size(); ++k) {
      if (ds[k].is_zero() || !ds[k].leading_monomial().divides(lt.mono)) continue;
      Rational c = lt.coeff / ds[k].leading_coeff();
      Monomial m = lt.mono.quotient(ds[k].leading_monomial());
      out.quotients[k] += Polynomial::term(ring, c, m);
      p = p.sub_mul_term(c, m, ds[k]);
      divided = true;
      break;
    }
    if (!divided) {
      remainder.push_back(lt);
      p = p.tail();
    }
  }
  out.remainder = Polynomial::from_terms(ring, std::move(remainder));
  return out;
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
  if (!a.ring().same_variables(b.ring())) throw Error(ErrorCode::RingMismatch, "ideals live in different rings");
  const GroebnerBasis ga = buchberger(a);
  const GroebnerBasis gb = buchberger(b);
  for (const auto& g : a.generators())
    if (!ideal_member(g, gb)) return false;
  for (const auto& g : b.generators())
    if (!ideal_member(g, ga)) return false;
  return true;
}

Ideal eliminate(const Ideal& ideal, const std::vector<std::string>& keep, Budget budget) {
  const PolyRing& ring = ideal.ring();
  std::vector<bool> kept(ring.nvars(), false);
  for (const auto& name : keep) kept[ring.require_index(name)] = true;

  std::vector<std::string> names;
  for (std::size_t i = 0; i < ring.nvars(); ++i)
    if (!kept[i]) names.push_back(ring.name(i));
  const std::size_t n_elim = names.size();
  for (std::size_t i = 0; i < ring.nvars(); ++i)
    if (kept[i]) names.push_back(ring.name(i));
  const PolyRing elim_ring(names, MonomialOrder::eliminating(n_elim));

  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.remap(elim_ring));
  const GroebnerBasis gb = buchberger(Ideal(elim_ring, std::move(gens)), elim_ring.order(), budget);

  std::vector<Polynomial> out;
  for (const auto& g : gb.basis()) {
    const auto sup = g.support();
    if (std::all_of(sup.begin(), sup.end(), [&](std::size_t v) { return v >= n_elim; })) out.push_back(g.remap(ring));
  }
  return Ideal(ring, std::move(out));
}

namespace {

// Ring with one extra variable placed first.
PolyRing with_leading_aux(const PolyRing& ring, const std::string& aux, MonomialOrder order) {
  std::vector<std::string> names{aux};
  names.insert(names.end(), ring.names().begin(), ring.names().end());
  return PolyRing(std::move(names), order);
}

}  // namespace

Ideal intersect(const Ideal& a, const Ideal& b, Budget budget) {
  if (!a.ring().same_variables(b.ring())) throw Error(ErrorCode::RingMismatch, "ideals live in different rings");
  const PolyRing& ring = a.ring();
  if (a.is_zero() || b.is_zero()) return Ideal(ring);

  const std::string w = ring.fresh_name("_w");
  const PolyRing ext = with_leading_aux(ring, w, MonomialOrder::eliminating(1));
  const Polynomial wv = Polynomial::variable(ext, 0);
  const Polynomial one = Polynomial::constant(ext, Rational(1));
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) gens.push_back(wv * f.remap(ext));
  for (const auto& g : b.generators()) gens.push_back((one - wv) * g.remap(ext));
  const GroebnerBasis gb = buchberger(Ideal(ext, std::move(gens)), ext.order(), budget);

  std::vector<Polynomial> out;
  for (const auto& g : gb.basis()) {
    const auto sup = g.support();
    if (std::find(sup.begin(), sup.end(), 0u) == sup.end()) out.push_back(g.remap(ring));
  }
  return Ideal(ring, std::move(out));
}

Ideal ideal_quotient(const Ideal& ideal, const Polynomial& g, Budget budget) {
  if (g.is_zero()) throw Error(ErrorCode::ZeroDivisorArgument, "quotient by the zero polynomial");
  const PolyRing& ring = ideal.ring();
  if (ideal.is_zero()) return Ideal(ring);
  const Polynomial gg = g.remap(ring);
  if (gg.is_constant()) return ideal;

  const Ideal meet = intersect(ideal, Ideal(ring, {gg}), budget);
  std::vector<Polynomial> out;
  for (const auto& h : meet.generators()) {
    auto q = h.divide_exact(gg);
    if (!q) throw Error(ErrorCode::NonzeroRemainder, "intersection generator not divisible by " + gg.to_string());
    out.push_back(std::move(*q));
  }
  return Ideal(ring, std::move(out));
}

bool radical_member(const Polynomial& f, const Ideal& ideal, Budget budget) {
  if (f.is_zero()) return true;
  const PolyRing& ring = ideal.ring();
  const std::string w = ring.fresh_name("_w");
  const PolyRing ext = with_leading_aux(ring, w, MonomialOrder::degrevlex());
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.remap(ext));
  gens.push_back(Polynomial::constant(ext, Rational(1)) - Polynomial::variable(ext, 0) * f.remap(ext));
  return buchberger(Ideal(ext, std::move(gens)), ext.order(), budget).is_unit();
}

int ideal_dimension(const Ideal& ideal, Budget budget) {
  const std::size_t n = ideal.ring().nvars();
  if (n > 64) throw Error(ErrorCode::InvalidArgument, "dimension supports at most 64 variables");
  const GroebnerBasis gb = buchberger(ideal, MonomialOrder::degrevlex(), budget);
  if (gb.is_unit()) return -1;

  std::vector<std::uint64_t> supports;
  for (const auto& g : gb.basis()) {
    std::uint64_t mask = 0;
    const Monomial& lm = g.leading_monomial();
    for (std::size_t i = 0; i < n; ++i)
      if (lm[i] != 0) mask |= std::uint64_t{1} << i;
    supports.push_back(mask);
  }
  // Largest variable set containing no leading monomial's support.
  auto independent = [&](std::uint64_t set) {
    return std::none_of(supports.begin(), supports.end(), [&](std::uint64_t s) { return (s & ~set) == 0; });
  };
  int best = 0;
  auto search = [&](auto&& self, std::size_t i, std::uint64_t set) -> void {
    const int size = std::popcount(set);
    if (size + static_cast<int>(n - i) <= best) return;
    if (i == n) {
      best = size;
      return;
    }
    const std::uint64_t with = set | (std::uint64_t{1} << i);
    if (independent(with)) self(self, i + 1, with);
    self(self, i + 1, set);
  };
  search(search, 0, 0);
  return best;
}

Polynomial polynomial_gcd(const Polynomial& a, const Polynomial& b) {
  if (!a.ring().same_variables(b.ring())) throw Error(ErrorCode::RingMismatch, "gcd operands in different rings");
  const PolyRing& ring = a.ring();
  const Polynomial bb = b.remap(ring);
  if (a.is_zero()) return bb.monic();
  if (bb.is_zero()) return a.monic();
  if (a.is_constant() || bb.is_constant()) return Polynomial::constant(ring, Rational(1));

  // (a) ∩ (b) = (lcm(a, b)), and its reduced basis is the monic lcm.
  const Ideal meet = intersect(Ideal(ring, {a}), Ideal(ring, {bb}));
  const GroebnerBasis gb = buchberger(meet, ring.order());
  if (gb.basis().size() != 1) throw Error(ErrorCode::NonzeroRemainder, "intersection of principal ideals not principal");
  auto g = (a * bb).divide_exact(gb.basis()[0].remap(ring));
  if (!g) throw Error(ErrorCode::NonzeroRemainder, "lcm does not divide the product");
  return g->monic();
}

Polynomial square_free_part(const Polynomial& f) {
  if (f.is_zero()) return f;
  if (f.is_constant()) return Polynomial::constant(f.ring(), Rational(1));
  Polynomial g = f;
  for (std::size_t i = 0; i < f.ring().nvars() && !g.is_constant(); ++i) {
    Polynomial d = f.derivative(i);
    if (!d.is_zero()) g = polynomial_gcd(g, d);
  }
  auto q = f.divide_exact(g);
  if (!q) throw Error(ErrorCode::NonzeroRemainder, "gcd does not divide");
  return q->monic();
}

}  // namespace gaussfano
