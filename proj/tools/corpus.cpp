#include "corpus.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

#include "gaussfano/errors.hpp"
#include "gaussfano/fano.hpp"
#include "gaussfano/gauss.hpp"
#include "gaussfano/kernels.hpp"
#include "gaussfano/nbundle.hpp"
#include "gaussfano/p1mod.hpp"

namespace gaussfano::corpus {

namespace {

PolyRing projective_ring(std::size_t n, const std::string& stem) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i <= n; ++i) names.push_back(stem + std::to_string(i));
  return PolyRing(names);
}

std::vector<Rational> qvec(std::initializer_list<long> values) {
  std::vector<Rational> out;
  for (long v : values) out.emplace_back(v);
  return out;
}

LineRep rows(std::initializer_list<long> r0, std::initializer_list<long> r1) {
  return LineRep::from_rows({qvec(r0), qvec(r1)});
}

std::string join(const std::vector<int>& v) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << "]";
  return out.str();
}

// Mutable state shared between checks of one run.
struct Run {
  Options options;
  // (family, dim X, splitting) for every splitting computed so far.
  struct Record {
    std::string family;
    std::size_t dim_x;
    SplittingType splitting;
  };
  std::vector<Record> splittings;
  std::vector<GroebnerBasis> bases;
};

struct Verdict {
  bool passed;
  std::string detail;
};

// --- criterion 1 -----------------------------------------------------------

Verdict cone_fano_ideals(Run& run) {
  std::ostringstream detail;
  bool ok = true;
  for (const char* label : {"1,4", "2,4"}) {
    const Chart chart = Chart::from_label(3, label);
    const PolyRing& r = chart.ring();
    const FanoChartIdeal f = fano_chart_ideal(cone(), chart);
    run.bases.push_back(f.basis);
    const std::string last = run.options.perturb ? "a2_2" : "a2_2^2";
    const Ideal expected = parse_ideal({"a1_1 - a1_2^2", "a2_1 - 2*a1_2*a2_2", last}, r);
    const bool equal = ideal_equal(f.ideal, expected);
    const Ideal eliminated = eliminate(f.ideal, {"a1_2", "a2_2"});
    const bool elim = ideal_equal(eliminated, parse_ideal({"a2_2^2"}, r));
    ok = ok && equal && elim;
    detail << "chart " << label << ": ideal " << (equal ? "matches" : "differs") << ", elimination to (b,d) "
           << (elim ? "gives (d^2)" : "differs") << "; ";
  }
  return {ok, detail.str()};
}

// --- criterion 2 -----------------------------------------------------------

Verdict nonreduced_certificates(Run&) {
  std::ostringstream detail;
  bool ok = true;
  for (const char* label : {"1,4", "2,4"}) {
    const Chart chart = Chart::from_label(3, label);
    const FanoChartIdeal f = fano_chart_ideal(cone(), chart);
    std::optional<NonReducednessCertificate> found;
    for (const auto& g : candidate_witnesses(f)) {
      auto outcome = nonreduced_certificate(f, g, 4);
      if (auto* cert = std::get_if<NonReducednessCertificate>(&outcome)) {
        found = std::move(*cert);
        break;
      }
    }
    if (!found) {
      ok = false;
      detail << "chart " << label << ": no certificate; ";
      continue;
    }
    const bool witness_d = found->witness == Polynomial::variable(chart.ring(), "a2_2");
    const bool radical = std::all_of(found->quotient_in_radical.begin(), found->quotient_in_radical.end(), [](bool b) { return b; });
    const bool verified = verify_certificate(f.ideal, *found);
    ok = ok && witness_d && found->power == 2 && radical && verified;
    detail << "chart " << label << ": g = " << found->witness.to_string() << ", k = " << found->power << ", "
           << found->quotient_generators.size() << " quotient generators " << (radical ? "in" : "NOT in")
           << " the radical, checker " << (verified ? "accepts" : "rejects") << "; ";
  }
  return {ok, detail.str()};
}

// --- criterion 3 -----------------------------------------------------------

Verdict symmetroid_jacobian(Run& run) {
  const Ideal x = symmetroid();
  const Polynomial& f = x.generators()[0];
  std::vector<Polynomial> partials;
  for (std::size_t k = 0; k < x.ring().nvars(); ++k) partials.push_back(f.derivative(k));
  const Ideal jac(x.ring(), partials);
  const bool equal = ideal_equal(jac, veronese_minors());
  run.bases.push_back(buchberger(jac));
  return {equal, equal ? "Jacobian ideal equals the ideal of 2x2 minors" : "Jacobian ideal differs from the minors"};
}

// --- criterion 4 -----------------------------------------------------------

Verdict symmetroid_gradient(Run&) {
  const Ideal x = symmetroid();
  const Polynomial& f = x.generators()[0];
  const std::vector<std::vector<Rational>> points = {qvec({1, 0, 0, 1, 0, 0}), qvec({2, 1, 0, 3, 0, 0}),
                                                     qvec({0, 1, 0, 0, 0, 0}), qvec({3, -2, 0, 1, 0, 0}),
                                                     {Rational(1), Rational(2), Rational(0), make_rational(1, 2), Rational(0), Rational(0)}};
  std::ostringstream detail;
  bool ok = true;
  std::optional<Rational> factor;
  for (const auto& p : points) {
    const Rational stated = p[1] * p[1] - p[0] * p[3];
    if (stated == 0 || f.evaluate(p) != 0) {
      ok = false;
      detail << "bad sample; ";
      continue;
    }
    std::vector<Rational> grad;
    for (std::size_t k = 0; k < 6; ++k) grad.push_back(f.derivative(k).evaluate(p));
    const bool zeros = std::all_of(grad.begin(), grad.begin() + 5, [](const Rational& v) { return v == 0; });
    const Rational ratio = grad[5] / stated;
    if (!factor) factor = ratio;
    ok = ok && zeros && ratio == *factor && (ratio == 1 || ratio == -1);
    detail << "[" << to_string(grad[5]) << " vs " << to_string(stated) << "] ";
  }
  if (factor)
    detail << "; computed = " << to_string(*factor) << " x stated at every sample"
           << (*factor == -1 ? " (dF/dT5 = T0*T3 - T1^2; same tangent hyperplane T5 = 0)" : "");
  return {ok, detail.str()};
}

// --- criterion 5 -----------------------------------------------------------

std::vector<LineRep> pi_lines() {
  return {rows({1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}), rows({1, 0, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0}),
          rows({0, 1, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0}), rows({1, 1, 0, 0, 0, 0}, {0, 1, 0, 2, 0, 0}),
          rows({1, 2, 0, 3, 0, 0}, {0, 1, 0, -1, 0, 0})};
}

std::vector<LineRep> tangent_plane_lines() {
  return {rows({0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0}), rows({1, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0}),
          rows({1, 0, 1, 0, 0, 0}, {0, 1, 0, 0, 0, 0})};
}

Verdict splitting_types(Run& run, const std::function<void(double)>& lap_limit) {
  std::ostringstream detail;
  bool ok = true;
  const Ideal x = symmetroid();
  const SplittingType ones{{1, 1, 1}};
  for (const auto& line : pi_lines()) {
    const auto start = std::chrono::steady_clock::now();
    const SplittingType t = normal_bundle_splitting(x, line, 4);
    lap_limit(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    run.splittings.push_back({"symmetroid Pi-line", 4, t});
    ok = ok && t == ones;
    if (!(t == ones)) detail << "Pi-line " << line.to_string() << " gives " << join(t.degrees) << "; ";
  }
  detail << pi_lines().size() << " Pi-lines checked against [1,1,1]; ";
  const auto start = std::chrono::steady_clock::now();
  const SplittingType tangent = normal_bundle_splitting(x, tangent_plane_lines()[0], 4);
  lap_limit(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  run.splittings.push_back({"symmetroid tangent-plane line", 4, tangent});
  const SplittingType expected{{1, 1, -1}};
  const bool match = tangent == expected;
  ok = ok && match;
  detail << "line T0=T3=T4=T5=0: expected [1,1,-1], computed " << join(tangent.degrees);
  if (!match) detail << " (MISMATCH)";
  return {ok, detail.str()};
}

// --- criterion 6 -----------------------------------------------------------

Verdict theorem_equivalence(Run& run) {
  const auto instances = theorem_instances();
  std::vector<std::string> families;
  for (const auto& inst : instances)
    if (std::find(families.begin(), families.end(), inst.family) == families.end()) families.push_back(inst.family);

  std::ostringstream detail;
  bool ok = true;
  std::size_t total = 0, consistent = 0;
  for (const auto& family : families) {
    std::vector<LineRep> lines;
    Ideal variety;
    for (const auto& inst : instances)
      if (inst.family == family) {
        lines.push_back(inst.line);
        variety = inst.variety;
      }
    const auto checks = kernels::theorem_checks(variety, lines);
    std::size_t family_ok = 0, constant = 0;
    for (const auto& c : checks) {
      family_ok += c.consistent;
      constant += c.gauss.constant;
      run.splittings.push_back({family, c.dim_x, c.splitting});
    }
    total += checks.size();
    consistent += family_ok;
    ok = ok && family_ok == checks.size();
    detail << family << " " << family_ok << "/" << checks.size() << " (constant " << constant << "); ";
  }
  detail << "total " << consistent << "/" << total;
  return {ok, detail.str()};
}

// --- criterion 7 -----------------------------------------------------------

bool s_polynomials_reduce(const GroebnerBasis& gb) {
  const auto& b = gb.basis();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      if (!normal_form(s_polynomial(b[i], b[j]), gb).is_zero()) return false;
  return true;
}

bool kernel_verified(const GradedMatrix& phi) {
  const GradedMatrix k = kernel_free_basis(phi);
  if (k.cols() > 0) {
    const GradedMatrix product = phi.compose(k);
    for (const auto& row : product.entries())
      for (const auto& e : row)
        if (!e.is_zero()) return false;
  }
  int top = 0;
  for (int c : phi.col_degrees()) top = std::max(top, c);
  for (int c : k.col_degrees()) top = std::max(top, c);
  for (int d : {top, top + 1, top + 2, top + 5, top + 8}) {
    int free_dim = 0;
    for (int c : k.col_degrees()) free_dim += graded_piece_dim(d - c);
    if (free_dim != kernel_dimension(phi, d)) return false;
  }
  return true;
}

Polynomial random_poly(std::mt19937& rng, const PolyRing& ring) {
  std::uniform_int_distribution<int> nterms(0, 6), exp(0, 4);
  std::uniform_int_distribution<long> num(-20, 20), den(1, 6);
  std::vector<Term> terms;
  for (int k = nterms(rng); k > 0; --k) {
    std::vector<std::uint32_t> e(ring.nvars());
    for (auto& x : e) x = static_cast<std::uint32_t>(exp(rng));
    terms.push_back({make_rational(num(rng), den(rng)), Monomial(e)});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

Verdict property_suites(Run& run) {
  std::ostringstream detail;
  bool ok = true;

  // Gröbner bases gathered by earlier checks plus the chart bases of the
  // quadric and cone in lex.
  std::vector<GroebnerBasis> bases = run.bases;
  for (const auto& chart : charts(3)) {
    bases.push_back(fano_chart_ideal(smooth_quadric(), chart).basis);
    bases.push_back(buchberger(fano_chart_ideal(cone(), chart).ideal, MonomialOrder::lex()));
  }
  bases.push_back(buchberger(veronese_minors()));
  std::size_t gb_ok = 0;
  for (const auto& gb : bases) gb_ok += s_polynomials_reduce(gb);
  ok = ok && gb_ok == bases.size();
  detail << "S-polynomials " << gb_ok << "/" << bases.size() << " bases; ";

  const auto instances = theorem_instances();
  std::size_t kernels_ok = 0, kernels_total = 0, indep_ok = 0, indep_total = 0;
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<long> coeff(-3, 3);
  for (const auto& inst : instances) {
    const ConormalPresentation p = conormal_presentation(inst.variety, inst.line);
    ++kernels_total;
    kernels_ok += kernel_verified(p.matrix.transpose_dual());
    const SplittingType reference = dual_splitting(p.matrix);
    const auto& ell = p.ell_basis;
    const std::size_t m = ell.size();
    for (int trial = 0; trial < 10; ++trial) {
      QMatrix g(m, m);
      do {
        for (std::size_t i = 0; i < m; ++i)
          for (std::size_t j = 0; j < m; ++j) g(i, j) = coeff(rng);
      } while (g.rank() < m);
      std::vector<Polynomial> basis;
      for (std::size_t i = 0; i < m; ++i) {
        Polynomial f(inst.variety.ring());
        for (std::size_t j = 0; j < m; ++j) f += g(i, j) * ell[j];
        basis.push_back(std::move(f));
      }
      std::vector<std::size_t> order(inst.variety.ring().nvars());
      std::iota(order.begin(), order.end(), 0);
      std::shuffle(order.begin(), order.end(), rng);
      ++indep_total;
      indep_ok += dual_splitting(conormal_presentation(inst.variety, inst.line, basis, order).matrix) == reference;
    }
  }
  ok = ok && kernels_ok == kernels_total && indep_ok == indep_total;
  detail << "kernel bases " << kernels_ok << "/" << kernels_total << "; presentation changes " << indep_ok << "/"
         << indep_total << "; ";

  const PolyRing r({"x0", "x1", "x2", "y"});
  std::size_t round_ok = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Polynomial f = random_poly(rng, r);
    const std::string printed = f.to_string();
    const Polynomial back = parse_poly(printed, r);
    round_ok += back == f && back.to_string() == printed;
  }
  ok = ok && round_ok == 200;
  detail << "parser round-trips " << round_ok << "/200";
  return {ok, detail.str()};
}

// --- criterion 8 -----------------------------------------------------------

Verdict postconditions(Run& run) {
  if (run.splittings.empty()) return {false, "no splitting types were computed"};
  std::size_t ok = 0;
  std::ostringstream bad;
  for (const auto& rec : run.splittings) {
    const bool bounded = std::all_of(rec.splitting.degrees.begin(), rec.splitting.degrees.end(), [](int a) { return a <= 1; });
    const bool rank = rec.splitting.rank() + 1 == rec.dim_x;
    if (bounded && rank)
      ++ok;
    else
      bad << rec.family << " " << join(rec.splitting.degrees) << "; ";
  }
  std::ostringstream detail;
  detail << ok << "/" << run.splittings.size() << " splittings with a_i <= 1 and rank n-1";
  if (ok != run.splittings.size()) detail << "; violations: " << bad.str();
  return {ok == run.splittings.size(), detail.str()};
}

}  // namespace

Ideal cone() { return parse_ideal({"x0*x1 - x2^2"}, projective_ring(3, "x")); }

Ideal smooth_quadric() { return parse_ideal({"x0*x3 - x1*x2"}, projective_ring(3, "x")); }

Ideal symmetroid() {
  return parse_ideal({"T0*T3*T5 - T0*T4^2 - T1^2*T5 - T2^2*T3 + 2*T1*T2*T4"}, projective_ring(5, "T"));
}

Ideal linear_plane() { return parse_ideal({"x3", "x4"}, projective_ring(4, "x")); }

Ideal veronese_minors() {
  return parse_ideal({"T0*T3 - T1^2", "T0*T4 - T1*T2", "T0*T5 - T2^2", "T1*T4 - T2*T3", "T1*T5 - T2*T4", "T3*T5 - T4^2"},
                     projective_ring(5, "T"));
}

std::vector<Instance> theorem_instances() {
  std::vector<Instance> out;
  const Ideal c = cone();
  const std::vector<std::pair<long, long>> uv = {{1, 0}, {0, 1}, {1, 1}, {1, -1}, {1, 2}, {2, 1},
                                                 {1, 3}, {3, -1}, {2, 3}, {1, -2}, {3, 2}};
  for (auto [u, v] : uv) out.push_back({"cone ruling", c, line_through(qvec({0, 0, 0, 1}), qvec({u * u, v * v, u * v, 0}))});

  const Ideal q = smooth_quadric();
  for (auto [u, v] : std::vector<std::pair<long, long>>{{1, 0}, {0, 1}, {1, 1}, {1, -2}}) {
    out.push_back({"quadric ruling", q, rows({u, v, 0, 0}, {0, 0, u, v})});
    out.push_back({"quadric ruling", q, rows({u, 0, v, 0}, {0, u, 0, v})});
  }

  const Ideal s = symmetroid();
  for (const auto& l : pi_lines()) out.push_back({"symmetroid Pi-line", s, l});
  for (const auto& l : tangent_plane_lines()) out.push_back({"symmetroid tangent-plane line", s, l});

  const Ideal p = linear_plane();
  for (const auto& l : {rows({1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}), rows({1, 0, 0, 0, 0}, {0, 0, 1, 0, 0}),
                        rows({0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}), rows({1, 2, 0, 0, 0}, {0, 1, 3, 0, 0}),
                        rows({1, 0, -1, 0, 0}, {0, 1, 1, 0, 0})})
    out.push_back({"line in linear P^2", p, l});
  return out;
}

std::vector<CheckResult> run(const Options& options) {
  const std::uint64_t saved = Budget::standard().max_steps;
  if (options.budget) Budget::set_standard(*options.budget);

  Run state{options, {}, {}};
  std::vector<CheckResult> results;
  const auto corpus_start = std::chrono::steady_clock::now();

  auto check = [&](int criterion, std::string name, double limit, const std::function<Verdict()>& body) {
    CheckResult r{criterion, std::move(name), false, "", 0, limit};
    const auto start = std::chrono::steady_clock::now();
    try {
      Verdict v = body();
      r.passed = v.passed;
      r.detail = std::move(v.detail);
    } catch (const Error& e) {
      r.detail = std::string("error ") + std::string(error_code_name(e.code())) + ": " + e.what();
    } catch (const std::exception& e) {
      r.detail = std::string("unexpected exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit > 0 && r.seconds >= limit) {
      r.passed = false;
      r.detail += "; exceeded the time limit";
    }
    results.push_back(std::move(r));
  };

  check(1, "cone Fano chart ideals", 1.0, [&] { return cone_fano_ideals(state); });
  check(2, "cone non-reducedness certificates", 1.0, [&] { return nonreduced_certificates(state); });
  check(3, "symmetroid Jacobian ideal", 10.0, [&] { return symmetroid_jacobian(state); });
  check(4, "symmetroid gradient on Pi minus C", 0, [&] { return symmetroid_gradient(state); });
  check(5, "symmetroid splitting types", 0, [&] {
    double worst = 0;
    Verdict v = splitting_types(state, [&](double s) { worst = std::max(worst, s); });
    if (worst >= 5.0) {
      v.passed = false;
      v.detail += "; a single splitting took >= 5 s";
    }
    return v;
  });
  check(6, "Gauss constancy vs splitting equivalence", 0, [&] { return theorem_equivalence(state); });
  check(7, "property suites", kCorpusLimitSeconds, [&] { return property_suites(state); });
  check(8, "splitting degree and rank postconditions", 0, [&] { return postconditions(state); });

  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - corpus_start).count();
  if (total >= kCorpusLimitSeconds) {
    results[6].passed = false;
    results[6].detail += "; full corpus took >= 60 s";
  }
  Budget::set_standard(saved);
  return results;
}

}  // namespace gaussfano::corpus
