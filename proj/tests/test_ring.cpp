#include <gtest/gtest.h>

#include "gaussfano/grassmann.hpp"
#include "gaussfano/ring.hpp"
#include "helpers.hpp"

using namespace gaussfano;
using namespace gaussfano::test;

TEST(Rational, CanonicalForm) {
  const Rational r = make_rational(6, -4);
  EXPECT_EQ(r.get_num(), -3);
  EXPECT_EQ(r.get_den(), 2);
  EXPECT_EQ(to_string(make_rational(0, 5)), "0");
  EXPECT_EQ(make_rational(0, 7).get_den(), 1);
  EXPECT_EQ(parse_rational("-10/4"), make_rational(-5, 2));
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_EQ(error_code_of([] { parse_rational("1/0"); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(error_code_of([] { parse_rational("abc"); }), ErrorCode::InvalidArgument);
}

TEST(Parse, ConeEquation) {
  const PolyRing r = projective_ring(3);
  const Polynomial f = parse_poly("x0*x1 - x2^2", r);
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f.to_string(), "x0*x1 - x2^2");
  EXPECT_EQ(f, Polynomial::variable(r, 0) * Polynomial::variable(r, 1) - Polynomial::variable(r, 2).pow(2));
}

TEST(Parse, ZeroHasNoTerms) {
  const Polynomial z = parse_poly("0", projective_ring(2));
  EXPECT_TRUE(z.is_zero());
  EXPECT_TRUE(z.terms().empty());
  EXPECT_EQ(z.to_string(), "0");
}

TEST(Parse, SymmetroidCubic) {
  const Polynomial f = symmetroid().generators()[0];
  EXPECT_EQ(f.size(), 5u);
  EXPECT_EQ(f.total_degree(), 3);
  EXPECT_TRUE(f.is_homogeneous());
}

TEST(Parse, GrammarDetails) {
  const PolyRing r = ring_of({"x", "y"});
  EXPECT_EQ(parse_poly("  x *  y  ", r), parse_poly("x*y", r));
  EXPECT_EQ(parse_poly("(x+y)*(x-y)", r), parse_poly("x^2 - y^2", r));
  EXPECT_EQ(parse_poly("3/6*x", r), parse_poly("1/2*x", r));
  EXPECT_EQ(parse_poly("x - x", r), Polynomial(r));
  EXPECT_EQ(parse_poly("x^0", r), Polynomial::constant(r, 1));
  EXPECT_EQ(parse_poly("(x+1)^2", r), parse_poly("x^2 + 2*x + 1", r));
}

TEST(Parse, Errors) {
  const PolyRing r = ring_of({"x", "y"});
  EXPECT_EQ(error_code_of([&] { parse_poly("x*z", r); }), ErrorCode::UnknownVariable);
  EXPECT_EQ(error_code_of([&] { parse_poly("x^-2", r); }), ErrorCode::NegativeExponent);
  EXPECT_EQ(error_code_of([&] { parse_poly("x y", r); }), ErrorCode::SyntaxError);
  EXPECT_EQ(error_code_of([&] { parse_poly("2x", r); }), ErrorCode::SyntaxError);
  EXPECT_EQ(error_code_of([&] { parse_poly("x +", r); }), ErrorCode::SyntaxError);
  EXPECT_EQ(error_code_of([&] { parse_poly("(x", r); }), ErrorCode::SyntaxError);
  EXPECT_EQ(error_code_of([&] { parse_poly("1/0", r); }), ErrorCode::SyntaxError);
  EXPECT_EQ(error_code_of([&] { parse_poly("", r); }), ErrorCode::SyntaxError);
  try {
    parse_poly("x + y y", r);
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.offset(), 6u);
  }
}

TEST(Print, Format) {
  const PolyRing r = projective_ring(1);
  EXPECT_EQ(parse_poly("-1/2*x0^2 + 3*x1 - 5", r).to_string(), "-1/2*x0^2 + 3*x1 - 5");
  EXPECT_EQ(parse_poly("x1 - x0", r).to_string(), "-x0 + x1");
  EXPECT_EQ(parse_poly("-1", r).to_string(), "-1");
}

TEST(Order, LexAndDegrevlex) {
  const PolyRing dr = ring_of({"x", "y", "z"});
  const PolyRing lx = ring_of({"x", "y", "z"}, MonomialOrder::lex());
  // degrevlex: y^2 > x*z; lex: x*z > y^2.
  EXPECT_EQ(parse_poly("x*z + y^2", dr).leading_monomial(), Monomial({0, 2, 0}));
  EXPECT_EQ(parse_poly("x*z + y^2", lx).leading_monomial(), Monomial({1, 0, 1}));
  EXPECT_EQ(parse_poly("x + y^3", lx).leading_monomial(), Monomial({1, 0, 0}));
  EXPECT_EQ(parse_poly("x + y^3", dr).leading_monomial(), Monomial({0, 3, 0}));
}

TEST(Order, TotalAndMultiplicative) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<std::uint32_t> e(0, 3);
  for (auto order : {MonomialOrder::degrevlex(), MonomialOrder::lex(), MonomialOrder::eliminating(2)}) {
    const PolyRing r({"a", "b", "c", "d"}, order);
    for (int trial = 0; trial < 300; ++trial) {
      Monomial m[3];
      for (auto& mm : m) mm = Monomial(std::vector<std::uint32_t>{e(rng), e(rng), e(rng), e(rng)});
      const int ab = r.compare(m[0], m[1]);
      EXPECT_EQ(ab == 0, m[0] == m[1]);
      EXPECT_EQ(ab, -r.compare(m[1], m[0]));
      EXPECT_EQ(r.compare(m[0] * m[2], m[1] * m[2]), ab);
      EXPECT_GE(r.compare(m[0] * m[2], m[0]), 0);
      if (ab < 0 && r.compare(m[1], m[2]) < 0) EXPECT_LT(r.compare(m[0], m[2]), 0);
    }
  }
}

TEST(Derivative, Examples) {
  const PolyRing r = projective_ring(3);
  const Polynomial f = parse_poly("x0*x1 - x2^2", r);
  EXPECT_EQ(f.derivative(2), parse_poly("-2*x2", r));
  EXPECT_TRUE(f.derivative(3).is_zero());
  const Polynomial g = symmetroid().generators()[0];
  EXPECT_EQ(g.derivative(5), parse_poly("T0*T3 - T1^2", g.ring()));
  EXPECT_EQ(error_code_of([&] { r.require_index("x9"); }), ErrorCode::UnknownVariable);
}

TEST(SubstituteLine, ConeChartExpansion) {
  const Chart chart = Chart::from_label(3, "1,4");
  const LineParam psi = chart_param(chart);
  const Polynomial image = substitute_line(cone().generators()[0], psi);
  const PolyRing& cr = image.ring();
  EXPECT_EQ(image, parse_poly("(a1_1 - a1_2^2)*s^2 + (a2_1 - 2*a1_2*a2_2)*s*t - a2_2^2*t^2", cr));
  const auto coeffs = st_coefficients(image);
  const PolyRing& r = chart.ring();
  ASSERT_EQ(coeffs.size(), 3u);
  EXPECT_EQ(coeffs[0], parse_poly("a1_1 - a1_2^2", r));
  EXPECT_EQ(coeffs[1], parse_poly("a2_1 - 2*a1_2*a2_2", r));
  EXPECT_EQ(coeffs[2], parse_poly("-a2_2^2", r));
}

TEST(SubstituteLine, CoordinateAndVanishing) {
  const PolyRing r = projective_ring(3);
  const LineParam psi = line_param(line_rows({1, 0, 0, 0}, {0, 0, 0, 1}));
  EXPECT_EQ(substitute_line(parse_poly("x3", r), psi), parse_poly("t", st_ring()));
  const LineParam psi2 = line_param(line_rows({1, 0, 0, 0}, {0, 0, 1, 0}));
  EXPECT_TRUE(substitute_line(parse_poly("x0*x3 - x1*x2", r), psi2).is_zero());
  EXPECT_EQ(error_code_of([&] { substitute_line(parse_poly("x0", projective_ring(2)), psi); }), ErrorCode::ArityMismatch);
}

TEST(StCoefficients, EdgeCases) {
  EXPECT_TRUE(st_coefficients(Polynomial(st_ring())).empty());
  const auto c = st_coefficients(parse_poly("s*t", st_ring()));
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].ring().nvars(), 0u);
  EXPECT_TRUE(c[0].is_one());
  EXPECT_EQ(error_code_of([] { st_coefficients(parse_poly("s + t^2", st_ring())); }), ErrorCode::NotHomogeneousInST);
}

TEST(RingProperties, Axioms) {
  std::mt19937 rng(2024);
  const PolyRing r = ring_of({"x", "y", "z"});
  const Polynomial one = Polynomial::constant(r, 1);
  for (int trial = 0; trial < 100; ++trial) {
    const Polynomial f = random_poly(rng, r, 5, 3), g = random_poly(rng, r, 5, 3), h = random_poly(rng, r, 5, 3);
    EXPECT_EQ((f + g) + h, f + (g + h));
    EXPECT_EQ(f * (g + h), f * g + f * h);
    EXPECT_EQ(one * f, f);
    EXPECT_EQ(f * g, g * f);
    EXPECT_TRUE((f - f).is_zero());
    for (const Polynomial& p : {f + g, f * g, f - h, f.pow(2), f.derivative(1)}) EXPECT_TRUE(is_canonical(p));
  }
}

TEST(RingProperties, ParserRoundTrip) {
  std::mt19937 rng(7);
  const PolyRing r = ring_of({"x0", "x1", "x2", "w"});
  for (int trial = 0; trial < 200; ++trial) {
    const Polynomial f = random_poly(rng, r, 6, 4);
    const std::string printed = f.to_string();
    const Polynomial back = parse_poly(printed, r);
    EXPECT_EQ(back, f) << printed;
    EXPECT_EQ(back.to_string(), printed);
  }
}

TEST(RingProperties, SubstitutionIsMorphism) {
  std::mt19937 rng(99);
  const PolyRing r = projective_ring(3);
  const LineParam psi = chart_param(Chart::from_label(3, "1,4"));
  for (int trial = 0; trial < 30; ++trial) {
    const Polynomial f = random_poly(rng, r, 3, 2), g = random_poly(rng, r, 3, 2);
    EXPECT_EQ(substitute_line(f * g, psi), substitute_line(f, psi) * substitute_line(g, psi));
    EXPECT_EQ(substitute_line(f + g, psi), substitute_line(f, psi) + substitute_line(g, psi));
  }
}

TEST(RingProperties, StCoefficientsDetectVanishing) {
  // A chart point zeroes all coefficients iff F vanishes at 5 sample points
  // of the specialized line.
  const std::vector<std::pair<long, long>> st = {{1, 0}, {0, 1}, {1, 1}, {1, -1}, {1, 2}};
  const Chart chart = Chart::from_label(3, "1,4");
  const Polynomial f = cone().generators()[0];
  const auto coeffs = st_coefficients(substitute_line(f, chart_param(chart)));
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> v(-3, 3);
  int on = 0;
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Rational> z = {Rational(v(rng)), Rational(v(rng)), Rational(v(rng)), Rational(v(rng))};
    if (trial % 3 == 0) {  // force points of the Fano chart: d = 0, a = b^2, c = 0
      z[3] = 0;
      z[0] = z[1] * z[1];
      z[2] = 0;
    }
    bool all_zero = true;
    for (const auto& c : coeffs) all_zero = all_zero && c.evaluate(z) == 0;
    const LineRep line = LineRep::from_rows({chart.matrix_at(z).row(0), chart.matrix_at(z).row(1)});
    bool vanishes = true;
    for (auto [s, t] : st) vanishes = vanishes && f.evaluate(line.point(Rational(s), Rational(t))) == 0;
    EXPECT_EQ(all_zero, vanishes);
    on += all_zero;
  }
  EXPECT_GE(on, 20);
}
