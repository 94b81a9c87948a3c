#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "gaussfano/fano.hpp"
#include "gaussfano/kernels.hpp"
#include "gaussfano/nbundle.hpp"
#include "helpers.hpp"

using namespace gaussfano;
using namespace gaussfano::test;

namespace {

Polynomial st(const std::string& text) { return parse_poly(text, st_ring()); }

LineRep pi_line(long a0, long a1, long a3, long b0, long b1, long b3) {
  return line_rows({a0, a1, 0, a3, 0, 0}, {b0, b1, 0, b3, 0, 0});
}

Ideal scroll() {
  // Rational normal scroll S(1, 2): 2x2 minors of [[x0, x1, x3], [x1, x2, x4]].
  return ideal_of(projective_ring(4), {"x0*x2 - x1^2", "x0*x4 - x1*x3", "x1*x4 - x2*x3"});
}

Ideal linear_plane() { return ideal_of(projective_ring(4), {"x3", "x4"}); }

}  // namespace

TEST(Conormal, ConeRuling) {
  const auto p = conormal_presentation(cone(), line_rows({1, 0, 0, 0}, {0, 0, 0, 1}));
  ASSERT_EQ(p.ell_basis.size(), 2u);
  EXPECT_EQ(p.ell_basis[0], parse_poly("x1", cone().ring()));
  EXPECT_EQ(p.ell_basis[1], parse_poly("x2", cone().ring()));
  EXPECT_EQ(p.matrix.row_degrees(), (std::vector<int>{1, 1}));
  EXPECT_EQ(p.matrix.col_degrees(), (std::vector<int>{2}));
  EXPECT_EQ(p.matrix.entry(0, 0), st("s"));
  EXPECT_TRUE(p.matrix.entry(1, 0).is_zero());
}

TEST(Conormal, QuadricRuling) {
  const auto p = conormal_presentation(smooth_quadric(), line_rows({1, 0, 0, 0}, {0, 0, 1, 0}));
  EXPECT_EQ(p.ell_basis[0], parse_poly("x1", smooth_quadric().ring()));
  EXPECT_EQ(p.ell_basis[1], parse_poly("x3", smooth_quadric().ring()));
  EXPECT_EQ(p.matrix.entry(0, 0), st("-t"));
  EXPECT_EQ(p.matrix.entry(1, 0), st("s"));
}

TEST(Conormal, HyperplaneUnitRelation) {
  const Ideal h = ideal_of(projective_ring(3), {"x3"});
  const auto p = conormal_presentation(h, line_rows({1, 0, 0, 0}, {0, 1, 0, 0}));
  EXPECT_EQ(p.ell_basis[1], parse_poly("x3", h.ring()));
  EXPECT_EQ(p.matrix.col_degrees(), (std::vector<int>{1}));
  EXPECT_EQ(p.matrix.entry(1, 0), st("1"));
  EXPECT_TRUE(p.matrix.entry(0, 0).is_zero());
  EXPECT_EQ(normal_bundle_splitting(h, line_rows({1, 0, 0, 0}, {0, 1, 0, 0})), SplittingType{{1}});
}

TEST(Conormal, Errors) {
  EXPECT_EQ(error_code_of([] { conormal_presentation(cone(), line_rows({1, 0, 0, 0}, {0, 1, 0, 0})); }),
            ErrorCode::LineNotOnVariety);
  const LineRep l = line_rows({1, 0, 0, 0}, {0, 0, 0, 1});
  const PolyRing r = cone().ring();
  EXPECT_EQ(error_code_of([&] { conormal_presentation(cone(), l, {parse_poly("x1", r)}); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(error_code_of([&] { conormal_presentation(cone(), l, {parse_poly("x1", r), parse_poly("2*x1", r)}); }),
            ErrorCode::InvalidArgument);
  EXPECT_EQ(error_code_of([&] { conormal_presentation(cone(), l, {parse_poly("x1", r), parse_poly("x0", r)}); }),
            ErrorCode::InvalidArgument);
  EXPECT_EQ(error_code_of([&] {
              conormal_presentation(cone(), l, {parse_poly("x1", r), parse_poly("x2", r)}, {0, 1, 1, 3});
            }),
            ErrorCode::InvalidArgument);
}

TEST(Splitting, Examples) {
  EXPECT_EQ(normal_bundle_splitting(cone(), line_rows({1, 0, 0, 0}, {0, 0, 0, 1})), SplittingType{{1}});
  EXPECT_EQ(normal_bundle_splitting(smooth_quadric(), line_rows({1, 0, 0, 0}, {0, 0, 1, 0})), SplittingType{{0}});
  EXPECT_EQ(normal_bundle_splitting(symmetroid(), pi_line(1, 0, 0, 0, 1, 0)), (SplittingType{{1, 1, 1}}));
}

TEST(Splitting, SymmetroidTangentPlaneLine) {
  // Oracle: h^0(N(k)) for k = -2..2 counted directly from the kernel of
  // O(1)^4 -> O(3), (0, -t^2, 2st, -s^2), is 0, 1, 4, 7, 10, which fits
  // O(1) + O(0) + O(0) and rules out O(1) + O(1) + O(-1) (h^0(N(-1)) = 2).
  EXPECT_EQ(normal_bundle_splitting(symmetroid(), line_rows({0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0})),
            (SplittingType{{1, 0, 0}}));
}

TEST(Splitting, CodimTwoScroll) {
  // Ruling through [1:0:0:0:0] and [0:0:0:1:0]; directrix line x0 = x1 = x2 = 0.
  EXPECT_EQ(normal_bundle_splitting(scroll(), line_rows({1, 0, 0, 0, 0}, {0, 0, 0, 1, 0})), SplittingType{{0}});
  EXPECT_EQ(normal_bundle_splitting(scroll(), line_rows({0, 0, 0, 1, 0}, {0, 0, 0, 0, 1})), SplittingType{{-1}});
  const auto check = theorem_check(scroll(), line_rows({1, 0, 0, 0, 0}, {0, 0, 0, 1, 0}));
  EXPECT_EQ(check.dim_x, 2u);
  EXPECT_FALSE(check.gauss.constant);
  EXPECT_TRUE(check.consistent);
}

TEST(Splitting, Errors) {
  const Ideal planes = ideal_of(projective_ring(3), {"x0*x1"});
  EXPECT_EQ(error_code_of([&] { normal_bundle_splitting(planes, line_rows({0, 0, 1, 0}, {0, 0, 0, 1})); }),
            ErrorCode::LineInSingularLocus);
  EXPECT_EQ(error_code_of([] { normal_bundle_splitting(cone(), line_rows({1, 0, 0, 0}, {0, 1, 0, 0})); }),
            ErrorCode::LineNotOnVariety);
  EXPECT_EQ(error_code_of([] { normal_bundle_splitting(cone(), line_rows({1, 0, 0, 0}, {0, 0, 0, 1}), 3); }),
            ErrorCode::BadCodimension);
}

TEST(TheoremCheck, Examples) {
  const auto c = theorem_check(cone(), line_rows({1, 0, 0, 0}, {0, 0, 0, 1}));
  EXPECT_TRUE(c.gauss.constant);
  EXPECT_EQ(c.splitting, SplittingType{{1}});
  EXPECT_TRUE(c.consistent);

  const auto q = theorem_check(smooth_quadric(), line_rows({1, 0, 0, 0}, {0, 0, 1, 0}));
  EXPECT_FALSE(q.gauss.constant);
  EXPECT_EQ(q.splitting, SplittingType{{0}});
  EXPECT_TRUE(q.consistent);

  const auto s = theorem_check(symmetroid(), pi_line(1, 0, 0, 0, 0, 1));
  EXPECT_TRUE(s.gauss.constant);
  EXPECT_EQ(s.splitting, (SplittingType{{1, 1, 1}}));
  EXPECT_TRUE(s.consistent);
  EXPECT_EQ(s.dim_x, 4u);
}

TEST(TheoremCheck, LinearSubspace) {
  const std::vector<LineRep> lines = {line_rows({1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}),
                                      line_rows({1, 0, 0, 0, 0}, {0, 0, 1, 0, 0}),
                                      line_rows({1, 2, 0, 0, 0}, {0, 1, 3, 0, 0}),
                                      line_rows({1, 0, -1, 0, 0}, {0, 1, 1, 0, 0})};
  for (const auto& l : lines) {
    const auto c = theorem_check(linear_plane(), l);
    EXPECT_TRUE(c.gauss.constant);
    EXPECT_EQ(c.splitting, SplittingType{{1}});
    EXPECT_TRUE(c.consistent);
  }
}

TEST(NbundleProperties, PresentationIndependence) {
  struct Case {
    Ideal x;
    LineRep line;
  };
  const std::vector<Case> cases = {
      {cone(), line_rows({1, 0, 0, 0}, {0, 0, 0, 1})},
      {smooth_quadric(), line_rows({1, 0, 0, 0}, {0, 0, 1, 0})},
      {symmetroid(), pi_line(1, 1, 0, 0, 1, 2)},
      {symmetroid(), line_rows({0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0})},
      {scroll(), line_rows({0, 0, 0, 1, 0}, {0, 0, 0, 0, 1})},
  };
  std::mt19937 rng(41);
  std::uniform_int_distribution<long> v(-3, 3);
  for (const auto& c : cases) {
    const SplittingType expected = normal_bundle_splitting(c.x, c.line);
    const auto ell = vanishing_linear_forms(c.line, c.x.ring());
    const std::size_t m = ell.size();
    for (int trial = 0; trial < 10; ++trial) {
      QMatrix g(m, m);
      do {
        for (std::size_t i = 0; i < m; ++i)
          for (std::size_t j = 0; j < m; ++j) g(i, j) = v(rng);
      } while (g.rank() < m);
      std::vector<Polynomial> basis;
      for (std::size_t i = 0; i < m; ++i) {
        Polynomial f(c.x.ring());
        for (std::size_t j = 0; j < m; ++j) f += g(i, j) * ell[j];
        basis.push_back(f);
      }
      std::vector<std::size_t> order(c.x.ring().nvars());
      std::iota(order.begin(), order.end(), 0);
      std::shuffle(order.begin(), order.end(), rng);
      const auto p = conormal_presentation(c.x, c.line, basis, order);
      EXPECT_EQ(dual_splitting(p.matrix), expected) << c.line.to_string();
    }
  }
}

TEST(Kernels, ParallelMatchesSerial) {
  const auto serial = kernels::fano_all_charts_serial(cone());
  const auto parallel = kernels::fano_all_charts(cone());
  ASSERT_EQ(serial.size(), parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    EXPECT_EQ(serial[i].chart, parallel[i].chart);
    EXPECT_EQ(serial[i].ideal.generators(), parallel[i].ideal.generators());
    EXPECT_EQ(serial[i].basis.basis(), parallel[i].basis.basis());
  }
  std::vector<LineRep> lines;
  for (long u = 1; u <= 4; ++u) lines.push_back(line_through(qvec({0, 0, 0, 1}), qvec({u * u, 1, u, 0})));
  const auto a = kernels::theorem_checks_serial(cone(), lines);
  const auto b = kernels::theorem_checks(cone(), lines, 2);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].splitting, b[i].splitting);
    EXPECT_EQ(a[i].gauss.constant, b[i].gauss.constant);
    EXPECT_TRUE(b[i].consistent);
  }
  lines.push_back(line_rows({1, 0, 0, 0}, {0, 1, 0, 0}));
  EXPECT_EQ(error_code_of([&] { kernels::theorem_checks(cone(), lines); }), ErrorCode::LineNotOnVariety);
}
