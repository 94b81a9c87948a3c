#include <gtest/gtest.h>

#include "gaussfano/grassmann.hpp"
#include "gaussfano/p1mod.hpp"
#include "helpers.hpp"

using namespace gaussfano;
using namespace gaussfano::test;

namespace {

Polynomial st(const std::string& text) { return parse_poly(text, st_ring()); }

GradedMatrix column(const std::string& a, const std::string& b) { return GradedMatrix({1, 1}, {2}, {{st(a)}, {st(b)}}); }

void expect_kernel_ok(const GradedMatrix& phi) {
  const GradedMatrix k = kernel_free_basis(phi);
  EXPECT_EQ(k.rows(), phi.cols());
  EXPECT_EQ(k.cols(), phi.cols() - generic_rank(phi));
  if (k.cols() > 0) {
    const GradedMatrix prod = phi.compose(k);
    for (const auto& row : prod.entries())
      for (const auto& e : row) EXPECT_TRUE(e.is_zero());
  }
  int top = 0;
  for (int c : k.col_degrees()) top = std::max(top, c);
  for (int d = top - 2; d <= top + 8; ++d) {
    int free_dim = 0;
    for (int c : k.col_degrees()) free_dim += graded_piece_dim(d - c);
    EXPECT_EQ(free_dim, kernel_dimension(phi, d)) << "degree " << d;
  }
}

}  // namespace

TEST(HilbertFunction, Examples) {
  EXPECT_EQ(hilbert_function(column("s", "0"), 2), 3);
  EXPECT_EQ(hilbert_function(GradedMatrix::zero({1, 1}, {}), 1), 2);
  const GradedMatrix id({0}, {0}, {{st("1")}});
  for (int d = -2; d <= 6; ++d) EXPECT_EQ(hilbert_function(id, d), 0);
  EXPECT_EQ(graded_piece_dim(-1), 0);
  EXPECT_EQ(graded_piece_dim(0), 1);
  EXPECT_EQ(graded_piece_dim(3), 4);
}

TEST(GradedMatrix, Validation) {
  EXPECT_EQ(error_code_of([] { GradedMatrix({1, 1}, {2}, {{st("s^2")}, {st("0")}}); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(error_code_of([] { GradedMatrix({1, 1}, {2}, {{st("s + t^2")}, {st("0")}}); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(error_code_of([] { GradedMatrix({1, 1}, {2}, {{st("s")}}); }), ErrorCode::InvalidArgument);
  const GradedMatrix phi = column("s", "t");
  const GradedMatrix tr = phi.transpose_dual();
  EXPECT_EQ(tr.row_degrees(), (std::vector<int>{-2}));
  EXPECT_EQ(tr.col_degrees(), (std::vector<int>{-1, -1}));
  EXPECT_EQ(tr.transpose_dual().entries(), phi.entries());
  const GradedMatrix sq = GradedMatrix({0}, {1}, {{st("s")}}).compose(GradedMatrix({1}, {3}, {{st("t^2")}}));
  EXPECT_EQ(sq.entry(0, 0), st("s*t^2"));
  EXPECT_EQ(sq.col_degrees(), (std::vector<int>{3}));
}

TEST(DegreeSlice, Shape) {
  const QMatrix m = column("s", "t").degree_slice(2);
  EXPECT_EQ(m.rows(), 4u);
  EXPECT_EQ(m.cols(), 1u);
  EXPECT_EQ(m.rank(), 1u);
}

TEST(KernelFreeBasis, Koszul) {
  const GradedMatrix phi({-2}, {-1, -1}, {{st("-t"), st("s")}});
  const GradedMatrix k = kernel_free_basis(phi);
  ASSERT_EQ(k.cols(), 1u);
  EXPECT_EQ(k.col_degrees(), (std::vector<int>{0}));
  // Generator proportional to (s, t).
  const Rational c = k.entry(0, 0).leading_coeff();
  EXPECT_EQ(k.entry(0, 0), c * st("s"));
  EXPECT_EQ(k.entry(1, 0), c * st("t"));
  expect_kernel_ok(phi);
}

TEST(KernelFreeBasis, CoordinateRow) {
  const GradedMatrix phi({-2}, {-1, -1}, {{st("s"), st("0")}});
  const GradedMatrix k = kernel_free_basis(phi);
  ASSERT_EQ(k.cols(), 1u);
  EXPECT_EQ(k.col_degrees(), (std::vector<int>{-1}));
  EXPECT_TRUE(k.entry(0, 0).is_zero());
  EXPECT_TRUE(k.entry(1, 0).is_constant());
  expect_kernel_ok(phi);
}

TEST(KernelFreeBasis, ZeroMap) {
  const GradedMatrix phi = GradedMatrix::zero({0}, {3, 5});
  const GradedMatrix k = kernel_free_basis(phi);
  EXPECT_EQ(k.col_degrees(), (std::vector<int>{3, 5}));
  EXPECT_EQ(k.entry(0, 0), st("1"));
  EXPECT_TRUE(k.entry(0, 1).is_zero());
  EXPECT_EQ(k.entry(1, 1), st("1"));
}

TEST(KernelFreeBasis, MixedDegrees) {
  const std::vector<GradedMatrix> cases = {
      GradedMatrix({0}, {1, 2, 3}, {{st("s"), st("t^2"), st("s^2*t + t^3")}}),
      GradedMatrix({0, 0}, {2, 2, 2}, {{st("s^2"), st("s*t"), st("t^2")}, {st("s*t"), st("t^2"), st("0")}}),
      GradedMatrix({0, 1}, {1, 2, 3}, {{st("s"), st("t^2"), st("0")}, {st("0"), st("s"), st("t^2")}}),
      GradedMatrix({-3}, {-1, -1, -1}, {{st("s^2"), st("s*t"), st("t^2")}}),
  };
  for (const auto& phi : cases) expect_kernel_ok(phi);
}

TEST(DualSplitting, Examples) {
  EXPECT_EQ(dual_splitting(column("s", "0")), SplittingType{{1}});
  EXPECT_EQ(dual_splitting(column("-t", "s")), SplittingType{{0}});
  EXPECT_EQ(dual_splitting(column("0", "0")), (SplittingType{{1, 1}}));
  EXPECT_EQ(dual_splitting(GradedMatrix::zero({1, 1}, {})), (SplittingType{{1, 1}}));
}

TEST(DualSplitting, RedundantColumnInvariance) {
  const std::vector<GradedMatrix> base = {
      column("s", "0"), column("-t", "s"),
      GradedMatrix({1, 1, 1}, {3, 3}, {{st("s^2"), st("0")}, {st("t^2"), st("s*t")}, {st("0"), st("s^2")}})};
  for (const auto& phi : base) {
    // Append s * (column 0) + t * (last column) (degree adjusted).
    std::vector<std::vector<Polynomial>> e = phi.entries();
    std::vector<int> cols = phi.col_degrees();
    const std::size_t last = phi.cols() - 1;
    const int d = std::max(cols[0], cols[last]) + 1;
    for (std::size_t i = 0; i < phi.rows(); ++i) {
      Polynomial extra = phi.entry(i, 0) * st("s").pow(static_cast<unsigned>(d - cols[0]));
      extra += phi.entry(i, last) * st("t").pow(static_cast<unsigned>(d - cols[last]));
      e[i].push_back(extra);
    }
    cols.push_back(d);
    const GradedMatrix bigger(phi.row_degrees(), cols, e);
    EXPECT_EQ(dual_splitting(bigger), dual_splitting(phi)) << phi.to_string();
    EXPECT_EQ(dual_splitting(phi).rank(), phi.rows() - generic_rank(phi));
  }
}

TEST(SplittingType, Format) {
  const SplittingType t = SplittingType::from_unsorted({-1, 1, 1});
  EXPECT_EQ(t.degrees, (std::vector<int>{1, 1, -1}));
  EXPECT_EQ(t.degree(), 1);
  EXPECT_EQ(t.rank(), 3u);
  EXPECT_EQ(t.to_string(), "O(1) + O(1) + O(-1)");
}
