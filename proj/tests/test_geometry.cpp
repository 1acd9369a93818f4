#include <gtest/gtest.h>

#include <set>

#include "conicnet/geometry.hpp"
#include "support.hpp"

using namespace conicnet;
using testutil::sym;

namespace {

ProjPoint pt(const Field& f, std::initializer_list<int> v) {
  std::vector<Elem> c;
  for (int x : v) c.push_back(f.from_int(x));
  return ProjPoint(f, c);
}

}  // namespace

TEST(Geometry, ProjPointNormalizesFirstNonzeroCoordinate) {
  const auto f = Field::of_order(5);
  EXPECT_EQ(pt(*f, {0, 2, 4}), pt(*f, {0, 1, 2}));
  EXPECT_EQ(pt(*f, {0, 2, 4})[1], f->one());
  const std::vector<Elem> zero(3);
  EXPECT_THROW(ProjPoint(*f, zero), Error);
}

TEST(Geometry, SpanOfPoints) {
  const auto f = Field::of_order(3);
  const std::vector<ProjPoint> two = {pt(*f, {1, 0, 0}), pt(*f, {0, 1, 0})};
  const Subspace line = span(*f, two);
  EXPECT_EQ(line.dim(), 1);
  EXPECT_EQ(line, line_from_coords(*f, pt(*f, {0, 0, 1}).coords()));
  const std::vector<ProjPoint> same = {pt(*f, {1, 2, 0}), pt(*f, {2, 1, 0})};
  EXPECT_EQ(span(*f, same).dim(), 0);
  const auto g = Field::of_order(5);
  const std::vector<Coords> rows = {sym(*g, {1, 0, 0, 0, 0, 0}), sym(*g, {0, 0, 0, 1, 0, 0}),
                                    sym(*g, {0, 0, 0, 0, 0, 1})};
  EXPECT_EQ(Subspace::from_independent_rows(*g, 6, rows).dim(), 2);
}

TEST(Geometry, PointCounts) {
  const auto f3 = Field::of_order(3);
  const auto f5 = Field::of_order(5);
  EXPECT_EQ(projective_point_count(1, 3), 4u);
  EXPECT_EQ(projective_point_count(2, 5), 31u);
  EXPECT_EQ(projective_point_count(5, 3), 364u);
  EXPECT_EQ(all_points(*f3, 5).size(), 364u);
  const std::vector<Coords> rows = {sym(*f5, {1, 0, 0, 0, 0, 0}), sym(*f5, {0, 1, 0, 0, 0, 0}),
                                    sym(*f5, {0, 0, 0, 1, 0, 0})};
  EXPECT_EQ(points_of(*f5, Subspace::from_independent_rows(*f5, 6, rows)).size(), 31u);
}

TEST(Geometry, GaussianBinomials) {
  EXPECT_EQ(subspace_count(5, 2, 3), 33880u);
  EXPECT_EQ(subspace_count(2, 1, 3), 13u);
  EXPECT_EQ(subspace_count(5, 4, 5), 3906u);
  EXPECT_EQ(subspace_count(5, 1, 3), 11011u);
  EXPECT_EQ(subspace_count(5, 2, 5), 2558556u);
}

TEST(Geometry, EnumeratorIndexRoundTrip) {
  const auto f = Field::of_order(3);
  for (int k : {0, 1, 2}) {
    const SubspaceEnumerator en(f, 5, k);
    EXPECT_EQ(en.count(), subspace_count(5, k, 3));
    std::set<std::vector<int>> seen;
    for (std::uint64_t i = 0; i < en.count(); ++i) {
      const Subspace s = en.at(i);
      ASSERT_EQ(en.index_of(s), i);
      std::vector<int> key;
      for (int r = 0; r < s.rows(); ++r)
        for (int c = 0; c < 6; ++c) key.push_back(s.row(r)[c].v);
      seen.insert(key);
    }
    EXPECT_EQ(seen.size(), en.count());
  }
}

TEST(Geometry, EnumeratorAgreesWithSpanCanonicalForm) {
  const auto f = Field::of_order(5);
  const SubspaceEnumerator en(f, 5, 2);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Subspace s = testutil::random_subspace(*f, 3, rng);
    EXPECT_EQ(en.at(en.index_of(s)), s);
  }
}

TEST(Geometry, ConicPointClasses) {
  const auto f3 = Field::of_order(3);
  const std::array<Elem, 6> form3 = {f3->zero(), f3->zero(), f3->one(), f3->neg(f3->one()), f3->zero(), f3->zero()};
  const Conic2 c3 = Conic2::from_form(*f3, form3);
  EXPECT_EQ(conic_point_class(*f3, c3, pt(*f3, {1, 0, 0})), ConicPointClass::On);
  EXPECT_EQ(conic_point_class(*f3, c3, pt(*f3, {0, 1, 0})), ConicPointClass::External);

  const auto f5 = Field::of_order(5);
  const std::array<Elem, 6> form5 = {f5->zero(), f5->zero(), f5->one(), f5->neg(f5->one()), f5->zero(), f5->zero()};
  const Conic2 c5 = Conic2::from_form(*f5, form5);
  int on = 0, ext = 0, in = 0;
  for (const ProjPoint& x : all_points(*f5, 2)) {
    switch (conic_point_class(*f5, c5, x)) {
      case ConicPointClass::On: ++on; break;
      case ConicPointClass::External: ++ext; break;
      case ConicPointClass::Internal: ++in; break;
    }
  }
  EXPECT_EQ(on, 6);
  EXPECT_EQ(ext, 15);
  EXPECT_EQ(in, 10);

  int tangent = 0, secant = 0, external = 0;
  for (const ProjPoint& l : all_points(*f5, 2)) {
    switch (conic_line_class(*f5, c5, line_from_coords(*f5, l.coords()))) {
      case ConicLineClass::Tangent: ++tangent; break;
      case ConicLineClass::Secant: ++secant; break;
      case ConicLineClass::ExternalLine: ++external; break;
    }
  }
  EXPECT_EQ(tangent, 6);
  EXPECT_EQ(secant, 15);
  EXPECT_EQ(external, 10);
}

TEST(Geometry, TangentLines) {
  const auto f5 = Field::of_order(5);
  const std::array<Elem, 6> form = {f5->zero(), f5->zero(), f5->one(), f5->neg(f5->one()), f5->zero(), f5->zero()};
  const Conic2 c = Conic2::from_form(*f5, form);
  const Subspace t = tangent_line(*f5, c, pt(*f5, {1, 0, 0}));
  EXPECT_EQ(t, line_from_coords(*f5, pt(*f5, {0, 0, 1}).coords()));
  EXPECT_EQ(conic_line_class(*f5, c, t), ConicLineClass::Tangent);
  EXPECT_EQ(conic_line_class(*f5, c, line_from_coords(*f5, pt(*f5, {0, 1, 0}).coords())), ConicLineClass::Secant);
}

TEST(Geometry, ProjectivePlaneIncidence) {
  const auto f = Field::of_order(5);
  const auto plane = ProjectivePlane::get(f);
  EXPECT_EQ(plane->size(), 31);
  for (int l = 0; l < plane->size(); ++l) {
    EXPECT_EQ(plane->points_on_line(l).size(), 6u);
    for (int i : plane->points_on_line(l)) {
      Elem acc{};
      for (int t = 0; t < 3; ++t) acc = f->fma(plane->lines()[l][t], plane->points()[i][t], acc);
      EXPECT_TRUE(acc.is_zero());
    }
  }
  for (int i = 0; i < plane->size(); ++i) EXPECT_EQ(plane->index_of(plane->points()[i].coords()), i);
}

TEST(Geometry, OrthogonalComplementDimensions) {
  const auto f = Field::of_order(7);
  std::mt19937_64 rng(3);
  const std::array<Elem, 6> unit = {f->one(), f->one(), f->one(), f->one(), f->one(), f->one()};
  for (int rows = 1; rows <= 5; ++rows) {
    const Subspace s = testutil::random_subspace(*f, rows, rng);
    const Subspace c = orthogonal_complement(*f, s, unit);
    EXPECT_EQ(c.rows(), 6 - rows);
    for (int i = 0; i < s.rows(); ++i)
      for (int j = 0; j < c.rows(); ++j) {
        Elem acc{};
        for (int t = 0; t < 6; ++t) acc = f->fma(s.row(i)[t], c.row(j)[t], acc);
        EXPECT_TRUE(acc.is_zero());
      }
  }
}
