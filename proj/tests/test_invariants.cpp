#include <gtest/gtest.h>

#include <map>

#include "conicnet/cubics.hpp"
#include "conicnet/geometry.hpp"
#include "conicnet/veronese.hpp"
#include "support.hpp"

using namespace conicnet;

namespace {

Sym3 combine(const Field& f, const Subspace& s, const ProjPoint& c) {
  Sym3 m{};
  for (int k = 0; k < s.rows(); ++k)
    for (int t = 0; t < 6; ++t) m[t] = f.fma(c[k], s.row(k)[t], m[t]);
  return m;
}

}  // namespace

TEST(Invariants, TangentCountsThroughPointsOffTheConic) {
  for (int q : {3, 5}) {
    const auto f = Field::of_order(q);
    // x0 x2 - x1^2
    const std::array<Elem, 6> form = {f->zero(), f->zero(), f->one(), f->neg(f->one()), f->zero(), f->zero()};
    const Conic2 conic = Conic2::from_form(*f, form);
    const SubspaceEnumerator lines(f, 2, 1);
    const auto points = all_points(*f, 2);
    std::map<std::size_t, int> tangents;
    for (std::uint64_t i = 0; i < lines.count(); ++i) {
      const Subspace l = lines.at(i);
      if (conic_line_class(*f, conic, l) != ConicLineClass::Tangent) continue;
      for (const ProjPoint& x : points_of(*f, l))
        for (std::size_t j = 0; j < points.size(); ++j)
          if (points[j] == x) ++tangents[j];
    }
    for (std::size_t j = 0; j < points.size(); ++j) {
      const ConicPointClass cls = conic_point_class(*f, conic, points[j]);
      const int n = tangents.count(j) ? tangents[j] : 0;
      if (cls == ConicPointClass::External) EXPECT_EQ(n, 2) << "q=" << q;
      if (cls == ConicPointClass::Internal) EXPECT_EQ(n, 0) << "q=" << q;
      if (cls == ConicPointClass::On) EXPECT_EQ(n, 1) << "q=" << q;
    }
  }
}

TEST(Invariants, DeterminantalCubicVanishesExactlyOnLowRank) {
  const auto f = Field::of_order(3);
  const SubspaceEnumerator planes(f, 5, 2);
  const auto coeffs = all_points(*f, 2);
  for (std::uint64_t i = 0; i < planes.count(); ++i) {
    const Subspace s = planes.at(i);
    const TernaryCubic d = det_cubic(*f, s.row(0), s.row(1), s.row(2));
    for (const ProjPoint& c : coeffs) {
      const bool low = sym_rank(*f, combine(*f, s, c)) <= 2;
      ASSERT_EQ(eval(*f, d, c.coords()) == f->zero(), low) << "plane " << i;
    }
  }
}

TEST(Invariants, SecantsOfTheVeroneseanHaveNoRankThreePoints) {
  const auto f = Field::of_order(3);
  const auto points = all_points(*f, 2);
  for (std::size_t a = 0; a < points.size(); ++a)
    for (std::size_t b = a + 1; b < points.size(); ++b) {
      const std::vector<Coords> rows = {veronese(*f, points[a]), veronese(*f, points[b])};
      const Subspace line = Subspace::from_rows(*f, 6, rows);
      for (const ProjPoint& x : points_of(*f, line)) EXPECT_LE(sym_rank(*f, x.coords()), 2);
    }
}
