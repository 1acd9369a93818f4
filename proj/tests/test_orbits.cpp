#include <gtest/gtest.h>

#include <cstdlib>
#include <set>

#include "conicnet/classify.hpp"
#include "conicnet/orbits.hpp"
#include "support.hpp"

using namespace conicnet;
using testutil::sym;

TEST(Group, ElementCounts) {
  EXPECT_EQ(pgl3_order(3), 5616u);
  EXPECT_EQ(pgl3_order(5), 372000u);
  for (int q : {3, 5}) {
    const auto f = Field::of_order(q);
    std::uint64_t n = 0;
    bool saw_identity = false;
    for_each_group_element(*f, [&](const Mat3& a) {
      ++n;
      EXPECT_EQ(canonical_projectivity(*f, a), a);
      saw_identity = saw_identity || a == Mat3::identity(*f);
      return true;
    });
    EXPECT_EQ(n, pgl3_order(q));
    EXPECT_TRUE(saw_identity);
  }
}

TEST(Group, CanonicalProjectivityIgnoresScalars) {
  const auto f = Field::of_order(7);
  std::mt19937_64 rng(2);
  for (int i = 0; i < 50; ++i) {
    const Mat3 a = testutil::random_invertible(*f, rng);
    Mat3 b = a;
    for (auto& x : b.m) x = f->mul(x, f->at(3));
    EXPECT_EQ(canonical_projectivity(*f, a), canonical_projectivity(*f, b));
  }
}

TEST(Group, GeneratorsReachTheWholeGroupOnPoints) {
  // The generated orbit of a rank-1 point is all of the Veronesean.
  for (int q : {3, 9}) {
    const auto f = Field::of_order(q);
    const std::vector<Coords> row = {sym(*f, {1, 0, 0, 0, 0, 0})};
    EXPECT_EQ(orbit_of(f, Subspace::from_rows(*f, 6, row)).size(), projective_point_count(2, q));
  }
}

TEST(Orbits, ExampleOrbits) {
  const auto f = Field::of_order(3);
  const Subspace s1 = plane_representative(f, PlaneLabel::Sigma1).subspace;
  EXPECT_EQ(orbit_of(f, s1).size(), 13u);
  EXPECT_EQ(stabilizer_order(f, s1), 432u);

  const Subspace s2 = plane_representative(f, PlaneLabel::Sigma2).subspace;
  EXPECT_EQ(orbit_of(f, s2).size() * stabilizer_order(f, s2), 5616u);

  const std::vector<Coords> all = {sym(*f, {1, 0, 0, 0, 0, 0}), sym(*f, {0, 1, 0, 0, 0, 0}), sym(*f, {0, 0, 1, 0, 0, 0}),
                                   sym(*f, {0, 0, 0, 1, 0, 0}), sym(*f, {0, 0, 0, 0, 1, 0}), sym(*f, {0, 0, 0, 0, 0, 1})};
  EXPECT_EQ(stabilizer_order(f, Subspace::from_rows(*f, 6, all)), 5616u);
}

TEST(Orbits, GeneratorAndFullGroupClosuresAgree) {
  const auto f = Field::of_order(3);
  for (PlaneLabel l : plane_labels_for(3)) {
    const Subspace s = plane_representative(f, l).subspace;
    const auto a = orbit_of(f, s, OrbitMethod::Generators);
    const auto b = orbit_of(f, s, OrbitMethod::FullGroup);
    const SubspaceEnumerator en(f, 5, 2);
    std::set<std::uint64_t> sa, sb;
    for (const auto& x : a) sa.insert(en.index_of(x));
    for (const auto& x : b) sb.insert(en.index_of(x));
    EXPECT_EQ(sa, sb) << to_string(l);
  }
}

TEST(Orbits, OrbitStabilizerForAllRepresentatives) {
  for (int q : {3, 5}) {
    const auto f = Field::of_order(q);
    for (PlaneLabel l : plane_labels_for(q)) {
      const Subspace s = plane_representative(f, l).subspace;
      EXPECT_EQ(orbit_of(f, s).size() * stabilizer_order(f, s), pgl3_order(q)) << to_string(l) << " q=" << q;
    }
    for (LineLabel l : all_line_labels()) {
      const Subspace s = line_representative(f, l).subspace;
      EXPECT_EQ(orbit_of(f, s).size() * stabilizer_order(f, s), pgl3_order(q)) << to_string(l) << " q=" << q;
    }
  }
}

TEST(Orbits, OrbitIsActionInvariant) {
  const auto f = Field::of_order(3);
  std::mt19937_64 rng(8);
  const Subspace s = plane_representative(f, PlaneLabel::Sigma10).subspace;
  const Subspace t = act(*f, testutil::random_invertible(*f, rng), s);
  const SubspaceEnumerator en(f, 5, 2);
  std::set<std::uint64_t> a, b;
  for (const auto& x : orbit_of(f, s)) a.insert(en.index_of(x));
  for (const auto& x : orbit_of(f, t)) b.insert(en.index_of(x));
  EXPECT_EQ(a, b);
}

TEST(Orbits, MemoryLimitFromEnvironment) {
  const auto f = Field::of_order(3);
  ::setenv("CONICNET_ORBIT_LIMIT", "5", 1);
  EXPECT_EQ(orbit_memory_limit(), 5u);
  try {
    orbit_of(f, plane_representative(f, PlaneLabel::Sigma1).subspace);
    ::unsetenv("CONICNET_ORBIT_LIMIT");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MemoryBoundExceeded);
  }
  ::setenv("CONICNET_ORBIT_LIMIT", "junk", 1);
  EXPECT_EQ(orbit_memory_limit(), 20'000'000u);
  ::unsetenv("CONICNET_ORBIT_LIMIT");
}

TEST(Orbits, PointPartition) {
  const auto f = Field::of_order(3);
  const OrbitPartition part = orbit_partition(f, 0);
  ASSERT_EQ(part.sizes.size(), 4u);
  std::multiset<std::uint64_t> sizes(part.sizes.begin(), part.sizes.end());
  EXPECT_EQ(sizes, (std::multiset<std::uint64_t>{13, 78, 39, 234}));
}

TEST(Witness, FindsInverseImage) {
  for (int q : {3, 5, 7}) {
    const auto f = Field::of_order(q);
    std::mt19937_64 rng(static_cast<std::uint64_t>(q));
    for (PlaneLabel l : plane_labels_for(q)) {
      const Subspace s = plane_representative(f, l).subspace;
      const Subspace t = act(*f, testutil::random_invertible(*f, rng), s);
      const auto w = find_witness(f, t, s);
      ASSERT_TRUE(w.has_value()) << to_string(l) << " q=" << q;
      EXPECT_EQ(act(*f, *w, t), s);
    }
  }
}

TEST(Witness, SigmaCAndItsInverse) {
  // q = 7: c = 2 and d = 4 satisfy cd = 1.
  const auto f = Field::of_order(7);
  const Subspace a = sigma14_plane(f, f->at(2));
  const Subspace b = sigma14_plane(f, f->at(4));
  const auto w = find_witness(f, a, b);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(act(*f, *w, a), b);
}

TEST(Witness, AbsentBetweenDistinctOrbits) {
  for (int q : {3, 5}) {
    const auto f = Field::of_order(q);
    EXPECT_FALSE(find_witness(f, plane_representative(f, PlaneLabel::Sigma8).subspace,
                              plane_representative(f, PlaneLabel::Sigma9).subspace)
                     .has_value());
    EXPECT_FALSE(find_witness(f, line_representative(f, LineLabel::o15_1).subspace,
                              line_representative(f, LineLabel::o16).subspace)
                     .has_value());
  }
}

TEST(Witness, RejectsMismatchedDimensions) {
  const auto f = Field::of_order(3);
  try {
    find_witness(f, plane_representative(f, PlaneLabel::Sigma1).subspace, line_representative(f, LineLabel::o5).subspace);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DimensionMismatch);
  }
}

TEST(Witness, LinesWithoutRankOnePoints) {
  const auto f = Field::of_order(5);
  std::mt19937_64 rng(4);
  const Subspace s = line_representative(f, LineLabel::o17).subspace;
  const Subspace t = act(*f, testutil::random_invertible(*f, rng), s);
  const auto w = find_witness(f, s, t);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(act(*f, *w, s), t);
}
