#include <gtest/gtest.h>

#include "conicnet/classify.hpp"
#include "support.hpp"

using namespace conicnet;
using testutil::sym;

namespace {

const int kOrders[] = {3, 5, 7, 9, 11, 13};

std::vector<oracle::IntSym> int_basis(const Subspace& s) {
  std::vector<oracle::IntSym> out;
  for (int i = 0; i < s.rows(); ++i) out.push_back(testutil::to_int(s.row(i)));
  return out;
}

// First (u, v) or (u, v, w) in search order satisfying the published
// condition, over a prime field.
std::vector<int> first_parameters(int p, bool cubic, int square_v) {
  for (int u = 0; u < p; ++u)
    for (int v = 1; v < p; ++v) {
      if (square_v >= 0 && oracle::is_square(oracle::md(-v, p), p) != (square_v == 1)) continue;
      for (int w = 0; w < (cubic ? p : 1); ++w) {
        bool root = false;
        for (int l = 0; l < p && !root; ++l) {
          const long long val = cubic ? 1LL * l * l * l + 1LL * w * l * l - 1LL * u * l + v
                                      : 1LL * v * l * l + 1LL * u * v * l - 1;
          root = oracle::md(val, p) == 0;
        }
        if (!root) return cubic ? std::vector<int>{u, v, w} : std::vector<int>{u, v};
      }
    }
  return {};
}

}  // namespace

TEST(Labels, NamesRoundTrip) {
  for (PlaneLabel l : all_plane_labels()) EXPECT_EQ(parse_plane_label(to_string(l)), l);
  for (LineLabel l : all_line_labels()) EXPECT_EQ(parse_line_label(to_string(l)), l);
  EXPECT_FALSE(parse_plane_label("Sigma16").has_value());
  EXPECT_EQ(all_line_labels().size(), 15u);
}

TEST(Labels, FifteenPlaneLabelsPerCharacteristic) {
  for (int q : kOrders) {
    const auto labels = plane_labels_for(q);
    EXPECT_EQ(labels.size(), 15u);
    const bool char3 = q % 3 == 0;
    EXPECT_EQ(plane_label_available(PlaneLabel::Sigma14, q), !char3);
    EXPECT_EQ(plane_label_available(PlaneLabel::Sigma14prime, q), char3);
  }
}

TEST(Tables, ExpectedRowsMatchTranscription) {
  for (int q : kOrders) {
    for (PlaneLabel l : plane_labels_for(q))
      EXPECT_EQ(expected_plane_distribution(l, q).n, oracle::plane_row(to_string(l), q)) << to_string(l) << " q=" << q;
    for (LineLabel l : all_line_labels())
      EXPECT_EQ(expected_line_distribution(l, q).n, oracle::line_row(to_string(l), q)) << to_string(l) << " q=" << q;
  }
  EXPECT_EQ(expected_plane_distribution(PlaneLabel::Sigma2, 5).to_string(), "[3, 6, 6, 16]");
  EXPECT_EQ(expected_plane_distribution(PlaneLabel::Sigma14, 7).to_string(), "[1, 3, 3, 50]");
  EXPECT_EQ(expected_line_distribution(LineLabel::o9, 7).to_string(), "[1, 0, 0, 7]");
  EXPECT_THROW(expected_plane_distribution(PlaneLabel::Sigma14prime, 5), Error);
}

TEST(Representatives, PlaneRepresentativesFromTheTable) {
  const auto f = Field::of_order(5);
  EXPECT_EQ(plane_representative(f, PlaneLabel::Sigma2).subspace,
            testutil::subspace(*f, {sym(*f, {1, 0, 0, 0, 0, 0}), sym(*f, {0, 0, 0, 1, 0, 0}), sym(*f, {0, 0, 0, 0, 0, 1})}));
  EXPECT_EQ(plane_representative(f, PlaneLabel::Sigma7).subspace,
            testutil::subspace(*f, {sym(*f, {1, 0, 0, 0, 0, 0}), sym(*f, {0, 1, 0, 0, 0, 0}), sym(*f, {0, 0, 1, 0, 0, 0})}));
  // alpha, beta, gamma matrices of Sigma11
  const auto r = plane_representative(f, PlaneLabel::Sigma11);
  ASSERT_EQ(r.basis.size(), 3u);
  EXPECT_EQ(r.basis[0], sym(*f, {0, 0, 0, 1, 1, 1}));
  EXPECT_EQ(r.basis[1], sym(*f, {0, 1, 0, 0, 0, 0}));
  EXPECT_EQ(r.basis[2], sym(*f, {0, 0, 1, 0, 0, 1}));
  EXPECT_EQ(plane_representative(f, PlaneLabel::Sigma6).parameters.at("eps"), f->canonical_nonsquare());
}

TEST(Representatives, LineRepresentativesFromTheTable) {
  const auto f = Field::of_order(11);
  const auto o5 = line_representative(f, LineLabel::o5);
  EXPECT_EQ(o5.basis[0], sym(*f, {1, 0, 0, 0, 0, 0}));
  EXPECT_EQ(o5.basis[1], sym(*f, {0, 0, 0, 1, 0, 0}));
  const auto o16 = line_representative(f, LineLabel::o16);
  EXPECT_EQ(o16.basis[0], sym(*f, {0, 0, 1, 1, 0, 0}));
  EXPECT_EQ(o16.basis[1], sym(*f, {0, 0, 0, 0, 1, 0}));
}

TEST(Representatives, ParameterSearchOrder) {
  for (int p : {3, 5, 7, 11, 13}) {
    const auto f = Field::of_order(p);
    auto params = [&](LineLabel l, std::initializer_list<const char*> keys) {
      const auto r = line_representative(f, l);
      std::vector<int> out;
      for (const char* k : keys) out.push_back(r.parameters.at(k).v);
      return out;
    };
    EXPECT_EQ(params(LineLabel::o10, {"u", "v"}), first_parameters(p, false, -1)) << p;
    EXPECT_EQ(params(LineLabel::o15_1, {"u", "v"}), first_parameters(p, false, 1)) << p;
    EXPECT_EQ(params(LineLabel::o15_2, {"u", "v"}), first_parameters(p, false, 0)) << p;
    EXPECT_EQ(params(LineLabel::o17, {"u", "v", "w"}), first_parameters(p, true, -1)) << p;
  }
}

TEST(Sigma14, AdmissibilityMatchesCubicSolvability) {
  for (int p : {5, 7, 11, 13}) {
    const auto f = Field::of_order(p);
    std::optional<int> least;
    for (int c = 0; c < p; ++c) {
      const bool expected = oracle::sigma14_admissible(c, p);
      EXPECT_EQ(sigma14_admissible(f, f->at(c)), expected) << "c=" << c << " q=" << p;
      if (expected && !least) least = c;
    }
    ASSERT_TRUE(least.has_value());
    EXPECT_EQ(least_admissible_c(f)->v, *least);
  }
  EXPECT_EQ(least_admissible_c(Field::of_order(7))->v, 2);
  EXPECT_FALSE(least_admissible_c(Field::of_order(3)).has_value());
  EXPECT_FALSE(least_admissible_c(Field::of_order(9)).has_value());
}

TEST(Sigma14, RepresentativeErrors) {
  try {
    plane_representative(Field::of_order(3), PlaneLabel::Sigma14);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::LabelUnavailableForCharacteristic);
  }
  EXPECT_THROW(plane_representative(Field::of_order(9), PlaneLabel::Sigma14), Error);
  EXPECT_THROW(plane_representative(Field::of_order(7), PlaneLabel::Sigma14prime), Error);
  const auto r = plane_representative(Field::of_order(7), PlaneLabel::Sigma14);
  EXPECT_EQ(r.parameters.at("c").v, 2);
}

TEST(ClassifyPlane, RepresentativesClassifyToTheirLabel) {
  for (int q : kOrders) {
    const auto f = Field::of_order(q);
    for (PlaneLabel l : plane_labels_for(q)) {
      const auto rep = plane_representative(f, l);
      const PlaneReport r = classify_plane(f, rep.subspace);
      ASSERT_TRUE(r.label.has_value());
      EXPECT_EQ(*r.label, l) << "q=" << q;
      EXPECT_EQ(r.distribution.n, oracle::plane_row(to_string(l), q)) << to_string(l) << " q=" << q;
      EXPECT_FALSE(r.trace.empty());
    }
  }
}

TEST(ClassifyPlane, DistributionsAgreeWithIntegerOracle) {
  for (int p : {3, 5, 7}) {
    const auto f = Field::of_order(p);
    for (PlaneLabel l : plane_labels_for(p))
      EXPECT_EQ(oracle::distribution(int_basis(plane_representative(f, l).subspace), p), oracle::plane_row(to_string(l), p))
          << to_string(l) << " q=" << p;
  }
}

TEST(ClassifyPlane, SigmaCPlanes) {
  const auto f7 = Field::of_order(7);
  EXPECT_EQ(classify_plane(f7, sigma14_plane(f7, f7->at(2))).label, PlaneLabel::Sigma14);
  for (int q : {3, 9}) {
    const auto f = Field::of_order(q);
    for (int c = 2; c < q; ++c) {
      const auto l = classify_plane(f, sigma14_plane(f, f->at(c))).label;
      ASSERT_TRUE(l.has_value());
      EXPECT_TRUE(*l == PlaneLabel::Sigma12 || *l == PlaneLabel::Sigma13) << "q=" << q << " c=" << c;
    }
  }
}

TEST(ClassifyPlane, PlaneMissingTheVeronesean) {
  // A rank-1 matrix x x^T with zero diagonal is zero.
  const auto f = Field::of_order(5);
  const Subspace s = testutil::subspace(*f, {sym(*f, {0, 1, 0, 0, 0, 0}), sym(*f, {0, 0, 1, 0, 0, 0}),
                                             sym(*f, {0, 0, 0, 0, 1, 0})});
  const PlaneReport r = classify_plane(f, s);
  EXPECT_FALSE(r.label.has_value());
  EXPECT_EQ(r.distribution.n[0], 0u);
}

TEST(ClassifyPlane, Sigma8AndSigma9Differ) {
  for (int q : kOrders) {
    const auto f = Field::of_order(q);
    const auto a = classify_plane(f, plane_representative(f, PlaneLabel::Sigma8).subspace);
    const auto b = classify_plane(f, plane_representative(f, PlaneLabel::Sigma9).subspace);
    EXPECT_EQ(a.distribution, b.distribution);
    EXPECT_NE(a.label, b.label);
  }
}

TEST(ClassifyPlane, RejectsNonPlanes) {
  const auto f = Field::of_order(5);
  EXPECT_THROW(classify_plane(f, line_representative(f, LineLabel::o5).subspace), Error);
}

TEST(ClassifyNet, Examples) {
  const auto f = Field::of_order(5);
  Net diag;
  diag.forms = {sym(*f, {1, 0, 0, 0, 0, 0}), sym(*f, {0, 0, 0, 1, 0, 0}), sym(*f, {0, 0, 0, 0, 0, 1})};
  const PlaneReport r = classify_net(f, diag);
  EXPECT_EQ(r.label, PlaneLabel::Sigma2);
  EXPECT_EQ(r.distribution.to_string(), "[3, 6, 6, 16]");

  Net tangent;
  tangent.forms = {sym(*f, {1, 0, 0, 0, 0, 0}), sym(*f, {0, 1, 0, 0, 0, 0}), sym(*f, {0, 0, 1, 0, 0, 0})};
  EXPECT_EQ(classify_net(f, tangent).label, PlaneLabel::Sigma7);

  Net none;  // X0X1, X0X2, X1X2
  none.forms = {sym(*f, {0, 1, 0, 0, 0, 0}), sym(*f, {0, 0, 1, 0, 0, 0}), sym(*f, {0, 0, 0, 0, 1, 0})};
  try {
    classify_net(f, none);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotRankOne);
  }
}

TEST(ClassifyLine, RepresentativesClassifyToTheirLabel) {
  for (int q : kOrders) {
    const auto f = Field::of_order(q);
    for (LineLabel l : all_line_labels()) {
      const LineReport r = classify_line(f, line_representative(f, l).subspace);
      EXPECT_EQ(r.label, l) << "q=" << q;
      EXPECT_EQ(r.distribution.n, oracle::line_row(to_string(l), q)) << to_string(l) << " q=" << q;
    }
  }
}

TEST(ClassifyLine, SeparatorOnCollidingRows) {
  const auto f = Field::of_order(7);
  const LineReport a = classify_line(f, line_representative(f, LineLabel::o15_1).subspace);
  const LineReport b = classify_line(f, line_representative(f, LineLabel::o16).subspace);
  EXPECT_EQ(a.distribution, b.distribution);
  EXPECT_EQ(a.factor, BinaryFactorType::OneRationalPlusIrreducibleQuadratic);
  EXPECT_EQ(b.factor, BinaryFactorType::TripleRoot);
}
