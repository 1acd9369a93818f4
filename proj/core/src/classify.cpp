#include "conicnet/classify.hpp"

#include <array>

namespace conicnet {

namespace {

constexpr const char* kPlaneNames[kPlaneLabelCount] = {
    "Sigma1", "Sigma2",  "Sigma3",  "Sigma4",  "Sigma5",  "Sigma6",       "Sigma7",  "Sigma8",
    "Sigma9", "Sigma10", "Sigma11", "Sigma12", "Sigma13", "Sigma14", "Sigma14prime", "Sigma15",
};

constexpr const char* kLineNames[kLineLabelCount] = {
    "o5", "o6", "o8_1", "o8_2", "o9", "o10", "o12", "o13_1", "o13_2", "o14_1", "o14_2", "o15_1", "o15_2", "o16", "o17",
};

OrbitDistribution dist(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d) {
  OrbitDistribution r;
  r.n = {a, b, c, d};
  return r;
}

int char_of(int q) {
  for (int p = 3; p <= q; p += 2)
    if (q % p == 0) return p;
  throw Error(ErrorCode::NonOddPrime, "q must be an odd prime power");
}

Sym3 sym(const Field& f, std::initializer_list<std::pair<int, Elem>> entries) {
  Sym3 y{};
  for (const auto& [i, v] : entries) y[i] = f.add(y[i], v);
  return y;
}

Representative make_rep(const Field& f, std::vector<Sym3> basis, std::map<std::string, Elem> params) {
  Representative r;
  r.subspace = Subspace::from_independent_rows(f, 6, basis);
  r.basis = std::move(basis);
  r.parameters = std::move(params);
  return r;
}

// v lambda^2 + u v lambda - 1 has no root.
bool condition_star(const Field& f, Elem u, Elem v) {
  for (int t = 0; t < f.q(); ++t) {
    const Elem l = f.at(t);
    const Elem val = f.sub(f.mul(v, f.add(f.mul(l, l), f.mul(u, l))), f.one());
    if (val.is_zero()) return false;
  }
  return true;
}

// lambda^3 + w lambda^2 - u lambda + v has no root.
bool condition_star2(const Field& f, Elem u, Elem v, Elem w) {
  for (int t = 0; t < f.q(); ++t) {
    const Elem l = f.at(t);
    Elem val = f.mul(f.add(l, w), f.mul(l, l));
    val = f.add(f.sub(val, f.mul(u, l)), v);
    if (val.is_zero()) return false;
  }
  return true;
}

}  // namespace

std::string to_string(PlaneLabel label) { return kPlaneNames[static_cast<int>(label)]; }
std::string to_string(LineLabel label) { return kLineNames[static_cast<int>(label)]; }

std::optional<PlaneLabel> parse_plane_label(const std::string& name) {
  for (int i = 0; i < kPlaneLabelCount; ++i)
    if (name == kPlaneNames[i]) return static_cast<PlaneLabel>(i);
  return std::nullopt;
}

std::optional<LineLabel> parse_line_label(const std::string& name) {
  for (int i = 0; i < kLineLabelCount; ++i)
    if (name == kLineNames[i]) return static_cast<LineLabel>(i);
  return std::nullopt;
}

const std::vector<PlaneLabel>& all_plane_labels() {
  static const std::vector<PlaneLabel> labels = [] {
    std::vector<PlaneLabel> v;
    for (int i = 0; i < kPlaneLabelCount; ++i) v.push_back(static_cast<PlaneLabel>(i));
    return v;
  }();
  return labels;
}

const std::vector<LineLabel>& all_line_labels() {
  static const std::vector<LineLabel> labels = [] {
    std::vector<LineLabel> v;
    for (int i = 0; i < kLineLabelCount; ++i) v.push_back(static_cast<LineLabel>(i));
    return v;
  }();
  return labels;
}

bool plane_label_available(PlaneLabel label, int q) {
  const bool char3 = char_of(q) == 3;
  if (label == PlaneLabel::Sigma14) return !char3;
  if (label == PlaneLabel::Sigma14prime) return char3;
  return true;
}

std::vector<PlaneLabel> plane_labels_for(int q) {
  std::vector<PlaneLabel> out;
  for (PlaneLabel l : all_plane_labels())
    if (plane_label_available(l, q)) out.push_back(l);
  return out;
}

OrbitDistribution expected_plane_distribution(PlaneLabel label, int q) {
  if (!plane_label_available(label, q))
    throw Error(ErrorCode::LabelUnavailableForCharacteristic, to_string(label) + " does not occur for q = " + std::to_string(q));
  const std::uint64_t Q = static_cast<std::uint64_t>(q);
  switch (label) {
    case PlaneLabel::Sigma1: return dist(Q + 1, Q * (Q + 1) / 2, Q * (Q - 1) / 2, 0);
    case PlaneLabel::Sigma2: return dist(3, 3 * (Q - 1) / 2, 3 * (Q - 1) / 2, (Q - 1) * (Q - 1));
    case PlaneLabel::Sigma3:
    case PlaneLabel::Sigma4: return dist(2, (3 * Q - 1) / 2, (Q - 1) / 2, Q * Q - Q);
    case PlaneLabel::Sigma5: return dist(2, Q - 1, Q - 1, Q * Q - Q + 1);
    case PlaneLabel::Sigma6:
    case PlaneLabel::Sigma13: return dist(1, (Q + 1) / 2, (Q + 1) / 2, Q * Q - 1);
    case PlaneLabel::Sigma7: return dist(1, Q * Q + Q, 0, 0);
    case PlaneLabel::Sigma8:
    case PlaneLabel::Sigma9: return dist(1, 2 * Q, 0, Q * Q - Q);
    case PlaneLabel::Sigma10: return dist(1, Q, Q, Q * Q - Q);
    case PlaneLabel::Sigma11:
    case PlaneLabel::Sigma14prime:
    case PlaneLabel::Sigma15: return dist(1, Q, 0, Q * Q);
    case PlaneLabel::Sigma12: return dist(1, (Q - 1) / 2, (Q - 1) / 2, Q * Q + 1);
    case PlaneLabel::Sigma14:
      if (Q % 3 == 1) return dist(1, (Q - 1) / 2, (Q - 1) / 2, Q * Q + 1);
      return dist(1, (Q + 1) / 2, (Q + 1) / 2, Q * Q - 1);
  }
  throw Error(ErrorCode::InternalInconsistency, "unknown plane label");
}

OrbitDistribution expected_line_distribution(LineLabel label, int q) {
  char_of(q);
  const std::uint64_t Q = static_cast<std::uint64_t>(q);
  switch (label) {
    case LineLabel::o5: return dist(2, (Q - 1) / 2, (Q - 1) / 2, 0);
    case LineLabel::o6: return dist(1, Q, 0, 0);
    case LineLabel::o8_1: return dist(1, 1, 0, Q - 1);
    case LineLabel::o8_2: return dist(1, 0, 1, Q - 1);
    case LineLabel::o9: return dist(1, 0, 0, Q);
    case LineLabel::o10: return dist(0, (Q + 1) / 2, (Q + 1) / 2, 0);
    case LineLabel::o12: return dist(0, Q + 1, 0, 0);
    case LineLabel::o13_1: return dist(0, 2, 0, Q - 1);
    case LineLabel::o13_2: return dist(0, 1, 1, Q - 1);
    case LineLabel::o14_1: return dist(0, 3, 0, Q - 2);
    case LineLabel::o14_2: return dist(0, 1, 2, Q - 2);
    case LineLabel::o15_1: return dist(0, 1, 0, Q);
    case LineLabel::o15_2: return dist(0, 0, 1, Q);
    case LineLabel::o16: return dist(0, 1, 0, Q);
    case LineLabel::o17: return dist(0, 0, 0, Q + 1);
  }
  throw Error(ErrorCode::InternalInconsistency, "unknown line label");
}

LineReport classify_line(const FieldPtr& field, const Subspace& line) {
  if (line.cols() != 6 || line.rows() != 2) throw Error(ErrorCode::DimensionMismatch, "expected a line of PG(5,q)");
  LineReport r;
  r.distribution = distribution(field, line);
  r.cubic = det_cubic(*field, line.row(0), line.row(1));
  r.factor = binary_factor_type(*field, r.cubic);
  r.trace.push_back("distribution=" + r.distribution.to_string());
  r.trace.push_back("det_cubic=" + to_string(*field, r.cubic) + " (" + to_string(r.factor) + ")");
  std::vector<LineLabel> matches;
  for (LineLabel l : all_line_labels())
    if (expected_line_distribution(l, field->q()) == r.distribution) matches.push_back(l);
  if (matches.size() == 1) {
    r.label = matches[0];
    return r;
  }
  if (matches.size() == 2 && matches[0] == LineLabel::o15_1 && matches[1] == LineLabel::o16) {
    if (r.factor == BinaryFactorType::OneRationalPlusIrreducibleQuadratic) {
      r.label = LineLabel::o15_1;
    } else if (r.factor == BinaryFactorType::TripleRoot) {
      r.label = LineLabel::o16;
    } else {
      throw Error(ErrorCode::InternalInconsistency,
                  "distribution [0,1,0,q] with det cubic type " + to_string(r.factor));
    }
    return r;
  }
  throw Error(ErrorCode::InternalInconsistency, "no line orbit has distribution " + r.distribution.to_string());
}

PlaneReport classify_plane(const FieldPtr& field, const Subspace& plane, ClassifyOptions options) {
  if (plane.cols() != 6 || plane.rows() != 3) throw Error(ErrorCode::DimensionMismatch, "expected a plane of PG(5,q)");
  const Field& f = *field;
  const int q = f.q();
  const auto pg2 = ProjectivePlane::get(field);
  const auto table = PointClassTable::get(field);
  const Coords& r0 = plane.row(0);
  const Coords& r1 = plane.row(1);
  const Coords& r2 = plane.row(2);

  PlaneReport rep;
  std::vector<PointClass> cls(static_cast<std::size_t>(pg2->size()));
  std::vector<int> rank1;
  for (int i = 0; i < pg2->size(); ++i) {
    const ProjPoint& c = pg2->points()[i];
    Sym3 y;
    for (int t = 0; t < 6; ++t) y[t] = f.fma(c[0], r0[t], f.fma(c[1], r1[t], f.mul(c[2], r2[t])));
    const PointClass pc = table ? table->at(y) : classify_point(f, y);
    cls[i] = pc;
    ++rep.distribution.n[static_cast<int>(pc)];
    if (pc == PointClass::P1) rank1.push_back(i);
  }
  const OrbitDistribution& d = rep.distribution;
  auto note = [&](const std::string& s) {
    if (options.trace) rep.trace.push_back(s);
  };
  note("distribution=" + d.to_string());
  if (d.n[0] == 0) {
    note("n1=0: plane misses the Veronesean");
    return rep;
  }

  auto cubic = [&]() -> const TernaryCubic& {
    if (!rep.cubic) {
      rep.cubic = det_cubic(f, r0, r1, r2);
      note("det_cubic=" + to_string(f, *rep.cubic, {"a", "b", "g"}));
    }
    return *rep.cubic;
  };
  if (options.trace) cubic();
  auto fail = [&](const std::string& why) -> PlaneLabel {
    throw Error(ErrorCode::InternalInconsistency, "plane with distribution " + d.to_string() + ": " + why);
  };
  auto is = [&](PlaneLabel l) { return d == expected_plane_distribution(l, q); };
  const bool char3 = f.p() == 3;
  const bool minus3_square = !char3 && f.is_nonzero_square(f.neg(f.from_int(3)));
  auto inflexions = [&]() {
    const int n = rational_inflexion_count(field, cubic());
    note("rational_inflexions=" + std::to_string(n));
    return n;
  };
  auto components = [&]() {
    Components c = linear_components(field, cubic());
    if (options.trace) {
      std::string s = "linear_components=";
      for (const auto& l : c.lines) {
        s += "[" + f.format(l.line[0]) + "," + f.format(l.line[1]) + "," + f.format(l.line[2]) + "]^" +
             std::to_string(l.multiplicity) + " ";
      }
      note(s + "residual=" + to_string(c.residual));
    }
    return c;
  };

  PlaneLabel label{};
  const std::uint64_t n1 = d.n[0];
  if (n1 == static_cast<std::uint64_t>(q) + 1) {
    note("n1=q+1");
    label = PlaneLabel::Sigma1;
  } else if (n1 == 3) {
    note("n1=3");
    label = PlaneLabel::Sigma2;
  } else if (n1 == 2) {
    note("n1=2");
    if (is(PlaneLabel::Sigma5)) {
      label = PlaneLabel::Sigma5;
    } else if (is(PlaneLabel::Sigma3)) {
      const Components c = components();
      const LinearComponent* simple = nullptr;
      for (const auto& l : c.lines)
        if (l.multiplicity == 1) simple = &l;
      if (simple == nullptr || c.lines.size() != 2) fail("expected a double line and a simple line");
      int line_idx = -1;
      for (int l = 0; l < pg2->size(); ++l)
        if (pg2->lines()[l] == simple->line) line_idx = l;
      bool through_rank1 = false;
      for (int i : pg2->points_on_line(line_idx))
        if (cls[i] == PointClass::P1) through_rank1 = true;
      note(std::string("simple component ") + (through_rank1 ? "meets" : "misses") + " the rank-1 points");
      label = through_rank1 ? PlaneLabel::Sigma3 : PlaneLabel::Sigma4;
    } else {
      label = fail("no two-point orbit matches");
    }
  } else if (n1 == 1) {
    note("n1=1");
    if (is(PlaneLabel::Sigma7)) {
      label = PlaneLabel::Sigma7;
    } else if (is(PlaneLabel::Sigma10)) {
      label = PlaneLabel::Sigma10;
    } else if (is(PlaneLabel::Sigma8)) {
      const Components c = components();
      if (c.residual == Residual::None) {
        label = PlaneLabel::Sigma8;
      } else if (c.residual == Residual::NondegenerateConic && c.lines.size() == 1) {
        label = PlaneLabel::Sigma9;
      } else {
        label = fail("cubic is neither three lines nor line plus conic");
      }
    } else if (is(PlaneLabel::Sigma6)) {
      const Components c = components();
      if (!c.lines.empty()) {
        label = PlaneLabel::Sigma6;
      } else if (char3) {
        label = PlaneLabel::Sigma13;
      } else {
        const int n = inflexions();
        if (n == 0) {
          label = q % 3 == 2 ? PlaneLabel::Sigma14 : fail("inflexion-free cubic with q = 1 mod 3");
        } else {
          label = n == (minus3_square ? 1 : 3) ? PlaneLabel::Sigma13 : fail("unexpected inflexion count");
        }
      }
    } else if (is(PlaneLabel::Sigma12)) {
      if (char3) {
        label = PlaneLabel::Sigma12;
      } else {
        const int n = inflexions();
        if (n == 0) {
          label = q % 3 == 1 ? PlaneLabel::Sigma14 : fail("inflexion-free cubic with q = 2 mod 3");
        } else {
          label = n == (minus3_square ? 3 : 1) ? PlaneLabel::Sigma12 : fail("unexpected inflexion count");
        }
      }
    } else if (is(PlaneLabel::Sigma11)) {
      const Components c = components();
      if (c.is_triple_line()) {
        label = PlaneLabel::Sigma15;
      } else if (!char3) {
        label = PlaneLabel::Sigma11;
      } else {
        // Pair-line test: a line missing the rank-1 point that carries
        // exactly two points of rank <= 2.
        const int p1 = rank1.front();
        bool pair_line = false;
        for (int l = 0; l < pg2->size() && !pair_line; ++l) {
          const auto& on = pg2->points_on_line(l);
          int low = 0;
          bool hits_p1 = false;
          for (int i : on) {
            if (i == p1) hits_p1 = true;
            if (cls[i] != PointClass::P3) ++low;
          }
          pair_line = !hits_p1 && low == 2;
        }
        note(std::string("pair line ") + (pair_line ? "found" : "absent"));
        label = pair_line ? PlaneLabel::Sigma11 : PlaneLabel::Sigma14prime;
      }
    } else {
      label = fail("no one-point orbit matches");
    }
  } else {
    label = fail("impossible number of rank-1 points");
  }
  if (d != expected_plane_distribution(label, q)) fail("label " + to_string(label) + " disagrees with its distribution");
  rep.label = label;
  note("label=" + to_string(label));
  return rep;
}

PlaneReport classify_net(const FieldPtr& field, const Net& net) {
  PlaneReport r = classify_plane(field, net_to_plane(*field, net));
  if (!r.label) throw Error(ErrorCode::NotRankOne, "the net contains no repeated line");
  return r;
}

bool sigma14_admissible(const FieldPtr& field, Elem c) {
  const Field& f = *field;
  if (f.p() == 3) return false;
  if (c.is_zero() || c == f.one()) return false;
  if (!f.is_nonzero_square(f.mul(f.neg(f.from_int(3)), c))) return false;
  const auto root = sqrt_in_sqrt_minus3(f, c);
  if (!root) throw Error(ErrorCode::InternalInconsistency, "-3c square but sqrt(c) missing from F_q(sqrt -3)");
  const QuadElem num{f.add(root->a, f.one()), root->b};
  const QuadElem den{f.sub(root->a, f.one()), root->b};
  const QuadElem ratio = mul_sqrt_minus3(f, num, inv_sqrt_minus3(f, den));
  return !is_cube_in_sqrt_minus3(field, ratio);
}

std::optional<Elem> least_admissible_c(const FieldPtr& field) {
  for (int t = 0; t < field->q(); ++t)
    if (sigma14_admissible(field, field->at(t))) return field->at(t);
  return std::nullopt;
}

Subspace sigma14_plane(const FieldPtr& field, Elem c) {
  const Field& f = *field;
  const Elem one = f.one();
  const std::vector<Sym3> basis = {sym(f, {{0, one}}), sym(f, {{1, one}, {4, one}}),
                                   sym(f, {{3, c}, {4, f.neg(one)}, {5, one}})};
  return Subspace::from_independent_rows(f, 6, basis);
}

Representative plane_representative(const FieldPtr& field, PlaneLabel label) {
  const Field& f = *field;
  if (!plane_label_available(label, f.q()))
    throw Error(ErrorCode::LabelUnavailableForCharacteristic,
                to_string(label) + " does not occur in characteristic " + std::to_string(f.p()));
  const Elem one = f.one();
  const Elem m1 = f.neg(one);
  const Elem eps = f.canonical_nonsquare();
  auto e = [&](int i) { return sym(f, {{i, one}}); };
  switch (label) {
    case PlaneLabel::Sigma1: return make_rep(f, {e(0), e(3), e(1)}, {});
    case PlaneLabel::Sigma2: return make_rep(f, {e(0), e(3), e(5)}, {});
    case PlaneLabel::Sigma3: return make_rep(f, {e(0), e(3), e(2)}, {});
    case PlaneLabel::Sigma4: return make_rep(f, {e(0), e(3), sym(f, {{2, one}, {4, one}})}, {});
    case PlaneLabel::Sigma5: return make_rep(f, {e(0), e(3), sym(f, {{2, one}, {4, one}, {5, one}})}, {});
    case PlaneLabel::Sigma6: return make_rep(f, {sym(f, {{0, one}, {3, eps}}), e(1), e(5)}, {{"eps", eps}});
    case PlaneLabel::Sigma7: return make_rep(f, {e(0), e(1), e(2)}, {});
    case PlaneLabel::Sigma8: return make_rep(f, {e(0), e(1), e(4)}, {});
    case PlaneLabel::Sigma9: return make_rep(f, {e(0), e(1), sym(f, {{3, one}, {5, m1}})}, {});
    case PlaneLabel::Sigma10:
      return make_rep(f, {e(0), e(1), sym(f, {{3, one}, {5, f.neg(eps)}})}, {{"eps", eps}});
    case PlaneLabel::Sigma11:
      return make_rep(f, {sym(f, {{3, one}, {4, one}, {5, one}}), e(1), sym(f, {{2, one}, {5, one}})}, {});
    case PlaneLabel::Sigma12: return make_rep(f, {e(0), sym(f, {{1, one}, {4, one}}), sym(f, {{3, one}, {5, one}})}, {});
    case PlaneLabel::Sigma13:
      return make_rep(f, {e(0), sym(f, {{1, one}, {4, one}}), sym(f, {{3, one}, {5, eps}})}, {{"eps", eps}});
    case PlaneLabel::Sigma14: {
      const auto c = least_admissible_c(field);
      if (!c) throw Error(ErrorCode::NoAdmissibleC, "no admissible c in F_" + std::to_string(f.q()));
      return make_rep(f, {e(0), sym(f, {{1, one}, {4, one}}), sym(f, {{3, *c}, {4, m1}, {5, one}})}, {{"c", *c}});
    }
    case PlaneLabel::Sigma14prime:
      return make_rep(f, {e(0), sym(f, {{3, one}, {5, m1}}), sym(f, {{0, one}, {1, one}, {2, one}, {3, one}, {4, one}})},
                      {});
    case PlaneLabel::Sigma15: return make_rep(f, {e(0), e(1), sym(f, {{2, one}, {3, one}})}, {});
  }
  throw Error(ErrorCode::InternalInconsistency, "unknown plane label");
}

Representative line_representative(const FieldPtr& field, LineLabel label) {
  const Field& f = *field;
  const Elem one = f.one();
  const Elem m1 = f.neg(one);
  const Elem eps = f.canonical_nonsquare();
  auto e = [&](int i) { return sym(f, {{i, one}}); };

  // (u, v) in search order: u ascending, then nonzero v ascending.
  auto search_uv = [&](auto&& accept) -> std::pair<Elem, Elem> {
    for (int iu = 0; iu < f.q(); ++iu)
      for (int iv = 1; iv < f.q(); ++iv)
        if (condition_star(f, f.at(iu), f.at(iv)) && accept(f.at(iv))) return {f.at(iu), f.at(iv)};
    throw Error(ErrorCode::ParameterSearchFailed, "no (u, v) satisfies the root-free condition");
  };
  auto o15 = [&](bool minus_v_square) {
    const auto [u, v] = search_uv([&](Elem v) { return f.is_nonzero_square(f.neg(v)) == minus_v_square; });
    return make_rep(f, {sym(f, {{1, one}, {3, u}, {5, one}}), sym(f, {{0, v}, {3, one}})}, {{"u", u}, {"v", v}});
  };

  switch (label) {
    case LineLabel::o5: return make_rep(f, {e(0), e(3)}, {});
    case LineLabel::o6: return make_rep(f, {e(0), e(1)}, {});
    case LineLabel::o8_1: return make_rep(f, {e(0), sym(f, {{3, one}, {5, m1}})}, {});
    case LineLabel::o8_2: return make_rep(f, {e(0), sym(f, {{3, one}, {5, f.neg(eps)}})}, {{"eps", eps}});
    case LineLabel::o9: return make_rep(f, {e(0), sym(f, {{2, one}, {3, one}})}, {});
    case LineLabel::o10: {
      const auto [u, v] = search_uv([](Elem) { return true; });
      return make_rep(f, {sym(f, {{0, v}, {3, one}}), sym(f, {{1, one}, {3, u}})}, {{"u", u}, {"v", v}});
    }
    case LineLabel::o12: return make_rep(f, {e(1), e(4)}, {});
    case LineLabel::o13_1: return make_rep(f, {e(1), sym(f, {{3, one}, {5, m1}})}, {});
    case LineLabel::o13_2: return make_rep(f, {e(1), sym(f, {{3, one}, {5, f.neg(eps)}})}, {{"eps", eps}});
    case LineLabel::o14_1: return make_rep(f, {sym(f, {{0, one}, {3, m1}}), sym(f, {{3, m1}, {5, one}})}, {});
    case LineLabel::o14_2:
      return make_rep(f, {sym(f, {{0, one}, {3, f.neg(eps)}}), sym(f, {{3, f.neg(eps)}, {5, one}})}, {{"eps", eps}});
    case LineLabel::o15_1: return o15(true);
    case LineLabel::o15_2: return o15(false);
    case LineLabel::o16: return make_rep(f, {sym(f, {{2, one}, {3, one}}), e(4)}, {});
    case LineLabel::o17: {
      for (int iu = 0; iu < f.q(); ++iu)
        for (int iv = 1; iv < f.q(); ++iv)
          for (int iw = 0; iw < f.q(); ++iw) {
            const Elem u = f.at(iu), v = f.at(iv), w = f.at(iw);
            if (!condition_star2(f, u, v, w)) continue;
            return make_rep(f, {sym(f, {{0, f.inv(v)}, {3, f.neg(w)}, {4, one}}), sym(f, {{1, one}, {3, u}, {5, one}})},
                            {{"u", u}, {"v", v}, {"w", w}});
          }
      throw Error(ErrorCode::ParameterSearchFailed, "no (u, v, w) makes the cubic root-free");
    }
  }
  throw Error(ErrorCode::InternalInconsistency, "unknown line label");
}

}  // namespace conicnet
