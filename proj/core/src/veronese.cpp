#include "conicnet/veronese.hpp"

#include <map>
#include <mutex>

namespace conicnet {

Mat3 Mat3::identity(const Field& field) {
  Mat3 a;
  for (int i = 0; i < 3; ++i) a(i, i) = field.one();
  return a;
}

Mat3 mat_mul(const Field& field, const Mat3& a, const Mat3& b) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Elem s{};
      for (int k = 0; k < 3; ++k) s = field.fma(a(i, k), b(k, j), s);
      r(i, j) = s;
    }
  return r;
}

Mat3 mat_transpose(const Mat3& a) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = a(j, i);
  return r;
}

Elem mat_det(const Field& f, const Mat3& a) {
  auto m2 = [&](int r0, int r1, int c0, int c1) {
    return f.sub(f.mul(a(r0, c0), a(r1, c1)), f.mul(a(r0, c1), a(r1, c0)));
  };
  Elem d = f.mul(a(0, 0), m2(1, 2, 1, 2));
  d = f.sub(d, f.mul(a(0, 1), m2(1, 2, 0, 2)));
  return f.add(d, f.mul(a(0, 2), m2(1, 2, 0, 1)));
}

Mat3 mat_inverse(const Field& f, const Mat3& a) {
  const Elem det = mat_det(f, a);
  if (det.is_zero()) throw Error(ErrorCode::SingularMatrix, "matrix is singular");
  const Elem inv = f.inv(det);
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      // cofactor of (j, i)
      const int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      const Elem cof = f.sub(f.mul(a(r0, c0), a(r1, c1)), f.mul(a(r0, c1), a(r1, c0)));
      r(i, j) = f.mul(cof, inv);
    }
  return r;
}

std::array<Elem, 3> mat_apply(const Field& field, const Mat3& a, std::span<const Elem> x) {
  std::array<Elem, 3> r{};
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) r[i] = field.fma(a(i, k), x[k], r[i]);
  return r;
}

namespace {

Mat3 to_mat(std::span<const Elem> y) {
  Mat3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = y[kSymIndex[i][j]];
  return m;
}

Sym3 from_mat(const Mat3& m) {
  return {m(0, 0), m(0, 1), m(0, 2), m(1, 1), m(1, 2), m(2, 2), };
}

bool all_zero(std::span<const Elem> y) {
  for (Elem e : y)
    if (!e.is_zero()) return false;
  return true;
}

}  // namespace

Elem sym_det(const Field& field, std::span<const Elem> y) { return mat_det(field, to_mat(y)); }

Elem principal_minor(const Field& f, std::span<const Elem> y, int i) {
  const int a = (i + 1) % 3, b = (i + 2) % 3;
  const Elem yaa = y[kSymIndex[a][a]], ybb = y[kSymIndex[b][b]], yab = y[kSymIndex[a][b]];
  return f.sub(f.mul(yaa, ybb), f.mul(yab, yab));
}

int sym_rank(const Field& f, std::span<const Elem> y) {
  if (all_zero(y.first(6))) return 0;
  if (!sym_det(f, y).is_zero()) return 3;
  const Mat3 m = to_mat(y);
  for (int r0 = 0; r0 < 3; ++r0)
    for (int r1 = r0 + 1; r1 < 3; ++r1)
      for (int c0 = 0; c0 < 3; ++c0)
        for (int c1 = c0 + 1; c1 < 3; ++c1)
          if (f.mul(m(r0, c0), m(r1, c1)) != f.mul(m(r0, c1), m(r1, c0))) return 2;
  return 1;
}

std::array<Elem, 6> trace_form_weights(const Field& field) {
  const Elem two = field.from_int(2);
  return {field.one(), two, two, field.one(), two, field.one()};
}

std::string to_string(PointClass c) {
  switch (c) {
    case PointClass::P1: return "P1";
    case PointClass::P2e: return "P2e";
    case PointClass::P2i: return "P2i";
    case PointClass::P3: return "P3";
  }
  return "?";
}

std::string to_string(HyperplaneClass c) {
  switch (c) {
    case HyperplaneClass::H1: return "H1";
    case HyperplaneClass::H2e: return "H2e";
    case HyperplaneClass::H2i: return "H2i";
    case HyperplaneClass::H3: return "H3";
  }
  return "?";
}

PointClass classify_point(const Field& field, std::span<const Elem> y) {
  switch (sym_rank(field, y)) {
    case 0: throw Error(ErrorCode::ZeroInput, "the zero matrix is not a point");
    case 1: return PointClass::P1;
    case 3: return PointClass::P3;
    default: break;
  }
  bool any_nonzero = false;
  for (int i = 0; i < 3; ++i) {
    const Elem m = field.neg(principal_minor(field, y, i));
    if (!field.is_square(m)) return PointClass::P2i;
    any_nonzero = any_nonzero || !m.is_zero();
  }
  if (!any_nonzero) throw Error(ErrorCode::InternalInconsistency, "rank-2 matrix with vanishing principal minors");
  return PointClass::P2e;
}

Sym3 veronese(const Field& f, const ProjPoint& x) {
  return {f.mul(x[0], x[0]), f.mul(x[0], x[1]), f.mul(x[0], x[2]),
          f.mul(x[1], x[1]), f.mul(x[1], x[2]), f.mul(x[2], x[2])};
}

ProjPoint veronese_preimage(const Field& field, std::span<const Elem> y) {
  if (sym_rank(field, y) != 1) throw Error(ErrorCode::WrongRank, "point is not on the Veronesean");
  const Mat3 m = to_mat(y);
  for (int i = 0; i < 3; ++i) {
    const std::array<Elem, 3> row = {m(i, 0), m(i, 1), m(i, 2)};
    if (!all_zero(row)) return ProjPoint(field, row);
  }
  throw Error(ErrorCode::InternalInconsistency, "rank-1 matrix without a nonzero row");
}

Sym3 act(const Field& field, const Mat3& a, std::span<const Elem> y) {
  if (mat_det(field, a).is_zero()) throw Error(ErrorCode::SingularMatrix, "matrix is singular");
  return from_mat(mat_mul(field, mat_mul(field, a, to_mat(y)), mat_transpose(a)));
}

Linear6 congruence_matrix(const Field& field, const Mat3& a) {
  Linear6 l{};
  for (int j = 0; j < 6; ++j) {
    Sym3 e{};
    e[j] = field.one();
    const Sym3 z = from_mat(mat_mul(field, mat_mul(field, a, to_mat(e)), mat_transpose(a)));
    for (int i = 0; i < 6; ++i) l[6 * i + j] = z[i];
  }
  return l;
}

Subspace apply_linear(const Field& field, const Linear6& l, const Subspace& s) {
  std::array<Coords, kMaxCoords> rows{};
  for (int r = 0; r < s.rows(); ++r) {
    const Coords& v = s.row(r);
    for (int i = 0; i < 6; ++i) {
      Elem acc{};
      for (int j = 0; j < 6; ++j) acc = field.fma(l[6 * i + j], v[j], acc);
      rows[r][i] = acc;
    }
  }
  return Subspace::from_rows(field, s.cols(), std::span<const Coords>(rows.data(), static_cast<std::size_t>(s.rows())));
}

Subspace act(const Field& field, const Mat3& a, const Subspace& s) {
  if (s.cols() != 6) throw Error(ErrorCode::DimensionMismatch, "subspace must live in PG(5,q)");
  if (mat_det(field, a).is_zero()) throw Error(ErrorCode::SingularMatrix, "matrix is singular");
  return apply_linear(field, congruence_matrix(field, a), s);
}

Subspace conic_plane_of(const Field& f, std::span<const Elem> z) {
  if (sym_rank(f, z) != 2) throw Error(ErrorCode::WrongRank, "conic plane needs a rank-2 point");
  const Mat3 m = to_mat(z);
  // kernel vector: cross product of two independent rows
  std::array<Elem, 3> w{};
  for (int r0 = 0; r0 < 3 && all_zero(w); ++r0)
    for (int r1 = r0 + 1; r1 < 3 && all_zero(w); ++r1) {
      const Elem* a = &m.m[3 * r0];
      const Elem* b = &m.m[3 * r1];
      w = {f.sub(f.mul(a[1], b[2]), f.mul(a[2], b[1])), f.sub(f.mul(a[2], b[0]), f.mul(a[0], b[2])),
           f.sub(f.mul(a[0], b[1]), f.mul(a[1], b[0]))};
    }
  std::array<Coords, 3> eqs{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Elem& slot = eqs[i][kSymIndex[i][j]];
      slot = f.add(slot, w[j]);
    }
  const Subspace equations = Subspace::from_rows(f, 6, eqs);
  const std::array<Elem, 6> unit = {f.one(), f.one(), f.one(), f.one(), f.one(), f.one()};
  return orthogonal_complement(f, equations, unit);
}

Subspace delta(const Field& f, std::span<const Elem> coeffs) {
  if (all_zero(coeffs.first(6))) throw Error(ErrorCode::ZeroForm, "conic has no nonzero coefficient");
  Coords a{};
  std::copy_n(coeffs.begin(), 6, a.begin());
  const Subspace point = Subspace::from_rows(f, 6, std::span<const Coords>(&a, 1));
  const std::array<Elem, 6> unit = {f.one(), f.one(), f.one(), f.one(), f.one(), f.one()};
  return orthogonal_complement(f, point, unit);
}

ProjPoint delta_star(const Field& field, std::span<const Elem> coeffs) {
  if (all_zero(coeffs.first(6))) throw Error(ErrorCode::ZeroForm, "conic has no nonzero coefficient");
  return ProjPoint(field, coeffs.first(6));
}

Sym3 half_gram(const Field& f, std::span<const Elem> a) {
  const Elem half = f.inv(f.from_int(2));
  return {a[0], f.mul(a[1], half), f.mul(a[2], half), a[3], f.mul(a[4], half), a[5]};
}

Subspace net_to_plane(const Field& field, const Net& net) {
  std::array<Coords, 3> rows{};
  for (int i = 0; i < 3; ++i) rows[i] = half_gram(field, net.forms[i]);
  try {
    return Subspace::from_independent_rows(field, 6, rows);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::DependentBasis || e.code() == ErrorCode::EmptyInput)
      throw Error(ErrorCode::DependentForms, "the three forms are linearly dependent");
    throw;
  }
}

Subspace net_delta(const Field& field, const Net& net) {
  std::array<Coords, 3> rows{};
  for (int i = 0; i < 3; ++i) std::copy_n(net.forms[i].begin(), 6, rows[i].begin());
  Subspace forms;
  try {
    forms = Subspace::from_independent_rows(field, 6, rows);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::DependentBasis || e.code() == ErrorCode::EmptyInput)
      throw Error(ErrorCode::DependentForms, "the three forms are linearly dependent");
    throw;
  }
  const std::array<Elem, 6> unit = {field.one(), field.one(), field.one(), field.one(), field.one(), field.one()};
  return orthogonal_complement(field, forms, unit);
}

TernaryCubic net_discriminant(const Field& field, const Net& net) {
  try {
    return det_cubic(field, half_gram(field, net.forms[0]), half_gram(field, net.forms[1]),
                     half_gram(field, net.forms[2]));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::DependentBasis) throw Error(ErrorCode::DependentForms, "the three forms are linearly dependent");
    throw;
  }
}

Conic2 net_member(const Field& field, const Net& net, std::span<const Elem> abc) {
  Conic2 c;
  for (int i = 0; i < 3; ++i) {
    const Sym3 g = half_gram(field, net.forms[i]);
    for (int t = 0; t < 6; ++t) c.gram[t] = field.fma(abc[i], g[t], c.gram[t]);
  }
  return c;
}

HyperplaneClass classify_hyperplane(const Field& field, const Subspace& h) {
  if (h.cols() != 6 || h.rows() != 5) throw Error(ErrorCode::NotHyperplane, "expected a 4-flat of PG(5,q)");
  std::vector<ProjPoint> hits;
  for (const auto& x : all_points(field, 2)) {
    const Sym3 y = veronese(field, x);
    if (h.contains(field, y)) hits.push_back(x);
  }
  const auto q = static_cast<std::size_t>(field.q());
  if (hits.size() == 1) return HyperplaneClass::H2i;
  if (hits.size() == 2 * q + 1) return HyperplaneClass::H2e;
  if (hits.size() == q + 1) return span(field, hits).dim() == 1 ? HyperplaneClass::H1 : HyperplaneClass::H3;
  throw Error(ErrorCode::InternalInconsistency, "hyperplane meets the Veronesean in an impossible number of points");
}

std::string OrbitDistribution::to_string() const {
  return "[" + std::to_string(n[0]) + ", " + std::to_string(n[1]) + ", " + std::to_string(n[2]) + ", " +
         std::to_string(n[3]) + "]";
}

std::shared_ptr<const PointClassTable> PointClassTable::get(const FieldPtr& field) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const PointClassTable>> cache;
  std::uint64_t entries = 1;
  for (int i = 0; i < 6; ++i) entries *= static_cast<std::uint64_t>(field->q());
  if (entries > kMaxEntries) return nullptr;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[field->q()];
  if (!slot) slot.reset(new PointClassTable(*field));
  return slot;
}

PointClassTable::PointClassTable(const Field& field) : q_(static_cast<std::uint64_t>(field.q())) {
  std::uint64_t entries = 1;
  for (int i = 0; i < 6; ++i) entries *= q_;
  classes_.assign(entries, 0);
  Sym3 y{};
  for (std::uint64_t idx = 1; idx < entries; ++idx) {
    // increment the little-endian base-q counter
    for (int i = 0; i < 6; ++i) {
      if (y[i].v + 1u < q_) {
        ++y[i].v;
        break;
      }
      y[i].v = 0;
    }
    classes_[idx] = static_cast<std::uint8_t>(classify_point(field, y));
  }
}

OrbitDistribution distribution(const FieldPtr& field, const Subspace& s) {
  OrbitDistribution d;
  const auto table = s.cols() == 6 ? PointClassTable::get(field) : nullptr;
  for_each_point(*field, s, [&](std::span<const Elem>, std::span<const Elem> y) {
    const PointClass c = table ? table->at(y) : classify_point(*field, y);
    ++d.n[static_cast<int>(c)];
  });
  return d;
}

}  // namespace conicnet
