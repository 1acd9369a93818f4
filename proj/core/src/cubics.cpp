#include "conicnet/cubics.hpp"

#include <algorithm>

namespace conicnet {

namespace {

// Exponent triples of all monomials of degree d, in storage order.
template <typename Fn>
void for_each_monomial(int d, Fn&& fn) {
  for (int i = d; i >= 0; --i)
    for (int j = d - i; j >= 0; --j) fn(i, j, d - i - j);
}

TernaryForm zero_form(int d) {
  TernaryForm f;
  f.degree = d;
  return f;
}

TernaryForm from_binary(const BinaryForm& b) {
  TernaryForm f = zero_form(b.degree);
  for (int i = 0; i <= b.degree; ++i) f.set(b.degree - i, i, 0, b.c[i]);
  return f;
}

BinaryForm to_binary(const TernaryForm& f) {
  BinaryForm b;
  b.degree = f.degree;
  for (int i = 0; i <= f.degree; ++i) b.c[i] = f.coeff(f.degree - i, i, 0);
  return b;
}

std::string monomial_text(int i, int j, int k, const std::array<const char*, 3>& vars) {
  std::string out;
  const int e[3] = {i, j, k};
  for (int v = 0; v < 3; ++v) {
    if (e[v] == 0) continue;
    if (!out.empty()) out += "*";
    out += vars[v];
    if (e[v] > 1) out += "^" + std::to_string(e[v]);
  }
  return out;
}

}  // namespace

bool TernaryForm::is_zero() const {
  for (int i = 0; i < size(degree); ++i)
    if (!c[i].is_zero()) return false;
  return true;
}

TernaryForm TernaryForm::linear(Elem a, Elem b, Elem cc) {
  TernaryForm f = zero_form(1);
  f.c[0] = a;
  f.c[1] = b;
  f.c[2] = cc;
  return f;
}

TernaryForm TernaryForm::constant(Elem a) {
  TernaryForm f = zero_form(0);
  f.c[0] = a;
  return f;
}

Elem eval(const Field& field, const TernaryForm& f, std::span<const Elem> x) {
  Elem pw[3][4];
  for (int v = 0; v < 3; ++v) {
    pw[v][0] = field.one();
    for (int t = 1; t <= f.degree; ++t) pw[v][t] = field.mul(pw[v][t - 1], x[v]);
  }
  Elem acc{};
  int idx = 0;
  for_each_monomial(f.degree, [&](int i, int j, int k) {
    const Elem c = f.c[idx++];
    if (c.is_zero()) return;
    acc = field.fma(c, field.mul(field.mul(pw[0][i], pw[1][j]), pw[2][k]), acc);
  });
  return acc;
}

TernaryForm add(const Field& field, const TernaryForm& f, const TernaryForm& g) {
  if (f.degree != g.degree) throw Error(ErrorCode::DimensionMismatch, "forms of different degree");
  TernaryForm r = zero_form(f.degree);
  for (int i = 0; i < TernaryForm::size(f.degree); ++i) r.c[i] = field.add(f.c[i], g.c[i]);
  return r;
}

TernaryForm sub(const Field& field, const TernaryForm& f, const TernaryForm& g) {
  if (f.degree != g.degree) throw Error(ErrorCode::DimensionMismatch, "forms of different degree");
  TernaryForm r = zero_form(f.degree);
  for (int i = 0; i < TernaryForm::size(f.degree); ++i) r.c[i] = field.sub(f.c[i], g.c[i]);
  return r;
}

TernaryForm scale(const Field& field, const TernaryForm& f, Elem s) {
  TernaryForm r = zero_form(f.degree);
  for (int i = 0; i < TernaryForm::size(f.degree); ++i) r.c[i] = field.mul(f.c[i], s);
  return r;
}

TernaryForm mul(const Field& field, const TernaryForm& f, const TernaryForm& g) {
  const int d = f.degree + g.degree;
  if (d > 3) throw Error(ErrorCode::DegreeOutOfRange, "product degree exceeds 3");
  TernaryForm r = zero_form(d);
  int fi = 0;
  for_each_monomial(f.degree, [&](int i1, int j1, int k1) {
    const Elem a = f.c[fi++];
    if (a.is_zero()) return;
    int gi = 0;
    for_each_monomial(g.degree, [&](int i2, int j2, int) {
      const Elem b = g.c[gi++];
      if (b.is_zero()) return;
      const int idx = TernaryForm::index(d, i1 + i2, j1 + j2);
      r.c[idx] = field.fma(a, b, r.c[idx]);
    });
    (void)k1;
  });
  return r;
}

TernaryForm partial(const Field& field, const TernaryForm& f, int var) {
  if (f.degree == 0) return zero_form(0);
  TernaryForm r = zero_form(f.degree - 1);
  int idx = 0;
  for_each_monomial(f.degree, [&](int i, int j, int k) {
    const Elem c = f.c[idx++];
    int e[3] = {i, j, k};
    if (c.is_zero() || e[var] == 0) return;
    const Elem factor = field.from_int(e[var]);
    --e[var];
    const int t = TernaryForm::index(f.degree - 1, e[0], e[1]);
    r.c[t] = field.fma(c, factor, r.c[t]);
  });
  return r;
}

TernaryForm substitute(const Field& field, const TernaryForm& f, std::span<const Elem> t) {
  TernaryForm lin[3];
  for (int v = 0; v < 3; ++v) lin[v] = TernaryForm::linear(t[3 * v], t[3 * v + 1], t[3 * v + 2]);
  TernaryForm r = zero_form(f.degree);
  int idx = 0;
  for_each_monomial(f.degree, [&](int i, int j, int k) {
    const Elem c = f.c[idx++];
    if (c.is_zero()) return;
    TernaryForm term = TernaryForm::constant(c);
    const int e[3] = {i, j, k};
    for (int v = 0; v < 3; ++v)
      for (int n = 0; n < e[v]; ++n) term = mul(field, term, lin[v]);
    r = add(field, r, term);
  });
  return r;
}

std::optional<TernaryForm> divide_linear(const Field& field, const TernaryForm& f, std::span<const Elem> l) {
  int pv = -1;
  for (int v = 0; v < 3; ++v)
    if (!l[v].is_zero()) {
      pv = v;
      break;
    }
  if (pv < 0) throw Error(ErrorCode::ZeroInput, "division by the zero linear form");
  if (f.degree == 0) {
    if (f.is_zero()) return zero_form(0);
    return std::nullopt;
  }
  const Elem inv_lead = field.inv(l[pv]);
  TernaryForm rem = f;
  TernaryForm quot = zero_form(f.degree - 1);
  const int d = f.degree;
  // Eliminate monomials containing the pivot variable, highest power first.
  for (int power = d; power >= 1; --power) {
    int idx = 0;
    std::array<std::array<int, 3>, 10> todo{};
    int n = 0;
    for_each_monomial(d, [&](int i, int j, int k) {
      const int e[3] = {i, j, k};
      if (e[pv] == power && !rem.c[idx].is_zero()) todo[n++] = {i, j, k};
      ++idx;
    });
    for (int t = 0; t < n; ++t) {
      auto e = todo[t];
      const Elem c = rem.coeff(e[0], e[1], e[2]);
      if (c.is_zero()) continue;
      const Elem qc = field.mul(c, inv_lead);
      --e[pv];
      quot.set(e[0], e[1], e[2], field.add(quot.coeff(e[0], e[1], e[2]), qc));
      for (int v = 0; v < 3; ++v) {
        if (l[v].is_zero()) continue;
        auto m = e;
        ++m[v];
        rem.set(m[0], m[1], m[2], field.sub(rem.coeff(m[0], m[1], m[2]), field.mul(qc, l[v])));
      }
    }
  }
  if (!rem.is_zero()) return std::nullopt;
  return quot;
}

TernaryForm monic(const Field& field, const TernaryForm& f) {
  for (int i = 0; i < TernaryForm::size(f.degree); ++i)
    if (!f.c[i].is_zero()) return scale(field, f, field.inv(f.c[i]));
  return f;
}

std::string to_string(const Field& field, const TernaryForm& f, const std::array<const char*, 3>& vars) {
  std::string out;
  int idx = 0;
  for_each_monomial(f.degree, [&](int i, int j, int k) {
    const Elem c = f.c[idx++];
    if (c.is_zero()) return;
    if (!out.empty()) out += " + ";
    const std::string mono = monomial_text(i, j, k, vars);
    if (mono.empty()) {
      out += field.format(c);
    } else if (c == field.one()) {
      out += mono;
    } else {
      out += field.format(c) + "*" + mono;
    }
  });
  return out.empty() ? "0" : out;
}

bool BinaryForm::is_zero() const {
  for (int i = 0; i <= degree; ++i)
    if (!c[i].is_zero()) return false;
  return true;
}

Elem eval(const Field& field, const BinaryForm& f, Elem x, Elem y) {
  Elem acc{};
  for (int i = 0; i <= f.degree; ++i) {
    acc = field.fma(f.c[i], field.mul(field.pow(x, f.degree - i), field.pow(y, i)), acc);
  }
  return acc;
}

std::string to_string(const Field& field, const BinaryForm& f, const std::array<const char*, 2>& vars) {
  return to_string(field, from_binary(f), {vars[0], vars[1], "z"});
}

std::string to_string(BinaryFactorType t) {
  switch (t) {
    case BinaryFactorType::Zero: return "Zero";
    case BinaryFactorType::TripleRoot: return "TripleRoot";
    case BinaryFactorType::DoublePlusSimple: return "DoublePlusSimple";
    case BinaryFactorType::ThreeDistinctRational: return "ThreeDistinctRational";
    case BinaryFactorType::OneRationalPlusIrreducibleQuadratic: return "OneRationalPlusIrreducibleQuadratic";
    case BinaryFactorType::Irreducible: return "Irreducible";
  }
  return "?";
}

BinaryFactorType binary_factor_type(const Field& field, const BinaryForm& f) {
  if (f.is_zero()) return BinaryFactorType::Zero;
  TernaryForm rem = from_binary(f);
  std::vector<int> mults;
  auto take_root = [&](Elem a, Elem b) {
    // (a:b) is a root iff b x - a y divides
    const std::array<Elem, 3> l = {b, field.neg(a), Elem{}};
    int m = 0;
    while (rem.degree > 0) {
      auto quot = divide_linear(field, rem, l);
      if (!quot) break;
      rem = *quot;
      ++m;
    }
    if (m > 0) mults.push_back(m);
  };
  take_root(field.zero(), field.one());
  for (int t = 0; t < field.q(); ++t) take_root(field.one(), field.at(t));
  int total = 0;
  for (int m : mults) total += m;
  std::sort(mults.begin(), mults.end());
  if (f.degree != 3) throw Error(ErrorCode::DegreeOutOfRange, "binary form must be a cubic");
  switch (total) {
    case 0: return BinaryFactorType::Irreducible;
    case 1: return BinaryFactorType::OneRationalPlusIrreducibleQuadratic;
    case 3:
      if (mults.size() == 1) return BinaryFactorType::TripleRoot;
      if (mults.size() == 2) return BinaryFactorType::DoublePlusSimple;
      return BinaryFactorType::ThreeDistinctRational;
    default: throw Error(ErrorCode::InternalInconsistency, "binary cubic with exactly two rational roots");
  }
}

namespace {

std::array<TernaryForm, 9> linear_matrix(const Sym3& a, const Sym3& b, const Sym3& c) {
  static constexpr int kIdx[3][3] = {{0, 1, 2}, {1, 3, 4}, {2, 4, 5}};
  std::array<TernaryForm, 9> m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const int t = kIdx[i][j];
      m[3 * i + j] = TernaryForm::linear(a[t], b[t], c[t]);
    }
  return m;
}

TernaryForm det3(const Field& field, const std::array<TernaryForm, 9>& m) {
  auto minor = [&](int a, int b, int c, int d) {
    return sub(field, mul(field, m[a], m[b]), mul(field, m[c], m[d]));
  };
  TernaryForm r = mul(field, m[0], minor(4, 8, 5, 7));
  r = sub(field, r, mul(field, m[1], minor(3, 8, 5, 6)));
  r = add(field, r, mul(field, m[2], minor(3, 7, 4, 6)));
  return r;
}

int rank_of(const Field& field, std::span<const Sym3> rows) {
  std::vector<Coords> m(rows.begin(), rows.end());
  return row_reduce(field, m, 6);
}

}  // namespace

TernaryCubic det_cubic(const Field& field, const Sym3& a, const Sym3& b, const Sym3& c) {
  const std::array<Sym3, 3> rows = {a, b, c};
  if (rank_of(field, rows) != 3) throw Error(ErrorCode::DependentBasis, "plane basis is not independent");
  return det3(field, linear_matrix(a, b, c));
}

BinaryForm det_cubic(const Field& field, const Sym3& a, const Sym3& b) {
  const std::array<Sym3, 2> rows = {a, b};
  if (rank_of(field, rows) != 2) throw Error(ErrorCode::DependentBasis, "line basis is not independent");
  return to_binary(det3(field, linear_matrix(a, b, Sym3{})));
}

std::string to_string(Residual r) {
  switch (r) {
    case Residual::None: return "None";
    case Residual::NondegenerateConic: return "NondegenerateConic";
    case Residual::ConjugateLinePair: return "ConjugateLinePair";
    case Residual::IrreducibleCubic: return "IrreducibleCubic";
  }
  return "?";
}

int Components::linear_degree() const {
  int d = 0;
  for (const auto& l : lines) d += l.multiplicity;
  return d;
}

Components linear_components(const FieldPtr& field, const TernaryForm& f) {
  if (f.is_zero()) throw Error(ErrorCode::IdenticallyZero, "form is identically zero");
  const auto plane = ProjectivePlane::get(field);
  const auto& pts = plane->points();
  std::vector<char> zero(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) zero[i] = eval(*field, f, pts[i].coords()).is_zero();

  Components out;
  TernaryForm rem = f;
  for (int l = 0; l < plane->size() && rem.degree > 0; ++l) {
    const auto& on = plane->points_on_line(l);
    if (!std::all_of(on.begin(), on.end(), [&](int i) { return zero[i]; })) continue;
    int m = 0;
    while (rem.degree > 0) {
      auto quot = divide_linear(*field, rem, plane->lines()[l].coords());
      if (!quot) break;
      rem = *quot;
      ++m;
    }
    if (m > 0) out.lines.push_back({plane->lines()[l], m});
  }
  out.residual_form = rem;
  switch (rem.degree) {
    case 0: out.residual = Residual::None; break;
    case 2: {
      const Conic2 conic = Conic2::from_form(*field, std::span<const Elem>(rem.c.data(), 6));
      out.residual = conic.is_nondegenerate(*field) ? Residual::NondegenerateConic : Residual::ConjugateLinePair;
      break;
    }
    case 3: out.residual = Residual::IrreducibleCubic; break;
    default: throw Error(ErrorCode::InternalInconsistency, "linear residual left after removing linear components");
  }
  return out;
}

std::vector<ProjPoint> singular_points(const FieldPtr& field, const TernaryForm& f) {
  if (f.is_zero()) throw Error(ErrorCode::IdenticallyZero, "form is identically zero");
  const TernaryForm d[3] = {partial(*field, f, 0), partial(*field, f, 1), partial(*field, f, 2)};
  std::vector<ProjPoint> out;
  for (const auto& x : ProjectivePlane::get(field)->points()) {
    if (!eval(*field, f, x.coords()).is_zero()) continue;
    if (eval(*field, d[0], x.coords()).is_zero() && eval(*field, d[1], x.coords()).is_zero() &&
        eval(*field, d[2], x.coords()).is_zero())
      out.push_back(x);
  }
  return out;
}

TernaryForm hessian(const Field& field, const TernaryForm& f) {
  if (field.p() == 3) throw Error(ErrorCode::CharThreeUnsupported, "Hessian is not used in characteristic 3");
  if (f.degree != 3) throw Error(ErrorCode::DegreeOutOfRange, "Hessian is defined here for cubics only");
  std::array<TernaryForm, 9> m;
  for (int i = 0; i < 3; ++i) {
    const TernaryForm di = partial(field, f, i);
    for (int j = 0; j < 3; ++j) m[3 * i + j] = partial(field, di, j);
  }
  return det3(field, m);
}

std::vector<ProjPoint> rational_inflexions(const FieldPtr& field, const TernaryForm& f) {
  if (field->p() == 3) throw Error(ErrorCode::CharThreeUnsupported, "inflexions are not counted in characteristic 3");
  if (f.is_zero()) throw Error(ErrorCode::IdenticallyZero, "form is identically zero");
  const TernaryForm h = hessian(*field, f);
  const TernaryForm d[3] = {partial(*field, f, 0), partial(*field, f, 1), partial(*field, f, 2)};
  std::vector<ProjPoint> out;
  for (const auto& x : ProjectivePlane::get(field)->points()) {
    const auto c = x.coords();
    if (!eval(*field, f, c).is_zero() || !eval(*field, h, c).is_zero()) continue;
    const bool singular =
        eval(*field, d[0], c).is_zero() && eval(*field, d[1], c).is_zero() && eval(*field, d[2], c).is_zero();
    if (!singular) out.push_back(x);
  }
  return out;
}

int rational_inflexion_count(const FieldPtr& field, const TernaryForm& f) {
  return static_cast<int>(rational_inflexions(field, f).size());
}

CubicProfile cubic_profile(const FieldPtr& field, const TernaryForm& f) {
  CubicProfile p;
  p.components = linear_components(field, f);
  p.singular = singular_points(field, f);
  if (field->p() != 3) p.inflexions = rational_inflexion_count(field, f);
  return p;
}

}  // namespace conicnet
