#include "conicnet/field.hpp"

#include <map>
#include <mutex>
#include <utility>

namespace conicnet {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonOddPrime: return "NonOddPrime";
    case ErrorCode::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::DegenerateConic: return "DegenerateConic";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::WrongRank: return "WrongRank";
    case ErrorCode::ZeroForm: return "ZeroForm";
    case ErrorCode::DependentForms: return "DependentForms";
    case ErrorCode::DependentBasis: return "DependentBasis";
    case ErrorCode::NotHyperplane: return "NotHyperplane";
    case ErrorCode::IdenticallyZero: return "IdenticallyZero";
    case ErrorCode::CharThreeUnsupported: return "CharThreeUnsupported";
    case ErrorCode::NotRankOne: return "NotRankOne";
    case ErrorCode::LabelUnavailableForCharacteristic: return "LabelUnavailableForCharacteristic";
    case ErrorCode::NoAdmissibleC: return "NoAdmissibleC";
    case ErrorCode::ParameterSearchFailed: return "ParameterSearchFailed";
    case ErrorCode::MemoryBoundExceeded: return "MemoryBoundExceeded";
    case ErrorCode::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::ConsistencyViolation: return "ConsistencyViolation";
  }
  return "Unknown";
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

using Poly = std::vector<int>;  // coefficients c_0..c_n over F_p

int mod(long long a, int p) {
  long long r = a % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

// Remainder of a modulo a monic divisor.
Poly poly_rem(Poly a, const Poly& divisor, int p) {
  const int dd = static_cast<int>(divisor.size()) - 1;
  for (int i = static_cast<int>(a.size()) - 1; i >= dd; --i) {
    const int lead = a[i];
    if (lead == 0) continue;
    for (int j = 0; j <= dd; ++j) a[i - dd + j] = mod(a[i - dd + j] - 1LL * lead * divisor[j], p);
  }
  a.resize(std::min<std::size_t>(a.size(), static_cast<std::size_t>(dd)));
  return a;
}

// Monic polynomial of degree `deg` whose lower coefficients are the base-p
// digits of `index` (least significant = constant term).
Poly monic_from_index(int p, int deg, long long index) {
  Poly poly(deg + 1, 0);
  for (int i = 0; i < deg; ++i) {
    poly[i] = static_cast<int>(index % p);
    index /= p;
  }
  poly[deg] = 1;
  return poly;
}

long long ipow(long long b, int n) {
  long long r = 1;
  while (n-- > 0) r *= b;
  return r;
}

bool is_irreducible(const Poly& f, int p) {
  const int deg = static_cast<int>(f.size()) - 1;
  for (int d = 1; d <= deg / 2; ++d) {
    const long long count = ipow(p, d);
    for (long long idx = 0; idx < count; ++idx) {
      const Poly g = monic_from_index(p, d, idx);
      const Poly r = poly_rem(f, g, p);
      bool zero = true;
      for (int c : r) zero = zero && c == 0;
      if (zero) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<int> least_irreducible_monic(int p, int e) {
  const long long count = ipow(p, e);
  for (long long idx = 0; idx < count; ++idx) {
    Poly f = monic_from_index(p, e, idx);
    if (is_irreducible(f, p)) return f;
  }
  throw Error(ErrorCode::DegreeOutOfRange, "no irreducible polynomial found");
}

std::shared_ptr<const Field> Field::create(int p, int e) {
  if (p == 2 || !is_prime(p)) throw Error(ErrorCode::NonOddPrime, "characteristic must be an odd prime");
  if (e < 1 || e > kMaxDegree || ipow(p, e) > kMaxOrder)
    throw Error(ErrorCode::DegreeOutOfRange, "field order p^e out of the supported range");

  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::shared_ptr<const Field>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find({p, e});
  if (it != cache.end()) return it->second;

  FieldSpec spec;
  spec.p = p;
  spec.e = e;
  spec.q = static_cast<int>(ipow(p, e));
  spec.modulus = e == 1 ? Poly{0, 1} : least_irreducible_monic(p, e);
  std::shared_ptr<const Field> field(new Field(std::move(spec)));
  cache.emplace(std::pair{p, e}, field);
  return field;
}

std::shared_ptr<const Field> Field::of_order(int q) {
  if (q < 3 || q % 2 == 0) throw Error(ErrorCode::NonOddPrime, "q must be an odd prime power");
  int p = 0;
  for (int d = 2; d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  int e = 0;
  int rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1) throw Error(ErrorCode::NonOddPrime, "q must be an odd prime power");
  return create(p, e);
}

Field::Field(FieldSpec spec) : spec_(std::move(spec)), q_(spec_.q) {
  const int p = spec_.p;
  const int e = spec_.e;
  const auto n = static_cast<std::size_t>(q_);
  add_.resize(n * n);
  mul_.resize(n * n);
  neg_.resize(n);
  inv_.assign(n, 0);

  std::vector<Poly> digits(n);
  for (int i = 0; i < q_; ++i) {
    Poly c(e, 0);
    int rest = i;
    for (int k = 0; k < e; ++k) {
      c[k] = rest % p;
      rest /= p;
    }
    digits[i] = std::move(c);
  }
  auto encode = [&](const Poly& c) {
    int idx = 0;
    for (int k = e - 1; k >= 0; --k) idx = idx * p + c[k];
    return static_cast<std::uint16_t>(idx);
  };

  for (int a = 0; a < q_; ++a) {
    Poly na(e);
    for (int k = 0; k < e; ++k) na[k] = mod(-digits[a][k], p);
    neg_[a] = encode(na);
    for (int b = 0; b < q_; ++b) {
      Poly s(e);
      for (int k = 0; k < e; ++k) s[k] = (digits[a][k] + digits[b][k]) % p;
      add_[a * q_ + b] = encode(s);

      Poly prod(2 * e - 1, 0);
      for (int i = 0; i < e; ++i)
        for (int j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + digits[a][i] * digits[b][j]) % p;
      Poly r = poly_rem(prod, spec_.modulus, p);
      r.resize(e, 0);
      mul_[a * q_ + b] = encode(r);
    }
  }
  for (int a = 1; a < q_; ++a)
    for (int b = 1; b < q_; ++b)
      if (mul_[a * q_ + b] == 1) {
        inv_[a] = static_cast<std::uint16_t>(b);
        break;
      }

  // Euler's criterion a^((q-1)/2) decides squares.
  legendre_.assign(n, static_cast<std::uint8_t>(Legendre::Zero));
  for (int a = 1; a < q_; ++a) {
    const Elem r = pow(Elem{static_cast<std::uint16_t>(a)}, static_cast<std::uint64_t>(q_ - 1) / 2);
    legendre_[a] = static_cast<std::uint8_t>(r == one() ? Legendre::Square : Legendre::NonSquare);
  }
  sqrt_.assign(n, -1);
  for (int y = q_ - 1; y >= 0; --y) {
    const Elem yy = Elem{static_cast<std::uint16_t>(y)};
    sqrt_[mul(yy, yy).v] = y;  // descending loop leaves the smaller root
  }
  for (int a = 1; a < q_; ++a) {
    if (legendre_[a] == static_cast<std::uint8_t>(Legendre::NonSquare)) {
      nonsquare_ = Elem{static_cast<std::uint16_t>(a)};
      break;
    }
  }
  for (int a = 1; a < q_; ++a) {
    Elem g{static_cast<std::uint16_t>(a)};
    Elem x = g;
    int order = 1;
    while (x != one()) {
      x = mul(x, g);
      ++order;
    }
    if (order == q_ - 1) {
      primitive_ = g;
      break;
    }
  }
}

Elem Field::from_int(long long n) const {
  // p^0 coordinate only: index equals the residue.
  return Elem{static_cast<std::uint16_t>(mod(n, spec_.p))};
}

Elem Field::from_coords(std::span<const int> coords) const {
  if (static_cast<int>(coords.size()) != spec_.e)
    throw Error(ErrorCode::MalformedInput, "element literal must have " + std::to_string(spec_.e) + " coordinates");
  int idx = 0;
  for (int k = spec_.e - 1; k >= 0; --k) idx = idx * spec_.p + mod(coords[k], spec_.p);
  return Elem{static_cast<std::uint16_t>(idx)};
}

std::vector<int> Field::coords(Elem a) const {
  std::vector<int> c(spec_.e);
  int rest = a.v;
  for (int k = 0; k < spec_.e; ++k) {
    c[k] = rest % spec_.p;
    rest /= spec_.p;
  }
  return c;
}

Elem Field::inv(Elem a) const {
  if (a.is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  return Elem{inv_[a.v]};
}

Elem Field::pow(Elem a, std::uint64_t n) const {
  Elem result = one();
  Elem base = a;
  while (n > 0) {
    if (n & 1) result = mul(result, base);
    base = mul(base, base);
    n >>= 1;
  }
  return result;
}

std::optional<Elem> Field::sqrt(Elem a) const {
  const int r = sqrt_[a.v];
  if (r < 0) return std::nullopt;
  return Elem{static_cast<std::uint16_t>(r)};
}

std::vector<Elem> Field::additive_basis() const {
  std::vector<Elem> basis;
  int unit = 1;
  for (int k = 0; k < spec_.e; ++k) {
    basis.push_back(Elem{static_cast<std::uint16_t>(unit)});
    unit *= spec_.p;
  }
  return basis;
}

std::string Field::format(Elem a) const {
  if (spec_.e == 1) return std::to_string(a.v);
  std::string s = "[";
  const auto c = coords(a);
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(c[k]);
  }
  return s + "]";
}

QuadExt::QuadExt(FieldPtr base, Elem d) : base_(std::move(base)), d_(d) {
  if (d.is_zero()) throw Error(ErrorCode::ZeroInput, "quadratic extension needs d != 0");
  if (base_->legendre(d) != Legendre::NonSquare)
    throw Error(ErrorCode::MalformedInput, "quadratic extension needs a non-square d");
}

QuadElem QuadExt::add(QuadElem x, QuadElem y) const {
  const Field& f = *base_;
  return {f.add(x.a, y.a), f.add(x.b, y.b)};
}

QuadElem QuadExt::sub(QuadElem x, QuadElem y) const {
  const Field& f = *base_;
  return {f.sub(x.a, y.a), f.sub(x.b, y.b)};
}

QuadElem QuadExt::mul(QuadElem x, QuadElem y) const {
  const Field& f = *base_;
  // (a + b r)(c + e r) = ac + d be + (ae + bc) r
  const Elem a = f.add(f.mul(x.a, y.a), f.mul(d_, f.mul(x.b, y.b)));
  const Elem b = f.add(f.mul(x.a, y.b), f.mul(x.b, y.a));
  return {a, b};
}

Elem QuadExt::norm(QuadElem x) const {
  const Field& f = *base_;
  return f.sub(f.mul(x.a, x.a), f.mul(d_, f.mul(x.b, x.b)));
}

QuadElem QuadExt::inv(QuadElem x) const {
  const Field& f = *base_;
  const Elem n = norm(x);
  if (n.is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero in quadratic extension");
  const Elem ni = f.inv(n);
  return {f.mul(x.a, ni), f.neg(f.mul(x.b, ni))};
}

QuadElem QuadExt::pow(QuadElem x, std::uint64_t n) const {
  QuadElem result = one();
  QuadElem base = x;
  while (n > 0) {
    if (n & 1) result = mul(result, base);
    base = mul(base, base);
    n >>= 1;
  }
  return result;
}

namespace {

Elem minus_three(const Field& f) { return f.from_int(-3); }

// Collapse a + b*sqrt(-3) into F_q when -3 has a root there.
Elem collapse(const Field& f, QuadElem x) {
  const auto s = f.sqrt(minus_three(f));
  return f.add(x.a, f.mul(x.b, *s));
}

}  // namespace

bool is_cube_in_sqrt_minus3(const FieldPtr& field, QuadElem x) {
  const Field& f = *field;
  if (x.a.is_zero() && x.b.is_zero()) throw Error(ErrorCode::ZeroInput, "cube test of zero");
  if (f.p() == 3) return true;  // Frobenius: cubing is a bijection
  const Elem m3 = minus_three(f);
  const auto q = static_cast<std::uint64_t>(f.q());
  if (f.is_nonzero_square(m3)) {
    const Elem y = collapse(f, x);
    if (y.is_zero()) throw Error(ErrorCode::ZeroInput, "cube test of zero");
    return f.pow(y, (q - 1) / 3) == f.one();
  }
  const QuadExt ext(field, m3);
  return ext.pow(x, (q * q - 1) / 3) == ext.one();
}

bool is_cube_in_sqrt_minus3(const FieldPtr& field, Elem x) {
  return is_cube_in_sqrt_minus3(field, QuadElem{x, field->zero()});
}

std::optional<QuadElem> sqrt_in_sqrt_minus3(const Field& f, Elem c) {
  if (auto r = f.sqrt(c)) return QuadElem{*r, f.zero()};
  const Elem m3 = minus_three(f);
  const auto s = f.sqrt(f.mul(m3, c));
  if (!s) return std::nullopt;
  // c = s^2 / (-3), so sqrt(c) = s / sqrt(-3) = (-s/3) sqrt(-3).
  return QuadElem{f.zero(), f.neg(f.div(*s, f.from_int(3)))};
}

QuadElem mul_sqrt_minus3(const Field& f, QuadElem x, QuadElem y) {
  const Elem d = minus_three(f);
  const Elem a = f.add(f.mul(x.a, y.a), f.mul(d, f.mul(x.b, y.b)));
  const Elem b = f.add(f.mul(x.a, y.b), f.mul(x.b, y.a));
  return {a, b};
}

QuadElem inv_sqrt_minus3(const Field& f, QuadElem x) {
  const Elem m3 = minus_three(f);
  if (f.p() == 3 || f.is_square(m3)) {
    // x lives in F_q (b == 0 for every value produced by this library).
    const Elem y = f.p() == 3 ? x.a : collapse(f, x);
    return {f.inv(y), f.zero()};
  }
  const Elem n = f.sub(f.mul(x.a, x.a), f.mul(m3, f.mul(x.b, x.b)));
  const Elem ni = f.inv(n);
  return {f.mul(x.a, ni), f.neg(f.mul(x.b, ni))};
}

}  // namespace conicnet
