#pragma once

// Table-driven arithmetic in F_q, q = p^e odd, plus the quadratic extension
// used by the cube test of the Sigma14 admissibility condition.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "conicnet/error.hpp"

namespace conicnet {

/// Field element as an index into the owning field's tables.  The index is
/// sum(c_i * p^i) over the coordinates c_0..c_{e-1} in the modulus basis, so
/// the integer order of indices is the canonical element order.
struct Elem {
  std::uint16_t v = 0;

  constexpr Elem() = default;
  constexpr explicit Elem(std::uint16_t value) : v(value) {}

  constexpr bool is_zero() const { return v == 0; }
  friend constexpr bool operator==(Elem, Elem) = default;
  friend constexpr auto operator<=>(Elem, Elem) = default;
};

struct FieldSpec {
  int p = 0;
  int e = 0;
  int q = 0;
  /// Monic irreducible modulus, coefficients c_0..c_e (c_e == 1).
  std::vector<int> modulus;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

enum class Legendre { Zero, Square, NonSquare };

class Field {
 public:
  static constexpr int kMaxOrder = 1024;
  static constexpr int kMaxDegree = 6;

  /// Same (p, e) always returns the same shared instance.
  static std::shared_ptr<const Field> create(int p, int e);
  /// Factors q = p^e and forwards to create().
  static std::shared_ptr<const Field> of_order(int q);

  const FieldSpec& spec() const { return spec_; }
  int p() const { return spec_.p; }
  int e() const { return spec_.e; }
  int q() const { return spec_.q; }

  Elem zero() const { return Elem{0}; }
  Elem one() const { return Elem{1}; }
  /// Image of an integer under Z -> F_p -> F_q.
  Elem from_int(long long n) const;
  Elem from_coords(std::span<const int> coords) const;
  std::vector<int> coords(Elem a) const;
  Elem at(int index) const { return Elem{static_cast<std::uint16_t>(index)}; }

  Elem add(Elem a, Elem b) const { return Elem{add_[a.v * q_ + b.v]}; }
  Elem sub(Elem a, Elem b) const { return Elem{add_[a.v * q_ + neg_[b.v]]}; }
  Elem neg(Elem a) const { return Elem{neg_[a.v]}; }
  Elem mul(Elem a, Elem b) const { return Elem{mul_[a.v * q_ + b.v]}; }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t n) const;
  /// a*b + c, the hot path of every linear combination in the library.
  Elem fma(Elem a, Elem b, Elem c) const { return add(mul(a, b), c); }

  Legendre legendre(Elem a) const { return static_cast<Legendre>(legendre_[a.v]); }
  bool is_square(Elem a) const { return legendre(a) != Legendre::NonSquare; }
  bool is_nonzero_square(Elem a) const { return legendre(a) == Legendre::Square; }
  /// Smaller of the two roots in element order; nullopt for non-squares.
  std::optional<Elem> sqrt(Elem a) const;
  Elem canonical_nonsquare() const { return nonsquare_; }
  Elem primitive_element() const { return primitive_; }
  /// Additive generators over F_p: the basis elements 1, t, ..., t^{e-1}.
  std::vector<Elem> additive_basis() const;

  /// Decimal literal for prime fields, bracketed coordinate list otherwise.
  std::string format(Elem a) const;

 private:
  explicit Field(FieldSpec spec);

  FieldSpec spec_;
  int q_;
  std::vector<std::uint16_t> add_;
  std::vector<std::uint16_t> mul_;
  std::vector<std::uint16_t> neg_;
  std::vector<std::uint16_t> inv_;
  std::vector<std::uint8_t> legendre_;
  std::vector<std::int32_t> sqrt_;
  Elem nonsquare_;
  Elem primitive_;
};

using FieldPtr = std::shared_ptr<const Field>;

bool is_prime(int n);

/// Monic irreducible polynomial of degree e over F_p that is least under the
/// coefficient order used for elements.
std::vector<int> least_irreducible_monic(int p, int e);

/// Element a + b*sqrt(d) of a quadratic extension of the base field.
struct QuadElem {
  Elem a;
  Elem b;
  friend bool operator==(const QuadElem&, const QuadElem&) = default;
};

class QuadExt {
 public:
  /// Throws ZeroInput/MalformedInput unless d is a non-square of the base.
  QuadExt(FieldPtr base, Elem d);

  const Field& base() const { return *base_; }
  Elem d() const { return d_; }

  QuadElem one() const { return {base_->one(), base_->zero()}; }
  QuadElem add(QuadElem x, QuadElem y) const;
  QuadElem sub(QuadElem x, QuadElem y) const;
  QuadElem mul(QuadElem x, QuadElem y) const;
  QuadElem inv(QuadElem x) const;
  QuadElem pow(QuadElem x, std::uint64_t n) const;
  /// a^2 - d b^2.
  Elem norm(QuadElem x) const;

 private:
  FieldPtr base_;
  Elem d_;
};

/// Whether x (an element a + b*sqrt(-3) of F_q(sqrt(-3))) is a cube there.
/// When -3 is a square in F_q the pair is collapsed into F_q first.
bool is_cube_in_sqrt_minus3(const FieldPtr& field, QuadElem x);
bool is_cube_in_sqrt_minus3(const FieldPtr& field, Elem x);

/// A square root of c inside F_q(sqrt(-3)), written as a + b*sqrt(-3), when
/// one exists (c a square, or -3c a square).
std::optional<QuadElem> sqrt_in_sqrt_minus3(const Field& field, Elem c);

/// Arithmetic in F_q(sqrt(-3)) on the a + b*sqrt(-3) representation; falls
/// back to F_q when -3 is a square there.
QuadElem mul_sqrt_minus3(const Field& field, QuadElem x, QuadElem y);
QuadElem inv_sqrt_minus3(const Field& field, QuadElem x);

}  // namespace conicnet
