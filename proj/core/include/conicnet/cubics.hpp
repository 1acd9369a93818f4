#pragma once

// Ternary and binary forms of degree <= 3, the determinantal cubic of a
// plane or line of symmetric matrices, and the invariants read off it:
// linear components, singular points, Hessian, rational inflexions.

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "conicnet/geometry.hpp"

namespace conicnet {

/// Homogeneous form of degree <= 3 in (x, y, z).  Monomials x^i y^j z^k are
/// stored by i descending, then j descending: for a cubic
/// x³, x²y, x²z, xy², xyz, xz², y³, y²z, yz², z³.
struct TernaryForm {
  int degree = 0;
  std::array<Elem, 10> c{};

  static constexpr int size(int d) { return (d + 1) * (d + 2) / 2; }
  static constexpr int index(int d, int i, int j) { return (d - i) * (d - i + 1) / 2 + (d - i - j); }

  Elem coeff(int i, int j, int k) const { return c[index(i + j + k, i, j)]; }
  void set(int i, int j, int k, Elem v) { c[index(i + j + k, i, j)] = v; }
  bool is_zero() const;

  friend bool operator==(const TernaryForm&, const TernaryForm&) = default;

  static TernaryForm linear(Elem a, Elem b, Elem c);
  static TernaryForm constant(Elem a);
};

using TernaryCubic = TernaryForm;

Elem eval(const Field& field, const TernaryForm& f, std::span<const Elem> x);
TernaryForm add(const Field& field, const TernaryForm& f, const TernaryForm& g);
TernaryForm sub(const Field& field, const TernaryForm& f, const TernaryForm& g);
TernaryForm scale(const Field& field, const TernaryForm& f, Elem s);
TernaryForm mul(const Field& field, const TernaryForm& f, const TernaryForm& g);
TernaryForm partial(const Field& field, const TernaryForm& f, int var);
/// f(T x) for the 3x3 matrix T (row-major).
TernaryForm substitute(const Field& field, const TernaryForm& f, std::span<const Elem> t);
/// f / l when l divides f exactly, otherwise nullopt.
std::optional<TernaryForm> divide_linear(const Field& field, const TernaryForm& f, std::span<const Elem> l);
/// Multiplies by the inverse of the leading nonzero coefficient.
TernaryForm monic(const Field& field, const TernaryForm& f);
std::string to_string(const Field& field, const TernaryForm& f, const std::array<const char*, 3>& vars = {"x", "y", "z"});

/// Binary form of degree <= 3: c[i] is the coefficient of x^(d-i) y^i.
struct BinaryForm {
  int degree = 0;
  std::array<Elem, 4> c{};

  bool is_zero() const;
  friend bool operator==(const BinaryForm&, const BinaryForm&) = default;
};

Elem eval(const Field& field, const BinaryForm& f, Elem x, Elem y);
std::string to_string(const Field& field, const BinaryForm& f, const std::array<const char*, 2>& vars = {"x", "y"});

enum class BinaryFactorType {
  Zero,
  TripleRoot,
  DoublePlusSimple,
  ThreeDistinctRational,
  OneRationalPlusIrreducibleQuadratic,
  Irreducible,
};
std::string to_string(BinaryFactorType t);

/// Factorization type of a binary cubic over F_q, by roots on PG(1,q) with
/// multiplicity.
BinaryFactorType binary_factor_type(const Field& field, const BinaryForm& f);

/// det(xA + yB + zC); DependentBasis unless A, B, C are independent.
TernaryCubic det_cubic(const Field& field, const Sym3& a, const Sym3& b, const Sym3& c);
/// det(xA + yB); DependentBasis unless A, B are independent.
BinaryForm det_cubic(const Field& field, const Sym3& a, const Sym3& b);

struct LinearComponent {
  ProjPoint line;  // line coordinates, normalized
  int multiplicity = 1;
};

/// What is left after removing every rational linear factor.
enum class Residual { None, NondegenerateConic, ConjugateLinePair, IrreducibleCubic };
std::string to_string(Residual r);

struct Components {
  std::vector<LinearComponent> lines;
  Residual residual = Residual::None;
  TernaryForm residual_form;

  int linear_degree() const;
  bool is_triple_line() const { return lines.size() == 1 && lines[0].multiplicity == 3; }
};

/// Screens lines of PG(2,q) on which f vanishes, then divides them out to
/// get multiplicities.  IdenticallyZero on the zero form.
Components linear_components(const FieldPtr& field, const TernaryForm& f);

/// Points where f and its three partial derivatives vanish.
std::vector<ProjPoint> singular_points(const FieldPtr& field, const TernaryForm& f);

/// Determinant of the matrix of second partials.  CharThreeUnsupported in
/// characteristic 3.
TernaryForm hessian(const Field& field, const TernaryForm& f);

/// Nonsingular points of f = 0 on which the Hessian vanishes.
/// CharThreeUnsupported, IdenticallyZero.
int rational_inflexion_count(const FieldPtr& field, const TernaryForm& f);
/// The inflexion points themselves.
std::vector<ProjPoint> rational_inflexions(const FieldPtr& field, const TernaryForm& f);

struct CubicProfile {
  Components components;
  std::vector<ProjPoint> singular;
  std::optional<int> inflexions;  // absent in characteristic 3
};

CubicProfile cubic_profile(const FieldPtr& field, const TernaryForm& f);

}  // namespace conicnet
