#pragma once

// Points of PG(5,q) as symmetric 3x3 matrices
//
//        | y0 y1 y2 |
//   My = | y1 y3 y4 |
//        | y2 y4 y5 |
//
// the quadric Veronesean (rank-1 matrices), the congruence action
// M -> A M Aᵀ of PGL(3,q), point and hyperplane classes, and point-orbit
// distributions of subspaces.

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "conicnet/cubics.hpp"
#include "conicnet/geometry.hpp"

namespace conicnet {

/// 3x3 matrix, row-major.
struct Mat3 {
  std::array<Elem, 9> m{};

  Elem operator()(int i, int j) const { return m[3 * i + j]; }
  Elem& operator()(int i, int j) { return m[3 * i + j]; }
  friend bool operator==(const Mat3&, const Mat3&) = default;

  static Mat3 identity(const Field& field);
};

Mat3 mat_mul(const Field& field, const Mat3& a, const Mat3& b);
Mat3 mat_transpose(const Mat3& a);
Elem mat_det(const Field& field, const Mat3& a);
Mat3 mat_inverse(const Field& field, const Mat3& a);
std::array<Elem, 3> mat_apply(const Field& field, const Mat3& a, std::span<const Elem> x);

/// Entry (i,j) of a symmetric matrix stored as (y0..y5).
inline constexpr int kSymIndex[3][3] = {{0, 1, 2}, {1, 3, 4}, {2, 4, 5}};
inline Elem sym_entry(const Sym3& y, int i, int j) { return y[kSymIndex[i][j]]; }

Elem sym_det(const Field& field, std::span<const Elem> y);
int sym_rank(const Field& field, std::span<const Elem> y);
/// |M_ii(M)|: determinant after deleting row i and column i.
Elem principal_minor(const Field& field, std::span<const Elem> y, int i);

/// Weights of the trace form tr(M_y M_z) = sum w_i y_i z_i.
std::array<Elem, 6> trace_form_weights(const Field& field);

enum class PointClass : std::uint8_t { P1 = 0, P2e = 1, P2i = 2, P3 = 3 };
enum class HyperplaneClass : std::uint8_t { H1, H2e, H2i, H3 };

std::string to_string(PointClass c);
std::string to_string(HyperplaneClass c);

/// Rank 1 -> P1, rank 3 -> P3; at rank 2 exterior iff the negated principal
/// 2x2 minors are all squares with one of them nonzero.  Scale-invariant, so
/// unnormalized vectors are accepted.
PointClass classify_point(const Field& field, std::span<const Elem> y);

/// x xᵀ for a representative x.
Sym3 veronese(const Field& field, const ProjPoint& x);
/// Inverse of veronese on rank-1 matrices; WrongRank otherwise.
ProjPoint veronese_preimage(const Field& field, std::span<const Elem> y);

/// A M Aᵀ; SingularMatrix when det A = 0.
Sym3 act(const Field& field, const Mat3& a, std::span<const Elem> y);
Subspace act(const Field& field, const Mat3& a, const Subspace& s);

/// The 6x6 matrix of y -> A M_y Aᵀ on coordinates (row-major, z = L y).
using Linear6 = std::array<Elem, 36>;
Linear6 congruence_matrix(const Field& field, const Mat3& a);
Subspace apply_linear(const Field& field, const Linear6& l, const Subspace& s);

/// {M symmetric : M w = 0} for w spanning the kernel of a rank-2 z.
Subspace conic_plane_of(const Field& field, std::span<const Elem> z);

/// Hyperplane sum a_i Y_i = 0 with the conic's literal coefficients
/// (a00, a01, a02, a11, a12, a22); ZeroForm if all vanish.
Subspace delta(const Field& field, std::span<const Elem> coeffs);
/// The same literal coefficients read as a point of PG(5,q).
ProjPoint delta_star(const Field& field, std::span<const Elem> coeffs);
/// Half-Gram matrix of a ternary quadratic form.
Sym3 half_gram(const Field& field, std::span<const Elem> coeffs);

/// Three ternary quadratic forms, coefficients in the order
/// (a00, a01, a02, a11, a12, a22).
struct Net {
  std::array<std::array<Elem, 6>, 3> forms{};
};

/// Plane spanned by the half-Gram matrices; DependentForms if they span less.
Subspace net_to_plane(const Field& field, const Net& net);
/// Intersection of the hyperplanes delta(f_i), itself a plane.
Subspace net_delta(const Field& field, const Net& net);
/// det(x G1 + y G2 + z G3) over the half-Gram matrices.
TernaryCubic net_discriminant(const Field& field, const Net& net);
/// The conic a f1 + b f2 + c f3.
Conic2 net_member(const Field& field, const Net& net, std::span<const Elem> abc);

/// Classifies by the Veronesean points the hyperplane contains: a conic
/// (H1), two conics (H2e), a single point (H2i), or q+1 points with no three
/// preimages collinear (H3).
HyperplaneClass classify_hyperplane(const Field& field, const Subspace& hyperplane);

struct OrbitDistribution {
  std::array<std::uint64_t, 4> n{};

  std::uint64_t total() const { return n[0] + n[1] + n[2] + n[3]; }
  std::uint64_t rank2() const { return n[1] + n[2]; }
  friend bool operator==(const OrbitDistribution&, const OrbitDistribution&) = default;
  friend auto operator<=>(const OrbitDistribution&, const OrbitDistribution&) = default;
  std::string to_string() const;
};

/// Class of every vector of F_q^6, indexed by sum y_i q^i.  Built once per
/// field on first use when q^6 is small enough; used to make distributions
/// table lookups.
class PointClassTable {
 public:
  static constexpr std::uint64_t kMaxEntries = 1ULL << 25;

  /// nullptr when the table would exceed kMaxEntries.
  static std::shared_ptr<const PointClassTable> get(const FieldPtr& field);

  PointClass at(std::span<const Elem> y) const {
    std::uint64_t idx = 0;
    for (int i = 5; i >= 0; --i) idx = idx * q_ + y[i].v;
    return static_cast<PointClass>(classes_[idx]);
  }

 private:
  explicit PointClassTable(const Field& field);
  std::uint64_t q_;
  std::vector<std::uint8_t> classes_;
};

/// Counts [n1, n2, n3, n4] of P1, P2e, P2i, P3 points in a subspace of PG(5,q).
OrbitDistribution distribution(const FieldPtr& field, const Subspace& s);

}  // namespace conicnet
