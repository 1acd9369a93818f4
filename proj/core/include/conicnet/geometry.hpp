#pragma once

// Projective spaces PG(n,q) for n <= 5: normalized points, subspaces in
// reduced row-echelon form, index-addressable subspace enumeration, and the
// point/line geometry of a conic in PG(2,q).

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "conicnet/field.hpp"

namespace conicnet {

inline constexpr int kMaxCoords = 6;
using Coords = std::array<Elem, kMaxCoords>;
/// Symmetric 3x3 matrix stored as (m00, m01, m02, m11, m12, m22).
using Sym3 = Coords;

/// Number of points of PG(k,q), (q^{k+1}-1)/(q-1).
std::uint64_t projective_point_count(int k, int q);
/// Number of k-flats of PG(n,q) (a Gaussian binomial coefficient).
std::uint64_t subspace_count(int n, int k, int q);

class ProjPoint {
 public:
  ProjPoint() = default;
  /// Scales so the first nonzero coordinate is 1; ZeroInput on the zero vector.
  ProjPoint(const Field& field, std::span<const Elem> coords);

  int size() const { return size_; }
  Elem operator[](int i) const { return c_[i]; }
  std::span<const Elem> coords() const { return {c_.data(), static_cast<std::size_t>(size_)}; }
  const Coords& raw() const { return c_; }

  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
  friend auto operator<=>(const ProjPoint&, const ProjPoint&) = default;

 private:
  int size_ = 0;
  Coords c_{};
};

/// Row space of a (k+1) x (n+1) matrix in reduced row-echelon form with unit
/// pivots: the unique canonical basis of a k-flat.
class Subspace {
 public:
  Subspace() = default;

  int ambient_dim() const { return cols_ - 1; }
  int dim() const { return rows_ - 1; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Coords& row(int i) const { return basis_[i]; }
  int pivot(int i) const { return pivots_[i]; }
  /// Bit mask of pivot columns.
  unsigned pivot_mask() const;

  bool contains(const Field& field, std::span<const Elem> v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (int i = 0; i < a.rows_; ++i)
      for (int j = 0; j < a.cols_; ++j)
        if (a.basis_[i][j] != b.basis_[i][j]) return false;
    return true;
  }

  std::size_t hash() const;

  /// Builds the canonical form of the row space of `vectors` (each of length
  /// `cols`).  EmptyInput if every vector is zero.
  static Subspace from_rows(const Field& field, int cols, std::span<const Coords> vectors);
  /// Same, but DependentBasis unless the vectors are independent.
  static Subspace from_independent_rows(const Field& field, int cols, std::span<const Coords> vectors);

 private:
  friend class SubspaceEnumerator;
  int rows_ = 0;
  int cols_ = 0;
  std::array<Coords, kMaxCoords> basis_{};
  std::array<int, kMaxCoords> pivots_{};
};

struct SubspaceHash {
  std::size_t operator()(const Subspace& s) const { return s.hash(); }
};

/// In-place reduced row echelon form of the first `nrows` rows; returns the
/// rank (nonzero rows are moved to the top).
int row_reduce(const Field& field, std::span<Coords> rows, int cols);

Subspace span(const Field& field, std::span<const ProjPoint> points);

/// Orthogonal complement under a diagonal bilinear form sum(w_i x_i y_i);
/// with all weights 1 this is the ordinary dual subspace.
Subspace orthogonal_complement(const Field& field, const Subspace& s, std::span<const Elem> weights);

/// Visits the (q^{k+1}-1)/(q-1) points of `s` as (coefficient vector, point
/// coordinates).  Coefficients are normalized (first nonzero = 1), and since
/// the basis is echelonized so is each point.
template <typename Fn>
void for_each_point(const Field& field, const Subspace& s, Fn&& fn) {
  const int k = s.rows();
  const int n = s.cols();
  const int q = field.q();
  std::array<Elem, kMaxCoords> coeff{};
  for (int lead = k - 1; lead >= 0; --lead) {
    // coefficient vectors (0,...,0,1,*,...,*) with the 1 at position k-1-lead
    const int first = k - 1 - lead;
    const int free = k - 1 - first;
    std::uint64_t total = 1;
    for (int i = 0; i < free; ++i) total *= static_cast<std::uint64_t>(q);
    for (std::uint64_t t = 0; t < total; ++t) {
      coeff.fill(Elem{});
      coeff[first] = field.one();
      std::uint64_t rest = t;
      for (int i = k - 1; i > first; --i) {
        coeff[i] = Elem{static_cast<std::uint16_t>(rest % static_cast<std::uint64_t>(q))};
        rest /= static_cast<std::uint64_t>(q);
      }
      Coords v{};
      for (int i = first; i < k; ++i) {
        if (coeff[i].is_zero()) continue;
        const Coords& r = s.row(i);
        for (int j = 0; j < n; ++j) v[j] = field.fma(coeff[i], r[j], v[j]);
      }
      fn(std::span<const Elem>(coeff.data(), static_cast<std::size_t>(k)),
         std::span<const Elem>(v.data(), static_cast<std::size_t>(n)));
    }
  }
}

std::vector<ProjPoint> points_of(const Field& field, const Subspace& s);

/// All points of PG(n,q) in the same order as for_each_point on the full space.
std::vector<ProjPoint> all_points(const Field& field, int n);

/// Enumerates the k-flats of PG(n,q) by pivot pattern, then by the free
/// entries in lexicographic order.  Index ranges map to contiguous runs so
/// any [begin, end) split is a valid work shard.
class SubspaceEnumerator {
 public:
  SubspaceEnumerator(FieldPtr field, int n, int k);

  std::uint64_t count() const { return offsets_.back(); }
  int pattern_count() const { return static_cast<int>(patterns_.size()); }
  /// [begin, end) index range of one pivot pattern.
  std::pair<std::uint64_t, std::uint64_t> pattern_range(int pattern) const {
    return {offsets_[pattern], offsets_[pattern + 1]};
  }
  int pattern_of(std::uint64_t index) const;

  Subspace at(std::uint64_t index) const;
  std::uint64_t index_of(const Subspace& s) const;

  template <typename Fn>
  void for_each(std::uint64_t begin, std::uint64_t end, Fn&& fn) const {
    for (std::uint64_t i = begin; i < end; ++i) fn(i, at(i));
  }

  const Field& field() const { return *field_; }

 private:
  struct Pattern {
    std::array<int, kMaxCoords> pivots{};
    unsigned mask = 0;
    std::vector<std::pair<int, int>> free_cells;  // (row, col), lexicographic
  };

  FieldPtr field_;
  int n_;
  int k_;
  std::vector<Pattern> patterns_;
  std::vector<std::uint64_t> offsets_;
  std::vector<int> pattern_by_mask_;
};

/// Point/line incidence of PG(2,q), built once per field.  Points and line
/// coordinates are both listed in all_points order.
class ProjectivePlane {
 public:
  static std::shared_ptr<const ProjectivePlane> get(const FieldPtr& field);

  int size() const { return static_cast<int>(points_.size()); }
  const std::vector<ProjPoint>& points() const { return points_; }
  /// Line coordinates l; the line is {x : l·x = 0}.
  const std::vector<ProjPoint>& lines() const { return points_; }
  const std::vector<int>& points_on_line(int line) const { return on_line_[line]; }
  /// Index of the point represented by x (any nonzero multiple).
  int index_of(std::span<const Elem> x) const;

 private:
  explicit ProjectivePlane(const FieldPtr& field);
  FieldPtr field_;
  std::vector<ProjPoint> points_;
  std::vector<std::vector<int>> on_line_;
  std::vector<int> by_raw_;
};

/// Conic xᵀAx = 0 of PG(2,q) stored by its half-Gram matrix in the order
/// (a00, a01, a02, a11, a12, a22).
struct Conic2 {
  std::array<Elem, 6> gram{};

  /// From form coefficients of X0², X0X1, X0X2, X1², X1X2, X2².
  static Conic2 from_form(const Field& field, std::span<const Elem> coeffs);
  Elem entry(int i, int j) const;
  Elem eval(const Field& field, std::span<const Elem> x) const;
  Elem bilinear(const Field& field, std::span<const Elem> x, std::span<const Elem> y) const;
  Elem det(const Field& field) const;
  bool is_nondegenerate(const Field& field) const { return !det(field).is_zero(); }
};

enum class ConicPointClass { On, External, Internal };
enum class ConicLineClass { Tangent, Secant, ExternalLine };

/// Decided by the discriminant of the conic restricted to the polar line.
ConicPointClass conic_point_class(const Field& field, const Conic2& conic, const ProjPoint& point);
ConicLineClass conic_line_class(const Field& field, const Conic2& conic, const Subspace& line);
/// Line coordinates of the polar of `point`.
ProjPoint polar_line(const Field& field, const Conic2& conic, const ProjPoint& point);
/// The tangent at a point on the conic, as a 1-flat of PG(2,q).
Subspace tangent_line(const Field& field, const Conic2& conic, const ProjPoint& point);
/// The line {x : l·x = 0} of PG(2,q) from its line coordinates.
Subspace line_from_coords(const Field& field, std::span<const Elem> line_coords);

}  // namespace conicnet
