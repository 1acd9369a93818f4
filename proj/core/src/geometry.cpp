#include "conicnet/geometry.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace conicnet {

std::uint64_t projective_point_count(int k, int q) {
  std::uint64_t total = 0;
  std::uint64_t power = 1;
  for (int i = 0; i <= k; ++i) {
    total += power;
    power *= static_cast<std::uint64_t>(q);
  }
  return total;
}

std::uint64_t subspace_count(int n, int k, int q) {
  // [m r]_q by the q-Pascal rule [m r] = [m-1 r-1] + q^r [m-1 r].
  const int m = n + 1;
  const int r = k + 1;
  if (r < 0 || r > m) return 0;
  std::vector<std::vector<std::uint64_t>> g(m + 1, std::vector<std::uint64_t>(r + 1, 0));
  for (int i = 0; i <= m; ++i) {
    g[i][0] = 1;
    std::uint64_t qp = 1;
    for (int j = 1; j <= std::min(i, r); ++j) {
      qp *= static_cast<std::uint64_t>(q);
      g[i][j] = g[i - 1][j - 1] + (j <= i - 1 ? qp * g[i - 1][j] : 0);
    }
  }
  return g[m][r];
}

ProjPoint::ProjPoint(const Field& field, std::span<const Elem> coords) {
  size_ = static_cast<int>(coords.size());
  int lead = -1;
  for (int i = 0; i < size_; ++i)
    if (!coords[i].is_zero()) {
      lead = i;
      break;
    }
  if (lead < 0) throw Error(ErrorCode::ZeroInput, "the zero vector is not a projective point");
  const Elem s = field.inv(coords[lead]);
  for (int i = 0; i < size_; ++i) c_[i] = field.mul(coords[i], s);
}

unsigned Subspace::pivot_mask() const {
  unsigned mask = 0;
  for (int i = 0; i < rows_; ++i) mask |= 1u << pivots_[i];
  return mask;
}

bool Subspace::contains(const Field& field, std::span<const Elem> v) const {
  // Reduce v against the echelon basis; membership iff the residue vanishes.
  Coords r{};
  std::copy(v.begin(), v.end(), r.begin());
  for (int i = 0; i < rows_; ++i) {
    const Elem c = r[pivots_[i]];
    if (c.is_zero()) continue;
    for (int j = 0; j < cols_; ++j) r[j] = field.sub(r[j], field.mul(c, basis_[i][j]));
  }
  for (int j = 0; j < cols_; ++j)
    if (!r[j].is_zero()) return false;
  return true;
}

std::size_t Subspace::hash() const {
  std::size_t h = static_cast<std::size_t>(rows_ * 31 + cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) h = h * 1099511628211ULL + basis_[i][j].v + 1;
  return h;
}

int row_reduce(const Field& field, std::span<Coords> rows, int cols) {
  const int nrows = static_cast<int>(rows.size());
  int rank = 0;
  for (int col = 0; col < cols && rank < nrows; ++col) {
    int pivot = -1;
    for (int r = rank; r < nrows; ++r)
      if (!rows[r][col].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    const Elem s = field.inv(rows[rank][col]);
    for (int j = 0; j < cols; ++j) rows[rank][j] = field.mul(rows[rank][j], s);
    for (int r = 0; r < nrows; ++r) {
      if (r == rank) continue;
      const Elem c = rows[r][col];
      if (c.is_zero()) continue;
      for (int j = 0; j < cols; ++j) rows[r][j] = field.sub(rows[r][j], field.mul(c, rows[rank][j]));
    }
    ++rank;
  }
  return rank;
}

Subspace Subspace::from_rows(const Field& field, int cols, std::span<const Coords> vectors) {
  std::vector<Coords> work(vectors.begin(), vectors.end());
  const int rank = row_reduce(field, work, cols);
  if (rank == 0) throw Error(ErrorCode::EmptyInput, "span of zero vectors");
  Subspace s;
  s.rows_ = rank;
  s.cols_ = cols;
  for (int i = 0; i < rank; ++i) {
    s.basis_[i] = work[i];
    for (int j = 0; j < cols; ++j)
      if (!work[i][j].is_zero()) {
        s.pivots_[i] = j;
        break;
      }
  }
  return s;
}

Subspace Subspace::from_independent_rows(const Field& field, int cols, std::span<const Coords> vectors) {
  if (vectors.empty()) throw Error(ErrorCode::EmptyInput, "no basis vectors");
  Subspace s = from_rows(field, cols, vectors);
  if (s.rows() != static_cast<int>(vectors.size()))
    throw Error(ErrorCode::DependentBasis, "basis vectors are linearly dependent");
  return s;
}

Subspace span(const Field& field, std::span<const ProjPoint> points) {
  if (points.empty()) throw Error(ErrorCode::EmptyInput, "span of no points");
  std::vector<Coords> rows;
  rows.reserve(points.size());
  for (const auto& p : points) rows.push_back(p.raw());
  return Subspace::from_rows(field, points.front().size(), rows);
}

Subspace orthogonal_complement(const Field& field, const Subspace& s, std::span<const Elem> weights) {
  const int n = s.cols();
  std::vector<Coords> m(static_cast<std::size_t>(s.rows()));
  for (int i = 0; i < s.rows(); ++i)
    for (int j = 0; j < n; ++j) m[i][j] = field.mul(weights[j], s.row(i)[j]);
  const int rank = row_reduce(field, m, n);
  std::array<int, kMaxCoords> pivot_col{};
  unsigned pivots = 0;
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < n; ++j)
      if (!m[i][j].is_zero()) {
        pivot_col[i] = j;
        pivots |= 1u << j;
        break;
      }
  std::vector<Coords> basis;
  for (int f = 0; f < n; ++f) {
    if (pivots & (1u << f)) continue;
    Coords v{};
    v[f] = field.one();
    for (int i = 0; i < rank; ++i) v[pivot_col[i]] = field.neg(m[i][f]);
    basis.push_back(v);
  }
  return Subspace::from_rows(field, n, basis);
}

std::vector<ProjPoint> points_of(const Field& field, const Subspace& s) {
  std::vector<ProjPoint> out;
  out.reserve(projective_point_count(s.dim(), field.q()));
  for_each_point(field, s, [&](std::span<const Elem>, std::span<const Elem> v) { out.emplace_back(field, v); });
  return out;
}

std::vector<ProjPoint> all_points(const Field& field, int n) {
  std::vector<Coords> id(static_cast<std::size_t>(n + 1));
  for (int i = 0; i <= n; ++i) id[i][i] = field.one();
  return points_of(field, Subspace::from_rows(field, n + 1, id));
}

SubspaceEnumerator::SubspaceEnumerator(FieldPtr field, int n, int k) : field_(std::move(field)), n_(n), k_(k) {
  if (n < 0 || n >= kMaxCoords || k < 0 || k > n)
    throw Error(ErrorCode::DimensionMismatch, "need 0 <= k <= n < 6");
  const int cols = n + 1;
  const int rows = k + 1;
  const auto q = static_cast<std::uint64_t>(field_->q());
  pattern_by_mask_.assign(1u << cols, -1);
  offsets_.push_back(0);

  // Pivot tuples in lexicographic order.
  std::array<int, kMaxCoords> piv{};
  for (int i = 0; i < rows; ++i) piv[i] = i;
  while (true) {
    Pattern pat;
    pat.pivots = piv;
    for (int i = 0; i < rows; ++i) pat.mask |= 1u << piv[i];
    for (int i = 0; i < rows; ++i)
      for (int j = piv[i] + 1; j < cols; ++j)
        if (!(pat.mask & (1u << j))) pat.free_cells.emplace_back(i, j);
    std::uint64_t size = 1;
    for (std::size_t c = 0; c < pat.free_cells.size(); ++c) size *= q;
    pattern_by_mask_[pat.mask] = static_cast<int>(patterns_.size());
    offsets_.push_back(offsets_.back() + size);
    patterns_.push_back(std::move(pat));

    int i = rows - 1;
    while (i >= 0 && piv[i] == cols - rows + i) --i;
    if (i < 0) break;
    ++piv[i];
    for (int j = i + 1; j < rows; ++j) piv[j] = piv[j - 1] + 1;
  }
}

int SubspaceEnumerator::pattern_of(std::uint64_t index) const {
  auto it = std::upper_bound(offsets_.begin(), offsets_.end(), index);
  return static_cast<int>(it - offsets_.begin()) - 1;
}

Subspace SubspaceEnumerator::at(std::uint64_t index) const {
  const int pid = pattern_of(index);
  const Pattern& pat = patterns_[pid];
  std::uint64_t rest = index - offsets_[pid];
  const auto q = static_cast<std::uint64_t>(field_->q());
  Subspace s;
  s.rows_ = k_ + 1;
  s.cols_ = n_ + 1;
  for (int i = 0; i <= k_; ++i) {
    s.pivots_[i] = pat.pivots[i];
    s.basis_[i][pat.pivots[i]] = field_->one();
  }
  for (auto it = pat.free_cells.rbegin(); it != pat.free_cells.rend(); ++it) {
    s.basis_[it->first][it->second] = Elem{static_cast<std::uint16_t>(rest % q)};
    rest /= q;
  }
  return s;
}

std::uint64_t SubspaceEnumerator::index_of(const Subspace& s) const {
  const int pid = pattern_by_mask_[s.pivot_mask()];
  const Pattern& pat = patterns_[pid];
  const auto q = static_cast<std::uint64_t>(field_->q());
  std::uint64_t offset = 0;
  for (const auto& [r, c] : pat.free_cells) offset = offset * q + s.row(r)[c].v;
  return offsets_[pid] + offset;
}

Conic2 Conic2::from_form(const Field& field, std::span<const Elem> coeffs) {
  Conic2 c;
  const Elem half = field.inv(field.from_int(2));
  for (int i = 0; i < 6; ++i) {
    const bool off_diagonal = i == 1 || i == 2 || i == 4;
    c.gram[i] = off_diagonal ? field.mul(coeffs[i], half) : coeffs[i];
  }
  return c;
}

Elem Conic2::entry(int i, int j) const {
  static constexpr int kIndex[3][3] = {{0, 1, 2}, {1, 3, 4}, {2, 4, 5}};
  return gram[kIndex[i][j]];
}

Elem Conic2::bilinear(const Field& field, std::span<const Elem> x, std::span<const Elem> y) const {
  Elem s{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s = field.add(s, field.mul(x[i], field.mul(entry(i, j), y[j])));
  return s;
}

Elem Conic2::eval(const Field& field, std::span<const Elem> x) const { return bilinear(field, x, x); }

Elem Conic2::det(const Field& f) const {
  auto m = [&](int i, int j) { return entry(i, j); };
  const Elem t0 = f.mul(m(0, 0), f.sub(f.mul(m(1, 1), m(2, 2)), f.mul(m(1, 2), m(2, 1))));
  const Elem t1 = f.mul(m(0, 1), f.sub(f.mul(m(1, 0), m(2, 2)), f.mul(m(1, 2), m(2, 0))));
  const Elem t2 = f.mul(m(0, 2), f.sub(f.mul(m(1, 0), m(2, 1)), f.mul(m(1, 1), m(2, 0))));
  return f.add(f.sub(t0, t1), t2);
}

ProjPoint polar_line(const Field& field, const Conic2& conic, const ProjPoint& point) {
  std::array<Elem, 3> l{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) l[i] = field.fma(conic.entry(i, j), point[j], l[i]);
  return ProjPoint(field, l);
}

Subspace line_from_coords(const Field& field, std::span<const Elem> line_coords) {
  std::array<Elem, kMaxCoords> w{};
  w.fill(field.one());
  Coords row{};
  std::copy(line_coords.begin(), line_coords.end(), row.begin());
  const std::array<Coords, 1> rows{row};
  return orthogonal_complement(field, Subspace::from_rows(field, 3, rows), std::span<const Elem>(w.data(), 3));
}

Subspace tangent_line(const Field& field, const Conic2& conic, const ProjPoint& point) {
  const ProjPoint l = polar_line(field, conic, point);
  return line_from_coords(field, l.coords());
}

ConicPointClass conic_point_class(const Field& field, const Conic2& conic, const ProjPoint& point) {
  if (!conic.is_nondegenerate(field)) throw Error(ErrorCode::DegenerateConic, "conic must be nondegenerate");
  if (conic.eval(field, point.coords()).is_zero()) return ConicPointClass::On;
  const Subspace polar = line_from_coords(field, polar_line(field, conic, point).coords());
  const auto u = std::span<const Elem>(polar.row(0).data(), 3);
  const auto v = std::span<const Elem>(polar.row(1).data(), 3);
  const Elem b = conic.bilinear(field, u, v);
  const Elem disc = field.sub(field.mul(b, b), field.mul(conic.eval(field, u), conic.eval(field, v)));
  return field.is_nonzero_square(disc) ? ConicPointClass::External : ConicPointClass::Internal;
}

ConicLineClass conic_line_class(const Field& field, const Conic2& conic, const Subspace& line) {
  if (!conic.is_nondegenerate(field)) throw Error(ErrorCode::DegenerateConic, "conic must be nondegenerate");
  int hits = 0;
  for_each_point(field, line, [&](std::span<const Elem>, std::span<const Elem> x) {
    if (conic.eval(field, x).is_zero()) ++hits;
  });
  if (hits == 1) return ConicLineClass::Tangent;
  if (hits == 2) return ConicLineClass::Secant;
  return ConicLineClass::ExternalLine;
}

std::shared_ptr<const ProjectivePlane> ProjectivePlane::get(const FieldPtr& field) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const ProjectivePlane>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[field->q()];
  if (!slot) slot.reset(new ProjectivePlane(field));
  return slot;
}

ProjectivePlane::ProjectivePlane(const FieldPtr& field) : field_(field), points_(all_points(*field, 2)) {
  const int q = field->q();
  by_raw_.assign(static_cast<std::size_t>(q) * q * q, -1);
  for (int i = 0; i < size(); ++i) {
    const auto& x = points_[i];
    by_raw_[x[0].v + q * (x[1].v + q * x[2].v)] = i;
  }
  on_line_.resize(points_.size());
  for (int l = 0; l < size(); ++l) {
    const auto& a = points_[l];
    for (int i = 0; i < size(); ++i) {
      const auto& x = points_[i];
      Elem s = field->mul(a[0], x[0]);
      s = field->fma(a[1], x[1], s);
      s = field->fma(a[2], x[2], s);
      if (s.is_zero()) on_line_[l].push_back(i);
    }
  }
}

int ProjectivePlane::index_of(std::span<const Elem> x) const {
  const ProjPoint p(*field_, x);
  const int q = field_->q();
  return by_raw_[p[0].v + q * (p[1].v + q * p[2].v)];
}

}  // namespace conicnet
