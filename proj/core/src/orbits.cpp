#include "conicnet/orbits.hpp"

#include <cstdlib>
#include <numeric>
#include <string>
#include <unordered_set>

namespace conicnet {

namespace {

// Linear equations cutting out a subspace of PG(5,q).
class Membership {
 public:
  Membership(const Field& field, const Subspace& s) : field_(field) {
    if (s.rows() == s.cols()) return;
    const std::array<Elem, 6> unit = {field.one(), field.one(), field.one(), field.one(), field.one(), field.one()};
    const Subspace dual = orthogonal_complement(field, s, unit);
    for (int i = 0; i < dual.rows(); ++i) eqs_.push_back(dual.row(i));
  }

  bool contains(const Sym3& z) const {
    for (const Coords& e : eqs_) {
      Elem acc{};
      for (int t = 0; t < 6; ++t) acc = field_.fma(e[t], z[t], acc);
      if (!acc.is_zero()) return false;
    }
    return true;
  }

 private:
  const Field& field_;
  std::vector<Coords> eqs_;
};

// A M_y Aᵀ without the determinant check.
Sym3 congruence(const Field& f, const Mat3& a, const Sym3& y) {
  Elem b[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Elem s{};
      for (int k = 0; k < 3; ++k) s = f.fma(a(i, k), y[kSymIndex[k][j]], s);
      b[i][j] = s;
    }
  Sym3 z;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      Elem s{};
      for (int k = 0; k < 3; ++k) s = f.fma(b[i][k], a(j, k), s);
      z[kSymIndex[i][j]] = s;
    }
  return z;
}

bool maps_into(const Field& f, const Mat3& a, const Subspace& s, const Membership& target) {
  for (int r = 0; r < s.rows(); ++r)
    if (!target.contains(congruence(f, a, s.row(r)))) return false;
  return true;
}

// Invertible matrix whose first column is x.
Mat3 frame_for(const Field& f, const ProjPoint& x) {
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      Mat3 t;
      for (int r = 0; r < 3; ++r) t(r, 0) = x[r];
      t(i, 1) = f.one();
      t(j, 2) = f.one();
      if (!mat_det(f, t).is_zero()) return t;
    }
  throw Error(ErrorCode::InternalInconsistency, "cannot complete a point to a frame");
}

std::vector<ProjPoint> rank_one_preimages(const Field& f, const Subspace& s) {
  std::vector<ProjPoint> out;
  for_each_point(f, s, [&](std::span<const Elem>, std::span<const Elem> y) {
    if (sym_rank(f, y) == 1) out.push_back(veronese_preimage(f, y));
  });
  return out;
}

}  // namespace

std::uint64_t orbit_memory_limit() {
  if (const char* env = std::getenv("CONICNET_ORBIT_LIMIT")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 20'000'000;
}

std::vector<Subspace> orbit_of(const FieldPtr& field, const Subspace& s, OrbitMethod method) {
  const Field& f = *field;
  const std::uint64_t limit = orbit_memory_limit();
  std::unordered_set<Subspace, SubspaceHash> seen;
  std::vector<Subspace> members;
  auto insert = [&](const Subspace& t) {
    if (!seen.insert(t).second) return;
    if (seen.size() > limit)
      throw Error(ErrorCode::MemoryBoundExceeded, "orbit exceeds the limit of " + std::to_string(limit) + " subspaces");
    members.push_back(t);
  };
  insert(s);
  if (method == OrbitMethod::FullGroup) {
    for_each_group_element(f, [&](const Mat3& a) {
      insert(act(f, a, s));
      return true;
    });
    return members;
  }
  std::vector<Linear6> gens;
  for (const Mat3& g : group_generators(f)) gens.push_back(congruence_matrix(f, g));
  for (std::size_t head = 0; head < members.size(); ++head) {
    const Subspace cur = members[head];
    for (const Linear6& g : gens) insert(apply_linear(f, g, cur));
  }
  return members;
}

std::uint64_t stabilizer_order(const FieldPtr& field, const Subspace& s) {
  const Field& f = *field;
  if (s.rows() == s.cols()) return pgl3_order(f.q());
  const Membership target(f, s);
  std::uint64_t count = 0;
  for_each_group_element(f, [&](const Mat3& a) {
    if (maps_into(f, a, s, target)) ++count;
    return true;
  });
  return count;
}

std::uint64_t orbit_size(const FieldPtr& field, const Subspace& s) {
  return pgl3_order(field->q()) / stabilizer_order(field, s);
}

SubspaceProfile profile_of(const FieldPtr& field, const Subspace& s) {
  return {s.dim(), distribution(field, s)};
}

std::optional<Mat3> find_witness(const FieldPtr& field, const Subspace& a, const Subspace& b) {
  const Field& f = *field;
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorCode::DimensionMismatch, "witness search needs subspaces of equal dimension");
  if (a.cols() != 6) throw Error(ErrorCode::DimensionMismatch, "witness search works in PG(5,q)");
  if (!(profile_of(field, a) == profile_of(field, b))) return std::nullopt;
  const Membership target(f, b);

  const auto xs = rank_one_preimages(f, a);
  if (xs.empty()) {
    if (pgl3_order(f.q()) > kWitnessFullScanLimit)
      throw Error(ErrorCode::SearchBudgetExceeded, "no rank-1 frame and the group is too large to scan");
    std::optional<Mat3> found;
    for_each_group_element(f, [&](const Mat3& g) {
      if (!maps_into(f, g, a, target)) return true;
      found = g;
      return false;
    });
    return found;
  }

  const Mat3 t1_inv = mat_inverse(f, frame_for(f, xs.front()));
  const int q = f.q();
  for (const ProjPoint& y : rank_one_preimages(f, b)) {
    const Mat3 t2 = frame_for(f, y);
    // A = T2 S T1^-1 with S e0 = e0: S = [[1,a,b],[0,d,e],[0,g,h]].
    Mat3 s;
    s(0, 0) = f.one();
    for (int i01 = 0; i01 < q; ++i01)
      for (int i02 = 0; i02 < q; ++i02) {
        s(0, 1) = f.at(i01);
        s(0, 2) = f.at(i02);
        for (int block = 0; block < q * q * q * q; ++block) {
          int code = block;
          s(1, 1) = f.at(code % q), code /= q;
          s(1, 2) = f.at(code % q), code /= q;
          s(2, 1) = f.at(code % q), code /= q;
          s(2, 2) = f.at(code % q);
          if (f.mul(s(1, 1), s(2, 2)) == f.mul(s(1, 2), s(2, 1))) continue;
          const Mat3 g = mat_mul(f, mat_mul(f, t2, s), t1_inv);
          if (maps_into(f, g, a, target)) return canonical_projectivity(f, g);
        }
      }
  }
  return std::nullopt;
}

OrbitPartition orbit_partition(const FieldPtr& field, int k) {
  const Field& f = *field;
  const SubspaceEnumerator en(field, 5, k);
  const std::uint64_t n = en.count();
  if (n > orbit_memory_limit())
    throw Error(ErrorCode::MemoryBoundExceeded, std::to_string(n) + " subspaces exceed the orbit limit");
  std::vector<std::uint32_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  std::vector<Linear6> gens;
  for (const Mat3& g : group_generators(f)) gens.push_back(congruence_matrix(f, g));
  for (std::uint64_t i = 0; i < n; ++i) {
    const Subspace s = en.at(i);
    for (const Linear6& g : gens) {
      const auto j = static_cast<std::uint32_t>(en.index_of(apply_linear(f, g, s)));
      const std::uint32_t a = find(static_cast<std::uint32_t>(i));
      const std::uint32_t b = find(j);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  OrbitPartition out;
  out.orbit.assign(n, 0);
  std::vector<std::uint32_t> id_of_root(n, UINT32_MAX);
  for (std::uint64_t i = 0; i < n; ++i) {
    const std::uint32_t r = find(static_cast<std::uint32_t>(i));
    if (id_of_root[r] == UINT32_MAX) {
      id_of_root[r] = static_cast<std::uint32_t>(out.sizes.size());
      out.sizes.push_back(0);
      out.first_member.push_back(i);
    }
    out.orbit[i] = id_of_root[r];
    ++out.sizes[id_of_root[r]];
  }
  return out;
}

}  // namespace conicnet
