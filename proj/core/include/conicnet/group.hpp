#pragma once

// PGL(3,q) as canonical 3x3 matrices (first nonzero entry 1).

#include <cstdint>
#include <vector>

#include "conicnet/veronese.hpp"

namespace conicnet {

/// |PGL(3,q)| = q^3 (q^3 - 1)(q^2 - 1).
std::uint64_t pgl3_order(int q);

/// Scales so the first nonzero entry (row-major) is 1.  SingularMatrix if
/// det = 0.
Mat3 canonical_projectivity(const Field& field, const Mat3& a);

/// Calls fn(const Mat3&) once per element of PGL(3,q); stops early when fn
/// returns false.  Rows 2 and 3 run over F_q^3, row 1 over normalized
/// nonzero vectors.
template <typename Fn>
void for_each_group_element(const Field& field, Fn&& fn) {
  const int q = field.q();
  const int q3 = q * q * q;
  auto fill = [&](Mat3& a, int row, int code) {
    for (int j = 2; j >= 0; --j) {
      a(row, j) = Elem{static_cast<std::uint16_t>(code % q)};
      code /= q;
    }
  };
  Mat3 a;
  for (int r0 = 1; r0 < q3; ++r0) {
    fill(a, 0, r0);
    // keep only normalized first rows
    Elem lead{};
    for (int j = 0; j < 3; ++j)
      if (!a(0, j).is_zero()) {
        lead = a(0, j);
        break;
      }
    if (lead != field.one()) continue;
    for (int r1 = 0; r1 < q3; ++r1) {
      fill(a, 1, r1);
      // 2x2 minors of rows 0,1 give the cross product; skip dependent pairs
      const Elem c0 = field.sub(field.mul(a(0, 1), a(1, 2)), field.mul(a(0, 2), a(1, 1)));
      const Elem c1 = field.sub(field.mul(a(0, 2), a(1, 0)), field.mul(a(0, 0), a(1, 2)));
      const Elem c2 = field.sub(field.mul(a(0, 0), a(1, 1)), field.mul(a(0, 1), a(1, 0)));
      if (c0.is_zero() && c1.is_zero() && c2.is_zero()) continue;
      for (int r2 = 0; r2 < q3; ++r2) {
        fill(a, 2, r2);
        Elem det = field.mul(c0, a(2, 0));
        det = field.fma(c1, a(2, 1), det);
        det = field.fma(c2, a(2, 2), det);
        if (det.is_zero()) continue;
        if (!fn(static_cast<const Mat3&>(a))) return;
      }
    }
  }
}

/// Transvections I + tE_ij (i != j, t over an additive basis of F_q) and
/// diag(w, 1, 1) for a primitive w: a generating set of GL(3,q).
std::vector<Mat3> group_generators(const Field& field);

}  // namespace conicnet
