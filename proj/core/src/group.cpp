#include "conicnet/group.hpp"

namespace conicnet {

std::uint64_t pgl3_order(int q) {
  const auto Q = static_cast<std::uint64_t>(q);
  return Q * Q * Q * (Q * Q * Q - 1) * (Q * Q - 1);
}

Mat3 canonical_projectivity(const Field& field, const Mat3& a) {
  if (mat_det(field, a).is_zero()) throw Error(ErrorCode::SingularMatrix, "matrix is singular");
  for (Elem x : a.m) {
    if (x.is_zero()) continue;
    const Elem s = field.inv(x);
    Mat3 r;
    for (int i = 0; i < 9; ++i) r.m[i] = field.mul(a.m[i], s);
    return r;
  }
  throw Error(ErrorCode::SingularMatrix, "zero matrix");
}

std::vector<Mat3> group_generators(const Field& field) {
  std::vector<Mat3> gens;
  for (Elem t : field.additive_basis())
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        if (i == j) continue;
        Mat3 a = Mat3::identity(field);
        a(i, j) = t;
        gens.push_back(a);
      }
  Mat3 d = Mat3::identity(field);
  d(0, 0) = field.primitive_element();
  gens.push_back(d);
  return gens;
}

}  // namespace conicnet
