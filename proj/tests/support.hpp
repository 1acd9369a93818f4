#pragma once

// Test-side oracles.  Everything here works on plain integers mod a prime p
// and avoids the library's own rank, class and distribution code, so the
// tests compare two independent computations.

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "conicnet/classify.hpp"
#include "conicnet/orbits.hpp"

namespace oracle {

using IntSym = std::array<int, 6>;  // m00 m01 m02 m11 m12 m22

inline int md(long long a, int p) {
  const long long r = a % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

inline int rank3(IntSym y, int p) {
  int m[3][3] = {{y[0], y[1], y[2]}, {y[1], y[3], y[4]}, {y[2], y[4], y[5]}};
  int rank = 0;
  for (int col = 0; col < 3 && rank < 3; ++col) {
    int piv = -1;
    for (int r = rank; r < 3; ++r)
      if (md(m[r][col], p) != 0) piv = r;
    if (piv < 0) continue;
    std::swap(m[piv], m[rank]);
    for (int r = 0; r < 3; ++r) {
      if (r == rank) continue;
      const long long f = md(m[r][col], p);
      const long long g = md(m[rank][col], p);
      for (int c = 0; c < 3; ++c) m[r][c] = md(g * m[r][c] - f * m[rank][c], p);
    }
    ++rank;
  }
  return rank;
}

/// Points of PG(2,p) with x^T M x = 0.
inline int zero_count(const IntSym& y, int p) {
  int count = 0;
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      for (int c = 0; c < p; ++c) {
        // normalized: first nonzero coordinate is 1
        if (a > 1 || (a == 0 && b > 1) || (a == 0 && b == 0 && c != 1)) continue;
        const long long v = 1LL * y[0] * a * a + 2LL * y[1] * a * b + 2LL * y[2] * a * c + 1LL * y[3] * b * b +
                            2LL * y[4] * b * c + 1LL * y[5] * c * c;
        if (md(v, p) == 0) ++count;
      }
  return count;
}

/// 0 = P1, 1 = P2e (two rational lines), 2 = P2i (conjugate pair), 3 = P3.
inline int point_class(const IntSym& y, int p) {
  switch (rank3(y, p)) {
    case 1: return 0;
    case 2: return zero_count(y, p) == 2 * p + 1 ? 1 : 2;
    default: return 3;
  }
}

/// Point-orbit distribution of the span of `basis` (independent rows).
inline std::array<std::uint64_t, 4> distribution(const std::vector<IntSym>& basis, int p) {
  std::array<std::uint64_t, 4> n{};
  const int k = static_cast<int>(basis.size());
  int total = 1;
  for (int i = 0; i < k; ++i) total *= p;
  for (int code = 1; code < total; ++code) {
    int lead = 0;
    int c[6] = {};
    int rest = code;
    for (int i = 0; i < k; ++i) c[i] = rest % p, rest /= p;
    for (int i = k - 1; i >= 0; --i)
      if (c[i] != 0) {
        lead = c[i];
        break;
      }
    if (lead != 1) continue;
    IntSym y{};
    for (int i = 0; i < k; ++i)
      for (int t = 0; t < 6; ++t) y[t] = md(y[t] + 1LL * c[i] * basis[i][t], p);
    ++n[point_class(y, p)];
  }
  return n;
}

inline bool is_square(int a, int p) {
  for (int x = 0; x < p; ++x)
    if (md(1LL * x * x - a, p) == 0) return true;
  return false;
}

inline int least_nonsquare(int p) {
  for (int a = 1; a < p; ++a)
    if (!is_square(a, p)) return a;
  return 0;
}

/// c is admissible for the Sigma14 representative iff
/// 4(1-c)^2 v^3 + 3c(1-c) v - c^2 = 0 has no root v in F_p.
inline bool sigma14_admissible(int c, int p) {
  if (md(c, p) == 0 || md(c - 1, p) == 0) return false;
  for (int v = 0; v < p; ++v) {
    const long long one_c = md(1 - c, p);
    const long long val = 4 * md(one_c * one_c, p) * md(1LL * v * v * v, p) + 3LL * c * one_c % p * v - 1LL * c * c;
    if (md(val, p) == 0) return false;
  }
  return true;
}

// Point-orbit distribution rows transcribed from the published tables.
inline std::array<std::uint64_t, 4> plane_row(const std::string& label, std::uint64_t q) {
  const std::uint64_t a = (q - 1) / 2, b = (q + 1) / 2;
  if (label == "Sigma1") return {q + 1, q * (q + 1) / 2, q * (q - 1) / 2, 0};
  if (label == "Sigma2") return {3, 3 * a, 3 * a, q * q - 2 * q + 1};
  if (label == "Sigma3" || label == "Sigma4") return {2, (3 * q - 1) / 2, a, q * q - q};
  if (label == "Sigma5") return {2, q - 1, q - 1, q * q - q + 1};
  if (label == "Sigma6" || label == "Sigma13") return {1, b, b, q * q - 1};
  if (label == "Sigma7") return {1, q * q + q, 0, 0};
  if (label == "Sigma8" || label == "Sigma9") return {1, 2 * q, 0, q * q - q};
  if (label == "Sigma10") return {1, q, q, q * q - q};
  if (label == "Sigma11" || label == "Sigma14prime" || label == "Sigma15") return {1, q, 0, q * q};
  if (label == "Sigma12") return {1, a, a, q * q + 1};
  if (label == "Sigma14") return q % 3 == 1 ? std::array<std::uint64_t, 4>{1, a, a, q * q + 1}
                                            : std::array<std::uint64_t, 4>{1, b, b, q * q - 1};
  return {};
}

inline std::array<std::uint64_t, 4> line_row(const std::string& label, std::uint64_t q) {
  const std::uint64_t a = (q - 1) / 2, b = (q + 1) / 2;
  if (label == "o5") return {2, a, a, 0};
  if (label == "o6") return {1, q, 0, 0};
  if (label == "o8_1") return {1, 1, 0, q - 1};
  if (label == "o8_2") return {1, 0, 1, q - 1};
  if (label == "o9") return {1, 0, 0, q};
  if (label == "o10") return {0, b, b, 0};
  if (label == "o12") return {0, q + 1, 0, 0};
  if (label == "o13_1") return {0, 2, 0, q - 1};
  if (label == "o13_2") return {0, 1, 1, q - 1};
  if (label == "o14_1") return {0, 3, 0, q - 2};
  if (label == "o14_2") return {0, 1, 2, q - 2};
  if (label == "o15_1" || label == "o16") return {0, 1, 0, q};
  if (label == "o15_2") return {0, 0, 1, q};
  if (label == "o17") return {0, 0, 0, q + 1};
  return {};
}

}  // namespace oracle

namespace testutil {

using namespace conicnet;

inline Sym3 sym(const Field& f, std::initializer_list<int> v) {
  Sym3 y{};
  int i = 0;
  for (int x : v) y[i++] = f.from_int(x);
  return y;
}

inline Subspace subspace(const Field& f, const std::vector<Sym3>& rows) {
  return Subspace::from_independent_rows(f, 6, rows);
}

inline oracle::IntSym to_int(const Sym3& y) {
  oracle::IntSym r{};
  for (int i = 0; i < 6; ++i) r[i] = y[i].v;
  return r;
}

inline std::array<std::uint64_t, 4> as_array(const OrbitDistribution& d) { return d.n; }

inline Elem random_elem(const Field& f, std::mt19937_64& rng) {
  return f.at(static_cast<int>(rng() % static_cast<std::uint64_t>(f.q())));
}

inline Mat3 random_invertible(const Field& f, std::mt19937_64& rng) {
  for (;;) {
    Mat3 a;
    for (auto& x : a.m) x = random_elem(f, rng);
    if (!mat_det(f, a).is_zero()) return a;
  }
}

inline Sym3 random_sym(const Field& f, std::mt19937_64& rng) {
  for (;;) {
    Sym3 y;
    for (auto& x : y) x = random_elem(f, rng);
    for (auto x : y)
      if (!x.is_zero()) return y;
  }
}

inline Subspace random_subspace(const Field& f, int rows, std::mt19937_64& rng) {
  for (;;) {
    std::vector<Coords> v;
    for (int i = 0; i < rows; ++i) v.push_back(random_sym(f, rng));
    const Subspace s = Subspace::from_rows(f, 6, v);
    if (s.rows() == rows) return s;
  }
}

}  // namespace testutil
