#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "octalab/common.hpp"

// GF(4) = {0, 1, w, w^2} with w^2 = w + 1, characteristic 2.
// Elements are encoded 0,1,2,3 in that order; addition is XOR of the
// polynomial bits, which happens to be plain XOR of the codes.

namespace octalab {

using Gf4 = uint8_t;

inline constexpr Gf4 GF0 = 0, GF1 = 1, GFW = 2, GFW2 = 3;

inline constexpr Gf4 gf4_add(Gf4 a, Gf4 b) { return a ^ b; }

namespace detail {
inline constexpr std::array<std::array<Gf4, 4>, 4> kMul = {{
    {0, 0, 0, 0},
    {0, 1, 2, 3},
    {0, 2, 3, 1},  // w*w = w^2, w*w^2 = 1
    {0, 3, 1, 2},
}};
}  // namespace detail

inline constexpr Gf4 gf4_mul(Gf4 a, Gf4 b) { return detail::kMul[a][b]; }

inline constexpr Gf4 gf4_inv(Gf4 a) {
  // nonzero cube roots of unity: a^3 = 1, so a^-1 = a^2
  return gf4_mul(a, a);
}

// Frobenius x -> x^2; the unique nontrivial field automorphism.
inline constexpr Gf4 gf4_frob(Gf4 a) { return gf4_mul(a, a); }

inline char gf4_char(Gf4 a) { return "01wW"[a]; }

using Vec3 = std::array<Gf4, 3>;
using Mat3 = std::array<std::array<Gf4, 3>, 3>;

inline bool vec_is_zero(const Vec3& v) { return v[0] == 0 && v[1] == 0 && v[2] == 0; }

inline Gf4 dot(const Vec3& a, const Vec3& b) {
  return gf4_add(gf4_add(gf4_mul(a[0], b[0]), gf4_mul(a[1], b[1])), gf4_mul(a[2], b[2]));
}

inline Vec3 scale(Gf4 k, const Vec3& v) {
  return {gf4_mul(k, v[0]), gf4_mul(k, v[1]), gf4_mul(k, v[2])};
}

// Canonical projective representative: scale so the first nonzero entry is 1.
inline Vec3 normalize(const Vec3& v) {
  require(!vec_is_zero(v), "cannot normalize the zero vector");
  for (Gf4 c : v)
    if (c != 0) return scale(gf4_inv(c), v);
  return v;  // unreachable
}

inline Vec3 frob(const Vec3& v) { return {gf4_frob(v[0]), gf4_frob(v[1]), gf4_frob(v[2])}; }

inline Vec3 mat_apply(const Mat3& m, const Vec3& v) {
  Vec3 r{0, 0, 0};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i] = gf4_add(r[i], gf4_mul(m[i][j], v[j]));
  return r;
}

inline Mat3 mat_mul(const Mat3& a, const Mat3& b) {
  Mat3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Gf4 s = 0;
      for (int k = 0; k < 3; ++k) s = gf4_add(s, gf4_mul(a[i][k], b[k][j]));
      r[i][j] = s;
    }
  return r;
}

inline Mat3 mat_transpose(const Mat3& m) {
  Mat3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = m[j][i];
  return r;
}

inline Gf4 mat_det(const Mat3& m) {
  // char 2: no signs
  Gf4 d = 0;
  d = gf4_add(d, gf4_mul(m[0][0], gf4_add(gf4_mul(m[1][1], m[2][2]), gf4_mul(m[1][2], m[2][1]))));
  d = gf4_add(d, gf4_mul(m[0][1], gf4_add(gf4_mul(m[1][0], m[2][2]), gf4_mul(m[1][2], m[2][0]))));
  d = gf4_add(d, gf4_mul(m[0][2], gf4_add(gf4_mul(m[1][0], m[2][1]), gf4_mul(m[1][1], m[2][0]))));
  return d;
}

inline Mat3 mat_inverse(const Mat3& m) {
  Gf4 det = mat_det(m);
  require(det != 0, "matrix is singular");
  auto minor2 = [&](int r0, int r1, int c0, int c1) {
    return gf4_add(gf4_mul(m[r0][c0], m[r1][c1]), gf4_mul(m[r0][c1], m[r1][c0]));
  };
  Mat3 adj{};  // adjugate transposed into place; char 2 kills cofactor signs
  adj[0][0] = minor2(1, 2, 1, 2);
  adj[0][1] = minor2(0, 2, 1, 2);
  adj[0][2] = minor2(0, 1, 1, 2);
  adj[1][0] = minor2(1, 2, 0, 2);
  adj[1][1] = minor2(0, 2, 0, 2);
  adj[1][2] = minor2(0, 1, 0, 2);
  adj[2][0] = minor2(1, 2, 0, 1);
  adj[2][1] = minor2(0, 2, 0, 1);
  adj[2][2] = minor2(0, 1, 0, 1);
  Gf4 dinv = gf4_inv(det);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) adj[i][j] = gf4_mul(dinv, adj[i][j]);
  return adj;
}

inline Mat3 mat_frob(const Mat3& m) {
  Mat3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = gf4_frob(m[i][j]);
  return r;
}

inline constexpr Mat3 mat_identity() {
  return Mat3{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
}

inline std::string vec_str(const Vec3& v) {
  return std::string("(") + gf4_char(v[0]) + "," + gf4_char(v[1]) + "," + gf4_char(v[2]) + ")";
}

}  // namespace octalab
