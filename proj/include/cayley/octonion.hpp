#pragma once

#include <array>

#include "cayley/linalg.hpp"

namespace cayley {

/// Quaternion over Q, coordinates (1, i, j, k).
struct Quaternion {
  std::array<Rational, 4> c{Rational(0), Rational(0), Rational(0), Rational(0)};

  Quaternion() = default;
  Quaternion(Rational w, Rational x, Rational y, Rational z) : c{std::move(w), std::move(x), std::move(y), std::move(z)} {}

  static Quaternion unit(int idx);
  Quaternion conj() const { return {c[0], -c[1], -c[2], -c[3]}; }
  Rational norm() const { return c[0] * c[0] + c[1] * c[1] + c[2] * c[2] + c[3] * c[3]; }
  bool is_zero() const;
  bool operator==(const Quaternion& o) const { return c == o.c; }

  Quaternion operator+(const Quaternion& o) const;
  Quaternion operator-(const Quaternion& o) const;
  Quaternion operator*(const Quaternion& o) const;
  Quaternion operator-() const { return {-c[0], -c[1], -c[2], -c[3]}; }
  Quaternion scaled(const Rational& s) const { return {c[0] * s, c[1] * s, c[2] * s, c[3] * s}; }
};

/// Octonion as a Cayley-Dickson pair (a, b) of quaternions, with product
///   (a,b)(c,d) = (ac - conj(d) b, da + b conj(c)).
/// Coordinates flatten to 8 entries over the basis pairs
/// (1,0),(i,0),(j,0),(k,0),(0,1),(0,i),(0,j),(0,k).
struct Octonion {
  Quaternion a, b;

  Octonion() = default;
  Octonion(Quaternion a_, Quaternion b_) : a(std::move(a_)), b(std::move(b_)) {}

  static Octonion zero() { return {}; }
  static Octonion one() { return unit(0); }
  static Octonion unit(int idx);  // 0..7
  static Octonion from_coords(const VecQ& v);

  VecQ coords() const;
  const Rational& coord(int idx) const { return idx < 4 ? a.c[idx] : b.c[idx - 4]; }

  Octonion conj() const { return {a.conj(), -b}; }
  Rational real() const { return a.c[0]; }
  Rational norm() const { return a.norm() + b.norm(); }
  bool is_zero() const { return a.is_zero() && b.is_zero(); }
  bool operator==(const Octonion& o) const { return a == o.a && b == o.b; }

  Octonion operator+(const Octonion& o) const { return {a + o.a, b + o.b}; }
  Octonion operator-(const Octonion& o) const { return {a - o.a, b - o.b}; }
  Octonion operator-() const { return {-a, -b}; }
  Octonion operator*(const Octonion& o) const;
  Octonion scaled(const Rational& s) const { return {a.scaled(s), b.scaled(s)}; }
};

/// Multiplication table entry for basis units: e_i e_j = sign * e_index.
struct OctUnitProduct {
  int index;
  int sign;
};

/// The full 8x8 basis multiplication table (all structure constants +-1).
const std::array<std::array<OctUnitProduct, 8>, 8>& octonion_table();

/// The automorphism (x,y) -> (p x p^-1, q y p^-1) of the octonions, as an
/// 8x8 matrix on coordinates. p and q must be unit quaternions.
MatQ octonion_pair_automorphism(const Quaternion& p, const Quaternion& q);

/// Derivation (x,y) -> (0, v y) for an imaginary quaternion v, as an 8x8
/// matrix; annihilates the quaternion subalgebra span{1,i,j,k}.
MatQ octonion_right_derivation(const Quaternion& v);

}  // namespace cayley
