#pragma once

#include "cayley/octonion.hpp"

namespace cayley {

inline constexpr int kJordanDim = 27;

/// Hermitian 3x3 octonionic matrix
///   [ d1   x12  x13 ]
///   [ ~x12 d2   x23 ]
///   [ ~x13 ~x23 d3  ]
/// (~ is octonion conjugation). Coordinates flatten to 27 entries in the
/// order d1, d2, d3, x23, x13, x12 (8 octonion coordinates each).
struct JordanElement {
  std::array<Rational, 3> diag{Rational(0), Rational(0), Rational(0)};
  Octonion x23, x13, x12;

  static JordanElement zero() { return {}; }
  static JordanElement identity();
  static JordanElement diag_unit(int i);  // E_ii
  /// Basis element with octonion u in the (i,j) slot, i < j, conj(u) below.
  static JordanElement off_unit(int i, int j, const Octonion& u);
  static JordanElement basis_element(int idx);  // 0..26
  static JordanElement from_coords(const VecQ& v);

  VecQ coords() const;
  Rational trace() const { return diag[0] + diag[1] + diag[2]; }
  bool operator==(const JordanElement& o) const;

  JordanElement operator+(const JordanElement& o) const;
  JordanElement operator-(const JordanElement& o) const;
  JordanElement scaled(const Rational& s) const;
};

/// Jordan product x o y = (xy + yx)/2 with the octonionic matrix product.
JordanElement jordan_product(const JordanElement& x, const JordanElement& y);

/// tr(x o y); symmetric and positive definite.
Rational trace_form(const JordanElement& x, const JordanElement& y);

/// Gram matrix of the trace form in the 27-coordinate basis.
const MatQ& trace_form_gram();

/// Matrix of y -> x o y on the 27 coordinates.
MatQ jordan_left_mult(const JordanElement& x);

/// Lift a coordinate-linear octonion map to the 27-dim algebra: identity on
/// the diagonal for automorphisms, zero there for derivations, the given
/// 8x8 block on each off-diagonal slot.
MatQ lift_octonion_map(const MatQ& block8, bool is_derivation);

/// 27x27 matrix of x -> s x + x s^T for a real 3x3 matrix s; a derivation
/// of the Jordan product when s is skew.
MatQ real_conjugation_derivation(const MatQ& s3);

/// 27x27 matrix of x -> a x a^T for a real 3x3 matrix a; an automorphism
/// when a is orthogonal.
MatQ real_congruence_operator(const MatQ& a3);

}  // namespace cayley
