#include "cayley/jordan.hpp"

#include <functional>
#include <stdexcept>

namespace cayley {

JordanElement JordanElement::identity() {
  JordanElement e;
  e.diag = {Rational(1), Rational(1), Rational(1)};
  return e;
}

JordanElement JordanElement::diag_unit(int i) {
  JordanElement e;
  e.diag[i] = 1;
  return e;
}

JordanElement JordanElement::off_unit(int i, int j, const Octonion& u) {
  JordanElement e;
  if (i == 1 && j == 2) {
    e.x23 = u;
  } else if (i == 0 && j == 2) {
    e.x13 = u;
  } else if (i == 0 && j == 1) {
    e.x12 = u;
  } else {
    throw std::invalid_argument("off_unit wants i < j in {0,1,2}");
  }
  return e;
}

JordanElement JordanElement::basis_element(int idx) {
  if (idx < 3) return diag_unit(idx);
  const int slot = (idx - 3) / 8;
  const int unit = (idx - 3) % 8;
  static const int is[3] = {1, 0, 0};
  static const int js[3] = {2, 2, 1};
  return off_unit(is[slot], js[slot], Octonion::unit(unit));
}

JordanElement JordanElement::from_coords(const VecQ& v) {
  if (v.size() != kJordanDim) throw std::invalid_argument("jordan element needs 27 coordinates");
  JordanElement e;
  for (int i = 0; i < 3; ++i) e.diag[i] = v(i);
  e.x23 = Octonion::from_coords(v.segment(3, 8));
  e.x13 = Octonion::from_coords(v.segment(11, 8));
  e.x12 = Octonion::from_coords(v.segment(19, 8));
  return e;
}

VecQ JordanElement::coords() const {
  VecQ v(kJordanDim);
  for (int i = 0; i < 3; ++i) v(i) = diag[i];
  v.segment(3, 8) = x23.coords();
  v.segment(11, 8) = x13.coords();
  v.segment(19, 8) = x12.coords();
  return v;
}

bool JordanElement::operator==(const JordanElement& o) const {
  return diag == o.diag && x23 == o.x23 && x13 == o.x13 && x12 == o.x12;
}

JordanElement JordanElement::operator+(const JordanElement& o) const {
  JordanElement e;
  for (int i = 0; i < 3; ++i) e.diag[i] = diag[i] + o.diag[i];
  e.x23 = x23 + o.x23;
  e.x13 = x13 + o.x13;
  e.x12 = x12 + o.x12;
  return e;
}

JordanElement JordanElement::operator-(const JordanElement& o) const {
  return *this + o.scaled(-1);
}

JordanElement JordanElement::scaled(const Rational& s) const {
  JordanElement e;
  for (int i = 0; i < 3; ++i) e.diag[i] = diag[i] * s;
  e.x23 = x23.scaled(s);
  e.x13 = x13.scaled(s);
  e.x12 = x12.scaled(s);
  return e;
}

namespace {

using OctMat3 = std::array<std::array<Octonion, 3>, 3>;

OctMat3 to_matrix(const JordanElement& x) {
  OctMat3 m;
  for (int i = 0; i < 3; ++i) m[i][i] = Octonion::one().scaled(x.diag[i]);
  m[0][1] = x.x12;
  m[1][0] = x.x12.conj();
  m[0][2] = x.x13;
  m[2][0] = x.x13.conj();
  m[1][2] = x.x23;
  m[2][1] = x.x23.conj();
  return m;
}

OctMat3 matmul(const OctMat3& x, const OctMat3& y) {
  OctMat3 z;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      Octonion acc;
      for (int k = 0; k < 3; ++k) acc = acc + x[i][k] * y[k][j];
      z[i][j] = acc;
    }
  }
  return z;
}

JordanElement from_matrix(const OctMat3& s, const char* what) {
  for (int i = 0; i < 3; ++i) {
    if (!(s[i][i] - Octonion::one().scaled(s[i][i].real())).is_zero()) {
      throw std::logic_error(std::string(what) + ": non-real diagonal");
    }
  }
  if (!(s[1][0] - s[0][1].conj()).is_zero() || !(s[2][0] - s[0][2].conj()).is_zero() ||
      !(s[2][1] - s[1][2].conj()).is_zero()) {
    throw std::logic_error(std::string(what) + ": non-Hermitian result");
  }
  JordanElement out;
  for (int i = 0; i < 3; ++i) out.diag[i] = s[i][i].real();
  out.x23 = s[1][2];
  out.x13 = s[0][2];
  out.x12 = s[0][1];
  return out;
}

OctMat3 real_matrix(const MatQ& a3) {
  OctMat3 m;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) m[i][j] = Octonion::one().scaled(a3(i, j));
  }
  return m;
}

MatQ operator_on_basis(const std::function<JordanElement(const JordanElement&)>& f) {
  MatQ m(kJordanDim, kJordanDim);
  for (int j = 0; j < kJordanDim; ++j) {
    const VecQ col = f(JordanElement::basis_element(j)).coords();
    for (int i = 0; i < kJordanDim; ++i) m(i, j) = col(i);
  }
  return m;
}

}  // namespace

JordanElement jordan_product(const JordanElement& x, const JordanElement& y) {
  const OctMat3 mx = to_matrix(x);
  const OctMat3 my = to_matrix(y);
  const OctMat3 xy = matmul(mx, my);
  const OctMat3 yx = matmul(my, mx);
  const Rational half = rat(1, 2);

  OctMat3 s;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) s[i][j] = (xy[i][j] + yx[i][j]).scaled(half);
  }
  // The symmetrized product of Hermitian matrices is Hermitian with real
  // diagonal; anything else means corrupted inputs.
  return from_matrix(s, "jordan_product");
}

Rational trace_form(const JordanElement& x, const JordanElement& y) {
  Rational acc = x.diag[0] * y.diag[0] + x.diag[1] * y.diag[1] + x.diag[2] * y.diag[2];
  for (int k = 0; k < 8; ++k) {
    acc += 2 * (x.x23.coord(k) * y.x23.coord(k) + x.x13.coord(k) * y.x13.coord(k) +
                x.x12.coord(k) * y.x12.coord(k));
  }
  return acc;
}

const MatQ& trace_form_gram() {
  static const MatQ gram = [] {
    MatQ g = MatQ::Zero(kJordanDim, kJordanDim);
    for (int i = 0; i < 3; ++i) g(i, i) = 1;
    for (int i = 3; i < kJordanDim; ++i) g(i, i) = 2;
    return g;
  }();
  return gram;
}

MatQ jordan_left_mult(const JordanElement& x) {
  MatQ m(kJordanDim, kJordanDim);
  for (int j = 0; j < kJordanDim; ++j) {
    const VecQ col = jordan_product(x, JordanElement::basis_element(j)).coords();
    for (int i = 0; i < kJordanDim; ++i) m(i, j) = col(i);
  }
  return m;
}

MatQ lift_octonion_map(const MatQ& block8, bool is_derivation) {
  MatQ m = MatQ::Zero(kJordanDim, kJordanDim);
  if (!is_derivation) {
    for (int i = 0; i < 3; ++i) m(i, i) = 1;
  }
  for (int slot = 0; slot < 3; ++slot) {
    m.block(3 + 8 * slot, 3 + 8 * slot, 8, 8) = block8;
  }
  return m;
}

MatQ real_conjugation_derivation(const MatQ& s3) {
  const OctMat3 s = real_matrix(s3);
  const OctMat3 st = real_matrix(MatQ(s3.transpose()));
  return operator_on_basis([&](const JordanElement& e) {
    const OctMat3 me = to_matrix(e);
    const OctMat3 l = matmul(s, me);
    const OctMat3 r = matmul(me, st);
    OctMat3 sum;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) sum[i][j] = l[i][j] + r[i][j];
    }
    return from_matrix(sum, "real_conjugation_derivation");
  });
}

MatQ real_congruence_operator(const MatQ& a3) {
  const OctMat3 a = real_matrix(a3);
  const OctMat3 at = real_matrix(MatQ(a3.transpose()));
  return operator_on_basis([&](const JordanElement& e) {
    return from_matrix(matmul(matmul(a, to_matrix(e)), at), "real_congruence_operator");
  });
}

}  // namespace cayley
