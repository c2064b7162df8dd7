#include "cayley/automorphism.hpp"

#include <stdexcept>

namespace cayley {

namespace {

bool is_orthogonal3(const MatQ& a) {
  if (a.rows() != 3 || a.cols() != 3) return false;
  const MatQ g = a.transpose() * a;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (g(i, j) != Rational(i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

void verify_automorphism(const MatQ& op) {
  const MatQ& g = trace_form_gram();
  const MatQ pres = op.transpose() * g * op;
  for (int i = 0; i < kJordanDim; ++i) {
    for (int j = 0; j < kJordanDim; ++j) {
      if (pres(i, j) != g(i, j)) throw std::runtime_error("automorphism does not preserve the trace form");
    }
  }
  for (int i = 0; i < kJordanDim; ++i) {
    const JordanElement fi = JordanElement::from_coords(op.col(i));
    for (int j = i; j < kJordanDim; ++j) {
      const JordanElement fj = JordanElement::from_coords(op.col(j));
      const VecQ lhs = op * jordan_product(JordanElement::basis_element(i), JordanElement::basis_element(j)).coords();
      if (lhs != jordan_product(fi, fj).coords()) {
        throw std::runtime_error("automorphism is not multiplicative");
      }
    }
  }
  // Spot check on the variety: images of a few idempotents are idempotent.
  const VecQ img = op * JordanElement::diag_unit(0).coords();
  CayleyPoint(JordanElement::from_coords(img));
}

}  // namespace

AutElement::AutElement(const MatQ& a3, const Quaternion& p, const Quaternion& q) {
  if (!is_orthogonal3(a3)) throw std::invalid_argument("rotation part must be orthogonal");
  const MatQ alpha = octonion_pair_automorphism(p, q);  // rejects non-unit p, q
  op_ = real_congruence_operator(a3) * lift_octonion_map(alpha, false);
  verify_automorphism(op_);
}

const AutElement& AutElement::identity() {
  static const AutElement id{MatQ::Identity(kJordanDim, kJordanDim), Unchecked{}};
  return id;
}

bool AutElement::fixes(const CayleyPoint& x) const {
  const VecQ img = op_ * x.coords();
  return img == x.coords();
}

const AutElement& h1() {
  static const AutElement e = [] {
    MatQ a = MatQ::Identity(3, 3);
    a(0, 0) = -1;
    a(1, 1) = -1;
    return AutElement(a, Quaternion::unit(1), Quaternion::unit(1));
  }();
  return e;
}

const AutElement& h2() {
  static const AutElement e = [] {
    MatQ a = MatQ::Identity(3, 3);
    a(0, 0) = -1;
    a(2, 2) = -1;
    return AutElement(a, Quaternion::unit(2), Quaternion::unit(2));
  }();
  return e;
}

}  // namespace cayley
