#include "cayley/octonion.hpp"

#include <stdexcept>

namespace cayley {

Quaternion Quaternion::unit(int idx) {
  Quaternion q;
  q.c[idx] = 1;
  return q;
}

bool Quaternion::is_zero() const {
  for (const auto& x : c) {
    if (!cayley::is_zero(x)) return false;
  }
  return true;
}

Quaternion Quaternion::operator+(const Quaternion& o) const {
  return {c[0] + o.c[0], c[1] + o.c[1], c[2] + o.c[2], c[3] + o.c[3]};
}

Quaternion Quaternion::operator-(const Quaternion& o) const {
  return {c[0] - o.c[0], c[1] - o.c[1], c[2] - o.c[2], c[3] - o.c[3]};
}

Quaternion Quaternion::operator*(const Quaternion& o) const {
  const Rational &w1 = c[0], &x1 = c[1], &y1 = c[2], &z1 = c[3];
  const Rational &w2 = o.c[0], &x2 = o.c[1], &y2 = o.c[2], &z2 = o.c[3];
  return {w1 * w2 - x1 * x2 - y1 * y2 - z1 * z2,
          w1 * x2 + x1 * w2 + y1 * z2 - z1 * y2,
          w1 * y2 - x1 * z2 + y1 * w2 + z1 * x2,
          w1 * z2 + x1 * y2 - y1 * x2 + z1 * w2};
}

Octonion Octonion::unit(int idx) {
  if (idx < 4) return {Quaternion::unit(idx), Quaternion()};
  return {Quaternion(), Quaternion::unit(idx - 4)};
}

Octonion Octonion::from_coords(const VecQ& v) {
  if (v.size() != 8) throw std::invalid_argument("octonion needs 8 coordinates");
  return {Quaternion(v(0), v(1), v(2), v(3)), Quaternion(v(4), v(5), v(6), v(7))};
}

VecQ Octonion::coords() const {
  VecQ v(8);
  for (int i = 0; i < 4; ++i) v(i) = a.c[i];
  for (int i = 0; i < 4; ++i) v(4 + i) = b.c[i];
  return v;
}

Octonion Octonion::operator*(const Octonion& o) const {
  const Quaternion &c_ = o.a, &d = o.b;
  return {a * c_ - d.conj() * b, d * a + b * c_.conj()};
}

const std::array<std::array<OctUnitProduct, 8>, 8>& octonion_table() {
  static const auto table = [] {
    std::array<std::array<OctUnitProduct, 8>, 8> t{};
    for (int i = 0; i < 8; ++i) {
      for (int j = 0; j < 8; ++j) {
        const Octonion p = Octonion::unit(i) * Octonion::unit(j);
        int idx = -1;
        int sign = 0;
        for (int k = 0; k < 8; ++k) {
          const int s = sgn(p.coord(k));
          if (s != 0) {
            if (idx >= 0) throw std::logic_error("octonion table entry not a signed unit");
            idx = k;
            sign = s;
          }
        }
        t[i][j] = {idx, sign};
      }
    }
    return t;
  }();
  return table;
}

MatQ octonion_pair_automorphism(const Quaternion& p, const Quaternion& q) {
  if (p.norm() != 1 || q.norm() != 1) throw std::invalid_argument("p, q must be unit quaternions");
  MatQ m(8, 8);
  for (int j = 0; j < 8; ++j) {
    const Octonion e = Octonion::unit(j);
    const Octonion img{p * e.a * p.conj(), q * e.b * p.conj()};
    const VecQ v = img.coords();
    for (int i = 0; i < 8; ++i) m(i, j) = v(i);
  }
  return m;
}

MatQ octonion_right_derivation(const Quaternion& v) {
  if (!cayley::is_zero(v.c[0])) throw std::invalid_argument("v must be imaginary");
  MatQ m = MatQ::Zero(8, 8);
  for (int j = 0; j < 8; ++j) {
    const Octonion e = Octonion::unit(j);
    const Octonion img{Quaternion(), v * e.b};
    const VecQ w = img.coords();
    for (int i = 0; i < 8; ++i) m(i, j) = w(i);
  }
  return m;
}

}  // namespace cayley
