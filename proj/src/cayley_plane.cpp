#include "cayley/cayley_plane.hpp"

#include <stdexcept>

namespace cayley {

CayleyPoint::CayleyPoint(JordanElement v) : v_(std::move(v)) {
  if (v_.trace() != 1) throw std::invalid_argument("cayley point needs trace 1");
  if (!(jordan_product(v_, v_) == v_)) throw std::invalid_argument("cayley point needs x o x = x");
}

const CayleyPoint& basepoint() {
  static const CayleyPoint p{JordanElement::diag_unit(0)};
  return p;
}

Subspace tangent_space(const CayleyPoint& x) {
  // Rows of 2 L_x - I together with the trace functional.
  MatQ cond(kJordanDim + 1, kJordanDim);
  cond.topRows(kJordanDim) = 2 * jordan_left_mult(x.value()) - MatQ::Identity(kJordanDim, kJordanDim);
  for (int j = 0; j < kJordanDim; ++j) cond(kJordanDim, j) = (j < 3) ? 1 : 0;
  Subspace t = kernel(cond);
  if (t.dim() != 16) throw std::runtime_error("tangent_space: dimension is not 16 (invalid point)");
  return t;
}

namespace {

CayleyPoint projector_point(const Octonion& v0, const Octonion& v1, const Octonion& v2) {
  const Rational n = v0.norm() + v1.norm() + v2.norm();
  if (is_zero(n)) throw std::invalid_argument("projector_point: zero vector");
  const Rational inv = 1 / n;
  JordanElement e;
  e.diag = {v0.norm() * inv, v1.norm() * inv, v2.norm() * inv};
  e.x12 = (v0 * v1.conj()).scaled(inv);
  e.x13 = (v0 * v2.conj()).scaled(inv);
  e.x23 = (v1 * v2.conj()).scaled(inv);
  return CayleyPoint(e);
}

Octonion random_octonion(RationalSampler& s, int coords) {
  VecQ v = VecQ::Zero(8);
  for (int i = 0; i < coords; ++i) v(i) = s.next();
  return Octonion::from_coords(v);
}

}  // namespace

CayleyPoint chart_point(const Octonion& a, const Octonion& b) {
  return projector_point(a, b, Octonion::one());
}

CayleyPoint random_chart_point(RationalSampler& sampler) {
  return chart_point(random_octonion(sampler, 8), random_octonion(sampler, 8));
}

CayleyPoint vh_family_point(const Rational& a, const Rational& b, const Rational& c) {
  if (a * a + b * b + c * c != 1) throw std::invalid_argument("vh_family_point needs a^2+b^2+c^2 = 1");
  JordanElement e;
  e.diag = {a * a, b * b, c * c};
  e.x12 = Octonion::unit(1).scaled(-a * b);  // -ab i
  e.x13 = Octonion::unit(2).scaled(-a * c);  // -ac j
  e.x23 = Octonion::unit(3).scaled(-b * c);  // -bc k
  return CayleyPoint(e);
}

CayleyPoint circle_point(const Rational& c, const Rational& s, const Octonion& u) {
  if (c * c + s * s != 1) throw std::invalid_argument("circle_point needs c^2+s^2 = 1");
  if (u.norm() != 1) throw std::invalid_argument("circle_point needs a unit octonion");
  JordanElement e;
  e.diag = {(1 + c) / 2, (1 - c) / 2, Rational(0)};
  e.x12 = u.scaled(s / 2);
  return CayleyPoint(e);
}

namespace {

MatQ rows_of(const std::vector<JordanElement>& elems) {
  MatQ m(elems.size(), kJordanDim);
  for (size_t i = 0; i < elems.size(); ++i) m.row(i) = elems[i].coords().transpose();
  return m;
}

Subspace defining_subspace(SubmanifoldKind kind, int k) {
  std::vector<JordanElement> rows;
  const auto off_units = [&rows](int count) {
    for (int slot = 0; slot < 3; ++slot) {
      static const int is[3] = {1, 0, 0};
      static const int js[3] = {2, 2, 1};
      for (int m = 0; m < count; ++m) {
        rows.push_back(JordanElement::off_unit(is[slot], js[slot], Octonion::unit(m)));
      }
    }
  };
  switch (kind) {
    case SubmanifoldKind::RP2:
    case SubmanifoldKind::CP2:
    case SubmanifoldKind::HP2: {
      for (int i = 0; i < 3; ++i) rows.push_back(JordanElement::diag_unit(i));
      const int count = kind == SubmanifoldKind::RP2 ? 1 : (kind == SubmanifoldKind::CP2 ? 2 : 4);
      off_units(count);
      break;
    }
    case SubmanifoldKind::CaP1:
    case SubmanifoldKind::SphereK: {
      rows.push_back(JordanElement::diag_unit(0));
      rows.push_back(JordanElement::diag_unit(1));
      const int count = kind == SubmanifoldKind::CaP1 ? 8 : k;
      for (int m = 0; m < count; ++m) rows.push_back(JordanElement::off_unit(0, 1, Octonion::unit(m)));
      break;
    }
    case SubmanifoldKind::VHFamily: {
      for (int i = 0; i < 3; ++i) rows.push_back(JordanElement::diag_unit(i));
      rows.push_back(JordanElement::off_unit(0, 1, Octonion::unit(1)));
      rows.push_back(JordanElement::off_unit(0, 2, Octonion::unit(2)));
      rows.push_back(JordanElement::off_unit(1, 2, Octonion::unit(3)));
      break;
    }
    case SubmanifoldKind::CaP2:
      return Subspace::full(kJordanDim);
  }
  return Subspace::span_of_rows(rows_of(rows));
}

CayleyPoint sample_point(SubmanifoldKind kind, int k, RationalSampler& s) {
  switch (kind) {
    case SubmanifoldKind::RP2:
      return projector_point(random_octonion(s, 1), random_octonion(s, 1), random_octonion(s, 1));
    case SubmanifoldKind::CP2:
      return projector_point(random_octonion(s, 2), random_octonion(s, 2), random_octonion(s, 2));
    case SubmanifoldKind::HP2:
      return projector_point(random_octonion(s, 4), random_octonion(s, 4), random_octonion(s, 4));
    case SubmanifoldKind::CaP1:
      return projector_point(random_octonion(s, 8), random_octonion(s, 8), Octonion::zero());
    case SubmanifoldKind::SphereK: {
      const VecQ pt = rational_sphere_point(s.vector(k));  // (w, c) on S^k
      JordanElement e;
      e.diag = {(1 + pt(k)) / 2, (1 - pt(k)) / 2, Rational(0)};
      VecQ w = VecQ::Zero(8);
      for (int i = 0; i < k; ++i) w(i) = pt(i) / 2;
      e.x12 = Octonion::from_coords(w);
      return CayleyPoint(e);
    }
    case SubmanifoldKind::VHFamily: {
      const VecQ abc = rational_sphere_point(s.vector(2));
      return vh_family_point(abc(0), abc(1), abc(2));
    }
    case SubmanifoldKind::CaP2:
      return random_chart_point(s);
  }
  throw std::logic_error("unreachable");
}

int expected_span_dim(SubmanifoldKind kind, int k) {
  switch (kind) {
    case SubmanifoldKind::RP2:
      return 6;
    case SubmanifoldKind::CP2:
      return 9;
    case SubmanifoldKind::HP2:
      return 15;
    case SubmanifoldKind::CaP1:
      return 10;
    case SubmanifoldKind::SphereK:
      return k + 2;
    case SubmanifoldKind::VHFamily:
      return 6;
    case SubmanifoldKind::CaP2:
      return 27;
  }
  throw std::logic_error("unreachable");
}

}  // namespace

SubmanifoldSample split_form_points(SubmanifoldKind kind, RationalSampler& sampler, int k) {
  if (kind == SubmanifoldKind::SphereK && (k < 1 || k > 8)) {
    throw std::invalid_argument("SphereK needs 1 <= k <= 8");
  }
  SubmanifoldSample out;
  out.kind = kind;
  out.sphere_k = kind == SubmanifoldKind::CaP1 ? 8 : k;
  out.defining = defining_subspace(kind, k);

  // Natural seed points first: the basepoint, and the antipode for the
  // block families.
  out.points.push_back(kind == SubmanifoldKind::CaP2 ? chart_point(Octonion::zero(), Octonion::zero())
                                                     : CayleyPoint(JordanElement::diag_unit(0)));
  if (kind == SubmanifoldKind::SphereK || kind == SubmanifoldKind::CaP1) {
    out.points.push_back(CayleyPoint(JordanElement::diag_unit(1)));
  }

  const int span_target = expected_span_dim(kind, k);
  const int want = span_target + 8;
  for (int round = 0; round < 4; ++round) {
    while (static_cast<int>(out.points.size()) < want + round * 8) {
      out.points.push_back(sample_point(kind, k, sampler));
    }
    MatQ flat(out.points.size(), kJordanDim);
    for (size_t i = 0; i < out.points.size(); ++i) flat.row(i) = out.points[i].coords().transpose();
    out.linear_span = Subspace::span_of_rows(flat);
    if (out.linear_span.dim() == span_target) break;
  }
  if (out.linear_span.dim() != span_target) {
    throw std::runtime_error("split_form_points: sampled span is rank deficient");
  }
  if (!out.defining.contains(out.linear_span)) {
    throw std::logic_error("split_form_points: points left their defining subspace");
  }

  out.tangents.reserve(out.points.size());
  for (const CayleyPoint& x : out.points) {
    out.tangents.push_back(tangent_space(x).intersect(out.defining));
  }
  return out;
}

}  // namespace cayley
