#pragma once

#include <vector>

#include "cayley/jordan.hpp"
#include "cayley/sampling.hpp"

namespace cayley {

/// A point of the Cayley plane: idempotent of trace 1 in the Jordan
/// algebra. Construction verifies both conditions exactly.
class CayleyPoint {
 public:
  explicit CayleyPoint(JordanElement v);

  const JordanElement& value() const { return v_; }
  VecQ coords() const { return v_.coords(); }

 private:
  JordanElement v_;
};

/// The basepoint diag(1,0,0).
const CayleyPoint& basepoint();

/// Tangent space of the variety {x o x = x, tr x = 1} at x, as the solutions
/// of xy + yx = y inside the trace-zero subspace. Always 16-dimensional;
/// anything else throws (the point would not be smooth on the variety).
Subspace tangent_space(const CayleyPoint& x);

/// Affine chart: the normalized projector of the column (a, b, 1).
/// chart_point(0, 0) is diag(0,0,1); the idempotency check runs on every
/// call and throws on failure.
CayleyPoint chart_point(const Octonion& a, const Octonion& b);

CayleyPoint random_chart_point(RationalSampler& sampler);

enum class SubmanifoldKind { RP2, CP2, HP2, CaP1, SphereK, VHFamily, CaP2 };

/// Sampled totally geodesic submanifold P: rational points, the linear
/// subspace W of the 27-dim algebra with P = V  intersect  W, per-point
/// tangents T_x P = T_x V intersect W, and the span of the points.
struct SubmanifoldSample {
  SubmanifoldKind kind;
  int sphere_k = 0;
  std::vector<CayleyPoint> points;
  Subspace defining;                // W
  std::vector<Subspace> tangents;   // T_x V intersect W, per point
  Subspace linear_span;             // span of the sampled points
};

/// Rational point samplers for the totally geodesic families. The sample
/// always starts at the natural basepoint of the family and carries enough
/// points to span the family's linear hull (span rank is verified).
/// For SphereK, 1 <= k <= 8.
SubmanifoldSample split_form_points(SubmanifoldKind kind, RationalSampler& sampler, int k = 0);

/// The explicit two-parameter family
///   [ a^2, -ab i, -ac j; ., b^2, -bc k; ., ., c^2 ],  a^2+b^2+c^2 = 1.
CayleyPoint vh_family_point(const Rational& a, const Rational& b, const Rational& c);

/// Point of the geodesic circle with off-diagonal direction u:
///   [ (1+c)/2, (s/2)u, 0; ., (1-c)/2, 0; ., ., 0 ],  c^2 + s^2 = 1, |u| = 1.
CayleyPoint circle_point(const Rational& c, const Rational& s, const Octonion& u);

}  // namespace cayley
